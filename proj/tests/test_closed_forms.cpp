#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "loz/closed_forms.hpp"

using namespace loz;

TEST_CASE("box product") {
  CHECK(macmahon_count(HexagonSpec(1, 1, 1)) == 2);
  CHECK(macmahon_count(HexagonSpec(2, 2, 2)) == 20);
  CHECK(macmahon_count(HexagonSpec(3, 3, 2)) == 175);
  CHECK(macmahon_count(HexagonSpec(3, 3, 4)) == 4116);
  CHECK(macmahon_count(HexagonSpec(4, 4, 1)) == 70);
  CHECK(macmahon_count(HexagonSpec(0, 5, 5)) == 1);
  CHECK(macmahon_count(HexagonSpec(1, 1, 2)) == 3);
}

TEST_CASE("box product is symmetric in the sides") {
  CHECK(macmahon_count(HexagonSpec(2, 3, 4)) == macmahon_count(HexagonSpec(4, 2, 3)));
  CHECK(macmahon_count(HexagonSpec(2, 3, 4)) == macmahon_count(HexagonSpec(3, 4, 2)));
}

TEST_CASE("central proportion") {
  CHECK(centered_ratio(1, 1) == make_rational(1, 3));
  CHECK(centered_ratio(2, 1) == make_rational(1, 5));
  CHECK(centered_ratio(1, 2) == make_rational(17, 35));
}

TEST_CASE("one third on the diagonal") {
  for (long n = 1; n <= 50; ++n) CHECK(centered_ratio(n, n) == make_rational(1, 3));
}

TEST_CASE("single-row proportion") {
  for (long m = 0; m <= 50; ++m) CHECK(centered_ratio(m, 1) == make_rational(1, 2 * m + 1));
}

TEST_CASE("centered counts") {
  CHECK(centered_count(CenteredProblem(2, 1, Parity::kOddSides)) == 85);
  CHECK(centered_count(CenteredProblem(2, 2, Parity::kOddSides)) == 1372);
  CHECK(centered_count(CenteredProblem(2, 1, Parity::kEvenSides)) == 34);
  CHECK(centered_count(CenteredProblem(1, 1, Parity::kOddSides)) == 1);
}

TEST_CASE("centered counts are integral on a wide grid") {
  for (long n = 1; n <= 12; ++n) {
    for (long m = 0; m <= 12; ++m) {
      CHECK_NOTHROW(centered_count(CenteredProblem(n, m, Parity::kOddSides)));
      if (m >= 1)
        CHECK_NOTHROW(centered_count(CenteredProblem(n, m, Parity::kEvenSides)));
    }
  }
}

TEST_CASE("problem validation") {
  CHECK_THROWS_AS(CenteredProblem(0, 1, Parity::kOddSides), domain_error);
  CHECK_THROWS_AS(CenteredProblem(1, 0, Parity::kEvenSides), domain_error);
  CHECK_THROWS_AS(HexagonSpec(0, 0, 0), domain_error);
  CHECK_THROWS_AS(HexagonSpec(-1, 2, 2), domain_error);
}

TEST_CASE("alternating sum values") {
  CHECK(diagonal_sum(1) == 1);
  CHECK(diagonal_sum(2) == make_rational(35, 3));
  CHECK(diagonal_sum(3) == make_rational(1001, 5));
}

TEST_CASE("alternating sum equals its product form") {
  for (long n = 1; n <= 20; ++n) {
    VerifyOutcome out = diagonal_sum_product_check(n);
    CHECK(out.ok);
  }
}

TEST_CASE("telescoping certificate") {
  for (long n : {1L, 2L, 5L, 30L}) {
    VerifyOutcome out = wz_certificate_check(n);
    INFO(out.detail);
    CHECK(out.ok);
  }
}

TEST_CASE("binomial determinant closed form") {
  CHECK(binomial_det_closed_form(2, 1) == 5);
  CHECK(binomial_det_closed_form(2, 0) == 1);
  CHECK(binomial_det_closed_form(1, 3) == 4);
  CHECK(binomial_det_closed_form(0, 7) == 1);
}

TEST_CASE("weighted determinant closed form") {
  CHECK(weighted_det_closed_form(1, 0) == 1);
  CHECK(weighted_det_closed_form(1, 5) == 1);
  CHECK(weighted_det_closed_form(2, 1) == make_rational(17, 4));
}

TEST_CASE("limit of the proportion") {
  CHECK(asymptotic_limit(0.0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(asymptotic_limit(1.0) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(asymptotic_limit(2.0) ==
        doctest::Approx(2.0 / M_PI * std::asin(1.0 / 3.0)).epsilon(1e-9));
}

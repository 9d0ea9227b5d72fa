#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "loz/closed_forms.hpp"
#include "loz/determinants.hpp"
#include "loz/matrix.hpp"

using namespace loz;

namespace {

std::uint64_t splitmix(std::uint64_t& s) {
  std::uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

long rnd(std::uint64_t& s, long lo, long hi) {
  return lo + static_cast<long>(splitmix(s) % static_cast<std::uint64_t>(hi - lo + 1));
}

ExactRational cofactor_det(const RationalMatrix& m, std::vector<std::size_t> cols,
                           std::size_t row) {
  if (cols.empty()) return ExactRational(1);
  ExactRational det(0);
  for (std::size_t p = 0; p < cols.size(); ++p) {
    std::vector<std::size_t> rest = cols;
    rest.erase(rest.begin() + p);
    ExactRational term = m.at(row, cols[p]) * cofactor_det(m, rest, row + 1);
    if (p % 2 == 1) term = -term;
    det += term;
  }
  return det;
}

ExactRational cofactor_det(const RationalMatrix& m) {
  std::vector<std::size_t> cols(m.cols());
  for (std::size_t j = 0; j < cols.size(); ++j) cols[j] = j;
  return cofactor_det(m, cols, 0);
}

RationalMatrix random_matrix(std::uint64_t& s, std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m.at(i, j) = make_rational(rnd(s, -9, 9), rnd(s, 1, 5));
  return m;
}

}  // namespace

TEST_CASE("determinant basics") {
  RationalMatrix one(1, 1);
  one.at(0, 0) = make_rational(7, 2);
  CHECK(exact_determinant(one) == make_rational(7, 2));

  RationalMatrix two(2, 2);
  two.at(0, 0) = ExactRational(3);
  two.at(0, 1) = ExactRational(1);
  two.at(1, 0) = ExactRational(1);
  two.at(1, 1) = ExactRational(2);
  CHECK(exact_determinant(two) == 5);

  CHECK(exact_determinant(RationalMatrix(0, 0)) == 1);
  CHECK_THROWS_AS(exact_determinant(RationalMatrix(2, 3)), domain_error);

  RationalMatrix dup(3, 3);
  for (std::size_t j = 0; j < 3; ++j) {
    dup.at(0, j) = ExactRational(static_cast<long>(j) + 1);
    dup.at(2, j) = dup.at(0, j);
    dup.at(1, j) = make_rational(static_cast<long>(j) - 2, 3);
  }
  CHECK(exact_determinant(dup) == 0);
}

TEST_CASE("elimination agrees with cofactor expansion") {
  std::uint64_t s = 11;
  for (int t = 0; t < 50; ++t) {
    RationalMatrix m = random_matrix(s, static_cast<std::size_t>(rnd(s, 1, 5)));
    ExactRational expected = cofactor_det(m);
    CHECK(exact_determinant(m) == expected);
    CHECK(exact_determinant_serial(m) == expected);
  }
}

TEST_CASE("parallel and serial elimination match on larger matrices") {
  std::uint64_t s = 13;
  for (std::size_t n : {8u, 12u, 16u}) {
    RationalMatrix m = random_matrix(s, n);
    CHECK(exact_determinant(m) == exact_determinant_serial(m));
  }
}

TEST_CASE("upper-half matrices") {
  CHECK(exact_determinant(upper_half_matrix(1, 4)) == 1);
  RationalMatrix m21 = upper_half_matrix(2, 1);
  CHECK(m21.at(0, 0) == 3);
  CHECK(m21.at(0, 1) == 1);
  CHECK(m21.at(1, 0) == 1);
  CHECK(m21.at(1, 1) == 2);
  CHECK(exact_determinant(m21) == 5);

  RationalMatrix e11 = upper_half_matrix_even(1, 1);
  CHECK(e11.at(0, 0) == 1);
  CHECK(e11.at(0, 1) == 0);
  CHECK(e11.at(1, 0) == 1);
  CHECK(e11.at(1, 1) == 1);
  CHECK(exact_determinant(e11) == 1);
  CHECK(exact_determinant(upper_half_matrix_even(1, 2)) ==
        ExactRational(binomial_det_closed_form(2, 1)));
}

TEST_CASE("upper-half determinants match the product form") {
  for (long n = 1; n <= 8; ++n)
    for (long m = 0; m <= 8; ++m)
      CHECK(exact_determinant(upper_half_matrix(n, m)) ==
            ExactRational(binomial_det_closed_form(2 * n - 2, m)));
  for (long n = 1; n <= 7; ++n)
    for (long m = 1; m <= 8; ++m)
      CHECK(exact_determinant(upper_half_matrix_even(n, m)) ==
            ExactRational(binomial_det_closed_form(2 * n, m - 1)));
}

TEST_CASE("lower-half matrix") {
  RationalMatrix m13 = lower_half_matrix(1, 3);
  CHECK(m13.rows() == 1);
  CHECK(m13.at(0, 0) == 1);
  CHECK(exact_determinant(lower_half_matrix(2, 1)) == make_rational(17, 4));
}

TEST_CASE("lower-half determinants match the closed form") {
  for (long n = 1; n <= 6; ++n)
    for (long m = 0; m <= 8; ++m)
      CHECK(exact_determinant(lower_half_matrix(n, m)) == weighted_det_closed_form(n, m));
}

TEST_CASE("row factors link the two lower matrices") {
  for (long n = 1; n <= 6; ++n)
    for (long m = 0; m <= 8; ++m)
      CHECK(exact_determinant(lower_half_matrix(n, m)) ==
            lower_row_factor_product(n, m) *
                exact_determinant(reduced_lower_matrix(n, ExactRational(m))));
}

TEST_CASE("reduced lower matrix at small points") {
  RationalMatrix d1 = reduced_lower_matrix(1, make_rational(9, 4));
  CHECK(d1.at(0, 0) == 1);
  CHECK(exact_determinant(reduced_lower_matrix(2, ExactRational(1))) == 3060);
}

TEST_CASE("factored determinant identity") {
  FactoredDetInput trivial;
  trivial.x = {ExactRational(4)};
  CHECK(factored_det_check(trivial).ok);

  FactoredDetInput hand;
  hand.x = {ExactRational(1), ExactRational(2)};
  hand.a = {ExactRational(3)};
  hand.b = {ExactRational(5)};
  VerifyOutcome out = factored_det_check(hand);
  CHECK(out.ok);
  CHECK(out.lhs == "-2");

  std::uint64_t s = 17;
  for (int t = 0; t < 100; ++t) {
    FactoredDetInput in;
    long N = rnd(s, 1, 6);
    for (long i = 0; i < N; ++i) in.x.push_back(ExactRational(rnd(s, -10, 10)));
    for (long i = 1; i < N; ++i) {
      in.a.push_back(ExactRational(rnd(s, -10, 10)));
      in.b.push_back(ExactRational(rnd(s, -10, 10)));
    }
    CHECK(factored_det_check(in).ok);
  }
}

TEST_CASE("reduced determinant symmetry and closed form") {
  std::uint64_t s = 19;
  for (long n = 1; n <= 4; ++n) {
    for (int t = 0; t < 8; ++t) {
      ExactRational m = make_rational(rnd(s, -10, 10), rnd(s, 1, 3));
      CHECK(reduced_det_symmetry_check(n, m).ok);
      CHECK(reduced_det_closed_form_check(n, m).ok);
    }
  }
  CHECK(reduced_det_closed_form_check(2, ExactRational(1)).lhs == "3060");
  for (long m = -3; m <= 3; ++m)
    CHECK(reduced_det_closed_form_check(3, ExactRational(m)).ok);
  CHECK(reduced_det_closed_form_check(3, make_rational(1, 2)).ok);
}

TEST_CASE("alternating sum at shifted negative points") {
  VerifyOutcome base = negative_shift_sum_check(1, 0);
  CHECK(base.ok);
  CHECK(base.lhs == "1");
  for (long n = 1; n <= 12; ++n)
    for (long e = 0; e <= n - 1; ++e) CHECK(negative_shift_sum_check(n, e).ok);
  CHECK_THROWS_AS(negative_shift_sum_check(3, 3), domain_error);
}

TEST_CASE("reduced determinant is polynomial in the shift of bounded degree") {
  // (d+1)-st finite difference of a degree-<=d polynomial vanishes.
  for (long n = 1; n <= 4; ++n) {
    long d = (2 * n + 1) * (n - 1);
    std::vector<ExactRational> vals;
    for (long m = 0; m <= d + 2; ++m)
      vals.push_back(exact_determinant(reduced_lower_matrix(n, ExactRational(m))));
    for (long step = 0; step <= d; ++step)
      for (std::size_t i = 0; i + 1 < vals.size(); ++i) vals[i] = vals[i + 1] - vals[i];
    CHECK(vals[0] == 0);
    CHECK(vals[1] == 0);
  }
}

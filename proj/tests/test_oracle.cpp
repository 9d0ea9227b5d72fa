#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "loz/closed_forms.hpp"
#include "loz/determinants.hpp"
#include "loz/lattice.hpp"
#include "loz/matrix.hpp"
#include "loz/oracle.hpp"

using namespace loz;

TEST_CASE("plain counts") {
  CHECK(count_tilings(Region{}) == 1);
  CHECK(count_tilings(build_hexagon(HexagonSpec(1, 1, 1))) == 2);
  CHECK(count_tilings(build_hexagon(HexagonSpec(2, 2, 2))) == 20);
  CHECK(count_tilings(build_hexagon(HexagonSpec(3, 3, 2))) == 175);
}

TEST_CASE("counts match the box product") {
  for (long a = 1; a <= 3; ++a)
    for (long b = 1; b <= 3; ++b)
      for (long c = 1; c <= 3; ++c)
        CHECK(count_tilings(build_hexagon(HexagonSpec(a, b, c))) ==
              macmahon_count(HexagonSpec(a, b, c)));
  for (HexagonSpec h : {HexagonSpec(4, 4, 1), HexagonSpec(4, 4, 2), HexagonSpec(5, 5, 1)})
    CHECK(count_tilings(build_hexagon(h)) == macmahon_count(h));
}

TEST_CASE("serial reference agrees with the parallel kernel") {
  for (HexagonSpec h : {HexagonSpec(2, 3, 4), HexagonSpec(3, 3, 3), HexagonSpec(4, 4, 2)}) {
    Region r = build_hexagon(h);
    CHECK(count_tilings(r) == count_tilings_serial(r));
  }
  Region lower = split_at_axis(CenteredProblem(2, 2, Parity::kOddSides)).lower;
  OracleBudget budget;
  CHECK(count_tilings(lower, budget) == count_tilings_serial(lower, budget));
}

TEST_CASE("node budget raises a resource error") {
  OracleBudget tiny;
  tiny.max_nodes = 10;
  CHECK_THROWS_AS(count_tilings(build_hexagon(HexagonSpec(3, 3, 3)), tiny),
                  resource_error);
  CHECK_THROWS_AS(count_tilings_serial(build_hexagon(HexagonSpec(3, 3, 3)), tiny),
                  resource_error);
}

TEST_CASE("counts through a fixed lozenge") {
  HexagonSpec h332(3, 3, 2);
  CHECK(count_tilings_containing(build_hexagon(h332), central_lozenge(h332)) == 85);
  HexagonSpec h441(4, 4, 1);
  CHECK(count_tilings_containing(build_hexagon(h441), central_lozenge(h441)) == 34);
  HexagonSpec h112(1, 1, 2);
  CHECK(count_tilings_containing(build_hexagon(h112), central_lozenge(h112)) == 1);
  CHECK_THROWS_AS(count_tilings_containing(build_hexagon(HexagonSpec(1, 1, 1)),
                                           central_lozenge(h332)),
                  domain_error);
}

TEST_CASE("oracle agrees with the centered-count formulas") {
  const std::pair<long, long> odd[] = {{1, 0}, {1, 1}, {1, 2}, {1, 3}, {2, 1}, {2, 2}};
  for (auto [n, m] : odd) {
    CenteredProblem p(n, m, Parity::kOddSides);
    HexagonSpec h = p.hexagon();
    CHECK(count_tilings_containing(build_hexagon(h), central_lozenge(h)) ==
          centered_count(p));
  }
  const std::pair<long, long> even[] = {{1, 1}, {1, 2}, {1, 3}, {2, 1}};
  for (auto [n, m] : even) {
    CenteredProblem p(n, m, Parity::kEvenSides);
    HexagonSpec h = p.hexagon();
    CHECK(count_tilings_containing(build_hexagon(h), central_lozenge(h)) ==
          centered_count(p));
  }
}

TEST_CASE("weighted counts") {
  Region plain = build_hexagon(HexagonSpec(2, 2, 2));
  CHECK(weighted_count(plain) == ExactRational(count_tilings(plain)));

  Region lower21 = split_at_axis(CenteredProblem(2, 1, Parity::kOddSides)).lower;
  CHECK(weighted_count(lower21) == make_rational(17, 4));

  Region lower12 = split_at_axis(CenteredProblem(1, 2, Parity::kOddSides)).lower;
  CHECK(weighted_count(lower12) == 1);
}

TEST_CASE("factorization identity") {
  for (Parity par : {Parity::kOddSides, Parity::kEvenSides}) {
    for (long n = 1; n <= 2; ++n) {
      for (long m = par == Parity::kOddSides ? 0 : 1; m <= 2; ++m) {
        CenteredProblem p(n, m, par);
        AxisSplit split = split_at_axis(p);
        ExactRational lhs(count_tilings(build_punctured(p.hexagon())));
        CHECK(lhs == pow2(split.k) * ExactRational(count_tilings(split.upper)) *
                         weighted_count(split.lower));
      }
    }
  }
}

TEST_CASE("single path counts are binomials") {
  PathFamilySpec s;
  s.starts.push_back({2, 3});
  s.ends.push_back({4, 1});
  CHECK(count_path_families(s) == 6);
  s.half_weight_start_rows.push_back(0);
  // of the 6 paths, 3 start with a horizontal step
  CHECK(count_path_families(s) == make_rational(9, 2));

  PathFamilySpec impossible;
  impossible.starts.push_back({4, 1});
  impossible.ends.push_back({2, 3});
  CHECK(count_path_families(impossible) == 0);
}

TEST_CASE("path families match the determinants") {
  for (long n = 1; n <= 2; ++n) {
    for (long m = 0; m <= 3; ++m) {
      CHECK(count_path_families(upper_half_path_spec(n, m)) ==
            exact_determinant(upper_half_matrix(n, m)));
      CHECK(count_path_families(lower_half_path_spec(n, m)) ==
            exact_determinant(lower_half_matrix(n, m)));
    }
  }
}

TEST_CASE("path tuple budget") {
  PathFamilySpec big;
  for (long i = 0; i < 4; ++i) {
    big.starts.push_back({0, 20 + i});
    big.ends.push_back({20, i});
  }
  CHECK_THROWS_AS(count_path_families(big), resource_error);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "loz/exact.hpp"
#include "loz/verify.hpp"

using namespace loz;

TEST_CASE("small suite runs pass") {
  SuiteOptions opt;
  opt.max_n = 6;
  opt.max_m = 6;
  for (const char* name : {"theorems", "determinants", "wz", "factorization"}) {
    VerificationReport r = run_suite(name, opt);
    INFO(name);
    CHECK(r.failed == 0);
    CHECK(r.passed > 0);
    CHECK(r.suite == name);
  }
}

TEST_CASE("identity suite passes and is seed-stable") {
  SuiteOptions opt;
  opt.max_n = 3;
  opt.max_m = 3;
  opt.seed = 42;
  VerificationReport a = run_suite("identities", opt);
  CHECK(a.failed == 0);
  CHECK(a.skipped == 0);
  VerificationReport b = run_suite("identities", opt);
  CHECK(report_to_json(a) == report_to_json(b));
}

TEST_CASE("cases are sorted and totals are consistent") {
  SuiteOptions opt;
  opt.max_n = 2;
  opt.max_m = 2;
  VerificationReport r = run_suite("factorization", opt);
  CHECK(std::is_sorted(r.cases.begin(), r.cases.end(),
                       [](const VerificationCase& x, const VerificationCase& y) {
                         return x.id < y.id;
                       }));
  CHECK(r.passed + r.failed + r.skipped == static_cast<long>(r.cases.size()));
}

TEST_CASE("unknown suite is rejected") {
  CHECK_THROWS_AS(run_suite("nonsense"), domain_error);
}

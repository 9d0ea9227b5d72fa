#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace loz {

struct VerificationCase {
  std::string id;
  std::string status;  // "pass" | "fail" | "skipped"
  std::string lhs;
  std::string rhs;
};

struct VerificationReport {
  std::string suite;
  std::vector<VerificationCase> cases;  // sorted by id
  long passed = 0;
  long failed = 0;
  long skipped = 0;
  double wall_ms = 0.0;
};

// Grid bounds and seed for a suite run. max_n / max_m cap each check's
// default grid (they can shrink a grid, never grow it past the defaults).
struct SuiteOptions {
  long max_n = -1;  // -1: use each check's default
  long max_m = -1;
  std::uint64_t seed = 0;
};

// Suites: "theorems", "determinants", "identities", "wz", "factorization",
// or "all". Unknown names throw domain_error. Randomized checks draw their
// inputs deterministically from the seed.
VerificationReport run_suite(const std::string& name, const SuiteOptions& opt = {});

// Canonical JSON form. Wall time is excluded so that equal seeds produce
// byte-identical output; callers wanting it read report.wall_ms directly.
std::string report_to_json(const VerificationReport& r);

}  // namespace loz

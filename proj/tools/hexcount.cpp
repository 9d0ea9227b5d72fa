#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "loz/closed_forms.hpp"
#include "loz/determinants.hpp"
#include "loz/lattice.hpp"
#include "loz/matrix.hpp"
#include "loz/oracle.hpp"
#include "loz/verify.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitRouteMismatch = 2;
constexpr int kExitResourceSkip = 3;
constexpr int kExitUsage = 64;

void dump_region(const std::string& path, const loz::Region& r) {
  std::ofstream out(path);
  if (!out) throw loz::domain_error("cannot write region file: " + path);
  out << loz::region_to_json(r) << "\n";
}

int run_count(long a, long b, long c, bool oracle, const std::string& region_path) {
  loz::HexagonSpec h(a, b, c);
  nlohmann::ordered_json j;
  j["P"] = loz::to_string(loz::macmahon_count(h));
  int exit_code = kExitPass;
  loz::Region region = loz::build_hexagon(h);
  if (!region_path.empty()) dump_region(region_path, region);
  if (oracle) {
    try {
      loz::ExactInt counted = loz::count_tilings(region);
      j["oracle"] = loz::to_string(counted);
      bool match = loz::to_string(counted) == j["P"];
      j["match"] = match;
      if (!match) exit_code = kExitRouteMismatch;
    } catch (const loz::resource_error&) {
      j["oracle"] = "skipped";
      exit_code = kExitResourceSkip;
    }
  }
  std::cout << j.dump(2) << "\n";
  return exit_code;
}

int run_centered(long n, long m, const std::string& parity, bool oracle,
                 const std::string& via, const std::string& region_path) {
  loz::Parity par =
      parity == "even" ? loz::Parity::kEvenSides : loz::Parity::kOddSides;
  loz::CenteredProblem p(n, m, par);
  loz::HexagonSpec h = p.hexagon();
  nlohmann::ordered_json j;
  j["Q"] = loz::to_string(loz::centered_ratio(m, n));
  j["P"] = loz::to_string(loz::macmahon_count(h));
  loz::ExactInt centered = loz::centered_count(p);
  j["centered"] = loz::to_string(centered);
  int exit_code = kExitPass;
  if (!region_path.empty()) dump_region(region_path, loz::build_punctured(h));
  if (via == "determinant") {
    loz::AxisSplit split = loz::split_at_axis(p);
    loz::RationalMatrix upper = par == loz::Parity::kOddSides
                                    ? loz::upper_half_matrix(n, m)
                                    : loz::upper_half_matrix_even(n, m);
    loz::ExactRational value = loz::pow2(split.k) * loz::exact_determinant(upper) *
                               loz::exact_determinant(loz::lower_half_matrix(n, m));
    j["determinant"] = loz::to_string(value);
    if (value != loz::ExactRational(centered)) exit_code = kExitRouteMismatch;
  }
  if (oracle) {
    try {
      loz::ExactInt counted = loz::count_tilings_containing(
          loz::build_hexagon(h), loz::central_lozenge(h));
      j["oracle"] = loz::to_string(counted);
      if (counted != centered) exit_code = kExitRouteMismatch;
    } catch (const loz::resource_error&) {
      j["oracle"] = "skipped";
      if (exit_code == kExitPass) exit_code = kExitResourceSkip;
    }
  }
  std::cout << j.dump(2) << "\n";
  return exit_code;
}

int run_verify(const std::string& suite, long max_n, long max_m, std::uint64_t seed) {
  loz::SuiteOptions opt;
  opt.max_n = max_n;
  opt.max_m = max_m;
  opt.seed = seed;
  loz::VerificationReport report = loz::run_suite(suite, opt);
  std::cout << loz::report_to_json(report) << "\n";
  std::cerr << "wall_ms: " << report.wall_ms << "\n";
  if (report.failed > 0) return kExitVerifyFailure;
  if (report.skipped > 0) return kExitResourceSkip;
  return kExitPass;
}

int run_asymptote(double ratio, const std::string& n_list, const std::string& csv_path) {
  std::vector<long> ns;
  std::stringstream ss(n_list);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (!tok.empty()) ns.push_back(std::stol(tok));
  }
  if (ns.empty()) throw loz::domain_error("asymptote: empty n list");
  const double limit = loz::asymptotic_limit(ratio);

  std::ostringstream csv;
  csv << "n,m,Q,limit,abs_err\n";
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (long n : ns) {
    long m = std::lround(ratio * static_cast<double>(n));
    loz::ExactRational q = loz::centered_ratio(m, n);
    double qd = q.get_d();
    double err = std::fabs(qd - limit);
    char line[160];
    std::snprintf(line, sizeof(line), "%ld,%ld,%s,%.12f,%.3e\n", n, m,
                  loz::to_string(q).c_str(), limit, err);
    csv << line;
    nlohmann::ordered_json row;
    row["n"] = n;
    row["m"] = m;
    row["Q"] = loz::to_string(q);
    row["Q_float"] = qd;
    row["abs_err"] = err;
    rows.push_back(std::move(row));
  }
  if (!csv_path.empty()) {
    std::ofstream out(csv_path);
    if (!out) throw loz::domain_error("cannot write csv: " + csv_path);
    out << csv.str();
  } else {
    std::cout << csv.str();
  }
  nlohmann::ordered_json j;
  j["ratio"] = ratio;
  j["limit"] = limit;
  j["rows"] = std::move(rows);
  std::cout << j.dump(2) << "\n";
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact lozenge-tiling counts for semiregular hexagons"};
  app.require_subcommand(1);

  long a = 0, b = 0, c = 0;
  bool count_oracle = false;
  std::string count_region;
  CLI::App* count = app.add_subcommand("count", "MacMahon count of the (a,b,c) hexagon");
  count->add_option("--a", a)->required();
  count->add_option("--b", b)->required();
  count->add_option("--c", c)->required();
  count->add_flag("--oracle", count_oracle, "cross-check by brute-force enumeration");
  count->add_option("--dump-region", count_region, "write the region as JSON");

  long n = 1, m = 0;
  std::string parity = "odd", via = "formula", centered_region;
  bool centered_oracle = false;
  CLI::App* centered =
      app.add_subcommand("centered", "tilings containing the central lozenge");
  centered->add_option("--n", n)->required();
  centered->add_option("--m", m)->required();
  centered->add_option("--parity", parity)->check(CLI::IsMember({"odd", "even"}));
  centered->add_flag("--oracle", centered_oracle);
  centered->add_option("--via", via)->check(CLI::IsMember({"determinant", "formula"}));
  centered->add_option("--dump-region", centered_region,
                       "write the punctured region as JSON");

  std::string suite = "all";
  long max_n = -1, max_m = -1;
  std::uint64_t seed = 0;
  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", suite)
      ->check(CLI::IsMember(
          {"all", "theorems", "determinants", "identities", "wz", "factorization"}));
  verify->add_option("--max-n", max_n);
  verify->add_option("--max-m", max_m);
  verify->add_option("--seed", seed);

  double ratio = 1.0;
  std::string n_list = "25,50,100,200", csv_path;
  CLI::App* asymptote =
      app.add_subcommand("asymptote", "central-lozenge proportion vs. its limit");
  asymptote->add_option("--ratio", ratio)->required()->check(CLI::NonNegativeNumber);
  asymptote->add_option("--n-list", n_list);
  asymptote->add_option("--csv", csv_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (count->parsed()) return run_count(a, b, c, count_oracle, count_region);
    if (centered->parsed())
      return run_centered(n, m, parity, centered_oracle, via, centered_region);
    if (verify->parsed()) return run_verify(suite, max_n, max_m, seed);
    if (asymptote->parsed()) return run_asymptote(ratio, n_list, csv_path);
  } catch (const loz::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const loz::resource_error& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kExitResourceSkip;
  }
  return kExitUsage;
}

#include "loz/hypergeometric.hpp"

#include <cmath>
#include <cstdlib>
#include <optional>
#include <sstream>

namespace loz {
namespace {

std::optional<long> termination_index(const SeriesSpec& s) {
  std::optional<long> k;
  for (const auto& u : s.upper) {
    if (!is_nonpositive_integer(u)) continue;
    long cand = -static_cast<long>(u.get_num().get_si());
    if (!k || cand < *k) k = cand;
  }
  return k;
}

}  // namespace

ExactRational evaluate_terminating(const SeriesSpec& s) {
  auto k_max = termination_index(s);
  if (!k_max)
    throw domain_error("evaluate_terminating: no non-positive integer upper parameter");
  // A lower parameter b with -K < b <= 0 makes (b)_k vanish at some k <= K.
  for (const auto& b : s.lower) {
    if (is_nonpositive_integer(b) && -b.get_num() < *k_max)
      throw domain_error("evaluate_terminating: pole inside summation range");
  }
  ExactRational sum(0);
  ExactRational term(1);
  for (long k = 0;; ++k) {
    sum += term;
    if (k == *k_max) break;
    for (const auto& u : s.upper) term *= (u + k);
    for (const auto& b : s.lower) term /= (b + k);
    term /= ExactRational(k + 1);
    term *= s.argument;
  }
  return sum;
}

VerifyOutcome chu_vandermonde_check(const ExactRational& a, const ExactRational& c,
                                    long N) {
  if (N < 0) throw domain_error("chu_vandermonde_check: N must be nonnegative");
  SeriesSpec s{{a, ExactRational(-N)}, {c}, ExactRational(1)};
  ExactRational lhs = evaluate_terminating(s);
  ExactRational den = shifted_factorial(c, N);
  if (den == 0) throw domain_error("chu_vandermonde_check: (c)_N vanishes");
  ExactRational rhs = shifted_factorial(c - a, N) / den;
  VerifyOutcome out;
  out.ok = (lhs == rhs);
  out.lhs = to_string(lhs);
  out.rhs = to_string(rhs);
  return out;
}

VerifyOutcome pfaff_saalschutz_check(const ExactRational& a, const ExactRational& b,
                                     const ExactRational& c, long N) {
  if (N < 0) throw domain_error("pfaff_saalschutz_check: N must be nonnegative");
  ExactRational balance = ExactRational(1) + a + b - c - N;
  SeriesSpec s{{a, b, ExactRational(-N)}, {c, balance}, ExactRational(1)};
  ExactRational lhs = evaluate_terminating(s);
  ExactRational den = shifted_factorial(c, N) * shifted_factorial(c - a - b, N);
  if (den == 0) throw domain_error("pfaff_saalschutz_check: zero denominator on RHS");
  ExactRational rhs = shifted_factorial(c - a, N) * shifted_factorial(c - b, N) / den;
  VerifyOutcome out;
  out.ok = (lhs == rhs);
  out.lhs = to_string(lhs);
  out.rhs = to_string(rhs);
  return out;
}

std::array<ExactRational, 3> centered_ratio_series_forms(long m, long n) {
  if (m < 1) throw domain_error("centered_ratio_series_forms: m must be >= 1");
  if (n < 2) throw domain_error("centered_ratio_series_forms: n must be >= 2");

  ExactRational direct = centered_ratio(m, n);

  ExactInt num = factorial(2 * n) * factorial(2 * n) * factorial(2 * m) *
                 factorial(m + 2 * n - 1);
  ExactInt den = 2 * factorial(n) * factorial(n) * factorial(m) *
                 factorial(2 * m + 4 * n - 2);
  ExactRational prefactor = make_rational(num, den);
  ExactRational fac_sq(factorial(n - 1) * factorial(n - 1));

  // Reversed-order form.
  SeriesSpec reversed{{ExactRational(1), make_rational(1, 2), ExactRational(1 - n),
                       ExactRational(1 - n)},
                      {ExactRational(1 + m), ExactRational(2 - m - 2 * n),
                       make_rational(3, 2)},
                      ExactRational(1)};
  ExactRational pre_bailey = prefactor *
                             shifted_factorial(ExactRational(m + 1), 2 * n - 2) /
                             fac_sq * evaluate_terminating(reversed);

  // Transformed form.
  SeriesSpec transformed{{ExactRational(1 - n), ExactRational(1), ExactRational(1),
                          make_rational(2 * n + 1, 2)},
                         {make_rational(3, 2), ExactRational(2 - m - n),
                          ExactRational(1 + m + n)},
                         ExactRational(1)};
  ExactRational post_bailey = prefactor *
                              shifted_factorial(ExactRational(m), n - 1) *
                              shifted_factorial(ExactRational(m + n + 1), n - 1) /
                              fac_sq * evaluate_terminating(transformed);

  return {direct, pre_bailey, post_bailey};
}

VerifyOutcome arcsin_series_check(double z, double tol) {
  if (!(z > 0.0 && z < 1.0))
    throw domain_error("arcsin_series_check: z must lie in (0,1)");
  constexpr long kMaxTerms = 1000000;
  double sum = 0.0;
  double term = 1.0;
  long k = 0;
  for (; k < kMaxTerms; ++k) {
    sum += term;
    if (std::abs(term) < tol / 10.0) break;
    // 2F1[1,1;3/2;z]: term ratio (k+1)/(k+3/2) * z.
    term *= (k + 1.0) / (k + 1.5) * z;
  }
  VerifyOutcome out;
  if (k == kMaxTerms) {
    out.ok = false;
    out.detail = "series did not converge within term cap";
    throw domain_error("arcsin_series_check: convergence cap reached");
  }
  double closed = std::asin(std::sqrt(z)) / std::sqrt(z * (1.0 - z));
  out.ok = std::abs(sum - closed) <= tol;
  {
    std::ostringstream l, r;
    l.precision(17);
    r.precision(17);
    l << sum;
    r << closed;
    out.lhs = l.str();
    out.rhs = r.str();
  }
  return out;
}

}  // namespace loz

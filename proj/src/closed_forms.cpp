#include "loz/closed_forms.hpp"

#include <cmath>

namespace loz {
namespace {

// Front factor of Q(m,n): (2n)!^2 (2m)! (m+2n-1)! / (2 n!^2 m! (2m+4n-2)!).
ExactRational centered_ratio_prefactor(long m, long n) {
  ExactInt num = factorial(2 * n) * factorial(2 * n) * factorial(2 * m) *
                 factorial(m + 2 * n - 1);
  ExactInt den = 2 * factorial(n) * factorial(n) * factorial(m) *
                 factorial(2 * m + 4 * n - 2);
  return make_rational(num, den);
}

// Summand F(n,i) of S(n): (-1)^(n-i-1) / (2n-2i-1) * (2n-i)_{2i} / i!^2.
ExactRational diagonal_summand(long n, long i) {
  ExactRational v = shifted_factorial(ExactRational(2 * n - i), 2 * i);
  v /= ExactRational(factorial(i) * factorial(i));
  v /= ExactRational(2 * n - 2 * i - 1);
  if ((n - i - 1) % 2 != 0) v = -v;
  return v;
}

// Companion certificate G(n,i) of the telescoping relation; G(n,0) = 0.
ExactRational certificate(long n, long i) {
  if (i == 0) return ExactRational(0);
  ExactInt poly = ExactInt(-3) + 9 * i - 6 * i * i - 30 * n + 62 * i * n -
                  28 * i * i * n - 104 * n * n + 104 * i * n * n -
                  112 * n * n * n;
  ExactRational v(poly);
  v *= ExactRational(i * i);
  v *= shifted_factorial(ExactRational(2 * n - i + 2), 2 * i - 2);
  v /= ExactRational(2 * n - 2 * i + 1);
  v /= ExactRational(factorial(i) * factorial(i));
  if ((n - i) % 2 != 0) v = -v;
  return v;
}

}  // namespace

ExactInt macmahon_count(const HexagonSpec& h) {
  ExactRational p(1);
  for (long i = 1; i <= h.a; ++i)
    for (long j = 1; j <= h.b; ++j)
      for (long k = 1; k <= h.c; ++k)
        p *= make_rational(i + j + k - 1, i + j + k - 2);
  return to_integer(p);
}

ExactRational centered_ratio(long m, long n) {
  if (n < 1) throw domain_error("centered_ratio: n must be positive");
  if (m < 0) throw domain_error("centered_ratio: m must be nonnegative");
  ExactRational sum(0);
  for (long i = 0; i < n; ++i) {
    ExactRational t = shifted_factorial(ExactRational(m + n - i), 2 * i);
    t /= ExactRational(factorial(i) * factorial(i));
    t /= ExactRational(2 * n - 2 * i - 1);
    if ((n - i - 1) % 2 != 0) t = -t;
    sum += t;
  }
  return centered_ratio_prefactor(m, n) * sum;
}

ExactInt centered_count(const CenteredProblem& p) {
  ExactRational q = centered_ratio(p.m, p.n);
  ExactRational total(macmahon_count(p.hexagon()));
  return to_integer(q * total);
}

ExactRational diagonal_sum(long n) {
  if (n < 1) throw domain_error("diagonal_sum: n must be positive");
  ExactRational s(0);
  for (long i = 0; i < n; ++i) s += diagonal_summand(n, i);
  return s;
}

VerifyOutcome diagonal_sum_product_check(long n) {
  ExactRational lhs = diagonal_sum(n);
  ExactInt num(1);
  for (long i = 1; i < n; ++i) num *= ExactInt(6 * i - 1) * ExactInt(6 * i + 1);
  for (long i = 1; i < n; ++i) num *= 3;
  ExactInt dd = double_factorial(2 * n - 1);
  ExactRational rhs = make_rational(num, dd * dd);
  VerifyOutcome out;
  out.ok = (lhs == rhs);
  out.lhs = to_string(lhs);
  out.rhs = to_string(rhs);
  return out;
}

VerifyOutcome wz_certificate_check(long n) {
  VerifyOutcome out;
  ExactRational c1 = ExactRational(n) * ExactRational((2 * n + 1) * (2 * n + 1));
  ExactRational c2 =
      ExactRational(3 * n) * ExactRational(6 * n - 1) * ExactRational(6 * n + 1);
  for (long i = 0; i <= n; ++i) {
    ExactRational lhs =
        c1 * diagonal_summand(n + 1, i) - c2 * diagonal_summand(n, i);
    ExactRational rhs = certificate(n, i + 1) - certificate(n, i);
    if (lhs != rhs) {
      out.ok = false;
      out.lhs = to_string(lhs);
      out.rhs = to_string(rhs);
      out.detail = "telescoping mismatch at i=" + std::to_string(i);
      return out;
    }
  }
  ExactRational lhs =
      ExactRational((2 * n + 1) * (2 * n + 1)) * diagonal_sum(n + 1);
  ExactRational rhs = ExactRational(3) * ExactRational(6 * n - 1) *
                      ExactRational(6 * n + 1) * diagonal_sum(n);
  out.ok = (lhs == rhs);
  out.lhs = to_string(lhs);
  out.rhs = to_string(rhs);
  if (!out.ok) out.detail = "recurrence mismatch";
  return out;
}

ExactInt binomial_det_closed_form(long N, long m) {
  if (N < 0) throw domain_error("binomial_det_closed_form: N must be nonnegative");
  if (m < 0) throw domain_error("binomial_det_closed_form: m must be nonnegative");
  ExactRational p(1);
  for (long i = 1; i <= N; ++i) {
    ExactRational f(factorial(N + m - i + 1) * factorial(i - 1));
    f *= ExactRational(shifted_factorial_int(2 * m + i + 1, i - 1));
    f /= ExactRational(factorial(m + i - 1) * factorial(2 * N - 2 * i + 1));
    p *= f;
  }
  return to_integer(p);
}

ExactRational weighted_det_closed_form(long n, long m) {
  if (n < 1) throw domain_error("weighted_det_closed_form: n must be positive");
  if (m < 0) throw domain_error("weighted_det_closed_form: m must be nonnegative");
  ExactRational v = pow2(-(3 * n - 3));
  v /= ExactRational(factorial(n - 1));
  for (long i = 1; i <= n; ++i) {
    ExactInt f = factorial(2 * i - 1);
    v *= ExactRational(f * f);
  }
  for (long i = 1; i <= 2 * n - 1; ++i) {
    v *= ExactRational(factorial(2 * n + m - i - 1));
    v /= ExactRational(factorial(m + i - 1) * factorial(4 * n - 2 * i - 1));
  }
  for (long i = 1; i <= 2 * n - 2; ++i)
    v *= ExactRational(shifted_factorial_int(2 * m + i + 1, i));
  ExactRational sum(0);
  for (long i = 0; i < n; ++i) {
    ExactRational t = shifted_factorial(ExactRational(m + n - i), 2 * i);
    t /= ExactRational(factorial(i) * factorial(i));
    t /= ExactRational(2 * n - 2 * i - 1);
    if ((n - i - 1) % 2 != 0) t = -t;
    sum += t;
  }
  return v * sum;
}

double asymptotic_limit(double a) {
  if (a < 0) throw domain_error("asymptotic_limit: a must be nonnegative");
  return 2.0 / M_PI * std::asin(1.0 / (a + 1.0));
}

}  // namespace loz

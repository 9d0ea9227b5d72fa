#include "loz/determinants.hpp"

namespace loz {
namespace {

// (2n+m-i-1)! / ((m+i-j)! (2n-2i+j)!), zero when either factorial argument
// is negative (no lattice path exists there).
ExactRational reciprocal_factorial_entry(long n, long m, long i, long j) {
  long top = 2 * n + m - i - 1;
  long d1 = m + i - j;
  long d2 = 2 * n - 2 * i + j;
  if (d1 < 0 || d2 < 0) return ExactRational(0);
  return make_rational(factorial(top), factorial(d1) * factorial(d2));
}

}  // namespace

RationalMatrix upper_half_matrix(long n, long m) {
  if (n < 1) throw domain_error("upper_half_matrix: n must be positive");
  if (m < 0) throw domain_error("upper_half_matrix: m must be nonnegative");
  long size = 2 * n - 2;
  RationalMatrix mat(size, size);
  for (long i = 1; i <= size; ++i)
    for (long j = 1; j <= size; ++j)
      mat.at(i - 1, j - 1) = ExactRational(binomial(2 * n + m - i - 1, m + i - j));
  return mat;
}

RationalMatrix upper_half_matrix_even(long n, long m) {
  if (n < 1) throw domain_error("upper_half_matrix_even: n must be positive");
  if (m < 1) throw domain_error("upper_half_matrix_even: m must be >= 1");
  long size = 2 * n;
  RationalMatrix mat(size, size);
  for (long i = 1; i <= size; ++i)
    for (long j = 1; j <= size; ++j)
      mat.at(i - 1, j - 1) = ExactRational(binomial(2 * n + m - i, m + i - j - 1));
  return mat;
}

RationalMatrix lower_half_matrix(long n, long m) {
  if (n < 1) throw domain_error("lower_half_matrix: n must be positive");
  if (m < 0) throw domain_error("lower_half_matrix: m must be nonnegative");
  long size = 2 * n - 1;
  RationalMatrix mat(size, size);
  for (long i = 1; i <= size; ++i) {
    for (long j = 1; j <= size; ++j) {
      ExactRational base = reciprocal_factorial_entry(n, m, i, j);
      if (i != n)
        base *= make_rational(2 * (n + m) - j, 2);
      else
        base *= ExactRational(j);
      mat.at(i - 1, j - 1) = base;
    }
  }
  return mat;
}

RationalMatrix reduced_lower_matrix(long n, const ExactRational& m) {
  if (n < 1) throw domain_error("reduced_lower_matrix: n must be positive");
  long size = 2 * n - 1;
  RationalMatrix mat(size, size);
  for (long i = 1; i <= size; ++i) {
    for (long j = 1; j <= size; ++j) {
      ExactRational e = shifted_factorial(m + (i - j + 1), j - 1);
      e *= shifted_factorial(ExactRational(2 * n - 2 * i + j + 1), 2 * n - j - 1);
      if (i != n)
        e *= m + make_rational(2 * n - j, 2);
      else
        e *= ExactRational(j);
      mat.at(i - 1, j - 1) = e;
    }
  }
  return mat;
}

ExactRational lower_row_factor_product(long n, long m) {
  ExactRational p(1);
  for (long i = 1; i <= 2 * n - 1; ++i) {
    p *= ExactRational(factorial(2 * n + m - i - 1));
    p /= ExactRational(factorial(m + i - 1) * factorial(4 * n - 2 * i - 1));
  }
  return p;
}

VerifyOutcome factored_det_check(const FactoredDetInput& in) {
  const long n = static_cast<long>(in.x.size());
  if (static_cast<long>(in.a.size()) != n - 1 ||
      static_cast<long>(in.b.size()) != n - 1)
    throw domain_error("factored_det_check: A and B must have length N-1");
  RationalMatrix mat(n, n);
  for (long i = 1; i <= n; ++i) {
    for (long j = 1; j <= n; ++j) {
      ExactRational e(1);
      for (long k = n; k >= j + 1; --k) e *= in.x[i - 1] + in.a[k - 2];
      for (long k = j; k >= 2; --k) e *= in.x[i - 1] + in.b[k - 2];
      mat.at(i - 1, j - 1) = e;
    }
  }
  ExactRational lhs = exact_determinant(mat);
  ExactRational rhs(1);
  for (long i = 1; i <= n; ++i)
    for (long j = i + 1; j <= n; ++j) rhs *= in.x[i - 1] - in.x[j - 1];
  for (long i = 2; i <= n; ++i)
    for (long j = i; j <= n; ++j) rhs *= in.b[i - 2] - in.a[j - 2];
  VerifyOutcome out;
  out.ok = (lhs == rhs);
  out.lhs = to_string(lhs);
  out.rhs = to_string(rhs);
  return out;
}

VerifyOutcome reduced_det_symmetry_check(long n, const ExactRational& m) {
  ExactRational lhs = exact_determinant(reduced_lower_matrix(n, m));
  ExactRational rhs =
      exact_determinant(reduced_lower_matrix(n, ExactRational(1 - 2 * n) - m));
  if ((n - 1) % 2 != 0) rhs = -rhs;
  VerifyOutcome out;
  out.ok = (lhs == rhs);
  out.lhs = to_string(lhs);
  out.rhs = to_string(rhs);
  return out;
}

VerifyOutcome reduced_det_closed_form_check(long n, const ExactRational& m) {
  ExactRational lhs = exact_determinant(reduced_lower_matrix(n, m));
  ExactRational rhs = pow2(2 * (n - 1) * (n - 2));
  for (long i = 1; i <= n; ++i) {
    ExactInt f = factorial(2 * i - 1);
    rhs *= ExactRational(f * f);
  }
  rhs /= ExactRational(factorial(n - 1));
  for (long i = 1; i < n; ++i) {
    rhs *= shifted_factorial(m + i, 2 * n - 2 * i);
    rhs *= shifted_factorial(m + i + make_rational(1, 2), n - 1);
  }
  ExactRational sum(0);
  for (long i = 0; i < n; ++i) {
    ExactRational t = shifted_factorial(m + (n - i), 2 * i);
    t /= ExactRational(factorial(i) * factorial(i));
    t /= ExactRational(2 * n - 2 * i - 1);
    if ((n - i - 1) % 2 != 0) t = -t;
    sum += t;
  }
  rhs *= sum;
  VerifyOutcome out;
  out.ok = (lhs == rhs);
  out.lhs = to_string(lhs);
  out.rhs = to_string(rhs);
  return out;
}

VerifyOutcome negative_shift_sum_check(long n, long e) {
  if (e < 0 || e > n - 1)
    throw domain_error("negative_shift_sum_check: need 0 <= e <= n-1");
  ExactRational lhs(0);
  for (long i = 0; i < n; ++i) {
    ExactRational t = shifted_factorial(ExactRational(n - e - i), 2 * i);
    t /= ExactRational(factorial(i) * factorial(i));
    t /= ExactRational(2 * n - 2 * i - 1);
    if ((n - i - 1) % 2 != 0) t = -t;
    lhs += t;
  }
  ExactRational half = make_rational(1, 2);
  ExactRational rhs = shifted_factorial(half + n, n - e - 1) /
                      (ExactRational(2) * shifted_factorial(half - n, n - e));
  if (n % 2 != 0) rhs = -rhs;
  VerifyOutcome out;
  out.ok = (lhs == rhs);
  out.lhs = to_string(lhs);
  out.rhs = to_string(rhs);
  return out;
}

}  // namespace loz

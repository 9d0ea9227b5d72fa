#include "loz/matrix.hpp"

#include <utility>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace loz {
namespace {

ExactRational determinant_impl(const RationalMatrix& m, bool parallel) {
  if (m.rows() != m.cols()) throw domain_error("exact_determinant: non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return ExactRational(1);

  // Clear denominators column by column.
  std::vector<ExactInt> a(n * n);
  ExactInt scale(1);
  for (std::size_t j = 0; j < n; ++j) {
    ExactInt l(1);
    for (std::size_t i = 0; i < n; ++i)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).get_den().get_mpz_t());
    for (std::size_t i = 0; i < n; ++i) {
      ExactRational v = m.at(i, j) * ExactRational(l);
      a[i * n + j] = to_integer(v);
    }
    scale *= l;
  }

  // Bareiss fraction-free elimination; row swaps flip the sign.
  int sign = 1;
  ExactInt prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k * n + k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r * n + k] == 0) ++r;
      if (r == n) return ExactRational(0);
      for (std::size_t j = k; j < n; ++j) std::swap(a[k * n + j], a[r * n + j]);
      sign = -sign;
    }
    const ExactInt& pivot = a[k * n + k];
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parallel && n - k > 8)
#endif
    for (std::size_t i = k + 1; i < n; ++i) {
      ExactInt t;
      for (std::size_t j = k + 1; j < n; ++j) {
        t = a[i * n + j] * pivot - a[i * n + k] * a[k * n + j];
        mpz_divexact(a[i * n + j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i * n + k] = 0;
    }
    prev = pivot;
  }
  ExactInt det = a[(n - 1) * n + (n - 1)];
  if (sign < 0) det = -det;
  return make_rational(std::move(det), std::move(scale));
}

}  // namespace

ExactRational exact_determinant(const RationalMatrix& m) {
  return determinant_impl(m, true);
}

ExactRational exact_determinant_serial(const RationalMatrix& m) {
  return determinant_impl(m, false);
}

}  // namespace loz

#pragma once

#include <string>
#include <vector>

#include "loz/exact.hpp"

namespace loz {

// Semiregular hexagon with sides a,b,c,a,b,c in cyclic order (all angles
// 120 degrees). Zero sides are allowed, but not all three.
struct HexagonSpec {
  long a = 0;
  long b = 0;
  long c = 0;

  HexagonSpec(long a_, long b_, long c_) : a(a_), b(b_), c(c_) {
    if (a < 0 || b < 0 || c < 0) throw domain_error("HexagonSpec: negative side");
    if (a == 0 && b == 0 && c == 0) throw domain_error("HexagonSpec: all sides zero");
  }
};

enum class Parity { kOddSides, kEvenSides };

// The symmetric hexagons that admit a central lozenge:
//   odd-sides:  (2n-1, 2n-1, 2m),  n >= 1, m >= 0
//   even-sides: (2n, 2n, 2m-1),    n >= 1, m >= 1
struct CenteredProblem {
  long n = 1;
  long m = 0;
  Parity parity = Parity::kOddSides;

  CenteredProblem(long n_, long m_, Parity p) : n(n_), m(m_), parity(p) {
    if (n < 1) throw domain_error("CenteredProblem: n must be positive");
    if (m < 0) throw domain_error("CenteredProblem: m must be nonnegative");
    if (parity == Parity::kEvenSides && m < 1)
      throw domain_error("CenteredProblem: even-sides requires m >= 1");
  }

  HexagonSpec hexagon() const {
    if (parity == Parity::kOddSides) return HexagonSpec(2 * n - 1, 2 * n - 1, 2 * m);
    return HexagonSpec(2 * n, 2 * n, 2 * m - 1);
  }
};

// Outcome of an exact identity check; a failure always carries both sides.
struct VerifyOutcome {
  bool ok = true;
  std::string lhs;
  std::string rhs;
  std::string detail;  // e.g. the first failing sub-case
};

// MacMahon's product: the number of lozenge tilings of the (a,b,c) hexagon,
// equivalently plane partitions in an a x b x c box. Evaluated as one exact
// rational product and asserted integral.
ExactInt macmahon_count(const HexagonSpec& h);

// Q(m,n): the exact proportion of tilings of the symmetric hexagon that
// contain the central lozenge. n >= 1, m >= 0.
ExactRational centered_ratio(long m, long n);

// Q(m,n) * P(hexagon); asserted integral.
ExactInt centered_count(const CenteredProblem& p);

// The alternating sum S(n) obtained from Q(n,n)'s summation.
ExactRational diagonal_sum(long n);

// S(n) against its product form 3^(n-1) * prod (6i-1)(6i+1) / (2n-1)!!^2.
VerifyOutcome diagonal_sum_product_check(long n);

// Certificate check for the recurrence (2n+1)^2 S(n+1) = 3(6n-1)(6n+1) S(n):
// verifies the telescoping relation at every i in 0..n and the telescoped
// recurrence itself, all in exact arithmetic.
VerifyOutcome wz_certificate_check(long n);

// Closed form of the N x N binomial determinant det(C(N+m-i+1, m+i-j)):
// prod_{i=1}^{N} (N+m-i+1)! (i-1)! (2m+i+1)_{i-1} / ((m+i-1)! (2N-2i+1)!).
ExactInt binomial_det_closed_form(long N, long m);

// Closed form of the weighted lower-half determinant (size 2n-1), exact.
ExactRational weighted_det_closed_form(long n, long m);

// Limit of Q(m,n) for m ~ a*n: (2/pi) * arcsin(1/(a+1)). Double precision;
// the only non-exact quantity in this module.
double asymptotic_limit(double a);

}  // namespace loz

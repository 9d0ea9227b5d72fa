#pragma once

#include <vector>

#include "loz/closed_forms.hpp"
#include "loz/exact.hpp"
#include "loz/matrix.hpp"

namespace loz {

// Gessel-Viennot matrix of the upper half region of the punctured odd-sides
// hexagon: (2n-2) x (2n-2), entry(i,j) = C(2n+m-i-1, m+i-j). n=1 yields the
// empty matrix (determinant 1).
RationalMatrix upper_half_matrix(long n, long m);

// Even-sides variant: 2n x 2n, entry(i,j) = C(2n+m-i, m+i-j-1). Requires
// m >= 1. Its determinant equals binomial_det_closed_form(2n, m-1).
RationalMatrix upper_half_matrix_even(long n, long m);

// Weighted lower half region: (2n-1) x (2n-1),
// entry(i,j) = (2n+m-i-1)! / ((m+i-j)! (2n-2i+j)!) * (n+m-j/2), with the
// n-th row using factor j instead; reciprocals of negative factorials are 0.
RationalMatrix lower_half_matrix(long n, long m);

// The matrix left after extracting the row factors from the lower-half
// determinant: entry(i,j) = (m+i-j+1)_{j-1} (2n-2i+j+1)_{2n-j-1} times the
// same row factor. m may be any rational.
RationalMatrix reduced_lower_matrix(long n, const ExactRational& m);

// prod_{i=1}^{2n-1} (2n+m-i-1)! / ((m+i-1)! (4n-2i-1)!), the factor linking
// det(lower_half_matrix) to det(reduced_lower_matrix).
ExactRational lower_row_factor_product(long n, long m);

// Inputs of the factored determinant identity: X has length N, A and B are
// indexed 2..N (length N-1).
struct FactoredDetInput {
  std::vector<ExactRational> x;
  std::vector<ExactRational> a;
  std::vector<ExactRational> b;
};

// det((X_i+A_N)...(X_i+A_{j+1}) (X_i+B_j)...(X_i+B_2)) against
// prod_{i<j}(X_i-X_j) * prod_{2<=i<=j<=N}(B_i-A_j).
VerifyOutcome factored_det_check(const FactoredDetInput& in);

// det reduced_lower_matrix(n, m) == (-1)^(n-1) det reduced_lower_matrix(n, 1-2n-m).
VerifyOutcome reduced_det_symmetry_check(long n, const ExactRational& m);

// det reduced_lower_matrix(n, m) against its closed form
// 2^{2(n-1)(n-2)} prod(2i-1)!^2 / (n-1)! * prod (m+i)_{2n-2i} (m+i+1/2)_{n-1}
// * the alternating sum.
VerifyOutcome reduced_det_closed_form_check(long n, const ExactRational& m);

// For 0 <= e <= n-1: the alternating sum at m = -e against
// (-1)^n (1/2+n)_{n-e-1} / (2 (1/2-n)_{n-e}).
VerifyOutcome negative_shift_sum_check(long n, long e);

}  // namespace loz

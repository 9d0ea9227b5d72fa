#pragma once

#include <array>
#include <vector>

#include "loz/closed_forms.hpp"
#include "loz/exact.hpp"

namespace loz {

// Parameters of a terminating hypergeometric series rFs(upper; lower; z).
// At least one upper parameter must be a non-positive integer; the smallest
// such -u gives the termination index K. Lower parameters must not create a
// pole inside the summation range 0..K.
struct SeriesSpec {
  std::vector<ExactRational> upper;
  std::vector<ExactRational> lower;
  ExactRational argument;
};

// Exact finite sum of a terminating series. Throws domain_error if no upper
// parameter terminates the sum or a lower parameter hits zero in range.
ExactRational evaluate_terminating(const SeriesSpec& s);

// 2F1[a, -N; c; 1] against (c-a)_N / (c)_N.
VerifyOutcome chu_vandermonde_check(const ExactRational& a, const ExactRational& c,
                                    long N);

// Balanced 3F2[a, b, -N; c, 1+a+b-c-N; 1] against
// (c-a)_N (c-b)_N / ((c)_N (c-a-b)_N).
VerifyOutcome pfaff_saalschutz_check(const ExactRational& a, const ExactRational& b,
                                     const ExactRational& c, long N);

// Q(m,n) along three routes: the defining sum, the 4F3 form obtained by
// reversing the summation order, and its image under the balanced-series
// transformation. Requires m >= 1 and n >= 2 (the transformed prefactor
// degenerates at m=0 and the series notation at n=1).
std::array<ExactRational, 3> centered_ratio_series_forms(long m, long n);

// Partial sums of 2F1[1,1;3/2;z] against arcsin(sqrt z)/sqrt(z(1-z)).
// Non-terminating, so this one is floating point: terms are added until the
// current term drops below tol/10 (cap 10^6 terms), then compared within tol.
VerifyOutcome arcsin_series_check(double z, double tol);

}  // namespace loz

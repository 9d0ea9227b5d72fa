#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace loz {

// Arbitrary-precision integers and rationals. All counts and formula values
// in this project live in these types; doubles appear only in the asymptotic
// checks. Rationals are kept canonical (lowest terms, positive denominator)
// at all times.
using ExactInt = mpz_class;
using ExactRational = mpq_class;

class domain_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when an enumeration exceeds its configured budget. Never a wrong
// count: callers either get the exact answer or this.
class resource_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// num/den reduced to lowest terms with positive denominator.
ExactRational make_rational(ExactInt num, ExactInt den);

inline ExactRational make_rational(long num, long den = 1) {
  return make_rational(ExactInt(num), ExactInt(den));
}

// Decimal string forms used on the wire (CLI JSON). Integers are plain
// decimal; rationals are "p/q" with q > 0, or just "p" when q == 1.
std::string to_string(const ExactInt& v);
std::string to_string(const ExactRational& v);
ExactInt parse_int(const std::string& s);
ExactRational parse_rational(const std::string& s);

// k!, k >= 0.
ExactInt factorial(long k);

// C(top, bottom); 0 when bottom < 0 or bottom > top. top must be >= 0.
ExactInt binomial(long top, long bottom);

// Shifted factorial (a)_k = a(a+1)...(a+k-1), (a)_0 = 1.
ExactRational shifted_factorial(const ExactRational& a, long k);
ExactInt shifted_factorial_int(long a, long k);

// k(k-2)(k-4)... ending at 1 or 2; 0!! = (-1)!! = 1.
ExactInt double_factorial(long k);

// Exact check, throws domain_error if v has a nontrivial denominator.
ExactInt to_integer(const ExactRational& v);

inline bool is_integer(const ExactRational& v) {
  return v.get_den() == 1;
}

// True iff v is an integer <= 0.
bool is_nonpositive_integer(const ExactRational& v);

// 2^e for any integer e.
ExactRational pow2(long e);

}  // namespace loz

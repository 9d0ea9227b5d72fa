#include "loz/exact.hpp"

namespace loz {

ExactRational make_rational(ExactInt num, ExactInt den) {
  if (den == 0) throw domain_error("make_rational: zero denominator");
  ExactRational r(std::move(num), std::move(den));
  r.canonicalize();
  return r;
}

std::string to_string(const ExactInt& v) { return v.get_str(); }

std::string to_string(const ExactRational& v) {
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

ExactInt parse_int(const std::string& s) {
  ExactInt v;
  if (v.set_str(s, 10) != 0) throw domain_error("parse_int: bad integer '" + s + "'");
  return v;
}

ExactRational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return ExactRational(parse_int(s));
  return make_rational(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
}

ExactInt factorial(long k) {
  if (k < 0) throw domain_error("factorial: negative argument");
  ExactInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(k));
  return r;
}

ExactInt binomial(long top, long bottom) {
  if (top < 0) throw domain_error("binomial: negative top");
  if (bottom < 0 || bottom > top) return 0;
  ExactInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(top),
               static_cast<unsigned long>(bottom));
  return r;
}

ExactRational shifted_factorial(const ExactRational& a, long k) {
  if (k < 0) throw domain_error("shifted_factorial: negative length");
  ExactRational r(1);
  ExactRational term = a;
  for (long i = 0; i < k; ++i) {
    r *= term;
    term += 1;
  }
  return r;
}

ExactInt shifted_factorial_int(long a, long k) {
  if (k < 0) throw domain_error("shifted_factorial_int: negative length");
  ExactInt r(1);
  for (long i = 0; i < k; ++i) r *= ExactInt(a + i);
  return r;
}

ExactInt double_factorial(long k) {
  if (k < -1) throw domain_error("double_factorial: argument below -1");
  ExactInt r(1);
  for (long i = k; i >= 2; i -= 2) r *= ExactInt(i);
  return r;
}

ExactInt to_integer(const ExactRational& v) {
  if (v.get_den() != 1)
    throw domain_error("expected an integer, got " + to_string(v));
  return v.get_num();
}

bool is_nonpositive_integer(const ExactRational& v) {
  return v.get_den() == 1 && v.get_num() <= 0;
}

ExactRational pow2(long e) {
  ExactRational r(1);
  if (e >= 0) {
    mpz_mul_2exp(mpq_numref(r.get_mpq_t()), mpq_numref(r.get_mpq_t()),
                 static_cast<unsigned long>(e));
  } else {
    mpz_mul_2exp(mpq_denref(r.get_mpq_t()), mpq_denref(r.get_mpq_t()),
                 static_cast<unsigned long>(-e));
  }
  return r;
}

}  // namespace loz

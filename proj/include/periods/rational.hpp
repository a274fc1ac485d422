#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <string>

namespace periods {

namespace mp = boost::multiprecision;

using BigInt = mp::number<mp::gmp_int, mp::et_off>;
// GMP keeps these canonical: reduced, positive denominator, zero is 0/1.
using BigRational = mp::number<mp::gmp_rational, mp::et_off>;
// Variable-precision binary float; precision is set per task via PrecisionGuard.
using BigReal = mp::number<mp::mpfr_float_backend<0>, mp::et_off>;

// The two-argument number constructor treats the denominator as unsigned,
// so build rationals by exact division instead.
inline BigRational make_rational(long long num, long long den) {
  return BigRational(BigInt(num)) / BigRational(BigInt(den));
}

inline BigRational pow_rational(const BigRational& base, long e) {
  if (e == 0) return BigRational(1);
  BigRational b = base;
  long n = e;
  if (n < 0) {
    b = BigRational(1) / b;  // throws on zero via GMP division
    n = -n;
  }
  BigRational acc(1);
  while (n > 0) {
    if (n & 1) acc *= b;
    b *= b;
    n >>= 1;
  }
  return acc;
}

inline std::string rational_to_string(const BigRational& q) {
  return q.str();  // "p/q" or "p"
}

// RAII scope for the decimal working precision of BigReal.
class PrecisionGuard {
 public:
  explicit PrecisionGuard(unsigned digits)
      : previous_(BigReal::default_precision()) {
    BigReal::default_precision(digits);
  }
  ~PrecisionGuard() { BigReal::default_precision(previous_); }
  PrecisionGuard(const PrecisionGuard&) = delete;
  PrecisionGuard& operator=(const PrecisionGuard&) = delete;

 private:
  unsigned previous_;
};

inline BigReal to_bigreal(const BigRational& q) {
  return BigReal(numerator(q)) / BigReal(denominator(q));
}

inline BigReal pow10(long e) {
  BigReal ten(10);
  BigReal acc(1);
  long n = e < 0 ? -e : e;
  while (n > 0) {
    if (n & 1) acc *= ten;
    ten *= ten;
    n >>= 1;
  }
  if (e < 0) return BigReal(1) / acc;
  return acc;
}

}  // namespace periods

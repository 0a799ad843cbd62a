#ifndef OVERTOP_BIGREAL_HPP
#define OVERTOP_BIGREAL_HPP

#include <mpfr.h>

#include <string>

#include "overtop/rational.hpp"
#include "overtop/surd2.hpp"

namespace overtop {

// Arbitrary-precision real with an explicit decimal working precision
// ("context"). Results carry the minimum context of their operands, so a
// low-precision value can never masquerade as a high-precision one after
// flowing through arithmetic.
//
// The underlying mpfr precision is chosen with ~64 guard bits beyond what the
// decimal context requires, so a single elementary operation keeps relative
// error far below 10^(2-digits).
class BigReal {
 public:
  BigReal() = delete;  // a context is always required
  BigReal(const BigReal& o);
  BigReal(BigReal&& o) noexcept;
  BigReal& operator=(const BigReal& o);
  BigReal& operator=(BigReal&& o) noexcept;
  ~BigReal();

  BigReal(long v, int digits);
  BigReal(const Rational& q, int digits);
  static BigReal from_string(const std::string& text, int digits);
  static BigReal from_double(double v, int digits);
  static BigReal pi(int digits);

  int digits() const { return digits_; }
  BigReal with_digits(int digits) const;  // re-round to a new context
  BigReal zero_like() const;              // 0 in this value's context

  bool is_zero() const { return mpfr_zero_p(v_); }
  int sign() const { return mpfr_sgn(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }

  // Decimal scientific notation with `sig` significant digits
  // (defaults to the full context).
  std::string to_string(int sig = -1) const;
  // All-digit mantissa string plus decimal exponent: value = 0.mantissa * 10^exp.
  std::string mantissa_digits(int count, long* exp10) const;

  friend BigReal operator+(const BigReal& a, const BigReal& b);
  friend BigReal operator-(const BigReal& a, const BigReal& b);
  friend BigReal operator*(const BigReal& a, const BigReal& b);
  friend BigReal operator/(const BigReal& a, const BigReal& b);
  friend BigReal operator-(const BigReal& a);
  friend BigReal operator+(const BigReal& a, long b);
  friend BigReal operator-(const BigReal& a, long b);
  friend BigReal operator+(long a, const BigReal& b);
  friend BigReal operator-(long a, const BigReal& b);
  friend BigReal operator*(long a, const BigReal& b);
  friend BigReal operator*(const BigReal& a, long b);
  friend BigReal operator/(const BigReal& a, long b);
  friend BigReal operator/(long a, const BigReal& b);

  friend int cmp(const BigReal& a, const BigReal& b);
  friend int cmp(const BigReal& a, long b);

  friend BigReal sqrt(const BigReal& a);   // a >= 0
  friend BigReal cbrt(const BigReal& a);   // real cube root, negatives allowed
  friend BigReal nthroot(const BigReal& a, unsigned long n);
  friend BigReal abs(const BigReal& a);
  friend BigReal pow_int(const BigReal& a, long e);
  friend BigReal cos(const BigReal& a);
  friend BigReal sin(const BigReal& a);
  friend BigReal acos(const BigReal& a);
  friend BigReal atan2(const BigReal& y, const BigReal& x);
  mpz_class floor_mpz() const;
  Rational to_rational_exact() const;  // the exact dyadic value held
  friend BigReal exp10_int(long e, int digits);  // 10^e as a fresh value

 private:
  explicit BigReal(int digits);  // uninitialized value, context set
  mpfr_t v_;
  int digits_;
};

BigReal exp10_int(long e, int digits);

inline bool operator<(const BigReal& a, const BigReal& b) { return cmp(a, b) < 0; }
inline bool operator>(const BigReal& a, const BigReal& b) { return cmp(a, b) > 0; }
inline bool operator<=(const BigReal& a, const BigReal& b) { return cmp(a, b) <= 0; }
inline bool operator>=(const BigReal& a, const BigReal& b) { return cmp(a, b) >= 0; }
inline bool operator==(const BigReal& a, const BigReal& b) { return cmp(a, b) == 0; }
inline bool operator!=(const BigReal& a, const BigReal& b) { return cmp(a, b) != 0; }

BigReal surd_to_bigreal(const Surd2& s, int digits);

// Complex value as a (real, imaginary) BigReal pair. Only what the closed-form
// solvers need to report and verify their roots; not a general complex layer.
struct BigComplex {
  BigReal re, im;
  bool is_real(const BigReal& tol) const;
};

BigComplex cadd(const BigComplex& a, const BigComplex& b);
BigComplex csub(const BigComplex& a, const BigComplex& b);
BigComplex cmul(const BigComplex& a, const BigComplex& b);
BigComplex cdiv(const BigComplex& a, const BigComplex& b);
BigComplex csqrt(const BigComplex& a);
BigReal cabs(const BigComplex& a);

}  // namespace overtop

#endif

#ifndef OVERTOP_SURD2_HPP
#define OVERTOP_SURD2_HPP

#include "overtop/rational.hpp"

namespace overtop {

// Exact element of Q(sqrt 2): value = rat + surd*sqrt(2).
// Since sqrt(2) is irrational the representation is unique, so equality is
// componentwise and arithmetic stays exact under +,-,*,/.
struct Surd2 {
  Rational rat;   // rational part
  Rational surd;  // coefficient of sqrt(2)

  Surd2() : rat(0), surd(0) {}
  Surd2(long v) : rat(v), surd(0) {}
  Surd2(const Rational& a) : rat(a), surd(0) {}
  Surd2(const Rational& a, const Rational& b) : rat(a), surd(b) {}

  static Surd2 sqrt2() { return Surd2(Rational(0), Rational(1)); }

  bool is_zero() const { return rat == 0 && surd == 0; }
  bool is_rational() const { return surd == 0; }
};

inline bool operator==(const Surd2& x, const Surd2& y) {
  return x.rat == y.rat && x.surd == y.surd;
}
inline bool operator!=(const Surd2& x, const Surd2& y) { return !(x == y); }

inline Surd2 operator-(const Surd2& x) { return Surd2(-x.rat, -x.surd); }
inline Surd2 operator+(const Surd2& x, const Surd2& y) {
  return Surd2(x.rat + y.rat, x.surd + y.surd);
}
inline Surd2 operator-(const Surd2& x, const Surd2& y) {
  return Surd2(x.rat - y.rat, x.surd - y.surd);
}
inline Surd2 operator*(const Surd2& x, const Surd2& y) {
  // (a + b s)(c + d s) = ac + 2bd + (ad + bc) s   with s^2 = 2
  return Surd2(x.rat * y.rat + 2 * x.surd * y.surd,
               x.rat * y.surd + x.surd * y.rat);
}

Surd2 inverse(const Surd2& x);
inline Surd2 operator/(const Surd2& x, const Surd2& y) { return x * inverse(y); }

inline Surd2& operator+=(Surd2& x, const Surd2& y) { x = x + y; return x; }
inline Surd2& operator-=(Surd2& x, const Surd2& y) { x = x - y; return x; }
inline Surd2& operator*=(Surd2& x, const Surd2& y) { x = x * y; return x; }
inline Surd2& operator/=(Surd2& x, const Surd2& y) { x = x / y; return x; }

// Sign of the real value a + b*sqrt(2) without leaving exact arithmetic.
int sign(const Surd2& x);

// "p/q + r/s*sqrt2" with the zero terms dropped ("0" for zero).
std::string surd_to_string(const Surd2& x);

}  // namespace overtop

#endif

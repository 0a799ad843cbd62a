#include "overtop/surd2.hpp"

namespace overtop {

Surd2 inverse(const Surd2& x) {
  if (x.is_zero()) throw std::domain_error("division by zero Surd2");
  // 1/(a + b s) = (a - b s)/(a^2 - 2 b^2); the norm is nonzero because
  // a^2 = 2 b^2 has no nonzero rational solution.
  Rational norm = x.rat * x.rat - 2 * x.surd * x.surd;
  return Surd2(x.rat / norm, -x.surd / norm);
}

int sign(const Surd2& x) {
  int sa = sgn(x.rat), sb = sgn(x.surd);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // opposite signs: compare |a| against |b|*sqrt(2) via squares
  Rational a2 = x.rat * x.rat, b22 = 2 * x.surd * x.surd;
  if (a2 == b22) return 0;  // impossible for nonzero b, kept for completeness
  return a2 > b22 ? sa : sb;
}

std::string surd_to_string(const Surd2& x) {
  if (x.is_zero()) return "0";
  std::string out;
  if (x.rat != 0 || x.surd == 0) out = rat_to_string(x.rat);
  if (x.surd != 0) {
    if (!out.empty()) out += x.surd > 0 ? " + " : " - ";
    else if (x.surd < 0) out += "-";
    out += rat_to_string(abs(x.surd)) + "*sqrt2";
  }
  return out;
}

}  // namespace overtop

#ifndef OVERTOP_CLOSED_FORM_HPP
#define OVERTOP_CLOSED_FORM_HPP

#include <vector>

#include "overtop/poly.hpp"

namespace overtop {

// x = xi - a3/4 turns the monic quartic x^4 + a3 x^3 + a2 x^2 + a1 x + a0
// into xi^4 + C xi^2 + D xi + E.
template <class T>
struct DepressedQuartic {
  T C, D, E;
  T shift;  // original root = depressed root - shift
};

template <class T>
DepressedQuartic<T> depress_quartic(const T& a3, const T& a2, const T& a1, const T& a0) {
  auto k = [&](long num, long den) { return scalar_from_rational(Rational(num, den), a3); };
  T a3sq = T(a3 * a3);
  T C = T(a2 - T(k(3, 8) * a3sq));
  T D = T(a1 - T(k(1, 2) * T(a3 * a2)) + T(k(1, 8) * T(a3sq * a3)));
  T E = T(a0 - T(k(1, 4) * T(a3 * a1)) + T(k(1, 16) * T(a3sq * a2)) -
          T(k(3, 256) * T(a3sq * a3sq)));
  return {C, D, E, T(k(1, 4) * a3)};
}

// Coefficients of the resolvent cubic z^3 + c z^2 + d z + e whose root makes
// the shifted quartic split into two quadratics.
template <class T>
void resolvent_cubic(const T& C, const T& D, const T& E, T& c, T& d, T& e) {
  auto k = [&](long num, long den) { return scalar_from_rational(Rational(num, den), C); };
  c = T(k(5, 2) * C);
  d = T(T(k(2, 1) * T(C * C)) - E);
  e = T(T(k(1, 2) * T(C * T(T(C * C) - E))) - T(k(1, 8) * T(D * D)));
}

struct CubicSolution {
  std::vector<BigComplex> roots;  // all three
  BigReal real_root;              // the designated real solution
  BigReal discriminant;           // (delta/2)^2 + (gamma/3)^3
};

// z^3 + gamma z + delta = 0. Real cube roots when the discriminant is
// nonnegative; the trigonometric form otherwise (three real roots).
CubicSolution solve_depressed_cubic(const BigReal& gamma, const BigReal& delta, int digits);

// convenience: monic x^3 + c2 x^2 + c1 x + c0
CubicSolution solve_monic_cubic(const BigReal& c2, const BigReal& c1, const BigReal& c0,
                                int digits);

struct QuarticSolution {
  std::vector<BigComplex> roots;  // original variable, shift undone
  BigReal resolvent_zeta;
  std::vector<int> branch_log;  // 0/1: which split quadratic; -1: biquadratic path
};

// Ferrari resolution of xi^4 + C xi^2 + D xi + E; roots are reported in the
// original variable x = xi - shift. D ~ 0 short-circuits to the biquadratic.
QuarticSolution solve_quartic_ferrari(const BigReal& C, const BigReal& D, const BigReal& E,
                                      const BigReal& shift, int digits);

std::vector<BigComplex> solve_monic_quartic(const BigReal& a3, const BigReal& a2,
                                            const BigReal& a1, const BigReal& a0,
                                            int digits);

struct FormulaAResult {
  std::vector<BigComplex> roots;
  // the named radical blocks of the flattened expression
  BigReal A, B;
  BigComplex C, D, E, F;
  bool fell_back = false;  // degenerate block, answered via Ferrari instead
};

// One-shot radical expression for the monic quartic's roots. Falls back to
// Ferrari when the C or F block degenerates (0/0).
FormulaAResult quartic_closed_form_A(const BigReal& a3, const BigReal& a2, const BigReal& a1,
                                     const BigReal& a0, int digits);

}  // namespace overtop

#endif

#ifndef OVERTOP_SYM_HPP
#define OVERTOP_SYM_HPP

#include "overtop/poly.hpp"

namespace overtop {

// Radical building blocks of the two closed-form routes. C, D, E are the
// depressed-quartic coefficients and B the cube-root discriminant block, all
// exact in Q(sqrt 2) before conversion; Delta is the resolvent discriminant;
// zeta, F, Ccal are genuine radicals.
struct SymRadicalConstants {
  BigReal C, D, E, F, B, Ccal, Delta, zeta;
};

struct SymmetricSolution {
  Surd2 p;  // sqrt(2) - 1, exact
  BigReal epsilon;               // the admissible root, in (1/sqrt 2, 1)
  BigReal epsilon_inadmissible;  // second real root, kept as a regression guard
  BigComplex complex_root;       // one of the conjugate pair (positive imaginary part)
  BigReal beta_over_alpha;
  BigReal b_over_r;
  int digits;
  SymRadicalConstants constants;
};

// The tangency quartic in the eccentricity:
// e^4 + 2p e^3 - e^2 - 2p e + p^2 with p = sqrt(2) - 1, constant-first.
Polynomial<Surd2> symmetric_quartic();

// Inradius of the inscribed circle as a function of eccentricity on the
// falling arc: r = alpha * eps * sqrt(1 - eps^2).
BigReal r_of_eps(const BigReal& alpha, const BigReal& eps);

// Piecewise radius: alpha/2 on the plateau [0, 1/sqrt 2], the arc after it.
BigReal r_piecewise(const BigReal& alpha, const BigReal& eps);

// Radius of the first circle construction with beta normalized to 1:
// r1 = (sqrt 2 - 1)(sqrt(alpha^2 + 1) - 1); always below alpha/2.
BigReal r1_of_alpha(const BigReal& alpha);

// Ruler-and-compass check: gamma = sqrt(alpha^2 - beta^2), returns
// beta*gamma/alpha and asserts it equals beta times the eccentricity.
BigReal graphic_r_check(const BigReal& alpha, const BigReal& beta, int digits);

// Full pipeline: exact shift/resolvent bookkeeping in Q(sqrt 2), Ferrari for
// the roots, b/r by three independent routes that must agree.
SymmetricSolution solve_symmetric(int digits);

}  // namespace overtop

#endif

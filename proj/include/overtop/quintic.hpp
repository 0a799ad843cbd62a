#ifndef OVERTOP_QUINTIC_HPP
#define OVERTOP_QUINTIC_HPP

#include <vector>

#include "overtop/bigreal.hpp"
#include "overtop/poly.hpp"
#include "overtop/rational.hpp"

namespace overtop {

// Bring-Jerrard trinomial z^5 + a_lin*z + b_const. For the incircle problem
// the linear coefficient is identically one and the constant is the negated
// sum of squared diameter-to-leg ratios, so b_const < 0 on valid input.
struct BringJerrard {
  BigReal a_lin;
  BigReal b_const;
};

// Quintic factor of the tangency sextic once its root at zero is divided out:
// z^5 + z - [(2r/b)^2 + (2r/c)^2]. The constant is also computed through the
// hypotenuse (2ra/(bc))^2 and altitude (2r/h)^2 forms and all three must
// agree; requires 0 < 2r < b <= c.
BringJerrard bring_jerrard_from_triangle(const BigReal& b, const BigReal& c,
                                         const BigReal& r);

// Rational certificate that z^5 + a_lin*z + b_const is solvable by radicals:
// a sign epsilon, p > 0 and q != 0 with
//   5 q^4 (3 - 4 eps p) = a_lin  (p^2 + 1)
//   4 q^5 (11 eps + 2p) = -b_const (p^2 + 1)
// holding exactly over the rationals.
struct SolvabilityWitness {
  int epsilon_sign = 0;
  Rational p;
  Rational q;
  bool satisfied = false;
  long candidates_tried = 0;
  Rational a_lin;
  Rational b_const;
};

// Exhaustive witness search with numerators and denominators of p bounded by
// `height`. Enumeration order is fixed and documented: epsilon +1 before -1,
// p ascending by value over reduced fractions, +q before -q. q itself is not
// enumerated: the first identity pins q^4 = a_lin (p^2+1) / (5(3 - 4 eps p)),
// so a candidate either admits an exact rational fourth root whose numerator
// and denominator stay within `height`, or is rejected. A pair with
// 3 - 4 eps p = 0 can satisfy no witness and is skipped without being
// counted. Exhaustion is a normal outcome (satisfied = false).
SolvabilityWitness solvability_search_general(const Rational& a_lin,
                                              const Rational& b_const,
                                              int height);

// Unit-linear-coefficient case: the quintic z^5 + z + target.
SolvabilityWitness solvability_search(const Rational& target, int height);

// The five roots of a certified quintic, reconstructed by radicals. Nested
// square roots of p^2+1 build four auxiliary reals; their fifth roots are
// recombined through the fifth roots of unity and scaled by q. The fifth-root
// branches are not canonical, so the 5^4 rotations are tried lazily in
// lexicographic order until every reconstructed root passes the residual
// check at 10^(6-digits) relative scale; failure to find one throws.
// Order: index 0 is the real root, then ascending rotation index, so
// conjugate pairs land at (1,4) and (2,3).
std::vector<BigComplex> solvable_quintic_roots(const SolvabilityWitness& w,
                                               int digits);

// Shortest continued-fraction convergent of x within absolute tolerance tol.
// Negative inputs rationalize their magnitude and carry the sign back.
Rational rationalize(const BigReal& x, const BigReal& tol);

// One-parameter family of reduced sextics z^6 + z^2 + s z + t whose degree-15
// resolvent gains a rational root (namely zero) exactly when
// t = (32 s^4 + 3) / (144 s^2); such members are solvable. The demo
// instantiates s = 1/2 (clearing denominators gives 36z^6 + 36z^2 + 18z + 5)
// and s = 1, counts the real roots of the cleared member by Sturm chains, and
// records that no member of the family has a vanishing linear term -- the
// shape the tangency sextic actually takes.
struct ResolventFamilyReport {
  Rational t_at_half;
  Rational t_at_one;
  Polynomial<Rational> cleared;
  long real_root_count = 0;
  bool zero_linear_term_in_family = false;
};

Rational resolvent_family_constant(const Rational& s);  // s != 0
ResolventFamilyReport resolvent_family_demo();

}  // namespace overtop

#endif

#ifndef OVERTOP_ASYM_HPP
#define OVERTOP_ASYM_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "overtop/bigreal.hpp"
#include "overtop/poly.hpp"

namespace overtop {

// Right triangle with legs b, c and hypotenuse a, right-angle vertex at the
// origin, hypotenuse on the line y = h. All downstream algebra uses the
// recomputed hypotenuse sqrt(b^2 + c^2); the value passed in is kept only for
// echoing back, after a consistency gate.
struct TriangleConfig {
  BigReal a;      // hypotenuse as given
  BigReal b, c;   // legs as given
  BigReal a_eff;  // sqrt(b^2 + c^2)
  int digits;
};

// Validates b, c > 0 and |a^2 - b^2 - c^2| <= 1e-6 * a^2.
TriangleConfig make_triangle(const BigReal& a, const BigReal& b, const BigReal& c);

// Quantities fixed by the triangle and a trial radius r. Coordinates live in
// the frame whose positive x axis points toward the wider leg, so x1 and k are
// nonnegative for either (b, c) order and swapped legs produce an identical
// report.
struct DerivedConstants {
  BigReal h;        // altitude from the right angle onto the hypotenuse
  BigReal k;        // offset of the altitude foot along the hypotenuse
  BigReal m;        // leg ratio, shorter over longer
  BigReal x1, y1;   // center of the circle tangent to both legs
  BigReal kappa_x, kappa_y;  // x1/r and y1/r; kappa_x^2 + kappa_y^2 == 2
};

DerivedConstants derived_constants(const TriangleConfig& t, const BigReal& r);

struct EllipseState {
  BigReal alpha, beta;  // semi-axes
  BigReal eps;          // eccentricity
  BigReal x0, y0;       // center
};

// Center and axes of the inscribed ellipse for a given eccentricity and circle
// radius. Throws std::domain_error when eps leaves (1/sqrt2, 1) or when
// h*eps <= r, where the center parametrization degenerates.
EllipseState ellipse_center(const DerivedConstants& dc, const BigReal& eps,
                            const BigReal& r);

// Degree-6 polynomial in the eccentricity whose root in (1/sqrt2, 1) is forced
// by tangency to all three sides at radius r. Built from two independently
// derived coefficient forms that are cross-checked before returning.
Polynomial<BigReal> sextic_coeffs(const TriangleConfig& t, const BigReal& r);

struct RadiusQuartic {
  Polynomial<BigReal> poly;        // monic quartic in r at fixed eccentricity
  std::vector<BigComplex> roots;
  BigReal admissible;              // the root the geometry accepts
};

// The tangency constraint rearranged as a quartic in the radius at fixed
// eccentricity. Throws std::domain_error when no root is real, positive and
// small enough to keep the ellipse center on the altitude side of the foot.
RadiusQuartic quartic_in_r(const TriangleConfig& t, const BigReal& eps);

// Three quartics in the abscissa that each vanish where the circle touches the
// ellipse, obtained by eliminating the ordinate from the contact conditions
// along three different routes. Throws std::domain_error if the construction
// degenerates to the zero polynomial.
Polynomial<BigReal> build_quartic_u(const DerivedConstants& dc,
                                    const EllipseState& es, const BigReal& r);
Polynomial<BigReal> build_quartic_v(const DerivedConstants& dc,
                                    const EllipseState& es, const BigReal& r);
Polynomial<BigReal> build_quartic_w(const DerivedConstants& dc,
                                    const EllipseState& es, const BigReal& r);

// Collapses the three quartics to their shared root: the derivative of u
// (which meets the contact point twice) against the monic difference of v and
// w, degree-equalized, leaves a quadratic whose admissible root is the contact
// abscissa. Candidates are kept inside [band_lo, band_hi] and within the
// circle disc |x - x1| <= r, then ranked by the worst normalized residual
// across u, v, w. Throws std::domain_error when no candidate survives; callers
// fall back to a direct sign-change search on v.
BigReal tangent_abscissa_via_top(const Polynomial<BigReal>& u,
                                 const Polynomial<BigReal>& v,
                                 const Polynomial<BigReal>& w,
                                 const BigReal& band_lo, const BigReal& band_hi,
                                 const BigReal& x1, const BigReal& r, int digits);

// Contact ordinate from the circle equation (upper branch). Throws
// std::domain_error when xT lies outside the circle disc.
BigReal ordinate_from_circle(const BigReal& xT, const DerivedConstants& dc,
                             const BigReal& r);

struct IterationTrace {
  std::vector<BigReal> radii;      // accepted radius after each step
  long damping_activations = 0;
};

class NonConvergenceError : public std::runtime_error {
 public:
  NonConvergenceError(const std::string& msg, IterationTrace t)
      : std::runtime_error(msg), trace(std::move(t)) {}
  IterationTrace trace;
};

// One step of the fixed-point map: solve the sextic for the admissible
// eccentricity at radius r, build the configuration, locate the contact point
// T, and return the radius of the circle centered on the leg bisector that
// passes through T while touching both legs. Fixed points solve the full
// problem.
BigReal rho(const TriangleConfig& t, const BigReal& r);

struct SolveReport {
  TriangleConfig triangle;
  BigReal r, eps;
  EllipseState ellipse;
  BigReal x1, y1;
  BigReal xT, yT;
  long iterations = 0;
  long damping_activations = 0;
  std::map<std::string, BigReal> residuals;  // sextic, tangency, circle, ellipse, distance
};

// Fixed-point iteration on rho with a guarded half-step: whenever a step would
// grow |delta r|, it is halved. Stops when |delta r| < tol * r. Throws
// NonConvergenceError (with the radius trace) after max_iter steps.
SolveReport solve_asymmetric(const TriangleConfig& t, const BigReal& tol,
                             long max_iter);

struct DerivativeScan {
  Polynomial<BigReal> quartic;  // sextic'(e)/e, defined since the linear term vanishes
  BigReal eps;                  // admissible eccentricity at this radius
  BigReal value_at_eps;         // quartic evaluated there
  BigReal coeff_scale;          // largest |coefficient| of the quartic
  long real_root_count;         // distinct real roots of the sextic
  bool eps_is_simple;           // derivative bounded away from zero at eps
};

// Diagnostic scan of the sextic at a given radius: its full real-root count
// over the root bound, and the derivative quartic certifying the admissible
// root is simple.
DerivativeScan derivative_quartic_demo(const TriangleConfig& t, const BigReal& r);

}  // namespace overtop

#endif

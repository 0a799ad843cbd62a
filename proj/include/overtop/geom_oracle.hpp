#ifndef OVERTOP_GEOM_ORACLE_HPP
#define OVERTOP_GEOM_ORACLE_HPP

#include <string>

#include "overtop/bigreal.hpp"

namespace overtop {

// Independent re-derivation of the tangency geometry in the frame where the
// ellipse is centered at the origin with axes along the coordinate axes, and
// the two orthogonal tangents of slope m and -1/m form the right-angle corner.
// Everything here is built from the tangent-line algebra alone, on purpose: it
// cross-validates the solver without sharing any code with it. The two frames
// are related by a half-turn about the corner, P' = A - P, which maps the
// corner onto the ellipse center and either leg onto a line of the same slope.

struct Point2 {
  BigReal x, y;
};

// y = m x + n
struct TangentLine {
  BigReal m, n;
};

// Intercept of the line of slope m tangent to the upper half of the ellipse
// x^2/alpha^2 + y^2/beta^2 = 1: the discriminant of the line-ellipse system
// vanishes at n = sqrt(alpha^2 m^2 + beta^2).
BigReal tangent_intercept(const BigReal& alpha, const BigReal& beta,
                          const BigReal& m);

// Right-angle corner: intersection of the tangent of slope m with the tangent
// of slope -1/m.
Point2 corner_A(const BigReal& alpha, const BigReal& beta, const BigReal& m);

// Distance of (xA, yA) from the locus of orthogonal-tangent intersections:
// |xA^2 + yA^2 - alpha^2 - beta^2|. Zero iff the point lies on the director
// circle.
BigReal director_circle_check(const BigReal& alpha, const BigReal& beta,
                              const BigReal& xA, const BigReal& yA);

// Contact point of the slope-m tangent with the ellipse:
// (-alpha^2 m / n, beta^2 / n) with n = sqrt(alpha^2 m^2 + beta^2).
Point2 tangent_point_B(const BigReal& alpha, const BigReal& beta,
                       const BigReal& m);

// The same contact point written in eccentricity form, with
// alpha = r/(eps*sqrt(1-eps^2)) and beta = r/eps substituted through.
Point2 tangent_point_B_eps(const BigReal& m, const BigReal& eps,
                           const BigReal& r);

struct BisectorLine {
  BigReal slope, intercept;  // interior bisector of the right angle at A
  Point2 c1;                 // center of the radius-r circle on it, toward the ellipse
};

// Bisector of the corner between the two tangents, and the center lying on it
// at leg-distance r. Throws std::domain_error for m outside (0, 1): at m = 1
// the bisector is vertical and the slope form breaks down.
BisectorLine bisector_and_c1(const BigReal& alpha, const BigReal& beta,
                             const BigReal& m, const BigReal& r);

// Inversion in the unit circle maps (x, y) to (x, -y)/(x^2 + y^2); for (x, y)
// on the ellipse the image lies on the quartic X^2/alpha^2 + Y^2/beta^2 =
// (X^2 + Y^2)^2. Returns the absolute defect of that equation at the image.
// Throws std::domain_error at the origin.
BigReal inversion_residual(const BigReal& alpha, const BigReal& beta,
                           const BigReal& x, const BigReal& y);

// A solved configuration flattened for drawing, in the frame with the right
// angle at the origin and the hypotenuse on y = h.
struct Figure {
  double b, c;                  // legs
  double alpha, beta, x0, y0;   // inscribed ellipse
  double r, x1, y1;             // circle tangent to both legs and the ellipse
  double xT, yT;                // circle-ellipse contact point
};

// Deterministic standalone SVG of the whole configuration: triangle, ellipse,
// the tangent circle, the director circle, the circumcircle, contact points
// and labels. Identical input produces byte-identical output. size is the
// image width in pixels.
std::string render_figure_svg(const Figure& f, int size);

}  // namespace overtop

#endif

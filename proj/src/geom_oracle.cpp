#include "overtop/geom_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdarg>
#include <cstdio>

namespace overtop {

namespace {

void require_axes(const BigReal& alpha, const BigReal& beta) {
  if (alpha.sign() <= 0 || beta.sign() <= 0)
    throw std::domain_error("semi-axes must be positive");
}

}  // namespace

BigReal tangent_intercept(const BigReal& alpha, const BigReal& beta,
                          const BigReal& m) {
  require_axes(alpha, beta);
  return sqrt(alpha * alpha * m * m + beta * beta);
}

Point2 corner_A(const BigReal& alpha, const BigReal& beta, const BigReal& m) {
  require_axes(alpha, beta);
  BigReal u = sqrt(alpha * alpha + beta * beta * m * m);
  BigReal n = sqrt(alpha * alpha * m * m + beta * beta);
  BigReal den = 1 + m * m;
  return Point2{(u - m * n) / den, (m * u + n) / den};
}

BigReal director_circle_check(const BigReal& alpha, const BigReal& beta,
                              const BigReal& xA, const BigReal& yA) {
  return abs(xA * xA + yA * yA - alpha * alpha - beta * beta);
}

Point2 tangent_point_B(const BigReal& alpha, const BigReal& beta,
                       const BigReal& m) {
  require_axes(alpha, beta);
  BigReal n = sqrt(alpha * alpha * m * m + beta * beta);
  return Point2{-(alpha * alpha * m) / n, (beta * beta) / n};
}

Point2 tangent_point_B_eps(const BigReal& m, const BigReal& eps,
                           const BigReal& r) {
  if (eps.sign() <= 0 || !(eps < BigReal(1, eps.digits())))
    throw std::domain_error("eccentricity outside (0, 1)");
  if (r.sign() <= 0) throw std::domain_error("radius must be positive");
  BigReal om = 1 - eps * eps;
  BigReal root = sqrt(1 + m * m / om);
  BigReal yt = r / (eps * root);
  return Point2{-(m / om) * yt, yt};
}

BisectorLine bisector_and_c1(const BigReal& alpha, const BigReal& beta,
                             const BigReal& m, const BigReal& r) {
  require_axes(alpha, beta);
  if (m.sign() <= 0) throw std::domain_error("tangent slope must be positive");
  const int d = m.digits();
  if (!(m < BigReal(1, d)))
    throw std::domain_error("bisector is vertical at m = 1; use the symmetric frame");
  BigReal u = sqrt(alpha * alpha + beta * beta * m * m);
  BigReal n = sqrt(alpha * alpha * m * m + beta * beta);
  BigReal om = 1 - m;
  BigReal slope = (1 + m) / om;
  BigReal intercept = (n - u) / om;
  Point2 a = corner_A(alpha, beta, m);
  BigReal hyp = sqrt(1 + m * m);
  Point2 c1{a.x - om * r / hyp, a.y - (1 + m) * r / hyp};
  return BisectorLine{slope, intercept, c1};
}

BigReal inversion_residual(const BigReal& alpha, const BigReal& beta,
                           const BigReal& x, const BigReal& y) {
  require_axes(alpha, beta);
  BigReal norm = x * x + y * y;
  if (norm.is_zero()) throw std::domain_error("the origin has no inverse");
  BigReal X = x / norm, Y = -(y / norm);
  BigReal lhs = X * X / (alpha * alpha) + Y * Y / (beta * beta);
  BigReal rhs = X * X + Y * Y;
  return abs(lhs - rhs * rhs);
}

namespace {

struct Mapper {
  double xmin, ymax, scale, pad;
  double X(double x) const { return pad + (x - xmin) * scale; }
  double Y(double y) const { return pad + (ymax - y) * scale; }
};

void tag(std::string& out, const char* fmt, ...) {
  char buf[512];
  va_list ap;
  va_start(ap, fmt);
  std::vsnprintf(buf, sizeof buf, fmt, ap);
  va_end(ap);
  out += buf;
}

void dot(std::string& out, const Mapper& mp, double x, double y, const char* name,
         double dx, double dy) {
  tag(out, "<circle cx='%.2f' cy='%.2f' r='3' fill='#111827'/>\n", mp.X(x), mp.Y(y));
  tag(out, "<text x='%.2f' y='%.2f' font-size='14' font-family='monospace' fill='#111827'>%s</text>\n",
      mp.X(x) + dx, mp.Y(y) + dy, name);
}

}  // namespace

std::string render_figure_svg(const Figure& f, int size) {
  if (size < 64) throw std::domain_error("image size too small");
  const double w = std::max(f.b, f.c), n = std::min(f.b, f.c);
  const double a = std::hypot(f.b, f.c);
  const double h = n * w / a;
  // triangle: right angle at the origin, hypotenuse on y = h
  const double bx = w * w / a, cx = -(n * n) / a;  // hypotenuse vertices
  const double k = (w * w - n * n) / (2 * a);
  const double rdir = std::hypot(f.alpha, f.beta);  // director circle
  const double rcirc = a / 2;                       // circumcircle, centered (k, h)

  double xmin = std::min({cx, f.x0 - rdir, k - rcirc});
  double xmax = std::max({bx, f.x0 + rdir, k + rcirc});
  double ymin = std::min({0.0, f.y0 - rdir, h - rcirc});
  double ymax = std::max({h, f.y0 + rdir, h + rcirc});
  const double pad = size * 0.04;
  const double scale = (size - 2 * pad) / (xmax - xmin);
  const int height = (int)((ymax - ymin) * scale + 2 * pad + 0.5);
  Mapper mp{xmin, ymax, scale, pad};

  std::string out;
  tag(out, "<svg xmlns='http://www.w3.org/2000/svg' width='%d' height='%d' "
           "viewBox='0 0 %d %d'>\n", size, height, size, height);
  tag(out, "<rect width='%d' height='%d' fill='#ffffff'/>\n", size, height);
  // triangle
  tag(out, "<polygon points='%.2f,%.2f %.2f,%.2f %.2f,%.2f' fill='none' "
           "stroke='#1f2937' stroke-width='2'/>\n",
      mp.X(0), mp.Y(0), mp.X(bx), mp.Y(h), mp.X(cx), mp.Y(h));
  // circumcircle and director circle, dashed
  tag(out, "<circle cx='%.2f' cy='%.2f' r='%.2f' fill='none' stroke='#059669' "
           "stroke-width='1' stroke-dasharray='6 4'/>\n",
      mp.X(k), mp.Y(h), rcirc * scale);
  tag(out, "<circle cx='%.2f' cy='%.2f' r='%.2f' fill='none' stroke='#9333ea' "
           "stroke-width='1' stroke-dasharray='6 4'/>\n",
      mp.X(f.x0), mp.Y(f.y0), rdir * scale);
  // inscribed ellipse and the tangent circle
  tag(out, "<ellipse cx='%.2f' cy='%.2f' rx='%.2f' ry='%.2f' fill='none' "
           "stroke='#2563eb' stroke-width='2'/>\n",
      mp.X(f.x0), mp.Y(f.y0), f.alpha * scale, f.beta * scale);
  tag(out, "<circle cx='%.2f' cy='%.2f' r='%.2f' fill='none' stroke='#dc2626' "
           "stroke-width='2'/>\n", mp.X(f.x1), mp.Y(f.y1), f.r * scale);
  // contact points: with the hypotenuse, with each leg, and with the ellipse
  tag(out, "<circle cx='%.2f' cy='%.2f' r='2.5' fill='#2563eb'/>\n", mp.X(f.x0), mp.Y(h));
  const double ew[2] = {w / a, n / a}, en[2] = {-n / a, w / a};
  const double pw = f.x1 * ew[0] + f.y1 * ew[1], pn = f.x1 * en[0] + f.y1 * en[1];
  tag(out, "<circle cx='%.2f' cy='%.2f' r='2.5' fill='#dc2626'/>\n",
      mp.X(pw * ew[0]), mp.Y(pw * ew[1]));
  tag(out, "<circle cx='%.2f' cy='%.2f' r='2.5' fill='#dc2626'/>\n",
      mp.X(pn * en[0]), mp.Y(pn * en[1]));
  dot(out, mp, f.xT, f.yT, "T", 6, -6);
  dot(out, mp, f.x0, f.y0, "O", 6, 16);
  dot(out, mp, f.x1, f.y1, "C1", 6, 16);
  dot(out, mp, 0, 0, "A", -14, 16);
  dot(out, mp, bx, h, "B", 6, -6);
  dot(out, mp, cx, h, "C", -14, -6);
  out += "</svg>\n";
  return out;
}

}  // namespace overtop

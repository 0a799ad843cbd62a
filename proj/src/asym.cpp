#include "overtop/asym.hpp"

#include <algorithm>
#include <optional>
#include <utility>

#include "overtop/closed_form.hpp"
#include "overtop/sym.hpp"
#include "overtop/top.hpp"

namespace overtop {

namespace {

BigReal sqrt2_half(int digits) { return sqrt(BigReal(2, digits)) / 2; }

// Exact rational mirror of the tangency sextic (from the dyadic values the
// inputs actually hold), so root isolation can run over the rationals.
Polynomial<Rational> sextic_rational(const TriangleConfig& t, const BigReal& r) {
  Rational ar = t.a_eff.to_rational_exact();
  Rational hr = t.b.to_rational_exact() * t.c.to_rational_exact() / ar;
  Rational rr = r.to_rational_exact();
  Rational Q2 = rr * rr / (ar * ar);
  Rational R = rr / hr;
  Rational R2 = R * R;
  std::vector<Rational> c{Rational(4) * Q2 * R2,
                          Rational(0),
                          Rational(-4) * R2,
                          Rational(4) * R * (Rational(1) - Rational(2) * Q2),
                          Rational(4) * (Q2 + R2) - Rational(1),
                          Rational(-4) * R,
                          Rational(1)};
  return Polynomial<Rational>(std::move(c));
}

// All roots of the sextic in (1/sqrt2, 1) satisfying h*eps > r, isolated by
// Sturm counts over the rationalized polynomial and refined to the context of
// r. Ascending order.
std::vector<BigReal> admissible_eccentricities(const TriangleConfig& t,
                                               const DerivedConstants& dc,
                                               const BigReal& r) {
  const int wp = r.digits();
  Polynomial<Rational> f = sextic_rational(t, r);
  BigReal knee = sqrt2_half(wp);
  Rational lo = (knee - exp10_int(4 - wp, wp)).to_rational_exact();
  Rational hi(1);
  for (int g = 0; g < 4 && poly_eval(f, lo) == 0; ++g) lo -= Rational(1, 1000000000);
  for (int g = 0; g < 4 && poly_eval(f, hi) == 0; ++g) hi -= Rational(1, 1000000000);

  long n = sturm_count(f, lo, hi);
  if (n == 0) throw std::domain_error("no admissible eccentricity at this radius");
  std::vector<std::pair<Rational, Rational>> ready;
  if (n == 1) {
    ready.emplace_back(lo, hi);
  } else {
    std::vector<std::pair<Rational, Rational>> work{{lo, hi}};
    while (!work.empty()) {
      auto [wa, wb] = work.back();
      work.pop_back();
      long k = sturm_count(f, wa, wb);
      if (k == 0) continue;
      if (k == 1) {
        ready.emplace_back(wa, wb);
        continue;
      }
      Rational mid = (wa + wb) / 2;
      for (int g = 0; g < 4 && poly_eval(f, mid) == 0; ++g) mid += (wb - wa) / 257;
      work.emplace_back(wa, mid);
      work.emplace_back(mid, wb);
    }
  }

  Polynomial<BigReal> fb = to_bigreal(f, wp);
  std::vector<BigReal> out;
  for (auto& [ra, rb] : ready) {
    BigReal lo_b(ra, wp), hi_b(rb, wp);
    // an isolated root without a sign change has even multiplicity; that is a
    // degenerate configuration, not an eccentricity we can use
    if (poly_eval(fb, lo_b).sign() * poly_eval(fb, hi_b).sign() > 0) continue;
    BigReal e = refine_root(fb, lo_b, hi_b, wp);
    if (e > knee && (dc.h * e - r).sign() > 0) out.push_back(e);
  }
  if (out.empty()) throw std::domain_error("no admissible eccentricity at this radius");
  std::sort(out.begin(), out.end(), [](const BigReal& x, const BigReal& y) { return x < y; });
  return out;
}

// Sign-change scan + refinement, used when the quadratic collapse yields no
// admissible candidate.
BigReal scan_refine(const Polynomial<BigReal>& f, const BigReal& lo, const BigReal& hi,
                    int digits) {
  const int kGrid = 64;
  BigReal px = lo;
  BigReal pf = poly_eval(f, px);
  for (int i = 1; i <= kGrid; ++i) {
    BigReal x = lo + (hi - lo) * i / kGrid;
    BigReal fx = poly_eval(f, x);
    if (pf.sign() * fx.sign() <= 0) return refine_root(f, px, x, digits);
    px = x;
    pf = fx;
  }
  throw std::domain_error("no sign change over the contact bracket");
}

struct Config {
  DerivedConstants dc;
  EllipseState es;
  BigReal xT, yT;  // yT on the lower ellipse branch
};

Config config_for(const DerivedConstants& dc, const BigReal& eps, const BigReal& r) {
  const int wp = r.digits();
  EllipseState es = ellipse_center(dc, eps, r);
  Polynomial<BigReal> u = build_quartic_u(dc, es, r);
  Polynomial<BigReal> v = build_quartic_v(dc, es, r);
  Polynomial<BigReal> w = build_quartic_w(dc, es, r);
  BigReal zero = r.zero_like();
  std::optional<BigReal> xT;
  try {
    xT = tangent_abscissa_via_top(u, v, w, zero, es.x0, dc.x1, r, wp);
  } catch (const std::domain_error&) {
    BigReal lo = dc.x1 - r;
    if (lo.sign() < 0) lo = zero;
    BigReal hi = es.x0;
    BigReal hi2 = dc.x1 + r;
    if (hi2 < hi) hi = hi2;
    xT = scan_refine(v, lo, hi, wp);
  }
  if (xT->is_zero()) xT = zero;  // normalize a signed zero out of the quadratic formula
  BigReal inner = 1 - (*xT - es.x0) * (*xT - es.x0) / (es.alpha * es.alpha);
  if (inner.sign() < 0) inner = zero;  // rounding noise at the contact point
  BigReal yT = es.y0 - es.beta * sqrt(inner);
  return Config{dc, es, *xT, yT};
}

Config config_at(const TriangleConfig& t, const BigReal& r) {
  DerivedConstants dc = derived_constants(t, r);
  std::vector<BigReal> cands = admissible_eccentricities(t, dc, r);
  if (cands.size() == 1) return config_for(dc, cands.front(), r);
  // several admissible eccentricities: keep the one whose configuration is
  // closest to self-consistent
  std::optional<Config> best;
  std::optional<BigReal> best_res;
  for (const BigReal& e : cands) {
    try {
      Config cfg = config_for(dc, e, r);
      BigReal dx = cfg.xT - dc.x1, dy = cfg.yT - dc.y1;
      BigReal res = abs(sqrt(dx * dx + dy * dy) - r);
      if (!best_res || res < *best_res) {
        best = cfg;
        best_res = res;
      }
    } catch (const std::domain_error&) {
    }
  }
  if (!best) throw std::domain_error("no usable eccentricity at this radius");
  return *best;
}

// Slope-match defect at the contact point. The two implicit slopes are
// compared in cross-multiplied form, which stays defined and well-conditioned
// through the symmetric limit where xT -> x1.
BigReal slope_residual(const Config& c) {
  BigReal ba2 = (c.es.beta * c.es.beta) / (c.es.alpha * c.es.alpha);
  return abs(ba2 * (c.xT - c.es.x0) * (c.yT - c.dc.y1) -
             (c.xT - c.dc.x1) * (c.yT - c.es.y0));
}

}  // namespace

TriangleConfig make_triangle(const BigReal& a, const BigReal& b, const BigReal& c) {
  const int d = std::min(a.digits(), std::min(b.digits(), c.digits()));
  if (a.sign() <= 0 || b.sign() <= 0 || c.sign() <= 0)
    throw std::domain_error("triangle sides must be positive");
  BigReal a2 = a * a;
  BigReal gap = abs(a2 - b * b - c * c);
  if (gap > BigReal(Rational(1, 1000000), d) * a2)
    throw std::domain_error("not a right triangle: a^2 differs from b^2 + c^2 beyond 1e-6 relative");
  return TriangleConfig{a, b, c, sqrt(b * b + c * c), d};
}

DerivedConstants derived_constants(const TriangleConfig& t, const BigReal& r) {
  const BigReal& a = t.a_eff;
  const bool b_wide = cmp(t.b, t.c) >= 0;
  const BigReal& wide = b_wide ? t.b : t.c;
  const BigReal& narrow = b_wide ? t.c : t.b;
  BigReal h = narrow * wide / a;
  BigReal k = (wide * wide - narrow * narrow) / (2 * a);
  BigReal m = narrow / wide;
  BigReal kx = (wide - narrow) / a;
  BigReal ky = (wide + narrow) / a;
  BigReal x1 = kx * r;
  BigReal y1 = ky * r;
  const int d = h.digits();
  BigReal tol = exp10_int(8 - d, d);
  BigReal quarter = a * a / 4;
  if (abs(h * h + k * k - quarter) > tol * quarter)
    throw std::logic_error("altitude identity violated");
  if (abs(kx * kx + ky * ky - 2) > tol * 2)
    throw std::logic_error("bisector direction identity violated");
  return DerivedConstants{h, k, m, x1, y1, kx, ky};
}

EllipseState ellipse_center(const DerivedConstants& dc, const BigReal& eps, const BigReal& r) {
  const int d = std::min(eps.digits(), r.digits());
  BigReal knee = sqrt2_half(d);
  if (!(eps > knee) || !(eps < BigReal(1, d)))
    throw std::domain_error("eccentricity outside (1/sqrt2, 1)");
  BigReal he = dc.h * eps;
  if (!(he > r)) throw std::domain_error("center parametrization singular: h*eps <= r");
  BigReal one(1, d);
  BigReal beta = r / eps;
  BigReal alpha = r / (eps * sqrt(one - eps * eps));
  BigReal y0 = dc.h - beta;
  BigReal x0 = dc.k * (one - r / (he - r));
  if (!dc.k.is_zero()) {
    // the centers trace a rectangular hyperbola: y0*(1 - x0/k) == beta
    BigReal lhs = y0 * (one - x0 / dc.k);
    if (abs(lhs - beta) > exp10_int(8 - d, d) * (1 + abs(beta)))
      throw std::logic_error("center locus identity violated");
  }
  return EllipseState{alpha, beta, eps, x0, y0};
}

Polynomial<BigReal> sextic_coeffs(const TriangleConfig& t, const BigReal& r) {
  const int d = std::min(t.digits, r.digits());
  const BigReal& a = t.a_eff;
  BigReal bc = t.b * t.c;
  BigReal h = bc / a;
  BigReal Q = r / a, R = r / h;
  BigReal Q2 = Q * Q, R2 = R * R;
  BigReal one(1, d), four(4, d);
  BigReal zero = one.zero_like();
  std::vector<BigReal> cs{four * Q2 * R2,
                          zero,
                          -(four * R2),
                          four * R * (one - 2 * Q2),
                          four * (Q2 + R2) - one,
                          -(four * R),
                          one};
  // the same coefficients assembled directly from the side lengths
  BigReal t0 = 2 * r * r / bc;
  BigReal t2 = 2 * a * r / bc;
  std::vector<BigReal> alt{t0 * t0,
                           zero,
                           -(t2 * t2),
                           four * r * (a * a - 2 * r * r) / (a * bc),
                           four * r * r * ((a / bc) * (a / bc) + one / (a * a)) - one,
                           -(four * a * r / bc),
                           one};
  BigReal tol = exp10_int(8 - d, d);
  for (size_t i = 0; i < cs.size(); ++i)
    if (abs(cs[i] - alt[i]) > tol * (1 + abs(cs[i])))
      throw std::logic_error("sextic coefficient forms disagree");
  return Polynomial<BigReal>(std::move(cs));
}

RadiusQuartic quartic_in_r(const TriangleConfig& t, const BigReal& eps) {
  const int d = std::min(t.digits, eps.digits());
  BigReal knee = sqrt2_half(d);
  if (!(eps > knee) || !(eps < BigReal(1, d)))
    throw std::domain_error("eccentricity outside (1/sqrt2, 1)");
  const BigReal& a = t.a_eff;
  BigReal bc = t.b * t.c;
  BigReal h = bc / a;
  BigReal one(1, d);
  BigReal e2 = eps * eps, e3 = e2 * eps, e4 = e2 * e2;
  BigReal om = one - e2;
  BigReal half_bc = bc / 2;
  BigReal a0 = -(half_bc * half_bc * e4 * om);
  BigReal a1 = a * bc * e3 * om;
  BigReal a2 = ((a * a + h * h) * e2 - a * a) * e2;
  BigReal a3 = -(2 * h * e3);
  FormulaAResult fa = quartic_closed_form_A(a3, a2, a1, a0, d);

  // admissible radius: real, positive, and small enough that the ellipse
  // center stays on the altitude side of the foot (r < h*eps/2); ranked by
  // the sextic residual
  BigReal im_tol = exp10_int(8 - d, d);
  BigReal rmax = h * eps / 2;
  std::optional<BigReal> best;
  std::optional<BigReal> best_res;
  for (const BigComplex& z : fa.roots) {
    if (abs(z.im) > im_tol * (1 + abs(z.re))) continue;
    if (z.re.sign() <= 0 || !(z.re < rmax)) continue;
    Polynomial<BigReal> sx = sextic_coeffs(t, z.re);
    BigReal res = abs(poly_eval(sx, eps)) / coeff_scale(sx);
    if (!best_res || res < *best_res) {
      best = z.re;
      best_res = res;
    }
  }
  if (!best) throw std::domain_error("no admissible radius at this eccentricity");
  return RadiusQuartic{Polynomial<BigReal>({a0, a1, a2, a3, one}), fa.roots, *best};
}

Polynomial<BigReal> build_quartic_u(const DerivedConstants& dc, const EllipseState& es,
                                    const BigReal& r) {
  const int d = std::min(es.alpha.digits(), r.digits());
  BigReal one(1, d);
  BigReal K = (es.y0 - dc.y1) * (es.y0 - dc.y1);
  BigReal ai = one / (es.alpha * es.alpha);
  Polynomial<BigReal> cir({r * r - dc.x1 * dc.x1, 2 * dc.x1, -one});
  Polynomial<BigReal> ell({one - es.x0 * es.x0 * ai, 2 * es.x0 * ai, -ai});
  Polynomial<BigReal> inner = Polynomial<BigReal>({K}) + cir - (es.beta * es.beta) * ell;
  Polynomial<BigReal> u = inner * inner - (4 * K) * cir;
  if (u.degree() != 4) throw std::domain_error("contact polynomial degenerated");
  return u;
}

Polynomial<BigReal> build_quartic_v(const DerivedConstants& dc, const EllipseState& es,
                                    const BigReal& r) {
  const int d = std::min(es.alpha.digits(), r.digits());
  if (r.is_zero() && cmp(es.x0, dc.x1) == 0)
    throw std::domain_error("contact polynomial degenerate: point circle at the center ray");
  BigReal one(1, d);
  BigReal e2 = es.eps * es.eps;
  BigReal om = one - e2;
  Polynomial<BigReal> sq0({es.x0 * es.x0, -(2 * es.x0), one});
  Polynomial<BigReal> sq1({dc.x1 * dc.x1, -(2 * dc.x1), one});
  Polynomial<BigReal> bracket = e2 * sq1 + Polynomial<BigReal>({r * r * om});
  Polynomial<BigReal> v = (e2 * om) * (sq0 * bracket) - (r * r) * sq1;
  if (v.degree() != 4) throw std::domain_error("contact polynomial degenerated");
  return v;
}

Polynomial<BigReal> build_quartic_w(const DerivedConstants& dc, const EllipseState& es,
                                    const BigReal& r) {
  const int d = std::min(es.alpha.digits(), r.digits());
  BigReal one(1, d);
  BigReal q = (es.beta * es.beta) / (es.alpha * es.alpha);
  BigReal K = (es.y0 - dc.y1) * (es.y0 - dc.y1);
  Polynomial<BigReal> cir({r * r - dc.x1 * dc.x1, 2 * dc.x1, -one});
  Polynomial<BigReal> lin({dc.x1 - q * es.x0, q - one});
  Polynomial<BigReal> sq1({dc.x1 * dc.x1, -(2 * dc.x1), one});
  Polynomial<BigReal> w = cir * (lin * lin) - K * sq1;
  if (w.degree() != 4) throw std::domain_error("contact polynomial degenerated");
  return w;
}

BigReal tangent_abscissa_via_top(const Polynomial<BigReal>& u, const Polynomial<BigReal>& v,
                                 const Polynomial<BigReal>& w, const BigReal& band_lo,
                                 const BigReal& band_hi, const BigReal& x1, const BigReal& r,
                                 int digits) {
  if (u.degree() != 4 || v.degree() != 4 || w.degree() != 4)
    throw std::domain_error("collapse requires three quartics");
  BigReal rel = exp10_int(10 - digits, digits);
  Polynomial<BigReal> du = poly_derivative(u);
  Polynomial<BigReal> dvw = trim_relative(monic_transform(v) - monic_transform(w), rel);
  if (dvw.is_zero()) throw std::domain_error("difference of contact polynomials vanished");
  long delta = du.degree() - dvw.degree();
  if (delta > 0) dvw = shift_up(dvw, static_cast<size_t>(delta));
  Polynomial<BigReal> quad = trim_relative(monic_transform(du) - monic_transform(dvw), rel);

  std::vector<BigReal> cand;
  if (quad.degree() == 2) {
    const BigReal &qa = quad.c[2], &qb = quad.c[1], &qc = quad.c[0];
    BigReal disc = qb * qb - 4 * qa * qc;
    if (disc.sign() >= 0) {
      BigReal sd = sqrt(disc);
      cand.push_back((-qb + sd) / (2 * qa));
      cand.push_back((-qb - sd) / (2 * qa));
    }
  } else if (quad.degree() == 1) {
    cand.push_back(-(quad.c[0] / quad.c[1]));
  }

  BigReal slack = exp10_int(8 - digits, digits) * (1 + abs(band_hi));
  BigReal disc_slack = 1 + exp10_int(7 - digits, digits);
  std::optional<BigReal> best;
  std::optional<BigReal> best_score;
  BigReal su = coeff_scale(u), sv = coeff_scale(v), sw = coeff_scale(w);
  for (const BigReal& x : cand) {
    if (x < band_lo - slack || x > band_hi + slack) continue;
    if (abs(x - x1) > r * disc_slack) continue;
    BigReal score = abs(poly_eval(u, x)) / su;
    BigReal s2 = abs(poly_eval(v, x)) / sv;
    if (s2 > score) score = s2;
    BigReal s3 = abs(poly_eval(w, x)) / sw;
    if (s3 > score) score = s3;
    if (!best_score || score < *best_score) {
      best = x;
      best_score = score;
    }
  }
  if (!best) throw std::domain_error("no contact abscissa in the admissible band");
  return *best;
}

BigReal ordinate_from_circle(const BigReal& xT, const DerivedConstants& dc, const BigReal& r) {
  const int d = r.digits();
  BigReal dx = xT - dc.x1;
  BigReal inner = r * r - dx * dx;
  if (inner.sign() < 0) {
    if (abs(inner) > exp10_int(8 - d, d) * r * r)
      throw std::domain_error("contact abscissa outside the circle disc");
    inner = r.zero_like();
  }
  return dc.y1 + sqrt(inner);
}

BigReal rho(const TriangleConfig& t, const BigReal& r) {
  if (r.sign() <= 0) throw std::domain_error("radius must be positive");
  Config c = config_at(t, r);
  // the next radius solves |T - rho*(kx, ky)| = rho: a circle centered on the
  // leg bisector through the contact point
  BigReal S = c.dc.kappa_x * c.xT + c.dc.kappa_y * c.yT;
  BigReal P = c.xT * c.xT + c.yT * c.yT;
  BigReal disc = S * S - P;
  if (disc.sign() < 0)
    throw std::domain_error("bisector circle cannot reach the contact point");
  return S - sqrt(disc);
}

SolveReport solve_asymmetric(const TriangleConfig& t, const BigReal& tol, long max_iter) {
  if (tol.sign() <= 0) throw std::domain_error("tolerance must be positive");
  if (max_iter < 1) throw std::domain_error("max_iter must be at least 1");
  const int d0 = t.digits;
  const int wp = d0 + 20;
  TriangleConfig tw =
      make_triangle(t.a.with_digits(wp), t.b.with_digits(wp), t.c.with_digits(wp));
  BigReal wtol = tol.with_digits(wp);

  // seed from the symmetric closed form; at b == c it is already the answer
  BigReal h = tw.b * tw.c / tw.a_eff;
  BigReal r = h * sqrt(BigReal(2, wp)) / solve_symmetric(wp).b_over_r;

  IterationTrace trace;
  trace.radii.push_back(r);
  std::optional<BigReal> prev_step;
  long iters = 0;
  bool converged = false;
  for (long it = 0; it < max_iter; ++it) {
    BigReal rn = rho(tw, r);
    BigReal step = abs(rn - r);
    if (prev_step && step > *prev_step) {
      // a growing step: halve it rather than overshoot
      rn = r + (rn - r) / 2;
      step = abs(rn - r);
      ++trace.damping_activations;
    }
    prev_step = step;
    trace.radii.push_back(rn);
    if (step < wtol * r) {
      r = rn;
      iters = it + 1;
      converged = true;
      break;
    }
    r = rn;
  }
  if (!converged)
    throw NonConvergenceError("fixed-point iteration did not converge within max_iter",
                              std::move(trace));

  Config cfg = config_at(tw, r);
  Polynomial<BigReal> sx = sextic_coeffs(tw, r);
  BigReal dx0 = cfg.xT - cfg.es.x0, dy0 = cfg.yT - cfg.es.y0;
  BigReal dx1 = cfg.xT - cfg.dc.x1, dy1 = cfg.yT - cfg.dc.y1;
  BigReal dist2 = dx1 * dx1 + dy1 * dy1;
  std::map<std::string, BigReal> residuals{
      {"sextic", abs(poly_eval(sx, cfg.es.eps))},
      {"ellipse", abs(dx0 * dx0 / (cfg.es.alpha * cfg.es.alpha) +
                      dy0 * dy0 / (cfg.es.beta * cfg.es.beta) - 1)},
      {"circle", abs(dist2 - r * r)},
      {"distance", abs(sqrt(dist2) - r)},
      {"tangency", slope_residual(cfg)},
  };
  BigReal cap = 10 * wtol;
  for (const auto& [name, value] : residuals)
    if (value > cap)
      throw std::logic_error("converged state fails the " + name +
                             " residual: " + value.to_string(6));

  std::map<std::string, BigReal> res_out;
  for (const auto& [name, value] : residuals) res_out.emplace(name, value.with_digits(d0));
  return SolveReport{
      t,
      r.with_digits(d0),
      cfg.es.eps.with_digits(d0),
      EllipseState{cfg.es.alpha.with_digits(d0), cfg.es.beta.with_digits(d0),
                   cfg.es.eps.with_digits(d0), cfg.es.x0.with_digits(d0),
                   cfg.es.y0.with_digits(d0)},
      cfg.dc.x1.with_digits(d0),
      cfg.dc.y1.with_digits(d0),
      cfg.xT.with_digits(d0),
      cfg.yT.with_digits(d0),
      iters,
      trace.damping_activations,
      std::move(res_out)};
}

DerivativeScan derivative_quartic_demo(const TriangleConfig& t, const BigReal& r) {
  const int wp = r.digits();
  Config cfg = config_at(t, r);
  Polynomial<BigReal> sx = sextic_coeffs(t, r);
  // the linear coefficient vanishes identically, so the derivative splits off
  // one factor of the variable; what remains is a quartic
  std::vector<BigReal> dq;
  dq.reserve(5);
  for (size_t p = 0; p + 2 < sx.c.size(); ++p)
    dq.push_back(static_cast<long>(p + 2) * sx.c[p + 2]);
  Polynomial<BigReal> quartic(std::move(dq));
  BigReal value = poly_eval(quartic, cfg.es.eps);
  BigReal scale = coeff_scale(quartic);

  Polynomial<Rational> f = sextic_rational(t, r);
  Rational bound(1);
  const Rational& lead = f.c.back();
  for (size_t i = 0; i + 1 < f.c.size(); ++i) {
    Rational mag = abs(f.c[i] / lead);
    if (mag > bound) bound = mag;
  }
  bound += 1;
  long n = sturm_count(f, -bound, bound);

  BigReal deriv = poly_eval(poly_derivative(sx), cfg.es.eps);
  bool simple = abs(deriv) > exp10_int(6 - wp, wp) * coeff_scale(sx);
  return DerivativeScan{std::move(quartic), cfg.es.eps, value, scale, n, simple};
}

}  // namespace overtop

#include "overtop/closed_form.hpp"

#include <stdexcept>

namespace overtop {

namespace {

BigComplex ccbrt(const BigComplex& z) {
  if (z.im.is_zero()) return {cbrt(z.re), z.re.zero_like()};
  BigReal r = cabs(z);
  BigReal th = atan2(z.im, z.re) / 3;
  BigReal m = cbrt(r);
  return {m * cos(th), m * sin(th)};
}

}  // namespace

CubicSolution solve_depressed_cubic(const BigReal& gamma, const BigReal& delta, int digits) {
  const int wp = digits + 20;
  BigReal g = gamma.with_digits(wp), d = delta.with_digits(wp);
  BigReal half_d = d / 2, third_g = g / 3;
  BigReal disc = half_d * half_d + third_g * third_g * third_g;
  std::vector<BigComplex> roots;
  BigReal zero = g.zero_like();
  if (disc.sign() >= 0) {
    BigReal sq = sqrt(disc);
    BigReal u = cbrt(-half_d + sq);
    BigReal v = cbrt(-half_d - sq);
    BigReal real_root = u + v;
    BigReal re2 = -real_root / 2;
    BigReal im2 = (u - v) * sqrt(BigReal(3, wp)) / 2;
    roots.push_back({real_root, zero});
    roots.push_back({re2, im2});
    roots.push_back({re2, -im2});
    CubicSolution out{roots, real_root.with_digits(digits), disc.with_digits(digits)};
    for (auto& r : out.roots) r = {r.re.with_digits(digits), r.im.with_digits(digits)};
    return out;
  }
  // three real roots: z = 2A cos t with cos(3t) = -delta/(2A^3), A = sqrt(-gamma/3)
  BigReal A = sqrt(-third_g);
  BigReal c3t = -half_d / (A * A * A);
  if (c3t > BigReal(1, wp)) c3t = BigReal(1, wp);
  if (c3t < BigReal(-1, wp)) c3t = BigReal(-1, wp);
  BigReal phi = acos(c3t);
  BigReal two_pi = 2 * BigReal::pi(wp);
  for (int k = 0; k < 3; ++k) {
    BigReal t = (phi + k * two_pi) / 3;
    roots.push_back({2 * A * cos(t), zero});
  }
  CubicSolution out{roots, roots[0].re.with_digits(digits), disc.with_digits(digits)};
  for (auto& r : out.roots) r = {r.re.with_digits(digits), r.im.with_digits(digits)};
  return out;
}

CubicSolution solve_monic_cubic(const BigReal& c2, const BigReal& c1, const BigReal& c0,
                                int digits) {
  const int wp = digits + 20;
  BigReal b2 = c2.with_digits(wp), b1 = c1.with_digits(wp), b0 = c0.with_digits(wp);
  BigReal gamma = b1 - b2 * b2 / 3;
  BigReal delta = b0 - b2 * b1 / 3 + 2 * b2 * b2 * b2 / 27;
  CubicSolution dep = solve_depressed_cubic(gamma, delta, digits);
  BigReal shift = (b2 / 3).with_digits(digits);
  for (auto& r : dep.roots) r.re = r.re - shift;
  dep.real_root = dep.real_root - shift;
  return dep;
}

QuarticSolution solve_quartic_ferrari(const BigReal& Cin, const BigReal& Din,
                                      const BigReal& Ein, const BigReal& shift, int digits) {
  const int wp = digits + 20;
  BigReal C = Cin.with_digits(wp), D = Din.with_digits(wp), E = Ein.with_digits(wp);
  BigReal sh = shift.with_digits(wp);
  BigReal zero = C.zero_like();
  BigReal scale = BigReal(1, wp);
  for (const BigReal* v : {&C, &D, &E})
    if (abs(*v) > scale) scale = abs(*v);
  QuarticSolution out{{}, zero.with_digits(digits), {}};

  auto push_quad_roots = [&](const BigReal& lin, const BigReal& cst, int tag) {
    // xi^2 + lin*xi + cst = 0
    BigReal disc = lin * lin - 4 * cst;
    if (disc.sign() >= 0) {
      BigReal sq = sqrt(disc);
      out.roots.push_back({(-lin + sq) / 2, zero});
      out.roots.push_back({(-lin - sq) / 2, zero});
    } else {
      BigReal sq = sqrt(-disc);
      out.roots.push_back({-lin / 2, sq / 2});
      out.roots.push_back({-lin / 2, -sq / 2});
    }
    out.branch_log.push_back(tag);
    out.branch_log.push_back(tag);
  };

  BigReal tiny = exp10_int(2 - wp, wp) * scale;
  if (abs(D) <= tiny) {
    // biquadratic in xi^2
    BigReal disc = C * C - 4 * E;
    BigComplex y1{zero, zero}, y2{zero, zero};
    if (disc.sign() >= 0) {
      BigReal sq = sqrt(disc);
      y1 = {(-C + sq) / 2, zero};
      y2 = {(-C - sq) / 2, zero};
    } else {
      BigReal sq = sqrt(-disc);
      y1 = {-C / 2, sq / 2};
      y2 = {-C / 2, -sq / 2};
    }
    for (const BigComplex& y : {y1, y2}) {
      BigComplex s = csqrt(y);
      out.roots.push_back(s);
      out.roots.push_back({-s.re, -s.im});
      out.branch_log.push_back(-1);
      out.branch_log.push_back(-1);
    }
  } else {
    BigReal c = zero, d = zero, e = zero;
    resolvent_cubic(C, D, E, c, d, e);
    CubicSolution res = solve_monic_cubic(c, d, e, wp);
    BigReal im_tol = exp10_int(6 - wp, wp) * (1 + abs(res.real_root));
    bool found = false;
    BigReal zeta = zero, W = zero;
    // the designated real root first, then any other real resolvent root
    std::vector<BigReal> zetas{res.real_root.with_digits(wp)};
    for (const auto& r : res.roots)
      if (abs(r.im) <= im_tol && abs(r.re - res.real_root) > im_tol)
        zetas.push_back(r.re.with_digits(wp));
    for (const BigReal& z : zetas) {
      BigReal wsq = C + 2 * z;
      if (wsq > tiny) {
        zeta = z;
        W = sqrt(wsq);
        found = true;
        break;
      }
    }
    if (!found)
      throw std::domain_error(
          "ferrari: sqrt(C + 2 zeta) not real for any real resolvent root");
    out.resolvent_zeta = zeta.with_digits(digits);
    BigReal t = D / (2 * W);
    push_quad_roots(-W, C + zeta + t, 0);
    push_quad_roots(W, C + zeta - t, 1);
  }

  // verify on the depressed quartic, then undo the shift
  BigReal bound = exp10_int(6 - digits, wp) * scale;
  for (auto& r : out.roots) {
    BigComplex x2 = cmul(r, r);
    BigComplex val = cadd(cmul(x2, x2), {C * x2.re, C * x2.im});
    val = cadd(val, {D * r.re, D * r.im});
    val = cadd(val, {E, zero});
    if (cabs(val) > bound)
      throw std::runtime_error("ferrari: root residual exceeds tolerance");
    r = {(r.re - sh).with_digits(digits), r.im.with_digits(digits)};
  }
  return out;
}

std::vector<BigComplex> solve_monic_quartic(const BigReal& a3, const BigReal& a2,
                                            const BigReal& a1, const BigReal& a0,
                                            int digits) {
  const int wp = digits + 20;
  auto dep = depress_quartic(a3.with_digits(wp), a2.with_digits(wp), a1.with_digits(wp),
                             a0.with_digits(wp));
  return solve_quartic_ferrari(dep.C, dep.D, dep.E, dep.shift, digits).roots;
}

FormulaAResult quartic_closed_form_A(const BigReal& a3in, const BigReal& a2in,
                                     const BigReal& a1in, const BigReal& a0in, int digits) {
  const int wp = digits + 20;
  BigReal a3 = a3in.with_digits(wp), a2 = a2in.with_digits(wp);
  BigReal a1 = a1in.with_digits(wp), a0 = a0in.with_digits(wp);
  BigReal zero = a3.zero_like();

  BigReal A = 2 * a2 * a2 * a2 +
              9 * (3 * (a1 * a1 + a0 * a3 * a3) - (8 * a0 + a1 * a3) * a2);
  BigReal B = a2 * a2 + 3 * (4 * a0 - a1 * a3);
  BigReal disc = A * A - 4 * B * B * B;

  BigComplex C{zero, zero};
  if (disc.sign() >= 0) C = {cbrt(A + sqrt(disc)), zero};
  else C = ccbrt({A, sqrt(-disc)});

  BigComplex czero{zero, zero};
  FormulaAResult out{{}, A.with_digits(digits), B.with_digits(digits),
                     czero, czero, czero, czero, false};

  BigReal size = 1 + abs(a3) + abs(a2) + abs(a1) + abs(a0);
  BigReal small = exp10_int(-(digits / 2), wp);

  auto fallback = [&]() {
    out.fell_back = true;
    out.roots = solve_monic_quartic(a3, a2, a1, a0, digits);
    out.C = {C.re.with_digits(digits), C.im.with_digits(digits)};
    out.D = {zero.with_digits(digits), zero.with_digits(digits)};
    out.E = out.D;
    out.F = out.D;
    return out;
  };

  if (cabs(C) <= small * size) return fallback();

  BigReal cbrt2 = cbrt(BigReal(2, wp));
  BigComplex D = cdiv({cbrt2 * B / 3, zero}, C);
  BigComplex c3 = {C.re / (3 * cbrt2), C.im / (3 * cbrt2)};  // C / (3 cbrt(2))
  BigComplex E = cadd(D, {a3 * a3 / 4 - 2 * a2 / 3, zero});
  BigComplex G1 = csqrt(cadd(c3, E));
  if (cabs(G1) <= small * size) return fallback();

  BigComplex F = cdiv({a2 * a3 - 2 * a1 - a3 * a3 * a3 / 4, zero}, G1);
  BigComplex inner = csub(csub({a3 * a3 / 2 - 4 * a2 / 3, zero}, c3), D);

  BigComplex h{-a3 / 4, zero};
  BigComplex sp = csqrt(cadd(inner, F));
  BigComplex sm = csqrt(csub(inner, F));
  BigComplex half_g1 = {G1.re / 2, G1.im / 2};
  auto half = [](const BigComplex& z) { return BigComplex{z.re / 2, z.im / 2}; };
  out.roots.push_back(cadd(cadd(h, half_g1), half(sp)));
  out.roots.push_back(csub(cadd(h, half_g1), half(sp)));
  out.roots.push_back(cadd(csub(h, half_g1), half(sm)));
  out.roots.push_back(csub(csub(h, half_g1), half(sm)));

  for (auto& r : out.roots) r = {r.re.with_digits(digits), r.im.with_digits(digits)};
  out.C = {C.re.with_digits(digits), C.im.with_digits(digits)};
  out.D = {D.re.with_digits(digits), D.im.with_digits(digits)};
  out.E = {E.re.with_digits(digits), E.im.with_digits(digits)};
  out.F = {F.re.with_digits(digits), F.im.with_digits(digits)};
  return out;
}

}  // namespace overtop

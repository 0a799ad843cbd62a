// Randomized property suites. Every case seeds its own generator with a fixed
// constant, so the whole binary is deterministic run to run.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "overtop/asym.hpp"
#include "overtop/closed_form.hpp"
#include "overtop/geom_oracle.hpp"
#include "overtop/poly.hpp"
#include "overtop/rational.hpp"
#include "overtop/top.hpp"

using namespace overtop;

namespace {

BigReal br(const char* s, int digits) { return BigReal::from_string(s, digits); }

using Rng = std::mt19937_64;

long rnd_long(Rng& g, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(g);
}

// the two-integer constructor does not reduce; gmp comparisons need lowest terms
Rational make_rat(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// uniform numerator over [-num_max, num_max], denominator over [1, den_max]
Rational rnd_rat(Rng& g, long num_max, long den_max) {
  return make_rat(rnd_long(g, -num_max, num_max), rnd_long(g, 1, den_max));
}

Rational rnd_rat_nonzero(Rng& g, long num_max, long den_max) {
  for (;;) {
    Rational q = rnd_rat(g, num_max, den_max);
    if (q != 0) return q;
  }
}

Polynomial<Rational> rnd_poly(Rng& g, int deg, long num_max, long den_max) {
  std::vector<Rational> c(static_cast<size_t>(deg) + 1);
  for (int i = 0; i < deg; ++i) c[static_cast<size_t>(i)] = rnd_rat(g, num_max, den_max);
  c[static_cast<size_t>(deg)] = rnd_rat_nonzero(g, num_max, den_max);
  return Polynomial<Rational>(std::move(c));
}

Polynomial<Rational> linear_factor(const Rational& root) {
  return Polynomial<Rational>({-root, Rational(1)});
}

Polynomial<Rational> pow_factor(const Rational& root, int mu) {
  Polynomial<Rational> f({Rational(1)});
  for (int i = 0; i < mu; ++i) f = f * linear_factor(root);
  return f;
}

// Distinct real roots of a square-free rational polynomial inside (lo, hi),
// isolated by Sturm bisection and refined to the requested precision.
std::vector<BigReal> isolate_roots(const Polynomial<Rational>& f, Rational lo, Rational hi,
                                   int digits) {
  for (int g = 0; g < 8 && poly_eval(f, lo) == 0; ++g) lo -= Rational(1, 1000000007);
  for (int g = 0; g < 8 && poly_eval(f, hi) == 0; ++g) hi += Rational(1, 1000000007);
  std::vector<std::pair<Rational, Rational>> ready;
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
    for (int g = 0; g < 8 && poly_eval(f, mid) == 0; ++g) mid += (wb - wa) / 257;
    work.emplace_back(wa, mid);
    work.emplace_back(mid, wb);
  }
  Polynomial<BigReal> fb = to_bigreal(f, digits);
  std::vector<BigReal> out;
  for (auto& [ra, rb] : ready) {
    BigReal a(ra, digits), b(rb, digits);
    if (poly_eval(fb, a).sign() * poly_eval(fb, b).sign() > 0) continue;
    out.push_back(refine_root(fb, a, b, digits));
  }
  std::sort(out.begin(), out.end(), [](const BigReal& x, const BigReal& y) { return x < y; });
  return out;
}

// Eccentricities in (1/sqrt2, 1) consistent with the triangle at radius r,
// recovered from the public sextic coefficients alone.
std::vector<BigReal> band_eccentricities(const TriangleConfig& t, const BigReal& r) {
  const int d = t.digits;
  Polynomial<BigReal> fb = sextic_coeffs(t, r);
  std::vector<Rational> c;
  for (const auto& v : fb.c) c.push_back(v.to_rational_exact());
  Polynomial<Rational> f{std::move(c)};
  BigReal knee = 1 / sqrt(BigReal(2, d));
  Rational lo = (knee - exp10_int(4 - d, d)).to_rational_exact();
  BigReal h = t.b * t.c / t.a_eff;
  std::vector<BigReal> out;
  for (const BigReal& e : isolate_roots(f, lo, Rational(1), d))
    if (e > knee && (h * e - r).sign() > 0) out.push_back(e);
  return out;
}

BigReal quartic_value(const std::vector<BigReal>& coeff, const BigComplex& z) {
  BigReal zero = z.re.zero_like();
  BigComplex acc{coeff.back(), zero};
  for (size_t i = coeff.size() - 1; i-- > 0;) acc = cadd(cmul(acc, z), BigComplex{coeff[i], zero});
  return cabs(acc);
}

BigReal min_distance(const BigComplex& z, const std::vector<BigComplex>& pool) {
  std::optional<BigReal> best;
  for (const auto& w : pool) {
    BigReal d = cabs(csub(z, w));
    if (!best || d < *best) best = d;
  }
  return *best;
}

TriangleConfig rnd_triangle(Rng& g, int digits) {
  // wider leg in [1/2, 2], ratio narrow/wide in [0.42, 0.98]
  BigReal wide(make_rat(rnd_long(g, 50, 200), 100), digits);
  BigReal narrow = wide * BigReal(make_rat(rnd_long(g, 42, 98), 100), digits);
  if (rnd_long(g, 0, 1)) std::swap(wide, narrow);
  return make_triangle(sqrt(wide * wide + narrow * narrow), wide, narrow);
}

}  // namespace

TEST_CASE("surd field axioms on random triples") {
  Rng g(0x51a11);
  for (int it = 0; it < 300; ++it) {
    Surd2 x(rnd_rat(g, 50, 12), rnd_rat(g, 50, 12));
    Surd2 y(rnd_rat(g, 50, 12), rnd_rat(g, 50, 12));
    Surd2 z(rnd_rat(g, 50, 12), rnd_rat(g, 50, 12));
    CHECK((x + y) + z == x + (y + z));
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    if (sign(x) != 0) CHECK(x * inverse(x) == Surd2(1));
  }
}

TEST_CASE("product evaluation and degree on random polynomials") {
  Rng g(0x9017);
  for (int it = 0; it < 500; ++it) {
    Polynomial<Rational> f = rnd_poly(g, static_cast<int>(rnd_long(g, 0, 6)), 9, 6);
    Polynomial<Rational> h = rnd_poly(g, static_cast<int>(rnd_long(g, 0, 6)), 9, 6);
    Rational x = rnd_rat(g, 12, 5);
    Polynomial<Rational> fh = f * h;
    CHECK(poly_eval(fh, x) == poly_eval(f, x) * poly_eval(h, x));
    CHECK(fh.degree() == f.degree() + h.degree());
  }
}

TEST_CASE("sturm counts every distinct real root over the coefficient bound") {
  Rng g(0x57u);
  for (int it = 0; it < 200; ++it) {
    // distinct rational roots, some repeated as factors, plus an optional
    // positive-definite quadratic that contributes nothing real
    long want = rnd_long(g, 1, 4);
    std::vector<Rational> roots;
    while (static_cast<long>(roots.size()) < want) {
      Rational r = rnd_rat(g, 8, 4);
      if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
    }
    Polynomial<Rational> f({rnd_rat_nonzero(g, 5, 3)});
    for (const Rational& r : roots) f = f * pow_factor(r, static_cast<int>(rnd_long(g, 1, 2)));
    if (rnd_long(g, 0, 1))
      f = f * Polynomial<Rational>({Rational(1) + rnd_rat(g, 4, 4) * rnd_rat(g, 4, 4),
                                    rnd_rat(g, 4, 4) * 2, Rational(1)});
    Rational bound(1);
    for (const Rational& c : f.c) {
      Rational m = abs(c / f.lead());
      if (m > bound) bound = m;
    }
    bound += 1;
    CHECK(sturm_count(f, -bound, bound) == static_cast<long>(roots.size()));
  }
}

TEST_CASE("collapse preserves constructed shared roots") {
  Rng g(0xde17au);
  for (int it = 0; it < 1000; ++it) {
    Rational r = rnd_rat(g, 9, 9);
    int mu = static_cast<int>(rnd_long(g, 1, 3));
    int cof_s = static_cast<int>(rnd_long(g, 0, 8 - mu));
    int cof_t = static_cast<int>(rnd_long(g, 0, cof_s));
    OverlapSpec<Rational> S{pow_factor(r, mu) * rnd_poly(g, cof_s, 9, 6), mu, "S"};
    OverlapSpec<Rational> T{pow_factor(r, mu) * rnd_poly(g, cof_t, 9, 6), mu, "T"};
    Polynomial<Rational> d = top_delta(S, T);
    CHECK(poly_eval(d, r) == 0);
    CHECK(d.degree() <= S.poly.degree() - mu);
  }
}

TEST_CASE("equal root-sum cofactors drop an extra degree") {
  Rng g(0x5e7u);
  for (int it = 0; it < 200; ++it) {
    Rational r = rnd_rat(g, 9, 6);
    int extra = static_cast<int>(rnd_long(g, 2, 3));
    std::vector<Rational> s, t;
    Rational shift = rnd_rat_nonzero(g, 6, 4);
    for (int i = 0; i < extra; ++i) s.push_back(rnd_rat(g, 9, 6));
    // same sum, different roots: push the first one up, the last one down
    t = s;
    t.front() += shift;
    t.back() -= shift;
    Polynomial<Rational> S = rnd_rat_nonzero(g, 5, 3) * linear_factor(r);
    Polynomial<Rational> T = rnd_rat_nonzero(g, 5, 3) * linear_factor(r);
    for (const Rational& x : s) S = S * linear_factor(x);
    for (const Rational& x : t) T = T * linear_factor(x);
    Polynomial<Rational> d = lop1_delta(S, T);
    CHECK(poly_eval(d, r) == 0);
    CHECK(d.degree() < S.degree() - 1);
  }
}

TEST_CASE("altitude foot identity on random right triangles") {
  Rng g(0xa17u);
  const int d = 40;
  BigReal tol = exp10_int(-12, d);
  for (int it = 0; it < 1000; ++it) {
    BigReal b(make_rat(rnd_long(g, 1, 1000), rnd_long(g, 1, 100)), d);
    BigReal c(make_rat(rnd_long(g, 1, 1000), rnd_long(g, 1, 100)), d);
    TriangleConfig t = make_triangle(sqrt(b * b + c * c), b, c);
    DerivedConstants dc = derived_constants(t, t.b * t.c / t.a_eff / 10);
    BigReal quarter = t.a_eff * t.a_eff / 4;
    CHECK(abs(dc.h * dc.h + dc.k * dc.k - quarter) <= tol * quarter);
  }
}

TEST_CASE("closed-form quartic roots agree with direct refinement") {
  Rng g(0xfe44a41u);
  const int d = 40;
  BigReal match = exp10_int(-25, d);
  BigReal res_bound = exp10_int(6 - d, d);
  BigReal real_cut = exp10_int(-20, d);
  for (int it = 0; it < 1000; ++it) {
    Rational a3, a2, a1, a0;
    Polynomial<Rational> f;
    do {
      a3 = rnd_rat(g, 12, 4);
      a2 = rnd_rat(g, 12, 4);
      a1 = rnd_rat(g, 12, 4);
      a0 = rnd_rat(g, 12, 4);
      f = Polynomial<Rational>({a0, a1, a2, a3, Rational(1)});
    } while (square_free_part(f).degree() != 4);

    std::vector<BigReal> coeff{BigReal(a0, d), BigReal(a1, d), BigReal(a2, d), BigReal(a3, d),
                               BigReal(1, d)};
    BigReal scale(1, d);
    for (const auto& c : coeff)
      if (abs(c) > scale) scale = abs(c);

    std::vector<BigComplex> ferrari =
        solve_monic_quartic(coeff[3], coeff[2], coeff[1], coeff[0], d);
    FormulaAResult fa = quartic_closed_form_A(coeff[3], coeff[2], coeff[1], coeff[0], d);
    REQUIRE(ferrari.size() == 4);
    REQUIRE(fa.roots.size() == 4);

    for (const auto& z : ferrari) CHECK(quartic_value(coeff, z) <= res_bound * scale);
    for (const auto& z : fa.roots) CHECK(quartic_value(coeff, z) <= res_bound * scale);
    // the two radical routes name the same four points
    for (const auto& z : fa.roots) CHECK(min_distance(z, ferrari) <= match);
    for (const auto& z : ferrari) CHECK(min_distance(z, fa.roots) <= match);

    // real roots against exact isolation plus refinement
    Rational bound(1);
    for (const Rational& c : f.c) {
      Rational m = abs(c);
      if (m > bound) bound = m;
    }
    bound += 1;
    std::vector<BigReal> oracle = isolate_roots(f, -bound, bound, 60);
    std::vector<BigReal> got;
    for (const auto& z : ferrari)
      if (abs(z.im) <= real_cut * (1 + abs(z.re))) got.push_back(z.re);
    std::sort(got.begin(), got.end(), [](const BigReal& x, const BigReal& y) { return x < y; });
    REQUIRE(got.size() == oracle.size());
    for (size_t i = 0; i < got.size(); ++i) CHECK(abs(got[i] - oracle[i]) <= match);
  }
}

TEST_CASE("director circle identity on random tangent corners") {
  Rng g(0xd14ec7u);
  const int d = 40;
  BigReal tol = exp10_int(-12, d);
  for (int it = 0; it < 1000; ++it) {
    BigReal alpha(make_rat(rnd_long(g, 20, 300), 100), d);
    BigReal beta = alpha * BigReal(make_rat(rnd_long(g, 5, 98), 100), d);
    BigReal m(make_rat(rnd_long(g, 5, 95), 100), d);
    Point2 a = corner_A(alpha, beta, m);
    CHECK(director_circle_check(alpha, beta, a.x, a.y) <= tol);
  }
}

TEST_CASE("solver, frame oracle, and collapse agree on random triangles") {
  Rng g(0x0bacca5u);
  const int d = 40;
  BigReal tol8 = exp10_int(-8, d);
  BigReal tol9 = exp10_int(-9, d);
  for (int it = 0; it < 100; ++it) {
    TriangleConfig t = rnd_triangle(g, d);
    SolveReport rep = solve_asymmetric(t, exp10_int(-10, d), 400);

    for (const auto& [key, val] : rep.residuals) {
      INFO("residual ", key);
      CHECK(val <= tol8);
    }

    // independent tangent-frame derivation, mapped by the half-turn about the
    // corner
    BigReal wide = cmp(t.b, t.c) >= 0 ? t.b : t.c;
    BigReal narrow = cmp(t.b, t.c) >= 0 ? t.c : t.b;
    BigReal m = narrow / wide;
    const BigReal& alpha = rep.ellipse.alpha;
    const BigReal& beta = rep.ellipse.beta;
    Point2 a = corner_A(alpha, beta, m);
    CHECK(abs(a.x - rep.ellipse.x0) <= tol8);
    CHECK(abs(a.y - rep.ellipse.y0) <= tol8);
    CHECK(director_circle_check(alpha, beta, rep.ellipse.x0, rep.ellipse.y0) <= tol8);
    BisectorLine bl = bisector_and_c1(alpha, beta, m, rep.r);
    CHECK(abs(a.x - bl.c1.x - rep.x1) <= tol8);
    CHECK(abs(a.y - bl.c1.y - rep.y1) <= tol8);
    Point2 tp = tangent_point_B(alpha, beta, m);
    BigReal gx = a.x - tp.x, gy = a.y - tp.y;
    CHECK(abs(gy - m * gx) <= tol8);
    BigReal ell = (gx - rep.ellipse.x0) * (gx - rep.ellipse.x0) / (alpha * alpha) +
                  (gy - rep.ellipse.y0) * (gy - rep.ellipse.y0) / (beta * beta) - 1;
    CHECK(abs(ell) <= tol8);
    Point2 p1 = tangent_point_B_eps(m, rep.eps, rep.r);
    CHECK(abs(tp.x - p1.x) <= tol8);
    CHECK(abs(tp.y - p1.y) <= tol8);

    // quadratic collapse against a direct sign-change refinement of one
    // contact polynomial over the admissible band
    DerivedConstants dc = derived_constants(t, rep.r);
    Polynomial<BigReal> qu = build_quartic_u(dc, rep.ellipse, rep.r);
    Polynomial<BigReal> qv = build_quartic_v(dc, rep.ellipse, rep.r);
    Polynomial<BigReal> qw = build_quartic_w(dc, rep.ellipse, rep.r);
    BigReal zero = rep.r.zero_like();
    BigReal xt = tangent_abscissa_via_top(qu, qv, qw, zero, rep.ellipse.x0, dc.x1, rep.r, d);
    CHECK(abs(xt - rep.xT) <= tol9);

    BigReal lo = dc.x1 - rep.r;
    if (lo.sign() < 0) lo = zero;
    BigReal hi = dc.x1 + rep.r;
    if (rep.ellipse.x0 < hi) hi = rep.ellipse.x0;
    const int grid = 256;
    std::optional<BigReal> nearest;
    BigReal px = lo, pf = poly_eval(qv, px);
    for (int i = 1; i <= grid; ++i) {
      BigReal x = lo + (hi - lo) * i / grid;
      BigReal fx = poly_eval(qv, x);
      if (pf.sign() * fx.sign() <= 0) {
        BigReal root = refine_root(qv, px, x, d);
        if (!nearest || abs(root - xt) < abs(*nearest - xt)) nearest = root;
      }
      px = x;
      pf = fx;
    }
    REQUIRE(nearest.has_value());
    CHECK(abs(*nearest - xt) <= tol9);
  }
}

TEST_CASE("corner stays on the director circle off the solved radius") {
  Rng g(0x2553u);
  const int d = 40;
  BigReal tol = exp10_int(-25, d);
  for (int it = 0; it < 100; ++it) {
    TriangleConfig t = rnd_triangle(g, d);
    BigReal h = t.b * t.c / t.a_eff;
    BigReal r = h * BigReal(make_rat(rnd_long(g, 190, 250), 1000), d);
    std::vector<BigReal> eccs = band_eccentricities(t, r);
    REQUIRE(!eccs.empty());
    DerivedConstants dc = derived_constants(t, r);
    for (const BigReal& e : eccs) {
      EllipseState es = ellipse_center(dc, e, r);
      BigReal lhs = es.alpha * es.alpha + es.beta * es.beta;
      BigReal rhs = es.x0 * es.x0 + es.y0 * es.y0;
      CHECK(abs(lhs - rhs) <= tol * lhs);
    }
  }
}

TEST_CASE("radius quartic inverts the eccentricity sextic") {
  Rng g(0x4994u);
  const int d = 40;
  BigReal tol = exp10_int(-10, d);
  for (int it = 0; it < 100; ++it) {
    TriangleConfig t = rnd_triangle(g, d);
    BigReal eps(make_rat(rnd_long(g, 800, 985), 1000), d);
    BigReal r = quartic_in_r(t, eps).admissible;
    std::vector<BigReal> eccs = band_eccentricities(t, r);
    REQUIRE(!eccs.empty());
    BigReal back = eccs.front();
    for (const BigReal& e : eccs)
      if (abs(e - eps) < abs(back - eps)) back = e;
    CHECK(abs(back - eps) <= tol);
  }
}

TEST_CASE("single crossing of the inscribed and bisector radius curves") {
  const int d = 40;
  TriangleConfig t = make_triangle(br("2.8939431", d), br("1.0591663", d), br("2.6931530", d));
  const int n = 21;
  std::vector<BigReal> rin, rout;
  for (int i = 0; i < n; ++i) {
    BigReal eps = br("0.93", d) + (br("0.99", d) - br("0.93", d)) * i / (n - 1);
    BigReal r = quartic_in_r(t, eps).admissible;
    rin.push_back(r);
    rout.push_back(rho(t, r));
  }
  int crossings = 0;
  for (int i = 0; i < n; ++i) {
    if (i > 0) {
      CHECK(rin[static_cast<size_t>(i)] < rin[static_cast<size_t>(i) - 1]);
      CHECK(rout[static_cast<size_t>(i)] > rout[static_cast<size_t>(i) - 1]);
      BigReal f0 = rout[static_cast<size_t>(i) - 1] - rin[static_cast<size_t>(i) - 1];
      BigReal f1 = rout[static_cast<size_t>(i)] - rin[static_cast<size_t>(i)];
      if (f0.sign() != f1.sign()) ++crossings;
    }
  }
  CHECK(crossings == 1);
}

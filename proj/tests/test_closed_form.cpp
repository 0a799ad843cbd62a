#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "overtop/closed_form.hpp"

using namespace overtop;

namespace {

// monic quartic with a double tangency structure: e^4 + 2p e^3 - e^2 - 2p e + p^2
// at p = sqrt(2) - 1.  Everything about it stays inside Q(sqrt 2).
const Surd2 kA3{Rational(-2), Rational(2)};
const Surd2 kA2{Rational(-1), Rational(0)};
const Surd2 kA1{Rational(2), Rational(-2)};
const Surd2 kA0{Rational(3), Rational(-2)};

// its four roots, frozen from an independent 60-digit evaluation
const char* kRootReal1 = "0.947662041495680138356317789100662277390862561553887502807339";
const char* kRootReal2 = "0.176249242466928719790698695949943685749990962745929327784594";
const char* kRootCxRe = "-0.976169204354399477875196966735001060140098637526856488472646";
const char* kRootCxIm = "0.272624531550711208231067952109543612348039824195144035700381";

BigReal br(const char* s, int digits) { return BigReal::from_string(s, digits); }

bool close(const BigReal& a, const BigReal& b, const char* tol) {
  int d = std::min(a.digits(), b.digits());
  return abs(a - b) <= BigReal::from_string(tol, d);
}

// smallest distance from z to any entry of want, pairing greedily
bool matches_root_set(std::vector<BigComplex> got, std::vector<BigComplex> want,
                      const char* tol) {
  if (got.size() != want.size()) return false;
  for (const auto& w : want) {
    auto best = got.end();
    for (auto it = got.begin(); it != got.end(); ++it) {
      if (best == got.end() ||
          cabs(csub(*it, w)) < cabs(csub(*best, w)))
        best = it;
    }
    if (best == got.end()) return false;
    BigReal dist = cabs(csub(*best, w));
    if (!(dist <= BigReal::from_string(tol, dist.digits()))) return false;
    got.erase(best);
  }
  return true;
}

}  // namespace

TEST_CASE("quartic depression over the rationals") {
  auto d = depress_quartic<Rational>(Rational(4), Rational(0), Rational(0), Rational(0));
  CHECK(d.C == Rational(-6));
  CHECK(d.D == Rational(8));
  CHECK(d.E == Rational(-3));
  CHECK(d.shift == Rational(1));

  // already depressed input passes through untouched
  auto e = depress_quartic<Rational>(Rational(0), Rational(7, 3), Rational(-2), Rational(5));
  CHECK(e.C == Rational(7, 3));
  CHECK(e.D == Rational(-2));
  CHECK(e.E == Rational(5));
  CHECK(e.shift == Rational(0));
}

TEST_CASE("quartic depression stays exact over Q(sqrt 2)") {
  auto d = depress_quartic<Surd2>(kA3, kA2, kA1, kA0);
  CHECK(d.C == Surd2(Rational(-11, 2), Rational(3)));
  CHECK(d.D == Surd2(Rational(-6), Rational(4)));
  CHECK(d.E == Surd2(Rational(33, 16), Rational(-5, 4)));
  CHECK(d.shift == Surd2(Rational(-1, 2), Rational(1, 2)));
}

TEST_CASE("resolvent cubic coefficients") {
  Rational c(0), dd(0), e(0);
  resolvent_cubic<Rational>(Rational(0), Rational(0), Rational(0), c, dd, e);
  CHECK(c == 0);
  CHECK(dd == 0);
  CHECK(e == 0);

  resolvent_cubic<Rational>(Rational(1), Rational(0), Rational(1), c, dd, e);
  CHECK(c == Rational(5, 2));
  CHECK(dd == Rational(1));
  CHECK(e == Rational(0));

  auto dep = depress_quartic<Surd2>(kA3, kA2, kA1, kA0);
  Surd2 sc, sd, se;
  resolvent_cubic<Surd2>(dep.C, dep.D, dep.E, sc, sd, se);
  CHECK(sc == Surd2(Rational(-55, 4), Rational(15, 2)));
  CHECK(sd == Surd2(Rational(1511, 16), Rational(-259, 4)));
  CHECK(se == Surd2(Rational(-14769, 64), Rational(5203, 32)));
}

TEST_CASE("depressed cubic, one real root") {
  auto s = solve_depressed_cubic(BigReal(0, 30), BigReal(-8, 30), 30);
  CHECK(close(s.real_root, BigReal(2, 30), "1e-28"));
  CHECK(s.discriminant > BigReal(0, 30));
  REQUIRE(s.roots.size() == 3);
  // complex pair -1 +/- sqrt(3) i
  BigReal s3 = sqrt(BigReal(3, 30));
  bool saw_pair = false;
  for (const auto& r : s.roots)
    if (r.im.sign() > 0)
      saw_pair = close(r.re, BigReal(-1, 30), "1e-28") && close(r.im, s3, "1e-28");
  CHECK(saw_pair);
}

TEST_CASE("depressed cubic, three real roots") {
  auto s = solve_depressed_cubic(BigReal(-7, 30), BigReal(6, 30), 30);
  CHECK(s.discriminant < BigReal(0, 30));
  REQUIRE(s.roots.size() == 3);
  for (long want : {1L, 2L, -3L}) {
    bool found = false;
    for (const auto& r : s.roots)
      if (r.im.is_zero() && close(r.re, BigReal(want, 30), "1e-28")) found = true;
    CHECK(found);
  }
}

TEST_CASE("resolvent of the tangency quartic") {
  const int d = 40;
  // depressed resolvent: z^3 + gamma z + delta with both coefficients in Q(sqrt 2)
  BigReal gamma = surd_to_bigreal(Surd2(Rational(-73, 12), Rational(4)), d);
  BigReal delta = surd_to_bigreal(Surd2(Rational(-1133, 108), Rational(22, 3)), d);
  auto dep = solve_depressed_cubic(gamma, delta, d);
  CHECK(close(dep.discriminant, br("7.1752418337628644489667245095727212e-4", d), "1e-36"));

  auto dq = depress_quartic<Surd2>(kA3, kA2, kA1, kA0);
  Surd2 sc, sd, se;
  resolvent_cubic<Surd2>(dq.C, dq.D, dq.E, sc, sd, se);
  auto full = solve_monic_cubic(surd_to_bigreal(sc, d), surd_to_bigreal(sd, d),
                                surd_to_bigreal(se, d), d);
  const char* zeta = "1.811593677897973805030891000148668273056";
  CHECK(close(full.real_root, br(zeta, d), "1e-37"));
  // the two shifted forms agree: full root == depressed root - c/3
  CHECK(close(full.real_root, dep.real_root - surd_to_bigreal(sc, d) / 3, "1e-37"));
}

TEST_CASE("ferrari recovers all four tangency-quartic roots") {
  const int d = 50;
  auto roots = solve_monic_quartic(surd_to_bigreal(kA3, d), surd_to_bigreal(kA2, d),
                                   surd_to_bigreal(kA1, d), surd_to_bigreal(kA0, d), d);
  REQUIRE(roots.size() == 4);
  BigReal zero(0, d);
  std::vector<BigComplex> want{
      {br(kRootReal1, d), zero},
      {br(kRootReal2, d), zero},
      {br(kRootCxRe, d), br(kRootCxIm, d)},
      {br(kRootCxRe, d), -br(kRootCxIm, d)},
  };
  CHECK(matches_root_set(roots, want, "1e-44"));
}

TEST_CASE("ferrari branch bookkeeping") {
  const int d = 40;
  auto dq = depress_quartic<Surd2>(kA3, kA2, kA1, kA0);
  auto sol = solve_quartic_ferrari(surd_to_bigreal(dq.C, d), surd_to_bigreal(dq.D, d),
                                   surd_to_bigreal(dq.E, d), surd_to_bigreal(dq.shift, d), d);
  REQUIRE(sol.roots.size() == 4);
  REQUIRE(sol.branch_log == std::vector<int>{0, 0, 1, 1});
  // first split quadratic carries the real pair, second the complex pair
  CHECK(sol.roots[0].im.is_zero());
  CHECK(sol.roots[1].im.is_zero());
  CHECK(!sol.roots[2].im.is_zero());
  CHECK(!sol.roots[3].im.is_zero());
  CHECK(close(sol.resolvent_zeta, br("1.811593677897973805030891000148668273056", d), "1e-36"));
  // the square root that splits the quartic: C + 2 zeta
  BigReal wsq = surd_to_bigreal(dq.C, d) + 2 * sol.resolvent_zeta;
  CHECK(close(wsq, br("2.365828042915232756466848172926430781821", d), "1e-36"));
}

TEST_CASE("ferrari biquadratic path") {
  const int d = 40;
  // e^4 - e^2 + 1/4 = (e^2 - 1/2)^2: double roots at +/- 1/sqrt(2)
  auto sol = solve_quartic_ferrari(BigReal(-1, d), BigReal(0, d),
                                   surd_to_bigreal(Surd2(Rational(1, 4), Rational(0)), d),
                                   BigReal(0, d), d);
  REQUIRE(sol.roots.size() == 4);
  CHECK(sol.branch_log == std::vector<int>{-1, -1, -1, -1});
  BigReal inv_s2 = 1 / sqrt(BigReal(2, d));
  int plus = 0, minus = 0;
  for (const auto& r : sol.roots) {
    CHECK(r.im.is_zero());
    if (close(r.re, inv_s2, "1e-35")) ++plus;
    if (close(r.re, -inv_s2, "1e-35")) ++minus;
  }
  CHECK(plus == 2);
  CHECK(minus == 2);
}

TEST_CASE("ferrari on a split integer quartic") {
  const int d = 40;
  auto roots = solve_monic_quartic(BigReal(-10, d), BigReal(35, d), BigReal(-50, d),
                                   BigReal(24, d), d);
  REQUIRE(roots.size() == 4);
  for (long want : {1L, 2L, 3L, 4L}) {
    bool found = false;
    for (const auto& r : roots)
      if (r.im.is_zero() && close(r.re, BigReal(want, d), "1e-35")) found = true;
    CHECK(found);
  }
}

TEST_CASE("single radical expression for the quartic roots") {
  const int d = 40;
  auto res = quartic_closed_form_A(surd_to_bigreal(kA3, d), surd_to_bigreal(kA2, d),
                                   surd_to_bigreal(kA1, d), surd_to_bigreal(kA0, d), d);
  CHECK(!res.fell_back);
  CHECK(close(res.A, br("25.8857172010174426981250608518382435456397494029142520881393", d),
              "1e-35"));
  CHECK(close(res.B, surd_to_bigreal(Surd2(Rational(73), Rational(-48)), d), "1e-35"));
  CHECK(res.C.im.is_zero());
  CHECK(close(res.C.re, br("3.34590117233235409230294998874894841230696008155918997501524", d),
              "1e-35"));
  CHECK(close(res.D.re, br("0.642373994204421059895366423415820206692803278650359385837344", d),
              "1e-35"));
  CHECK(close(res.E.re, br("1.48061353612489762895865564166309071622012619456312990615065", d),
              "1e-35"));
  CHECK(close(res.F.re, br("0.446187123659175874819656741884629794788779594018792695667678", d),
              "1e-35"));

  BigReal zero(0, d);
  std::vector<BigComplex> want{
      {br(kRootReal1, d), zero},
      {br(kRootReal2, d), zero},
      {br(kRootCxRe, d), br(kRootCxIm, d)},
      {br(kRootCxRe, d), -br(kRootCxIm, d)},
  };
  CHECK(matches_root_set(res.roots, want, "1e-34"));
}

TEST_CASE("radical expression degenerates on x^4 - 1 and falls back") {
  const int d = 30;
  auto res = quartic_closed_form_A(BigReal(0, d), BigReal(0, d), BigReal(0, d),
                                   BigReal(-1, d), d);
  CHECK(res.fell_back);
  BigReal zero(0, d), one(1, d);
  std::vector<BigComplex> want{
      {one, zero}, {-one, zero}, {zero, one}, {zero, -one}};
  CHECK(matches_root_set(res.roots, want, "1e-26"));
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "overtop/quintic.hpp"

using namespace overtop;

namespace {

BigReal br(const char* s, int digits) { return BigReal::from_string(s, digits); }

bool close(const BigReal& a, const BigReal& b, const char* tol) {
  int d = std::min(a.digits(), b.digits());
  return abs(a - b) <= BigReal::from_string(tol, d);
}

const char* kLegB = "1.0591663";
const char* kLegC = "2.6931530";
const char* kRStar = "0.23574340364075226524373165912431051632997654831954";

// -(constant term) of the quintic factor at the two radii used below
const char* kConstAtFixed =
    "0.22891654870328983858874163010550912827564743313998";
const char* kConstAtSolved =
    "0.2288066734835509252358125086681247838958100418523487";

// roots of z^5 + 15z + 12, the classical solvable trinomial of this shape
const char* kRealRoot = "-0.780669432093258307044295855655632259768209738";
const char* kInnerRe = "-1.16885627308424837746749848532924033794689863";
const char* kInnerIm = "-1.45103836960044117018721861929943873739824873";
const char* kOuterRe = "1.5591909891308775309896464131570564678310035";
const char* kOuterIm = "1.41297967386831930345644747353208242393650764";

BigReal quintic_residual(const BigComplex& z, long alin, long bconst) {
  BigComplex z2 = cmul(z, z);
  BigComplex z5 = cmul(cmul(z2, z2), z);
  BigReal a(alin, z.re.digits()), b(bconst, z.re.digits());
  return cabs(cadd(z5, BigComplex{a * z.re + b, a * z.im}));
}

}  // namespace

TEST_CASE("trinomial constant agrees across leg, hypotenuse and altitude forms") {
  int d = 50;
  BigReal b = br(kLegB, d), c = br(kLegC, d);

  BringJerrard bj = bring_jerrard_from_triangle(b, c, br("0.2358", d));
  CHECK(cmp(bj.a_lin, 1) == 0);
  CHECK(bj.b_const.sign() < 0);
  CHECK(close(-bj.b_const, br(kConstAtFixed, d), "1e-48"));

  BringJerrard bj2 = bring_jerrard_from_triangle(b, c, br(kRStar, d));
  CHECK(close(-bj2.b_const, br(kConstAtSolved, d), "1e-48"));
}

TEST_CASE("equal legs give the doubled-square constant") {
  int d = 40;
  // b = c = 2r/t makes the constant 2t^2; here t = 1/4
  BringJerrard bj =
      bring_jerrard_from_triangle(br("8", d), br("8", d), br("1", d));
  CHECK(close(bj.b_const, br("-0.125", d), "1e-38"));
}

TEST_CASE("trinomial construction rejects out-of-range inputs") {
  int d = 30;
  BigReal b = br("2", d), c = br("3", d);
  CHECK_THROWS_AS(bring_jerrard_from_triangle(b, c, br("0", d)),
                  std::invalid_argument);
  CHECK_THROWS_AS(bring_jerrard_from_triangle(b, c, br("-1", d)),
                  std::invalid_argument);
  CHECK_THROWS_AS(bring_jerrard_from_triangle(b, c, br("1", d)),
                  std::invalid_argument);  // diameter equals the shorter leg
  CHECK_THROWS_AS(bring_jerrard_from_triangle(b, c, br("1.2", d)),
                  std::invalid_argument);
  CHECK_THROWS_AS(bring_jerrard_from_triangle(c, b, br("0.5", d)),
                  std::invalid_argument);  // legs out of order
}

TEST_CASE("witness search certifies the classical solvable trinomial") {
  SolvabilityWitness w = solvability_search_general(Rational(15), Rational(12), 6);
  CHECK(w.satisfied);
  CHECK(w.epsilon_sign == -1);
  CHECK(w.p == Rational(4, 3));
  CHECK(w.q == Rational(1));
  CHECK(w.candidates_tried == 37);

  // both identities, re-verified here over exact rationals
  Rational delta = w.p * w.p + 1;
  Rational q4 = w.q * w.q * w.q * w.q;
  CHECK(5 * q4 * (3 - 4 * w.epsilon_sign * w.p) == w.a_lin * delta);
  Rational q5 = q4 * w.q;
  CHECK(4 * q5 * (11 * w.epsilon_sign + 2 * w.p) == -w.b_const * delta);
}

TEST_CASE("witness search takes the negative-q branch for the mirrored trinomial") {
  SolvabilityWitness w =
      solvability_search_general(Rational(15), Rational(-12), 6);
  CHECK(w.satisfied);
  CHECK(w.epsilon_sign == -1);
  CHECK(w.p == Rational(4, 3));
  CHECK(w.q == Rational(-1));
  CHECK(w.candidates_tried == 37);
}

TEST_CASE("witness search exhausts the rationalized solved-radius target") {
  SolvabilityWitness w = solvability_search(Rational(-278, 1215), 30);
  CHECK_FALSE(w.satisfied);
  CHECK(w.candidates_tried == 1109);
}

TEST_CASE("zero constant admits no witness because q may not vanish") {
  SolvabilityWitness w = solvability_search(Rational(0), 10);
  CHECK_FALSE(w.satisfied);
  CHECK(w.candidates_tried == 125);

  // height 12 reaches p = 11/2, where the second identity degenerates to
  // 0 = 0; the first identity still demands q^4 = 1/4, which has no
  // rational solution, so the search must stay empty
  SolvabilityWitness w2 = solvability_search(Rational(0), 12);
  CHECK_FALSE(w2.satisfied);
  CHECK(w2.candidates_tried == 181);
}

TEST_CASE("rationalization picks the shortest convergent inside the tolerance") {
  int d = 50;
  BigReal b = br(kLegB, d), c = br(kLegC, d);
  BringJerrard bj = bring_jerrard_from_triangle(b, c, br(kRStar, d));

  Rational target = rationalize(bj.b_const, br("1e-6", d));
  CHECK(target == Rational(-278, 1215));
  CHECK(rationalize(-bj.b_const, br("1e-6", d)) == Rational(278, 1215));

  // the convergent really is within tolerance, but not exact
  BigReal err = abs(BigReal(target, d) - bj.b_const);
  CHECK(err <= br("1e-6", d));
  CHECK(err >= br("1e-8", d));

  // exact dyadic input terminates with the value itself
  CHECK(rationalize(br("0.25", d), br("1e-30", d)) == Rational(1, 4));
  CHECK_THROWS_AS(rationalize(b, br("0", d)), std::invalid_argument);
}

TEST_CASE("radical formulas reproduce the classical trinomial roots") {
  SolvabilityWitness w = solvability_search_general(Rational(15), Rational(12), 6);
  std::vector<BigComplex> roots = solvable_quintic_roots(w, 40);
  REQUIRE(roots.size() == 5);

  // index 0 is the real root, exactly real by construction
  CHECK(roots[0].im.is_zero());
  CHECK(close(roots[0].re, br(kRealRoot, 40), "1e-25"));

  CHECK(close(roots[1].re, br(kInnerRe, 40), "1e-25"));
  CHECK(close(roots[1].im, br(kInnerIm, 40), "1e-25"));
  CHECK(close(roots[2].re, br(kOuterRe, 40), "1e-25"));
  CHECK(close(roots[2].im, br(kOuterIm, 40), "1e-25"));

  // conjugate closure: (1,4) and (2,3) pair up
  CHECK(close(roots[4].re, roots[1].re, "1e-36"));
  CHECK(close(roots[4].im, -roots[1].im, "1e-36"));
  CHECK(close(roots[3].re, roots[2].re, "1e-36"));
  CHECK(close(roots[3].im, -roots[2].im, "1e-36"));

  for (const BigComplex& z : roots)
    CHECK(quintic_residual(z, 15, 12) <= br("1e-33", 40));
}

TEST_CASE("negating q negates every root") {
  SolvabilityWitness wp =
      solvability_search_general(Rational(15), Rational(12), 6);
  SolvabilityWitness wn =
      solvability_search_general(Rational(15), Rational(-12), 6);
  std::vector<BigComplex> rp = solvable_quintic_roots(wp, 40);
  std::vector<BigComplex> rn = solvable_quintic_roots(wn, 40);
  REQUIRE(rp.size() == 5);
  REQUIRE(rn.size() == 5);
  for (size_t i = 0; i < 5; ++i) {
    CHECK(close(rn[i].re, -rp[i].re, "1e-36"));
    CHECK(close(rn[i].im, -rp[i].im, "1e-36"));
  }
  for (const BigComplex& z : rn)
    CHECK(quintic_residual(z, 15, -12) <= br("1e-33", 40));
}

TEST_CASE("root residuals tighten with the digit budget") {
  SolvabilityWitness w = solvability_search_general(Rational(15), Rational(12), 6);
  for (int digits : {30, 60}) {
    std::vector<BigComplex> roots = solvable_quintic_roots(w, digits);
    BigReal bound = exp10_int(6 - digits, digits) * BigReal(40 * 15, digits);
    for (const BigComplex& z : roots)
      CHECK(quintic_residual(z, 15, 12) <= bound);
  }
}

TEST_CASE("root builder rejects an unsatisfied witness") {
  SolvabilityWitness w = solvability_search(Rational(-278, 1215), 8);
  CHECK_FALSE(w.satisfied);
  CHECK_THROWS_AS(solvable_quintic_roots(w, 40), std::invalid_argument);
}

TEST_CASE("resolvent family pins the constant term and has no real roots") {
  ResolventFamilyReport rep = resolvent_family_demo();
  CHECK(rep.t_at_half == Rational(5, 36));
  CHECK(rep.t_at_one == Rational(35, 144));
  CHECK_FALSE(rep.zero_linear_term_in_family);

  REQUIRE(rep.cleared.degree() == 6);
  std::vector<Rational> want{5, 18, 36, 0, 0, 0, 36};
  CHECK(rep.cleared.c == want);
  CHECK(rep.real_root_count == 0);

  CHECK(resolvent_family_constant(Rational(1, 2)) == Rational(5, 36));
  CHECK_THROWS_AS(resolvent_family_constant(Rational(0)), std::invalid_argument);
}

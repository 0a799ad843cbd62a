#include "overtop/sym.hpp"

#include <stdexcept>

#include "overtop/closed_form.hpp"

namespace overtop {

Polynomial<Surd2> symmetric_quartic() {
  const Surd2 p{Rational(-1), Rational(1)};
  const Surd2 two_p{Rational(-2), Rational(2)};
  Polynomial<Surd2> f;
  f.c = {Surd2(p * p), -two_p, Surd2(Rational(-1)), two_p, Surd2(Rational(1))};
  return f;
}

BigReal r_of_eps(const BigReal& alpha, const BigReal& eps) {
  if (alpha.sign() <= 0) throw std::domain_error("r_of_eps: alpha must be positive");
  if (eps.sign() <= 0 || eps >= BigReal(1, eps.digits()))
    throw std::domain_error("r_of_eps: eccentricity must lie in (0, 1)");
  return alpha * eps * sqrt(1 - eps * eps);
}

BigReal r_piecewise(const BigReal& alpha, const BigReal& eps) {
  if (eps.sign() < 0 || eps >= BigReal(1, eps.digits()))
    throw std::domain_error("r_piecewise: eccentricity must lie in [0, 1)");
  BigReal knee = 1 / sqrt(BigReal(2, eps.digits()));
  if (eps <= knee) return alpha / 2;
  return r_of_eps(alpha, eps);
}

BigReal r1_of_alpha(const BigReal& alpha) {
  if (alpha.sign() < 0) throw std::domain_error("r1_of_alpha: alpha must be nonnegative");
  const int d = alpha.digits();
  BigReal r1 = (sqrt(BigReal(2, d)) - 1) * (sqrt(alpha * alpha + 1) - 1);
  if (alpha.sign() > 0 && !(r1 < alpha / 2))
    throw std::logic_error("r1_of_alpha: r1 should stay below alpha/2");
  return r1;
}

BigReal graphic_r_check(const BigReal& alpha, const BigReal& beta, int digits) {
  const int wp = digits + 20;
  BigReal a = alpha.with_digits(wp), b = beta.with_digits(wp);
  if (a.sign() <= 0 || b.sign() < 0 || b > a)
    throw std::domain_error("graphic_r_check needs 0 <= beta <= alpha");
  BigReal gamma = sqrt(a * a - b * b);
  BigReal r = b * gamma / a;
  BigReal eps = gamma / a;
  if (abs(r - b * eps) > exp10_int(2 - wp, wp) * (1 + abs(r)))
    throw std::logic_error("graphic_r_check: ruler construction disagrees with beta*eps");
  return r.with_digits(digits);
}

SymmetricSolution solve_symmetric(int digits) {
  if (digits < 12) throw std::invalid_argument("solve_symmetric: digits must be >= 12");
  const int wp = digits + 20;
  const Surd2 p{Rational(-1), Rational(1)};

  // exact bookkeeping in Q(sqrt 2): depression, resolvent, discriminant
  auto q = symmetric_quartic();
  auto dep = depress_quartic<Surd2>(q.c[3], q.c[2], q.c[1], q.c[0]);
  Surd2 rc, rd, re;
  resolvent_cubic<Surd2>(dep.C, dep.D, dep.E, rc, rd, re);
  Surd2 third(Rational(1, 3));
  Surd2 gamma = rd - rc * rc * third;
  Surd2 delta = re - rc * rd * third + rc * rc * rc * Surd2(Rational(2, 27));
  Surd2 half_delta = delta * Surd2(Rational(1, 2));
  Surd2 third_gamma = gamma * third;
  Surd2 disc = half_delta * half_delta + third_gamma * third_gamma * third_gamma;

  // the cube-root discriminant block of the flattened formula is exact too
  Surd2 Bexact = q.c[2] * q.c[2] + Surd2(Rational(3)) * (Surd2(Rational(4)) * q.c[0] -
                                                         q.c[1] * q.c[3]);
  if (!(Bexact == Surd2(Rational(73), Rational(-48))))
    throw std::logic_error("solve_symmetric: exact radical block B drifted");

  // numeric phase: Ferrari on the depressed quartic
  BigReal C = surd_to_bigreal(dep.C, wp);
  BigReal D = surd_to_bigreal(dep.D, wp);
  BigReal E = surd_to_bigreal(dep.E, wp);
  auto fer = solve_quartic_ferrari(C, D, E, surd_to_bigreal(dep.shift, wp), wp);

  BigReal knee = 1 / sqrt(BigReal(2, wp));
  const BigReal* admissible = nullptr;
  const BigReal* other_real = nullptr;
  const BigComplex* complex_root = nullptr;
  for (const auto& r : fer.roots) {
    if (r.im.is_zero()) {
      if (r.re > knee && r.re < BigReal(1, wp)) admissible = &r.re;
      else other_real = &r.re;
    } else if (r.im.sign() > 0) {
      complex_root = &r;
    }
  }
  if (!admissible || !other_real || !complex_root)
    throw std::runtime_error(
        "solve_symmetric: root layout broke (no root in (1/sqrt2, 1))");
  BigReal eps = *admissible;

  // residual of the admissible root on the original quartic
  BigReal resid = abs(poly_eval(to_bigreal(q, wp), eps));
  BigReal tol6 = exp10_int(6 - digits, wp);
  if (resid > tol6) throw std::logic_error("solve_symmetric: quartic residual too large");

  // the resolvent root, evaluated twice: once by the cubic solver, once by
  // the explicit pair of cube roots over the exact discriminant
  BigReal zeta = fer.resolvent_zeta.with_digits(wp);
  BigReal dl = surd_to_bigreal(delta, wp);
  BigReal sq_disc = sqrt(surd_to_bigreal(disc, wp));
  BigReal zeta2 = -surd_to_bigreal(rc, wp) / 3 -
                  (cbrt(dl / 2 - sq_disc) + cbrt(dl / 2 + sq_disc));
  if (abs(zeta - zeta2) > tol6)
    throw std::logic_error("solve_symmetric: the two resolvent-root forms disagree");

  // b/r, three ways
  BigReal s2 = sqrt(BigReal(2, wp));
  BigReal br_eps = 2 + (1 + 2 / eps) * s2;

  BigReal W = sqrt(C + 2 * zeta);
  BigReal br_rad =
      2 + s2 + (4 * s2) / ((1 - s2) + W + sqrt((12 - 8 * s2) / W - 3 * C - 2 * zeta));

  auto fa = quartic_closed_form_A(surd_to_bigreal(q.c[3], wp), surd_to_bigreal(q.c[2], wp),
                                  surd_to_bigreal(q.c[1], wp), surd_to_bigreal(q.c[0], wp),
                                  wp);
  if (fa.fell_back)
    throw std::logic_error("solve_symmetric: radical expression unexpectedly degenerate");
  BigReal c3 = fa.C.re / (3 * cbrt(BigReal(2, wp)));
  BigReal G1 = sqrt(c3 + fa.E.re);
  BigReal rad = (6 - 4 * s2) + BigReal(Rational(4, 3), wp) - c3 - fa.D.re + fa.F.re;
  BigReal br_A = 2 + s2 + (4 * s2) / ((1 - s2) + G1 + sqrt(rad));

  BigReal tol4 = exp10_int(4 - digits, wp);
  if (abs(br_eps - br_rad) > tol4 || abs(br_eps - br_A) > tol4)
    throw std::logic_error("solve_symmetric: b/r routes disagree");
  if (abs(fa.B - surd_to_bigreal(Bexact, wp)) > tol6)
    throw std::logic_error("solve_symmetric: numeric B drifted from the exact value");

  BigReal beta_over_alpha = sqrt(1 - eps * eps);

  return SymmetricSolution{
      p,
      eps.with_digits(digits),
      other_real->with_digits(digits),
      {complex_root->re.with_digits(digits), complex_root->im.with_digits(digits)},
      beta_over_alpha.with_digits(digits),
      br_eps.with_digits(digits),
      digits,
      SymRadicalConstants{
          C.with_digits(digits),
          D.with_digits(digits),
          E.with_digits(digits),
          fa.F.re.with_digits(digits),
          surd_to_bigreal(Bexact, digits),
          fa.C.re.with_digits(digits),
          surd_to_bigreal(disc, digits),
          zeta.with_digits(digits),
      },
  };
}

}  // namespace overtop

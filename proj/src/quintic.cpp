#include "overtop/quintic.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace overtop {

namespace {

// Exact fourth root of a nonnegative integer, or failure.
bool exact_root4(const mpz_class& n, mpz_class* out) {
  return mpz_root(out->get_mpz_t(), n.get_mpz_t(), 4) != 0;
}

Rational floor_q(const Rational& t) {
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), t.get_num_mpz_t(), t.get_den_mpz_t());
  return Rational(fl);
}

}  // namespace

BringJerrard bring_jerrard_from_triangle(const BigReal& b, const BigReal& c,
                                         const BigReal& r) {
  if (b.sign() <= 0 || c.sign() <= 0 || r.sign() <= 0)
    throw std::invalid_argument("legs and radius must be positive");
  if (cmp(b, c) > 0) throw std::invalid_argument("legs must be ordered b <= c");
  BigReal two_r = 2 * r;
  if (cmp(two_r, b) >= 0)
    throw std::invalid_argument("incircle diameter must stay below the shorter leg");

  BigReal tb = two_r / b;
  BigReal tc = two_r / c;
  BigReal via_legs = tb * tb + tc * tc;

  BigReal hyp = sqrt(b * b + c * c);
  BigReal th = two_r * hyp / (b * c);
  BigReal via_hyp = th * th;
  BigReal ta = two_r / (b * c / hyp);
  BigReal via_alt = ta * ta;

  // all three expressions are the same number; disagreement beyond rounding
  // means a broken precision context, not bad input
  int d = via_legs.digits();
  BigReal slack = exp10_int(8 - d, d) * via_legs;
  if (cmp(abs(via_legs - via_hyp), slack) > 0 ||
      cmp(abs(via_legs - via_alt), slack) > 0)
    throw std::logic_error("constant-term forms disagree beyond rounding");

  return BringJerrard{BigReal(1, d), -via_legs};
}

SolvabilityWitness solvability_search_general(const Rational& a_lin,
                                              const Rational& b_const,
                                              int height) {
  if (height < 1) throw std::invalid_argument("height must be at least 1");

  std::vector<Rational> ps;
  for (long i = 1; i <= height; ++i)
    for (long j = 1; j <= height; ++j)
      if (std::gcd(i, j) == 1) ps.emplace_back(i, j);
  std::sort(ps.begin(), ps.end());

  SolvabilityWitness out;
  out.a_lin = a_lin;
  out.b_const = b_const;
  for (int eps : {1, -1}) {
    for (const Rational& p : ps) {
      Rational den = 5 * (3 - 4 * eps * p);
      if (den == 0) continue;  // forces a_lin = 0, never a witness
      ++out.candidates_tried;
      Rational delta = p * p + 1;
      Rational q4 = a_lin * delta / den;
      if (q4 <= 0) continue;
      mpz_class qn, qd;
      if (!exact_root4(mpz_class(q4.get_num()), &qn)) continue;
      if (!exact_root4(mpz_class(q4.get_den()), &qd)) continue;
      if (qn > height || qd > height) continue;
      Rational q0(qn, qd);
      for (int sgn : {1, -1}) {
        Rational q = sgn * q0;
        Rational q5 = q * q;
        q5 = q5 * q5 * q;
        if (4 * q5 * (11 * eps + 2 * p) == -b_const * delta) {
          out.epsilon_sign = eps;
          out.p = p;
          out.q = q;
          out.satisfied = true;
          return out;
        }
      }
    }
  }
  return out;
}

SolvabilityWitness solvability_search(const Rational& target, int height) {
  return solvability_search_general(Rational(1), target, height);
}

std::vector<BigComplex> solvable_quintic_roots(const SolvabilityWitness& w,
                                               int digits) {
  if (!w.satisfied)
    throw std::invalid_argument("witness does not certify solvability");
  if (digits < 12) throw std::invalid_argument("digits must be at least 12");
  const int wp = digits + 20;
  const BigReal one(1, wp);
  const BigReal zero(0, wp);

  BigReal pw(w.p, wp);
  BigReal delta = pw * pw + 1;
  BigReal sd = sqrt(delta);
  BigReal root_m = sqrt(delta - w.epsilon_sign * sd);
  BigReal root_p = sqrt(delta + w.epsilon_sign * sd);
  BigReal v1 = sd + root_m;
  BigReal v2 = -sd - root_p;
  BigReal v3 = -sd + root_p;
  BigReal v4 = sd - root_m;
  BigReal d2 = delta * delta;
  BigReal u[4] = {nthroot(v1 * v1 * v3 / d2, 5), nthroot(v3 * v3 * v4 / d2, 5),
                  nthroot(v2 * v2 * v1 / d2, 5), nthroot(v4 * v4 * v2 / d2, 5)};

  // fifth roots of unity, in closed square-root form
  BigReal s5 = sqrt(BigReal(5, wp));
  BigReal cos1 = (s5 - 1) / 4;
  BigReal sin1 = sqrt(BigReal(10, wp) + 2 * s5) / 4;
  BigReal cos2 = -(s5 + 1) / 4;
  BigReal sin2 = sqrt(BigReal(10, wp) - 2 * s5) / 4;
  BigComplex omega[5] = {{one, zero},
                         {cos1, sin1},
                         {cos2, sin2},
                         {cos2, -sin2},
                         {cos1, -sin1}};

  BigReal qv(w.q, wp);
  BigReal av(w.a_lin, wp);
  BigReal bv(w.b_const, wp);
  BigReal coeff_mag = abs(av);
  if (cmp(coeff_mag, abs(bv)) < 0) coeff_mag = abs(bv);
  if (cmp(coeff_mag, 1) < 0) coeff_mag = one;
  BigReal tol = exp10_int(6 - digits, wp);

  // the real fifth roots above are one branch choice among 5^4; try the
  // rotations in lexicographic order until the whole root set checks out
  for (int m0 = 0; m0 < 5; ++m0)
    for (int m1 = 0; m1 < 5; ++m1)
      for (int m2 = 0; m2 < 5; ++m2)
        for (int m3 = 0; m3 < 5; ++m3) {
          int rot[4] = {m0, m1, m2, m3};
          BigComplex uu[4] = {cmul(BigComplex{u[0], zero}, omega[rot[0]]),
                              cmul(BigComplex{u[1], zero}, omega[rot[1]]),
                              cmul(BigComplex{u[2], zero}, omega[rot[2]]),
                              cmul(BigComplex{u[3], zero}, omega[rot[3]])};
          std::vector<BigComplex> roots;
          bool ok = true;
          for (int j = 0; j < 5 && ok; ++j) {
            BigComplex z{zero, zero};
            for (int k = 1; k <= 4; ++k)
              z = cadd(z, cmul(omega[(j * k) % 5], uu[k - 1]));
            z = BigComplex{qv * z.re, qv * z.im};
            BigComplex z2 = cmul(z, z);
            BigComplex z5 = cmul(cmul(z2, z2), z);
            BigComplex val = cadd(z5, BigComplex{av * z.re + bv, av * z.im});
            BigReal zm = cabs(z);
            if (cmp(zm, 1) < 0) zm = one;
            if (cmp(cabs(val), tol * pow_int(zm, 5) * coeff_mag) > 0) ok = false;
            roots.push_back(z);
          }
          if (ok) {
            for (auto& z : roots)
              z = BigComplex{z.re.with_digits(digits), z.im.with_digits(digits)};
            return roots;
          }
        }
  throw std::runtime_error(
      "no fifth-root branch assignment reproduces the quintic");
}

Rational rationalize(const BigReal& x, const BigReal& tol) {
  if (tol.sign() <= 0) throw std::invalid_argument("tolerance must be positive");
  bool neg = x.sign() < 0;
  Rational fr = (neg ? -x : x).to_rational_exact();
  Rational bound = tol.to_rational_exact();
  Rational h1(1), h0(0), k1(0), k0(1);
  Rational t = fr;
  while (true) {
    Rational ai = floor_q(t);
    Rational nh = ai * h1 + h0;
    Rational nk = ai * k1 + k0;
    h0 = h1;
    h1 = nh;
    k0 = k1;
    k1 = nk;
    if (k1 != 0 && abs(h1 / k1 - fr) <= bound) {
      Rational res = h1 / k1;
      return neg ? Rational(-res) : res;
    }
    t = 1 / (t - ai);
  }
}

Rational resolvent_family_constant(const Rational& s) {
  if (s == 0)
    throw std::invalid_argument("the family has no member with s = 0");
  Rational s2 = s * s;
  return (32 * s2 * s2 + 3) / (144 * s2);
}

ResolventFamilyReport resolvent_family_demo() {
  ResolventFamilyReport rep;
  Rational half(1, 2);
  rep.t_at_half = resolvent_family_constant(half);
  rep.t_at_one = resolvent_family_constant(Rational(1));
  rep.zero_linear_term_in_family = false;

  std::vector<Rational> member{rep.t_at_half, half, 1, 0, 0, 0, 1};
  mpz_class lcm(1);
  for (const Rational& q : member)
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), mpz_class(q.get_den()).get_mpz_t());
  for (Rational& q : member) q = q * Rational(lcm);
  rep.cleared = Polynomial<Rational>(member);

  Rational cauchy(0);
  const Rational& lead = rep.cleared.c.back();
  for (size_t i = 0; i + 1 < rep.cleared.c.size(); ++i) {
    Rational mag = abs(rep.cleared.c[i] / lead);
    if (mag > cauchy) cauchy = mag;
  }
  cauchy += 1;
  rep.real_root_count = sturm_count(rep.cleared, -cauchy, cauchy);
  return rep;
}

}  // namespace overtop

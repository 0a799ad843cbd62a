#include "overtop/poly.hpp"

#include <sstream>

namespace overtop {

Polynomial<BigReal> trim_relative(const Polynomial<BigReal>& f, const BigReal& rel) {
  if (f.is_zero()) return f;
  BigReal cut = rel * coeff_scale(f);
  Polynomial<BigReal> r = f;
  while (!r.c.empty() && abs(r.c.back()) <= cut) r.c.pop_back();
  return r;
}

std::pair<Polynomial<Rational>, Polynomial<Rational>> poly_divmod(
    const Polynomial<Rational>& a, const Polynomial<Rational>& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  Polynomial<Rational> q, r = a;
  if (a.degree() < b.degree()) return {q, r};
  q.c.assign(static_cast<size_t>(a.degree() - b.degree()) + 1, Rational(0));
  while (!r.is_zero() && r.degree() >= b.degree()) {
    const long k = r.degree() - b.degree();
    Rational f = r.lead() / b.lead();
    q.c[static_cast<size_t>(k)] = f;
    for (long i = 0; i <= b.degree(); ++i)
      r.c[static_cast<size_t>(i + k)] -= f * b.c[static_cast<size_t>(i)];
    r.trim();
  }
  q.trim();
  return {q, r};
}

namespace {
// positive rescale, keeps signs; makes gcd chains and Sturm chains numerate
// over small integers instead of towering fractions
Polynomial<Rational> primitive_positive(Polynomial<Rational> f) {
  if (f.is_zero()) return f;
  mpz_class num_gcd = 0, den_lcm = 1;
  for (const auto& q : f.c) {
    if (q == 0) continue;
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), mpz_class(q.get_num()).get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), mpz_class(q.get_den()).get_mpz_t());
  }
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (scale < 0) scale = -scale;
  for (auto& q : f.c) q *= scale;
  return f;
}
}  // namespace

Polynomial<Rational> poly_gcd(Polynomial<Rational> a, Polynomial<Rational> b) {
  a = primitive_positive(std::move(a));
  b = primitive_positive(std::move(b));
  while (!b.is_zero()) {
    auto [q, r] = poly_divmod(a, b);
    a = std::move(b);
    b = primitive_positive(std::move(r));
  }
  if (!a.is_zero()) {
    Rational inv = 1 / a.lead();
    for (auto& q : a.c) q *= inv;  // monic normal form
  }
  return a;
}

Polynomial<Rational> square_free_part(const Polynomial<Rational>& f) {
  if (f.degree() <= 1) return f;
  Polynomial<Rational> g = poly_gcd(f, poly_derivative(f));
  if (g.degree() == 0) return f;
  return poly_divmod(f, g).first;
}

namespace {
int sign_at(const Polynomial<Rational>& f, const Rational& x) {
  return sgn(poly_eval(f, x));
}

long sign_variations(const std::vector<Polynomial<Rational>>& chain, const Rational& x) {
  long var = 0;
  int prev = 0;
  for (const auto& p : chain) {
    int s = sign_at(p, x);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++var;
    prev = s;
  }
  return var;
}
}  // namespace

long sturm_count(const Polynomial<Rational>& f, const Rational& lo, const Rational& hi) {
  if (f.is_zero()) throw std::domain_error("sturm_count on zero polynomial");
  if (!(lo < hi)) throw std::invalid_argument("sturm_count requires lo < hi");
  if (poly_eval(f, lo) == 0 || poly_eval(f, hi) == 0)
    throw std::domain_error("sturm_count endpoint is a root; perturb the interval");
  Polynomial<Rational> fs = square_free_part(f);
  std::vector<Polynomial<Rational>> chain;
  chain.push_back(fs);
  chain.push_back(poly_derivative(fs));
  while (!chain.back().is_zero() && chain.back().degree() > 0) {
    auto rem = poly_divmod(chain[chain.size() - 2], chain.back()).second;
    if (rem.is_zero()) break;
    // negate, then rescale by a positive constant
    for (auto& q : rem.c) q = -q;
    mpz_class den_lcm = 1, num_gcd = 0;
    for (const auto& q : rem.c) {
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), mpz_class(q.get_den()).get_mpz_t());
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), mpz_class(q.get_num()).get_mpz_t());
    }
    Rational scale(den_lcm, num_gcd);
    scale.canonicalize();
    if (scale < 0) scale = -scale;
    for (auto& q : rem.c) q *= scale;
    chain.push_back(std::move(rem));
  }
  return sign_variations(chain, lo) - sign_variations(chain, hi);
}

BigReal refine_root(const Polynomial<BigReal>& f, const BigReal& lo, const BigReal& hi,
                    int digits) {
  if (f.is_zero()) throw std::domain_error("refine_root on zero polynomial");
  const int wp = digits + 20;
  Polynomial<BigReal> g;
  g.c.reserve(f.c.size());
  for (const auto& v : f.c) g.c.push_back(v.with_digits(wp));
  BigReal a = lo.with_digits(wp), b = hi.with_digits(wp);
  BigReal fa = poly_eval(g, a), fb = poly_eval(g, b);
  if (fa.is_zero()) return a.with_digits(digits);
  if (fb.is_zero()) return b.with_digits(digits);
  if (fa.sign() == fb.sign())
    throw std::domain_error("refine_root: no sign change over the bracket");

  // bisect until the interval is tight enough for Newton to converge
  BigReal coarse = exp10_int(-(digits / 2 + 2), wp);
  for (int it = 0; it < 4 * wp; ++it) {
    BigReal mid = (a + b) / 2;
    if (abs(b - a) <= coarse * (abs(mid) + 1)) break;
    BigReal fm = poly_eval(g, mid);
    if (fm.is_zero()) { a = mid; b = mid; break; }
    if (fm.sign() == fa.sign()) { a = mid; fa = fm; }
    else { b = mid; fb = fm; }
  }

  Polynomial<BigReal> gp = poly_derivative(g);
  BigReal x = (a + b) / 2;
  BigReal step_tol = exp10_int(-(wp - 4), wp);
  for (int it = 0; it < 200; ++it) {
    BigReal fx = poly_eval(g, x);
    if (fx.is_zero()) break;
    BigReal dfx = poly_eval(gp, x);
    if (dfx.is_zero()) break;
    BigReal nx = x - fx / dfx;
    if (nx < a || nx > b) {  // fall back to a bisection step inside the bracket
      if (fx.sign() == fa.sign()) { a = x; fa = fx; } else { b = x; fb = fx; }
      nx = (a + b) / 2;
    }
    BigReal step = abs(nx - x);
    x = nx;
    if (step <= step_tol * (abs(x) + 1)) break;
  }

  BigReal resid = abs(poly_eval(g, x));
  BigReal bound = exp10_int(2 - digits, wp) * coeff_scale(g);
  if (resid > bound)
    throw std::runtime_error("refine_root: residual bound not reached");
  return x.with_digits(digits);
}

std::vector<NamedPoly> parse_poly_file(const std::string& text) {
  std::vector<NamedPoly> out;
  std::istringstream in(text);
  std::string line;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const size_t colon = line.find(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("line " + std::to_string(lineno) +
                                  ", col 1: expected 'name: coefficients'");
    std::string name = line.substr(first, colon > first ? colon - first : 0);
    while (!name.empty() && (name.back() == ' ' || name.back() == '\t')) name.pop_back();
    if (name.empty())
      throw std::invalid_argument("line " + std::to_string(lineno) + ", col 1: empty name");
    NamedPoly np;
    np.name = name;
    std::istringstream toks(line.substr(colon + 1));
    std::string tok;
    size_t col = colon + 2;
    while (toks >> tok) {
      try {
        np.poly.c.push_back(rat_from_string(tok));
      } catch (const std::exception& e) {
        throw std::invalid_argument("line " + std::to_string(lineno) + ", col " +
                                    std::to_string(col) + ": " + e.what());
      }
      col += tok.size() + 1;
    }
    np.poly.trim();
    out.push_back(std::move(np));
  }
  return out;
}

std::string format_poly(const NamedPoly& np) {
  if (np.poly.is_zero()) return np.name + ": 0";
  return np.name + ": " + poly_to_string(np.poly);
}

}  // namespace overtop

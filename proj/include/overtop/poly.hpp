#ifndef OVERTOP_POLY_HPP
#define OVERTOP_POLY_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "overtop/bigreal.hpp"
#include "overtop/rational.hpp"
#include "overtop/surd2.hpp"

namespace overtop {

// --- scalar-domain glue -----------------------------------------------------

inline bool scalar_is_zero(const Rational& v) { return v == 0; }
inline bool scalar_is_zero(const Surd2& v) { return v.is_zero(); }
inline bool scalar_is_zero(const BigReal& v) { return v.is_zero(); }

inline Rational scalar_zero_like(const Rational&) { return Rational(0); }
inline Surd2 scalar_zero_like(const Surd2&) { return Surd2(); }
inline BigReal scalar_zero_like(const BigReal& v) { return v.zero_like(); }

inline Rational scalar_from_rational(const Rational& q, const Rational&) { return q; }
inline Surd2 scalar_from_rational(const Rational& q, const Surd2&) { return Surd2(q); }
inline BigReal scalar_from_rational(const Rational& q, const BigReal& like) {
  return BigReal(q, like.digits());
}

// --- dense univariate polynomial -------------------------------------------

// Coefficients constant-first: c[i] multiplies x^i. An empty coefficient list
// is the zero polynomial. Nonzero polynomials keep a nonzero leading
// coefficient (exact-zero trim only; deliberate small-coefficient trimming for
// floating chains is a separate, explicit operation).
template <class T>
struct Polynomial {
  std::vector<T> c;

  Polynomial() = default;
  explicit Polynomial(std::vector<T> coeffs) : c(std::move(coeffs)) { trim(); }

  bool is_zero() const { return c.empty(); }
  long degree() const { return static_cast<long>(c.size()) - 1; }
  const T& lead() const {
    if (c.empty()) throw std::domain_error("zero polynomial has no leading coefficient");
    return c.back();
  }

  void trim() {
    while (!c.empty() && scalar_is_zero(c.back())) c.pop_back();
  }
};

template <class T>
bool operator==(const Polynomial<T>& a, const Polynomial<T>& b) {
  if (a.c.size() != b.c.size()) return false;
  for (size_t i = 0; i < a.c.size(); ++i)
    if (!(a.c[i] == b.c[i])) return false;
  return true;
}

template <class T>
T poly_eval(const Polynomial<T>& f, const T& x) {
  if (f.is_zero()) return scalar_zero_like(x);
  T acc = f.c.back();
  for (size_t i = f.c.size() - 1; i-- > 0;) acc = T(acc * x + f.c[i]);
  return acc;
}

template <class T>
Polynomial<T> poly_derivative(const Polynomial<T>& f) {
  Polynomial<T> r;
  if (f.c.size() <= 1) return r;
  r.c.reserve(f.c.size() - 1);
  for (size_t i = 1; i < f.c.size(); ++i) r.c.push_back(T(f.c[i] * static_cast<long>(i)));
  r.trim();
  return r;
}

template <class T>
Polynomial<T> operator+(const Polynomial<T>& a, const Polynomial<T>& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  Polynomial<T> r;
  const size_t n = std::max(a.c.size(), b.c.size());
  r.c.reserve(n);
  for (size_t i = 0; i < n; ++i) {
    if (i < a.c.size() && i < b.c.size()) r.c.push_back(T(a.c[i] + b.c[i]));
    else if (i < a.c.size()) r.c.push_back(a.c[i]);
    else r.c.push_back(b.c[i]);
  }
  r.trim();
  return r;
}

template <class T>
Polynomial<T> operator-(const Polynomial<T>& a) {
  Polynomial<T> r = a;
  for (auto& v : r.c) v = T(-v);
  return r;
}

template <class T>
Polynomial<T> operator-(const Polynomial<T>& a, const Polynomial<T>& b) {
  return a + (-b);
}

template <class T>
Polynomial<T> operator*(const Polynomial<T>& a, const Polynomial<T>& b) {
  Polynomial<T> r;
  if (a.is_zero() || b.is_zero()) return r;
  const T zero = scalar_zero_like(a.c[0]);
  r.c.assign(a.c.size() + b.c.size() - 1, zero);
  for (size_t i = 0; i < a.c.size(); ++i)
    for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] = T(r.c[i + j] + a.c[i] * b.c[j]);
  r.trim();
  return r;
}

template <class T>
Polynomial<T> operator*(const T& s, const Polynomial<T>& f) {
  Polynomial<T> r = f;
  for (auto& v : r.c) v = T(s * v);
  r.trim();
  return r;
}

// x^k * f
template <class T>
Polynomial<T> shift_up(const Polynomial<T>& f, size_t k) {
  if (f.is_zero() || k == 0) return f;
  Polynomial<T> r;
  const T zero = scalar_zero_like(f.c[0]);
  r.c.assign(k, zero);
  r.c.insert(r.c.end(), f.c.begin(), f.c.end());
  return r;
}

// --- domain conversions -----------------------------------------------------

inline Polynomial<BigReal> to_bigreal(const Polynomial<Rational>& f, int digits) {
  Polynomial<BigReal> r;
  r.c.reserve(f.c.size());
  for (const auto& q : f.c) r.c.push_back(BigReal(q, digits));
  r.trim();
  return r;
}

inline Polynomial<BigReal> to_bigreal(const Polynomial<Surd2>& f, int digits) {
  Polynomial<BigReal> r;
  r.c.reserve(f.c.size());
  for (const auto& s : f.c) r.c.push_back(surd_to_bigreal(s, digits));
  r.trim();
  return r;
}

inline Polynomial<Surd2> to_surd2(const Polynomial<Rational>& f) {
  Polynomial<Surd2> r;
  r.c.reserve(f.c.size());
  for (const auto& q : f.c) r.c.push_back(Surd2(q));
  return r;
}

// Drop leading coefficients whose magnitude is below rel * max|coeff|.
// Used when an exact cancellation survives only as floating-point noise.
Polynomial<BigReal> trim_relative(const Polynomial<BigReal>& f, const BigReal& rel);

inline BigReal coeff_scale(const Polynomial<BigReal>& f) {
  if (f.is_zero()) throw std::domain_error("scale of zero polynomial");
  BigReal m = abs(f.c[0]);
  for (const auto& v : f.c) {
    BigReal a = abs(v);
    if (a > m) m = a;
  }
  return m;
}

// --- exact division / gcd / Sturm (Rational domain) -------------------------

std::pair<Polynomial<Rational>, Polynomial<Rational>> poly_divmod(
    const Polynomial<Rational>& a, const Polynomial<Rational>& b);

Polynomial<Rational> poly_gcd(Polynomial<Rational> a, Polynomial<Rational> b);

Polynomial<Rational> square_free_part(const Polynomial<Rational>& f);

// Distinct real roots of f in (lo, hi]. Throws if either endpoint is a root.
long sturm_count(const Polynomial<Rational>& f, const Rational& lo, const Rational& hi);

// --- numeric refinement -----------------------------------------------------

// Bisection to stability, then Newton polish at guard precision.
// Requires a sign change over [lo, hi]; postcondition
// |f(result)| <= 10^(2-digits) * max|coeff|.
BigReal refine_root(const Polynomial<BigReal>& f, const BigReal& lo, const BigReal& hi,
                    int digits);

// --- text format ------------------------------------------------------------

struct NamedPoly {
  std::string name;
  Polynomial<Rational> poly;
};

// One polynomial per line, "name: c0 c1 c2 ..." with rational tokens,
// '#' comments, blank lines ignored.
std::vector<NamedPoly> parse_poly_file(const std::string& text);

std::string format_poly(const NamedPoly& np);

inline std::string scalar_to_string(const Rational& v) { return rat_to_string(v); }
inline std::string scalar_to_string(const Surd2& v) { return surd_to_string(v); }
inline std::string scalar_to_string(const BigReal& v) { return v.to_string(); }

template <class T>
std::string poly_to_string(const Polynomial<T>& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (size_t i = 0; i < f.c.size(); ++i) {
    if (i) out += ' ';
    out += scalar_to_string(f.c[i]);
  }
  return out;
}

}  // namespace overtop

#endif

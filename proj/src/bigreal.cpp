#include "overtop/bigreal.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <stdexcept>

namespace overtop {

namespace {
mpfr_prec_t prec_bits(int digits) {
  if (digits < 1) throw std::invalid_argument("BigReal context must be positive");
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873626)) + 64;
}
}  // namespace

BigReal::BigReal(int digits) : digits_(digits) { mpfr_init2(v_, prec_bits(digits)); }

BigReal::BigReal(const BigReal& o) : digits_(o.digits_) {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigReal::BigReal(BigReal&& o) noexcept : digits_(o.digits_) {
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, o.v_);
}

BigReal& BigReal::operator=(const BigReal& o) {
  if (this != &o) {
    mpfr_set_prec(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
    digits_ = o.digits_;
  }
  return *this;
}

BigReal& BigReal::operator=(BigReal&& o) noexcept {
  if (this != &o) {
    mpfr_swap(v_, o.v_);
    digits_ = o.digits_;
  }
  return *this;
}

BigReal::~BigReal() { mpfr_clear(v_); }

BigReal::BigReal(long v, int digits) : BigReal(digits) { mpfr_set_si(v_, v, MPFR_RNDN); }

BigReal::BigReal(const Rational& q, int digits) : BigReal(digits) {
  mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
}

BigReal BigReal::from_string(const std::string& text, int digits) {
  BigReal r(digits);
  if (mpfr_set_str(r.v_, text.c_str(), 10, MPFR_RNDN) != 0)
    throw std::invalid_argument("bad numeric literal: '" + text + "'");
  return r;
}

BigReal BigReal::from_double(double v, int digits) {
  BigReal r(digits);
  mpfr_set_d(r.v_, v, MPFR_RNDN);
  return r;
}

BigReal BigReal::pi(int digits) {
  BigReal r(digits);
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

BigReal BigReal::with_digits(int digits) const {
  BigReal r(digits);
  mpfr_set(r.v_, v_, MPFR_RNDN);
  return r;
}

BigReal BigReal::zero_like() const {
  BigReal r(digits_);
  mpfr_set_zero(r.v_, 1);
  return r;
}

std::string BigReal::to_string(int sig) const {
  if (sig < 0) sig = digits_;
  if (sig < 2) sig = 2;
  char* s = nullptr;
  if (mpfr_asprintf(&s, "%.*Re", sig - 1, v_) < 0)
    throw std::runtime_error("mpfr_asprintf failed");
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

std::string BigReal::mantissa_digits(int count, long* exp10) const {
  mpfr_exp_t e = 0;
  char* s = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(count), v_, MPFR_RNDN);
  if (!s) throw std::runtime_error("mpfr_get_str failed");
  std::string out(s);
  mpfr_free_str(s);
  if (exp10) *exp10 = static_cast<long>(e);
  return out;
}

#define OVERTOP_BINOP(name, fn)                                  \
  BigReal name(const BigReal& a, const BigReal& b) {             \
    BigReal r(std::min(a.digits_, b.digits_));                   \
    fn(r.v_, a.v_, b.v_, MPFR_RNDN);                             \
    return r;                                                    \
  }

OVERTOP_BINOP(operator+, mpfr_add)
OVERTOP_BINOP(operator-, mpfr_sub)
OVERTOP_BINOP(operator*, mpfr_mul)
OVERTOP_BINOP(operator/, mpfr_div)
#undef OVERTOP_BINOP

BigReal operator-(const BigReal& a) {
  BigReal r(a.digits_);
  mpfr_neg(r.v_, a.v_, MPFR_RNDN);
  return r;
}

BigReal operator+(const BigReal& a, long b) {
  BigReal r(a.digits_);
  mpfr_add_si(r.v_, a.v_, b, MPFR_RNDN);
  return r;
}
BigReal operator-(const BigReal& a, long b) {
  BigReal r(a.digits_);
  mpfr_sub_si(r.v_, a.v_, b, MPFR_RNDN);
  return r;
}
BigReal operator+(long a, const BigReal& b) { return b + a; }
BigReal operator-(long a, const BigReal& b) {
  BigReal r(b.digits_);
  mpfr_si_sub(r.v_, a, b.v_, MPFR_RNDN);
  return r;
}
BigReal operator*(long a, const BigReal& b) {
  BigReal r(b.digits_);
  mpfr_mul_si(r.v_, b.v_, a, MPFR_RNDN);
  return r;
}
BigReal operator*(const BigReal& a, long b) { return b * a; }
BigReal operator/(const BigReal& a, long b) {
  BigReal r(a.digits_);
  mpfr_div_si(r.v_, a.v_, b, MPFR_RNDN);
  return r;
}
BigReal operator/(long a, const BigReal& b) {
  BigReal r(b.digits_);
  mpfr_si_div(r.v_, a, b.v_, MPFR_RNDN);
  return r;
}

int cmp(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_); }
int cmp(const BigReal& a, long b) { return mpfr_cmp_si(a.v_, b); }

BigReal sqrt(const BigReal& a) {
  if (a.sign() < 0) throw std::domain_error("sqrt of negative BigReal");
  BigReal r(a.digits_);
  mpfr_sqrt(r.v_, a.v_, MPFR_RNDN);
  return r;
}

BigReal cbrt(const BigReal& a) {
  BigReal r(a.digits_);
  mpfr_cbrt(r.v_, a.v_, MPFR_RNDN);
  return r;
}

BigReal nthroot(const BigReal& a, unsigned long n) {
  BigReal r(a.digits_);
#if MPFR_VERSION_MAJOR >= 4
  mpfr_rootn_ui(r.v_, a.v_, n, MPFR_RNDN);
#else
  mpfr_root(r.v_, a.v_, n, MPFR_RNDN);
#endif
  return r;
}

BigReal abs(const BigReal& a) {
  BigReal r(a.digits_);
  mpfr_abs(r.v_, a.v_, MPFR_RNDN);
  return r;
}

BigReal pow_int(const BigReal& a, long e) {
  BigReal r(a.digits_);
  mpfr_pow_si(r.v_, a.v_, e, MPFR_RNDN);
  return r;
}

BigReal cos(const BigReal& a) {
  BigReal r(a.digits_);
  mpfr_cos(r.v_, a.v_, MPFR_RNDN);
  return r;
}

BigReal sin(const BigReal& a) {
  BigReal r(a.digits_);
  mpfr_sin(r.v_, a.v_, MPFR_RNDN);
  return r;
}

BigReal acos(const BigReal& a) {
  BigReal r(a.digits_);
  mpfr_acos(r.v_, a.v_, MPFR_RNDN);
  return r;
}

BigReal atan2(const BigReal& y, const BigReal& x) {
  BigReal r(std::min(y.digits_, x.digits_));
  mpfr_atan2(r.v_, y.v_, x.v_, MPFR_RNDN);
  return r;
}

mpz_class BigReal::floor_mpz() const {
  mpz_class z;
  mpfr_get_z(z.get_mpz_t(), v_, MPFR_RNDD);
  return z;
}

Rational BigReal::to_rational_exact() const {
  if (is_zero()) return Rational(0);
  mpq_class q;
  mpfr_get_q(q.get_mpq_t(), v_);
  return q;
}

BigReal exp10_int(long e, int digits) {
  BigReal r(digits);
  mpfr_set_si(r.v_, 10, MPFR_RNDN);
  mpfr_pow_si(r.v_, r.v_, e, MPFR_RNDN);
  return r;
}

BigReal surd_to_bigreal(const Surd2& s, int digits) {
  BigReal rat(s.rat, digits);
  if (s.surd == 0) return rat;
  BigReal two(2, digits);
  return rat + BigReal(s.surd, digits) * sqrt(two);
}

bool BigComplex::is_real(const BigReal& tol) const { return abs(im) <= tol; }

BigComplex cadd(const BigComplex& a, const BigComplex& b) { return {a.re + b.re, a.im + b.im}; }
BigComplex csub(const BigComplex& a, const BigComplex& b) { return {a.re - b.re, a.im - b.im}; }
BigComplex cmul(const BigComplex& a, const BigComplex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
BigComplex cdiv(const BigComplex& a, const BigComplex& b) {
  BigReal n = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}
BigReal cabs(const BigComplex& a) { return sqrt(a.re * a.re + a.im * a.im); }
BigComplex csqrt(const BigComplex& a) {
  BigReal m = cabs(a);
  if (a.im.is_zero()) {
    if (a.re.sign() >= 0) return {sqrt(a.re), a.re.zero_like()};
    return {a.re.zero_like(), sqrt(-a.re)};
  }
  BigReal u = sqrt((m + a.re) / 2);
  BigReal v = sqrt((m - a.re) / 2);
  if (a.im.sign() < 0) v = -v;
  return {u, v};
}

}  // namespace overtop

#ifndef OVERTOP_TOP_HPP
#define OVERTOP_TOP_HPP

#include <optional>
#include <string>
#include <vector>

#include "overtop/poly.hpp"

namespace overtop {

// A polynomial together with the multiplicity it claims for the (unknown)
// shared root. Claims default to 1: squaring-style constructions are allowed
// to opt in to 2, never assumed.
template <class T>
struct OverlapSpec {
  Polynomial<T> poly;
  int claimed_multiplicity = 1;
  std::string name;
};

template <class T>
Polynomial<T> monic_transform(const Polynomial<T>& f) {
  if (f.is_zero()) throw std::domain_error("monic transform of the zero polynomial");
  Polynomial<T> r = f;
  const T lead = f.lead();
  for (auto& v : r.c) v = T(v / lead);
  return r;
}

// monic(S) - monic(T) for equal degrees; the common-root order drops by at
// least one while every shared root survives.
template <class T>
Polynomial<T> lop1_delta(const Polynomial<T>& S, const Polynomial<T>& Tp) {
  if (S.is_zero() || Tp.is_zero())
    throw std::domain_error("lop1_delta needs nonzero operands");
  if (S.degree() != Tp.degree() || S.degree() < 1)
    throw std::invalid_argument("lop1_delta: degree mismatch (use top_delta)");
  return monic_transform(S) - monic_transform(Tp);
}

// General overlapped-polynomial delta: pad the lower-degree operand with x^d,
// differentiate both mu-1 times, then subtract the monic transforms. Any root
// shared with multiplicity >= the claims survives in the result.
template <class T>
Polynomial<T> top_delta(const OverlapSpec<T>& S, const OverlapSpec<T>& Tsp) {
  if (S.poly.is_zero() || Tsp.poly.is_zero())
    throw std::domain_error("top_delta needs nonzero operands");
  if (S.poly.degree() < Tsp.poly.degree())
    throw std::invalid_argument("top_delta: first operand must have the higher degree");
  if (S.claimed_multiplicity < 1 || Tsp.claimed_multiplicity < 1)
    throw std::invalid_argument("top_delta: multiplicity claims must be positive");
  if (S.claimed_multiplicity > S.poly.degree() ||
      Tsp.claimed_multiplicity > Tsp.poly.degree())
    throw std::invalid_argument("top_delta: claim exceeds degree");
  const size_t delta = static_cast<size_t>(S.poly.degree() - Tsp.poly.degree());
  const int mu = std::min(S.claimed_multiplicity, Tsp.claimed_multiplicity);
  Polynomial<T> a = S.poly;
  Polynomial<T> b = shift_up(Tsp.poly, delta);
  for (int k = 1; k < mu; ++k) {
    a = poly_derivative(a);
    b = poly_derivative(b);
  }
  return monic_transform(a) - monic_transform(b);
}

struct ReductionStep {
  std::string left, right;  // operand names
  std::string op;           // LOP1 | LOP2 | TOP | derivative
  std::string result_name;
  Polynomial<Rational> result;
  long result_degree;  // -1 when the delta vanished identically
};

struct ReductionTrace {
  std::vector<ReductionStep> steps;
  Polynomial<Rational> terminal;
  std::string terminal_name;
  bool null_detected = false;
};

// Deterministic reduction: operands are kept sorted by (degree, name); mixed
// degrees are first equalized against the sorted predecessor, then every
// lowest-degree pair is combined, keeping the nonzero deltas of minimal
// degree, until deltas stop producing anything new.
ReductionTrace reduce_chain(const std::vector<OverlapSpec<Rational>>& polys);

struct RootCandidate {
  BigReal value;
  bool exact = false;
  Rational exact_value = Rational(0);
  std::vector<BigReal> residuals;  // one per input polynomial
  bool selected = false;
};

struct SharedRootResult {
  BigReal value;
  bool exact = false;
  Rational exact_value = Rational(0);
  std::vector<RootCandidate> certificate;
  ReductionTrace trace;
};

// Collapse the family, solve the terminal in closed form, and pick the unique
// candidate annihilating every input (exact rational reconstruction first,
// residual comparison otherwise). `filter` restricts candidates to (lo, hi).
SharedRootResult shared_root(const std::vector<OverlapSpec<Rational>>& polys,
                             std::optional<std::pair<Rational, Rational>> filter = {});

}  // namespace overtop

#endif

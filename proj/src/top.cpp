#include "overtop/top.hpp"

#include <algorithm>
#include <set>

#include "overtop/closed_form.hpp"

namespace overtop {

namespace {

bool degree_name_less(const OverlapSpec<Rational>& a, const OverlapSpec<Rational>& b) {
  if (a.poly.degree() != b.poly.degree()) return a.poly.degree() < b.poly.degree();
  return a.name < b.name;
}

std::string step_op(const OverlapSpec<Rational>& S, const OverlapSpec<Rational>& T) {
  const bool same_degree = S.poly.degree() == T.poly.degree();
  const int mu = std::min(S.claimed_multiplicity, T.claimed_multiplicity);
  if (same_degree) return mu == 1 ? "LOP1" : "LOP2";
  return "TOP";
}

}  // namespace

ReductionTrace reduce_chain(const std::vector<OverlapSpec<Rational>>& input) {
  if (input.size() < 2)
    throw std::invalid_argument("reduce_chain needs at least two polynomials");
  std::vector<OverlapSpec<Rational>> level;
  {
    std::set<std::string> seen;
    int idx = 0;
    for (OverlapSpec<Rational> s : input) {
      if (s.poly.is_zero())
        throw std::domain_error("reduce_chain: zero polynomial in input");
      if (s.name.empty()) s.name = "p" + std::to_string(idx);
      ++idx;
      if (!seen.insert(s.name).second)
        throw std::invalid_argument("reduce_chain: duplicate name '" + s.name + "'");
      level.push_back(std::move(s));
    }
  }

  ReductionTrace tr;
  auto record = [&tr](const OverlapSpec<Rational>& S, const OverlapSpec<Rational>& T,
                      const Polynomial<Rational>& res, const std::string& rname) {
    tr.steps.push_back(
        {S.name, T.name, step_op(S, T), rname, res, res.is_zero() ? -1 : res.degree()});
  };

  while (true) {
    std::sort(level.begin(), level.end(), degree_name_less);

    // premise diagnostic: the whole level must keep a common factor
    if (level.size() > 1) {
      Polynomial<Rational> g = level[0].poly;
      for (size_t i = 1; i < level.size() && g.degree() != 0; ++i)
        g = poly_gcd(g, level[i].poly);
      if (g.degree() == 0)
        throw std::domain_error(
            "reduce_chain: current polynomials have constant gcd, no common root exists");
    }

    if (level.size() == 1) break;

    const long dmin = level.front().poly.degree();
    if (level.back().poly.degree() != dmin) {
      // equalization pass: fold each higher-degree entry onto its predecessor
      std::vector<OverlapSpec<Rational>> next;
      for (size_t i = 0; i < level.size(); ++i) {
        if (level[i].poly.degree() == dmin) {
          next.push_back(level[i]);
          continue;
        }
        const auto& pred = level[i - 1];
        Polynomial<Rational> d = top_delta(level[i], pred);
        std::string rname = "(" + level[i].name + "." + pred.name + ")";
        record(level[i], pred, d, rname);
        if (d.is_zero()) {
          tr.null_detected = true;
          continue;
        }
        next.push_back({std::move(d), 1, std::move(rname)});
      }
      if (next.empty()) {
        tr.null_detected = true;
        level.resize(1);
        break;
      }
      level = std::move(next);
      continue;
    }

    if (dmin == 0) break;

    // uniform phase: all pairs at the shared degree
    std::vector<OverlapSpec<Rational>> deltas;
    for (size_t i = 0; i < level.size(); ++i) {
      for (size_t j = i + 1; j < level.size(); ++j) {
        Polynomial<Rational> d = top_delta(level[i], level[j]);
        std::string rname = "(" + level[i].name + "." + level[j].name + ")";
        record(level[i], level[j], d, rname);
        if (d.is_zero()) {
          tr.null_detected = true;
          continue;
        }
        deltas.push_back({std::move(d), 1, std::move(rname)});
      }
    }
    if (deltas.empty()) {
      // equivalence plateau: everything at this degree is proportional
      tr.null_detected = true;
      break;
    }
    long dnew = deltas.front().poly.degree();
    for (const auto& d : deltas) dnew = std::min(dnew, d.poly.degree());
    std::vector<OverlapSpec<Rational>> kept;
    for (auto& d : deltas)
      if (d.poly.degree() == dnew) kept.push_back(std::move(d));
    level = std::move(kept);
  }

  std::sort(level.begin(), level.end(), degree_name_less);
  tr.terminal = level.front().poly;
  tr.terminal_name = level.front().name;
  return tr;
}

namespace {

// Continued-fraction reconstruction of a rational from its decimal expansion.
std::optional<Rational> rational_reconstruct(const BigReal& x, const BigReal& tol) {
  const mpz_class den_cap = mpz_class("1000000000000");
  mpz_class h2 = 0, h1 = 1, k2 = 1, k1 = 0;  // convergent state
  BigReal cur = x;
  for (int it = 0; it < 64; ++it) {
    mpz_class a = cur.floor_mpz();
    mpz_class h = a * h1 + h2, k = a * k1 + k2;
    if (k > den_cap) return std::nullopt;
    Rational cand(h, k);
    cand.canonicalize();
    if (abs(x - BigReal(cand, x.digits())) <= tol) return cand;
    BigReal frac = cur - BigReal(Rational(a), cur.digits());
    if (frac <= tol) return std::nullopt;
    cur = 1 / frac;
    h2 = h1; h1 = h;
    k2 = k1; k1 = k;
  }
  return std::nullopt;
}

}  // namespace

SharedRootResult shared_root(const std::vector<OverlapSpec<Rational>>& polys,
                             std::optional<std::pair<Rational, Rational>> filter) {
  if (polys.empty()) throw std::invalid_argument("shared_root: empty input");
  const int wp = 80;
  ReductionTrace tr;
  if (polys.size() == 1) {
    if (polys[0].poly.is_zero()) throw std::domain_error("shared_root: zero polynomial");
    tr.terminal = polys[0].poly;
    tr.terminal_name = polys[0].name.empty() ? "p0" : polys[0].name;
  } else {
    tr = reduce_chain(polys);
  }
  const Polynomial<Rational>& term = tr.terminal;
  if (term.degree() > 4)
    throw std::domain_error("shared_root: terminal degree exceeds closed-form range");
  if (term.degree() < 1)
    throw std::domain_error("shared_root: terminal polynomial carries no root");

  // real roots of the terminal
  std::vector<BigReal> cand_values;
  const BigReal im_tol = exp10_int(10 - wp, wp);
  {
    Polynomial<Rational> m = term;
    Rational inv_lead = 1 / m.lead();
    for (auto& q : m.c) q *= inv_lead;
    auto cf = [&](size_t i) { return BigReal(m.c[i], wp); };
    switch (term.degree()) {
      case 1:
        cand_values.push_back(-cf(0));
        break;
      case 2: {
        Rational disc = m.c[1] * m.c[1] - 4 * m.c[0];
        if (sgn(disc) >= 0) {
          BigReal sq = sqrt(BigReal(disc, wp));
          cand_values.push_back((-cf(1) + sq) / 2);
          cand_values.push_back((-cf(1) - sq) / 2);
        }
        break;
      }
      case 3: {
        CubicSolution sol = solve_monic_cubic(cf(2), cf(1), cf(0), wp);
        for (const auto& r : sol.roots)
          if (abs(r.im) <= im_tol * (1 + abs(r.re))) cand_values.push_back(r.re);
        break;
      }
      default: {
        auto roots = solve_monic_quartic(cf(3), cf(2), cf(1), cf(0), wp);
        for (const auto& r : roots)
          if (abs(r.im) <= im_tol * (1 + abs(r.re))) cand_values.push_back(r.re);
        break;
      }
    }
  }
  if (cand_values.empty())
    throw std::domain_error("shared_root: terminal has no real roots to offer");

  SharedRootResult out{cand_values.front(), false, Rational(0), {}, tr};
  const BigReal cf_tol = exp10_int(-40, wp);
  std::vector<Polynomial<BigReal>> numeric_inputs;
  std::vector<BigReal> scales;
  for (const auto& s : polys) {
    numeric_inputs.push_back(to_bigreal(s.poly, wp));
    scales.push_back(coeff_scale(numeric_inputs.back()));
  }

  for (const BigReal& v : cand_values) {
    RootCandidate c{v, false, Rational(0), {}, false};
    if (auto q = rational_reconstruct(v, cf_tol)) {
      bool all_zero = true;
      for (const auto& s : polys)
        if (poly_eval(s.poly, *q) != 0) {
          all_zero = false;
          break;
        }
      if (all_zero) {
        c.exact = true;
        c.exact_value = *q;
        c.value = BigReal(*q, wp);
        for (size_t i = 0; i < polys.size(); ++i) c.residuals.push_back(v.zero_like());
      }
    }
    if (!c.exact)
      for (size_t i = 0; i < numeric_inputs.size(); ++i)
        c.residuals.push_back(abs(poly_eval(numeric_inputs[i], v)));
    out.certificate.push_back(std::move(c));
  }

  // optional interval filter on candidates
  auto admitted = [&](const RootCandidate& c) {
    if (!filter) return true;
    BigReal lo(filter->first, wp), hi(filter->second, wp);
    return c.value >= lo && c.value <= hi;
  };

  const BigReal annihilate_tol = exp10_int(6 - wp, wp);
  std::vector<size_t> exact_idx, numeric_ok_idx;
  for (size_t i = 0; i < out.certificate.size(); ++i) {
    const auto& c = out.certificate[i];
    if (!admitted(c)) continue;
    if (c.exact) {
      exact_idx.push_back(i);
      continue;
    }
    bool ok = true;
    for (size_t j = 0; j < c.residuals.size(); ++j)
      if (c.residuals[j] > annihilate_tol * scales[j]) {
        ok = false;
        break;
      }
    if (ok) numeric_ok_idx.push_back(i);
  }

  size_t pick = out.certificate.size();
  if (exact_idx.size() == 1) {
    pick = exact_idx[0];
  } else if (exact_idx.size() > 1) {
    throw std::runtime_error(
        "shared_root: ambiguous, two exact candidates annihilate all inputs; "
        "narrow with an interval filter");
  } else if (numeric_ok_idx.size() == 1) {
    pick = numeric_ok_idx[0];
  } else if (numeric_ok_idx.size() > 1) {
    throw std::runtime_error(
        "shared_root: ambiguous, multiple candidates annihilate all inputs; "
        "narrow with an interval filter");
  } else {
    // fall back to the minimal max-residual candidate among admitted ones
    BigReal best = exp10_int(wp, wp);
    for (size_t i = 0; i < out.certificate.size(); ++i) {
      const auto& c = out.certificate[i];
      if (!admitted(c) || c.exact) continue;
      BigReal mx = c.residuals.empty() ? best : c.residuals[0];
      for (const auto& r : c.residuals)
        if (r > mx) mx = r;
      if (mx < best) {
        best = mx;
        pick = i;
      }
    }
    if (pick == out.certificate.size())
      throw std::runtime_error("shared_root: no admissible candidate (filter too narrow?)");
  }

  out.certificate[pick].selected = true;
  out.value = out.certificate[pick].value;
  out.exact = out.certificate[pick].exact;
  out.exact_value = out.certificate[pick].exact_value;
  return out;
}

}  // namespace overtop

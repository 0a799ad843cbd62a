#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "overtop/asym.hpp"
#include "overtop/closed_form.hpp"
#include "overtop/geom_oracle.hpp"
#include "overtop/poly.hpp"
#include "overtop/quintic.hpp"
#include "overtop/sym.hpp"
#include "overtop/top.hpp"

using namespace overtop;

namespace {

// ---------------------------------------------------------------- formatting

// Plain positional decimal at `sig` significant digits; falls back to
// scientific notation when the magnitude makes positional form unreadable.
std::string fixed_decimal(const BigReal& v, int sig) {
  if (v.is_zero()) return "0";
  long e = 0;
  std::string m = v.mantissa_digits(sig, &e);
  bool neg = !m.empty() && m[0] == '-';
  if (neg) m.erase(0, 1);
  std::string out;
  if (e <= 0 && e > -6) {
    out = "0." + std::string(static_cast<size_t>(-e), '0') + m;
  } else if (e > 0 && e <= sig) {
    out = m.substr(0, static_cast<size_t>(e));
    std::string frac = m.substr(static_cast<size_t>(e));
    out += "." + (frac.empty() ? std::string("0") : frac);
  } else {
    return v.to_string(sig);
  }
  return neg ? "-" + out : out;
}

// Short scientific form for residuals; exact zeros stay "0".
std::string sci(const BigReal& v, int sig = 3) {
  return v.is_zero() ? "0" : v.to_string(sig);
}

std::string complex_str(const BigComplex& z, int sig) {
  BigReal tiny = exp10_int(2 - sig, z.re.digits());
  BigReal mag = abs(z.re) + 1;
  if (z.im.is_zero() || abs(z.im) <= tiny * mag) return fixed_decimal(z.re, sig);
  std::string im = fixed_decimal(abs(z.im), sig);
  return fixed_decimal(z.re, sig) + (z.im.sign() < 0 ? " - " : " + ") + im + "i";
}

std::string json_quote(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out + "\"";
}

// ------------------------------------------------------------------- parsing

// Exact rational from "p/q", integer, decimal, or exponent notation.
Rational flexible_rational(const std::string& tok) {
  if (tok.find('/') != std::string::npos) return rat_from_string(tok);
  std::string s = tok;
  long exp10 = 0;
  size_t epos = s.find_first_of("eE");
  if (epos != std::string::npos) {
    exp10 = std::stol(s.substr(epos + 1));
    s.erase(epos);
  }
  size_t dpos = s.find('.');
  if (dpos != std::string::npos) {
    exp10 -= static_cast<long>(s.size() - dpos - 1);
    s.erase(dpos, 1);
  }
  if (s.empty() || s == "-" || s == "+")
    throw std::invalid_argument("bad numeric token: '" + tok + "'");
  Rational v = rat_from_string(s);
  mpz_class p10;
  mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(exp10 < 0 ? -exp10 : exp10));
  return exp10 < 0 ? Rational(v / Rational(p10)) : Rational(v * Rational(p10));
}

const std::string kNumberPattern =
    "[+-]?([0-9]+([.][0-9]*)?|[.][0-9]+)([eE][+-]?[0-9]+)?";

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<OverlapSpec<Rational>> load_family(const std::string& path) {
  std::vector<NamedPoly> named = parse_poly_file(slurp(path));
  if (named.size() < 2)
    throw std::runtime_error("'" + path + "' holds " + std::to_string(named.size()) +
                             " polynomial(s); need at least two");
  std::vector<OverlapSpec<Rational>> specs;
  for (auto& np : named) specs.push_back({std::move(np.poly), 1, std::move(np.name)});
  return specs;
}

std::string coeff_list(const Polynomial<Rational>& f) {
  std::string out;
  for (size_t i = 0; i < f.c.size(); ++i) {
    if (i) out += ' ';
    out += rat_to_string(f.c[i]);
  }
  return out.empty() ? "0" : out;
}

std::string coeff_json(const Polynomial<Rational>& f) {
  std::string out = "[";
  for (size_t i = 0; i < f.c.size(); ++i) {
    if (i) out += ',';
    out += json_quote(rat_to_string(f.c[i]));
  }
  return out + "]";
}

// ------------------------------------------------------------------ commands

int run_top_reduce(const std::string& path, bool json) {
  ReductionTrace tr = reduce_chain(load_family(path));
  if (json) {
    std::string out = "{\"steps\":[";
    for (size_t i = 0; i < tr.steps.size(); ++i) {
      const ReductionStep& st = tr.steps[i];
      if (i) out += ',';
      out += "{\"operands\":[" + json_quote(st.left) + "," + json_quote(st.right) +
             "],\"op\":" + json_quote(st.op) +
             ",\"degree\":" + std::to_string(st.result_degree) +
             ",\"coeffs\":" + coeff_json(st.result) + "}";
    }
    out += "],\"terminal\":{\"name\":" + json_quote(tr.terminal_name) +
           ",\"degree\":" + std::to_string(tr.terminal.degree()) +
           ",\"coeffs\":" + coeff_json(tr.terminal) + "},\"null_detected\":" +
           (tr.null_detected ? "true" : "false") + "}";
    std::cout << out << "\n";
    return 0;
  }
  for (size_t i = 0; i < tr.steps.size(); ++i) {
    const ReductionStep& st = tr.steps[i];
    std::cout << "step " << (i + 1) << ": " << st.left << " . " << st.right << " ["
              << st.op << "] -> " << st.result_name;
    if (st.result.is_zero())
      std::cout << " = 0 (vanished)\n";
    else
      std::cout << " degree " << st.result_degree << ": " << coeff_list(st.result)
                << "\n";
  }
  std::cout << "terminal " << tr.terminal_name << " degree " << tr.terminal.degree()
            << ": " << coeff_list(tr.terminal) << "\n";
  std::cout << "null plateau: " << (tr.null_detected ? "yes" : "no") << "\n";
  return 0;
}

int run_top_shared_root(const std::string& path, const std::string& lo,
                        const std::string& hi) {
  std::optional<std::pair<Rational, Rational>> filter;
  if (!lo.empty() || !hi.empty()) {
    if (lo.empty() || hi.empty())
      throw std::runtime_error("--lo and --hi must be given together");
    filter = {flexible_rational(lo), flexible_rational(hi)};
  }
  SharedRootResult res = shared_root(load_family(path), filter);
  if (res.exact)
    std::cout << "x = " << rat_to_string(res.exact_value) << " (exact)\n";
  else
    std::cout << "x = " << fixed_decimal(res.value, 30) << "\n";
  std::cout << "candidates:\n";
  for (const RootCandidate& cand : res.certificate) {
    std::cout << "  " << (cand.exact ? rat_to_string(cand.exact_value)
                                     : fixed_decimal(cand.value, 20))
              << "  residuals:";
    for (const BigReal& r : cand.residuals) std::cout << ' ' << sci(r);
    std::cout << (cand.selected ? "  <- selected" : "") << "\n";
  }
  return 0;
}

int run_solve(const std::string& polytext, int digits, const std::string& method) {
  std::istringstream ss(polytext);
  std::vector<Rational> coeffs;
  for (std::string tok; ss >> tok;) coeffs.push_back(flexible_rational(tok));
  if (coeffs.size() != 5 || coeffs[4] == 0)
    throw std::runtime_error("--poly needs five constant-first coefficients of a genuine quartic");
  BigReal a3(Rational(coeffs[3] / coeffs[4]), digits);
  BigReal a2(Rational(coeffs[2] / coeffs[4]), digits);
  BigReal a1(Rational(coeffs[1] / coeffs[4]), digits);
  BigReal a0(Rational(coeffs[0] / coeffs[4]), digits);
  std::cout << "monic quartic: x^4 + (" << fixed_decimal(a3, digits) << ")x^3 + ("
            << fixed_decimal(a2, digits) << ")x^2 + (" << fixed_decimal(a1, digits)
            << ")x + (" << fixed_decimal(a0, digits) << ")\n";

  std::vector<BigComplex> fer, fla;
  if (method != "formulaA") {
    fer = solve_monic_quartic(a3, a2, a1, a0, digits);
    std::cout << "ferrari roots:\n";
    for (const BigComplex& z : fer) std::cout << "  x = " << complex_str(z, digits) << "\n";
  }
  if (method != "ferrari") {
    FormulaAResult fa = quartic_closed_form_A(a3, a2, a1, a0, digits);
    fla = fa.roots;
    std::cout << "flattened-radical roots" << (fa.fell_back ? " (degenerate block, ferrari fallback)" : "")
              << ":\n";
    for (const BigComplex& z : fla) std::cout << "  x = " << complex_str(z, digits) << "\n";
  }
  if (!fer.empty() && !fla.empty()) {
    BigReal worst(0, digits);
    for (const BigComplex& f : fer) {
      BigReal best = cabs(csub(f, fla[0]));
      for (const BigComplex& g : fla) {
        BigReal d = cabs(csub(f, g));
        if (cmp(d, best) < 0) best = d;
      }
      if (cmp(best, worst) > 0) worst = best;
    }
    std::cout << "route agreement: max root mismatch " << sci(worst, 4) << "\n";
  }
  return 0;
}

int run_sym(int digits, bool json) {
  SymmetricSolution s = solve_symmetric(digits);
  if (json) {
    const SymRadicalConstants& k = s.constants;
    std::cout << "{\"epsilon\":" << fixed_decimal(s.epsilon, digits)
              << ",\"b_over_r\":" << fixed_decimal(s.b_over_r, digits)
              << ",\"digits\":" << digits << ",\"constants\":{\"C\":"
              << fixed_decimal(k.C, digits) << ",\"Delta\":" << fixed_decimal(k.Delta, digits)
              << ",\"zeta\":" << fixed_decimal(k.zeta, digits) << ",\"B\":"
              << fixed_decimal(k.B, digits) << ",\"F\":" << fixed_decimal(k.F, digits)
              << "}}\n";
    return 0;
  }
  std::cout << "epsilon      = " << fixed_decimal(s.epsilon, digits) << "\n";
  std::cout << "b/r          = " << fixed_decimal(s.b_over_r, digits) << "\n";
  std::cout << "beta/alpha   = " << fixed_decimal(s.beta_over_alpha, digits) << "\n";
  std::cout << "inadmissible = " << fixed_decimal(s.epsilon_inadmissible, digits) << "\n";
  std::cout << "complex pair = " << complex_str(s.complex_root, digits) << " and conjugate\n";
  const SymRadicalConstants& k = s.constants;
  std::cout << "C = " << fixed_decimal(k.C, digits) << "\n";
  std::cout << "Delta = " << fixed_decimal(k.Delta, digits) << "\n";
  std::cout << "zeta = " << fixed_decimal(k.zeta, digits) << "\n";
  std::cout << "B = " << fixed_decimal(k.B, digits) << "\n";
  std::cout << "F = " << fixed_decimal(k.F, digits) << "\n";
  return 0;
}

SolveReport solve_triangle(const std::string& a, const std::string& b,
                           const std::string& c, const std::string& tol,
                           long max_iter, int digits) {
  TriangleConfig t = make_triangle(BigReal::from_string(a, digits),
                                   BigReal::from_string(b, digits),
                                   BigReal::from_string(c, digits));
  BigReal wtol = BigReal::from_string(tol, digits);
  if (wtol.sign() <= 0) throw std::runtime_error("--tol must be positive");
  return solve_asymmetric(t, wtol, max_iter);
}

// report key "tangency" travels as "slope" on the wire
const char* kResidualKeys[5][2] = {{"sextic", "sextic"},
                                   {"ellipse", "ellipse"},
                                   {"circle", "circle"},
                                   {"distance", "distance"},
                                   {"tangency", "slope"}};

int run_asym(const std::string& a, const std::string& b, const std::string& c,
             const std::string& tol, long max_iter, int digits, bool json) {
  SolveReport rep = solve_triangle(a, b, c, tol, max_iter, digits);
  if (json) {
    std::ostringstream out;
    out << "{\"a\":" << a << ",\"b\":" << b << ",\"c\":" << c
        << ",\"epsilon\":" << fixed_decimal(rep.eps, digits)
        << ",\"r\":" << fixed_decimal(rep.r, digits)
        << ",\"alpha\":" << fixed_decimal(rep.ellipse.alpha, digits)
        << ",\"beta\":" << fixed_decimal(rep.ellipse.beta, digits)
        << ",\"x0\":" << fixed_decimal(rep.ellipse.x0, digits)
        << ",\"y0\":" << fixed_decimal(rep.ellipse.y0, digits)
        << ",\"x1\":" << fixed_decimal(rep.x1, digits)
        << ",\"y1\":" << fixed_decimal(rep.y1, digits)
        << ",\"xT\":" << fixed_decimal(rep.xT, digits)
        << ",\"yT\":" << fixed_decimal(rep.yT, digits)
        << ",\"iterations\":" << rep.iterations << ",\"residuals\":{";
    for (int i = 0; i < 5; ++i)
      out << (i ? "," : "") << "\"" << kResidualKeys[i][1]
          << "\":" << sci(rep.residuals.at(kResidualKeys[i][0]), 6);
    out << "}}";
    std::cout << out.str() << "\n";
    return 0;
  }
  std::cout << "triangle: a = " << a << " (effective "
            << fixed_decimal(rep.triangle.a_eff, digits) << "), b = " << b
            << ", c = " << c << "\n";
  std::cout << "epsilon = " << fixed_decimal(rep.eps, digits) << "\n";
  std::cout << "r       = " << fixed_decimal(rep.r, digits) << "\n";
  std::cout << "alpha   = " << fixed_decimal(rep.ellipse.alpha, digits) << "\n";
  std::cout << "beta    = " << fixed_decimal(rep.ellipse.beta, digits) << "\n";
  std::cout << "x0      = " << fixed_decimal(rep.ellipse.x0, digits) << "\n";
  std::cout << "y0      = " << fixed_decimal(rep.ellipse.y0, digits) << "\n";
  std::cout << "x1      = " << fixed_decimal(rep.x1, digits) << "\n";
  std::cout << "y1      = " << fixed_decimal(rep.y1, digits) << "\n";
  std::cout << "xT      = " << fixed_decimal(rep.xT, digits) << "\n";
  std::cout << "yT      = " << fixed_decimal(rep.yT, digits) << "\n";
  std::cout << "iterations = " << rep.iterations << " (damping activations "
            << rep.damping_activations << ")\n";
  std::cout << "residuals:";
  for (auto& [name, wire] : kResidualKeys)
    std::cout << " " << wire << "=" << sci(rep.residuals.at(name));
  std::cout << "\n";
  return 0;
}

int run_oracle_check(const std::string& a, const std::string& b, const std::string& c,
                     const std::string& tol, long max_iter, int digits) {
  SolveReport rep = solve_triangle(a, b, c, tol, max_iter, digits);
  std::cout << "solve: converged in " << rep.iterations
            << " iterations, r = " << fixed_decimal(rep.r, 20) << "\n";

  const BigReal& alpha = rep.ellipse.alpha;
  const BigReal& beta = rep.ellipse.beta;
  BigReal wide = cmp(rep.triangle.b, rep.triangle.c) >= 0 ? rep.triangle.b : rep.triangle.c;
  BigReal narrow = cmp(rep.triangle.b, rep.triangle.c) >= 0 ? rep.triangle.c : rep.triangle.b;
  BigReal m = narrow / wide;

  Point2 corner = corner_A(alpha, beta, m);
  BisectorLine bl = bisector_and_c1(alpha, beta, m, rep.r);
  Point2 tp = tangent_point_B(alpha, beta, m);
  Point2 tp_eps = tangent_point_B_eps(m, rep.eps, rep.r);
  BigReal gx = corner.x - tp.x, gy = corner.y - tp.y;
  BigReal on_ellipse = (gx - rep.ellipse.x0) * (gx - rep.ellipse.x0) / (alpha * alpha) +
                       (gy - rep.ellipse.y0) * (gy - rep.ellipse.y0) / (beta * beta) - 1;

  struct Check {
    const char* name;
    BigReal defect;
  } checks[] = {
      {"ellipse center x", abs(corner.x - rep.ellipse.x0)},
      {"ellipse center y", abs(corner.y - rep.ellipse.y0)},
      {"director circle", director_circle_check(alpha, beta, rep.ellipse.x0, rep.ellipse.y0)},
      {"circle center x", abs((corner.x - bl.c1.x) - rep.x1)},
      {"circle center y", abs((corner.y - bl.c1.y) - rep.y1)},
      {"contact on leg", abs(gy - m * gx)},
      {"contact on ellipse", abs(on_ellipse)},
      {"eccentricity form x", abs(tp.x - tp_eps.x)},
      {"eccentricity form y", abs(tp.y - tp_eps.y)},
  };

  BigReal bound = BigReal::from_string("1e-8", digits);
  int failures = 0;
  for (const Check& ch : checks) {
    bool ok = cmp(ch.defect, bound) <= 0;
    failures += ok ? 0 : 1;
    std::cout << "  " << ch.name << ": " << sci(ch.defect) << (ok ? "  pass" : "  FAIL")
              << "\n";
  }
  if (failures) {
    std::cout << failures << " of 9 cross-checks exceed 1e-8\n";
    return 1;
  }
  std::cout << "all 9 cross-checks within 1e-8\n";
  return 0;
}

int run_render(const std::string& a, const std::string& b, const std::string& c,
               const std::string& tol, long max_iter, int digits,
               const std::string& out_path, int size) {
  SolveReport rep = solve_triangle(a, b, c, tol, max_iter, digits);
  Figure fig{rep.triangle.b.to_double(), rep.triangle.c.to_double(),
             rep.ellipse.alpha.to_double(), rep.ellipse.beta.to_double(),
             rep.ellipse.x0.to_double(), rep.ellipse.y0.to_double(),
             rep.r.to_double(), rep.x1.to_double(), rep.y1.to_double(),
             rep.xT.to_double(), rep.yT.to_double()};
  std::string svg = render_figure_svg(fig, size);
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + out_path + "'");
  out << svg;
  out.close();
  std::cout << "wrote " << out_path << " (" << svg.size() << " bytes)\n";
  return 0;
}

int run_quintic(const std::string& b, const std::string& c, const std::string& r,
                int height, int digits, bool json) {
  BigReal lb = BigReal::from_string(b, digits);
  BigReal lc = BigReal::from_string(c, digits);
  if (cmp(lb, lc) > 0) std::swap(lb, lc);  // constructor wants ordered legs
  BringJerrard bj = bring_jerrard_from_triangle(lb, lc, BigReal::from_string(r, digits));
  Rational target = rationalize(bj.b_const, BigReal::from_string("1e-6", digits));
  SolvabilityWitness w = solvability_search(target, height);

  std::vector<BigComplex> roots;
  if (w.satisfied) roots = solvable_quintic_roots(w, digits);

  if (json) {
    std::ostringstream out;
    out << "{\"b_const\":" << fixed_decimal(bj.b_const, digits)
        << ",\"target\":" << json_quote(rat_to_string(target))
        << ",\"height\":" << height
        << ",\"candidates\":" << w.candidates_tried
        << ",\"satisfied\":" << (w.satisfied ? "true" : "false");
    if (w.satisfied) {
      out << ",\"epsilon\":" << w.epsilon_sign << ",\"p\":" << json_quote(rat_to_string(w.p))
          << ",\"q\":" << json_quote(rat_to_string(w.q)) << ",\"roots\":[";
      for (size_t i = 0; i < roots.size(); ++i)
        out << (i ? "," : "") << "{\"re\":" << fixed_decimal(roots[i].re, digits)
            << ",\"im\":" << fixed_decimal(roots[i].im, digits) << "}";
      out << "]";
    }
    out << "}";
    std::cout << out.str() << "\n";
    return 0;
  }
  std::cout << "quintic: z^5 + z + (" << fixed_decimal(bj.b_const, digits) << ")\n";
  std::cout << "constant as exact target: " << rat_to_string(target)
            << " (within 1e-6)\n";
  if (w.satisfied) {
    std::cout << "witness found after " << w.candidates_tried
              << " candidates: epsilon=" << w.epsilon_sign << " p=" << rat_to_string(w.p)
              << " q=" << rat_to_string(w.q) << "\n";
    std::cout << "solvable by radicals; roots:\n";
    for (const BigComplex& z : roots) std::cout << "  z = " << complex_str(z, digits) << "\n";
  } else {
    std::cout << "witness search exhausted at height " << height << " after "
              << w.candidates_tried << " candidates: no radical solution certified\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact tangent-circle geometry toolkit"};
  app.require_subcommand(1);

  std::string in_path, lo, hi, poly_text, method = "both";
  std::string a_str, b_str, c_str, r_str, tol_str = "1e-10", out_path;
  int digits = 40, height = 30, size = 800;
  long max_iter = 200;
  bool json = false;

  auto number_check = CLI::Validator(
      [](std::string& s) {
        try {
          BigReal::from_string(s, 15);
        } catch (const std::exception&) {
          return std::string("'" + s + "' is not a number");
        }
        static const std::string allowed = "+-.0123456789eE";
        for (char ch : s)
          if (allowed.find(ch) == std::string::npos)
            return std::string("'" + s + "' is not a plain decimal number");
        return std::string();
      },
      "NUMBER");

  CLI::App* top = app.add_subcommand("top", "degree-reduction chains on polynomial families");
  top->require_subcommand(1);
  CLI::App* reduce = top->add_subcommand("reduce", "print the full reduction trace");
  reduce->add_option("--in", in_path, "polynomial family file, one 'name: c0 c1 ...' per line")
      ->required()
      ->check(CLI::ExistingFile);
  reduce->add_flag("--json", json, "machine-readable trace");

  CLI::App* shared = top->add_subcommand("shared-root", "collapse the family and certify its shared root");
  shared->add_option("--in", in_path, "polynomial family file")->required()->check(CLI::ExistingFile);
  shared->add_option("--lo", lo, "candidate filter, lower bound");
  shared->add_option("--hi", hi, "candidate filter, upper bound");

  CLI::App* solve = app.add_subcommand("solve", "closed-form quartic roots");
  solve->add_option("--poly", poly_text, "five constant-first coefficients, e.g. \"24 -50 35 -10 1\"")
      ->required();
  solve->add_option("--digits", digits, "working decimal digits")->check(CLI::Range(12, 100000));
  solve->add_option("--method", method, "ferrari | formulaA | both")
      ->check(CLI::IsMember({"ferrari", "formulaA", "both"}));

  CLI::App* sym = app.add_subcommand("sym", "equal-leg configuration");
  sym->require_subcommand(1);
  CLI::App* sym_solve = sym->add_subcommand("solve", "eccentricity and b/r in closed form");
  sym_solve->add_option("--digits", digits, "working decimal digits")->check(CLI::Range(12, 100000));
  sym_solve->add_flag("--json", json, "machine-readable result");

  CLI::App* asym = app.add_subcommand("asym", "general right-triangle configuration");
  asym->require_subcommand(1);
  CLI::App* asym_solve = asym->add_subcommand("solve", "fixed-point solve for the tangent circle");
  asym_solve->add_option("--a", a_str, "hypotenuse")->required()->check(number_check);
  asym_solve->add_option("--b", b_str, "first leg")->required()->check(number_check);
  asym_solve->add_option("--c", c_str, "second leg")->required()->check(number_check);
  asym_solve->add_option("--tol", tol_str, "relative convergence tolerance")->check(number_check);
  asym_solve->add_option("--max-iter", max_iter, "iteration budget")->check(CLI::Range(1L, 1000000L));
  asym_solve->add_option("--digits", digits, "working decimal digits")->check(CLI::Range(12, 100000));
  asym_solve->add_flag("--json", json, "machine-readable report");

  CLI::App* oracle = app.add_subcommand("oracle", "independent geometric cross-checks");
  oracle->require_subcommand(1);
  CLI::App* oracle_check = oracle->add_subcommand("check", "solve, then re-derive the configuration independently");
  oracle_check->add_option("--a", a_str, "hypotenuse")->required()->check(number_check);
  oracle_check->add_option("--b", b_str, "first leg")->required()->check(number_check);
  oracle_check->add_option("--c", c_str, "second leg")->required()->check(number_check);
  oracle_check->add_option("--tol", tol_str, "solver tolerance")->check(number_check);
  oracle_check->add_option("--max-iter", max_iter, "iteration budget")->check(CLI::Range(1L, 1000000L));
  oracle_check->add_option("--digits", digits, "working decimal digits")->check(CLI::Range(12, 100000));

  CLI::App* render = app.add_subcommand("render", "figure output");
  render->require_subcommand(1);
  CLI::App* render_fig = render->add_subcommand("figure", "solve and draw the configuration as SVG");
  render_fig->add_option("--a", a_str, "hypotenuse")->required()->check(number_check);
  render_fig->add_option("--b", b_str, "first leg")->required()->check(number_check);
  render_fig->add_option("--c", c_str, "second leg")->required()->check(number_check);
  render_fig->add_option("--out", out_path, "output SVG path")->required();
  render_fig->add_option("--size", size, "image width in pixels")->check(CLI::Range(64, 100000));
  render_fig->add_option("--tol", tol_str, "solver tolerance")->check(number_check);
  render_fig->add_option("--max-iter", max_iter, "iteration budget")->check(CLI::Range(1L, 1000000L));
  render_fig->add_option("--digits", digits, "working decimal digits")->check(CLI::Range(12, 100000));

  CLI::App* quintic = app.add_subcommand("quintic", "radical-solvability analysis");
  quintic->require_subcommand(1);
  CLI::App* quintic_an = quintic->add_subcommand("analyze", "trinomial form and witness search for legs and radius");
  quintic_an->add_option("--b", b_str, "first leg")->required()->check(number_check);
  quintic_an->add_option("--c", c_str, "second leg")->required()->check(number_check);
  quintic_an->add_option("--r", r_str, "circle radius")->required()->check(number_check);
  quintic_an->add_option("--height", height, "search bound on numerators and denominators")
      ->check(CLI::Range(1, 1000));
  quintic_an->add_option("--digits", digits, "working decimal digits")->check(CLI::Range(12, 100000));
  quintic_an->add_flag("--json", json, "machine-readable result");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    if (reduce->parsed()) return run_top_reduce(in_path, json);
    if (shared->parsed()) return run_top_shared_root(in_path, lo, hi);
    if (solve->parsed()) return run_solve(poly_text, digits, method);
    if (sym_solve->parsed()) return run_sym(digits, json);
    if (asym_solve->parsed()) return run_asym(a_str, b_str, c_str, tol_str, max_iter, digits, json);
    if (oracle_check->parsed()) return run_oracle_check(a_str, b_str, c_str, tol_str, max_iter, digits);
    if (render_fig->parsed()) return run_render(a_str, b_str, c_str, tol_str, max_iter, digits, out_path, size);
    if (quintic_an->parsed()) return run_quintic(b_str, c_str, r_str, height, digits, json);
  } catch (const NonConvergenceError& e) {
    std::cerr << "computation failed: " << e.what() << " (last radius "
              << fixed_decimal(e.trace.radii.back(), 20) << " after "
              << (e.trace.radii.size() - 1) << " steps)\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "computation failed: " << e.what() << "\n";
    return 1;
  }
  std::cerr << "usage error: no command selected\n" << app.help();
  return 2;
}

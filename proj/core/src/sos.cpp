#include "copos/sos.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <stdexcept>

#include "copos/combinatorics.hpp"
#include "copos/errors.hpp"

namespace copos {

std::string to_string(Hierarchy h) {
  switch (h) {
    case Hierarchy::Theta: return "Theta";
    case Hierarchy::Zeta: return "Zeta";
    case Hierarchy::LasserreSimplex: return "LasserreSimplex";
    case Hierarchy::Preordering: return "Preordering";
    case Hierarchy::Sphere: return "Sphere";
    case Hierarchy::Shor: return "Shor";
  }
  return "?";
}

std::optional<Hierarchy> parse_hierarchy(const std::string& name) {
  std::string s = name;
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  if (s == "theta") return Hierarchy::Theta;
  if (s == "zeta") return Hierarchy::Zeta;
  if (s == "lasserre" || s == "simplex" || s == "lasserresimplex") return Hierarchy::LasserreSimplex;
  if (s == "preordering" || s == "po") return Hierarchy::Preordering;
  if (s == "sphere") return Hierarchy::Sphere;
  if (s == "shor") return Hierarchy::Shor;
  return std::nullopt;
}

bool bounds_alpha_directly(Hierarchy h) { return h == Hierarchy::Theta || h == Hierarchy::Zeta; }

std::string to_string(BoundOutcome o) {
  switch (o) {
    case BoundOutcome::Finite: return "Finite";
    case BoundOutcome::Infeasible: return "Infeasible";
    case BoundOutcome::Unbounded: return "Unbounded";
    case BoundOutcome::NotConverged: return "NotConverged";
  }
  return "?";
}

namespace {

std::string monomial_label(const Exponent& a) {
  std::string s;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += 'x' + std::to_string(i + 1);
    if (a[i] > 1) s += '^' + std::to_string(a[i]);
  }
  return s.empty() ? "1" : s;
}

std::string set_label(const Exponent& chi) {
  std::string s = "{";
  bool first = true;
  for (std::size_t i = 0; i < chi.size(); ++i) {
    if (chi[i] == 0) continue;
    if (!first) s += ',';
    first = false;
    s += std::to_string(i + 1);
  }
  return s + "}";
}

std::vector<double> dense_row_major(const SymMatrix& m) {
  const int n = m.dim();
  std::vector<double> out(static_cast<std::size_t>(n * n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) out[static_cast<std::size_t>(i * n + j)] = m(i, j);
  }
  return out;
}

Exponent zero_exponent(int n) { return Exponent(static_cast<std::size_t>(n), 0); }

Exponent unit_exponent(int n, int i) {
  Exponent e = zero_exponent(n);
  e[static_cast<std::size_t>(i)] = 1;
  return e;
}

// Collects coefficient contributions per monomial and turns them into rows.
class Assembler {
 public:
  Assembler(int n, SosProgram& sp) : n_(n), sp_(sp) { sp_.num_vars = n; }

  void gram(const std::string& label, std::vector<Exponent> basis, const Exponent& shift) {
    GramTerm g;
    g.shift = shift;
    if (basis.size() == 1) {
      g.scalar_var = sp_.program.add_nonneg(label);
      contribute(add_exponents(add_exponents(basis[0], basis[0]), shift), g.scalar_var, 1.0);
    } else {
      const int size = static_cast<int>(basis.size());
      g.block = sp_.program.add_psd_block(label, size);
      for (int j = 0; j < size; ++j) {
        for (int i = j; i < size; ++i) {
          const Exponent m = add_exponents(add_exponents(basis[i], basis[j]), shift);
          contribute(m, sp_.program.psd_var(g.block, i, j), i == j ? 1.0 : 2.0);
        }
      }
    }
    g.basis = std::move(basis);
    sp_.grams.push_back(std::move(g));
  }

  void free_poly(const std::string& label, std::vector<Exponent> basis, const Polynomial& factor) {
    FreePolyTerm f;
    f.factor = factor;
    for (const Exponent& a : basis) {
      const int v = sp_.program.add_free(label + "[" + monomial_label(a) + "]");
      f.vars.push_back(v);
      for (const auto& [b, c] : factor.terms()) contribute(add_exponents(a, b), v, c);
    }
    f.basis = std::move(basis);
    sp_.free_polys.push_back(std::move(f));
  }

  int scalar(int var, const Polynomial& factor) {
    for (const auto& [b, c] : factor.terms()) contribute(b, var, c);
    sp_.scalars.push_back({var, factor});
    return var;
  }

  void finish(const Polynomial& target, long long max_rows) {
    sp_.target = target;
    for (const auto& [a, c] : target.terms()) rows_[a];
    if (static_cast<long long>(rows_.size()) > max_rows) {
      throw RefusalError("program needs " + std::to_string(rows_.size()) +
                         " coefficient rows, above the cap of " + std::to_string(max_rows));
    }
    for (auto& [a, terms] : rows_) {
      const double rhs = target.coefficient(a);
      if (terms.empty()) {
        throw std::logic_error("monomial " + monomial_label(a) +
                               " has a target coefficient but no certificate term");
      }
      sp_.program.add_equality(terms, rhs, monomial_label(a));
      sp_.row_monomials.push_back(a);
    }
  }

 private:
  void contribute(const Exponent& m, int var, double coef) { rows_[m].push_back({var, coef}); }

  int n_;
  SosProgram& sp_;
  std::map<Exponent, std::vector<LinearTerm>, MonomialOrder> rows_;
};

std::vector<Exponent> homogeneous_list(int n, int d) { return MonomialBasis::homogeneous(n, d).monomials(); }
std::vector<Exponent> up_to_list(int n, int d) { return MonomialBasis::up_to(n, d).monomials(); }

// Characteristic vectors of all subsets of [n] with the given size, in
// lexicographic order of their member lists.
std::vector<Exponent> subsets_of_size(int n, int k) {
  std::vector<Exponent> out;
  if (k > n) return out;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    Exponent chi = zero_exponent(n);
    for (int i : idx) chi[static_cast<std::size_t>(i)] = 1;
    out.push_back(std::move(chi));
    int pos = k - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n - k + pos) --pos;
    if (pos < 0) break;
    ++idx[static_cast<std::size_t>(pos)];
    for (int i = pos + 1; i < k; ++i) idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
  }
  return out;
}

void check_square(const SymMatrix& m) {
  if (m.dim() < 1) throw std::invalid_argument("matrix must have at least one row");
}

// Structured certificate of (sum y)^r y^T B y with sigma_I blocks; the caller
// adds the scalar term that carries t or lambda.
void add_structured_blocks(Assembler& as, int n, int r) {
  for (int k = r % 2; k <= r + 2; k += 2) {
    const int h = (r + 2 - k) / 2;
    std::vector<Exponent> basis = homogeneous_list(n, h);
    for (const Exponent& chi : subsets_of_size(n, k)) {
      as.gram("sigma" + set_label(chi), basis, chi);
    }
  }
}

}  // namespace

Polynomial SosProgram::reconstruct(const std::vector<double>& x) const {
  Polynomial out(num_vars);
  for (const GramTerm& g : grams) {
    if (g.scalar_var >= 0) {
      out.add_term(add_exponents(add_exponents(g.basis[0], g.basis[0]), g.shift),
                   x[static_cast<std::size_t>(g.scalar_var)]);
      continue;
    }
    const int s = static_cast<int>(g.basis.size());
    for (int i = 0; i < s; ++i) {
      for (int j = 0; j < s; ++j) {
        const double v = x[static_cast<std::size_t>(program.psd_var(g.block, i, j))];
        out.add_term(add_exponents(add_exponents(g.basis[i], g.basis[j]), g.shift), v);
      }
    }
  }
  for (const FreePolyTerm& f : free_polys) {
    Polynomial u(num_vars);
    for (std::size_t k = 0; k < f.basis.size(); ++k) {
      u.add_term(f.basis[k], x[static_cast<std::size_t>(f.vars[k])]);
    }
    out = out + u * f.factor;
  }
  for (const ScalarTerm& s : scalars) out = out + s.factor * x[static_cast<std::size_t>(s.var)];
  return out;
}

SymMatrix hierarchy_matrix(const Graph& g, double eps) {
  if (!(eps >= 0.0) || !std::isfinite(eps)) throw std::invalid_argument("eps must be finite and >= 0");
  return motzkin_matrix(g, eps);
}

SosProgram compile_theta(const Graph& g, int r, double eps) {
  if (r < 0) throw std::invalid_argument("order must be >= 0");
  const int n = g.num_vertices();
  if (n < 1) throw std::invalid_argument("graph must have at least one vertex");
  const SymMatrix m = hierarchy_matrix(g, eps);
  SosProgram sp;
  sp.program.set_name("theta r=" + std::to_string(r));
  Assembler as(n, sp);
  const Polynomial power = Polynomial::linear_sum(n).pow(r);
  // sum sigma_I y^I - t (sum y)^r y^T M y = -(sum y)^(r+2)
  const int t = sp.program.add_free("t");
  as.scalar(t, power * Polynomial::quadratic_form(n, dense_row_major(m)) * -1.0);
  add_structured_blocks(as, n, r);
  as.finish(Polynomial::linear_sum(n).pow(r + 2) * -1.0, CompileCaps{}.max_rows);
  sp.objective_var = t;
  sp.program.add_objective(t, 1.0);
  sp.program.set_sense(Sense::Min);
  return sp;
}

SosProgram compile_copositive_relaxation(const SymMatrix& m, int r) {
  if (r < 0) throw std::invalid_argument("order must be >= 0");
  check_square(m);
  const int n = m.dim();
  SosProgram sp;
  sp.program.set_name("copositive r=" + std::to_string(r));
  Assembler as(n, sp);
  const Polynomial power = Polynomial::linear_sum(n).pow(r);
  // sum sigma_I y^I + lambda (sum y)^(r+2) = (sum y)^r y^T M y
  const int lambda = sp.program.add_free("lambda");
  as.scalar(lambda, Polynomial::linear_sum(n).pow(r + 2));
  add_structured_blocks(as, n, r);
  as.finish(power * Polynomial::quadratic_form(n, dense_row_major(m)), CompileCaps{}.max_rows);
  sp.objective_var = lambda;
  sp.program.add_objective(lambda, 1.0);
  sp.program.set_sense(Sense::Max);
  return sp;
}

SosProgram compile_lasserre_simplex(const SymMatrix& m, int r) {
  if (r < 1) throw std::invalid_argument("simplex hierarchy order must be >= 1");
  check_square(m);
  const int n = m.dim();
  SosProgram sp;
  sp.program.set_name("simplex r=" + std::to_string(r));
  Assembler as(n, sp);
  const int lambda = sp.program.add_free("lambda");
  as.scalar(lambda, Polynomial::constant(n, 1.0));
  as.gram("sigma0", up_to_list(n, r), zero_exponent(n));
  for (int i = 0; i < n; ++i) {
    as.gram("sigma_x" + std::to_string(i + 1), up_to_list(n, r - 1), unit_exponent(n, i));
  }
  as.free_poly("u", up_to_list(n, 2 * r - 1), Polynomial::linear_sum(n) - Polynomial::constant(n, 1.0));
  as.finish(Polynomial::quadratic_form(n, dense_row_major(m)), CompileCaps{}.max_rows);
  sp.objective_var = lambda;
  sp.program.add_objective(lambda, 1.0);
  sp.program.set_sense(Sense::Max);
  return sp;
}

SosProgram compile_preordering(const SymMatrix& m, int r, const CompileCaps& caps) {
  if (r < 1) throw std::invalid_argument("preordering order must be >= 1");
  check_square(m);
  const int n = m.dim();
  long long products = 0;
  for (int k = 0; k <= std::min(n, 2 * r); ++k) {
    products += binomial(n, k);
    if (products > caps.max_preordering_products) {
      throw RefusalError("preordering needs more than " +
                         std::to_string(caps.max_preordering_products) + " products");
    }
  }
  SosProgram sp;
  sp.program.set_name("preordering r=" + std::to_string(r));
  Assembler as(n, sp);
  const int lambda = sp.program.add_free("lambda");
  as.scalar(lambda, Polynomial::constant(n, 1.0));
  for (int k = 0; k <= std::min(n, 2 * r); ++k) {
    std::vector<Exponent> basis = up_to_list(n, (2 * r - k) / 2);
    for (const Exponent& chi : subsets_of_size(n, k)) as.gram("sigma" + set_label(chi), basis, chi);
  }
  as.free_poly("u", up_to_list(n, 2 * r - 1), Polynomial::linear_sum(n) - Polynomial::constant(n, 1.0));
  as.finish(Polynomial::quadratic_form(n, dense_row_major(m)), caps.max_rows);
  sp.objective_var = lambda;
  sp.program.add_objective(lambda, 1.0);
  sp.program.set_sense(Sense::Max);
  return sp;
}

SosProgram compile_sphere(const SymMatrix& m, int r) {
  if (r < 2) throw std::invalid_argument("sphere hierarchy order must be >= 2");
  check_square(m);
  const int n = m.dim();
  SosProgram sp;
  sp.program.set_name("sphere r=" + std::to_string(r));
  Assembler as(n, sp);
  const int lambda = sp.program.add_free("lambda");
  as.scalar(lambda, Polynomial::constant(n, 1.0));
  // P_M is invariant under every sign flip x_i -> -x_i, so averaging a
  // certificate over the flips keeps it valid. The averaged Gram matrix only
  // couples monomials with equal exponent parity and u keeps even monomials.
  std::map<Exponent, std::vector<Exponent>> classes;
  for (const Exponent& a : up_to_list(n, r)) {
    Exponent parity = a;
    for (int& e : parity) e &= 1;
    classes[parity].push_back(a);
  }
  for (auto& [parity, basis] : classes) {
    as.gram("sigma_parity" + set_label(parity), std::move(basis), zero_exponent(n));
  }
  std::vector<Exponent> even;
  for (const Exponent& a : up_to_list(n, 2 * r - 2)) {
    if (std::all_of(a.begin(), a.end(), [](int e) { return e % 2 == 0; })) even.push_back(a);
  }
  as.free_poly("u", std::move(even), Polynomial::square_sum(n) - Polynomial::constant(n, 1.0));
  as.finish(Polynomial::quadratic_form(n, dense_row_major(m)).squared_variables(),
            CompileCaps{}.max_rows);
  sp.objective_var = lambda;
  sp.program.add_objective(lambda, 1.0);
  sp.program.set_sense(Sense::Max);
  return sp;
}

SosProgram compile_shor_reduced(const SymMatrix& m) {
  check_square(m);
  const int n = m.dim();
  SosProgram sp;
  sp.program.set_name("shor");
  Assembler as(n, sp);
  // x^T (Q + lambda J + (a e^T + e a^T)/2) x = x^T M x with Q PSD and a >= 0.
  const int lambda = sp.program.add_free("lambda");
  as.scalar(lambda, Polynomial::linear_sum(n).pow(2));
  as.gram("Q", homogeneous_list(n, 1), zero_exponent(n));
  for (int i = 0; i < n; ++i) {
    const int a = sp.program.add_nonneg("a" + std::to_string(i + 1));
    Polynomial factor = Polynomial::monomial(unit_exponent(n, i)) * Polynomial::linear_sum(n);
    as.scalar(a, factor);
  }
  as.finish(Polynomial::quadratic_form(n, dense_row_major(m)), CompileCaps{}.max_rows);
  sp.objective_var = lambda;
  sp.program.add_objective(lambda, 1.0);
  sp.program.set_sense(Sense::Max);
  return sp;
}

ConicProgram compile_lovasz_theta(const Graph& g, bool nonnegative) {
  const int n = g.num_vertices();
  if (n < 1) throw std::invalid_argument("graph must have at least one vertex");
  ConicProgram p;
  p.set_name(nonnegative ? "theta'" : "theta");
  const int x = p.add_psd_block("X", n);
  std::vector<LinearTerm> trace;
  for (int i = 0; i < n; ++i) trace.push_back({p.psd_var(x, i, i), 1.0});
  p.add_equality(trace, 1.0, "trace");
  for (int j = 0; j < n; ++j) {
    p.add_objective(p.psd_var(x, j, j), 1.0);
    for (int i = j + 1; i < n; ++i) {
      const int v = p.psd_var(x, i, j);
      p.add_objective(v, 2.0);
      const std::string label = "X" + std::to_string(i + 1) + "," + std::to_string(j + 1);
      if (g.has_edge(i, j)) {
        p.add_equality({{v, 1.0}}, 0.0, label);
      } else if (nonnegative) {
        const int s = p.add_nonneg("N" + std::to_string(i + 1) + "," + std::to_string(j + 1));
        p.add_equality({{v, 1.0}, {s, -1.0}}, 0.0, label);
      }
    }
  }
  p.set_sense(Sense::Max);
  return p;
}

PrecheckResult p1_feasibility_precheck(const SymMatrix& m) {
  PrecheckResult out;
  for (int i = 0; i < m.dim(); ++i) {
    for (int j = i + 1; j < m.dim(); ++j) {
      const double v = m(i, i) + m(j, j) - 2.0 * m(i, j);
      if (v < 0.0) {
        out.provably_infeasible = true;
        out.i = i;
        out.j = j;
        out.value = v;
        return out;
      }
    }
  }
  return out;
}

namespace {

void fill_derived(BoundResult& b) {
  if (b.outcome != BoundOutcome::Finite || !b.value) return;
  const double v = *b.value;
  if (bounds_alpha_directly(b.hierarchy)) {
    b.derived_alpha_bound = static_cast<int>(std::floor(v + kRhoRound));
  } else if (v > 0.0) {
    b.derived_alpha_bound = static_cast<int>(std::floor(1.0 / v + kRhoRound));
  }
}

SosProgram compile_for(Hierarchy h, const SymMatrix& m, const Graph& g, int r, double eps,
                       const CompileCaps& caps) {
  switch (h) {
    case Hierarchy::Theta: return compile_theta(g, r, eps);
    case Hierarchy::LasserreSimplex: return compile_lasserre_simplex(m, r);
    case Hierarchy::Preordering: return compile_preordering(m, r, caps);
    case Hierarchy::Sphere: return compile_sphere(m, r);
    case Hierarchy::Shor: return compile_shor_reduced(m);
    case Hierarchy::Zeta: break;
  }
  throw std::logic_error("no conic program for the linear hierarchy");
}

}  // namespace

BoundResult solve_compiled(Hierarchy h, int r, double eps, const SosProgram& sp,
                           const SolverConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  BoundResult b;
  b.hierarchy = h;
  b.r = r;
  b.eps = eps;
  b.rows = sp.program.num_rows();
  b.psd_entries = sp.program.psd_entries();
  b.largest_block = sp.program.largest_block();
  const Solution s = solve(sp.program, cfg);
  b.solver_status = s.status;
  b.residuals = s.residuals;
  b.primal_value = s.primal_value;
  b.dual_value = s.dual_value;
  b.iterations = s.iterations;
  b.certificate_residual = s.certificate_residual;
  switch (s.status) {
    case SolveStatus::Optimal:
      b.outcome = BoundOutcome::Finite;
      b.value = s.primal_value;
      break;
    case SolveStatus::PrimalInfeasible:
      b.outcome = BoundOutcome::Infeasible;
      b.infeasibility_source = "certificate";
      break;
    case SolveStatus::DualInfeasible:
      b.outcome = BoundOutcome::Unbounded;
      break;
    case SolveStatus::MaxIterReached:
      b.outcome = BoundOutcome::NotConverged;
      break;
  }
  fill_derived(b);
  b.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return b;
}

BoundResult theta(const Graph& g, int r, double eps, const SolverConfig& cfg) {
  return solve_compiled(Hierarchy::Theta, r, eps, compile_theta(g, r, eps), cfg);
}

BoundResult compute_bound(Hierarchy h, const Graph& g, int r, double eps, const SolverConfig& cfg,
                          const BoundOptions& opts) {
  if (h == Hierarchy::Zeta) {
    const auto start = std::chrono::steady_clock::now();
    const ZetaResult z = zeta(g, r, eps);
    BoundResult b;
    b.hierarchy = h;
    b.r = r;
    b.eps = eps;
    if (z.value) {
      b.outcome = BoundOutcome::Finite;
      b.exact_value = z.value;
      b.value = to_double(*z.value);
      b.derived_alpha_bound = static_cast<int>(floor_rational(*z.value));
    } else {
      b.outcome = BoundOutcome::Infeasible;
      b.infeasibility_source = "combinatorial";
    }
    b.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return b;
  }
  const SymMatrix m = hierarchy_matrix(g, eps);
  const bool order_one_simplex =
      h == Hierarchy::Shor || (h == Hierarchy::LasserreSimplex && r == 1);
  if (order_one_simplex) {
    const PrecheckResult pre = p1_feasibility_precheck(m);
    if (pre.provably_infeasible && !opts.solve_after_precheck) {
      BoundResult b;
      b.hierarchy = h;
      b.r = r;
      b.eps = eps;
      b.outcome = BoundOutcome::Infeasible;
      b.infeasibility_source = "precheck";
      b.precheck = pre;
      return b;
    }
    BoundResult b = solve_compiled(h, r, eps, compile_for(h, m, g, r, eps, opts.caps), cfg);
    if (pre.provably_infeasible) {
      b.precheck = pre;
      if (b.outcome != BoundOutcome::Infeasible) {
        b.outcome = BoundOutcome::Infeasible;
        b.value.reset();
        b.derived_alpha_bound.reset();
      }
      b.infeasibility_source = "precheck";
    }
    return b;
  }
  return solve_compiled(h, r, eps, compile_for(h, m, g, r, eps, opts.caps), cfg);
}

RankResult theta_rank(const Graph& g, int max_order, const SolverConfig& cfg, double rho_rank) {
  if (max_order < 0) throw std::invalid_argument("max order must be >= 0");
  RankResult out;
  out.alpha = stability_number(g);
  out.max_order = max_order;
  for (int r = 0; r <= max_order; ++r) {
    BoundResult b = theta(g, r, 0.0, cfg);
    const bool hit = b.outcome == BoundOutcome::Finite && *b.value <= out.alpha + rho_rank;
    out.values.push_back(std::move(b));
    if (hit) {
      out.rank = r;
      break;
    }
  }
  return out;
}

ChainReport hierarchy_chain_report(const Graph& g, int r, const SolverConfig& cfg, double tolerance) {
  if (r < 0) throw std::invalid_argument("order must be >= 0");
  ChainReport c;
  c.r = r;
  c.tolerance = tolerance;
  c.alpha = stability_number(g);
  c.theta_even = theta(g, 2 * r, 0.0, cfg);
  c.sphere = compute_bound(Hierarchy::Sphere, g, 2 * r + 2, 0.0, cfg);
  c.preordering = compute_bound(Hierarchy::Preordering, g, r + 1, 0.0, cfg);
  c.simplex = compute_bound(Hierarchy::LasserreSimplex, g, r + 1, 0.0, cfg);
  const auto finite = [](const BoundResult& b) { return b.outcome == BoundOutcome::Finite; };
  if (finite(c.theta_even) && *c.theta_even.value > 0.0) c.inverse_theta = 1.0 / *c.theta_even.value;
  c.complete = c.inverse_theta && finite(c.sphere) && finite(c.preordering) &&
               (finite(c.simplex) || c.simplex.outcome == BoundOutcome::Infeasible);
  if (!c.complete) return c;
  const double a = *c.inverse_theta;
  const double b = *c.sphere.value;
  const double po = *c.preordering.value;
  c.theta_equals_sphere = std::abs(a - b) <= tolerance;
  c.sphere_equals_preordering = std::abs(b - po) <= tolerance;
  c.simplex_below_preordering = !finite(c.simplex) || *c.simplex.value <= po + tolerance;
  const double inv_alpha = 1.0 / c.alpha;
  c.all_below_inverse_alpha = a <= inv_alpha + tolerance && b <= inv_alpha + tolerance &&
                              po <= inv_alpha + tolerance &&
                              (!finite(c.simplex) || *c.simplex.value <= inv_alpha + tolerance);
  return c;
}

}  // namespace copos

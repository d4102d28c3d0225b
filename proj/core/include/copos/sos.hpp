#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "copos/conic_program.hpp"
#include "copos/graph.hpp"
#include "copos/lp_hierarchy.hpp"
#include "copos/polynomial.hpp"
#include "copos/solver.hpp"

namespace copos {

enum class Hierarchy { Theta, Zeta, LasserreSimplex, Preordering, Sphere, Shor };
std::string to_string(Hierarchy h);
/// Accepts "theta", "zeta", "lasserre" (or "simplex"), "preordering", "sphere", "shor".
std::optional<Hierarchy> parse_hierarchy(const std::string& name);
/// True for hierarchies whose value bounds alpha from above (Theta, Zeta);
/// the others bound 1/alpha from below.
bool bounds_alpha_directly(Hierarchy h);

struct CompileCaps {
  /// Largest number of square-free products in a preordering program.
  long long max_preordering_products = 20000;
  /// Largest number of coefficient-matching rows.
  long long max_rows = 200000;
};

/// Gram block sigma(x) * x^shift with sigma = m(x)^T X m(x) over `basis`. A
/// one-element basis is stored as a nonnegative scalar variable instead.
struct GramTerm {
  int block = -1;
  int scalar_var = -1;
  std::vector<Exponent> basis;
  Exponent shift;
};

/// Free polynomial u(x) = sum_a u_a x^a over `basis`, multiplied by `factor`.
struct FreePolyTerm {
  std::vector<int> vars;
  std::vector<Exponent> basis;
  Polynomial factor;
};

/// Scalar variable times a fixed polynomial.
struct ScalarTerm {
  int var = -1;
  Polynomial factor;
};

/// Compiled certificate program. Row k states
///   sum(scalar terms) + sum(Gram terms) + sum(free terms) = target
/// for the coefficient of row_monomials[k].
struct SosProgram {
  ConicProgram program;
  int num_vars = 0;
  std::vector<Exponent> row_monomials;
  std::vector<GramTerm> grams;
  std::vector<FreePolyTerm> free_polys;
  std::vector<ScalarTerm> scalars;
  Polynomial target;
  /// t for min-t programs, lambda for max-lambda programs.
  int objective_var = -1;

  /// Left-hand side polynomial assembled directly from the term metadata at
  /// the assignment `x` (one value per program variable).
  Polynomial reconstruct(const std::vector<double>& x) const;
};

/// min t such that (sum y)^r y^T (t (I + (1+eps) A_G) - J) y = sum_I sigma_I(y) prod_{i in I} y_i
/// with sigma_I homogeneous SOS of degree r+2-|I| (|I| <= r+2, |I| = r mod 2).
SosProgram compile_theta(const Graph& g, int r, double eps = 0.0);
/// max lambda such that M - lambda J admits the same structured certificate.
SosProgram compile_copositive_relaxation(const SymMatrix& m, int r);
/// max lambda: x^T M x - lambda in M(x_1..x_n)_r + <sum x - 1>_2r, deg u = 2r - 1.
SosProgram compile_lasserre_simplex(const SymMatrix& m, int r);
/// max lambda with the truncated preordering (|J| <= 2r products).
SosProgram compile_preordering(const SymMatrix& m, int r, const CompileCaps& caps = {});
/// max lambda: P_M - lambda in Sigma_r + <sum x^2 - 1>_2r, reduced by sign symmetry
/// (one Gram block per exponent-parity class, even ideal multiplier).
SosProgram compile_sphere(const SymMatrix& m, int r);
/// max lambda: M - lambda J - (a e^T + e a^T)/2 PSD, a >= 0.
SosProgram compile_shor_reduced(const SymMatrix& m);
/// Lovasz theta (nonnegative = false) or the Schrijver variant theta'
/// (nonnegative = true): max <J, X>, tr X = 1, X_ij = 0 on edges, X PSD.
ConicProgram compile_lovasz_theta(const Graph& g, bool nonnegative);

struct PrecheckResult {
  bool provably_infeasible = false;
  /// Violating pair (i, j) and the value M_ii + M_jj - 2 M_ij.
  int i = -1;
  int j = -1;
  double value = 0.0;
};

/// Scans all pairs for M_ii + M_jj - 2 M_ij < 0, which rules out the order-1
/// simplex certificate. Reports the first violating pair in lexicographic order.
PrecheckResult p1_feasibility_precheck(const SymMatrix& m);

enum class BoundOutcome { Finite, Infeasible, Unbounded, NotConverged };
std::string to_string(BoundOutcome o);

inline constexpr double kRhoRound = 1e-5;
inline constexpr double kRhoRank = 1e-5;

struct BoundResult {
  Hierarchy hierarchy = Hierarchy::Theta;
  int r = 0;
  double eps = 0.0;
  BoundOutcome outcome = BoundOutcome::NotConverged;
  std::optional<double> value;
  /// Exact value for the linear hierarchy.
  std::optional<Rational> exact_value;
  std::optional<SolveStatus> solver_status;
  Residuals residuals;
  double primal_value = 0.0;
  double dual_value = 0.0;
  int iterations = 0;
  /// floor(value + rho) for Theta/Zeta, floor(1/value + rho) for the
  /// reciprocal hierarchies when value > 0.
  std::optional<int> derived_alpha_bound;
  /// "precheck", "certificate" or "combinatorial" for infeasible outcomes.
  std::string infeasibility_source;
  std::optional<PrecheckResult> precheck;
  double certificate_residual = 0.0;
  int rows = 0;
  long long psd_entries = 0;
  int largest_block = 0;
  double seconds = 0.0;
};

struct BoundOptions {
  /// Still run the solver when the exact precheck already proves infeasibility.
  bool solve_after_precheck = false;
  CompileCaps caps;
};

/// Objective matrix I + (1+eps) A_G shared by every graph hierarchy.
SymMatrix hierarchy_matrix(const Graph& g, double eps);

BoundResult theta(const Graph& g, int r, double eps, const SolverConfig& cfg);
BoundResult compute_bound(Hierarchy h, const Graph& g, int r, double eps, const SolverConfig& cfg,
                          const BoundOptions& opts = {});
/// Solves a compiled max-lambda or min-t program and fills the numeric fields.
BoundResult solve_compiled(Hierarchy h, int r, double eps, const SosProgram& sp,
                           const SolverConfig& cfg);

struct RankResult {
  int alpha = 0;
  /// Smallest r <= max_order with theta^(r) <= alpha + rho_rank; empty when
  /// not found up to max_order.
  std::optional<int> rank;
  int max_order = 0;
  std::vector<BoundResult> values;
};

RankResult theta_rank(const Graph& g, int max_order, const SolverConfig& cfg,
                      double rho_rank = kRhoRank);

struct ChainReport {
  int r = 0;
  int alpha = 0;
  /// 1/theta^(2r), F^(2r+2), f_po^(r+1), f^(r+1).
  BoundResult theta_even;
  BoundResult sphere;
  BoundResult preordering;
  BoundResult simplex;
  std::optional<double> inverse_theta;
  double tolerance = 1e-5;
  bool theta_equals_sphere = false;
  bool sphere_equals_preordering = false;
  bool simplex_below_preordering = false;
  bool all_below_inverse_alpha = false;
  bool complete = false;
};

ChainReport hierarchy_chain_report(const Graph& g, int r, const SolverConfig& cfg,
                                   double tolerance = 1e-5);

}  // namespace copos

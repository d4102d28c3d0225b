#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "copos/graph.hpp"
#include "copos/lp_hierarchy.hpp"

namespace copos {

/// Support threshold on the simplex.
inline constexpr double kSimplexTol = 1e-9;
/// Entries in [kSimplexTol, kDeadZoneFactor * kSimplexTol] make a point unclassifiable.
inline constexpr double kDeadZoneFactor = 1e3;
/// Threshold for the strict second-order test and for multiplier signs.
inline constexpr double kKktTol = 1e-9;

enum class QpKind { MotzkinStraus, Perturbed, EdgeWeighted, Custom };
std::string to_string(QpKind k);

/// min x^T M x over the standard simplex.
struct SimplexQP {
  SymMatrix M;
  QpKind kind = QpKind::Custom;
  double eps = 0.0;
  std::optional<Edge> edge;

  /// I + A_G.
  static SimplexQP motzkin_straus(const Graph& g);
  /// I + (1+eps) A_G with eps > 0.
  static SimplexQP perturbed(const Graph& g, double eps);
  /// I + A_G + A_{G minus e}: every edge weighs 2 except e.
  static SimplexQP edge_weighted(const Graph& g, Edge e);
  static SimplexQP custom(SymMatrix m);

  int dim() const { return M.dim(); }
};

class SimplexPoint {
 public:
  /// Throws std::invalid_argument unless x_i >= -tol and |sum x - 1| <= tol.
  explicit SimplexPoint(std::vector<double> x);
  /// chi^S / |S| on n coordinates.
  static SimplexPoint uniform_on(int n, VertexSet s);

  int dim() const { return static_cast<int>(x_.size()); }
  double operator[](int i) const { return x_[static_cast<std::size_t>(i)]; }
  const std::vector<double>& values() const { return x_; }
  Eigen::VectorXd vector() const;
  /// {i : x_i > kSimplexTol}.
  VertexSet support() const;
  /// Some entry lies in the tolerance dead zone.
  bool in_dead_zone() const;
  /// Supported entries agree to within kSimplexTol.
  bool is_uniform_on_support() const;

 private:
  std::vector<double> x_;
};

/// x^T M x. Throws std::invalid_argument on a dimension mismatch.
double evaluate(const SimplexQP& qp, const SimplexPoint& x);
/// Exact value of chi^S/|S| when M has integer entries; empty otherwise.
std::optional<Rational> evaluate_uniform_exact(const SymMatrix& m, VertexSet s);

struct GlobalWitness {
  bool is_global = false;
  /// Connected components of G[Supp(x)] with their masses.
  std::vector<VertexSet> components;
  std::vector<double> masses;
  std::string reason;
};

/// Tests the clique-partition characterization of the global minimizers of
/// x^T (I + A_G) x: alpha components, each a clique carrying mass 1/alpha.
GlobalWitness classify_global(const Graph& g, const SimplexPoint& x, int alpha);

struct KktCertificate {
  double lambda = 0.0;
  /// Multipliers for x_j >= 0, j outside the support, in increasing vertex order.
  std::vector<std::pair<Vertex, double>> mu;
  /// Spread of the gradient over the support; zero when FOOC holds exactly.
  double stationarity_residual = 0.0;
  /// Smallest eigenvalue of the Hessian restricted to the tangent space;
  /// empty when that space is {0}.
  std::optional<double> min_curvature;
  bool cqc = true;
  bool fooc = false;
  bool cc = false;
  bool scc = false;
  bool sonc = false;
  bool sosc = false;
};

/// Solves the first-order system at x for the constraints sum x = 1 and
/// x_j >= 0 (j outside the support) and evaluates the second-order tests.
KktCertificate kkt_check(const SimplexQP& qp, const SimplexPoint& x);

enum class PointClass { Global, StrictLocal, LocalNonStrict, NotLocalMinimizer, Indeterminate };
std::string to_string(PointClass c);

struct MinimizerReport {
  PointClass classification = PointClass::Indeterminate;
  VertexSet support;
  bool support_stable = false;
  bool global = false;
  /// Local status of chi^S/|S| points with stable support (true = strict).
  std::optional<bool> strict_local;
  GlobalWitness witness;
  std::string reason;
  std::optional<KktCertificate> kkt;
};

/// Classifies x for the Motzkin-Straus program of g. Global status takes
/// priority; stable-support points are decided by the degree and N_1 tests;
/// other points are Indeterminate.
MinimizerReport classify_point(const Graph& g, const SimplexPoint& x);

/// N_1(i) = {j outside S : N_S(j) = {i}}.
VertexSet single_neighbor_set(const Graph& g, VertexSet s, Vertex i);

/// True iff g has no critical edge.
bool has_finitely_many_global_minimizers(const Graph& g);
/// True iff e is not critical in g. Throws std::invalid_argument for non-edges.
bool edge_program_has_finite_minimizers(const Graph& g, Edge e);

struct ShiftedPair {
  SimplexPoint x_tilde;
  SimplexPoint x_bar;
};

/// x_tilde moves the mass of j onto i, x_bar moves the mass of i onto j. Needs
/// M_ii = M_jj = M_ij and x_i, x_j > kSimplexTol.
ShiftedPair shift_mass(const SimplexQP& qp, const SimplexPoint& x, Vertex i, Vertex j);

}  // namespace copos

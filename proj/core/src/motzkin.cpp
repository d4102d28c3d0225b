#include "copos/motzkin.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "copos/combinatorics.hpp"
#include "copos/eigen_sym.hpp"

namespace copos {

std::string to_string(QpKind k) {
  switch (k) {
    case QpKind::MotzkinStraus: return "MotzkinStraus";
    case QpKind::Perturbed: return "Perturbed";
    case QpKind::EdgeWeighted: return "EdgeWeighted";
    case QpKind::Custom: return "Custom";
  }
  return "?";
}

std::string to_string(PointClass c) {
  switch (c) {
    case PointClass::Global: return "Global";
    case PointClass::StrictLocal: return "StrictLocal";
    case PointClass::LocalNonStrict: return "LocalNonStrict";
    case PointClass::NotLocalMinimizer: return "NotLocalMinimizer";
    case PointClass::Indeterminate: return "Indeterminate";
  }
  return "?";
}

SimplexQP SimplexQP::motzkin_straus(const Graph& g) {
  SimplexQP qp;
  qp.M = motzkin_matrix(g, 0.0);
  qp.kind = QpKind::MotzkinStraus;
  return qp;
}

SimplexQP SimplexQP::perturbed(const Graph& g, double eps) {
  if (!(eps > 0)) throw std::invalid_argument("perturbation must be positive");
  SimplexQP qp;
  qp.M = motzkin_matrix(g, eps);
  qp.kind = QpKind::Perturbed;
  qp.eps = eps;
  return qp;
}

SimplexQP SimplexQP::edge_weighted(const Graph& g, Edge e) {
  if (!g.has_edge(e)) throw std::invalid_argument("not an edge of the graph");
  SimplexQP qp;
  qp.M = motzkin_matrix(g, 1.0);
  qp.M.set(e.u, e.v, 1.0);
  qp.kind = QpKind::EdgeWeighted;
  qp.edge = e;
  return qp;
}

SimplexQP SimplexQP::custom(SymMatrix m) {
  SimplexQP qp;
  qp.M = std::move(m);
  qp.kind = QpKind::Custom;
  return qp;
}

SimplexPoint::SimplexPoint(std::vector<double> x) : x_(std::move(x)) {
  double sum = 0.0;
  for (double v : x_) {
    if (!std::isfinite(v) || v < -kSimplexTol) {
      throw std::invalid_argument("point has an entry below -tolerance");
    }
    sum += v;
  }
  if (std::abs(sum - 1.0) > kSimplexTol) {
    throw std::invalid_argument("point entries do not sum to 1");
  }
}

SimplexPoint SimplexPoint::uniform_on(int n, VertexSet s) {
  if (s.empty()) throw std::invalid_argument("empty support");
  std::vector<double> x(static_cast<std::size_t>(n), 0.0);
  for (Vertex v : s.members()) {
    if (v >= n) throw std::invalid_argument("support vertex out of range");
    x[static_cast<std::size_t>(v)] = 1.0 / s.size();
  }
  return SimplexPoint(std::move(x));
}

Eigen::VectorXd SimplexPoint::vector() const {
  return Eigen::Map<const Eigen::VectorXd>(x_.data(), static_cast<Eigen::Index>(x_.size()));
}

VertexSet SimplexPoint::support() const {
  VertexSet s;
  for (std::size_t i = 0; i < x_.size(); ++i) {
    if (x_[i] > kSimplexTol) s.insert(static_cast<Vertex>(i));
  }
  return s;
}

bool SimplexPoint::in_dead_zone() const {
  return std::any_of(x_.begin(), x_.end(), [](double v) {
    return v >= kSimplexTol && v <= kDeadZoneFactor * kSimplexTol;
  });
}

bool SimplexPoint::is_uniform_on_support() const {
  const VertexSet s = support();
  if (s.empty()) return false;
  const double target = 1.0 / s.size();
  for (Vertex v : s.members()) {
    if (std::abs(x_[static_cast<std::size_t>(v)] - target) > kSimplexTol) return false;
  }
  return true;
}

double evaluate(const SimplexQP& qp, const SimplexPoint& x) {
  if (qp.dim() != x.dim()) throw std::invalid_argument("dimension mismatch");
  const Eigen::VectorXd v = x.vector();
  return v.dot(qp.M.dense() * v);
}

std::optional<Rational> evaluate_uniform_exact(const SymMatrix& m, VertexSet s) {
  if (s.empty()) return std::nullopt;
  std::int64_t total = 0;
  for (Vertex i : s.members()) {
    for (Vertex j : s.members()) {
      const double v = m(i, j);
      if (v != std::floor(v) || std::abs(v) > 1e12) return std::nullopt;
      total += static_cast<std::int64_t>(v);
    }
  }
  const std::int64_t k = s.size();
  return Rational(total, k * k);
}

namespace {

std::vector<VertexSet> components_within(const Graph& g, VertexSet s) {
  std::vector<VertexSet> out;
  VertexSet left = s;
  while (!left.empty()) {
    VertexSet comp{left.first()};
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next;
      for (Vertex v : frontier.members()) next = next | (g.neighbors(v) & left);
      next = next.minus(comp);
      comp = comp | next;
      frontier = next;
    }
    out.push_back(comp);
    left = left.minus(comp);
  }
  return out;
}

}  // namespace

GlobalWitness classify_global(const Graph& g, const SimplexPoint& x, int alpha) {
  if (x.dim() != g.num_vertices()) throw std::invalid_argument("dimension mismatch");
  GlobalWitness w;
  w.components = components_within(g, x.support());
  for (VertexSet c : w.components) {
    double mass = 0.0;
    for (Vertex v : c.members()) mass += x[v];
    w.masses.push_back(mass);
  }
  if (static_cast<int>(w.components.size()) != alpha) {
    w.reason = "support has " + std::to_string(w.components.size()) +
               " components, alpha is " + std::to_string(alpha);
    return w;
  }
  for (std::size_t h = 0; h < w.components.size(); ++h) {
    if (!g.is_clique(w.components[h])) {
      w.reason = "component " + std::to_string(h + 1) + " is not a clique";
      return w;
    }
    if (std::abs(w.masses[h] - 1.0 / alpha) > kSimplexTol) {
      w.reason = "component " + std::to_string(h + 1) + " carries mass " +
                 std::to_string(w.masses[h]) + ", expected 1/" + std::to_string(alpha);
      return w;
    }
  }
  w.is_global = true;
  w.reason = "alpha clique components of mass 1/alpha";
  return w;
}

KktCertificate kkt_check(const SimplexQP& qp, const SimplexPoint& x) {
  if (qp.dim() != x.dim()) throw std::invalid_argument("dimension mismatch");
  const int n = x.dim();
  const Eigen::VectorXd grad = 2.0 * (qp.M.dense() * x.vector());
  const VertexSet s = x.support();
  const std::vector<Vertex> members = s.members();
  KktCertificate c;
  if (members.empty()) return c;

  double mean = 0.0;
  for (Vertex v : members) mean += grad[v];
  c.lambda = mean / static_cast<double>(members.size());
  for (Vertex v : members) {
    c.stationarity_residual = std::max(c.stationarity_residual, std::abs(grad[v] - c.lambda));
  }
  const double tol = kKktTol * (1.0 + grad.cwiseAbs().maxCoeff());

  bool signs_ok = true;
  bool strict = true;
  bool complementary = true;
  for (Vertex j = 0; j < n; ++j) {
    if (s.contains(j)) continue;
    const double mu = grad[j] - c.lambda;
    c.mu.emplace_back(j, mu);
    if (mu < -tol) signs_ok = false;
    if (!(mu > tol)) strict = false;
    if (std::abs(mu * x[j]) > tol) complementary = false;
  }
  const bool stationary = c.stationarity_residual <= tol;
  c.fooc = stationary && signs_ok;
  c.cc = complementary && signs_ok;
  c.scc = c.fooc && strict;

  // Orthonormal basis of {v supported on S, sum v = 0} built from Helmert contrasts.
  const int k = static_cast<int>(members.size());
  if (k == 1) {
    c.sonc = true;
    c.sosc = true;
    return c;
  }
  Eigen::MatrixXd q = Eigen::MatrixXd::Zero(k, k - 1);
  for (int col = 0; col < k - 1; ++col) {
    const double norm = std::sqrt(static_cast<double>((col + 1) * (col + 2)));
    for (int row = 0; row <= col; ++row) q(row, col) = 1.0 / norm;
    q(col + 1, col) = -static_cast<double>(col + 1) / norm;
  }
  Eigen::MatrixXd hs(k, k);
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) hs(a, b) = 2.0 * qp.M(members[a], members[b]);
  }
  const Eigen::MatrixXd reduced = q.transpose() * hs * q;
  c.min_curvature = min_eigenvalue(0.5 * (reduced + reduced.transpose()));
  c.sonc = *c.min_curvature >= -kKktTol;
  c.sosc = *c.min_curvature > kKktTol;
  return c;
}

VertexSet single_neighbor_set(const Graph& g, VertexSet s, Vertex i) {
  VertexSet out;
  for (Vertex j = 0; j < g.num_vertices(); ++j) {
    if (s.contains(j)) continue;
    if (neighbors_in_set(g, s, j) == VertexSet{i}) out.insert(j);
  }
  return out;
}

MinimizerReport classify_point(const Graph& g, const SimplexPoint& x) {
  if (x.dim() != g.num_vertices()) throw std::invalid_argument("dimension mismatch");
  MinimizerReport rep;
  rep.support = x.support();
  if (x.in_dead_zone()) {
    rep.classification = PointClass::Indeterminate;
    rep.reason = "an entry lies in the support tolerance dead zone";
    return rep;
  }
  const int alpha = stability_number(g);
  rep.witness = classify_global(g, x, alpha);
  rep.global = rep.witness.is_global;
  rep.support_stable = g.is_stable(rep.support);
  rep.kkt = kkt_check(SimplexQP::motzkin_straus(g), x);

  if (!rep.support_stable) {
    rep.classification = rep.global ? PointClass::Global : PointClass::Indeterminate;
    rep.reason = rep.global ? rep.witness.reason
                            : "support is not stable and the point is not a global minimizer";
    return rep;
  }

  const VertexSet s = rep.support;
  PointClass local = PointClass::NotLocalMinimizer;
  if (!x.is_uniform_on_support()) {
    rep.reason = "stable support but the point is not uniform on it";
  } else {
    bool maximal = true;
    bool all_two = true;
    for (Vertex j = 0; j < g.num_vertices(); ++j) {
      if (s.contains(j)) continue;
      const int d = neighbors_in_set(g, s, j).size();
      if (d == 0) maximal = false;
      if (d < 2) all_two = false;
    }
    if (!maximal) {
      rep.reason = "support is not a maximal stable set";
    } else if (all_two) {
      local = PointClass::StrictLocal;
      rep.strict_local = true;
      rep.reason = "every outside vertex has at least two neighbours in the support";
    } else {
      bool cliques = true;
      for (Vertex i : s.members()) {
        if (!g.is_clique(single_neighbor_set(g, s, i))) {
          cliques = false;
          rep.reason = "N_1(" + std::to_string(i + 1) + ") is not a clique";
          break;
        }
      }
      if (cliques) {
        local = PointClass::LocalNonStrict;
        rep.strict_local = false;
        rep.reason = "maximal support, every N_1(i) is a clique, some vertex has one neighbour";
      }
    }
  }
  if (rep.global) {
    rep.classification = PointClass::Global;
    rep.reason = rep.witness.reason + "; " + rep.reason;
  } else {
    rep.classification = local;
  }
  return rep;
}

bool has_finitely_many_global_minimizers(const Graph& g) {
  const CriticalityClass c = criticality_class(g);
  return c == CriticalityClass::Acritical || c == CriticalityClass::EdgelessTrivial;
}

bool edge_program_has_finite_minimizers(const Graph& g, Edge e) {
  return !is_critical_edge(g, e);
}

ShiftedPair shift_mass(const SimplexQP& qp, const SimplexPoint& x, Vertex i, Vertex j) {
  const int n = qp.dim();
  if (x.dim() != n) throw std::invalid_argument("dimension mismatch");
  if (i == j || i < 0 || j < 0 || i >= n || j >= n) throw std::invalid_argument("bad vertex pair");
  const double mii = qp.M(i, i);
  if (qp.M(j, j) != mii || qp.M(i, j) != mii) {
    throw std::invalid_argument("shift needs M_ii = M_jj = M_ij");
  }
  if (!(x[i] > kSimplexTol) || !(x[j] > kSimplexTol)) {
    throw std::invalid_argument("shift needs x_i > 0 and x_j > 0");
  }
  std::vector<double> tilde = x.values();
  std::vector<double> bar = x.values();
  tilde[static_cast<std::size_t>(i)] += x[j];
  tilde[static_cast<std::size_t>(j)] = 0.0;
  bar[static_cast<std::size_t>(j)] += x[i];
  bar[static_cast<std::size_t>(i)] = 0.0;
  return {SimplexPoint(std::move(tilde)), SimplexPoint(std::move(bar))};
}

}  // namespace copos

#include "copos/solver.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <iostream>
#include <limits>
#include <stdexcept>

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <Eigen/SparseCholesky>

#include "copos/eigen_sym.hpp"
#include "copos/errors.hpp"

namespace copos {

std::string to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Optimal: return "Optimal";
    case SolveStatus::PrimalInfeasible: return "PrimalInfeasible";
    case SolveStatus::DualInfeasible: return "DualInfeasible";
    case SolveStatus::MaxIterReached: return "MaxIterReached";
  }
  return "?";
}

void SolverConfig::validate() const {
  if (!(eps_primal > 0) || !(eps_dual > 0) || !(eps_gap > 0) || !(eps_infeas > 0)) {
    throw std::invalid_argument("solver tolerances must be positive");
  }
  if (max_iter < 1) throw std::invalid_argument("max_iter must be positive");
  if (!(relaxation > 0 && relaxation < 2)) throw std::invalid_argument("relaxation must lie in (0, 2)");
  if (!(rho_x > 0) || !(scale > 0)) throw std::invalid_argument("metric weights must be positive");
  if (anderson_memory < 0) throw std::invalid_argument("anderson_memory must be nonnegative");
  if (stall_iterations < 0 || !(stall_scale_factor > 0)) {
    throw std::invalid_argument("stall settings must be nonnegative (iterations) and positive (factor)");
  }
  if (check_interval < 1) throw std::invalid_argument("check_interval must be positive");
}

namespace {

using SpMat = Eigen::SparseMatrix<double>;
using Vec = Eigen::VectorXd;

constexpr double kSqrt2 = 1.4142135623730951;

// Row layout of the embedded problem: equality rows (zero cone), one row per
// nonnegative variable, then the svec rows of each PSD block.
struct ConeLayout {
  int zero = 0;
  int nonneg = 0;
  std::vector<int> psd_sizes;
  int rows() const {
    int m = zero + nonneg;
    for (int s : psd_sizes) m += s * (s + 1) / 2;
    return m;
  }
};

// Projects the svec-packed segment in place onto the PSD cone.
void project_svec(double* v, int size, Eigen::MatrixXd& work) {
  work.resize(size, size);
  int k = 0;
  for (int j = 0; j < size; ++j) {
    for (int i = j; i < size; ++i, ++k) {
      const double val = i == j ? v[k] : v[k] / kSqrt2;
      work(i, j) = val;
      work(j, i) = val;
    }
  }
  const Eigen::MatrixXd p = psd_project(work);
  k = 0;
  for (int j = 0; j < size; ++j) {
    for (int i = j; i < size; ++i, ++k) v[k] = i == j ? p(i, j) : p(i, j) * kSqrt2;
  }
}

// Projection onto the cone K of the rows (zero-cone rows are mapped to zero).
void project_primal_cone(Vec& s, const ConeLayout& L, Eigen::MatrixXd& work) {
  for (int i = 0; i < L.zero; ++i) s[i] = 0.0;
  int off = L.zero;
  for (int i = 0; i < L.nonneg; ++i, ++off) s[off] = std::max(s[off], 0.0);
  for (int size : L.psd_sizes) {
    project_svec(s.data() + off, size, work);
    off += size * (size + 1) / 2;
  }
}

// Projection onto the dual cone K* (zero-cone rows are free).
void project_dual_cone(Vec& y, const ConeLayout& L, Eigen::MatrixXd& work) {
  int off = L.zero;
  for (int i = 0; i < L.nonneg; ++i, ++off) y[off] = std::max(y[off], 0.0);
  for (int size : L.psd_sizes) {
    project_svec(y.data() + off, size, work);
    off += size * (size + 1) / 2;
  }
}

double inf_norm(const Vec& v) { return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff(); }

struct Embedded {
  SpMat A;  // m x n
  Vec b;
  Vec c;
  ConeLayout layout;
  std::vector<int> column_of;     // program variable -> column
  std::vector<double> col_scale;  // x_col = col_scale * program value
  double objective_sign = 1.0;    // +1 for Min, -1 for Max
};

Embedded embed(const ConicProgram& p) {
  Embedded e;
  const int nv = p.num_vars();
  e.column_of.assign(static_cast<std::size_t>(nv), -1);
  e.col_scale.assign(static_cast<std::size_t>(nv), 1.0);
  int col = 0;
  for (int v = 0; v < nv; ++v) {
    if (p.vars()[static_cast<std::size_t>(v)].kind == VarKind::Free) e.column_of[static_cast<std::size_t>(v)] = col++;
  }
  for (int v = 0; v < nv; ++v) {
    if (p.vars()[static_cast<std::size_t>(v)].kind == VarKind::Nonneg) e.column_of[static_cast<std::size_t>(v)] = col++;
  }
  for (const PsdBlock& b : p.blocks()) {
    for (int j = 0; j < b.size; ++j) {
      for (int i = j; i < b.size; ++i) {
        const int v = p.psd_var(static_cast<int>(&b - p.blocks().data()), i, j);
        e.column_of[static_cast<std::size_t>(v)] = col++;
        e.col_scale[static_cast<std::size_t>(v)] = i == j ? 1.0 : kSqrt2;
      }
    }
  }
  const int n = col;
  e.layout.zero = p.num_rows();
  e.layout.nonneg = p.count(VarKind::Nonneg);
  for (const PsdBlock& b : p.blocks()) e.layout.psd_sizes.push_back(b.size);
  const int m = e.layout.rows();

  std::vector<Eigen::Triplet<double>> trips;
  e.b = Vec::Zero(m);
  for (int r = 0; r < p.num_rows(); ++r) {
    const EqualityRow& row = p.rows()[static_cast<std::size_t>(r)];
    for (const LinearTerm& t : row.terms) {
      const auto v = static_cast<std::size_t>(t.var);
      trips.emplace_back(r, e.column_of[v], t.coef / e.col_scale[v]);
    }
    e.b[r] = row.rhs;
  }
  // Cone rows: -x + s = 0 for every cone-constrained column, in column order.
  const int free_cols = p.count(VarKind::Free);
  for (int k = 0; k < n - free_cols; ++k) trips.emplace_back(e.layout.zero + k, free_cols + k, -1.0);
  e.A.resize(m, n);
  e.A.setFromTriplets(trips.begin(), trips.end());
  e.A.makeCompressed();

  e.objective_sign = p.sense() == Sense::Min ? 1.0 : -1.0;
  e.c = Vec::Zero(n);
  for (int v = 0; v < nv; ++v) {
    const auto vi = static_cast<std::size_t>(v);
    e.c[e.column_of[vi]] += e.objective_sign * p.objective()[vi] / e.col_scale[vi];
  }
  return e;
}

// Ruiz equilibration: A_hat = D A E with D uniform inside every PSD block.
void equilibrate(const Embedded& e, Vec& D, Vec& E, int passes = 25) {
  const int m = static_cast<int>(e.A.rows());
  const int n = static_cast<int>(e.A.cols());
  D = Vec::Ones(m);
  E = Vec::Ones(n);
  SpMat work = e.A;
  for (int pass = 0; pass < passes; ++pass) {
    Vec rn = Vec::Zero(m);
    Vec cn = Vec::Zero(n);
    for (int k = 0; k < work.outerSize(); ++k) {
      for (SpMat::InnerIterator it(work, k); it; ++it) {
        const double a = std::abs(it.value());
        rn[it.row()] = std::max(rn[it.row()], a);
        cn[it.col()] = std::max(cn[it.col()], a);
      }
    }
    // Uniform factor within each PSD block keeps the cone invariant.
    int off = e.layout.zero + e.layout.nonneg;
    for (int size : e.layout.psd_sizes) {
      const int len = size * (size + 1) / 2;
      const double mean = rn.segment(off, len).mean();
      rn.segment(off, len).setConstant(mean);
      off += len;
    }
    Vec dr(m);
    Vec ec(n);
    for (int i = 0; i < m; ++i) dr[i] = rn[i] > 0 ? 1.0 / std::sqrt(rn[i]) : 1.0;
    for (int j = 0; j < n; ++j) ec[j] = cn[j] > 0 ? 1.0 / std::sqrt(cn[j]) : 1.0;
    for (int i = 0; i < m; ++i) D[i] = std::clamp(D[i] * dr[i], 1e-4, 1e4);
    for (int j = 0; j < n; ++j) E[j] = std::clamp(E[j] * ec[j], 1e-4, 1e4);
    work = D.asDiagonal() * e.A * E.asDiagonal();
  }
}

struct Iterate {
  Vec x, y;
  double tau = 0.0;
};

class Engine {
 public:
  Engine(const Embedded& e, const SolverConfig& cfg) : e_(e), cfg_(cfg) {
    const int m = static_cast<int>(e.A.rows());
    const int n = static_cast<int>(e.A.cols());
    m_ = m;
    n_ = n;
    if (cfg.scaling) {
      equilibrate(e, D_, E_);
    } else {
      D_ = Vec::Ones(m);
      E_ = Vec::Ones(n);
    }
    A_ = D_.asDiagonal() * e.A * E_.asDiagonal();
    A_.makeCompressed();
    At_ = A_.transpose();
    b_ = D_.cwiseProduct(e.b);
    c_ = E_.cwiseProduct(e.c);
    scale_ = cfg.scale;
    setup_metric();
  }

  Solution run();

 private:
  void setup_metric() {
    ry_.resize(m_);
    for (int i = 0; i < m_; ++i) ry_[i] = i < e_.layout.zero ? 1.0 / (1000.0 * scale_) : 1.0 / scale_;
    SpMat K = At_ * (ry_.cwiseInverse().asDiagonal() * A_);
    for (int j = 0; j < n_; ++j) K.coeffRef(j, j) += cfg_.rho_x;
    K.makeCompressed();
    if (!factor_initialized_) {
      llt_.analyzePattern(K);
      factor_initialized_ = true;
    }
    llt_.factorize(K);
    if (llt_.info() != Eigen::Success) throw std::runtime_error("linear system factorization failed");
    Vec hx = c_;
    Vec hy = b_;
    solve_block(hx, hy, px_, py_);
    hp_ = c_.dot(px_) + b_.dot(py_);
  }

  // Solves [[rho I, A^T], [-A, R_y]] (a; b') = (zx; zy).
  void solve_block(const Vec& zx, const Vec& zy, Vec& a, Vec& bb) const {
    const Vec rinv_zy = zy.cwiseQuotient(ry_);
    a = llt_.solve(zx - At_ * rinv_zy);
    bb = (zy + A_ * a).cwiseQuotient(ry_);
  }

  // One Douglas-Rachford step on w = (wx, wy, wt): returns T(w) and the two
  // intermediate points.
  void step(const Vec& w, Vec& tw, Vec& ut, Vec& u) {
    const Vec zx = cfg_.rho_x * w.head(n_);
    const Vec zy = ry_.cwiseProduct(w.segment(n_, m_));
    const double zt = w[n_ + m_];
    Vec qx, qy;
    solve_block(zx, zy, qx, qy);
    const double t = (zt + c_.dot(qx) + b_.dot(qy)) / (1.0 + hp_);
    ut.resize(n_ + m_ + 1);
    ut.head(n_) = qx - t * px_;
    ut.segment(n_, m_) = qy - t * py_;
    ut[n_ + m_] = t;
    u = 2.0 * ut - w;
    Vec y = u.segment(n_, m_);
    project_dual_cone(y, e_.layout, work_);
    u.segment(n_, m_) = y;
    u[n_ + m_] = std::max(u[n_ + m_], 0.0);
    tw = w + cfg_.relaxation * (u - ut);
  }

  Vec metric(const Vec& z) const {
    Vec r(z.size());
    r.head(n_) = cfg_.rho_x * z.head(n_);
    r.segment(n_, m_) = ry_.cwiseProduct(z.segment(n_, m_));
    r[n_ + m_] = z[n_ + m_];
    return r;
  }

  struct Check {
    Residuals res;
    double pobj = 0.0;
    double dobj = 0.0;
    bool optimal = false;
    bool primal_infeasible = false;
    bool dual_infeasible = false;
    double cert_residual = 0.0;
    double scaled_ratio = 1.0;
    Vec x, y, s;  // unscaled, normalized by tau (or the certificate normalization)
  };

  Check evaluate(const Vec& u, const Vec& v) const;
  void polish(Check& chk) const;

  const Embedded& e_;
  const SolverConfig& cfg_;
  int m_ = 0;
  int n_ = 0;
  Vec D_, E_;
  SpMat A_, At_;
  Vec b_, c_;
  Vec ry_;
  double scale_ = 0.1;
  Eigen::SimplicialLDLT<SpMat> llt_;
  bool factor_initialized_ = false;
  Vec px_, py_;
  double hp_ = 0.0;
  mutable Eigen::MatrixXd work_;
};

Engine::Check Engine::evaluate(const Vec& u, const Vec& v) const {
  Check chk;
  const Vec xh = u.head(n_);
  const Vec yh = u.segment(n_, m_);
  const double tau = u[n_ + m_];
  const Vec sh = v.segment(n_, m_);
  const double kappa = v[n_ + m_];
  // Undo the equilibration.
  const Vec x = E_.cwiseProduct(xh);
  const Vec y = D_.cwiseProduct(yh);
  const Vec s = sh.cwiseQuotient(D_);
  const SpMat& A = e_.A;
  const Vec& b = e_.b;
  const Vec& c = e_.c;

  if (tau > 1e-12 * std::max(1.0, kappa)) {
    {
      const Vec axh = A_ * xh;
      const Vec atyh = At_ * yh;
      const Vec btau = b_ * tau;
      const Vec ctau = c_ * tau;
      const double rp = inf_norm(axh + sh - btau) / std::max({inf_norm(axh), inf_norm(sh), inf_norm(btau), 1e-30});
      const double rd = inf_norm(atyh + ctau) / std::max({inf_norm(atyh), inf_norm(ctau), 1e-30});
      chk.scaled_ratio = std::sqrt(std::max(rp, 1e-16) / std::max(rd, 1e-16));
    }
    chk.x = x / tau;
    chk.y = y / tau;
    chk.s = s / tau;
    const Vec ax = A * chk.x;
    const Vec aty = A.transpose() * chk.y;
    chk.pobj = c.dot(chk.x);
    chk.dobj = -b.dot(chk.y);
    chk.res.primal = inf_norm(ax + chk.s - b) /
                     (1.0 + std::max({inf_norm(b), inf_norm(ax), inf_norm(chk.s)}));
    chk.res.dual = inf_norm(aty + c) / (1.0 + std::max(inf_norm(aty), inf_norm(c)));
    chk.res.gap = std::abs(chk.pobj - chk.dobj) /
                  (1.0 + std::max(std::abs(chk.pobj), std::abs(chk.dobj)));
    chk.optimal = chk.res.primal <= cfg_.eps_primal && chk.res.dual <= cfg_.eps_dual &&
                  chk.res.gap <= cfg_.eps_gap;
  }
  if (!chk.optimal) {
    const double by = b.dot(y);
    if (by < 0) {
      const Vec yc = y / -by;
      const double r = inf_norm(A.transpose() * yc);
      if (r <= cfg_.eps_infeas) {
        chk.primal_infeasible = true;
        chk.cert_residual = r;
        chk.y = yc;
        return chk;
      }
    }
    const double cx = c.dot(x);
    if (cx < 0) {
      const Vec xc = x / -cx;
      const Vec sc = s / -cx;
      const double r = inf_norm(A * xc + sc);
      if (r <= cfg_.eps_infeas) {
        chk.dual_infeasible = true;
        chk.cert_residual = r;
        chk.x = xc;
        chk.s = sc;
      }
    }
  }
  return chk;
}

// Alternating projections between {Ax + s = b} and s in K (primal) and between
// {A^T y + c = 0} and y in K* (dual). Only improvements are kept.
void Engine::polish(Check& chk) const {
  const SpMat& A = e_.A;
  const Vec& b = e_.b;
  const Vec& c = e_.c;
  const ConeLayout& L = e_.layout;
  const int free_cols = n_ - (m_ - L.zero);
  const int mz = L.zero;
  if (mz == 0) return;
  // Equality block E (mz x n) and its Gram matrix.
  const SpMat E = A.topRows(mz);
  SpMat EEt = E * E.transpose();
  for (int i = 0; i < mz; ++i) EEt.coeffRef(i, i) += 1e-12;
  Eigen::SimplicialLDLT<SpMat> ldlt(EEt);
  if (ldlt.info() != Eigen::Success) return;
  Eigen::MatrixXd work;

  auto residuals_of = [&](const Vec& x, const Vec& y) {
    Vec s = Vec::Zero(m_);
    s.tail(m_ - mz) = x.tail(n_ - free_cols);
    project_primal_cone(s, L, work);
    const Vec ax = A * x;
    const Vec aty = A.transpose() * y;
    Residuals r;
    r.primal = inf_norm(ax + s - b) / (1.0 + std::max({inf_norm(b), inf_norm(ax), inf_norm(s)}));
    r.dual = inf_norm(aty + c) / (1.0 + std::max(inf_norm(aty), inf_norm(c)));
    const double p = c.dot(x);
    const double d = -b.dot(y);
    r.gap = std::abs(p - d) / (1.0 + std::max(std::abs(p), std::abs(d)));
    return r;
  };
  auto worst = [](const Residuals& r) { return std::max({r.primal, r.dual, r.gap}); };

  Vec x = chk.x;
  Vec y = chk.y;
  for (int round = 0; round < 5; ++round) {
    // Primal: cone columns of x equal s; keep them in K and fix E x = b_eq.
    Vec cone = x.tail(n_ - free_cols);
    Vec padded = Vec::Zero(m_);
    padded.tail(m_ - mz) = cone;
    project_primal_cone(padded, L, work);
    x.tail(n_ - free_cols) = padded.tail(m_ - mz);
    const Vec viol = E * x - b.head(mz);
    x -= E.transpose() * ldlt.solve(viol);
    // Dual: cone part of y equals c + E^T y_eq restricted to cone columns, free
    // columns need (E^T y_eq + c)_free = 0.
    Vec yeq = y.head(mz);
    const Vec g = E.transpose() * yeq + c;
    Vec free_res = g.head(free_cols);
    if (free_cols > 0) {
      // Least-norm correction of y_eq cancelling the free-column residual.
      const SpMat Ef = E.leftCols(free_cols);
      Eigen::MatrixXd EfD = Eigen::MatrixXd(Ef.transpose() * Ef);
      EfD.diagonal().array() += 1e-12;
      const Vec z = EfD.ldlt().solve(free_res);
      yeq -= Ef * z;
    }
    Vec ycone = Vec::Zero(m_);
    ycone.tail(m_ - mz) = (E.transpose() * yeq + c).tail(n_ - free_cols);
    project_dual_cone(ycone, L, work);
    y.head(mz) = yeq;
    y.tail(m_ - mz) = ycone.tail(m_ - mz);
  }
  const Residuals before = chk.res;
  const Residuals after = residuals_of(x, y);
  if (worst(after) < worst(before)) {
    chk.x = x;
    chk.y = y;
    chk.s = Vec::Zero(m_);
    chk.s.tail(m_ - mz) = x.tail(n_ - free_cols);
    project_primal_cone(chk.s, L, work);
    chk.res = after;
    chk.pobj = c.dot(x);
    chk.dobj = -b.dot(y);
    chk.optimal = after.primal <= cfg_.eps_primal && after.dual <= cfg_.eps_dual &&
                  after.gap <= cfg_.eps_gap;
  }
}

Solution Engine::run() {
  const int N = n_ + m_ + 1;
  Vec w = Vec::Zero(N);
  w[N - 1] = 1.0;
  Vec tw(N), ut(N), u(N);
  std::ostream& log = cfg_.log ? *cfg_.log : std::cerr;

  // Safeguarded Anderson acceleration (type II) on the fixed-point map
  // w -> T(w). An accelerated point is kept only if its fixed-point residual
  // does not exceed the residual of the point it was extrapolated from;
  // otherwise the plain step is restored and the memory cleared.
  const int mem = cfg_.anderson_memory;
  Eigen::MatrixXd dF, dG;
  if (mem > 0) {
    dF.resize(N, mem);
    dG.resize(N, mem);
  }
  int stored = 0;
  int head = 0;
  Vec f_prev, g_prev;
  bool have_prev = false;
  bool accelerated = false;
  Vec w_plain;
  double plain_norm = 0.0;
  auto reset_memory = [&] {
    stored = 0;
    head = 0;
    have_prev = false;
    accelerated = false;
  };

  Solution sol;
  Check chk;
  int it = 0;
  int last_rescale = 0;
  bool stalled = false;
  int tau_dead_checks = 0;
  int plain_until = 0;
  // Keeps the pair (u, v) of the current iterate under a new metric.
  auto remap = [&](const Vec& uu, const Vec& vv) {
    w.head(n_) = uu.head(n_) + vv.head(n_) / cfg_.rho_x;
    w.segment(n_, m_) = uu.segment(n_, m_) + vv.segment(n_, m_).cwiseQuotient(ry_);
    w[N - 1] = uu[N - 1] + vv[N - 1];
  };
  for (it = 1; it <= cfg_.max_iter; ++it) {
    step(w, tw, ut, u);
    Vec f = tw - w;
    double fnorm = f.norm();
    if (accelerated && fnorm > plain_norm) {
      w = w_plain;
      reset_memory();
      step(w, tw, ut, u);
      f = tw - w;
      fnorm = f.norm();
    }

    if (it % cfg_.check_interval == 0 || it == cfg_.max_iter) {
      const Vec v = metric(w + u - 2.0 * ut);
      chk = evaluate(u, v);
      if (cfg_.verbose) {
        log << std::setw(7) << it << std::scientific << std::setprecision(3) << "  pres "
            << chk.res.primal << "  dres " << chk.res.dual << "  gap " << chk.res.gap << "  pobj "
            << std::setprecision(9) << chk.pobj << "  dobj " << chk.dobj << "  scale "
            << std::setprecision(3) << scale_ << std::defaultfloat << '\n';
      }
      if (chk.optimal || chk.primal_infeasible || chk.dual_infeasible) break;
      // Near tau = 0 the map is locally linear with the origin as its only
      // fixed point, and extrapolation heads there. Plain steps escape.
      if (mem > 0 && u[N - 1] <= 0.0) {
        if (++tau_dead_checks >= 3) {
          tau_dead_checks = 0;
          reset_memory();
          plain_until = it + 50 * cfg_.check_interval;
        }
      } else {
        tau_dead_checks = 0;
      }
      if (cfg_.polish && it % (cfg_.check_interval * 50) == 0 && chk.x.size() == n_) {
        Check trial = chk;
        polish(trial);
        if (trial.optimal) {
          chk = trial;
          sol.polished = true;
          break;
        }
      }
      // Rebalance the metric when the primal and dual residuals of the
      // equilibrated problem drift apart.
      if (!stalled && cfg_.stall_iterations > 0 && it >= cfg_.stall_iterations &&
          chk.x.size() == n_) {
        // Slow tail: freeze the adaptive rule and raise the weight of the
        // cone rows, which helps on degenerate optima.
        stalled = true;
        scale_ = std::max(scale_ * cfg_.stall_scale_factor, 1e-8);
        setup_metric();
        remap(u, v);
        reset_memory();
        continue;
      }
      if (!stalled && cfg_.adaptive_scale && chk.x.size() == n_ && it - last_rescale >= 100) {
        const double ratio = chk.scaled_ratio;
        if (ratio > 3.0 || ratio < 1.0 / 3.0) {
          scale_ = std::clamp(scale_ * ratio, 1e-6, 1e6);
          setup_metric();
          remap(u, v);
          reset_memory();
          last_rescale = it;
          continue;
        }
      }
    }

    if (mem == 0 || it < plain_until) {
      w = tw;
      continue;
    }
    if (have_prev) {
      dF.col(head) = f - f_prev;
      dG.col(head) = tw - g_prev;
      head = (head + 1) % mem;
      stored = std::min(stored + 1, mem);
    }
    f_prev = f;
    g_prev = tw;
    have_prev = true;
    w = tw;
    accelerated = false;
    if (stored > 0) {
      const auto Fm = dF.leftCols(stored);
      Eigen::MatrixXd gram = Fm.transpose() * Fm;
      gram.diagonal().array() += 1e-10 * (gram.diagonal().maxCoeff() + 1e-30);
      const Vec gamma = gram.ldlt().solve(Fm.transpose() * f);
      if (gamma.allFinite()) {
        w_plain = tw;
        plain_norm = fnorm;
        w -= dG.leftCols(stored) * gamma;
        // T is positively homogeneous, so w = 0 is a spurious fixed point.
        // Pinning the norm stops extrapolation from drifting toward it and
        // keeps the residual comparison above meaningful.
        const double wn = w.norm();
        const double pn = w_plain.norm();
        if (wn > 1e-300 && w.allFinite() && w[N - 1] >= 0.0) {
          w *= pn / wn;
          accelerated = true;
        } else {
          w = w_plain;
        }
      }
    }
  }
  sol.iterations = std::min(it, cfg_.max_iter);

  if (chk.primal_infeasible) {
    sol.status = SolveStatus::PrimalInfeasible;
    sol.certificate.assign(chk.y.data(), chk.y.data() + e_.layout.zero);
    for (double& v : sol.certificate) v = -v;
    sol.certificate_residual = chk.cert_residual;
    sol.primal_value = std::numeric_limits<double>::quiet_NaN();
    sol.dual_value = std::numeric_limits<double>::quiet_NaN();
    return sol;
  }
  if (chk.dual_infeasible) {
    sol.status = SolveStatus::DualInfeasible;
    sol.certificate.resize(e_.column_of.size());
    for (std::size_t v = 0; v < e_.column_of.size(); ++v) {
      sol.certificate[v] = chk.x[e_.column_of[v]] / e_.col_scale[v];
    }
    sol.certificate_residual = chk.cert_residual;
    sol.primal_value = std::numeric_limits<double>::quiet_NaN();
    sol.dual_value = std::numeric_limits<double>::quiet_NaN();
    return sol;
  }
  if (!chk.optimal && cfg_.polish && chk.x.size() == n_) {
    Check trial = chk;
    polish(trial);
    if (trial.optimal) sol.polished = true;
    chk = trial;
  }
  sol.status = chk.optimal ? SolveStatus::Optimal : SolveStatus::MaxIterReached;
  sol.residuals = chk.res;
  if (chk.x.size() == n_) {
    sol.primal_point.resize(e_.column_of.size());
    for (std::size_t v = 0; v < e_.column_of.size(); ++v) {
      sol.primal_point[v] = chk.x[e_.column_of[v]] / e_.col_scale[v];
    }
    sol.dual_point.resize(static_cast<std::size_t>(e_.layout.zero));
    for (int r = 0; r < e_.layout.zero; ++r) sol.dual_point[static_cast<std::size_t>(r)] = -chk.y[r] * e_.objective_sign;
    sol.primal_value = e_.objective_sign * chk.pobj;
    sol.dual_value = e_.objective_sign * chk.dobj;
  } else {
    sol.primal_value = std::numeric_limits<double>::quiet_NaN();
    sol.dual_value = std::numeric_limits<double>::quiet_NaN();
  }
  return sol;
}

}  // namespace

Solution solve(const ConicProgram& p, const SolverConfig& cfg) {
  cfg.validate();
  p.validate();
  if (p.psd_entries() > cfg.max_psd_entries) {
    throw RefusalError("program has " + std::to_string(p.psd_entries()) +
                       " PSD entries; the cap is " + std::to_string(cfg.max_psd_entries));
  }
  const Embedded e = embed(p);
  Engine engine(e, cfg);
  return engine.run();
}

}  // namespace copos

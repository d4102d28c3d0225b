#include "copos/eigen_sym.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

namespace copos {

namespace {

// Reduces V (holding the input) to tridiagonal form; on exit V holds the
// orthogonal transformation, d the diagonal and e the subdiagonal in e[1..n-1].
void tridiagonalize(Eigen::MatrixXd& V, Eigen::VectorXd& d, Eigen::VectorXd& e) {
  const int n = static_cast<int>(V.rows());
  for (int j = 0; j < n; ++j) d[j] = V(n - 1, j);

  for (int i = n - 1; i > 0; --i) {
    double scale = 0.0;
    double h = 0.0;
    for (int k = 0; k < i; ++k) scale += std::abs(d[k]);
    if (scale == 0.0) {
      e[i] = d[i - 1];
      for (int j = 0; j < i; ++j) {
        d[j] = V(i - 1, j);
        V(i, j) = 0.0;
        V(j, i) = 0.0;
      }
    } else {
      for (int k = 0; k < i; ++k) {
        d[k] /= scale;
        h += d[k] * d[k];
      }
      double f = d[i - 1];
      double g = std::sqrt(h);
      if (f > 0) g = -g;
      e[i] = scale * g;
      h -= f * g;
      d[i - 1] = f - g;
      for (int j = 0; j < i; ++j) e[j] = 0.0;

      for (int j = 0; j < i; ++j) {
        f = d[j];
        V(j, i) = f;
        g = e[j] + V(j, j) * f;
        for (int k = j + 1; k <= i - 1; ++k) {
          g += V(k, j) * d[k];
          e[k] += V(k, j) * f;
        }
        e[j] = g;
      }
      f = 0.0;
      for (int j = 0; j < i; ++j) {
        e[j] /= h;
        f += e[j] * d[j];
      }
      const double hh = f / (h + h);
      for (int j = 0; j < i; ++j) e[j] -= hh * d[j];
      for (int j = 0; j < i; ++j) {
        f = d[j];
        g = e[j];
        for (int k = j; k <= i - 1; ++k) V(k, j) -= (f * e[k] + g * d[k]);
        d[j] = V(i - 1, j);
        V(i, j) = 0.0;
      }
    }
    d[i] = h;
  }

  for (int i = 0; i < n - 1; ++i) {
    V(n - 1, i) = V(i, i);
    V(i, i) = 1.0;
    const double h = d[i + 1];
    if (h != 0.0) {
      for (int k = 0; k <= i; ++k) d[k] = V(k, i + 1) / h;
      for (int j = 0; j <= i; ++j) {
        double g = 0.0;
        for (int k = 0; k <= i; ++k) g += V(k, i + 1) * V(k, j);
        for (int k = 0; k <= i; ++k) V(k, j) -= g * d[k];
      }
    }
    for (int k = 0; k <= i; ++k) V(k, i + 1) = 0.0;
  }
  for (int j = 0; j < n; ++j) {
    d[j] = V(n - 1, j);
    V(n - 1, j) = 0.0;
  }
  V(n - 1, n - 1) = 1.0;
  e[0] = 0.0;
}

void ql_iterate(Eigen::MatrixXd& V, Eigen::VectorXd& d, Eigen::VectorXd& e, int max_iterations) {
  const int n = static_cast<int>(V.rows());
  for (int i = 1; i < n; ++i) e[i - 1] = e[i];
  e[n - 1] = 0.0;

  double f = 0.0;
  double tst1 = 0.0;
  const double eps = std::numeric_limits<double>::epsilon();
  for (int l = 0; l < n; ++l) {
    tst1 = std::max(tst1, std::abs(d[l]) + std::abs(e[l]));
    int m = l;
    while (m < n) {
      if (std::abs(e[m]) <= eps * tst1) break;
      ++m;
    }
    // Only a NaN can run the scan past e[n-1] = 0.
    if (m == n) throw EigenError("non-finite value during QL iteration");
    if (m > l) {
      int iter = 0;
      do {
        if (++iter > max_iterations) throw EigenError("QL iteration did not converge");
        double g = d[l];
        double p = (d[l + 1] - g) / (2.0 * e[l]);
        double r = std::hypot(p, 1.0);
        if (p < 0) r = -r;
        d[l] = e[l] / (p + r);
        d[l + 1] = e[l] * (p + r);
        const double dl1 = d[l + 1];
        double h = g - d[l];
        for (int i = l + 2; i < n; ++i) d[i] -= h;
        f += h;

        p = d[m];
        double c = 1.0;
        double c2 = c;
        double c3 = c;
        const double el1 = e[l + 1];
        double s = 0.0;
        double s2 = 0.0;
        for (int i = m - 1; i >= l; --i) {
          c3 = c2;
          c2 = c;
          s2 = s;
          g = c * e[i];
          h = c * p;
          r = std::hypot(p, e[i]);
          e[i + 1] = s * r;
          s = e[i] / r;
          c = p / r;
          p = c * d[i] - s * g;
          d[i + 1] = h + s * (c * g + s * d[i]);
          for (int k = 0; k < n; ++k) {
            h = V(k, i + 1);
            V(k, i + 1) = s * V(k, i) + c * h;
            V(k, i) = c * V(k, i) - s * h;
          }
        }
        p = -s * s2 * c3 * el1 * e[l] / dl1;
        e[l] = s * p;
        d[l] = c * p;
      } while (std::abs(e[l]) > eps * tst1);
    }
    d[l] += f;
    e[l] = 0.0;
  }
}

}  // namespace

SymEigen sym_eigen(const Eigen::MatrixXd& a, int max_iterations) {
  if (a.rows() != a.cols()) throw std::invalid_argument("matrix is not square");
  const int n = static_cast<int>(a.rows());
  SymEigen out;
  if (n == 0) return out;
  if (!a.allFinite()) throw EigenError("matrix has non-finite entries");
  Eigen::MatrixXd V = a.triangularView<Eigen::Lower>();
  V.triangularView<Eigen::StrictlyUpper>() = V.transpose().triangularView<Eigen::StrictlyUpper>();
  Eigen::VectorXd d(n);
  Eigen::VectorXd e(n);
  tridiagonalize(V, d, e);
  if (!d.allFinite() || !e.allFinite()) throw EigenError("overflow during tridiagonalization");
  ql_iterate(V, d, e, max_iterations);

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int i, int j) { return d[i] < d[j]; });
  out.values.resize(n);
  out.vectors.resize(n, n);
  for (int k = 0; k < n; ++k) {
    out.values[k] = d[order[static_cast<std::size_t>(k)]];
    out.vectors.col(k) = V.col(order[static_cast<std::size_t>(k)]);
  }
  return out;
}

double min_eigenvalue(const Eigen::MatrixXd& a) {
  if (a.rows() == 0) return std::numeric_limits<double>::infinity();
  return sym_eigen(a).values[0];
}

Eigen::MatrixXd psd_project(const Eigen::MatrixXd& a) {
  const int n = static_cast<int>(a.rows());
  if (n == 0) return a;
  if (n == 1) return Eigen::MatrixXd::Constant(1, 1, std::max(a(0, 0), 0.0));
  const SymEigen eig = sym_eigen(a);
  int negative = 0;
  while (negative < n && eig.values[negative] < 0) ++negative;
  if (negative == 0) return 0.5 * (a + a.transpose());
  if (negative == n) return Eigen::MatrixXd::Zero(n, n);
  // Rebuild from whichever side of the spectrum is smaller.
  Eigen::MatrixXd out;
  if (negative <= n - negative) {
    const auto vn = eig.vectors.leftCols(negative);
    out = 0.5 * (a + a.transpose());
    out.noalias() -= vn * eig.values.head(negative).asDiagonal() * vn.transpose();
  } else {
    const auto vp = eig.vectors.rightCols(n - negative);
    out.noalias() = vp * eig.values.tail(n - negative).asDiagonal() * vp.transpose();
  }
  return 0.5 * (out + out.transpose());
}

SymMatrix psd_project(const SymMatrix& m) { return SymMatrix::from_dense(psd_project(m.dense())); }

}  // namespace copos

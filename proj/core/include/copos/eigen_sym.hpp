#pragma once

#include <stdexcept>

#include <Eigen/Dense>

#include "copos/graph.hpp"

namespace copos {

class EigenError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SymEigen {
  /// Ascending.
  Eigen::VectorXd values;
  /// Orthonormal eigenvectors as columns, matching `values`.
  Eigen::MatrixXd vectors;
};

/// Householder tridiagonalization followed by implicit QL with Wilkinson-type
/// shifts. Only the lower triangle of `a` is read. Throws EigenError when some
/// eigenvalue needs more than `max_iterations` QL sweeps.
SymEigen sym_eigen(const Eigen::MatrixXd& a, int max_iterations = 100);

/// Smallest eigenvalue; +infinity for an empty matrix.
double min_eigenvalue(const Eigen::MatrixXd& a);

/// Frobenius-nearest PSD matrix: negative eigenvalues are clipped to zero.
Eigen::MatrixXd psd_project(const Eigen::MatrixXd& a);
SymMatrix psd_project(const SymMatrix& m);

}  // namespace copos

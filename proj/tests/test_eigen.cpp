#include <gtest/gtest.h>

#include <random>

#include <Eigen/Eigenvalues>

#include "copos/eigen_sym.hpp"

namespace copos {
namespace {

Eigen::MatrixXd random_symmetric(std::mt19937& rng, int n) {
  std::normal_distribution<double> d;
  Eigen::MatrixXd a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j) a(i, j) = a(j, i) = d(rng);
  return a;
}

TEST(SymEigen, MatchesEigenReferenceSolver) {
  std::mt19937 rng(17);
  for (int n : {1, 2, 3, 5, 8, 20, 60}) {
    for (int trial = 0; trial < 5; ++trial) {
      Eigen::MatrixXd a = random_symmetric(rng, n);
      SymEigen ours = sym_eigen(a);
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ref(a);
      const double scale = 1.0 + a.norm();
      EXPECT_LE((ours.values - ref.eigenvalues()).cwiseAbs().maxCoeff(), 1e-12 * scale) << n;
      const Eigen::MatrixXd& v = ours.vectors;
      EXPECT_LE((v.transpose() * v - Eigen::MatrixXd::Identity(n, n)).norm(), 1e-12 * n);
      EXPECT_LE((a * v - v * ours.values.asDiagonal()).norm(), 1e-11 * scale);
      for (int i = 1; i < n; ++i) EXPECT_LE(ours.values[i - 1], ours.values[i]);
    }
  }
}

TEST(SymEigen, ReadsOnlyTheLowerTriangle) {
  Eigen::MatrixXd a(2, 2);
  a << 2, 99, 1, 2;
  SymEigen e = sym_eigen(a);
  EXPECT_NEAR(e.values[0], 1.0, 1e-14);
  EXPECT_NEAR(e.values[1], 3.0, 1e-14);
}

TEST(SymEigen, RepeatedEigenvaluesAndDiagonalInput) {
  Eigen::MatrixXd j = Eigen::MatrixXd::Ones(6, 6);
  SymEigen e = sym_eigen(j);
  for (int i = 0; i < 5; ++i) EXPECT_NEAR(e.values[i], 0.0, 1e-13);
  EXPECT_NEAR(e.values[5], 6.0, 1e-13);
  Eigen::VectorXd d(3);
  d << 3, -1, 2;
  EXPECT_NEAR(min_eigenvalue(d.asDiagonal().toDenseMatrix()), -1.0, 1e-15);
  EXPECT_TRUE(std::isinf(min_eigenvalue(Eigen::MatrixXd(0, 0))));
}

TEST(SymEigen, IterationBudgetIsEnforced) {
  std::mt19937 rng(5);
  EXPECT_THROW(sym_eigen(random_symmetric(rng, 12), 0), EigenError);
}

TEST(PsdProject, Examples) {
  Eigen::MatrixXd a(2, 2);
  a << 2, 0, 0, -1;
  Eigen::MatrixXd p = psd_project(a);
  EXPECT_NEAR(p(0, 0), 2.0, 1e-15);
  EXPECT_NEAR(p(1, 1), 0.0, 1e-15);

  Eigen::MatrixXd swap(2, 2);
  swap << 0, 1, 1, 0;
  Eigen::MatrixXd half = psd_project(swap);
  EXPECT_LE((half - Eigen::MatrixXd::Constant(2, 2, 0.5)).norm(), 1e-15);

  Eigen::MatrixXd psd(2, 2);
  psd << 2, 1, 1, 2;
  EXPECT_LE((psd_project(psd) - psd).norm(), 1e-12);

  SymMatrix m(2);
  m.set(0, 1, 1.0);
  SymMatrix mp = psd_project(m);
  EXPECT_NEAR(mp(0, 1), 0.5, 1e-15);
  EXPECT_EQ(mp(0, 1), mp(1, 0));
}

TEST(PsdProject, IdempotentNonnegativeAndNearest) {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + trial % 9;
    Eigen::MatrixXd a = random_symmetric(rng, n);
    Eigen::MatrixXd p = psd_project(a);
    EXPECT_GE(min_eigenvalue(p), -1e-10);
    EXPECT_LE((psd_project(p) - p).norm(), 1e-12 * (1.0 + p.norm()));
    // Any other PSD matrix is at least as far away: try random Gram matrices.
    const double dist = (a - p).norm();
    for (int k = 0; k < 10; ++k) {
      Eigen::MatrixXd b = random_symmetric(rng, n);
      Eigen::MatrixXd q = p + 0.1 * b * b.transpose();
      EXPECT_GE((a - q).norm(), dist - 1e-12);
    }
    // The residual is negative semidefinite and orthogonal to the projection.
    Eigen::MatrixXd r = a - p;
    EXPECT_LE(-min_eigenvalue(-r), 1e-10);
    EXPECT_NEAR((r.transpose() * p).trace(), 0.0, 1e-10 * (1.0 + a.squaredNorm()));
  }
}

}  // namespace
}  // namespace copos

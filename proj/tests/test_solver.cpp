#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "copos/errors.hpp"
#include "copos/graph_catalog.hpp"
#include "copos/solver.hpp"
#include "copos/sos.hpp"

namespace copos {
namespace {

/// min x s.t. [[x, 1], [1, x]] PSD.
ConicProgram two_by_two() {
  ConicProgram p;
  const int x = p.add_free("x");
  const int b = p.add_psd_block("X", 2);
  p.add_equality({{p.psd_var(b, 0, 0), 1.0}, {x, -1.0}}, 0.0, "diag0");
  p.add_equality({{p.psd_var(b, 1, 1), 1.0}, {x, -1.0}}, 0.0, "diag1");
  p.add_equality({{p.psd_var(b, 1, 0), 1.0}}, 1.0, "offdiag");
  p.add_objective(x, 1.0);
  return p;
}

double odd_cycle_theta(int n) {
  const double c = std::cos(std::numbers::pi / n);
  return n * c / (1.0 + c);
}

/// z = E^T y per variable.
std::vector<double> transpose_apply(const ConicProgram& p, const std::vector<double>& y) {
  std::vector<double> z(static_cast<std::size_t>(p.num_vars()), 0.0);
  for (std::size_t r = 0; r < p.rows().size(); ++r) {
    for (const LinearTerm& t : p.rows()[r].terms) z[t.var] += t.coef * y[r];
  }
  return z;
}

/// Largest value of <z, x> over x in the cone with ||x|| <= 1, up to a constant:
/// zero when z is in the negative dual cone.
double dual_cone_violation(const ConicProgram& p, const std::vector<double>& z) {
  double worst = 0.0;
  for (int v = 0; v < p.num_vars(); ++v) {
    const VarInfo& info = p.vars()[v];
    if (info.kind == VarKind::Free) worst = std::max(worst, std::abs(z[v]));
    if (info.kind == VarKind::Nonneg) worst = std::max(worst, z[v]);
  }
  for (std::size_t b = 0; b < p.blocks().size(); ++b) {
    const int n = p.blocks()[b].size;
    Eigen::MatrixXd zm(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j <= i; ++j) {
        const double c = z[p.psd_var(static_cast<int>(b), i, j)];
        zm(i, j) = zm(j, i) = (i == j) ? c : c / 2.0;
      }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(zm);
    worst = std::max(worst, es.eigenvalues().maxCoeff());
  }
  return worst;
}

TEST(Solver, TwoByTwoDeterminantExample) {
  Solution s = solve(two_by_two());
  ASSERT_EQ(s.status, SolveStatus::Optimal);
  EXPECT_NEAR(s.primal_value, 1.0, 1e-7);
  EXPECT_NEAR(s.dual_value, 1.0, 1e-7);
  EXPECT_LE(two_by_two().max_equality_violation(s.primal_point), 1e-7);
}

TEST(Solver, LovaszThetaOfOddCycles) {
  for (int n : {5, 7, 9}) {
    ConicProgram p = compile_lovasz_theta(catalog::cycle(n), false);
    Solution s = solve(p);
    ASSERT_EQ(s.status, SolveStatus::Optimal) << n;
    EXPECT_NEAR(s.primal_value, odd_cycle_theta(n), 1e-6) << n;
    EXPECT_LE(std::abs(s.primal_value - s.dual_value), 1e-6);
  }
  EXPECT_NEAR(odd_cycle_theta(5), std::sqrt(5.0), 1e-15);
}

TEST(Solver, ThetaVariantsOnKnownGraphs) {
  SolverConfig cfg;
  Solution pet = solve(compile_lovasz_theta(catalog::petersen(), false), cfg);
  EXPECT_NEAR(pet.primal_value, 4.0, 1e-6);
  // Perfect graphs: theta equals alpha.
  Solution c6 = solve(compile_lovasz_theta(catalog::cycle(6), true), cfg);
  EXPECT_NEAR(c6.primal_value, 3.0, 1e-6);
  Solution k234 = solve(compile_lovasz_theta(catalog::complete_multipartite({2, 3, 4}), false), cfg);
  EXPECT_NEAR(k234.primal_value, 4.0, 1e-6);
}

// Edgeless graphs once sent the accelerated iteration to the trivial fixed
// point of the embedding; theta is n for every one of them.
TEST(Solver, AccelerationDoesNotCollapseOnEdgelessGraphs) {
  SolverConfig cfg;
  for (int n = 1; n <= 8; ++n) {
    for (bool nonneg : {false, true}) {
      Solution s = solve(compile_lovasz_theta(catalog::empty(n), nonneg), cfg);
      ASSERT_EQ(s.status, SolveStatus::Optimal) << "n = " << n;
      EXPECT_NEAR(s.primal_value, n, 1e-6);
    }
  }
}

TEST(Solver, InfeasibleProgramReturnsAFarkasCertificate) {
  SosProgram sp = compile_lasserre_simplex(hierarchy_matrix(catalog::cycle(5), 0.5), 1);
  Solution s = solve(sp.program);
  ASSERT_EQ(s.status, SolveStatus::PrimalInfeasible);
  ASSERT_EQ(s.certificate.size(), sp.program.rows().size());
  double rhs_dot = 0.0;
  for (std::size_t r = 0; r < sp.program.rows().size(); ++r) rhs_dot += sp.program.rows()[r].rhs * s.certificate[r];
  ASSERT_GT(rhs_dot, 0.0);
  std::vector<double> y = s.certificate;
  for (double& v : y) v /= rhs_dot;
  // For feasible x: 1 = y^T rhs = <E^T y, x> <= 0, a contradiction.
  EXPECT_LE(dual_cone_violation(sp.program, transpose_apply(sp.program, y)), 1e-6);
}

TEST(Solver, SmallInfeasibleLp) {
  ConicProgram p;
  const int a = p.add_nonneg("a");
  const int b = p.add_nonneg("b");
  p.add_equality({{a, 1.0}, {b, 1.0}}, -1.0, "sum");
  p.add_objective(a, 1.0);
  Solution s = solve(p);
  EXPECT_EQ(s.status, SolveStatus::PrimalInfeasible);
  EXPECT_TRUE(std::isnan(s.primal_value));
}

TEST(Solver, UnboundedProgramReturnsARay) {
  ConicProgram p;
  const int x = p.add_nonneg("x");
  const int y = p.add_nonneg("y");
  p.add_equality({{x, 1.0}, {y, -1.0}}, 1.0, "diff");
  p.add_objective(x, 1.0);
  p.set_sense(Sense::Max);
  Solution s = solve(p);
  ASSERT_EQ(s.status, SolveStatus::DualInfeasible);
  ASSERT_EQ(s.certificate.size(), 2u);
  EXPECT_GT(s.certificate[0], 0.0);
  EXPECT_GE(s.certificate[1], -1e-9);
  EXPECT_NEAR(s.certificate[0] - s.certificate[1], 0.0, 1e-6);
}

TEST(Solver, WeakDualityOnMinSenseSolves) {
  for (int r = 0; r <= 1; ++r) {
    for (const Graph& g : {catalog::cycle(5), catalog::cycle(6), catalog::path(4)}) {
      SosProgram sp = compile_theta(g, r);
      ASSERT_EQ(sp.program.sense(), Sense::Min);
      Solution s = solve(sp.program);
      ASSERT_EQ(s.status, SolveStatus::Optimal);
      EXPECT_GE(s.primal_value, s.dual_value - 1e-6);
      EXPECT_LE(sp.program.max_equality_violation(s.primal_point), 1e-6);
    }
  }
  Solution s = solve(two_by_two());
  EXPECT_GE(s.primal_value, s.dual_value - 1e-6);
}

TEST(Solver, Deterministic) {
  ConicProgram p = compile_theta(catalog::cycle(5), 1).program;
  Solution a = solve(p);
  Solution b = solve(p);
  EXPECT_EQ(a.iterations, b.iterations);
  EXPECT_EQ(a.primal_value, b.primal_value);
  EXPECT_EQ(a.dual_value, b.dual_value);
  EXPECT_EQ(a.primal_point, b.primal_point);
}

TEST(Solver, OptionVariantsStillConverge) {
  ConicProgram p = compile_lovasz_theta(catalog::cycle(5), false);
  for (int variant = 0; variant < 4; ++variant) {
    SolverConfig cfg;
    if (variant == 0) cfg.anderson_memory = 0;
    if (variant == 1) cfg.scaling = false;
    if (variant == 2) cfg.adaptive_scale = false;
    if (variant == 3) cfg.polish = false;
    Solution s = solve(p, cfg);
    ASSERT_EQ(s.status, SolveStatus::Optimal) << variant;
    EXPECT_NEAR(s.primal_value, std::sqrt(5.0), 1e-6) << variant;
  }
}

TEST(Solver, IterationCapReportsMaxIter) {
  SolverConfig cfg;
  cfg.max_iter = 3;
  cfg.polish = false;
  Solution s = solve(compile_theta(catalog::cycle(5), 1).program, cfg);
  EXPECT_EQ(s.status, SolveStatus::MaxIterReached);
  EXPECT_LE(s.iterations, 3);
}

TEST(Solver, RefusesOversizedPrograms) {
  SolverConfig cfg;
  cfg.max_psd_entries = 10;
  EXPECT_THROW(solve(compile_lovasz_theta(catalog::cycle(5), false), cfg), RefusalError);
}

TEST(Solver, ConfigValidation) {
  auto bad = [](auto edit) {
    SolverConfig cfg;
    edit(cfg);
    EXPECT_THROW(cfg.validate(), std::invalid_argument);
  };
  bad([](SolverConfig& c) { c.eps_primal = 0; });
  bad([](SolverConfig& c) { c.eps_gap = -1; });
  bad([](SolverConfig& c) { c.relaxation = 2.0; });
  bad([](SolverConfig& c) { c.scale = 0; });
  bad([](SolverConfig& c) { c.max_iter = 0; });
  bad([](SolverConfig& c) { c.anderson_memory = -1; });
  EXPECT_NO_THROW(SolverConfig{}.validate());
  EXPECT_EQ(to_string(SolveStatus::PrimalInfeasible), "PrimalInfeasible");
}

TEST(ConicProgram, ValidationAndHelpers) {
  ConicProgram p = two_by_two();
  EXPECT_NO_THROW(p.validate());
  EXPECT_EQ(p.count(VarKind::PsdEntry), 3);
  EXPECT_EQ(p.psd_entries(), 3);
  EXPECT_EQ(p.largest_block(), 2);
  EXPECT_EQ(p.psd_var(0, 0, 1), p.psd_var(0, 1, 0));
  std::vector<double> x = {1.0, 1.0, 1.0, 1.0};
  EXPECT_EQ(p.objective_value(x), 1.0);
  std::vector<double> m = p.block_matrix(0, x);
  EXPECT_EQ(m, (std::vector<double>{1, 1, 1, 1}));
  ConicProgram bad;
  bad.add_free("a");
  bad.add_equality({{7, 1.0}}, 0.0, "dangling");
  EXPECT_THROW(bad.validate(), std::invalid_argument);
  EXPECT_THROW(bad.add_objective(9, 1.0), std::out_of_range);
}

}  // namespace
}  // namespace copos

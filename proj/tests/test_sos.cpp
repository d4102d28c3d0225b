#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include <Eigen/Eigenvalues>

#include "copos/errors.hpp"
#include "copos/graph_catalog.hpp"
#include "copos/sos.hpp"
#include "oracles.hpp"

namespace copos {
namespace {

double factorial(int k) {
  double f = 1.0;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

/// Coefficient of x^a in (sum_i x_i)^deg(a).
double multinomial(const Exponent& a) {
  double c = factorial(degree(a));
  for (int e : a) c /= factorial(e);
  return c;
}

/// Every row is the coefficient of its monomial in the reconstructed left-hand
/// side, and no other monomial appears.
void expect_rows_match_terms(const SosProgram& sp, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  std::vector<double> x(static_cast<std::size_t>(sp.program.num_vars()));
  for (double& v : x) v = d(rng);
  Polynomial lhs = sp.reconstruct(x);
  ASSERT_EQ(sp.row_monomials.size(), sp.program.rows().size());
  for (std::size_t k = 0; k < sp.row_monomials.size(); ++k) {
    double row = 0.0;
    for (const LinearTerm& t : sp.program.rows()[k].terms) row += t.coef * x[t.var];
    EXPECT_NEAR(row, lhs.coefficient(sp.row_monomials[k]), 1e-9) << sp.program.rows()[k].label;
    EXPECT_EQ(sp.program.rows()[k].rhs, sp.target.coefficient(sp.row_monomials[k]));
  }
  std::set<Exponent> rows(sp.row_monomials.begin(), sp.row_monomials.end());
  for (const auto& [a, c] : lhs.terms()) {
    if (std::abs(c) > 1e-12) EXPECT_TRUE(rows.count(a)) << "monomial outside the rows";
  }
  for (const auto& [a, c] : sp.target.terms()) EXPECT_TRUE(rows.count(a));
}

/// At a solved point the identity holds and every Gram block is PSD.
void expect_certificate(const SosProgram& sp, const Solution& s, double tol) {
  ASSERT_EQ(s.status, SolveStatus::Optimal);
  Polynomial diff = sp.reconstruct(s.primal_point) - sp.target;
  EXPECT_LE(diff.max_abs(), tol);
  for (std::size_t b = 0; b < sp.program.blocks().size(); ++b) {
    const int n = sp.program.blocks()[b].size;
    std::vector<double> m = sp.program.block_matrix(static_cast<int>(b), s.primal_point);
    Eigen::Map<Eigen::MatrixXd> mat(m.data(), n, n);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(mat);
    EXPECT_GE(es.eigenvalues().minCoeff(), -tol);
  }
}

std::vector<Graph> small_graphs() {
  return {catalog::cycle(5), catalog::path(4), catalog::complete(3), catalog::sparse_five(),
          catalog::two_triangles()};
}

TEST(Compilers, RowsAgreeWithTermMetadata) {
  std::uint32_t seed = 1;
  for (const Graph& g : small_graphs()) {
    const SymMatrix m = hierarchy_matrix(g, 0.25);
    for (int r = 0; r <= 2; ++r) {
      expect_rows_match_terms(compile_theta(g, r, 0.25), seed++);
      expect_rows_match_terms(compile_copositive_relaxation(m, r), seed++);
      if (r >= 1) expect_rows_match_terms(compile_preordering(m, r), seed++);
      if (r >= 1) expect_rows_match_terms(compile_lasserre_simplex(m, r), seed++);
      if (r >= 2) expect_rows_match_terms(compile_sphere(m, r), seed++);
    }
    expect_rows_match_terms(compile_shor_reduced(m), seed++);
  }
}

TEST(Compilers, ThetaTargetIsANegatedPowerSum) {
  for (int r = 0; r <= 3; ++r) {
    SosProgram sp = compile_theta(catalog::cycle(5), r);
    for (std::size_t k = 0; k < sp.row_monomials.size(); ++k) {
      const Exponent& a = sp.row_monomials[k];
      ASSERT_EQ(degree(a), r + 2);
      EXPECT_EQ(sp.program.rows()[k].rhs, -multinomial(a));
    }
    EXPECT_EQ(sp.row_monomials.size(), static_cast<std::size_t>(count_exponents(5, r + 2)));
  }
}

TEST(Compilers, SphereTargetSubstitutesSquares) {
  // P_M(x) = sum M_ij x_i^2 x_j^2.
  SosProgram sp = compile_sphere(hierarchy_matrix(catalog::path(3), 0.0), 2);
  EXPECT_EQ(sp.target.coefficient({2, 2, 0}), 2.0);
  EXPECT_EQ(sp.target.coefficient({2, 0, 2}), 0.0);
  EXPECT_EQ(sp.target.coefficient({4, 0, 0}), 1.0);
  EXPECT_EQ(sp.target.degree(), 4);
}

TEST(Compilers, InputValidation) {
  EXPECT_THROW(compile_theta(catalog::cycle(5), -1), std::invalid_argument);
  EXPECT_THROW(compile_theta(Graph(0), 0), std::invalid_argument);
  EXPECT_THROW(hierarchy_matrix(catalog::cycle(5), -0.1), std::invalid_argument);
  EXPECT_THROW(hierarchy_matrix(catalog::cycle(5), NAN), std::invalid_argument);
  CompileCaps caps;
  caps.max_preordering_products = 10;
  EXPECT_THROW(compile_preordering(hierarchy_matrix(catalog::cycle(5), 0.0), 2, caps), RefusalError);
  caps = {};
  caps.max_rows = 5;
  BoundOptions opts;
  opts.caps = caps;
  EXPECT_THROW(compute_bound(Hierarchy::Preordering, catalog::cycle(5), 1, 0.0, {}, opts), RefusalError);
}

TEST(Hierarchies, NamesRoundTrip) {
  for (Hierarchy h : {Hierarchy::Theta, Hierarchy::Zeta, Hierarchy::LasserreSimplex, Hierarchy::Preordering,
                      Hierarchy::Sphere, Hierarchy::Shor}) {
    EXPECT_EQ(parse_hierarchy(to_string(h)), h);
  }
  EXPECT_EQ(parse_hierarchy("SIMPLEX"), Hierarchy::LasserreSimplex);
  EXPECT_EQ(parse_hierarchy("po"), Hierarchy::Preordering);
  EXPECT_FALSE(parse_hierarchy("lovasz").has_value());
  EXPECT_TRUE(bounds_alpha_directly(Hierarchy::Zeta));
  EXPECT_FALSE(bounds_alpha_directly(Hierarchy::Sphere));
}

TEST(Certificates, SolvedProgramsSatisfyTheirIdentity) {
  SolverConfig cfg;
  const Graph c5 = catalog::cycle(5);
  const SymMatrix m = hierarchy_matrix(c5, 0.0);
  for (const SosProgram& sp : {compile_theta(c5, 1), compile_copositive_relaxation(m, 1),
                               compile_preordering(m, 1), compile_sphere(m, 2)}) {
    expect_certificate(sp, solve(sp.program, cfg), 1e-6);
  }
  const SymMatrix tri = hierarchy_matrix(catalog::two_triangles(), 0.0);
  for (const SosProgram& sp : {compile_lasserre_simplex(tri, 1), compile_shor_reduced(tri)}) {
    expect_certificate(sp, solve(sp.program, cfg), 1e-6);
  }
}

TEST(Precheck, FirstViolatingPair) {
  PrecheckResult p = p1_feasibility_precheck(hierarchy_matrix(catalog::cycle(5), 0.5));
  EXPECT_TRUE(p.provably_infeasible);
  EXPECT_EQ(p.i, 0);
  EXPECT_EQ(p.j, 1);
  EXPECT_DOUBLE_EQ(p.value, -1.0);
  EXPECT_FALSE(p1_feasibility_precheck(hierarchy_matrix(catalog::cycle(5), 0.0)).provably_infeasible);
  EXPECT_FALSE(p1_feasibility_precheck(hierarchy_matrix(catalog::empty(3), 0.5)).provably_infeasible);
}

TEST(Bounds, PrecheckShortCircuitsAndSolverAgrees) {
  const Graph c5 = catalog::cycle(5);
  BoundResult quick = compute_bound(Hierarchy::LasserreSimplex, c5, 1, 0.5, {});
  EXPECT_EQ(quick.outcome, BoundOutcome::Infeasible);
  EXPECT_EQ(quick.infeasibility_source, "precheck");
  EXPECT_FALSE(quick.solver_status.has_value());
  BoundOptions opts;
  opts.solve_after_precheck = true;
  BoundResult full = compute_bound(Hierarchy::LasserreSimplex, c5, 1, 0.5, {}, opts);
  EXPECT_EQ(full.outcome, BoundOutcome::Infeasible);
  EXPECT_EQ(full.solver_status, SolveStatus::PrimalInfeasible);
  BoundResult shor = compute_bound(Hierarchy::Shor, c5, 0, 0.5, {});
  EXPECT_EQ(shor.infeasibility_source, "precheck");
}

TEST(Bounds, ZetaAndDerivedBounds) {
  BoundResult z = compute_bound(Hierarchy::Zeta, catalog::cycle(5), 1, 0.0, {});
  EXPECT_EQ(z.outcome, BoundOutcome::Finite);
  EXPECT_EQ(z.exact_value, Rational(3));
  EXPECT_EQ(z.derived_alpha_bound, 3);
  BoundResult zi = compute_bound(Hierarchy::Zeta, catalog::cycle(5), 0, 0.0, {});
  EXPECT_EQ(zi.outcome, BoundOutcome::Infeasible);
  EXPECT_EQ(zi.infeasibility_source, "combinatorial");

  BoundResult t = compute_bound(Hierarchy::Theta, catalog::cycle(5), 0, 0.0, {});
  EXPECT_EQ(t.derived_alpha_bound, 2);
  BoundResult s = compute_bound(Hierarchy::Sphere, catalog::cycle(5), 2, 0.0, {});
  ASSERT_TRUE(s.value.has_value());
  EXPECT_EQ(s.derived_alpha_bound, static_cast<int>(std::floor(1.0 / *s.value + kRhoRound)));
  EXPECT_GT(s.rows, 0);
  EXPECT_GT(s.largest_block, 0);
}

TEST(Identities, CopositiveRelaxationIsReciprocalOfTheta) {
  SolverConfig cfg;
  for (const Graph& g : {catalog::cycle(5), catalog::path(4), catalog::sparse_five()}) {
    for (int r = 0; r <= 1; ++r) {
      BoundResult t = theta(g, r, 0.0, cfg);
      BoundResult c = solve_compiled(Hierarchy::Theta, r, 0.0,
                                     compile_copositive_relaxation(hierarchy_matrix(g, 0.0), r), cfg);
      ASSERT_TRUE(t.value && c.value);
      EXPECT_NEAR(1.0 / *t.value, *c.value, 1e-6);
    }
  }
}

TEST(Identities, ChainAtOrderZeroAndOne) {
  SolverConfig cfg;
  ChainReport c0 = hierarchy_chain_report(catalog::cycle(5), 0, cfg);
  EXPECT_TRUE(c0.complete);
  EXPECT_TRUE(c0.theta_equals_sphere);
  EXPECT_TRUE(c0.sphere_equals_preordering);
  EXPECT_TRUE(c0.simplex_below_preordering);
  EXPECT_TRUE(c0.all_below_inverse_alpha);
  ASSERT_TRUE(c0.inverse_theta.has_value());
  EXPECT_NEAR(*c0.inverse_theta, 1.0 / std::sqrt(5.0), 1e-6);

  ChainReport c1 = hierarchy_chain_report(catalog::cycle(5), 1, cfg);
  EXPECT_TRUE(c1.theta_equals_sphere && c1.sphere_equals_preordering && c1.simplex_below_preordering);
  ASSERT_TRUE(c1.preordering.value.has_value());
  EXPECT_NEAR(*c1.preordering.value, 0.5, 1e-5);
}

TEST(Identities, ShorMatchesFirstSimplexLevel) {
  SolverConfig cfg;
  for (const Graph& g : {catalog::two_triangles(), catalog::complete(4), catalog::empty(3),
                         catalog::three_disjoint_edges()}) {
    BoundResult shor = compute_bound(Hierarchy::Shor, g, 0, 0.0, cfg);
    BoundResult f1 = compute_bound(Hierarchy::LasserreSimplex, g, 1, 0.0, cfg);
    ASSERT_TRUE(shor.value && f1.value);
    EXPECT_NEAR(*shor.value, *f1.value, 1e-6);
    EXPECT_NEAR(*f1.value, 1.0 / testing::brute_alpha(g), 1e-6);
  }
  EXPECT_EQ(compute_bound(Hierarchy::Shor, catalog::path(3), 0, 0.0, cfg).outcome, BoundOutcome::Infeasible);
}

TEST(Sandwich, AlphaThetaPrimeThetaCliqueCover) {
  SolverConfig cfg;
  for (const Graph& g : testing::nonisomorphic_graphs_up_to(5)) {
    const double alpha = testing::brute_alpha(g);
    const double cover = testing::brute_clique_cover(g);
    Solution th = solve(compile_lovasz_theta(g, false), cfg);
    Solution thp = solve(compile_lovasz_theta(g, true), cfg);
    ASSERT_EQ(th.status, SolveStatus::Optimal);
    ASSERT_EQ(thp.status, SolveStatus::Optimal);
    EXPECT_LE(alpha, thp.primal_value + 1e-6);
    EXPECT_LE(thp.primal_value, th.primal_value + 1e-6);
    EXPECT_LE(th.primal_value, cover + 1e-6);
    BoundResult t0 = theta(g, 0, 0.0, cfg);
    ASSERT_TRUE(t0.value.has_value());
    EXPECT_NEAR(*t0.value, thp.primal_value, 1e-5);
  }
}

TEST(Monotonicity, OrdersImproveTheBounds) {
  SolverConfig cfg;
  for (const Graph& g : {catalog::cycle(5), catalog::sparse_five(), catalog::c5_with_pendant()}) {
    const double inv_alpha = 1.0 / testing::brute_alpha(g);
    double prev_theta = INFINITY;
    for (int r = 0; r <= 2; ++r) {
      BoundResult t = theta(g, r, 0.0, cfg);
      ASSERT_TRUE(t.value.has_value());
      EXPECT_LE(*t.value, prev_theta + 1e-6);
      EXPECT_GE(*t.value, 1.0 / inv_alpha - 1e-6);
      prev_theta = *t.value;
    }
    double prev_po = -INFINITY;
    double prev_simplex = -INFINITY;
    for (int r = 1; r <= 2; ++r) {
      BoundResult po = compute_bound(Hierarchy::Preordering, g, r, 0.0, cfg);
      ASSERT_TRUE(po.value.has_value());
      EXPECT_GE(*po.value, prev_po - 1e-6);
      EXPECT_LE(*po.value, inv_alpha + 1e-6);
      prev_po = *po.value;
      BoundResult f = compute_bound(Hierarchy::LasserreSimplex, g, r, 0.0, cfg);
      if (f.outcome == BoundOutcome::Finite) {
        EXPECT_GE(*f.value, prev_simplex - 1e-6);
        EXPECT_LE(*f.value, *po.value + 1e-6);
        prev_simplex = *f.value;
      } else {
        EXPECT_EQ(f.outcome, BoundOutcome::Infeasible);
      }
    }
  }
}

TEST(Rank, KnownRanks) {
  SolverConfig cfg;
  RankResult c5 = theta_rank(catalog::cycle(5), 2, cfg);
  EXPECT_EQ(c5.alpha, 2);
  EXPECT_EQ(c5.rank, 1);
  ASSERT_EQ(c5.values.size(), 2u);
  EXPECT_NEAR(*c5.values[0].value, std::sqrt(5.0), 1e-6);
  EXPECT_NEAR(*c5.values[1].value, 2.0, 1e-5);
  RankResult pet = theta_rank(catalog::petersen(), 2, cfg);
  EXPECT_EQ(pet.rank, 0);
  EXPECT_EQ(pet.values.size(), 1u);
  RankResult capped = theta_rank(catalog::cycle(5), 0, cfg);
  EXPECT_FALSE(capped.rank.has_value());
}

}  // namespace
}  // namespace copos

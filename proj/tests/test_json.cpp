#include <gtest/gtest.h>

#include "copos/graph_catalog.hpp"
#include "copos/json_io.hpp"

namespace copos {
namespace {

using nlohmann::json;

TEST(Json, Primitives) {
  EXPECT_EQ(to_json(Rational(6, 4)), (json{{"num", 3}, {"den", 2}}));
  EXPECT_EQ(to_json(VertexSet{0, 4}), json::array({1, 5}));
  EXPECT_EQ(to_json(Edge(3, 1)), json::array({2, 4}));
  EXPECT_EQ(stable_number(0.1 + 0.2), 0.3);
  EXPECT_EQ(stable_number(2.0000000000001), 2.0);
  EXPECT_EQ(stable_number(0.0), 0.0);
}

TEST(Json, BoundResultShapes) {
  BoundResult b;
  b.hierarchy = Hierarchy::Zeta;
  b.r = 1;
  b.outcome = BoundOutcome::Finite;
  b.value = 3.0;
  b.exact_value = Rational(3);
  b.derived_alpha_bound = 3;
  json z = to_json(b);
  EXPECT_EQ(z["value"], (json{{"num", 3}, {"den", 1}}));
  EXPECT_EQ(z["approx"], 3.0);
  EXPECT_FALSE(z.contains("solver"));
  EXPECT_FALSE(z.contains("seconds"));

  b.outcome = BoundOutcome::Infeasible;
  b.infeasibility_source = "precheck";
  b.precheck = PrecheckResult{true, 0, 1, -1.0};
  json inf = to_json(b);
  EXPECT_EQ(inf["value"], "Infeasible");
  EXPECT_EQ(inf["precheck"]["pair"], json::array({1, 2}));

  b.outcome = BoundOutcome::NotConverged;
  b.solver_status = SolveStatus::MaxIterReached;
  b.seconds = 1.5;
  JsonOptions timed;
  timed.include_timing = true;
  json nc = to_json(b, timed);
  EXPECT_TRUE(nc["value"].is_null());
  EXPECT_EQ(nc["solver"]["status"], "MaxIterReached");
  EXPECT_EQ(nc["seconds"], 1.5);
}

TEST(Json, GraphSummary) {
  json s = graph_summary(catalog::cycle(5));
  EXPECT_EQ(s["n"], 5);
  EXPECT_EQ(s["m"], 5);
  EXPECT_EQ(s["alpha"], 2);
  EXPECT_EQ(s["clique_cover_number"], 3);
  EXPECT_EQ(s["criticality"], "Critical");
  EnumerationCaps caps;
  caps.max_set_vertices = 4;
  EXPECT_TRUE(graph_summary(catalog::cycle(5), caps)["clique_cover_number"].is_null());
}

TEST(Json, MinimizerReport) {
  MinimizerReport rep = classify_point(catalog::sparse_five(), SimplexPoint({0.5, 0.5, 0, 0, 0}));
  json j = to_json(rep);
  EXPECT_EQ(j["classification"], "NotLocalMinimizer");
  EXPECT_EQ(j["support"], json::array({1, 2}));
  EXPECT_TRUE(j["kkt"].is_object());
}

}  // namespace
}  // namespace copos

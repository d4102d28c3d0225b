#include <gtest/gtest.h>

#include <string>

#include "copos/errors.hpp"
#include "copos/graph.hpp"
#include "copos/graph_catalog.hpp"
#include "oracles.hpp"

namespace copos {
namespace {

TEST(VertexSet, MembersAndAlgebra) {
  VertexSet s{0, 3, 5};
  EXPECT_EQ(s.size(), 3);
  EXPECT_EQ(s.members(), (std::vector<Vertex>{0, 3, 5}));
  EXPECT_EQ(s.first(), 0);
  EXPECT_TRUE(s.contains(3));
  EXPECT_FALSE(s.contains(4));
  EXPECT_EQ((s & VertexSet{3, 4}), VertexSet{3});
  EXPECT_EQ(s.minus(VertexSet{0}), (VertexSet{3, 5}));
  EXPECT_TRUE(VertexSet{5}.is_subset_of(s));
  EXPECT_EQ(VertexSet::range(64).size(), 64);
}

TEST(Graph, EdgesAreNormalizedAndDeduplicated) {
  Graph g(4, {{2, 1}, {1, 2}, {0, 3}});
  EXPECT_EQ(g.num_edges(), 2);
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 3}, {1, 2}}));
  EXPECT_TRUE(g.has_edge(2, 1));
  EXPECT_FALSE(g.has_edge(0, 1));
  EXPECT_FALSE(g.has_edge(0, 9));
}

TEST(Graph, RejectsSelfLoopsAndBadSizes) {
  EXPECT_THROW(Graph(3, {{1, 1}}), std::invalid_argument);
  EXPECT_THROW(Graph(3, {{0, 3}}), std::invalid_argument);
  EXPECT_THROW(Graph(65), std::invalid_argument);
  EXPECT_THROW(Graph(-1), std::invalid_argument);
  EXPECT_NO_THROW(Graph(64));
}

TEST(Graph, StableAndCliquePredicates) {
  Graph c5 = catalog::cycle(5);
  EXPECT_TRUE(c5.is_stable(VertexSet{0, 2}));
  EXPECT_FALSE(c5.is_stable(VertexSet{0, 1}));
  EXPECT_TRUE(c5.is_clique(VertexSet{0, 1}));
  EXPECT_FALSE(c5.is_clique(VertexSet{0, 2}));
  EXPECT_TRUE(c5.is_clique(VertexSet{}));
}

TEST(Graph, MatricesMirrorAdjacency) {
  Graph p3 = catalog::path(3);
  SymMatrix m = motzkin_matrix(p3, 0.25);
  EXPECT_EQ(m(0, 0), 1.0);
  EXPECT_EQ(m(0, 1), 1.25);
  EXPECT_EQ(m(1, 0), 1.25);
  EXPECT_EQ(m(0, 2), 0.0);
  EXPECT_EQ(adjacency_matrix(p3).dense().sum(), 4.0);
  Eigen::MatrixXd skew(2, 2);
  skew << 1, 2, 3, 1;
  EXPECT_THROW(SymMatrix::from_dense(skew), std::invalid_argument);
  EXPECT_THROW(SymMatrix::from_dense(Eigen::MatrixXd::Zero(2, 3)), std::invalid_argument);
}

TEST(GraphOps, DeleteInduceComplementUnion) {
  Graph c5 = catalog::cycle(5);
  Graph p5 = delete_edge(c5, Edge(0, 4));
  EXPECT_EQ(p5.num_edges(), 4);
  EXPECT_THROW(delete_edge(c5, Edge(0, 2)), std::invalid_argument);

  Graph sub = induced_subgraph(c5, VertexSet{1, 2, 3});
  EXPECT_EQ(sub, catalog::path(3));

  EXPECT_EQ(complement(complement(c5)), c5);
  EXPECT_EQ(complement(c5).num_edges(), 5);

  Graph u = disjoint_union(catalog::complete(3), catalog::complete(3));
  EXPECT_EQ(u, catalog::two_triangles());
  EXPECT_EQ(add_isolated(c5, 1), catalog::c5_with_isolated());
  EXPECT_THROW(add_isolated(c5, -1), std::invalid_argument);

  EXPECT_EQ(neighbors_in_set(c5, VertexSet{0, 2}, 1), (VertexSet{0, 2}));
  EXPECT_THROW(neighbors_in_set(c5, VertexSet{0, 2}, 0), std::invalid_argument);
}

TEST(Dimacs, ParsesCommentsAndBothHeaders) {
  Graph g = parse_dimacs("c triangle\np edge 3 3\ne 1 2\ne 2 3\n\ne 1 3\n");
  EXPECT_EQ(g, catalog::complete(3));
  EXPECT_EQ(parse_dimacs("p col 2 1\ne 1 2"), catalog::complete(2));
}

TEST(Dimacs, RoundTripOverAllSmallGraphs) {
  for (const Graph& g : testing::nonisomorphic_graphs_up_to(5)) {
    EXPECT_EQ(parse_dimacs(emit_dimacs(g)), g);
    EXPECT_EQ(parse_graph_json(emit_graph_json(g)), g);
  }
}

int error_line(const std::string& text) {
  try {
    parse_dimacs(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

TEST(Dimacs, ErrorsNameTheLine) {
  EXPECT_EQ(error_line("p edge 3 1\ne 1 4\n"), 2);
  EXPECT_EQ(error_line("p edge 3 1\ne 2 2\n"), 2);
  EXPECT_EQ(error_line("e 1 2\n"), 1);
  EXPECT_EQ(error_line("c x\np edge 3 1\np edge 3 1\n"), 3);
  EXPECT_EQ(error_line("p edge three 1\n"), 1);
  EXPECT_EQ(error_line("p edge 3 1\nx 1 2\n"), 2);
  EXPECT_EQ(error_line("p edge 3 1\ne 1\n"), 2);
  EXPECT_EQ(error_line("p edge 99 0\n"), 1);
  EXPECT_EQ(error_line("c nothing\n"), 0);
}

TEST(GraphJson, ParsesAndValidates) {
  EXPECT_EQ(parse_graph(R"({"n": 3, "edges": [[1,2],[2,3]]})"), catalog::path(3));
  EXPECT_EQ(parse_graph(R"(  {"n": 2})"), catalog::empty(2));
  EXPECT_THROW(parse_graph_json("{"), ParseError);
  EXPECT_THROW(parse_graph_json(R"({"edges": []})"), ParseError);
  EXPECT_THROW(parse_graph_json(R"({"n": 2, "edges": [[1,3]]})"), ParseError);
  EXPECT_THROW(parse_graph_json(R"({"n": 2, "edges": [[1,1]]})"), ParseError);
  EXPECT_THROW(parse_graph_json(R"({"n": 2, "edges": [[1]]})"), ParseError);
}

TEST(Catalog, ShippedDataFilesMatchTheCatalog) {
  const std::string dir = COPOS_DATA_DIR;
  const std::pair<const char*, Graph> expected[] = {
      {"c5", catalog::cycle(5)},
      {"c6", catalog::cycle(6)},
      {"p4", catalog::path(4)},
      {"k4", catalog::complete(4)},
      {"k4bar", catalog::empty(4)},
      {"petersen", catalog::petersen()},
      {"icosahedron_complement", catalog::icosahedron_complement()},
      {"ex13_g", catalog::c5_with_pendant()},
      {"ex13_h1", catalog::c5_with_isolated()},
      {"ex13_h2", catalog::three_disjoint_edges()},
      {"ex48", catalog::sparse_five()},
      {"two_triangles", catalog::two_triangles()},
      {"k_2_3_4", catalog::complete_multipartite({2, 3, 4})},
  };
  for (const auto& [name, g] : expected) {
    EXPECT_EQ(load_graph(dir + "/" + name + ".col"), g) << name;
  }
  EXPECT_THROW(load_graph(dir + "/missing.col"), std::runtime_error);
}

TEST(Catalog, StructuralFacts) {
  Graph pet = catalog::petersen();
  EXPECT_EQ(pet.num_edges(), 15);
  for (Vertex v = 0; v < 10; ++v) EXPECT_EQ(pet.degree(v), 3);
  Graph ico = catalog::icosahedron();
  EXPECT_EQ(ico.num_edges(), 30);
  for (Vertex v = 0; v < 12; ++v) EXPECT_EQ(ico.degree(v), 5);
  EXPECT_EQ(catalog::icosahedron_complement().num_edges(), 36);
  EXPECT_EQ(catalog::complete_multipartite({2, 3, 4}).num_edges(), 2 * 3 + 2 * 4 + 3 * 4);
  Graph g;
  EXPECT_TRUE(catalog::by_name("petersen", g));
  EXPECT_EQ(g, pet);
  EXPECT_FALSE(catalog::by_name("no-such-graph", g));
  for (const std::string& name : catalog::names()) EXPECT_TRUE(catalog::by_name(name, g)) << name;
}

TEST(Oracles, IsomorphismClassCountsMatchTheKnownSequence) {
  const std::size_t known[] = {1, 1, 2, 4, 11, 34, 156};
  for (int n = 0; n <= 6; ++n) EXPECT_EQ(testing::nonisomorphic_graphs(n).size(), known[n]) << n;
}

}  // namespace
}  // namespace copos

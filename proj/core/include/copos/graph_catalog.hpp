#pragma once

#include <string>
#include <vector>

#include "copos/graph.hpp"

namespace copos::catalog {

Graph cycle(int n);
Graph path(int n);
Graph complete(int n);
Graph empty(int n);
/// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i ~ i+5.
Graph petersen();
/// Vertex 0 on top, upper ring 1..5, lower ring 6..10, vertex 11 at the bottom.
Graph icosahedron();
Graph icosahedron_complement();
/// Parts of the given sizes, consecutive labels.
Graph complete_multipartite(const std::vector<int>& part_sizes);
/// C5 plus a pendant vertex 5 attached to vertex 0.
Graph c5_with_pendant();
/// C5 plus one isolated vertex.
Graph c5_with_isolated();
/// Perfect matching on 6 vertices: {0,1}, {2,3}, {4,5}.
Graph three_disjoint_edges();
/// Five vertices, edges {0,2}, {1,3}, {1,4}.
Graph sparse_five();
Graph two_triangles();

/// Looks up a graph by name (e.g. "c5", "petersen", "k_2_3_4"). Returns false
/// when the name is unknown.
bool by_name(const std::string& name, Graph& out);
std::vector<std::string> names();

}  // namespace copos::catalog

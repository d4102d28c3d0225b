#include "copos/graph_catalog.hpp"

#include <stdexcept>

namespace copos::catalog {

Graph cycle(int n) {
  if (n < 3) throw std::invalid_argument("a cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, edges);
}

Graph path(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, edges);
}

Graph complete(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return Graph(n, edges);
}

Graph empty(int n) { return Graph(n); }

Graph petersen() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
    edges.emplace_back(i, i + 5);
  }
  return Graph(10, edges);
}

Graph icosahedron() {
  std::vector<Edge> edges;
  for (int k = 0; k < 5; ++k) {
    const int up = 1 + k;
    const int low = 6 + k;
    edges.emplace_back(0, up);
    edges.emplace_back(up, 1 + (k + 1) % 5);
    edges.emplace_back(low, 6 + (k + 1) % 5);
    edges.emplace_back(11, low);
    edges.emplace_back(up, low);
    edges.emplace_back(up, 6 + (k + 1) % 5);
  }
  return Graph(12, edges);
}

Graph icosahedron_complement() { return complement(icosahedron()); }

Graph complete_multipartite(const std::vector<int>& part_sizes) {
  std::vector<int> part;
  for (std::size_t p = 0; p < part_sizes.size(); ++p) {
    for (int k = 0; k < part_sizes[p]; ++k) part.push_back(static_cast<int>(p));
  }
  const int n = static_cast<int>(part.size());
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (part[i] != part[j]) edges.emplace_back(i, j);
    }
  }
  return Graph(n, edges);
}

Graph c5_with_pendant() {
  std::vector<Edge> edges = cycle(5).edges();
  edges.emplace_back(0, 5);
  return Graph(6, edges);
}

Graph c5_with_isolated() { return add_isolated(cycle(5), 1); }

Graph three_disjoint_edges() { return Graph(6, {{0, 1}, {2, 3}, {4, 5}}); }

Graph sparse_five() { return Graph(5, {{0, 2}, {1, 3}, {1, 4}}); }

Graph two_triangles() { return disjoint_union(complete(3), complete(3)); }

namespace {

struct Entry {
  const char* name;
  Graph (*make)();
};

const Entry kEntries[] = {
    {"c5", [] { return cycle(5); }},
    {"c6", [] { return cycle(6); }},
    {"p4", [] { return path(4); }},
    {"k4", [] { return complete(4); }},
    {"k4bar", [] { return empty(4); }},
    {"petersen", petersen},
    {"icosahedron", icosahedron},
    {"icosahedron_complement", icosahedron_complement},
    {"c5_pendant", c5_with_pendant},
    {"c5_isolated", c5_with_isolated},
    {"matching3", three_disjoint_edges},
    {"sparse5", sparse_five},
    {"two_triangles", two_triangles},
    {"k_2_3_4", [] { return complete_multipartite({2, 3, 4}); }},
};

}  // namespace

bool by_name(const std::string& name, Graph& out) {
  for (const Entry& e : kEntries) {
    if (name == e.name) {
      out = e.make();
      return true;
    }
  }
  return false;
}

std::vector<std::string> names() {
  std::vector<std::string> out;
  for (const Entry& e : kEntries) out.emplace_back(e.name);
  return out;
}

}  // namespace copos::catalog

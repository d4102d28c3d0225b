#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace copos {

/// Vertices are 0-based inside the library. DIMACS and JSON use 1-based labels;
/// the conversion happens only in the parse/emit functions below.
using Vertex = int;

/// Unordered vertex pair, always stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Subset of at most 64 vertices stored as a bit mask.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  VertexSet(std::initializer_list<Vertex> members) {
    for (Vertex v : members) insert(v);
  }

  static VertexSet range(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static VertexSet from_members(const std::vector<Vertex>& members) {
    VertexSet s;
    for (Vertex v : members) s.insert(v);
    return s;
  }

  bool contains(Vertex v) const { return (bits_ >> v) & 1u; }
  void insert(Vertex v) { bits_ |= std::uint64_t{1} << v; }
  void erase(Vertex v) { bits_ &= ~(std::uint64_t{1} << v); }
  int size() const { return std::popcount(bits_); }
  bool empty() const { return bits_ == 0; }
  std::uint64_t bits() const { return bits_; }
  /// Lowest member; undefined on an empty set.
  Vertex first() const { return std::countr_zero(bits_); }

  std::vector<Vertex> members() const {
    std::vector<Vertex> out;
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  VertexSet minus(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  bool is_subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }

  friend bool operator==(VertexSet, VertexSet) = default;
  friend auto operator<=>(VertexSet, VertexSet) = default;

 private:
  std::uint64_t bits_ = 0;
};

/// Simple undirected graph with dense bit-mask adjacency. Immutable once built;
/// every edit returns a new graph.
class Graph {
 public:
  static constexpr int kMaxVertices = 64;

  Graph() = default;
  explicit Graph(int n);
  /// Throws std::invalid_argument on self-loops or out-of-range endpoints.
  /// Duplicate edges are merged.
  Graph(int n, const std::vector<Edge>& edges);

  int num_vertices() const { return n_; }
  int num_edges() const;
  bool has_edge(Vertex a, Vertex b) const;
  bool has_edge(Edge e) const { return has_edge(e.u, e.v); }
  VertexSet neighbors(Vertex v) const { return VertexSet(adj_[v]); }
  int degree(Vertex v) const { return neighbors(v).size(); }
  VertexSet vertices() const { return VertexSet::range(n_); }
  /// Edges in lexicographic order.
  std::vector<Edge> edges() const;

  bool is_stable(VertexSet s) const;
  bool is_clique(VertexSet s) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_ = 0;
  std::vector<std::uint64_t> adj_;
};

/// Dense symmetric matrix. Writes mirror across the diagonal, so the two
/// triangles are bit-identical at all times.
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(int n) : m_(Eigen::MatrixXd::Zero(n, n)) {}
  /// Throws std::invalid_argument unless `m` is square and exactly symmetric.
  static SymMatrix from_dense(const Eigen::MatrixXd& m);
  static SymMatrix identity(int n);

  int dim() const { return static_cast<int>(m_.rows()); }
  double operator()(int i, int j) const { return m_(i, j); }
  void set(int i, int j, double value) {
    m_(i, j) = value;
    m_(j, i) = value;
  }
  const Eigen::MatrixXd& dense() const { return m_; }
  double min_entry() const { return m_.minCoeff(); }

  friend bool operator==(const SymMatrix& a, const SymMatrix& b) { return a.m_ == b.m_; }

 private:
  Eigen::MatrixXd m_;
};

SymMatrix adjacency_matrix(const Graph& g);
/// I + (1 + eps) A_G; eps = 0 gives the Motzkin-Straus matrix.
SymMatrix motzkin_matrix(const Graph& g, double eps = 0.0);

/// Throws std::invalid_argument when `e` is not an edge.
Graph delete_edge(const Graph& g, Edge e);
/// Vertices of `u` are relabeled 0..|u|-1 in increasing order.
Graph induced_subgraph(const Graph& g, VertexSet u);
Graph complement(const Graph& g);
/// Vertices of `b` are shifted by a.num_vertices().
Graph disjoint_union(const Graph& a, const Graph& b);
Graph add_isolated(const Graph& g, int count);
/// N_S(j). Throws std::invalid_argument when j is in S.
VertexSet neighbors_in_set(const Graph& g, VertexSet s, Vertex j);

/// Parses the DIMACS "p edge n m" / "e i j" format. Throws ParseError naming the
/// offending line.
Graph parse_dimacs(std::string_view text);
/// Canonical DIMACS text: header then edges in lexicographic order.
std::string emit_dimacs(const Graph& g);
/// {"n": int, "edges": [[i, j], ...]} with 1-based labels.
Graph parse_graph_json(std::string_view text);
std::string emit_graph_json(const Graph& g);
/// Picks JSON when the first non-blank character is '{', DIMACS otherwise.
Graph parse_graph(std::string_view text);
Graph load_graph(const std::string& path);

}  // namespace copos

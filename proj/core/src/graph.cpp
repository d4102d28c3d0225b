#include "copos/graph.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "copos/errors.hpp"

namespace copos {

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices) {
    throw std::invalid_argument("vertex count must be in 0.." + std::to_string(kMaxVertices));
  }
  adj_.assign(static_cast<std::size_t>(n), 0);
}

Graph::Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v >= n) throw std::invalid_argument("edge endpoint out of range");
    if (e.u == e.v) throw std::invalid_argument("self-loop on vertex " + std::to_string(e.u + 1));
    adj_[e.u] |= std::uint64_t{1} << e.v;
    adj_[e.v] |= std::uint64_t{1} << e.u;
  }
}

int Graph::num_edges() const {
  int twice = 0;
  for (std::uint64_t row : adj_) twice += std::popcount(row);
  return twice / 2;
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (a < 0 || b < 0 || a >= n_ || b >= n_) return false;
  return (adj_[a] >> b) & 1u;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : VertexSet(adj_[u] >> (u + 1) << (u + 1)).members()) out.emplace_back(u, v);
  }
  return out;
}

bool Graph::is_stable(VertexSet s) const {
  for (Vertex v : s.members()) {
    if (!(neighbors(v) & s).empty()) return false;
  }
  return true;
}

bool Graph::is_clique(VertexSet s) const {
  for (Vertex v : s.members()) {
    VertexSet others = s;
    others.erase(v);
    if (!others.is_subset_of(neighbors(v))) return false;
  }
  return true;
}

SymMatrix SymMatrix::from_dense(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("matrix is not square");
  if (m != m.transpose()) throw std::invalid_argument("matrix is not exactly symmetric");
  SymMatrix out;
  out.m_ = m;
  return out;
}

SymMatrix SymMatrix::identity(int n) {
  SymMatrix out(n);
  for (int i = 0; i < n; ++i) out.set(i, i, 1.0);
  return out;
}

SymMatrix adjacency_matrix(const Graph& g) {
  SymMatrix a(g.num_vertices());
  for (const Edge& e : g.edges()) a.set(e.u, e.v, 1.0);
  return a;
}

SymMatrix motzkin_matrix(const Graph& g, double eps) {
  SymMatrix m = SymMatrix::identity(g.num_vertices());
  for (const Edge& e : g.edges()) m.set(e.u, e.v, 1.0 + eps);
  return m;
}

Graph delete_edge(const Graph& g, Edge e) {
  if (!g.has_edge(e)) {
    throw std::invalid_argument("{" + std::to_string(e.u + 1) + "," + std::to_string(e.v + 1) +
                                "} is not an edge");
  }
  std::vector<Edge> kept;
  for (const Edge& f : g.edges()) {
    if (f != e) kept.push_back(f);
  }
  return Graph(g.num_vertices(), kept);
}

Graph induced_subgraph(const Graph& g, VertexSet u) {
  std::vector<Vertex> members = u.members();
  std::vector<int> label(static_cast<std::size_t>(g.num_vertices()), -1);
  for (std::size_t i = 0; i < members.size(); ++i) label[members[i]] = static_cast<int>(i);
  std::vector<Edge> kept;
  for (const Edge& e : g.edges()) {
    if (u.contains(e.u) && u.contains(e.v)) kept.emplace_back(label[e.u], label[e.v]);
  }
  return Graph(static_cast<int>(members.size()), kept);
}

Graph complement(const Graph& g) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    for (Vertex v = u + 1; v < g.num_vertices(); ++v) {
      if (!g.has_edge(u, v)) edges.emplace_back(u, v);
    }
  }
  return Graph(g.num_vertices(), edges);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  const int offset = a.num_vertices();
  std::vector<Edge> edges = a.edges();
  for (const Edge& e : b.edges()) edges.emplace_back(e.u + offset, e.v + offset);
  return Graph(offset + b.num_vertices(), edges);
}

Graph add_isolated(const Graph& g, int count) {
  if (count < 0) throw std::invalid_argument("negative isolated vertex count");
  return Graph(g.num_vertices() + count, g.edges());
}

VertexSet neighbors_in_set(const Graph& g, VertexSet s, Vertex j) {
  if (s.contains(j)) throw std::invalid_argument("vertex belongs to the set");
  return g.neighbors(j) & s;
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

long long parse_int(std::string_view token, int line_no) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError("expected an integer, got '" + std::string(token) + "'", line_no);
  }
  return value;
}

}  // namespace

Graph parse_dimacs(std::string_view text) {
  int n = -1;
  std::vector<Edge> edges;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    auto tokens = split_ws(line);
    if (tokens.empty() || tokens[0] == "c") continue;
    if (tokens[0] == "p") {
      if (n >= 0) throw ParseError("duplicate problem line", line_no);
      if (tokens.size() != 4 || (tokens[1] != "edge" && tokens[1] != "col")) {
        throw ParseError("malformed header, expected 'p edge <n> <m>'", line_no);
      }
      long long nv = parse_int(tokens[2], line_no);
      parse_int(tokens[3], line_no);
      if (nv < 0 || nv > Graph::kMaxVertices) {
        throw ParseError("vertex count must be in 0.." + std::to_string(Graph::kMaxVertices),
                         line_no);
      }
      n = static_cast<int>(nv);
    } else if (tokens[0] == "e") {
      if (n < 0) throw ParseError("edge line before the problem line", line_no);
      if (tokens.size() != 3) throw ParseError("malformed edge line", line_no);
      long long a = parse_int(tokens[1], line_no);
      long long b = parse_int(tokens[2], line_no);
      if (a < 1 || a > n || b < 1 || b > n) {
        throw ParseError("vertex index out of range 1.." + std::to_string(n), line_no);
      }
      if (a == b) throw ParseError("self-loop on vertex " + std::to_string(a), line_no);
      edges.emplace_back(static_cast<Vertex>(a - 1), static_cast<Vertex>(b - 1));
    } else {
      throw ParseError("unknown line type '" + std::string(tokens[0]) + "'", line_no);
    }
  }
  if (n < 0) throw ParseError("missing 'p edge' header", 0);
  return Graph(n, edges);
}

std::string emit_dimacs(const Graph& g) {
  std::ostringstream out;
  auto edges = g.edges();
  out << "p edge " << g.num_vertices() << ' ' << edges.size() << '\n';
  for (const Edge& e : edges) out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
  return out.str();
}

Graph parse_graph_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& err) {
    throw ParseError(std::string("invalid JSON: ") + err.what(), 0);
  }
  if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_integer()) {
    throw ParseError("graph JSON needs an integer field \"n\"", 0);
  }
  const long long n = doc["n"].get<long long>();
  if (n < 0 || n > Graph::kMaxVertices) {
    throw ParseError("vertex count must be in 0.." + std::to_string(Graph::kMaxVertices), 0);
  }
  std::vector<Edge> edges;
  if (doc.contains("edges")) {
    for (const auto& pair : doc["edges"]) {
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
          !pair[1].is_number_integer()) {
        throw ParseError("each edge must be a pair of integers", 0);
      }
      const long long a = pair[0].get<long long>();
      const long long b = pair[1].get<long long>();
      if (a < 1 || a > n || b < 1 || b > n) throw ParseError("vertex index out of range", 0);
      if (a == b) throw ParseError("self-loop on vertex " + std::to_string(a), 0);
      edges.emplace_back(static_cast<Vertex>(a - 1), static_cast<Vertex>(b - 1));
    }
  }
  return Graph(static_cast<int>(n), edges);
}

std::string emit_graph_json(const Graph& g) {
  nlohmann::json doc;
  doc["n"] = g.num_vertices();
  doc["edges"] = nlohmann::json::array();
  for (const Edge& e : g.edges()) doc["edges"].push_back({e.u + 1, e.v + 1});
  return doc.dump();
}

Graph parse_graph(std::string_view text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return parse_graph_json(text);
  return parse_dimacs(text);
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_graph(buffer.str());
}

}  // namespace copos

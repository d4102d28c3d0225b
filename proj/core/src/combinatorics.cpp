#include "copos/combinatorics.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

#include "copos/errors.hpp"

namespace copos {

std::string to_string(CriticalityClass c) {
  switch (c) {
    case CriticalityClass::Critical: return "Critical";
    case CriticalityClass::Acritical: return "Acritical";
    case CriticalityClass::Mixed: return "Mixed";
    case CriticalityClass::EdgelessTrivial: return "EdgelessTrivial";
  }
  return "?";
}

namespace {

int greedy_clique_cover(const Graph& g, VertexSet p) {
  int count = 0;
  while (!p.empty()) {
    Vertex v = p.first();
    VertexSet candidates = g.neighbors(v) & p;
    p.erase(v);
    while (!candidates.empty()) {
      Vertex w = candidates.first();
      p.erase(w);
      candidates = candidates & g.neighbors(w);
    }
    ++count;
  }
  return count;
}

class MaxStableSearch {
 public:
  explicit MaxStableSearch(const Graph& g) : g_(g) {}

  VertexSet run(VertexSet candidates) {
    best_size_ = 0;
    best_ = VertexSet();
    expand(VertexSet(), candidates);
    return best_;
  }

 private:
  void expand(VertexSet chosen, VertexSet p) {
    const int size = chosen.size();
    if (p.empty()) {
      if (size > best_size_) {
        best_size_ = size;
        best_ = chosen;
      }
      return;
    }
    if (size + greedy_clique_cover(g_, p) <= best_size_) return;
    Vertex pivot = -1;
    int pivot_degree = -1;
    for (Vertex v : p.members()) {
      const int d = (g_.neighbors(v) & p).size();
      if (d > pivot_degree) {
        pivot_degree = d;
        pivot = v;
      }
    }
    if (pivot_degree == 0) {
      expand(chosen | p, VertexSet());
      return;
    }
    VertexSet with = chosen;
    with.insert(pivot);
    VertexSet rest = p.minus(g_.neighbors(pivot));
    rest.erase(pivot);
    expand(with, rest);
    VertexSet without = p;
    without.erase(pivot);
    expand(chosen, without);
  }

  const Graph& g_;
  int best_size_ = 0;
  VertexSet best_;
};

void check_cap(const Graph& g, const EnumerationCaps& caps) {
  if (g.num_vertices() > caps.max_set_vertices) {
    throw RefusalError("graph has " + std::to_string(g.num_vertices()) +
                       " vertices; enumeration cap is " + std::to_string(caps.max_set_vertices));
  }
}

}  // namespace

int stability_number(const Graph& g) { return stability_number(g, g.vertices()); }

int stability_number(const Graph& g, VertexSet within) {
  return MaxStableSearch(g).run(within).size();
}

VertexSet maximum_stable_set(const Graph& g) { return MaxStableSearch(g).run(g.vertices()); }

std::vector<VertexSet> maximal_stable_sets(const Graph& g, const EnumerationCaps& caps) {
  check_cap(g, caps);
  // Bron-Kerbosch with pivoting on the complement: maximal cliques of the
  // complement are the maximal stable sets of g.
  const VertexSet all = g.vertices();
  auto non_neighbors = [&](Vertex v) {
    VertexSet s = all.minus(g.neighbors(v));
    s.erase(v);
    return s;
  };
  std::vector<VertexSet> out;
  std::function<void(VertexSet, VertexSet, VertexSet)> bk = [&](VertexSet r, VertexSet p,
                                                                VertexSet x) {
    if (p.empty() && x.empty()) {
      out.push_back(r);
      return;
    }
    Vertex pivot = -1;
    int best = -1;
    for (Vertex u : (p | x).members()) {
      const int c = (p & non_neighbors(u)).size();
      if (c > best) {
        best = c;
        pivot = u;
      }
    }
    for (Vertex v : p.minus(non_neighbors(pivot)).members()) {
      VertexSet rv = r;
      rv.insert(v);
      bk(rv, p & non_neighbors(v), x & non_neighbors(v));
      p.erase(v);
      x.insert(v);
    }
  };
  if (g.num_vertices() == 0) return {VertexSet()};
  bk(VertexSet(), all, VertexSet());
  std::sort(out.begin(), out.end());
  return out;
}

StableSetCatalog maximum_stable_sets(const Graph& g, const EnumerationCaps& caps,
                                     bool include_maximal) {
  std::vector<VertexSet> maximal = maximal_stable_sets(g, caps);
  StableSetCatalog cat;
  for (VertexSet s : maximal) cat.alpha = std::max(cat.alpha, s.size());
  for (VertexSet s : maximal) {
    if (s.size() == cat.alpha) cat.maximum_sets.push_back(s);
  }
  if (include_maximal) cat.maximal_sets = std::move(maximal);
  return cat;
}

bool is_critical_edge(const Graph& g, Edge e) {
  if (!g.has_edge(e)) throw std::invalid_argument("not an edge of the graph");
  return stability_number(delete_edge(g, e)) == stability_number(g) + 1;
}

EdgeCriticality critical_edges(const Graph& g) {
  EdgeCriticality out;
  const int alpha = stability_number(g);
  for (const Edge& e : g.edges()) {
    if (stability_number(delete_edge(g, e)) == alpha + 1) {
      out.critical.push_back(e);
    } else {
      out.noncritical.push_back(e);
    }
  }
  return out;
}

CriticalityClass criticality_class(const Graph& g) {
  if (g.num_edges() == 0) return CriticalityClass::EdgelessTrivial;
  EdgeCriticality c = critical_edges(g);
  if (c.noncritical.empty()) return CriticalityClass::Critical;
  if (c.critical.empty()) return CriticalityClass::Acritical;
  return CriticalityClass::Mixed;
}

int clique_cover_number(const Graph& g, const EnumerationCaps& caps) {
  check_cap(g, caps);
  const int n = g.num_vertices();
  if (n == 0) return 0;
  std::vector<VertexSet> cliques;
  std::function<bool(Vertex, int)> place = [&](Vertex v, int k) -> bool {
    if (v == n) return true;
    for (std::size_t c = 0; c < cliques.size(); ++c) {
      if (cliques[c].is_subset_of(g.neighbors(v))) {
        cliques[c].insert(v);
        if (place(v + 1, k)) return true;
        cliques[c].erase(v);
      }
    }
    if (static_cast<int>(cliques.size()) < k) {
      cliques.push_back(VertexSet{v});
      if (place(v + 1, k)) return true;
      cliques.pop_back();
    }
    return false;
  };
  for (int k = std::max(1, stability_number(g));; ++k) {
    cliques.clear();
    if (place(0, k)) return k;
  }
}

int CriticalEdgeReduction::critical_answers() const {
  return static_cast<int>(
      std::count_if(trace.begin(), trace.end(), [](const CriticalEdgeQuery& q) { return q.critical; }));
}

CriticalEdgeReduction alpha_via_critical_edge_queries(const Graph& g) {
  CriticalEdgeReduction out;
  Graph current = g;
  int alpha = stability_number(g);
  for (const Edge& e : g.edges()) {
    Graph next = delete_edge(current, e);
    const int next_alpha = stability_number(next);
    const bool critical = next_alpha == alpha + 1;
    out.trace.push_back({e, critical});
    current = std::move(next);
    alpha = next_alpha;
  }
  out.alpha = g.num_vertices() - out.critical_answers();
  return out;
}

std::int64_t beta_star(int alpha, int r) {
  if (alpha < 1 || r < 0) throw std::invalid_argument("beta_star needs alpha >= 1 and r >= 0");
  const std::int64_t d = r + 2;
  const std::int64_t k = std::min<std::int64_t>(alpha, d);
  const std::int64_t q = d / k;
  const std::int64_t s = d - q * k;
  return s * (q + 1) * (q + 1) + (k - s) * q * q;
}

BetaStarEnumeration beta_star_enumerate(const Graph& g, int r, double eps,
                                        const EnumerationCaps& caps) {
  if (r < 0) throw std::invalid_argument("order must be nonnegative");
  if (eps < 0) throw std::invalid_argument("epsilon must be nonnegative");
  const int n = g.num_vertices();
  if (n == 0) throw std::invalid_argument("graph has no vertices");
  const std::int64_t count = count_exponents(n, r + 2);
  if (count > caps.max_exponent_vectors) {
    throw RefusalError("|I(" + std::to_string(n) + "," + std::to_string(r + 2) + ")| = " +
                       std::to_string(count) + " exceeds the cap " +
                       std::to_string(caps.max_exponent_vectors));
  }
  const std::vector<Edge> edges = g.edges();
  BetaStarEnumeration out;
  double best = std::numeric_limits<double>::infinity();
  for_each_exponent(n, r + 2, [&](const Exponent& b) {
    std::int64_t squares = 0;
    for (int v : b) squares += static_cast<std::int64_t>(v) * v;
    std::int64_t cross = 0;
    for (const Edge& e : edges) cross += static_cast<std::int64_t>(b[e.u]) * b[e.v];
    // beta^T A beta counts each edge twice.
    const double value = static_cast<double>(squares) + (1.0 + eps) * 2.0 * static_cast<double>(cross);
    ++out.visited;
    if (value < best) {
      best = value;
      out.argmin = b;
    }
    return true;
  });
  if (best != std::floor(best)) {
    throw std::logic_error("enumerated minimum " + std::to_string(best) + " is not an integer");
  }
  out.value = static_cast<std::int64_t>(best);
  return out;
}

}  // namespace copos

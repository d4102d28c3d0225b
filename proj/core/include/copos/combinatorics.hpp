#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "copos/graph.hpp"
#include "copos/polynomial.hpp"

namespace copos {

struct EnumerationCaps {
  /// Largest vertex count for stable-set catalogs and clique covers.
  int max_set_vertices = 30;
  /// Largest |I(n, d)| enumerated by the exponent oracles.
  std::int64_t max_exponent_vectors = 2'000'000;
};

struct StableSetCatalog {
  int alpha = 0;
  std::vector<VertexSet> maximum_sets;
  std::optional<std::vector<VertexSet>> maximal_sets;
};

struct EdgeCriticality {
  std::vector<Edge> critical;
  std::vector<Edge> noncritical;
};

enum class CriticalityClass { Critical, Acritical, Mixed, EdgelessTrivial };
std::string to_string(CriticalityClass c);

/// Exact alpha(G) by branch and bound. Branches on a maximum-degree vertex of the
/// candidate set (lowest index on ties) and prunes with a greedy clique cover.
int stability_number(const Graph& g);
/// Same search restricted to the candidate set `within`.
int stability_number(const Graph& g, VertexSet within);
/// One maximum stable set, deterministic.
VertexSet maximum_stable_set(const Graph& g);

/// Inclusion-maximal stable sets sorted by bit pattern. Refuses above the cap.
std::vector<VertexSet> maximal_stable_sets(const Graph& g, const EnumerationCaps& caps = {});
StableSetCatalog maximum_stable_sets(const Graph& g, const EnumerationCaps& caps = {},
                                     bool include_maximal = false);

/// Throws std::invalid_argument when `e` is not an edge.
bool is_critical_edge(const Graph& g, Edge e);
EdgeCriticality critical_edges(const Graph& g);
CriticalityClass criticality_class(const Graph& g);

/// Smallest number of cliques covering V (chromatic number of the complement).
int clique_cover_number(const Graph& g, const EnumerationCaps& caps = {});

struct CriticalEdgeQuery {
  Edge edge;
  bool critical = false;
};

struct CriticalEdgeReduction {
  int alpha = 0;
  std::vector<CriticalEdgeQuery> trace;
  int critical_answers() const;
};

/// Deletes the edges one by one in lexicographic order, asking at each step
/// whether the next edge is critical in the current graph. alpha = n - #yes.
CriticalEdgeReduction alpha_via_critical_edge_queries(const Graph& g);

/// Closed form for min beta^T (I + (1+eps) A_G) beta over beta in I(n, r+2):
/// the r+2 units split as evenly as possible over min(alpha, r+2) stable vertices.
std::int64_t beta_star(int alpha, int r);

struct BetaStarEnumeration {
  std::int64_t value = 0;
  /// First minimizer in grevlex-descending order.
  Exponent argmin;
  std::int64_t visited = 0;
};

/// Exhaustive minimum of sum beta_i^2 + (1+eps) beta^T A_G beta over I(n, r+2).
/// Throws std::logic_error if the minimum is not an integer (it always is for
/// eps >= 0) and RefusalError above the cap.
BetaStarEnumeration beta_star_enumerate(const Graph& g, int r, double eps,
                                        const EnumerationCaps& caps = {});

}  // namespace copos

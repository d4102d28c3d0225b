#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "copos/combinatorics.hpp"
#include "copos/graph.hpp"
#include "copos/lp_hierarchy.hpp"
#include "copos/motzkin.hpp"
#include "copos/sos.hpp"

namespace copos {

/// Version tag written into every top-level document.
inline constexpr const char* kSchemaTag = "copos-stab/1";

struct JsonOptions {
  /// Wall-clock times break byte-for-byte reproducibility, so they are opt-in.
  bool include_timing = false;
};

nlohmann::json to_json(const Rational& q);
nlohmann::json to_json(VertexSet s);
nlohmann::json to_json(const Edge& e);
nlohmann::json to_json(const Residuals& r);
nlohmann::json to_json(const BoundResult& b, const JsonOptions& opts = {});
nlohmann::json to_json(const RankResult& r, const JsonOptions& opts = {});
nlohmann::json to_json(const ChainReport& c, const JsonOptions& opts = {});
nlohmann::json to_json(const KktCertificate& k);
nlohmann::json to_json(const MinimizerReport& m);
nlohmann::json to_json(const EdgeCriticality& c);

/// n, m, alpha, clique cover number and criticality class.
nlohmann::json graph_summary(const Graph& g, const EnumerationCaps& caps = {});

/// Rounds to 12 significant digits so repeated runs print identical text.
double stable_number(double v);

}  // namespace copos

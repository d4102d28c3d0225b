#include "copos/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "copos/errors.hpp"

namespace copos {

using nlohmann::json;

double stable_number(double v) {
  if (!std::isfinite(v) || v == 0.0) return v;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return std::strtod(buf, nullptr);
}

json to_json(const Rational& q) { return json{{"num", q.numerator()}, {"den", q.denominator()}}; }

json to_json(VertexSet s) {
  json out = json::array();
  for (Vertex v : s.members()) out.push_back(v + 1);
  return out;
}

json to_json(const Edge& e) { return json::array({e.u + 1, e.v + 1}); }

json to_json(const Residuals& r) {
  return json{{"primal", stable_number(r.primal)},
              {"dual", stable_number(r.dual)},
              {"gap", stable_number(r.gap)}};
}

json to_json(const BoundResult& b, const JsonOptions& opts) {
  json out;
  out["hierarchy"] = to_string(b.hierarchy);
  out["r"] = b.r;
  out["eps"] = b.eps;
  out["outcome"] = to_string(b.outcome);
  switch (b.outcome) {
    case BoundOutcome::Finite:
      if (b.exact_value) {
        out["value"] = to_json(*b.exact_value);
      } else {
        out["value"] = stable_number(*b.value);
      }
      out["approx"] = stable_number(*b.value);
      break;
    case BoundOutcome::Infeasible: out["value"] = "Infeasible"; break;
    case BoundOutcome::Unbounded: out["value"] = "Unbounded"; break;
    case BoundOutcome::NotConverged: out["value"] = nullptr; break;
  }
  out["derived_alpha_bound"] = b.derived_alpha_bound ? json(*b.derived_alpha_bound) : json(nullptr);
  if (!b.infeasibility_source.empty()) out["infeasibility_source"] = b.infeasibility_source;
  if (b.precheck) {
    out["precheck"] = {{"pair", json::array({b.precheck->i + 1, b.precheck->j + 1})},
                       {"value", b.precheck->value}};
  }
  if (b.solver_status) {
    out["solver"] = {{"status", to_string(*b.solver_status)},
                     {"residuals", to_json(b.residuals)},
                     {"primal_value", stable_number(b.primal_value)},
                     {"dual_value", stable_number(b.dual_value)},
                     {"iterations", b.iterations},
                     {"certificate_residual", stable_number(b.certificate_residual)},
                     {"rows", b.rows},
                     {"psd_entries", b.psd_entries},
                     {"largest_block", b.largest_block}};
  }
  if (opts.include_timing) out["seconds"] = b.seconds;
  return out;
}

json to_json(const RankResult& r, const JsonOptions& opts) {
  json out;
  out["alpha"] = r.alpha;
  out["rank"] = r.rank ? json(*r.rank) : json(nullptr);
  out["max_order"] = r.max_order;
  json values = json::array();
  json details = json::array();
  for (const BoundResult& b : r.values) {
    values.push_back(b.value ? json(stable_number(*b.value)) : json(nullptr));
    details.push_back(to_json(b, opts));
  }
  out["values"] = values;
  out["details"] = details;
  return out;
}

json to_json(const ChainReport& c, const JsonOptions& opts) {
  json out;
  out["r"] = c.r;
  out["alpha"] = c.alpha;
  out["tolerance"] = c.tolerance;
  out["inverse_theta"] = c.inverse_theta ? json(stable_number(*c.inverse_theta)) : json(nullptr);
  out["theta"] = to_json(c.theta_even, opts);
  out["sphere"] = to_json(c.sphere, opts);
  out["preordering"] = to_json(c.preordering, opts);
  out["simplex"] = to_json(c.simplex, opts);
  out["complete"] = c.complete;
  out["checks"] = {{"theta_equals_sphere", c.theta_equals_sphere},
                   {"sphere_equals_preordering", c.sphere_equals_preordering},
                   {"simplex_below_preordering", c.simplex_below_preordering},
                   {"all_below_inverse_alpha", c.all_below_inverse_alpha}};
  return out;
}

json to_json(const KktCertificate& k) {
  json mu = json::array();
  for (const auto& [j, value] : k.mu) mu.push_back({{"vertex", j + 1}, {"mu", stable_number(value)}});
  return json{{"lambda", stable_number(k.lambda)},
              {"mu", mu},
              {"stationarity_residual", stable_number(k.stationarity_residual)},
              {"min_curvature", k.min_curvature ? json(stable_number(*k.min_curvature)) : json(nullptr)},
              {"cqc", k.cqc},
              {"fooc", k.fooc},
              {"cc", k.cc},
              {"scc", k.scc},
              {"sonc", k.sonc},
              {"sosc", k.sosc}};
}

json to_json(const MinimizerReport& m) {
  json out;
  out["classification"] = to_string(m.classification);
  out["support"] = to_json(m.support);
  out["support_stable"] = m.support_stable;
  out["global"] = m.global;
  out["strict_local"] = m.strict_local ? json(*m.strict_local) : json(nullptr);
  out["reason"] = m.reason;
  json comps = json::array();
  for (std::size_t i = 0; i < m.witness.components.size(); ++i) {
    comps.push_back({{"vertices", to_json(m.witness.components[i])},
                     {"mass", stable_number(m.witness.masses[i])}});
  }
  out["components"] = comps;
  out["kkt"] = m.kkt ? to_json(*m.kkt) : json(nullptr);
  return out;
}

json to_json(const EdgeCriticality& c) {
  json crit = json::array();
  json non = json::array();
  for (const Edge& e : c.critical) crit.push_back(to_json(e));
  for (const Edge& e : c.noncritical) non.push_back(to_json(e));
  return json{{"critical", crit}, {"noncritical", non}};
}

json graph_summary(const Graph& g, const EnumerationCaps& caps) {
  json out;
  out["n"] = g.num_vertices();
  out["m"] = g.num_edges();
  out["alpha"] = stability_number(g);
  try {
    out["clique_cover_number"] = clique_cover_number(g, caps);
  } catch (const RefusalError&) {
    out["clique_cover_number"] = nullptr;
  }
  out["criticality"] = to_string(criticality_class(g));
  return out;
}

}  // namespace copos

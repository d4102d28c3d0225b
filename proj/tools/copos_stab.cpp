#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "copos/combinatorics.hpp"
#include "copos/errors.hpp"
#include "copos/graph.hpp"
#include "copos/json_io.hpp"
#include "copos/lp_hierarchy.hpp"
#include "copos/motzkin.hpp"
#include "copos/sdpa.hpp"
#include "copos/solver.hpp"
#include "copos/sos.hpp"

using nlohmann::json;
using namespace copos;

namespace {

struct Options {
  std::string format = "json";
  bool timings = false;
  SolverConfig solver;
  EnumerationCaps caps;
  CompileCaps compile_caps;
};

// Largest graph for which `minimizers --scan` walks every stable set.
constexpr int kScanMaxVertices = 20;

json envelope(const std::string& command) {
  json out;
  out["schema"] = kSchemaTag;
  out["command"] = command;
  return out;
}

std::string fmt(double v, int digits = 10) {
  if (std::isnan(v)) return "nan";
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

std::string value_text(const json& row) {
  const json& v = row["value"];
  if (v.is_null()) return row.value("outcome", "n/a");
  if (v.is_string()) return v.get<std::string>();
  if (v.is_object()) {
    const auto num = v["num"].get<long long>();
    const auto den = v["den"].get<long long>();
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
  }
  return fmt(v.get<double>());
}

std::string bound_line(const json& row) {
  std::ostringstream out;
  out << std::left;
  out.width(16);
  out << row["hierarchy"].get<std::string>();
  out << " r=" << row["r"].get<int>() << "  eps=" << fmt(row["eps"].get<double>(), 4) << "  value=" << value_text(row);
  if (!row["derived_alpha_bound"].is_null()) out << "  alpha<=" << row["derived_alpha_bound"].get<int>();
  if (row.contains("solver")) {
    const json& s = row["solver"];
    out << "  [" << s["status"].get<std::string>() << ", it=" << s["iterations"].get<int>()
        << ", res=" << fmt(s["residuals"]["primal"].get<double>(), 2) << "/"
        << fmt(s["residuals"]["dual"].get<double>(), 2) << "/" << fmt(s["residuals"]["gap"].get<double>(), 2) << "]";
  }
  if (row.contains("infeasibility_source")) out << "  (" << row["infeasibility_source"].get<std::string>() << ")";
  if (row.contains("message")) out << "  " << row["message"].get<std::string>();
  if (row.contains("seconds")) out << "  " << fmt(row["seconds"].get<double>(), 3) << "s";
  return out.str();
}

std::string summary_text(const json& g) {
  std::ostringstream out;
  out << "n=" << g["n"] << " m=" << g["m"] << " alpha=" << g["alpha"] << " clique_cover="
      << (g["clique_cover_number"].is_null() ? std::string("n/a") : g["clique_cover_number"].dump())
      << " class=" << g["criticality"].get<std::string>();
  return out.str();
}

std::string minimizer_text(const json& m) {
  std::ostringstream out;
  out << m["classification"].get<std::string>() << "  support={";
  bool first = true;
  for (const auto& v : m["support"]) {
    out << (first ? "" : ",") << v.get<int>();
    first = false;
  }
  out << "}  " << m["reason"].get<std::string>();
  return out.str();
}

std::string render_text(const json& doc) {
  std::ostringstream out;
  const std::string cmd = doc["command"].get<std::string>();
  if (doc.contains("graph")) out << "graph: " << summary_text(doc["graph"]) << "\n";
  if (cmd == "alpha") {
    out << "alpha = " << doc["alpha"] << "\nmaximum stable set: " << doc["maximum_stable_set"].dump() << "\n";
    if (doc.contains("critical_edge_reduction")) {
      out << "critical-edge reduction: alpha = " << doc["critical_edge_reduction"]["alpha"] << " ("
          << doc["critical_edge_reduction"]["critical_answers"] << " critical answers)\n";
    }
  } else if (cmd == "critical") {
    out << "critical edges:    " << doc["critical"].dump() << "\n";
    out << "noncritical edges: " << doc["noncritical"].dump() << "\n";
    out << "class: " << doc["class"].get<std::string>() << "\n";
    out << "finitely many global minimizers: " << (doc["finitely_many_global_minimizers"].get<bool>() ? "yes" : "no") << "\n";
  } else if (cmd == "minimizers") {
    if (doc.contains("point")) {
      out << minimizer_text(doc["analysis"]) << "\n";
    } else {
      for (const auto& row : doc["scan"]) out << minimizer_text(row) << "\n";
      out << "finitely many global minimizers: " << (doc["finitely_many_global_minimizers"].get<bool>() ? "yes" : "no") << "\n";
    }
  } else if (cmd == "bound") {
    out << bound_line(doc["result"]) << "\n";
  } else if (cmd == "rank") {
    for (const auto& row : doc["details"]) out << bound_line(row) << "\n";
    out << "rank: " << (doc["rank"].is_null() ? "not found up to order " + doc["max_order"].dump() : doc["rank"].dump()) << "\n";
  } else if (cmd == "report") {
    for (const auto& row : doc["bounds"]) out << bound_line(row) << "\n";
    for (const auto& m : doc["minimizers"]) out << "minimizer " << minimizer_text(m) << "\n";
  } else if (cmd == "chain") {
    out << "1/theta^(2r) = " << (doc["inverse_theta"].is_null() ? "n/a" : fmt(doc["inverse_theta"].get<double>())) << "\n";
    for (const char* key : {"theta", "sphere", "preordering", "simplex"}) out << bound_line(doc[key]) << "\n";
    for (const auto& [k, v] : doc["checks"].items()) out << k << ": " << (v.get<bool>() ? "ok" : "FAIL") << "\n";
  } else if (cmd == "solve") {
    out << "status: " << doc["status"].get<std::string>() << "\n";
    if (!doc["primal_value"].is_null()) out << "primal: " << fmt(doc["primal_value"].get<double>()) << "  dual: " << fmt(doc["dual_value"].get<double>()) << "\n";
    out << "iterations: " << doc["iterations"] << "\n";
  } else {
    out << doc.dump(2) << "\n";
  }
  return out.str();
}

void emit(const json& doc, const Options& opts) {
  if (opts.format == "text") {
    std::cout << render_text(doc);
  } else {
    std::cout << doc.dump(2) << "\n";
  }
}

int thread_budget() {
  int threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  if (const char* env = std::getenv("COPOS_STAB_THREADS")) {
    const int cap = std::atoi(env);
    if (cap >= 1) threads = std::min(threads, cap);
  }
  return threads;
}

// Parses "0.5,0.5,0" or "1/2,1/2,0".
std::vector<double> parse_point(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    const auto slash = tok.find('/');
    try {
      std::size_t used = 0;
      if (slash == std::string::npos) {
        out.push_back(std::stod(tok, &used));
        if (used != tok.size()) throw std::invalid_argument(tok);
      } else {
        const double num = std::stod(tok.substr(0, slash));
        const double den = std::stod(tok.substr(slash + 1));
        if (den == 0.0) throw std::invalid_argument(tok);
        out.push_back(num / den);
      }
    } catch (const std::logic_error&) {
      throw std::invalid_argument("cannot parse point coordinate '" + tok + "'");
    }
  }
  return out;
}

std::pair<int, int> parse_orders(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const int r = std::stoi(text);
      return {0, r};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::logic_error&) {
    throw std::invalid_argument("orders must look like 'R' or 'A..B'");
  }
}

json refused_row(Hierarchy h, int r, double eps, const std::string& message) {
  return json{{"hierarchy", to_string(h)}, {"r", r}, {"eps", eps}, {"outcome", "Refused"},
              {"value", nullptr}, {"derived_alpha_bound", nullptr}, {"message", message}};
}

json cmd_alpha(const Graph& g, bool via_critical, const Options& opts) {
  json doc = envelope("alpha");
  doc["graph"] = graph_summary(g, opts.caps);
  doc["alpha"] = stability_number(g);
  doc["maximum_stable_set"] = to_json(maximum_stable_set(g));
  if (via_critical) {
    const CriticalEdgeReduction red = alpha_via_critical_edge_queries(g);
    json trace = json::array();
    for (const auto& q : red.trace) trace.push_back({{"edge", to_json(q.edge)}, {"critical", q.critical}});
    doc["critical_edge_reduction"] = {{"alpha", red.alpha}, {"critical_answers", red.critical_answers()}, {"trace", trace}};
  }
  return doc;
}

json cmd_critical(const Graph& g, const Options& opts) {
  json doc = envelope("critical");
  doc["graph"] = graph_summary(g, opts.caps);
  const EdgeCriticality c = critical_edges(g);
  const json parts = to_json(c);
  doc["critical"] = parts["critical"];
  doc["noncritical"] = parts["noncritical"];
  doc["class"] = to_string(criticality_class(g));
  doc["finitely_many_global_minimizers"] = has_finitely_many_global_minimizers(g);
  return doc;
}

json cmd_minimizers(const Graph& g, const std::string& point, bool scan, const Options& opts) {
  json doc = envelope("minimizers");
  doc["graph"] = graph_summary(g, opts.caps);
  if (!point.empty()) {
    std::vector<double> x = parse_point(point);
    if (static_cast<int>(x.size()) != g.num_vertices()) {
      throw std::invalid_argument("point has " + std::to_string(x.size()) + " coordinates, graph has " +
                                  std::to_string(g.num_vertices()) + " vertices");
    }
    const SimplexPoint p(x);
    doc["point"] = x;
    doc["value"] = stable_number(evaluate(SimplexQP::motzkin_straus(g), p));
    doc["analysis"] = to_json(classify_point(g, p));
    return doc;
  }
  if (!scan) throw std::invalid_argument("minimizers needs --point or --scan");
  if (g.num_vertices() > kScanMaxVertices) {
    throw RefusalError("--scan walks every stable set; refusing graphs above " +
                       std::to_string(kScanMaxVertices) + " vertices");
  }
  json rows = json::array();
  const std::uint64_t limit = std::uint64_t{1} << g.num_vertices();
  for (std::uint64_t bits = 1; bits < limit; ++bits) {
    const VertexSet s(bits);
    if (!g.is_stable(s)) continue;
    rows.push_back(to_json(classify_point(g, SimplexPoint::uniform_on(g.num_vertices(), s))));
  }
  doc["scan"] = rows;
  doc["finitely_many_global_minimizers"] = has_finitely_many_global_minimizers(g);
  return doc;
}

json bound_row(Hierarchy h, const Graph& g, int r, double eps, const Options& opts) {
  BoundOptions bo;
  bo.caps = opts.compile_caps;
  try {
    return to_json(compute_bound(h, g, r, eps, opts.solver, bo), JsonOptions{opts.timings});
  } catch (const RefusalError& e) {
    return refused_row(h, r, eps, e.what());
  }
}

json cmd_bound(const Graph& g, Hierarchy h, int r, double eps, const Options& opts) {
  json doc = envelope("bound");
  doc["graph"] = graph_summary(g, opts.caps);
  BoundOptions bo;
  bo.caps = opts.compile_caps;
  const BoundResult b = compute_bound(h, g, r, eps, opts.solver, bo);
  doc["result"] = to_json(b, JsonOptions{opts.timings});
  doc["value"] = doc["result"]["value"];
  return doc;
}

json cmd_rank(const Graph& g, int max_order, const Options& opts) {
  json doc = envelope("rank");
  doc["graph"] = graph_summary(g, opts.caps);
  doc.update(to_json(theta_rank(g, max_order, opts.solver), JsonOptions{opts.timings}));
  return doc;
}

json cmd_report(const Graph& g, int from, int to, double eps, const Options& opts) {
  json doc = envelope("report");
  const json summary = graph_summary(g, opts.caps);
  doc["graph"] = summary;
  doc["orders"] = {from, to};
  struct Cell {
    Hierarchy h;
    int r;
  };
  std::vector<Cell> cells;
  for (int r = from; r <= to; ++r) {
    cells.push_back({Hierarchy::Zeta, r});
    cells.push_back({Hierarchy::Theta, r});
    if (r >= 1) cells.push_back({Hierarchy::LasserreSimplex, r});
    if (r >= 1) cells.push_back({Hierarchy::Preordering, r});
    if (r >= 2) cells.push_back({Hierarchy::Sphere, r});
  }
  // Cells are independent; results are collected in cell order so the output
  // does not depend on the thread count.
  std::vector<json> rows(cells.size());
  const int threads = thread_budget();
  for (std::size_t start = 0; start < cells.size(); start += static_cast<std::size_t>(threads)) {
    const std::size_t stop = std::min(cells.size(), start + static_cast<std::size_t>(threads));
    std::vector<std::future<json>> jobs;
    for (std::size_t i = start; i < stop; ++i) {
      jobs.push_back(std::async(threads > 1 ? std::launch::async : std::launch::deferred,
                                [&, i] { return bound_row(cells[i].h, g, cells[i].r, eps, opts); }));
    }
    for (std::size_t i = start; i < stop; ++i) rows[i] = jobs[i - start].get();
  }
  const int alpha = summary["alpha"].get<int>();
  for (const json& row : rows) {
    if (!row["derived_alpha_bound"].is_null() && row["derived_alpha_bound"].get<int>() < alpha &&
        bounds_alpha_directly(*parse_hierarchy(row["hierarchy"].get<std::string>()))) {
      throw std::logic_error("derived bound below alpha in row " + row.dump());
    }
  }
  doc["bounds"] = rows;
  json mins = json::array();
  if (g.num_vertices() <= opts.caps.max_set_vertices) {
    for (VertexSet s : maximum_stable_sets(g, opts.caps).maximum_sets) {
      mins.push_back(to_json(classify_point(g, SimplexPoint::uniform_on(g.num_vertices(), s))));
    }
  }
  doc["minimizers"] = mins;
  return doc;
}

json cmd_chain(const Graph& g, int r, const Options& opts) {
  json doc = envelope("chain");
  doc["graph"] = graph_summary(g, opts.caps);
  doc.update(to_json(hierarchy_chain_report(g, r, opts.solver), JsonOptions{opts.timings}));
  return doc;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json cmd_solve(const std::string& path, const Options& opts) {
  json doc = envelope("solve");
  const ConicProgram p = parse_sdpa(read_file(path));
  const Solution s = solve(p, opts.solver);
  doc["status"] = to_string(s.status);
  const bool finite = s.status == SolveStatus::Optimal || s.status == SolveStatus::MaxIterReached;
  doc["primal_value"] = finite && std::isfinite(s.primal_value) ? json(stable_number(s.primal_value)) : json(nullptr);
  doc["dual_value"] = finite && std::isfinite(s.dual_value) ? json(stable_number(s.dual_value)) : json(nullptr);
  doc["residuals"] = to_json(s.residuals);
  doc["iterations"] = s.iterations;
  doc["certificate_residual"] = stable_number(s.certificate_residual);
  return doc;
}

Hierarchy hierarchy_or_throw(const std::string& name) {
  const auto h = parse_hierarchy(name);
  if (!h) {
    throw std::invalid_argument("unknown hierarchy '" + name +
                                "' (expected theta, zeta, lasserre, preordering, sphere or shor)");
  }
  return *h;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bounds on the stability number of a graph: linear and semidefinite hierarchies, exact oracles and Motzkin-Straus minimizer analysis."};
  app.require_subcommand(1);
  app.fallthrough();
  Options opts;

  app.add_option("--format", opts.format, "Output format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
  app.add_flag("--timings", opts.timings, "Include wall-clock seconds in bound rows (breaks byte-for-byte reproducibility)");
  auto* sg = "Solver";
  app.add_option("--eps-primal", opts.solver.eps_primal, "Relative primal residual tolerance")->group(sg)->capture_default_str();
  app.add_option("--eps-dual", opts.solver.eps_dual, "Relative dual residual tolerance")->group(sg)->capture_default_str();
  app.add_option("--eps-gap", opts.solver.eps_gap, "Relative duality gap tolerance")->group(sg)->capture_default_str();
  app.add_option("--eps-infeas", opts.solver.eps_infeas, "Infeasibility certificate tolerance")->group(sg)->capture_default_str();
  app.add_option("--max-iter", opts.solver.max_iter, "Iteration limit")->group(sg)->capture_default_str();
  bool no_scaling = false;
  app.add_flag("--no-scaling", no_scaling, "Disable Ruiz equilibration")->group(sg);
  app.add_option("--relaxation", opts.solver.relaxation, "Over-relaxation factor in (0, 2)")->group(sg)->capture_default_str();
  app.add_option("--rho-x", opts.solver.rho_x, "Primal proximal weight")->group(sg)->capture_default_str();
  app.add_option("--scale", opts.solver.scale, "Initial dual metric weight")->group(sg)->capture_default_str();
  bool no_adaptive = false;
  app.add_flag("--no-adaptive-scale", no_adaptive, "Keep the metric weight fixed")->group(sg);
  app.add_option("--stall-iterations", opts.solver.stall_iterations, "Iteration of the one-time scale switch (0 disables)")->group(sg)->capture_default_str();
  app.add_option("--stall-scale-factor", opts.solver.stall_scale_factor, "Factor applied to the scale at the switch")->group(sg)->capture_default_str();
  app.add_option("--anderson", opts.solver.anderson_memory, "Anderson acceleration memory (0 disables)")->group(sg)->capture_default_str();
  bool no_polish = false;
  app.add_flag("--no-polish", no_polish, "Disable the final polishing step")->group(sg);
  app.add_option("--max-psd-entries", opts.solver.max_psd_entries, "Refuse programs with more PSD entries")->group(sg)->capture_default_str();
  app.add_flag("--verbose", opts.solver.verbose, "Print the iteration log to stderr")->group(sg);
  auto* cg = "Caps";
  app.add_option("--max-set-vertices", opts.caps.max_set_vertices, "Largest graph for stable-set catalogs")->group(cg)->capture_default_str();
  app.add_option("--max-exponent-vectors", opts.caps.max_exponent_vectors, "Largest exponent enumeration")->group(cg)->capture_default_str();
  app.add_option("--max-preordering-products", opts.compile_caps.max_preordering_products, "Largest preordering product count")->group(cg)->capture_default_str();

  std::string path;
  auto add_graph = [&](CLI::App* sub) { sub->add_option("graph", path, "DIMACS or JSON graph file")->required()->check(CLI::ExistingFile); };

  auto* alpha = app.add_subcommand("alpha", "Stability number and a maximum stable set");
  add_graph(alpha);
  bool via_critical = false;
  alpha->add_flag("--via-critical-edges", via_critical, "Also recompute alpha through critical-edge queries");

  auto* critical = app.add_subcommand("critical", "Critical and noncritical edges");
  add_graph(critical);

  auto* minimizers = app.add_subcommand("minimizers", "Classify points of the Motzkin-Straus program");
  add_graph(minimizers);
  std::string point;
  bool scan = false;
  auto* point_opt = minimizers->add_option("--point", point, "Comma-separated simplex point (fractions allowed)");
  minimizers->add_flag("--scan", scan, "Classify chi^S/|S| for every stable set S")->excludes(point_opt);

  auto* bound = app.add_subcommand("bound", "One hierarchy value");
  add_graph(bound);
  std::string hierarchy_name = "theta";
  int order = 0;
  double eps = 0.0;
  bound->add_option("--hierarchy", hierarchy_name, "theta, zeta, lasserre, preordering, sphere or shor")->capture_default_str();
  bound->add_option("--order", order, "Order r")->capture_default_str();
  bound->add_option("--epsilon", eps, "Perturbation eps >= 0")->capture_default_str();

  auto* rank = app.add_subcommand("rank", "Theta-rank search");
  add_graph(rank);
  int max_order = 2;
  rank->add_option("--max-order", max_order, "Largest order tried")->capture_default_str();

  auto* report = app.add_subcommand("report", "Graph summary, bound table and minimizer analyses");
  add_graph(report);
  std::string orders = "0..1";
  report->add_option("--orders", orders, "Order range 'A..B' or a single upper bound")->capture_default_str();
  report->add_option("--epsilon", eps, "Perturbation eps >= 0")->capture_default_str();

  auto* chain = app.add_subcommand("chain", "Equality chain between the theta, sphere and preordering hierarchies");
  add_graph(chain);
  chain->add_option("--order", order, "Order r")->capture_default_str();

  auto* exp = app.add_subcommand("export", "Write the compiled program in SDPA sparse format");
  add_graph(exp);
  std::string out_path;
  exp->add_option("--hierarchy", hierarchy_name, "theta, lasserre, preordering, sphere, shor, lovasz or lovasz-nonneg")->capture_default_str();
  exp->add_option("--order", order, "Order r")->capture_default_str();
  exp->add_option("--epsilon", eps, "Perturbation eps >= 0")->capture_default_str();
  exp->add_option("-o,--output", out_path, "Destination file (stdout when omitted)");

  auto* solve_cmd = app.add_subcommand("solve", "Solve an SDPA sparse file");
  std::string sdpa_path;
  solve_cmd->add_option("file", sdpa_path, "SDPA sparse (.dat-s) file")->required()->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  opts.solver.scaling = !no_scaling;
  opts.solver.adaptive_scale = !no_adaptive;
  opts.solver.polish = !no_polish;

  try {
    opts.solver.validate();
    if (order < 0) throw std::invalid_argument("order must be >= 0");
    if (!(eps >= 0.0)) throw std::invalid_argument("epsilon must be >= 0");
    if (*solve_cmd) {
      emit(cmd_solve(sdpa_path, opts), opts);
      return 0;
    }
    const Graph g = load_graph(path);
    if (*alpha) {
      emit(cmd_alpha(g, via_critical, opts), opts);
    } else if (*critical) {
      emit(cmd_critical(g, opts), opts);
    } else if (*minimizers) {
      emit(cmd_minimizers(g, point, scan, opts), opts);
    } else if (*bound) {
      emit(cmd_bound(g, hierarchy_or_throw(hierarchy_name), order, eps, opts), opts);
    } else if (*rank) {
      if (max_order < 0) throw std::invalid_argument("max order must be >= 0");
      emit(cmd_rank(g, max_order, opts), opts);
    } else if (*report) {
      const auto [from, to] = parse_orders(orders);
      if (from < 0 || to < from) throw std::invalid_argument("invalid order range");
      emit(cmd_report(g, from, to, eps, opts), opts);
    } else if (*chain) {
      emit(cmd_chain(g, order, opts), opts);
    } else if (*exp) {
      std::string text;
      if (hierarchy_name == "lovasz" || hierarchy_name == "lovasz-nonneg") {
        text = emit_sdpa(compile_lovasz_theta(g, hierarchy_name == "lovasz-nonneg"));
      } else {
        const Hierarchy h = hierarchy_or_throw(hierarchy_name);
        const SymMatrix m = hierarchy_matrix(g, eps);
        switch (h) {
          case Hierarchy::Theta: text = emit_sdpa(compile_theta(g, order, eps).program); break;
          case Hierarchy::LasserreSimplex: text = emit_sdpa(compile_lasserre_simplex(m, order).program); break;
          case Hierarchy::Preordering: text = emit_sdpa(compile_preordering(m, order, opts.compile_caps).program); break;
          case Hierarchy::Sphere: text = emit_sdpa(compile_sphere(m, order).program); break;
          case Hierarchy::Shor: text = emit_sdpa(compile_shor_reduced(m).program); break;
          case Hierarchy::Zeta: throw std::invalid_argument("the linear hierarchy has a closed form; nothing to export");
        }
      }
      if (out_path.empty()) {
        std::cout << text;
      } else {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot write " + out_path);
        out << text;
      }
    }
  } catch (const RefusalError& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

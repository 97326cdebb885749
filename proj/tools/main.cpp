// Copyright (c) 2026 trishape contributors
// SPDX-License-Identifier: Apache-2.0
//
// trishape CLI: classification, shape mapping, probability tables, the
// reconciliation report, Monte Carlo estimation and the SVG sphere figure.
// JSON on stdout by default; --format csv|text for the table commands.
// Exit codes: 0 success, 2 validation error, 3 quadrature budget exceeded.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "trishape/json_io.hpp"
#include "trishape/measure.hpp"
#include "trishape/svg_render.hpp"

namespace ts = trishape;
using nlohmann::json;

namespace {

struct TriangleInput {
  std::string inline_json;
  std::string path;

  ts::Triangle load() const {
    if (!inline_json.empty()) return ts::parse_triangle(inline_json);
    if (path.empty()) throw ts::InvalidInput("provide --triangle JSON or --in FILE");
    std::ifstream in(path);
    if (!in) throw ts::InvalidInput("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return ts::parse_triangle(buf.str());
  }
};

void add_triangle_flags(CLI::App* cmd, TriangleInput& input) {
  cmd->add_option("--triangle", input.inline_json,
                  "triangle as [[x1,y1],[x2,y2],[x3,y3]] or {\"vertices\": ...}");
  cmd->add_option("--in", input.path, "file containing the triangle JSON");
}

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string aspect_name(ts::AspectKind k) {
  switch (k) {
    case ts::AspectKind::Tall: return "tall";
    case ts::AspectKind::Flat: return "flat";
    default: return "regular";
  }
}

std::string angle_name(ts::AngleKind k) {
  switch (k) {
    case ts::AngleKind::Acute: return "acute";
    case ts::AngleKind::Right: return "right";
    case ts::AngleKind::Obtuse: return "obtuse";
    default: return "degenerate";
  }
}

// --cluster {1,2,3,canonical}; empty means canonical.
ts::ClusterId resolve_cluster(const std::string& cluster, const ts::Triangle* t,
                              const ts::ShapePoint* p) {
  if (cluster.empty() || cluster == "canonical") {
    if (t != nullptr) return ts::canonical_cluster(*t);
    if (p != nullptr) return ts::canonical_cluster(*p);
    return ts::ClusterId::one;
  }
  if (cluster == "1" || cluster == "2" || cluster == "3") {
    return ts::cluster_id(cluster[0] - '0');
  }
  throw ts::InvalidInput("--cluster must be 1, 2, 3 or canonical");
}

ts::EventPredicate resolve_event(const std::string& event, const std::string& cluster) {
  const bool canonical = cluster.empty() || cluster == "canonical";
  if (event == "obtuse") return ts::predicate_obtuse();
  if (event == "acute") return ts::predicate_acute();
  if (event == "collinear") return ts::predicate_collinear();
  if (event == "tall") {
    return canonical ? ts::predicate_tall_canonical()
                     : ts::predicate_tall(resolve_cluster(cluster, nullptr, nullptr));
  }
  if (event == "flat") {
    return canonical ? ts::predicate_flat_canonical()
                     : ts::predicate_flat(resolve_cluster(cluster, nullptr, nullptr));
  }
  const ts::ClusterId k =
      canonical ? ts::ClusterId::one : resolve_cluster(cluster, nullptr, nullptr);
  if (event == "regular") return ts::predicate_regular(k);
  if (event == "isosceles") return ts::predicate_isosceles(k);
  if (event == "right") {
    ts::EventPredicate p;
    p.name = "right";
    p.codimension = 1;
    p.membership = [](const ts::ShapePoint& q) {
      const auto zs = ts::cluster_z(q);
      for (double z : zs) {
        if (std::fabs(z - 0.5) <= 1e-12) return true;
      }
      return false;
    };
    return p;
  }
  throw ts::InvalidInput(
      "unknown event '" + event +
      "' (expected obtuse|acute|tall|flat|regular|isosceles|collinear|right)");
}

std::vector<ts::SphereCurve> resolve_given_curves(const std::string& given) {
  std::vector<ts::SphereCurve> curves;
  const auto starts_with = [&](const char* prefix) {
    return given.rfind(prefix, 0) == 0;
  };
  if (given == "equator" || given == "collinear") {
    curves.push_back(ts::collinearity_equator());
  } else if (given == "right") {
    for (ts::ClusterId k : ts::kAllClusters) curves.push_back(ts::right_cap_boundary(k));
  } else if (given == "isosceles") {
    for (ts::ClusterId k : ts::kAllClusters) {
      curves.push_back(ts::meridian(k, ts::MeridianKind::Isosceles));
    }
  } else if (given == "regular") {
    for (ts::ClusterId k : ts::kAllClusters) {
      curves.push_back(ts::meridian(k, ts::MeridianKind::Regular));
    }
  } else if (starts_with("right_cap_") && given.size() == 11) {
    curves.push_back(ts::right_cap_boundary(ts::cluster_id(given[10] - '0')));
  } else if (starts_with("isosceles_meridian_") && given.size() == 20) {
    curves.push_back(
        ts::meridian(ts::cluster_id(given[19] - '0'), ts::MeridianKind::Isosceles));
  } else if (starts_with("regular_meridian_") && given.size() == 18) {
    curves.push_back(
        ts::meridian(ts::cluster_id(given[17] - '0'), ts::MeridianKind::Regular));
  }
  return curves;
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

std::string csv_field(const std::string& s) {
  if (s.find(',') == std::string::npos && s.find('"') == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

void print_results(const std::vector<ts::ProbabilityResult>& results,
                   const std::string& format) {
  if (format == "json") {
    json arr = json::array();
    for (const auto& r : results) arr.push_back(ts::to_json(r));
    print_json(arr);
    return;
  }
  const auto opt = [](const std::optional<double>& v) {
    return v ? fmt_double(*v) : std::string();
  };
  if (format == "csv") {
    std::cout << "event,exact_expr,exact,quadrature,quad_err,mc,mc_stderr,paper_value,"
                 "convention\n";
    for (const auto& r : results) {
      std::cout << csv_field(r.event) << "," << csv_field(r.exact_expr) << ","
                << opt(r.exact) << "," << fmt_double(r.quad) << ","
                << fmt_double(r.quad_err) << "," << opt(r.mc) << "," << opt(r.mc_stderr)
                << "," << opt(r.paper_value) << "," << csv_field(r.convention) << "\n";
    }
    return;
  }
  // text
  std::printf("%-24s %12s %12s %10s %12s %10s %11s %12s\n", "event", "exact",
              "quadrature", "quad_err", "mc", "mc_stderr", "paper_value", "convention");
  for (const auto& r : results) {
    std::printf("%-24s %12s %12.9f %10.2e %12s %10s %11s %12s\n", r.event.c_str(),
                r.exact ? fmt_double(*r.exact).c_str() : "-", r.quad, r.quad_err,
                r.mc ? fmt_double(*r.mc).c_str() : "-",
                r.mc_stderr ? fmt_double(*r.mc_stderr).c_str() : "-",
                r.paper_value ? fmt_double(*r.paper_value).c_str() : "-",
                r.convention.empty() ? "-" : r.convention.c_str());
  }
}

int run_classify(const TriangleInput& input, double tol) {
  const ts::Triangle t = input.load();
  json out;
  const ts::AngleClass angle = ts::classify_angle(t, tol);
  out["angle"] = angle_name(angle.kind);
  if (angle.vertex) out["vertex"] = ts::to_int(*angle.vertex);
  out["sides"] = ts::side_lengths(t);
  if (angle.kind != ts::AngleKind::Degenerate) {
    out["angles"] = ts::interior_angles(t);
  }
  bool total_collision = false;
  for (ts::ClusterId k : ts::kAllClusters) {
    try {
      const ts::AspectClass aspect = ts::classify_aspect(t, k, tol);
      out["aspect_cluster" + std::to_string(ts::to_int(k))] = aspect_name(aspect.kind);
    } catch (const ts::TotalCollision&) {
      total_collision = true;
    }
    out["isosceles_cluster" + std::to_string(ts::to_int(k))] = ts::is_isosceles(t, k, tol);
  }
  out["collinear"] = ts::is_collinear(t, tol);
  if (!total_collision) {
    const ts::ClusterId canon = ts::canonical_cluster(t);
    out["canonical_cluster"] = ts::to_int(canon);
    out["aspect_canonical"] = aspect_name(ts::classify_aspect(t, canon, tol).kind);
    const ts::ShapePoint p = ts::shape_point(t, ts::ClusterId::one);
    const ts::SphericalCoords sc = ts::spherical_coords(p);
    out["shape"] = ts::shape_point_to_json(p);
    out["shape"]["theta"] = sc.theta;
    out["shape"]["phi"] = sc.phi;
    out["cell"] = ts::cell_of(p).id;
  } else {
    out["total_collision"] = true;
  }
  print_json(out);
  return 0;
}

int run_map(const TriangleInput& input, const std::string& cluster) {
  const ts::Triangle t = input.load();
  const ts::ClusterId k = resolve_cluster(cluster, &t, nullptr);
  const ts::ShapePoint p = ts::shape_point(t, k);
  const ts::SphericalCoords sc = ts::spherical_coords(p);
  json out = ts::shape_point_to_json(p);
  out["theta"] = sc.theta;
  out["phi"] = sc.phi;
  out["tan_half_theta"] = std::tan(0.5 * sc.theta);
  out["cell"] = ts::cell_of(p).id;
  print_json(out);
  return 0;
}

ts::EvalOptions make_eval_options(double tol, std::size_t budget, std::uint64_t n,
                                  std::uint64_t seed, std::uint32_t shards) {
  ts::EvalOptions opts;
  opts.tol = tol;
  opts.max_patches = budget;
  if (n > 0) {
    ts::McConfig mc;
    mc.seed = seed;
    mc.n_samples = n;
    mc.shards = shards;
    opts.mc = mc;
  }
  return opts;
}

int run_prob(const std::string& event, const std::string& cluster,
             const std::string& convention, const ts::EvalOptions& opts) {
  const ts::ClusterConvention conv =
      !cluster.empty() && cluster != "canonical"
          ? ts::ClusterConvention::fixed_cluster(resolve_cluster(cluster, nullptr, nullptr))
          : ts::ClusterConvention::parse(convention);
  // Prefer the catalog entry (it carries exact forms and published values).
  for (const ts::CatalogEntry& e : ts::catalog_entries(conv)) {
    if (e.event == event && e.kind == ts::CatalogEntry::Kind::Region) {
      print_json(ts::to_json(ts::evaluate_entry(e, opts)));
      return 0;
    }
  }
  const ts::EventPredicate pred = resolve_event(event, cluster);
  ts::ProbabilityResult r;
  r.event = pred.name;
  if (pred.codimension != 0) {
    r.exact = 0.0;
    r.exact_expr = "0 (codimension-1 event)";
  } else {
    ts::QuadratureOptions qopts;
    qopts.tol = opts.tol;
    qopts.max_patches = opts.max_patches;
    const ts::AreaEstimate a = ts::area_quadrature(pred, qopts);
    r.quad = a.area / (4.0 * 3.14159265358979323846);
    r.quad_err = a.err / (4.0 * 3.14159265358979323846);
    if (opts.mc) {
      const ts::McEstimate m = ts::estimate(pred, *opts.mc);
      r.mc = m.p_hat;
      r.mc_stderr = m.standard_error;
    }
  }
  print_json(ts::to_json(r));
  return 0;
}

int run_conditional(const std::string& event, const std::string& given,
                    const std::string& cluster, const std::string& convention,
                    const ts::EvalOptions& opts) {
  const ts::ClusterConvention conv = ts::ClusterConvention::parse(convention);

  // Catalog entries cover the documented conditionals with exact values.
  std::string given_key = given;
  if (given == "right_cap_1") given_key = "right";
  if (given == "equator") given_key = "collinear";
  if (given == "isosceles_meridian_1") given_key = "isosceles";
  if (given == "regular_meridian_1") given_key = "regular";
  const std::string entry_name = event + "_given_" + given_key;
  for (const ts::CatalogEntry& e : ts::catalog_entries(conv)) {
    if (e.event == entry_name &&
        (e.kind == ts::CatalogEntry::Kind::RegionConditional ||
         e.kind == ts::CatalogEntry::Kind::CurveConditional)) {
      print_json(ts::to_json(ts::evaluate_entry(e, opts)));
      return 0;
    }
  }

  const ts::EventPredicate a = resolve_event(event, cluster);
  if (a.codimension != 0) {
    throw ts::InvalidInput("the conditioned event must be a region (codimension 0)");
  }
  const std::vector<ts::SphereCurve> curves = resolve_given_curves(given);
  ts::ProbabilityResult r;
  if (!curves.empty()) {
    double length = 0.0;
    double inside = 0.0;
    for (const ts::SphereCurve& c : curves) {
      inside += ts::arc_fraction(c, a) * c.total_length;
      length += c.total_length;
    }
    r.event = a.name + "_given_" + given;
    r.quad = inside / length;
    r.quad_err = curves.size() * 4096.0 * 1e-12;
  } else {
    const ts::EventPredicate b = resolve_event(given, "");
    if (b.codimension != 0) {
      throw ts::InvalidInput("condition '" + given +
                             "' is a curve; use its curve name (right_cap_k, "
                             "isosceles_meridian_k, regular_meridian_k, equator)");
    }
    ts::QuadratureOptions qopts;
    qopts.tol = opts.tol;
    qopts.max_patches = opts.max_patches;
    r = ts::conditional(a, b, qopts);
  }
  print_json(ts::to_json(r));
  return 0;
}

int run_table(const std::string& convention, const std::string& format,
              const ts::EvalOptions& opts) {
  const ts::ClusterConvention conv = ts::ClusterConvention::parse(convention);
  print_results(ts::evaluate_catalog(conv, opts), format);
  return 0;
}

int run_reconcile(const std::string& format, double tol, std::size_t budget) {
  const ts::ReconciliationReport r = ts::build_reconciliation(tol, budget);
  if (format == "text") {
    std::cout << ts::reconciliation_to_text(r);
  } else {
    print_json(ts::to_json(r));
  }
  return 0;
}

int run_sample(const std::string& event, const std::string& cluster,
               const ts::McConfig& cfg) {
  const ts::EventPredicate pred = resolve_event(event, cluster);
  if (pred.codimension != 0) {
    throw ts::InvalidInput("curves are not MC-estimable; use conditional with a curve");
  }
  const ts::McEstimate e = ts::estimate(pred, cfg);
  json out = ts::to_json(e);
  out["event"] = pred.name;
  out["seed"] = cfg.seed;
  print_json(out);
  return 0;
}

int run_sweep(const ts::McConfig& cfg, double eps) {
  print_json(ts::to_json(ts::consistency_sweep(cfg, eps)));
  return 0;
}

int run_render(const std::string& view, const std::string& out_path, int size,
               bool no_hidden) {
  ts::RenderOptions opts;
  opts.size = size;
  opts.draw_hidden = !no_hidden;
  if (!view.empty()) {
    double x = 0, y = 0, z = 0;
    if (std::sscanf(view.c_str(), "%lf,%lf,%lf", &x, &y, &z) != 3 ||
        (x == 0 && y == 0 && z == 0)) {
      throw ts::InvalidInput("--view must be \"x,y,z\" and nonzero");
    }
    opts.view = {x, y, z};
  }
  const std::string svg = ts::render_sphere_svg(opts);
  if (out_path.empty()) {
    std::cout << svg;
  } else {
    std::ofstream out(out_path);
    if (!out) throw ts::InvalidInput("cannot write " + out_path);
    out << svg;
  }
  return 0;
}

json error_json(const std::string& code, const std::string& message) {
  return json{{"error", {{"code", code}, {"message", message}}}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"triangle statistics on the shape sphere"};
  app.require_subcommand(1);

  TriangleInput tri;
  std::string event = "obtuse";
  std::string given;
  std::string cluster;
  std::string convention = "canonical";
  std::string format = "json";
  std::string view;
  std::string out_path;
  double classify_tol = 1e-9;
  double prob_tol = 1e-6;
  double cond_tol = 1e-4;
  double table_tol = 1e-4;
  double rec_tol = 1e-4;
  double eps = 1e-6;
  std::size_t budget = std::size_t{1} << 26;
  std::uint64_t seed = 42;
  std::uint64_t n = 0;
  std::uint32_t shards = 1;
  int size = 640;
  bool no_hidden = false;

  CLI::App* classify = app.add_subcommand("classify", "classify a triangle");
  add_triangle_flags(classify, tri);
  classify->add_option("--tol", classify_tol, "classification tolerance")
      ->capture_default_str();

  CLI::App* map_cmd = app.add_subcommand("map", "map a triangle to the shape sphere");
  add_triangle_flags(map_cmd, tri);
  map_cmd->add_option("--cluster", cluster, "1|2|3|canonical");

  CLI::App* prob = app.add_subcommand("prob", "probability of an event");
  prob->add_option("--event", event, "event name")->required();
  prob->add_option("--cluster", cluster, "1|2|3|canonical");
  prob->add_option("--convention", convention, "fixed1|fixed2|fixed3|canonical|symmetrized");
  prob->add_option("--tol", prob_tol, "quadrature tolerance")->capture_default_str();
  prob->add_option("--budget", budget, "quadrature patch budget");
  prob->add_option("--n", n, "Monte Carlo samples (0 = skip MC)");
  prob->add_option("--seed", seed, "Monte Carlo seed")->capture_default_str();
  prob->add_option("--shards", shards, "Monte Carlo shards");

  CLI::App* cond = app.add_subcommand("conditional", "conditional probability");
  cond->add_option("--event", event, "event name")->required();
  cond->add_option("--given", given,
                   "condition: event name or curve (right_cap_k, isosceles_meridian_k, "
                   "regular_meridian_k, equator)")
      ->required();
  cond->add_option("--cluster", cluster, "1|2|3|canonical");
  cond->add_option("--convention", convention, "tall/flat labelling convention");
  cond->add_option("--tol", cond_tol, "quadrature tolerance")->capture_default_str();
  cond->add_option("--budget", budget, "quadrature patch budget");
  cond->add_option("--n", n, "Monte Carlo samples (0 = skip MC)");
  cond->add_option("--seed", seed, "Monte Carlo seed");
  cond->add_option("--shards", shards, "Monte Carlo shards");

  CLI::App* table = app.add_subcommand("table", "full probability catalog");
  table->add_option("--convention", convention, "fixed1|fixed2|fixed3|canonical|symmetrized")
      ->capture_default_str();
  table->add_option("--format", format, "json|csv|text")->capture_default_str();
  table->add_option("--tol", table_tol, "quadrature tolerance")->capture_default_str();
  table->add_option("--budget", budget, "quadrature patch budget");
  table->add_option("--n", n, "Monte Carlo samples (0 = skip MC)");
  table->add_option("--seed", seed, "Monte Carlo seed")->capture_default_str();
  table->add_option("--shards", shards, "Monte Carlo shards");

  CLI::App* reconcile = app.add_subcommand(
      "reconcile", "discrepancy report: published expressions vs oracles");
  reconcile->add_option("--format", format, "json|text")->capture_default_str();
  reconcile->add_option("--tol", rec_tol, "quadrature tolerance")->capture_default_str();
  reconcile->add_option("--budget", budget, "quadrature patch budget");

  CLI::App* sample = app.add_subcommand("sample", "Monte Carlo estimate of an event");
  sample->add_option("--seed", seed, "stream seed")->capture_default_str();
  sample->add_option("--n", n, "number of samples")->required();
  sample->add_option("--shards", shards, "shard count")->capture_default_str();
  sample->add_option("--event", event, "event name")->capture_default_str();
  sample->add_option("--cluster", cluster, "1|2|3|canonical");

  CLI::App* sweep = app.add_subcommand("sweep", "space vs sphere consistency report");
  sweep->add_option("--seed", seed, "stream seed")->capture_default_str();
  sweep->add_option("--n", n, "number of samples")->required();
  sweep->add_option("--shards", shards, "shard count")->capture_default_str();
  sweep->add_option("--eps", eps, "boundary exclusion band (geodesic)")
      ->capture_default_str();

  CLI::App* render = app.add_subcommand("render", "SVG figure of the decorated sphere");
  render->add_option("--view", view, "view direction \"x,y,z\"");
  render->add_option("--out", out_path, "output file (stdout when omitted)");
  render->add_option("--size", size, "canvas size in px")->capture_default_str();
  render->add_flag("--no-hidden", no_hidden, "omit back-facing arcs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << error_json("usage", e.what()).dump(2) << "\n";
    return 2;
  }

  try {
    ts::McConfig cfg;
    cfg.seed = seed;
    cfg.n_samples = n;
    cfg.shards = shards;
    if (classify->parsed()) return run_classify(tri, classify_tol);
    if (map_cmd->parsed()) return run_map(tri, cluster);
    if (prob->parsed()) {
      return run_prob(event, cluster, convention,
                      make_eval_options(prob_tol, budget, n, seed, shards));
    }
    if (cond->parsed()) {
      return run_conditional(event, given, cluster, convention,
                             make_eval_options(cond_tol, budget, n, seed, shards));
    }
    if (table->parsed()) {
      return run_table(convention, format,
                       make_eval_options(table_tol, budget, n, seed, shards));
    }
    if (reconcile->parsed()) return run_reconcile(format, rec_tol, budget);
    if (sample->parsed()) return run_sample(event, cluster, cfg);
    if (sweep->parsed()) return run_sweep(cfg, eps);
    if (render->parsed()) return run_render(view, out_path, size, no_hidden);
    return 2;
  } catch (const ts::BudgetExceeded& e) {
    json j = error_json("budget_exceeded", e.what());
    j["error"]["partial_area"] = e.partial_area();
    j["error"]["achieved_err"] = e.achieved_err();
    j["error"]["patches_used"] = e.patches_used();
    std::cerr << j.dump(2) << "\n";
    return 3;
  } catch (const ts::Error& e) {
    std::cerr << error_json("invalid_input", e.what()).dump(2) << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << error_json("internal", e.what()).dump(2) << "\n";
    return 1;
  }
}

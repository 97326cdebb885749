// Copyright (c) 2026 trishape contributors
// SPDX-License-Identifier: Apache-2.0
#include "trishape/json_io.hpp"

#include <cmath>

namespace trishape {

namespace {

using nlohmann::json;

double finite_number(const json& j, const char* what) {
  if (!j.is_number()) throw InvalidInput(std::string(what) + " must be a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw InvalidInput(std::string(what) + " must be finite");
  return v;
}

Vec2 vec2_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) {
    throw InvalidInput("vertex must be an [x, y] pair");
  }
  return {finite_number(j[0], "vertex coordinate"), finite_number(j[1], "vertex coordinate")};
}

}  // namespace

json triangle_to_json(const Triangle& t) {
  return json{{"vertices",
               {{t.v1.x, t.v1.y}, {t.v2.x, t.v2.y}, {t.v3.x, t.v3.y}}}};
}

Triangle triangle_from_json(const json& j) {
  const json* verts = nullptr;
  if (j.is_object()) {
    if (!j.contains("vertices")) throw InvalidInput("missing \"vertices\" field");
    verts = &j.at("vertices");
  } else {
    verts = &j;
  }
  if (!verts->is_array() || verts->size() != 3) {
    throw InvalidInput("triangle needs exactly three vertices");
  }
  return {vec2_from_json((*verts)[0]), vec2_from_json((*verts)[1]),
          vec2_from_json((*verts)[2])};
}

Triangle parse_triangle(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string("triangle JSON parse error: ") + e.what());
  }
  return triangle_from_json(j);
}

json shape_point_to_json(const ShapePoint& p) {
  return json{{"cluster", to_int(p.cluster)}, {"xyz", {p.x, p.y, p.z}}};
}

ShapePoint shape_point_from_json(const json& j) {
  if (!j.is_object() || !j.contains("cluster") || !j.contains("xyz")) {
    throw InvalidInput("shape point needs \"cluster\" and \"xyz\" fields");
  }
  if (!j["cluster"].is_number_integer()) throw InvalidInput("cluster must be 1, 2 or 3");
  const json& xyz = j["xyz"];
  if (!xyz.is_array() || xyz.size() != 3) throw InvalidInput("xyz must be [X, Y, Z]");
  ShapePoint p;
  p.cluster = cluster_id(j["cluster"].get<int>());
  p.x = finite_number(xyz[0], "X");
  p.y = finite_number(xyz[1], "Y");
  p.z = finite_number(xyz[2], "Z");
  return p;
}

json to_json(const ProbabilityResult& r) {
  json j;
  j["event"] = r.event;
  j["exact"] = r.exact ? json(*r.exact) : json(nullptr);
  j["exact_expr"] = r.exact_expr;
  j["quadrature"] = r.quad;
  j["quad_err"] = r.quad_err;
  j["mc"] = r.mc ? json(*r.mc) : json(nullptr);
  j["mc_stderr"] = r.mc_stderr ? json(*r.mc_stderr) : json(nullptr);
  j["paper_value"] = r.paper_value ? json(*r.paper_value) : json(nullptr);
  j["convention"] = r.convention.empty() ? json(nullptr) : json(r.convention);
  return j;
}

json to_json(const McEstimate& e) {
  return json{{"p_hat", e.p_hat},
              {"stderr", e.standard_error},
              {"n", e.n},
              {"n_boundary_excluded", e.n_boundary_excluded}};
}

json to_json(const SweepReport& r) {
  json checks;
  for (const auto& [name, count] : r.by_check) checks[name] = count;
  return json{{"n", r.n},
              {"n_checked", r.n_checked},
              {"n_boundary_excluded", r.n_boundary_excluded},
              {"disagreements", r.disagreements},
              {"by_check", checks}};
}

json to_json(const JointTable& t) {
  return json{{"convention", t.convention},
              {"tall_acute", t.tall_acute},
              {"tall_obtuse", t.tall_obtuse},
              {"flat_acute", t.flat_acute},
              {"flat_obtuse", t.flat_obtuse},
              {"err_tall_acute", t.err_tall_acute},
              {"err_tall_obtuse", t.err_tall_obtuse},
              {"err_flat_acute", t.err_flat_acute},
              {"err_flat_obtuse", t.err_flat_obtuse},
              {"prob_tall", t.prob_tall()},
              {"prob_flat", t.prob_flat()},
              {"prob_acute", t.prob_acute()},
              {"prob_obtuse", t.prob_obtuse()}};
}

json to_json(const ReconciliationReport& r) {
  json quadruples = json::array();
  for (const QuadrupleReport& q : r.quadruples) {
    quadruples.push_back(json{{"convention", q.convention},
                              {"table", to_json(q.table)},
                              {"matches_published_set", q.matches_published_set},
                              {"max_abs_diff", q.max_abs_diff},
                              {"label_assignment", q.label_assignment}});
  }
  const auto rows = [](const std::vector<LabelAuditRow>& v) {
    json a = json::array();
    for (const LabelAuditRow& row : v) {
      a.push_back(json{{"event", row.event},
                       {"computed", row.computed},
                       {"published_label_for_this_value", row.paper_label},
                       {"published_value_under_this_name", row.paper_printed}});
    }
    return a;
  };
  return json{{"tau_arccos_form", r.tau_arccos_form},
              {"tau_arcsin_form", r.tau_arcsin_form},
              {"tau_quadrature", r.tau_quadrature},
              {"arccos_form_matches", r.arccos_form_matches},
              {"arcsin_form_matches", r.arcsin_form_matches},
              {"delta_oracle", r.delta_oracle},
              {"delta_published_expr", r.delta_paper_expr},
              {"quadruples", quadruples},
              {"matched_convention", r.matched_convention},
              {"section8", rows(r.section8)},
              {"section9", rows(r.section9)},
              {"segment_area",
               json{{"closed_form", r.segment.closed_form},
                    {"quadrature", r.segment.quadrature},
                    {"prob_12a_over_4pi", r.segment.prob}}},
              {"notes", r.notes}};
}

}  // namespace trishape

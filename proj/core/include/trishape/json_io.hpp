// Copyright (c) 2026 trishape contributors
// SPDX-License-Identifier: Apache-2.0
//
// JSON wire formats.  Triangles travel as {"vertices": [[x1,y1],[x2,y2],
// [x3,y3]]} and shape points as {"cluster": k, "xyz": [X,Y,Z]}; doubles
// round-trip exactly through the shortest-representation decimal emitted by
// the JSON library.
#pragma once

#include <string>

#include "json.hpp"
#include "trishape/measure.hpp"
#include "trishape/montecarlo.hpp"

namespace trishape {

nlohmann::json triangle_to_json(const Triangle& t);
Triangle triangle_from_json(const nlohmann::json& j);  // throws InvalidInput
// Accepts either the object form above or a bare [[x,y],[x,y],[x,y]] array.
Triangle parse_triangle(const std::string& text);

nlohmann::json shape_point_to_json(const ShapePoint& p);
ShapePoint shape_point_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ProbabilityResult& r);
nlohmann::json to_json(const McEstimate& e);
nlohmann::json to_json(const SweepReport& r);
nlohmann::json to_json(const JointTable& t);
nlohmann::json to_json(const ReconciliationReport& r);

}  // namespace trishape

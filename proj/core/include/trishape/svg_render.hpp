// Copyright (c) 2026 trishape contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "trishape/vec.hpp"

namespace trishape {

struct RenderOptions {
  Vec3 view{0.45, 0.75, 0.55};  // direction from which the sphere is seen
  int size = 640;               // square canvas, px
  bool draw_hidden = true;      // back-facing arcs as faint dashes
};

// Orthographic view of the decorated shape sphere: the collinearity equator,
// the three isosceles and three regular bimeridians, the three cap circles
// of rightness and the E/Ebar/B/M landmarks, everything in frame 1.
// Deterministic for fixed options; output is SVG 1.1.
std::string render_sphere_svg(const RenderOptions& opts = {});

}  // namespace trishape

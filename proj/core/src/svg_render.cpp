// Copyright (c) 2026 trishape contributors
// SPDX-License-Identifier: Apache-2.0
#include "trishape/svg_render.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

#include "trishape/regions.hpp"

namespace trishape {

namespace {

struct Projector {
  Vec3 dir, right, up;
  double cx, cy, radius;

  explicit Projector(const RenderOptions& opts) {
    dir = opts.view.normalized();
    Vec3 pole{0.0, 1.0, 0.0};
    if (std::fabs(dir.dot(pole)) > 0.99) pole = {1.0, 0.0, 0.0};
    right = pole.cross(dir).normalized();
    up = dir.cross(right);
    cx = cy = opts.size / 2.0;
    radius = opts.size * 0.45;
  }

  // Returns (screen x, screen y, front-facing).
  std::array<double, 2> screen(const Vec3& p, bool& front) const {
    front = p.dot(dir) >= 0.0;
    return {cx + p.dot(right) * radius, cy - p.dot(up) * radius};
  }
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

Vec3 frame1_xyz(const ShapePoint& p) {
  const ShapePoint q = cluster_rotate(p, p.cluster, ClusterId::one);
  return {q.x, q.y, q.z};
}

void emit_curve(std::ostringstream& os, const Projector& proj, const SphereCurve& curve,
                const char* stroke, bool draw_hidden) {
  constexpr int kSamples = 512;
  struct Pt {
    std::array<double, 2> s;
    bool front;
  };
  std::vector<Pt> pts;
  pts.reserve(kSamples + 1);
  for (int i = 0; i <= kSamples; ++i) {
    const Vec3 p = frame1_xyz(curve.at(static_cast<double>(i) / kSamples));
    Pt pt;
    pt.s = proj.screen(p, pt.front);
    pts.push_back(pt);
  }
  // Runs of constant visibility become separate polylines.
  for (int pass = 0; pass < 2; ++pass) {
    const bool want_front = pass == 0;
    if (!want_front && !draw_hidden) break;
    std::string points;
    auto flush = [&]() {
      if (points.empty()) return;
      os << "  <polyline fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\""
         << (want_front ? "1.6" : "1.0") << "\"";
      if (!want_front) os << " stroke-dasharray=\"3,4\" opacity=\"0.35\"";
      os << " points=\"" << points << "\"/>\n";
      points.clear();
    };
    for (const Pt& pt : pts) {
      if (pt.front == want_front) {
        if (!points.empty()) points += " ";
        points += fmt(pt.s[0]) + "," + fmt(pt.s[1]);
      } else {
        flush();
      }
    }
    flush();
  }
}

void emit_landmark(std::ostringstream& os, const Projector& proj, const ShapePoint& p,
                   const std::string& label, bool draw_hidden) {
  bool front = false;
  const auto s = proj.screen(frame1_xyz(p), front);
  if (!front && !draw_hidden) return;
  os << "  <circle cx=\"" << fmt(s[0]) << "\" cy=\"" << fmt(s[1]) << "\" r=\"3.5\" fill=\""
     << (front ? "#202020" : "#a0a0a0") << "\"/>\n";
  os << "  <text x=\"" << fmt(s[0] + 6.0) << "\" y=\"" << fmt(s[1] - 6.0)
     << "\" font-family=\"sans-serif\" font-size=\"13\" fill=\""
     << (front ? "#202020" : "#a0a0a0") << "\">" << label << "</text>\n";
}

}  // namespace

std::string render_sphere_svg(const RenderOptions& opts) {
  const Projector proj(opts);
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << opts.size
     << "\" height=\"" << opts.size << "\" viewBox=\"0 0 " << opts.size << " "
     << opts.size << "\">\n";
  os << "  <title>shape sphere</title>\n";
  os << "  <desc>collinearity equator, isosceles and regular bimeridians, cap circles "
        "of rightness, landmarks</desc>\n";
  os << "  <rect width=\"" << opts.size << "\" height=\"" << opts.size
     << "\" fill=\"white\"/>\n";
  os << "  <circle cx=\"" << fmt(proj.cx) << "\" cy=\"" << fmt(proj.cy) << "\" r=\""
     << fmt(proj.radius) << "\" fill=\"none\" stroke=\"#888888\" stroke-width=\"1.2\"/>\n";

  emit_curve(os, proj, collinearity_equator(), "#202020", opts.draw_hidden);
  for (ClusterId k : kAllClusters) {
    emit_curve(os, proj, meridian(k, MeridianKind::Isosceles), "#1f77b4",
               opts.draw_hidden);
    emit_curve(os, proj, meridian(k, MeridianKind::Regular), "#2ca02c", opts.draw_hidden);
    emit_curve(os, proj, right_cap_boundary(k), "#d62728", opts.draw_hidden);
  }

  const Landmarks lm = landmarks(ClusterId::one);
  emit_landmark(os, proj, lm.E, "E", opts.draw_hidden);
  emit_landmark(os, proj, lm.Ebar, "E&#773;", opts.draw_hidden);
  for (int k = 0; k < 3; ++k) {
    emit_landmark(os, proj, lm.B[k], "B" + std::to_string(k + 1), opts.draw_hidden);
    emit_landmark(os, proj, lm.M[k], "M" + std::to_string(k + 1), opts.draw_hidden);
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace trishape

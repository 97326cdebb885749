// Copyright (c) 2026 trishape contributors
// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <utility>

#include "doctest.h"
#include "test_util.hpp"
#include "trishape/regions.hpp"

using namespace trishape;

namespace {

constexpr double kPi = 3.14159265358979323846;

Triangle permuted(const Triangle& t, int perm) {
  const Vec2 v[3] = {t.v1, t.v2, t.v3};
  static const int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1},
                                  {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
  return {v[perms[perm][0]], v[perms[perm][1]], v[perms[perm][2]]};
}

}  // namespace

TEST_CASE("cap predicates at the landmarks") {
  const Landmarks lm = landmarks(ClusterId::one);
  CHECK(predicate_obtuse_at(ClusterId::one)(lm.M[0]));
  CHECK(predicate_obtuse()(lm.M[0]));
  for (ClusterId k : kAllClusters) {
    CHECK_FALSE(predicate_obtuse_at(k)(lm.E));
  }
  CHECK(predicate_acute()(lm.E));

  // The right isosceles image sits on the cap boundary Z_1 = 1/2 exactly.
  const ShapePoint r = shape_point({{0.0, 1.0}, {-1.0, 0.0}, {1.0, 0.0}},
                                   ClusterId::one);
  CHECK(std::fabs(cluster_z(r)[0] - 0.5) <= 1e-12);
}

TEST_CASE("aspect and curve predicates at the landmarks") {
  const Landmarks lm = landmarks(ClusterId::one);
  CHECK(predicate_tall(ClusterId::one)(lm.B[0]));
  CHECK(predicate_flat(ClusterId::one)(lm.M[0]));
  for (ClusterId k : kAllClusters) {
    CHECK(predicate_regular(k)(lm.E));
    CHECK(predicate_isosceles(k)(lm.E));
  }
  CHECK(predicate_collinear()(lm.M[0]));
  CHECK(predicate_collinear()(lm.B[1]));
  CHECK_FALSE(predicate_collinear()(lm.E));
}

TEST_CASE("right cap boundary") {
  const SphereCurve cap = right_cap_boundary(ClusterId::one);
  CHECK(cap.total_length == doctest::Approx(2.0 * kPi * std::sin(kPi / 3.0)));

  const Landmarks lm = landmarks(ClusterId::one);
  CHECK(geodesic_distance(cap.at(0.0), lm.B[1]) < 1e-9);
  CHECK(geodesic_distance(cap.at(0.5), lm.B[2]) < 1e-9);

  // Every point of the circle is a right triangle at vertex 1 (the offset
  // avoids the two degenerate kiss points, which are binary coincidences).
  for (int i = 0; i < 97; ++i) {
    const Triangle t =
        representative_triangle(cap.at((i + 0.37) / 97.0), ClusterId::one);
    const AngleClass c = classify_angle(t, 1e-9);
    CHECK(c.kind == AngleKind::Right);
    CHECK(c.vertex == ClusterId::one);
  }
}

TEST_CASE("adjacent caps only kiss") {
  // Along cap circle 1, Z_2 - 1/2 stays nonpositive and peaks at the shared
  // B point; there is no transversal crossing into cap 2.
  const SphereCurve cap = right_cap_boundary(ClusterId::one);
  const Landmarks lm = landmarks(ClusterId::one);
  double best_val = -2.0;
  double best_t = 0.0;
  const int n = 20000;
  for (int i = 0; i < n; ++i) {
    const double t = static_cast<double>(i) / n;
    const double v = cluster_z(cap.at(t))[1];
    CHECK(v <= 0.5 + 1e-12);
    if (v > best_val) {
      best_val = v;
      best_t = t;
    }
  }
  CHECK(best_val == doctest::Approx(0.5).epsilon(1e-7));
  CHECK(geodesic_distance(cap.at(best_t), lm.B[2]) < 1e-3);
}

TEST_CASE("meridians") {
  const Landmarks lm = landmarks(ClusterId::one);
  const SphereCurve iso = meridian(ClusterId::one, MeridianKind::Isosceles);
  CHECK(geodesic_distance(iso.at(0.0), lm.E) < 1e-12);
  CHECK(geodesic_distance(iso.at(0.25), lm.M[0]) < 1e-12);
  CHECK(geodesic_distance(iso.at(0.75), lm.B[0]) < 1e-12);
  CHECK(iso.total_length == doctest::Approx(2.0 * kPi));

  // Isosceles and regular meridians of one cluster are perpendicular at E;
  // the nearest regular meridian of another cluster is at pi/6.
  const auto tangent_at_e = [](const SphereCurve& c) {
    const ShapePoint a = cluster_rotate(c.at(0.0), c.at(0.0).cluster, ClusterId::one);
    const ShapePoint b = cluster_rotate(c.at(1e-7), c.at(1e-7).cluster, ClusterId::one);
    const double n = geodesic_distance(a, b);
    return Vec3{(b.x - a.x) / n, (b.y - a.y) / n, (b.z - a.z) / n};
  };
  const Vec3 ti = tangent_at_e(meridian(ClusterId::one, MeridianKind::Isosceles));
  const Vec3 tr = tangent_at_e(meridian(ClusterId::one, MeridianKind::Regular));
  const Vec3 tr3 = tangent_at_e(meridian(ClusterId::three, MeridianKind::Regular));
  CHECK(std::fabs(ti.dot(tr)) < 1e-6);
  CHECK(std::acos(std::min(1.0, std::fabs(ti.dot(tr3)))) ==
        doctest::Approx(kPi / 6.0).epsilon(1e-6));
}

TEST_CASE("curve arc length matches the round metric") {
  const SphereCurve curves[] = {right_cap_boundary(ClusterId::two),
                                meridian(ClusterId::two, MeridianKind::Regular),
                                collinearity_equator()};
  for (const SphereCurve& c : curves) {
    double len = 0.0;
    const int n = 100000;
    ShapePoint prev = c.at(0.0);
    for (int i = 1; i <= n; ++i) {
      const ShapePoint cur = c.at(static_cast<double>(i) / n);
      len += geodesic_distance(prev, cur);
      prev = cur;
    }
    CHECK(std::fabs(len - c.total_length) < 1e-9);
  }
}

TEST_CASE("subarc length and endpoints") {
  const SphereCurve eq = collinearity_equator();
  const SphereCurve half = eq.subarc(0.25, 0.75);
  CHECK(half.total_length == doctest::Approx(kPi));
  CHECK(geodesic_distance(half.at(0.0), eq.at(0.25)) < 1e-15);
  CHECK(geodesic_distance(half.at(1.0), eq.at(0.75)) < 1e-15);
}

TEST_CASE("no point is obtuse at two vertices") {
  // The caps meet only at the measure-zero kiss points.
  for (std::uint64_t i = 0; i < 100000; ++i) {
    const ShapePoint p = sample_point(39, i);
    int in_caps = 0;
    for (ClusterId k : kAllClusters) {
      if (predicate_obtuse_at(k)(p)) ++in_caps;
    }
    CHECK(in_caps <= 1);
  }
}

TEST_CASE("cells partition the sphere into 24 pieces") {
  std::set<int> seen;
  for (std::uint64_t i = 0; i < 1000000; ++i) {
    const CellRef c = cell_of(sample_point(40, i));
    REQUIRE(c.id >= 1);
    REQUIRE(c.id <= 24);
    if (!c.on_boundary) seen.insert(c.id);
  }
  CHECK(seen.size() == 24);
}

TEST_CASE("E pole is a flagged boundary point") {
  const CellRef c = cell_of({0.0, 1.0, 0.0, ClusterId::one});
  CHECK(c.on_boundary);
  CHECK(c.id == 1);
}

TEST_CASE("relabelling acts on cells consistently") {
  // The permutation action on cells depends only on the cell, not on the
  // representative: two shapes in one cell land together under every
  // relabelling.
  std::map<std::pair<int, int>, int> action;
  int checked = 0;
  for (std::uint64_t i = 0; i < 4000 && checked < 1500; ++i) {
    const Triangle t = test_util::random_triangle(41, i);
    if (rms_size(t) < 1e-2) continue;
    const CellRef home = cell_of(shape_point(t, ClusterId::one), 1e-7);
    if (home.on_boundary) continue;
    std::set<int> images;
    bool near_boundary = false;
    for (int perm = 0; perm < 6; ++perm) {
      const CellRef c = cell_of(shape_point(permuted(t, perm), ClusterId::one), 1e-7);
      if (c.on_boundary) {
        near_boundary = true;
        break;
      }
      images.insert(c.id);
      const auto key = std::make_pair(home.id, perm);
      const auto it = action.find(key);
      if (it == action.end()) {
        action[key] = c.id;
      } else {
        CHECK(it->second == c.id);
      }
    }
    if (near_boundary) continue;
    CHECK(images.size() == 6);  // the six relabellings land in six cells
    ++checked;
  }
  CHECK(checked >= 1000);
}

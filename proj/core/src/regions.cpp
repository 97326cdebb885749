// Copyright (c) 2026 trishape contributors
// SPDX-License-Identifier: Apache-2.0
#include "trishape/regions.hpp"

#include <algorithm>
#include <cmath>

namespace trishape {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 6.28318530717958647692;
constexpr double kSinThird = 0.86602540378443864676;  // sin(pi/3)
constexpr double kBandTol = 1e-12;

double max_cluster_z(const ShapePoint& p) {
  const std::array<double, 3> zs = cluster_z(p);
  return std::max({zs[0], zs[1], zs[2]});
}

double median_cluster_z(const ShapePoint& p) {
  const std::array<double, 3> zs = cluster_z(p);
  return std::max(std::min(zs[0], zs[1]),
                  std::min(std::max(zs[0], zs[1]), zs[2]));
}

}  // namespace

SphereCurve SphereCurve::subarc(double t0, double t1) const {
  SphereCurve sub;
  sub.name = name + "[" + std::to_string(t0) + "," + std::to_string(t1) + "]";
  auto base = param;
  sub.param = [base, t0, t1](double t) { return base(t0 + (t1 - t0) * t); };
  sub.total_length = total_length * std::fabs(t1 - t0);
  return sub;
}

EventPredicate predicate_obtuse() {
  return {"obtuse", [](const ShapePoint& p) { return max_cluster_z(p) > 0.5; }, 0};
}

EventPredicate predicate_obtuse_at(ClusterId k) {
  const int i = to_index(k);
  return {"obtuse_at_" + std::to_string(to_int(k)),
          [i](const ShapePoint& p) { return cluster_z(p)[i] > 0.5; }, 0};
}

EventPredicate predicate_acute() {
  return {"acute", [](const ShapePoint& p) { return max_cluster_z(p) <= 0.5; }, 0};
}

EventPredicate predicate_tall(ClusterId k) {
  const int i = to_index(k);
  return {"tall_" + std::to_string(to_int(k)),
          [i](const ShapePoint& p) { return cluster_z(p)[i] < 0.0; }, 0};
}

EventPredicate predicate_flat(ClusterId k) {
  const int i = to_index(k);
  return {"flat_" + std::to_string(to_int(k)),
          [i](const ShapePoint& p) { return cluster_z(p)[i] > 0.0; }, 0};
}

EventPredicate predicate_tall_canonical() {
  return {"tall", [](const ShapePoint& p) { return median_cluster_z(p) < 0.0; }, 0};
}

EventPredicate predicate_flat_canonical() {
  return {"flat", [](const ShapePoint& p) { return median_cluster_z(p) > 0.0; }, 0};
}

EventPredicate predicate_regular(ClusterId k) {
  const int i = to_index(k);
  return {"regular_" + std::to_string(to_int(k)),
          [i](const ShapePoint& p) { return std::fabs(cluster_z(p)[i]) <= kBandTol; }, 1};
}

EventPredicate predicate_isosceles(ClusterId k) {
  return {"isosceles_" + std::to_string(to_int(k)),
          [k](const ShapePoint& p) {
            const ShapePoint q = cluster_rotate(p, p.cluster, k);
            return std::fabs(q.x) <= kBandTol;
          },
          1};
}

EventPredicate predicate_collinear() {
  return {"collinear", [](const ShapePoint& p) { return std::fabs(p.y) <= kBandTol; }, 1};
}

EventPredicate predicate_whole_sphere() {
  return {"whole_sphere", [](const ShapePoint&) { return true; }, 0};
}

EventPredicate predicate_orientation_positive() {
  return {"orientation_positive",
          [](const ShapePoint& p) {
            const ShapePoint q = cluster_rotate(p, p.cluster, ClusterId::one);
            return q.y > 0.0;
          },
          0};
}

EventPredicate predicate_and(const EventPredicate& a, const EventPredicate& b) {
  auto fa = a.membership;
  auto fb = b.membership;
  return {a.name + "_and_" + b.name,
          [fa, fb](const ShapePoint& p) { return fa(p) && fb(p); },
          std::max(a.codimension, b.codimension)};
}

EventPredicate predicate_not(const EventPredicate& a) {
  auto fa = a.membership;
  return {"not_" + a.name, [fa](const ShapePoint& p) { return !fa(p); }, a.codimension};
}

SphereCurve right_cap_boundary(ClusterId k) {
  SphereCurve c;
  c.name = "right_cap_" + std::to_string(to_int(k));
  c.total_length = kTwoPi * kSinThird;
  c.param = [k](double t) {
    const double a = kTwoPi * t;
    return ShapePoint{kSinThird * std::cos(a), kSinThird * std::sin(a), 0.5, k};
  };
  return c;
}

SphereCurve meridian(ClusterId k, MeridianKind kind) {
  SphereCurve c;
  c.total_length = kTwoPi;
  if (kind == MeridianKind::Isosceles) {
    c.name = "isosceles_meridian_" + std::to_string(to_int(k));
    // X_k = 0, through E (t=0), M_k (t=1/4), Ebar (t=1/2), B_k (t=3/4).
    c.param = [k](double t) {
      const double a = kTwoPi * t;
      return ShapePoint{0.0, std::cos(a), std::sin(a), k};
    };
  } else {
    c.name = "regular_meridian_" + std::to_string(to_int(k));
    // Z_k = 0, through E (t=0) and Ebar (t=1/2).
    c.param = [k](double t) {
      const double a = kTwoPi * t;
      return ShapePoint{std::sin(a), std::cos(a), 0.0, k};
    };
  }
  return c;
}

SphereCurve collinearity_equator() {
  SphereCurve c;
  c.name = "equator";
  c.total_length = kTwoPi;
  // Y = 0, through M_1 (t=0), B_2 (t=1/6), M_3 (t=1/3), B_1 (t=1/2), ...
  c.param = [](double t) {
    const double a = kTwoPi * t;
    return ShapePoint{std::sin(a), 0.0, std::cos(a), ClusterId::one};
  };
  return c;
}

CellRef cell_of(const ShapePoint& p, double tol) {
  const ShapePoint q = cluster_rotate(p, p.cluster, ClusterId::one);

  const auto raw_id = [](double x, double y, double z) {
    double lon = std::atan2(x, z);
    if (lon < 0.0) lon += kTwoPi;
    int seg = static_cast<int>(lon / (kPi / 6.0));
    seg = std::clamp(seg, 0, 11);
    const int hem = y > 0.0 ? 0 : 1;
    return seg * 2 + hem + 1;
  };

  // Distance to the bounding arcs: the six semi-meridian planes through the
  // E axis at longitudes m*pi/6 and the equator Y = 0.
  double dist = std::fabs(std::asin(std::clamp(q.y, -1.0, 1.0)));
  for (int m = 0; m < 6; ++m) {
    const double lon = m * kPi / 6.0;
    const double s = q.x * std::cos(lon) - q.z * std::sin(lon);
    dist = std::min(dist, std::fabs(std::asin(std::clamp(s, -1.0, 1.0))));
  }

  CellRef ref;
  ref.on_boundary = dist <= tol;
  if (!ref.on_boundary) {
    ref.id = raw_id(q.x, q.y, q.z);
    return ref;
  }
  // On a bounding arc: take the lowest id among nudged neighbours.
  const double delta = std::max(tol, 1e-9) * 4.0;
  int best = 25;
  for (const double dx : {-delta, delta}) {
    for (const double dy : {-delta, delta}) {
      const double lon0 = std::atan2(q.x, q.z) + dx;
      const double s = std::sqrt(std::max(0.0, 1.0 - q.y * q.y));
      best = std::min(best, raw_id(s * std::sin(lon0), q.y + dy, s * std::cos(lon0)));
    }
  }
  ref.id = best;
  return ref;
}

}  // namespace trishape

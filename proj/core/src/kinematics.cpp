// Copyright (c) 2026 trishape contributors
// SPDX-License-Identifier: Apache-2.0
#include "trishape/kinematics.hpp"

#include <algorithm>
#include <cmath>

namespace trishape {

namespace {

constexpr double kSqrtHalf = 0.70710678118654752440;       // sqrt(1/2)
constexpr double kSqrtTwoThirds = 0.81649658092772603273;  // sqrt(2/3)

double coincidence_threshold(const Triangle& t, double tol) {
  return std::max(kAbsFloor, tol * rms_size(t));
}

}  // namespace

ClusterId cluster_id(int k) {
  if (k < 1 || k > 3) throw InvalidInput("cluster index must be 1, 2 or 3");
  return static_cast<ClusterId>(k);
}

const Vec2& Triangle::vertex(int k) const {
  switch (k) {
    case 1: return v1;
    case 2: return v2;
    case 3: return v3;
    default: throw InvalidInput("vertex index must be 1, 2 or 3");
  }
}

double rms_size(const Triangle& t) {
  const Vec2 c = (t.v1 + t.v2 + t.v3) / 3.0;
  const double i = (t.v1 - c).norm2() + (t.v2 - c).norm2() + (t.v3 - c).norm2();
  return std::sqrt(i / 3.0);
}

double signed_area(const Triangle& t) {
  return 0.5 * (t.v2 - t.v1).cross(t.v3 - t.v1);
}

std::array<double, 3> side_lengths(const Triangle& t) {
  return {(t.v3 - t.v2).norm(), (t.v1 - t.v3).norm(), (t.v2 - t.v1).norm()};
}

std::array<double, 3> interior_angles(const Triangle& t) {
  const double eps = coincidence_threshold(t, kDefaultTol);
  const std::array<double, 3> s = side_lengths(t);
  if (s[0] <= eps || s[1] <= eps || s[2] <= eps) {
    throw DegenerateTriangle("coincident vertices have no interior angles");
  }
  std::array<double, 3> angles{};
  for (int k = 0; k < 3; ++k) {
    const Vec2& a = t.vertex(k + 1);
    const Vec2 u = t.vertex((k + 1) % 3 + 1) - a;
    const Vec2 v = t.vertex((k + 2) % 3 + 1) - a;
    angles[k] = std::atan2(std::fabs(u.cross(v)), u.dot(v));
  }
  return angles;
}

JacobiPair jacobi(const Triangle& t, ClusterId k) {
  // Cyclic assignment: apex a, then base vertices b, c in cyclic order, so
  // that R1 x R2 equals twice the signed area for every cluster.
  const int i = to_index(k);
  const Vec2& a = t.vertex(i + 1);
  const Vec2& b = t.vertex((i + 1) % 3 + 1);
  const Vec2& c = t.vertex((i + 2) % 3 + 1);
  JacobiPair j;
  j.cluster = k;
  j.R1 = c - b;
  j.R2 = a - (b + c) * 0.5;
  j.rho1 = j.R1 * kSqrtHalf;
  j.rho2 = j.R2 * kSqrtTwoThirds;
  return j;
}

std::array<double, 2> moment_of_inertia(const JacobiPair& j) {
  return {j.rho1.norm2(), j.rho2.norm2()};
}

AngleClass classify_angle(const Triangle& t, double tol) {
  const double eps = coincidence_threshold(t, tol);
  const std::array<double, 3> s = side_lengths(t);
  if (s[0] <= eps || s[1] <= eps || s[2] <= eps) {
    return {AngleKind::Degenerate, std::nullopt};
  }
  const double scale = rms_size(t);
  if (std::fabs(signed_area(t)) <= std::max(kAbsFloor, tol * scale * scale)) {
    return {AngleKind::Degenerate, std::nullopt};
  }
  const std::array<double, 3> angles = interior_angles(t);
  int imax = 0;
  for (int k = 1; k < 3; ++k) {
    if (angles[k] > angles[imax]) imax = k;
  }
  constexpr double kHalfPi = 1.57079632679489661923;
  const ClusterId vmax = cluster_id(imax + 1);
  if (angles[imax] > kHalfPi + tol) return {AngleKind::Obtuse, vmax};
  if (angles[imax] >= kHalfPi - tol) return {AngleKind::Right, vmax};
  return {AngleKind::Acute, std::nullopt};
}

AspectClass classify_aspect(const Triangle& t, ClusterId k, double tol) {
  const JacobiPair j = jacobi(t, k);
  const auto [m1, m2] = moment_of_inertia(j);
  if (m1 + m2 <= kAbsFloor) {
    throw TotalCollision("total collision has no aspect");
  }
  if (m2 > m1 * (1.0 + tol)) return {AspectKind::Tall, k};
  if (m1 > m2 * (1.0 + tol)) return {AspectKind::Flat, k};
  return {AspectKind::Regular, k};
}

ClusterId canonical_cluster(const Triangle& t) {
  const std::array<double, 3> s = side_lengths(t);
  std::array<double, 3> sorted = s;
  std::sort(sorted.begin(), sorted.end());
  const double median = sorted[1];
  for (int k = 0; k < 3; ++k) {
    if (s[k] == median) return cluster_id(k + 1);
  }
  return ClusterId::one;  // unreachable
}

bool is_isosceles(const Triangle& t, ClusterId k, double tol) {
  const std::array<double, 3> s = side_lengths(t);
  const int i = to_index(k);
  // Sides adjacent to vertex k are the ones opposite the other two vertices.
  const double a = s[(i + 1) % 3];
  const double b = s[(i + 2) % 3];
  return std::fabs(a - b) <= std::max(kAbsFloor, tol * rms_size(t));
}

bool is_collinear(const Triangle& t, double tol) {
  const double scale = rms_size(t);
  return std::fabs(signed_area(t)) <= std::max(kAbsFloor, tol * scale * scale);
}

}  // namespace trishape

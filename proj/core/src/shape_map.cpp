// Copyright (c) 2026 trishape contributors
// SPDX-License-Identifier: Apache-2.0
#include "trishape/shape_map.hpp"

#include <algorithm>
#include <cmath>

namespace trishape {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kHalfSqrt3 = 0.86602540378443864676;  // sqrt(3)/2
constexpr double kInvSqrtHalf = 1.41421356237309504880;      // 1/sqrt(1/2)
constexpr double kInvSqrtTwoThirds = 1.22474487139158904910;  // 1/sqrt(2/3)

double clamp_unit(double v) { return std::clamp(v, -1.0, 1.0); }

}  // namespace

ShapePoint shape_point(const Triangle& t, ClusterId k) {
  const JacobiPair j = jacobi(t, k);
  const double m1 = j.rho1.norm2();
  const double m2 = j.rho2.norm2();
  const double inertia = m1 + m2;
  if (inertia <= kAbsFloor) {
    throw TotalCollision("total collision has no shape point");
  }
  ShapePoint p;
  p.x = 2.0 * j.rho1.dot(j.rho2) / inertia;
  p.y = 2.0 * j.rho1.cross(j.rho2) / inertia;
  p.z = (m1 - m2) / inertia;
  p.cluster = k;
  return p;
}

SphericalCoords spherical_coords(const ShapePoint& p) {
  SphericalCoords c;
  c.theta = std::acos(clamp_unit(p.z));
  if (p.x == 0.0 && p.y == 0.0) {
    c.phi = 0.0;  // undefined at the poles
  } else {
    c.phi = std::atan2(p.y, p.x);
    if (c.phi < 0.0) c.phi += 2.0 * kPi;
  }
  return c;
}

ShapePoint from_spherical(const SphericalCoords& c, ClusterId frame) {
  const double s = std::sin(c.theta);
  return {s * std::cos(c.phi), s * std::sin(c.phi), std::cos(c.theta), frame};
}

Triangle representative_triangle(const ShapePoint& p, ClusterId k) {
  const ShapePoint q = cluster_rotate(p, p.cluster, k);
  if (std::fabs(q.norm2() - 1.0) > 2e-9) {
    throw InvalidInput("representative_triangle requires a unit shape point");
  }
  const SphericalCoords c = spherical_coords(q);
  const double half = 0.5 * c.theta;
  const Vec2 rho1{std::cos(half), 0.0};
  const Vec2 rho2{std::sin(half) * std::cos(c.phi), std::sin(half) * std::sin(c.phi)};
  const Vec2 r1 = rho1 * kInvSqrtHalf;
  const Vec2 r2 = rho2 * kInvSqrtTwoThirds;

  // Invert the Jacobi map about the centroid: apex = (2/3) R2, base pair at
  // -+ R1/2 - R2/3 in the cyclic order of the cluster.
  const Vec2 apex = r2 * (2.0 / 3.0);
  const Vec2 early = r1 * -0.5 - r2 * (1.0 / 3.0);
  const Vec2 late = r1 * 0.5 - r2 * (1.0 / 3.0);
  switch (k) {
    case ClusterId::one: return {apex, early, late};
    case ClusterId::two: return {late, apex, early};
    default: return {early, late, apex};
  }
}

ShapePoint cluster_rotate(const ShapePoint& p, ClusterId from, ClusterId to) {
  const int steps = ((to_int(to) - to_int(from)) % 3 + 3) % 3;
  if (steps == 0) {
    ShapePoint q = p;
    q.cluster = to;
    return q;
  }
  // One cyclic step is a rotation by -2*pi/3 about the Y axis.
  const double c = -0.5;
  const double s = (steps == 1) ? -kHalfSqrt3 : kHalfSqrt3;
  ShapePoint q;
  q.x = c * p.x - s * p.z;
  q.y = p.y;
  q.z = s * p.x + c * p.z;
  q.cluster = to;
  return q;
}

double geodesic_distance(const ShapePoint& p, const ShapePoint& q) {
  const ShapePoint r = cluster_rotate(q, q.cluster, p.cluster);
  // atan2 of the cross and dot products stays accurate near 0 and pi, where
  // acos of the clamped dot product loses half the significand.
  const double cx = p.y * r.z - p.z * r.y;
  const double cy = p.z * r.x - p.x * r.z;
  const double cz = p.x * r.y - p.y * r.x;
  const double cross = std::sqrt(cx * cx + cy * cy + cz * cz);
  const double dot = p.x * r.x + p.y * r.y + p.z * r.z;
  return std::atan2(cross, dot);
}

Landmarks landmarks(ClusterId frame) {
  Landmarks l;
  l.E = {0.0, 1.0, 0.0, frame};
  l.Ebar = {0.0, -1.0, 0.0, frame};
  for (ClusterId k : kAllClusters) {
    l.M[to_index(k)] = cluster_rotate({0.0, 0.0, 1.0, k}, k, frame);
    l.B[to_index(k)] = cluster_rotate({0.0, 0.0, -1.0, k}, k, frame);
  }
  return l;
}

std::array<double, 3> cluster_z(const ShapePoint& p) {
  const ShapePoint q = cluster_rotate(p, p.cluster, ClusterId::one);
  return {q.z, -kHalfSqrt3 * q.x - 0.5 * q.z, kHalfSqrt3 * q.x - 0.5 * q.z};
}

ClusterId canonical_cluster(const ShapePoint& p) {
  const std::array<double, 3> zs = cluster_z(p);
  std::array<double, 3> sorted = zs;
  std::sort(sorted.begin(), sorted.end());
  const double median = sorted[1];
  for (int k = 0; k < 3; ++k) {
    if (zs[k] == median) return cluster_id(k + 1);
  }
  return ClusterId::one;  // unreachable
}

}  // namespace trishape

// Copyright (c) 2026 trishape contributors
// SPDX-License-Identifier: Apache-2.0
//
// Closed-form events on the shape sphere, written directly in Hopf
// coordinates so that the space-side classifiers in kinematics.hpp stay
// available as independent oracles.
//
// The obtuse threshold is derived, not quoted: a triangle right-angled at
// vertex k has hypotenuse : median = 2 : 1, hence |rho2|/|rho1| = 1/sqrt(3)
// and theta_k = 2 arctan(1/sqrt(3)) = pi/3, so the rightness boundary is the
// small circle Z_k = cos(pi/3) = 1/2 and obtuse-at-k is its interior
// Z_k > 1/2.  Tall/flat with respect to cluster k split along the great
// circle Z_k = 0; isoscelesness is X_k = 0 and collinearity Y = 0.
#pragma once

#include <functional>
#include <string>

#include "trishape/shape_map.hpp"

namespace trishape {

struct EventPredicate {
  std::string name;
  std::function<bool(const ShapePoint&)> membership;
  int codimension = 0;  // 0 for regions, 1 for curves

  bool operator()(const ShapePoint& p) const { return membership(p); }
};

// Constant-speed curve on the shape sphere: arc length from t0 to t1 is
// (t1 - t0) * total_length.
struct SphereCurve {
  std::string name;
  std::function<ShapePoint(double)> param;  // t in [0, 1]
  double total_length = 0.0;                // radians

  ShapePoint at(double t) const { return param(t); }
  SphereCurve subarc(double t0, double t1) const;
};

EventPredicate predicate_obtuse();
EventPredicate predicate_obtuse_at(ClusterId k);
EventPredicate predicate_acute();

EventPredicate predicate_tall(ClusterId k);
EventPredicate predicate_flat(ClusterId k);
// Tall/flat with respect to the cell-canonical (median-side) cluster.
EventPredicate predicate_tall_canonical();
EventPredicate predicate_flat_canonical();

// Codimension-1 events; membership tests the defining function against a
// 1e-12 band and is meant for landmark checks, not for area quadrature.
EventPredicate predicate_regular(ClusterId k);
EventPredicate predicate_isosceles(ClusterId k);
EventPredicate predicate_collinear();

EventPredicate predicate_whole_sphere();
// Positive orientation hemisphere Y > 0; independent of tall/flat by the
// reflection symmetry of the measure.
EventPredicate predicate_orientation_positive();

EventPredicate predicate_and(const EventPredicate& a, const EventPredicate& b);
EventPredicate predicate_not(const EventPredicate& a);

// The small circle Z_k = 1/2 of triangles right-angled at vertex k, length
// 2*pi*sin(pi/3); t = 0 starts at the kiss point B of the next cluster.
SphereCurve right_cap_boundary(ClusterId k);

enum class MeridianKind { Isosceles, Regular };

// Full great-circle bimeridian through E and Ebar: X_k = 0 (isosceles) or
// Z_k = 0 (regular), length 2*pi, starting at E.
SphereCurve meridian(ClusterId k, MeridianKind kind);

// The collinearity equator Y = 0, length 2*pi, starting at M_1.
SphereCurve collinearity_equator();

// Cell of the 12-segment tessellation cut in half by the equator, numbered
// 1..24 as (longitude segment about the E axis) * 2 + hemisphere.  Points
// within tol of a bounding arc are flagged and assigned the lowest adjacent
// cell id.
struct CellRef {
  int id = 0;
  bool on_boundary = false;
};

CellRef cell_of(const ShapePoint& p, double tol = 1e-12);

}  // namespace trishape

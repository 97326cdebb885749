// Copyright (c) 2026 trishape contributors
// SPDX-License-Identifier: Apache-2.0
//
// Euclidean-side representation of labelled plane triangles and the Jacobi
// coordinates attached to a cluster choice.  A "cluster" picks one vertex as
// apex; the side joining the other two is the base.  With unit point masses
// the relative Jacobi vectors of cluster k are
//
//   R1 = base separation           (k=1: q3 - q2, k=2: q1 - q3, k=3: q2 - q1)
//   R2 = apex - base midpoint
//
// mass-weighted as rho1 = sqrt(1/2) R1, rho2 = sqrt(2/3) R2 so that
// |rho1|^2 + |rho2|^2 is the moment of inertia about the centroid for every
// cluster.  The cyclic base ordering above keeps the signed area (and hence
// the orientation Hopf coordinate) cluster-independent.
//
// Everything here is a pure function of its inputs and safe to call
// concurrently.
#pragma once

#include <array>
#include <optional>

#include "trishape/errors.hpp"
#include "trishape/vec.hpp"

namespace trishape {

// Relative tolerance used by the classifiers, scaled by the triangle's
// root-mean-square size so that every decision is similarity invariant.
inline constexpr double kDefaultTol = 1e-9;
// Absolute floor guarding underflow for triangles of essentially zero size.
inline constexpr double kAbsFloor = 1e-300;

enum class ClusterId : int { one = 1, two = 2, three = 3 };

inline constexpr std::array<ClusterId, 3> kAllClusters = {
    ClusterId::one, ClusterId::two, ClusterId::three};

constexpr int to_int(ClusterId k) { return static_cast<int>(k); }
constexpr int to_index(ClusterId k) { return static_cast<int>(k) - 1; }

ClusterId cluster_id(int k);  // 1..3, throws InvalidInput otherwise

struct Triangle {
  Vec2 v1, v2, v3;

  const Vec2& vertex(int k) const;  // 1-based, throws InvalidInput
};

struct JacobiPair {
  Vec2 R1, R2;      // base separation; apex to base midpoint
  Vec2 rho1, rho2;  // mass-weighted: rho_i = sqrt(mu_i) R_i, mu = (1/2, 2/3)
  ClusterId cluster = ClusterId::one;
};

enum class AngleKind { Acute, Right, Obtuse, Degenerate };

struct AngleClass {
  AngleKind kind = AngleKind::Degenerate;
  std::optional<ClusterId> vertex;  // the right/obtuse vertex when applicable
};

enum class AspectKind { Tall, Regular, Flat };

struct AspectClass {
  AspectKind kind = AspectKind::Regular;
  ClusterId cluster = ClusterId::one;
};

// Root-mean-square distance of the vertices from their centroid.  Used to
// scale all degeneracy tolerances.
double rms_size(const Triangle& t);

// Twice the usual signed area convention: positive for counterclockwise
// vertex order.
double signed_area(const Triangle& t);

// s_k is the length of the side opposite vertex k.
std::array<double, 3> side_lengths(const Triangle& t);

// Interior angles in radians, angle_k at vertex k; they sum to pi.  Collinear
// but non-coincident input yields the (pi, 0, 0) pattern.  Throws
// DegenerateTriangle when two vertices coincide within tolerance.
std::array<double, 3> interior_angles(const Triangle& t);

JacobiPair jacobi(const Triangle& t, ClusterId k);

// Partial moments of inertia (|rho1|^2, |rho2|^2).  Their sum is invariant
// under cluster change.
std::array<double, 2> moment_of_inertia(const JacobiPair& j);

// Obtuse iff the largest interior angle exceeds pi/2 + tol, Right iff it is
// within tol of pi/2; coincident or collinear input is Degenerate.
AngleClass classify_angle(const Triangle& t, double tol = kDefaultTol);

// Tall iff |rho2|^2 > |rho1|^2 (1 + tol), Flat for the reverse, Regular in
// the band between.  Throws TotalCollision when both moments vanish.
AspectClass classify_aspect(const Triangle& t, ClusterId k, double tol = kDefaultTol);

// The cluster whose base is the median-length side; ties go to the lowest
// cluster index.  This is the cell-canonical labelling of the 12-segment
// tessellation.
ClusterId canonical_cluster(const Triangle& t);

// True iff the two sides adjacent to vertex k have equal length within
// tol * rms_size.
bool is_isosceles(const Triangle& t, ClusterId k, double tol = kDefaultTol);

// True iff the signed area vanishes within tol * rms_size^2.
bool is_collinear(const Triangle& t, double tol = kDefaultTol);

}  // namespace trishape

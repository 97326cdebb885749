// Copyright (c) 2026 trishape contributors
// SPDX-License-Identifier: Apache-2.0
//
// The shapes-in-space to shape-space correspondence.  Normalizing the
// mass-weighted Jacobi pair to unit moment of inertia and applying the Hopf
// quadratics
//
//   X = 2 rho1 . rho2,   Y = 2 (rho1 x rho2),   Z = |rho1|^2 - |rho2|^2
//
// sends every labelled plane triangle to a point of the unit 2-sphere, the
// shape sphere.  Coordinates are relative to the frame of a stated cluster;
// Y is cluster independent (it is proportional to the signed area), while
// changing cluster rotates (X, Z) by a multiple of 2*pi/3 about the Y axis.
//
// Frame convention: in frame k the merged configuration M_k (apex at the
// base midpoint, rho2 = 0) sits at the pole theta = 0 and the binary
// coincidence B_k (rho1 = 0) at theta = pi; theta = 2 arctan(|rho2|/|rho1|),
// and phi = atan2(Y, X).  Equilateral triangles sit at (0, +-1, 0), the
// positively oriented one at Y = +1.
#pragma once

#include "trishape/kinematics.hpp"

namespace trishape {

struct ShapePoint {
  double x = 0.0;
  double y = 0.0;
  double z = 1.0;
  ClusterId cluster = ClusterId::one;

  constexpr double norm2() const { return x * x + y * y + z * z; }
};

struct SphericalCoords {
  double theta = 0.0;  // [0, pi], measured from the M pole of the frame
  double phi = 0.0;    // [0, 2*pi); 0 by convention at the poles
};

// Hopf image of the triangle in the frame of cluster k.  Throws
// TotalCollision when the triangle has no shape.
ShapePoint shape_point(const Triangle& t, ClusterId k);

SphericalCoords spherical_coords(const ShapePoint& p);
ShapePoint from_spherical(const SphericalCoords& c, ClusterId frame);

// A unit-moment triangle whose shape point equals p (given in any frame),
// built in the frame of cluster k: rho1 = cos(theta/2) along x, rho2 =
// sin(theta/2) at relative angle phi, then the Jacobi map is inverted about
// the centroid.  B and M inputs produce the corresponding degenerate
// configurations.
Triangle representative_triangle(const ShapePoint& p, ClusterId k);

// Reinterprets coordinates given in frame `from` in frame `to`: a rotation
// about the Y axis by -2*pi/3 per cyclic step.  Composing the three frame
// changes is the identity.
ShapePoint cluster_rotate(const ShapePoint& p, ClusterId from, ClusterId to);

// Round-metric distance in [0, pi]; operands may carry different frames.
double geodesic_distance(const ShapePoint& p, const ShapePoint& q);

struct Landmarks {
  ShapePoint E;     // positively oriented equilateral, (0, 1, 0) in any frame
  ShapePoint Ebar;  // its mirror image
  std::array<ShapePoint, 3> B;  // binary coincidences, B[k-1] for cluster k
  std::array<ShapePoint, 3> M;  // merged configurations
};

// The eight landmark points expressed in the given frame.
Landmarks landmarks(ClusterId frame);

// Z coordinate of the same shape in each of the three frames.  Side lengths
// obey s_k^2 = (1 + Z_k) * 2 I3, so the median Z picks the median side.
std::array<double, 3> cluster_z(const ShapePoint& p);

// The cluster whose frame sees the median Z (equivalently, whose base is the
// median-length side).  Ties go to the lowest index.
ClusterId canonical_cluster(const ShapePoint& p);

}  // namespace trishape

// Copyright (c) 2026 trishape contributors
// SPDX-License-Identifier: Apache-2.0
//
// Seeded, reproducible Monte Carlo on the uniform shape-sphere measure.  The
// generator is counter based: sample i is a pure function of (seed, i), so a
// stream is bit-identical across runs and across any shard partition of the
// same index range, and shard reductions are plain integer sums that do not
// depend on evaluation order.
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "trishape/regions.hpp"

namespace trishape {

struct McConfig {
  std::uint64_t seed = 0;
  std::uint64_t n_samples = 1'000'000;
  std::uint32_t shards = 1;
};

struct McEstimate {
  double p_hat = 0.0;
  double standard_error = 0.0;  // sqrt(p(1-p)/n)
  std::uint64_t n = 0;
  std::uint64_t n_boundary_excluded = 0;
};

// splitmix64 finalizer; the basis of the counter generator.
std::uint64_t mix64(std::uint64_t x);

// Uniform shape point for counter i of the stream keyed by seed: Z uniform
// on [-1, 1], phi uniform on [0, 2*pi), reported in frame 1.
ShapePoint sample_point(std::uint64_t seed, std::uint64_t index);

// Materialized stream, mostly for inspection and tests; estimators walk the
// counters directly.
std::vector<ShapePoint> sample_uniform_sphere(const McConfig& cfg);

McEstimate estimate(const EventPredicate& pred, const McConfig& cfg);

// Ratio estimator for Prob(a | b) with the delta-method (within-condition
// binomial) standard error.  Throws InsufficientConditionSamples when fewer
// than 100 samples satisfy b.
McEstimate estimate_conditional(const EventPredicate& a, const EventPredicate& b,
                                const McConfig& cfg);

struct SweepReport {
  std::uint64_t n = 0;
  std::uint64_t n_checked = 0;
  std::uint64_t n_boundary_excluded = 0;
  std::uint64_t disagreements = 0;
  std::map<std::string, std::uint64_t> by_check;
};

// Maps every sample through representative_triangle and compares the
// space-side classifiers against the sphere predicates.  Samples within
// geodesic distance eps of any codimension-1 boundary are excluded (and
// counted); outside the band the classifiers must agree exactly.
// obtuse_z_threshold exists for fault-injection self-tests; the honest value
// is 1/2.
SweepReport consistency_sweep(const McConfig& cfg, double eps = 1e-6,
                              double obtuse_z_threshold = 0.5);

}  // namespace trishape

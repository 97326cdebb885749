// Copyright (c) 2026 trishape contributors
// SPDX-License-Identifier: Apache-2.0
#include "trishape/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <thread>

namespace trishape {

namespace {

constexpr double kTwoPi = 6.28318530717958647692;
constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

double to_unit_double(std::uint64_t u) {
  return static_cast<double>(u >> 11) * 0x1.0p-53;  // [0, 1)
}

// Counter ranges for shard s of S over [0, n).
std::pair<std::uint64_t, std::uint64_t> shard_range(std::uint64_t n, std::uint32_t shards,
                                                    std::uint32_t s) {
  const std::uint64_t lo = n * s / shards;
  const std::uint64_t hi = n * (s + 1) / shards;
  return {lo, hi};
}

// Runs fn over every shard concurrently and sums the integer results in
// shard order, so the reduction is independent of scheduling.
template <typename Fn>
std::uint64_t sharded_count(const McConfig& cfg, Fn fn) {
  const std::uint32_t shards = cfg.shards == 0 ? 1 : cfg.shards;
  if (shards == 1) return fn(0, cfg.n_samples);
  std::vector<std::future<std::uint64_t>> futures;
  futures.reserve(shards);
  for (std::uint32_t s = 0; s < shards; ++s) {
    const auto [lo, hi] = shard_range(cfg.n_samples, shards, s);
    futures.push_back(std::async(std::launch::async, fn, lo, hi));
  }
  std::uint64_t total = 0;
  for (auto& f : futures) total += f.get();
  return total;
}

}  // namespace

std::uint64_t mix64(std::uint64_t x) {
  x += kGolden;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

ShapePoint sample_point(std::uint64_t seed, std::uint64_t index) {
  const std::uint64_t u = mix64(seed ^ mix64(2 * index));
  const std::uint64_t v = mix64(seed ^ mix64(2 * index + 1));
  const double z = 2.0 * to_unit_double(u) - 1.0;
  const double phi = kTwoPi * to_unit_double(v);
  const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
  return {s * std::cos(phi), s * std::sin(phi), z, ClusterId::one};
}

std::vector<ShapePoint> sample_uniform_sphere(const McConfig& cfg) {
  std::vector<ShapePoint> points;
  points.reserve(cfg.n_samples);
  for (std::uint64_t i = 0; i < cfg.n_samples; ++i) {
    points.push_back(sample_point(cfg.seed, i));
  }
  return points;
}

McEstimate estimate(const EventPredicate& pred, const McConfig& cfg) {
  const std::uint64_t hits = sharded_count(
      cfg, [&pred, seed = cfg.seed](std::uint64_t lo, std::uint64_t hi) {
        std::uint64_t count = 0;
        for (std::uint64_t i = lo; i < hi; ++i) {
          if (pred(sample_point(seed, i))) ++count;
        }
        return count;
      });
  McEstimate e;
  e.n = cfg.n_samples;
  e.p_hat = static_cast<double>(hits) / static_cast<double>(cfg.n_samples);
  e.standard_error = std::sqrt(e.p_hat * (1.0 - e.p_hat) / static_cast<double>(cfg.n_samples));
  return e;
}

McEstimate estimate_conditional(const EventPredicate& a, const EventPredicate& b,
                                const McConfig& cfg) {
  if (cfg.n_samples > 0xFFFFFFFFull) {
    throw InvalidInput("conditional estimator supports at most 2^32 - 1 samples");
  }
  // Pack (b hits, a-and-b hits) into one integer reduction.
  const std::uint64_t packed = sharded_count(
      cfg, [&a, &b, seed = cfg.seed](std::uint64_t lo, std::uint64_t hi) {
        std::uint64_t nb = 0;
        std::uint64_t nab = 0;
        for (std::uint64_t i = lo; i < hi; ++i) {
          const ShapePoint p = sample_point(seed, i);
          if (b(p)) {
            ++nb;
            if (a(p)) ++nab;
          }
        }
        return (nb << 32) | nab;
      });
  const std::uint64_t nb = packed >> 32;
  const std::uint64_t nab = packed & 0xFFFFFFFFull;
  if (nb < 100) {
    throw InsufficientConditionSamples("condition satisfied by fewer than 100 samples");
  }
  McEstimate e;
  e.n = nb;
  e.p_hat = static_cast<double>(nab) / static_cast<double>(nb);
  e.standard_error = std::sqrt(e.p_hat * (1.0 - e.p_hat) / static_cast<double>(nb));
  return e;
}

SweepReport consistency_sweep(const McConfig& cfg, double eps, double obtuse_z_threshold) {
  constexpr double kThirdPi = 1.04719755119659774615;  // pi/3, the cap colatitude

  struct Tally {
    std::uint64_t checked = 0;
    std::uint64_t excluded = 0;
    std::uint64_t angle = 0;
    std::uint64_t aspect = 0;
    std::uint64_t isosceles = 0;
    std::uint64_t collinear = 0;
    std::uint64_t canonical = 0;
    std::uint64_t orientation = 0;
  };

  const std::uint32_t shards = cfg.shards == 0 ? 1 : cfg.shards;
  std::vector<Tally> tallies(shards);

  auto run_shard = [&](std::uint32_t s) {
    const auto [lo, hi] = shard_range(cfg.n_samples, shards, s);
    Tally& t = tallies[s];
    for (std::uint64_t i = lo; i < hi; ++i) {
      const ShapePoint p = sample_point(cfg.seed, i);
      const std::array<double, 3> zs = cluster_z(p);

      // Geodesic distance to every boundary a classifier can straddle: cap
      // circles (|theta_k - pi/3|), tall/flat great circles, isosceles
      // meridians, and the collinearity equator.
      double band = std::fabs(std::asin(std::clamp(p.y, -1.0, 1.0)));
      for (int k = 0; k < 3; ++k) {
        band = std::min(band, std::fabs(std::acos(std::clamp(zs[k], -1.0, 1.0)) - kThirdPi));
        band = std::min(band, std::fabs(std::asin(std::clamp(zs[k], -1.0, 1.0))));
        const ShapePoint q = cluster_rotate(p, p.cluster, cluster_id(k + 1));
        band = std::min(band, std::fabs(std::asin(std::clamp(q.x, -1.0, 1.0))));
      }
      if (band < eps) {
        ++t.excluded;
        continue;
      }
      ++t.checked;

      const Triangle tri = representative_triangle(p, ClusterId::one);

      const bool sphere_obtuse =
          std::max({zs[0], zs[1], zs[2]}) > obtuse_z_threshold;
      const AngleClass ac = classify_angle(tri);
      if (sphere_obtuse != (ac.kind == AngleKind::Obtuse)) ++t.angle;

      for (int k = 0; k < 3; ++k) {
        const AspectClass asp = classify_aspect(tri, cluster_id(k + 1));
        const bool sphere_tall = zs[k] < 0.0;
        if (sphere_tall != (asp.kind == AspectKind::Tall)) ++t.aspect;
        if (is_isosceles(tri, cluster_id(k + 1))) ++t.isosceles;
      }
      if (is_collinear(tri)) ++t.collinear;
      if (canonical_cluster(tri) != canonical_cluster(p)) ++t.canonical;

      const bool sphere_ccw = p.y > 0.0;
      if (sphere_ccw != (signed_area(tri) > 0.0)) ++t.orientation;
    }
  };

  if (shards == 1) {
    run_shard(0);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(shards);
    for (std::uint32_t s = 0; s < shards; ++s) threads.emplace_back(run_shard, s);
    for (auto& th : threads) th.join();
  }

  SweepReport report;
  report.n = cfg.n_samples;
  Tally sum;
  for (const Tally& t : tallies) {
    sum.checked += t.checked;
    sum.excluded += t.excluded;
    sum.angle += t.angle;
    sum.aspect += t.aspect;
    sum.isosceles += t.isosceles;
    sum.collinear += t.collinear;
    sum.canonical += t.canonical;
    sum.orientation += t.orientation;
  }
  report.n_checked = sum.checked;
  report.n_boundary_excluded = sum.excluded;
  report.by_check["angle"] = sum.angle;
  report.by_check["aspect"] = sum.aspect;
  report.by_check["isosceles_band"] = sum.isosceles;
  report.by_check["collinear_band"] = sum.collinear;
  report.by_check["canonical_cluster"] = sum.canonical;
  report.by_check["orientation"] = sum.orientation;
  report.disagreements =
      sum.angle + sum.aspect + sum.isosceles + sum.collinear + sum.canonical + sum.orientation;
  return report;
}

}  // namespace trishape

// Copyright (c) 2026 trishape contributors
// SPDX-License-Identifier: Apache-2.0
#include <cmath>

#include "doctest.h"
#include "test_util.hpp"
#include "trishape/measure.hpp"
#include "trishape/montecarlo.hpp"

using namespace trishape;

TEST_CASE("sample stream is a pure function of (seed, index)") {
  McConfig cfg;
  cfg.seed = 42;
  cfg.n_samples = 10;
  const auto a = sample_uniform_sphere(cfg);
  const auto b = sample_uniform_sphere(cfg);
  REQUIRE(a.size() == 10);
  for (int i = 0; i < 10; ++i) {
    CHECK(a[i].x == b[i].x);
    CHECK(a[i].y == b[i].y);
    CHECK(a[i].z == b[i].z);
  }
  cfg.seed = 43;
  const auto c = sample_uniform_sphere(cfg);
  CHECK(c[0].x != a[0].x);
}

TEST_CASE("shard partitions do not change the estimate bits") {
  McConfig cfg;
  cfg.seed = 42;
  cfg.n_samples = 100000;
  const EventPredicate obtuse = predicate_obtuse();
  cfg.shards = 1;
  const McEstimate one = estimate(obtuse, cfg);
  for (std::uint32_t shards : {2u, 3u, 7u, 16u}) {
    cfg.shards = shards;
    const McEstimate s = estimate(obtuse, cfg);
    CHECK(s.p_hat == one.p_hat);
    CHECK(s.standard_error == one.standard_error);
  }
}

TEST_CASE("uniformity checks") {
  McConfig cfg;
  cfg.seed = 7;
  cfg.n_samples = 1000000;
  double zsum = 0.0;
  for (std::uint64_t i = 0; i < cfg.n_samples; ++i) zsum += sample_point(cfg.seed, i).z;
  const double zmean = zsum / static_cast<double>(cfg.n_samples);
  const double z_stderr = std::sqrt(1.0 / 3.0 / static_cast<double>(cfg.n_samples));
  CHECK(std::fabs(zmean) < 4.0 * z_stderr);

  const McEstimate hemi = estimate(predicate_orientation_positive(), cfg);
  CHECK(std::fabs(hemi.p_hat - 0.5) < 4.0 * hemi.standard_error);
}

TEST_CASE("estimates agree with the exact values") {
  McConfig cfg;
  cfg.seed = 42;
  cfg.n_samples = 1000000;
  cfg.shards = 4;

  const McEstimate obtuse = estimate(predicate_obtuse(), cfg);
  CHECK(std::fabs(obtuse.p_hat - 0.75) <= 4.0 * obtuse.standard_error);

  for (ClusterId k : kAllClusters) {
    const McEstimate tall = estimate(predicate_tall(k), cfg);
    CHECK(std::fabs(tall.p_hat - 0.5) <= 4.0 * tall.standard_error);
  }

  const McEstimate joint = estimate(
      predicate_and(predicate_tall_canonical(), predicate_acute()), cfg);
  CHECK(std::fabs(joint.p_hat - (0.5 - tau_closed_form())) <=
        4.0 * joint.standard_error);
}

TEST_CASE("conditional estimates") {
  McConfig cfg;
  cfg.seed = 11;
  cfg.n_samples = 1000000;
  const McEstimate e =
      estimate_conditional(predicate_acute(), predicate_tall_canonical(), cfg);
  CHECK(std::fabs(e.p_hat - (1.0 - 2.0 * tau_closed_form())) <=
        4.0 * e.standard_error);
  CHECK(e.n < cfg.n_samples);

  const EventPredicate empty =
      predicate_and(predicate_tall(ClusterId::one), predicate_flat(ClusterId::one));
  McConfig tiny;
  tiny.seed = 1;
  tiny.n_samples = 1000;
  CHECK_THROWS_AS(estimate_conditional(predicate_obtuse(), empty, tiny),
                  InsufficientConditionSamples);
}

TEST_CASE("MC agrees with quadrature for every catalog region event") {
  EvalOptions opts;
  opts.tol = 3e-4;
  McConfig cfg;
  cfg.seed = 42;
  cfg.n_samples = 1000000;
  cfg.shards = 4;
  opts.mc = cfg;
  for (const CatalogEntry& e : catalog_entries(ClusterConvention::canonical())) {
    if (!e.mc_supported) continue;
    const ProbabilityResult r = evaluate_entry(e, opts);
    REQUIRE(r.mc.has_value());
    INFO("entry ", r.event);
    CHECK(std::fabs(*r.mc - r.quad) <= 4.0 * *r.mc_stderr + r.quad_err);
  }
}

TEST_CASE("coverage of the 95 percent intervals at fixed seed") {
  // Documented fixed seed for the coverage property; the events are
  // correlated (one sample stream), so individual seeds fluctuate around the
  // nominal 19/20.
  McConfig cfg;
  cfg.seed = 1;
  cfg.n_samples = 1000000;
  cfg.shards = 4;

  const double tau = tau_closed_form();
  struct Case {
    EventPredicate pred;
    double exact;
  };
  std::vector<Case> cases;
  cases.push_back({predicate_obtuse(), 0.75});
  cases.push_back({predicate_acute(), 0.25});
  for (ClusterId k : kAllClusters) {
    cases.push_back({predicate_obtuse_at(k), 0.25});
    cases.push_back({predicate_tall(k), 0.5});
    cases.push_back({predicate_flat(k), 0.5});
  }
  cases.push_back({predicate_tall_canonical(), 0.5});
  cases.push_back({predicate_flat_canonical(), 0.5});
  cases.push_back({predicate_and(predicate_tall_canonical(), predicate_acute()),
                   0.5 - tau});
  cases.push_back({predicate_and(predicate_tall_canonical(), predicate_obtuse()), tau});
  cases.push_back({predicate_and(predicate_flat_canonical(), predicate_acute()),
                   tau - 0.25});
  cases.push_back({predicate_and(predicate_flat_canonical(), predicate_obtuse()),
                   0.75 - tau});
  cases.push_back({predicate_orientation_positive(), 0.5});
  cases.push_back(
      {predicate_and(predicate_obtuse(), predicate_orientation_positive()), 0.375});
  // Fixed-cluster tall&obtuse has the closed form (2/pi) asin(1/sqrt 3).
  cases.push_back({predicate_and(predicate_acute(), predicate_tall(ClusterId::one)),
                   0.5 - 0.3918265520306074});
  REQUIRE(cases.size() == 20);

  int covered = 0;
  for (const Case& c : cases) {
    const McEstimate e = estimate(c.pred, cfg);
    if (std::fabs(e.p_hat - c.exact) <= 1.96 * e.standard_error) ++covered;
  }
  CHECK(covered >= 18);
}

TEST_CASE("consistency sweep finds no disagreement outside the band") {
  McConfig cfg;
  cfg.seed = 5;
  cfg.n_samples = 20000;
  cfg.shards = 4;
  const SweepReport r = consistency_sweep(cfg);
  CHECK(r.n_checked + r.n_boundary_excluded == r.n);
  CHECK(r.disagreements == 0);
}

TEST_CASE("sweep flags an injected fault") {
  McConfig cfg;
  cfg.seed = 5;
  cfg.n_samples = 5000;
  const SweepReport r = consistency_sweep(cfg, 1e-6, 0.4);
  CHECK(r.disagreements > 0);
  CHECK(r.by_check.at("angle") > 0);
}

TEST_CASE("sweep counts boundary exclusions") {
  McConfig cfg;
  cfg.seed = 5;
  cfg.n_samples = 5000;
  const SweepReport r = consistency_sweep(cfg, 0.05);
  CHECK(r.n_boundary_excluded > 0);
  CHECK(r.disagreements == 0);
}

// Copyright (c) 2026 trishape contributors
// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include "trishape/montecarlo.hpp"

namespace {

using namespace trishape;

void BM_sample_point(benchmark::State& state) {
  std::uint64_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_point(42, i++));
  }
}
BENCHMARK(BM_sample_point);

void BM_estimate_obtuse(benchmark::State& state) {
  McConfig cfg;
  cfg.seed = 42;
  cfg.n_samples = static_cast<std::uint64_t>(state.range(0));
  cfg.shards = static_cast<std::uint32_t>(state.range(1));
  const EventPredicate obtuse = predicate_obtuse();
  for (auto _ : state) {
    benchmark::DoNotOptimize(estimate(obtuse, cfg));
  }
}
BENCHMARK(BM_estimate_obtuse)
    ->Args({1000000, 1})
    ->Args({1000000, 8})
    ->Unit(benchmark::kMillisecond);

void BM_consistency_sweep(benchmark::State& state) {
  McConfig cfg;
  cfg.seed = 42;
  cfg.n_samples = 10000;
  cfg.shards = 4;
  for (auto _ : state) {
    benchmark::DoNotOptimize(consistency_sweep(cfg));
  }
}
BENCHMARK(BM_consistency_sweep)->Unit(benchmark::kMillisecond);

}  // namespace

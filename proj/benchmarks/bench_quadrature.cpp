// Copyright (c) 2026 trishape contributors
// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include "trishape/measure.hpp"

namespace {

using namespace trishape;

void BM_cap_area_aligned(benchmark::State& state) {
  QuadratureOptions opts;
  opts.tol = 1.0 / static_cast<double>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(area_quadrature(predicate_obtuse_at(ClusterId::one), opts));
  }
}
BENCHMARK(BM_cap_area_aligned)->Arg(100000)->Arg(1000000);

void BM_obtuse_union_unaligned(benchmark::State& state) {
  QuadratureOptions opts;
  opts.tol = 1.0 / static_cast<double>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(area_quadrature(predicate_obtuse(), opts));
  }
}
BENCHMARK(BM_obtuse_union_unaligned)->Arg(10000)->Arg(100000)
    ->Unit(benchmark::kMillisecond);

void BM_joint_cell_canonical(benchmark::State& state) {
  QuadratureOptions opts;
  opts.tol = 1e-4;
  const EventPredicate cell =
      predicate_and(predicate_tall_canonical(), predicate_acute());
  for (auto _ : state) {
    benchmark::DoNotOptimize(area_quadrature(cell, opts));
  }
}
BENCHMARK(BM_joint_cell_canonical)->Unit(benchmark::kMillisecond);

void BM_arc_fraction(benchmark::State& state) {
  const SphereCurve cap = right_cap_boundary(ClusterId::one);
  const EventPredicate tall = predicate_tall_canonical();
  for (auto _ : state) {
    benchmark::DoNotOptimize(arc_fraction(cap, tall));
  }
}
BENCHMARK(BM_arc_fraction)->Unit(benchmark::kMillisecond);

}  // namespace

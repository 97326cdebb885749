// Copyright (c) 2026 trishape contributors
// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include "trishape/montecarlo.hpp"
#include "trishape/shape_map.hpp"

namespace {

using namespace trishape;

Triangle triangle_for(std::uint64_t i) {
  return representative_triangle(sample_point(77, i), ClusterId::one);
}

void BM_classify_angle(benchmark::State& state) {
  std::uint64_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(classify_angle(triangle_for(i++ % 4096)));
  }
}
BENCHMARK(BM_classify_angle);

void BM_shape_point(benchmark::State& state) {
  const Triangle t = triangle_for(3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(shape_point(t, ClusterId::one));
  }
}
BENCHMARK(BM_shape_point);

void BM_representative_triangle(benchmark::State& state) {
  const ShapePoint p = sample_point(77, 9);
  for (auto _ : state) {
    benchmark::DoNotOptimize(representative_triangle(p, ClusterId::one));
  }
}
BENCHMARK(BM_representative_triangle);

void BM_canonical_cluster(benchmark::State& state) {
  const ShapePoint p = sample_point(77, 11);
  for (auto _ : state) {
    benchmark::DoNotOptimize(canonical_cluster(p));
  }
}
BENCHMARK(BM_canonical_cluster);

}  // namespace

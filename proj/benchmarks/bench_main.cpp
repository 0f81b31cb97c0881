// Copyright 2026 The tropfan Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <random>

#include "fixtures.hpp"
#include "tropfan/chow.hpp"
#include "tropfan/criteria.hpp"
#include "tropfan/homology.hpp"
#include "tropfan/zlinalg.hpp"

namespace tropfan {
namespace {

using namespace tropfan::testing;

void BM_CubeCohomologyTable(benchmark::State& state) {
  Fan fan(cube());
  Compactification comp(fan);
  Sheaf sheaf(comp);
  for (auto _ : state) {
    for (int p = 0; p <= fan.dim(); ++p) {
      GradedComplex c = build_complex(sheaf, Space::kCompactification, p, Variant::kCohomology);
      benchmark::DoNotOptimize(groups(c, Coefficients::kZ));
    }
  }
}
BENCHMARK(BM_CubeCohomologyTable)->Unit(benchmark::kMillisecond);

void BM_CubicalComplexU24(benchmark::State& state) {
  Fan fan(u24());
  Compactification comp(fan);
  Sheaf sheaf(comp);
  for (auto _ : state) {
    for (int p = 0; p <= fan.dim(); ++p)
      benchmark::DoNotOptimize(groups(cubical_complex(sheaf, p, Coefficients::kZ), Coefficients::kZ));
  }
}
BENCHMARK(BM_CubicalComplexU24)->Unit(benchmark::kMillisecond);

void BM_ManifoldCheckK4(benchmark::State& state) {
  Fan fan(k4());
  Weights w = unit_weights(fan);
  for (auto _ : state) benchmark::DoNotOptimize(homology_manifold_check(fan, w, Coefficients::kZ));
}
BENCHMARK(BM_ManifoldCheckK4)->Unit(benchmark::kMillisecond);

void BM_ChowGroupsK4(benchmark::State& state) {
  Fan fan(k4());
  for (auto _ : state) {
    for (int k = 0; k <= fan.dim(); ++k) benchmark::DoNotOptimize(chow_group(fan, k, Coefficients::kZ));
  }
}
BENCHMARK(BM_ChowGroupsK4)->Unit(benchmark::kMillisecond);

void BM_Snf(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> dist(-9, 9);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = dist(rng);
  for (auto _ : state) benchmark::DoNotOptimize(snf(m));
}
BENCHMARK(BM_Snf)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

}  // namespace
}  // namespace tropfan

BENCHMARK_MAIN();

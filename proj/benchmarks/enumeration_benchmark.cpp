// Copyright 2026 The Authors.
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

#include "mapdelta/delta_matroid.hpp"
#include "mapdelta/fixtures.hpp"
#include "mapdelta/reconstruct.hpp"
#include "mapdelta/subgraph.hpp"

namespace {

using namespace mapdelta;

// Random maps with exactly `m` edges: retry seeds until the draw hits m.
NamedMap random_map_with_edges(std::size_t m) {
  for (std::uint64_t seed = 1;; ++seed) {
    auto named = random_map(seed, m);
    if (named.map.edge_count() == m) return named;
  }
}

void BM_EnumerateGammaK5Torus(benchmark::State& state) {
  auto named = fixture("k5torus");
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_feasible_gamma(named.map));
}
BENCHMARK(BM_EnumerateGammaK5Torus);

void BM_EnumerateGammaRandom(benchmark::State& state) {
  auto named = random_map_with_edges(static_cast<std::size_t>(state.range(0)));
  EnumerateOptions options;
  options.threads = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_feasible_gamma(named.map, options));
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << state.range(0)));
}
BENCHMARK(BM_EnumerateGammaRandom)->ArgsProduct({{8, 12, 16}, {1, 4}})->UseRealTime()->Unit(benchmark::kMillisecond);

void BM_EnumerateKRandom(benchmark::State& state) {
  auto named = random_map_with_edges(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_feasible_k(named.map));
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << state.range(0)));
}
BENCHMARK(BM_EnumerateKRandom)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_SymmetricExchangeK5Torus(benchmark::State& state) {
  auto family = enumerate_feasible_gamma(fixture("k5torus").map);
  for (auto _ : state) benchmark::DoNotOptimize(check_symmetric_exchange(family));
}
BENCHMARK(BM_SymmetricExchangeK5Torus)->Unit(benchmark::kMillisecond);

void BM_FindHamiltonian(benchmark::State& state) {
  auto named = random_map_with_edges(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(find_hamiltonian(named.map));
}
BENCHMARK(BM_FindHamiltonian)->Arg(8)->Arg(24);

void BM_RoundtripK5Torus(benchmark::State& state) {
  auto named = fixture("k5torus");
  for (auto _ : state) benchmark::DoNotOptimize(roundtrip_check(named.map));
}
BENCHMARK(BM_RoundtripK5Torus);

}  // namespace

BENCHMARK_MAIN();

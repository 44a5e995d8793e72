// Copyright 2026 The vgroups Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "vgroups/braid.hpp"
#include "vgroups/reps.hpp"

namespace {

using namespace vgroups;

void BM_EvaluatePsi(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  const auto len = static_cast<std::size_t>(state.range(1));
  const auto rep = Representation::psi(n);
  const auto b = random_braid(n, len, Theory::Virtual, 42);
  for (auto _ : state) benchmark::DoNotOptimize(rep.evaluate(b));
}
BENCHMARK(BM_EvaluatePsi)->Args({3, 8})->Args({4, 12})->Args({4, 20});

void BM_EvaluateKishinoBraid(benchmark::State& state) {
  const auto rep = Representation::psi(3);
  const auto kb = parse_braid(
      "s2 s1 r2 s1^-1 s2^-1 r1 s2^-1 s1^-1 r2 s1 s2 s2 s1 r2 s1^-1 s2^-1 r1 s2^-1 s1^-1 r2 s1 s2", 3,
      Theory::Virtual);
  for (auto _ : state) benchmark::DoNotOptimize(rep.evaluate(kb));
}
BENCHMARK(BM_EvaluateKishinoBraid);

void BM_CheckRelations(benchmark::State& state) {
  const auto rep = Representation::psi(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(check_relations(rep));
}
BENCHMARK(BM_CheckRelations)->Arg(3)->Arg(4)->Arg(6);

}  // namespace

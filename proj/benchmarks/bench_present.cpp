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
#include "vgroups/present.hpp"

namespace {

using namespace vgroups;

void BM_TietzeSimplify(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  const auto p = group_of_virtual_link(random_braid(n, 12, Theory::Virtual, 7));
  for (auto _ : state) benchmark::DoNotOptimize(tietze_simplify(p));
}
BENCHMARK(BM_TietzeSimplify)->Arg(2)->Arg(3)->Arg(4);

void BM_AbelianInvariants(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  const auto p = group_of_virtual_link(random_braid(n, 16, Theory::Virtual, 9));
  for (auto _ : state) benchmark::DoNotOptimize(abelian_invariants(p));
}
BENCHMARK(BM_AbelianInvariants)->Arg(3)->Arg(6);

}  // namespace

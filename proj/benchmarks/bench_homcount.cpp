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
#include "vgroups/homcount.hpp"
#include "vgroups/present.hpp"

namespace {

using namespace vgroups;

const Presentation& trefoil() {
  static const Presentation p = group_of_virtual_link(parse_braid("s1 s1 r1", 2, Theory::Virtual));
  return p;
}

void BM_CountHoms(benchmark::State& state, const char* group) {
  const auto g = builtin_group(group);
  const HomCountOptions opts{kDefaultHomCountCap, static_cast<unsigned>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(count_homs(trefoil(), g, opts));
}
BENCHMARK_CAPTURE(BM_CountHoms, sym3, "sym3")->Arg(1);
BENCHMARK_CAPTURE(BM_CountHoms, alt4, "alt4")->Arg(1);
BENCHMARK_CAPTURE(BM_CountHoms, sym4, "sym4")->Arg(1)->Arg(4)->UseRealTime();

void BM_Fingerprint(benchmark::State& state) {
  const auto battery = default_battery();
  const auto p = tietze_simplify(trefoil()).presentation;
  for (auto _ : state) benchmark::DoNotOptimize(fingerprint(p, battery));
}
BENCHMARK(BM_Fingerprint);

}  // namespace

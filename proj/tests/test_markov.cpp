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

#include <string>
#include <vector>

#include "doctest.h"
#include "vgroups/markov.hpp"

using namespace vgroups;

namespace {

BraidWord v(const char* text, std::uint32_t n) { return parse_braid(text, n, Theory::Virtual); }

FuzzConfig small_config(Theory t, std::size_t trials, std::uint64_t seed) {
  FuzzConfig c;
  c.theory = t;
  c.trials = trials;
  c.strands = 3;
  c.length = 8;
  c.depth = 4;
  c.seed = seed;
  return c;
}

}  // namespace

TEST_CASE("move examples") {
  CHECK(serialize(stabilize(v("s1 s1 r1", 2), StabilizationKind::Positive)) == "s1 s1 r1 s2");
  CHECK(serialize(conjugate(v("s1", 2), BraidLetter::rho(1))) == "r1 s1 r1");
  const auto rels = defining_relations(Theory::Virtual, 3);
  for (const auto& r : rels) {
    if (r.name == "sigma-braid") {
      CHECK(serialize(rewrite_with_relation(v("s1 s2 s1", 3), r, 0)) == "s2 s1 s2");
    }
  }
}

TEST_CASE("random moves are legal single moves") {
  Rng rng(3);
  for (auto t : {Theory::Virtual, Theory::Welded}) {
    std::vector<int> seen(4, 0);
    for (int trial = 0; trial < 400; ++trial) {
      const auto b = random_braid(3, 8, t, static_cast<std::uint64_t>(trial));
      const auto step = random_move(b, rng);
      ++seen[static_cast<int>(step.move.kind)];
      CHECK(step.result.theory() == t);
      switch (step.move.kind) {
        case MoveKind::RelationRewrite:
          CHECK(step.result.strands() == b.strands());
          CHECK(underlying_permutation(step.result) == underlying_permutation(b));
          break;
        case MoveKind::Conjugation:
          CHECK(step.result.strands() == b.strands());
          CHECK(step.result == conjugate(b, step.move.conjugator));
          break;
        case MoveKind::Stabilization:
          CHECK(step.result.strands() == b.strands() + 1);
          CHECK(step.result == stabilize(b, step.move.stabilization));
          break;
        case MoveKind::Exchange: {
          CHECK(t == Theory::Virtual);
          REQUIRE(step.source.has_value());
          CHECK(step.result.strands() == b.strands() + 1);
          CHECK(underlying_permutation(*step.source) == underlying_permutation(step.result));
          break;
        }
      }
      CHECK_FALSE(step.move.describe().empty());
    }
    CHECK(seen[0] > 0);
    CHECK(seen[1] > 0);
    CHECK(seen[2] > 0);
    CHECK((seen[3] > 0) == (t == Theory::Virtual));
  }
}

TEST_CASE("max strands stops growth") {
  Rng rng(4);
  const auto b = random_braid(3, 6, Theory::Virtual, 1);
  for (int k = 0; k < 200; ++k) {
    const auto step = random_move(b, rng, MoveOptions{3});
    CHECK(step.result.strands() == 3);
  }
}

TEST_CASE("traces record strand changes only at growth steps") {
  const auto r = run_trial(small_config(Theory::Virtual, 1, 77), 0);
  CHECK(r.trace.steps.size() == 4);
  auto prev = r.trace.initial.strands();
  for (const auto& s : r.trace.steps) {
    if (s.move.kind == MoveKind::RelationRewrite || s.move.kind == MoveKind::Conjugation) {
      CHECK(s.result.strands() == prev);
    }
    prev = s.result.strands();
  }
  CHECK(r.trace.to_text().find("start [") != std::string::npos);
}

TEST_CASE("depth 0 is trivially clean") {
  auto c = small_config(Theory::Virtual, 20, 5);
  c.depth = 0;
  const auto report = fuzz(c);
  CHECK(report.ok());
  CHECK(report.trials_run == 20);
}

TEST_CASE("exchange pair of the worked example has equal fingerprints") {
  const auto b1 = v("s1 r1 s1", 2);
  const auto pair = exchange_pair(b1, inverse(b1), ExchangeSide::Right);
  FuzzConfig c;
  const auto battery = default_battery();
  CHECK(fingerprint(invariant_presentation(pair.classical_form, c), battery) ==
        fingerprint(invariant_presentation(pair.virtual_form, c), battery));
}

TEST_CASE("campaigns find no mismatches") {
  for (auto t : {Theory::Virtual, Theory::Welded}) {
    const auto report = fuzz(small_config(t, 60, 9));
    CHECK_MESSAGE(report.ok(), report.to_text());
    CHECK(report.comparisons >= 60);
  }
  for (int k : {1, 2}) {
    auto c = small_config(Theory::Welded, 40, 10);
    c.wada = k;
    const auto report = fuzz(c);
    CHECK_MESSAGE(report.ok(), report.to_text());
  }
}

TEST_CASE("distinct groups give distinct fingerprints") {
  const auto battery = default_battery();
  FuzzConfig c;
  const auto a = fingerprint(invariant_presentation(v("s1 s1 r1", 2), c), battery);
  const auto b = fingerprint(invariant_presentation(v("1", 2), c), battery);
  CHECK(a != b);
}

TEST_CASE("determinism") {
  auto c = small_config(Theory::Virtual, 30, 123);
  const auto a = fuzz(c);
  const auto b = fuzz(c);
  CHECK(a.to_text() == b.to_text());
  c.jobs = 4;
  const auto d = fuzz(c);
  CHECK(d.to_text() == a.to_text());
  CHECK(run_trial(c, 7).trace.to_text() == run_trial(c, 7).trace.to_text());
}

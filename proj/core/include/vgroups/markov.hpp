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

// Randomized check that link-group fingerprints survive the moves relating
// braids with equivalent closures: defining-relation rewrites, conjugation,
// right stabilization, and (virtual only) right/left exchange moves.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vgroups/braid.hpp"
#include "vgroups/homcount.hpp"
#include "vgroups/rng.hpp"

namespace vgroups {

enum class MoveKind : std::uint8_t { RelationRewrite, Conjugation, Stabilization, Exchange };

struct Move {
  MoveKind kind = MoveKind::Conjugation;
  std::string relation;  // RelationRewrite: DefiningRelation::label()
  std::size_t site = 0;  // RelationRewrite: letter index
  BraidLetter conjugator{};
  StabilizationKind stabilization = StabilizationKind::Positive;
  ExchangeSide side = ExchangeSide::Right;
  std::size_t cut = 0;  // Exchange: b = b1 . b2 with |b1| = cut
  bool to_virtual = true;  // Exchange direction

  std::string describe() const;
};

// One applied move. Exchange moves are generated constructively from a cut
// b = b1 . b2 of the current braid: `source` holds one exchange form and
// `result` the other, and the walk continues from `result`.
struct MoveStep {
  Move move;
  std::optional<BraidWord> source;
  BraidWord result;
};

struct MoveTrace {
  Theory theory = Theory::Virtual;
  BraidWord initial;
  std::vector<MoveStep> steps;

  std::string to_text() const;
};

struct MoveOptions {
  // Stabilization and exchange are skipped once this many strands are
  // reached; 0 means unlimited.
  std::uint32_t max_strands = 0;
};

// Samples a move kind uniformly from the theory's menu, resampling kinds that
// have no applicable site.
MoveStep random_move(const BraidWord& b, Rng& rng, const MoveOptions& options = {});

struct FuzzConfig {
  Theory theory = Theory::Virtual;
  std::size_t trials = 100;
  std::uint32_t strands = 4;  // each trial draws 2..strands
  std::size_t length = 10;    // each trial draws 0..length letters
  std::size_t depth = 6;      // moves per trial
  std::uint64_t seed = 1;
  int wada = 0;  // 0: link group; 1 or 2: Wada group (welded only)
  int wada_h = 1;
  std::vector<FiniteGroupTable> battery = default_battery();
  HomCountOptions homcount{};
  std::size_t tietze_budget = kDefaultTietzeBudget;
  MoveOptions moves{};
  unsigned jobs = 1;  // concurrent trials
};

struct FuzzMismatch {
  std::size_t trial = 0;
  std::uint64_t trial_seed = 0;
  MoveTrace trace;
  std::size_t segment_start = 0;  // step index where the compared segment began
  Fingerprint before;
  Fingerprint after;
};

struct FuzzTrialResult {
  std::size_t trial = 0;
  std::uint64_t trial_seed = 0;
  MoveTrace trace;
  std::size_t comparisons = 0;
  std::optional<std::string> skipped;  // reason, when a limit was hit
  std::optional<FuzzMismatch> mismatch;
};

struct FuzzReport {
  FuzzConfig config;
  std::size_t trials_run = 0;
  std::size_t comparisons = 0;
  std::vector<std::pair<std::size_t, std::string>> skipped;
  std::vector<FuzzMismatch> mismatches;

  bool ok() const { return mismatches.empty(); }
  std::string to_text() const;
};

// The presentation fingerprinted for a braid under `config` (link group or
// Wada group), after Tietze simplification.
Presentation invariant_presentation(const BraidWord& b, const FuzzConfig& config);

// Single trial, replayable from (config.seed, trial).
FuzzTrialResult run_trial(const FuzzConfig& config, std::size_t trial);

FuzzReport fuzz(const FuzzConfig& config);

}  // namespace vgroups

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

#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "vgroups/freegroup.hpp"
#include "vgroups/present.hpp"

namespace testing {

inline oracle::Word to_oracle(const vgroups::Word& w) { return oracle::parse(w.to_string()); }

inline vgroups::Word from_oracle(vgroups::Ambient a, const oracle::Word& w) {
  return vgroups::Word::parse(a, oracle::print(w));
}

// Unreduced random letter sequence over `a`.
inline std::vector<vgroups::Letter> random_letters(std::mt19937_64& rng, vgroups::Ambient a,
                                                   std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<std::size_t> gen(0, a.rank() - 1);
  std::bernoulli_distribution inv(0.5);
  std::vector<vgroups::Letter> out;
  const auto n = len(rng);
  for (std::size_t k = 0; k < n; ++k) {
    out.push_back(vgroups::Letter{a.generator(gen(rng)), static_cast<std::int8_t>(inv(rng) ? -1 : 1)});
  }
  return out;
}

inline vgroups::Word random_word(std::mt19937_64& rng, vgroups::Ambient a, std::size_t max_len) {
  const auto ls = random_letters(rng, a, max_len);
  return vgroups::reduce(a, ls);
}

inline vgroups::Presentation random_presentation(std::mt19937_64& rng, std::uint32_t max_gens,
                                                 std::size_t max_rels, std::size_t max_len) {
  std::uniform_int_distribution<std::uint32_t> gens(1, max_gens);
  std::uniform_int_distribution<std::size_t> rels(0, max_rels);
  const vgroups::Ambient a{gens(rng), false};
  std::vector<vgroups::Word> rs;
  const auto count = rels(rng);
  for (std::size_t k = 0; k < count; ++k) rs.push_back(random_word(rng, a, max_len));
  return vgroups::Presentation(a, a.generators(), rs);
}

}  // namespace testing

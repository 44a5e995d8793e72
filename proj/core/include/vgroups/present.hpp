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

// Finite presentations of link groups built from braid closures, Tietze
// simplification, and abelian invariants via Smith normal form.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vgroups/braid.hpp"
#include "vgroups/freegroup.hpp"
#include "vgroups/matrix.hpp"

namespace vgroups {

// <generators || relators>. Relators are stored cyclically reduced and
// trivial relators are dropped on construction.
class Presentation {
 public:
  // Throws DomainError if a relator uses a generator outside the list or a
  // relator's ambient differs from `ambient`.
  Presentation(Ambient ambient, std::vector<GeneratorId> generators, std::vector<Word> relators);
  // Ambient inferred from the generator list.
  Presentation(std::vector<GeneratorId> generators, std::vector<Word> relators);

  const Ambient& ambient() const { return ambient_; }
  const std::vector<GeneratorId>& generators() const { return generators_; }
  const std::vector<Word>& relators() const { return relators_; }
  bool has_generator(GeneratorId g) const;
  // Sum of relator lengths.
  std::size_t total_length() const;

  // "gens: x1 x2 y" followed by one "rel: <word>" line per relator.
  std::string to_text() const;
  // {"generators": [...], "relators": [...]}
  std::string to_structured() const;

  // Accepts either format; structured input is recognised by a leading '{'.
  static Presentation parse(std::string_view text);

  // Same generator list and same relator words, ignoring ambient.
  bool same_as(const Presentation& other) const;

 private:
  Ambient ambient_;
  std::vector<GeneratorId> generators_;
  std::vector<Word> relators_;
};

// <x_1..x_n, y || x_i = psi(b)(x_i)>. Accepts virtual or classical words.
Presentation group_of_virtual_link(const BraidWord& b);
// <x_1..x_n || x_i = b(x_i)> under the conjugating action. Accepts welded or
// classical words.
Presentation group_of_welded_link(const BraidWord& b);
// <x_1..x_n || x_i = b(x_i)> under the Artin action.
Presentation group_of_classical_link(const BraidWord& b);
// <x_1..x_n || x_i = chi_k(b)(x_i)>. Only k = 1, 2 give link invariants;
// k = 3, 4 are rejected with DomainError.
Presentation wada_group(const BraidWord& b, int k, int h = 1);

// Kills y: removes it from the generators and deletes its letters from every
// relator. Throws DomainError if y is not a generator.
Presentation quotient_y(const Presentation& p);

inline constexpr std::size_t kDefaultTietzeBudget = 100'000;

// One Tietze move, or nullopt at a fixpoint:
//   - drop a relator equal to an earlier one up to cyclic permutation and
//     inversion;
//   - otherwise pick the shortest relator (earliest on ties) in which some
//     generator occurs exactly once, solve it for that generator (highest x
//     index first, y last) and substitute everywhere.
std::optional<Presentation> tietze_step(const Presentation& p);

struct TietzeResult {
  Presentation presentation;
  bool budget_exhausted = false;
  std::size_t steps = 0;
};

// Iterates tietze_step to a fixpoint. If a step would push the total relator
// length above `budget`, stops and returns the last presentation within it
// with budget_exhausted set.
TietzeResult tietze_simplify(const Presentation& p, std::size_t budget = kDefaultTietzeBudget);

// Number of generators if simplification reaches a presentation with no
// relators (the group is then free of that rank); nullopt is inconclusive.
std::optional<std::size_t> free_rank_certificate(const Presentation& p,
                                                 std::size_t budget = kDefaultTietzeBudget);

// Rows are relators, columns generators, entries exponent sums.
IntegerMatrix relation_matrix(const Presentation& p);

struct SmithForm {
  IntegerMatrix u;  // unimodular, rows x rows
  IntegerMatrix d;  // u * m * v
  IntegerMatrix v;  // unimodular, cols x cols
  std::vector<std::int64_t> diagonal;  // min(rows, cols) entries, d_1 | d_2 | ...
};

// Throws LimitExceeded if an intermediate entry leaves the int64 range.
SmithForm smith_normal_form(const IntegerMatrix& m);

struct AbelianInvariants {
  std::size_t free_rank = 0;
  std::vector<std::int64_t> torsion;  // entries >= 2, each dividing the next

  // e.g. "Z^2", "Z + Z/2", "0"
  std::string to_string() const;
  bool operator==(const AbelianInvariants&) const = default;
};

AbelianInvariants abelian_invariants(const Presentation& p);

}  // namespace vgroups

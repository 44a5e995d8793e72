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

// Braid words over the classical {s_i}, virtual {s_i, r_i} and welded
// {s_i, a_i} alphabets, the defining-relation catalogue of each theory, and
// the moves that relate braids with equivalent closures.

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vgroups/rng.hpp"

namespace vgroups {

enum class Theory : std::uint8_t { Classical, Virtual, Welded };

std::string_view to_string(Theory t);
Theory parse_theory(std::string_view text);

enum class Family : std::uint8_t { Sigma, Rho, Alpha };

bool family_allowed(Family f, Theory t);

// sigma_i^{+-1}, rho_i or alpha_i. Positions are 1-based. Rho and Alpha are
// involutions and always carry sign +1.
struct BraidLetter {
  Family family = Family::Sigma;
  std::int8_t sign = 1;
  std::uint32_t position = 1;

  static constexpr BraidLetter sigma(std::uint32_t i, int sign = 1) {
    return {Family::Sigma, static_cast<std::int8_t>(sign < 0 ? -1 : 1), i};
  }
  static constexpr BraidLetter rho(std::uint32_t i) { return {Family::Rho, 1, i}; }
  static constexpr BraidLetter alpha(std::uint32_t i) { return {Family::Alpha, 1, i}; }

  constexpr BraidLetter inverse() const {
    return family == Family::Sigma ? sigma(position, -sign) : *this;
  }
  constexpr bool cancels(const BraidLetter& o) const {
    return family == o.family && position == o.position &&
           (family != Family::Sigma || sign == -o.sign);
  }

  std::string to_string() const;

  constexpr bool operator==(const BraidLetter&) const = default;
};

// A normalized braid word on `strands` strands: no adjacent s_i s_i^-1,
// s_i^-1 s_i, r_i r_i or a_i a_i. Braid relations are never applied
// implicitly.
class BraidWord {
 public:
  // The empty braid on one strand.
  BraidWord() : BraidWord(1, Theory::Classical) {}
  // Throws DomainError on positions outside [1, strands) or letters illegal
  // for the theory.
  BraidWord(std::uint32_t strands, Theory theory, std::span<const BraidLetter> letters = {});

  std::uint32_t strands() const { return strands_; }
  Theory theory() const { return theory_; }
  std::span<const BraidLetter> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  bool operator==(const BraidWord&) const = default;

 private:
  std::uint32_t strands_;
  Theory theory_;
  std::vector<BraidLetter> letters_;
};

// Grammar: word := "1" | token (" " token)*, token := ("s"|"r"|"a") digits
// ["^-1"]. r_k^-1 and a_k^-1 normalize to r_k and a_k.
BraidWord parse_braid(std::string_view text, std::uint32_t strands, Theory theory);
std::string serialize(const BraidWord& b);

BraidWord concat(const BraidWord& a, const BraidWord& b);
BraidWord inverse(const BraidWord& b);

// Same letters re-read in another theory (e.g. a classical word viewed as
// virtual). Throws if a letter is illegal there.
BraidWord retheory(const BraidWord& b, Theory theory);

// The projection VB_n -> WB_n: r_i becomes a_i.
BraidWord virtual_to_welded(const BraidWord& b);

// perm[k] is the bottom position (0-based) reached by the strand starting at
// top position k.
using Permutation = std::vector<std::uint32_t>;

Permutation underlying_permutation(const BraidWord& b);
// Apply p, then q.
Permutation then(const Permutation& p, const Permutation& q);
std::size_t cycle_count(const Permutation& p);
// Closure is a knot iff the permutation is a single n-cycle.
bool closure_is_knot(const BraidWord& b);

// g . b . g^-1, normalized.
BraidWord conjugate(const BraidWord& b, BraidLetter g);

enum class StabilizationKind : std::uint8_t { Positive, Negative, Virtual };
std::string_view to_string(StabilizationKind k);

// b s_n, b s_n^-1, or b r_n (b a_n in welded theory) on n+1 strands.
BraidWord stabilize(const BraidWord& b, StabilizationKind kind);

// s_i -> s_{i+1} (and likewise r, a) on n+1 strands.
BraidWord shift(const BraidWord& b);

enum class ExchangeSide : std::uint8_t { Right, Left };
std::string_view to_string(ExchangeSide s);

struct ExchangePair {
  BraidWord classical_form;  // b1 s_n^-1 b2 s_n   (left: s(b1) s_1^-1 s(b2) s_1)
  BraidWord virtual_form;    // b1 r_n b2 r_n      (left: s(b1) r_1 s(b2) r_1)
};

// Both sides of a virtual exchange move on n+1 strands. b1, b2 must be
// virtual braids on the same n strands.
ExchangePair exchange_pair(const BraidWord& b1, const BraidWord& b2, ExchangeSide side);

// A defining relation (or a forbidden-move relation) left = right. Sides
// are kept as raw letter sequences so that involution relations such as
// r_i r_i = 1 are not erased by normalization.
struct DefiningRelation {
  Theory theory;
  std::uint32_t strands;
  std::string name;
  std::vector<BraidLetter> left;
  std::vector<BraidLetter> right;
  std::uint32_t i = 0;
  std::uint32_t j = 0;  // 0 when the relation has one parameter

  BraidWord left_word() const { return BraidWord(strands, theory, left); }
  BraidWord right_word() const { return BraidWord(strands, theory, right); }
  // e.g. "sigma-braid(i=1): s1 s2 s1 = s2 s1 s2"
  std::string label() const;
};

// Full presentation of B_n, VB_n or WB_n on n strands.
std::vector<DefiningRelation> defining_relations(Theory theory, std::uint32_t strands);

// Forbidden-move relations: F1 and F2 over the virtual alphabet; F2 over the
// welded alphabet (F1 is already a defining relation there). Empty for
// classical.
std::vector<DefiningRelation> forbidden_relations(Theory theory, std::uint32_t strands);

// Replaces the occurrence of rel.left (tried first) or rel.right starting at
// letter index `at` by the other side. Throws DomainError if neither side
// matches there.
BraidWord rewrite_with_relation(const BraidWord& b, const DefiningRelation& rel, std::size_t at);

// Letter indices where rel.left or rel.right occurs (non-empty sides only).
std::vector<std::size_t> relation_sites(const BraidWord& b, const DefiningRelation& rel);

// Uniform letters over the theory alphabet; normalized afterwards, so the
// result may be shorter than `length`. Requires strands >= 2.
BraidWord random_braid(std::uint32_t strands, std::size_t length, Theory theory, std::uint64_t seed);
BraidWord random_braid(std::uint32_t strands, std::size_t length, Theory theory, Rng& rng);
BraidLetter random_letter(std::uint32_t strands, Theory theory, Rng& rng);

}  // namespace vgroups

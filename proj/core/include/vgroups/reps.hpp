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

// Braid groups acting on free groups: Artin (B_n in Aut F_n), the extended
// representation psi of VB_n in Aut F_{n+1} = Aut <x_1..x_n, y>, the
// conjugating action of WB_n on F_n, and the Wada-type actions chi_k.

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vgroups/braid.hpp"
#include "vgroups/freegroup.hpp"

namespace vgroups {

enum class RepKind : std::uint8_t { Artin, Psi, Welded, Wada };

// Generator actions for a fixed strand count. Inverses are written down from
// the explicit formulas and verified on construction (Automorphism checks).
class Representation {
 public:
  static Representation artin(std::uint32_t strands);
  static Representation psi(std::uint32_t strands);
  static Representation welded(std::uint32_t strands);
  // type in 1..4; h is the exponent of type 1 and ignored otherwise.
  static Representation wada(std::uint32_t strands, int type, int h = 1);

  // "artin", "psi", "welded", "wada1".."wada4".
  static Representation by_name(std::string_view name, std::uint32_t strands, int wada_h = 1);

  RepKind kind() const { return kind_; }
  int wada_type() const { return wada_type_; }
  int wada_h() const { return wada_h_; }
  std::uint32_t strands() const { return strands_; }
  // The braid theory whose generators this representation assigns.
  Theory theory() const;
  Ambient target() const { return target_; }
  std::string name() const;

  // Classical words are accepted by every representation.
  bool accepts(Theory t) const { return t == theory() || t == Theory::Classical; }

  const Automorphism& generator_action(BraidLetter letter) const;

  // Left-to-right product of generator actions; identity for the empty word.
  Endomorphism evaluate(const BraidWord& b) const;
  Endomorphism evaluate(std::span<const BraidLetter> letters) const;

 private:
  Representation(RepKind kind, std::uint32_t strands, int wada_type, int wada_h);

  RepKind kind_;
  std::uint32_t strands_;
  int wada_type_;
  int wada_h_;
  Ambient target_;
  std::vector<Automorphism> sigma_;      // sigma_i at index i-1
  std::vector<Automorphism> sigma_inv_;  // sigma_i^-1
  std::vector<Automorphism> involution_;  // rho_i or alpha_i
};

struct RelationWitness {
  GeneratorId generator;
  Word left_image;
  Word right_image;
};

struct RelationReport {
  DefiningRelation relation;
  bool holds = false;
  std::optional<RelationWitness> witness;  // set iff !holds
};

// Evaluates both sides of every defining relation of rep's theory on
// rep.strands() strands, then every relation in `extra`. All relations are
// reported, failing or not.
std::vector<RelationReport> check_relations(const Representation& rep,
                                            std::span<const DefiningRelation> extra = {});

RelationReport check_relation(const Representation& rep, const DefiningRelation& rel);

// Deletes y from every x-image of an endomorphism of <x_1..x_n, y>, giving
// an endomorphism of <x_1..x_n>.
Endomorphism project_y(const Endomorphism& e);

}  // namespace vgroups

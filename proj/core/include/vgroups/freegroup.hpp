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

// Reduced words in free groups F = <x_1, ..., x_n [, y]> and endomorphisms
// given by generator images.
//
// Composition follows the left-to-right convention used for braids:
// compose(f, g) applies f first and then g, so the image of a generator is
// apply(g, apply(f, x)).

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vgroups/matrix.hpp"

namespace vgroups {

// A free generator: either x_k (k >= 1) or the distinguished generator y.
// Ordering puts x_1 < x_2 < ... < y.
class GeneratorId {
 public:
  static constexpr GeneratorId x(std::uint32_t index) { return GeneratorId(index); }
  static constexpr GeneratorId y() { return GeneratorId(kY); }

  constexpr bool is_y() const { return code_ == kY; }
  // 1-based x index; 0 for y.
  constexpr std::uint32_t index() const { return is_y() ? 0 : code_; }

  std::string name() const;

  constexpr auto operator<=>(const GeneratorId&) const = default;

 private:
  static constexpr std::uint32_t kY = std::numeric_limits<std::uint32_t>::max();
  constexpr explicit GeneratorId(std::uint32_t code) : code_(code) {}
  std::uint32_t code_;
};

struct Letter {
  GeneratorId gen;
  std::int8_t sign = 1;  // +1 or -1

  constexpr Letter inverse() const { return Letter{gen, static_cast<std::int8_t>(-sign)}; }
  constexpr bool cancels(const Letter& other) const {
    return gen == other.gen && sign == -other.sign;
  }
  constexpr bool operator==(const Letter&) const = default;
};

// Generator set of a free group: x_1..x_{x_count}, followed by y if with_y.
struct Ambient {
  std::uint32_t x_count = 0;
  bool with_y = false;

  bool contains(GeneratorId g) const {
    return g.is_y() ? with_y : (g.index() >= 1 && g.index() <= x_count);
  }
  std::size_t rank() const { return x_count + (with_y ? 1 : 0); }
  // Position of g in generators(); g must be contained.
  std::size_t position(GeneratorId g) const { return g.is_y() ? x_count : g.index() - 1; }
  GeneratorId generator(std::size_t pos) const {
    return pos == x_count ? GeneratorId::y() : GeneratorId::x(static_cast<std::uint32_t>(pos + 1));
  }
  std::vector<GeneratorId> generators() const;

  bool operator==(const Ambient&) const = default;
};

inline constexpr std::size_t kMaxWordLength = 1'000'000;

// A freely reduced word. Every constructor reduces; a Word longer than
// kMaxWordLength cannot exist (construction throws LimitExceeded).
class Word {
 public:
  Word() = default;
  explicit Word(Ambient ambient) : ambient_(ambient) {}

  // Single generator (or its inverse).
  static Word generator(Ambient ambient, GeneratorId g, int sign = 1);

  // Parses `x1 x2^-1 y` style text; "1" or blank is the identity.
  static Word parse(Ambient ambient, std::string_view text);

  const Ambient& ambient() const { return ambient_; }
  std::span<const Letter> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  std::string to_string() const;

  bool operator==(const Word&) const = default;

 private:
  friend Word reduce(Ambient ambient, std::span<const Letter> letters);
  friend class WordBuilder;

  Ambient ambient_;
  std::vector<Letter> letters_;
};

// Appends letters with on-the-fly free cancellation. The only way to build a
// Word from raw letters; used by every operation below.
class WordBuilder {
 public:
  explicit WordBuilder(Ambient ambient) : ambient_(ambient) {}

  void push(Letter l);
  void append(const Word& w);
  void append_inverse(const Word& w);
  std::size_t size() const { return letters_.size(); }

  Word build() &&;

 private:
  Ambient ambient_;
  std::vector<Letter> letters_;
};

// Unique freely reduced form of a raw letter sequence. Throws DomainError on a
// generator outside the ambient set.
Word reduce(Ambient ambient, std::span<const Letter> letters);

// Reduced product a.b. Throws DomainError on ambient mismatch.
Word concat(const Word& a, const Word& b);

Word invert(const Word& a);

struct CyclicReduction {
  Word core;
  Word conjugator;
};

// a = conjugator^-1 . core . conjugator with core cyclically reduced.
CyclicReduction cyclic_reduce(const Word& a);

int exponent_sum(const Word& w, GeneratorId g);
std::size_t occurrences(const Word& w, GeneratorId g);

// Deletes every letter of `g`, re-reducing over `target`.
Word erase_generator(const Word& w, GeneratorId g, Ambient target);

// A homomorphism F(domain) -> F(codomain) given by generator images, listed
// in Ambient::generators() order.
class Endomorphism {
 public:
  Endomorphism(Ambient domain, Ambient codomain, std::vector<Word> images);

  static Endomorphism identity(Ambient ambient);

  const Ambient& domain() const { return domain_; }
  const Ambient& codomain() const { return codomain_; }
  const Word& image(GeneratorId g) const;
  std::span<const Word> images() const { return images_; }

  bool operator==(const Endomorphism&) const = default;

 private:
  Ambient domain_;
  Ambient codomain_;
  std::vector<Word> images_;
};

Word apply(const Endomorphism& e, const Word& w);

// Left-to-right: the result maps x to apply(g, apply(f, x)).
Endomorphism compose(const Endomorphism& f, const Endomorphism& g);

bool is_identity(const Endomorphism& e);

// Entry (i, j) is the exponent sum of codomain generator i in the image of
// domain generator j. matrix(compose(f, g)) == matrix(g) * matrix(f).
IntegerMatrix abelianized_matrix(const Endomorphism& e);

// An endomorphism together with a machine-checked two-sided inverse.
class Automorphism {
 public:
  // Throws DomainError unless both composites are the identity.
  Automorphism(Endomorphism forward, Endomorphism inverse);

  static Automorphism identity(Ambient ambient);

  const Endomorphism& forward() const { return forward_; }
  const Endomorphism& inverse() const { return inverse_; }
  Automorphism inverted() const { return Automorphism(inverse_, forward_, Unchecked{}); }

 private:
  struct Unchecked {};
  Automorphism(Endomorphism forward, Endomorphism inverse, Unchecked)
      : forward_(std::move(forward)), inverse_(std::move(inverse)) {}

  Endomorphism forward_;
  Endomorphism inverse_;
};

}  // namespace vgroups

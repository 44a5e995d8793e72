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

// Exact counting of homomorphisms from finitely presented groups into small
// finite groups, and the fingerprints built from those counts.

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vgroups/present.hpp"

namespace vgroups {

// A finite group as a multiplication table over elements 0..order-1, with 0
// the identity. Construction verifies the group axioms (associativity
// exhaustively up to order 64, on a deterministic sample above that).
class FiniteGroupTable {
 public:
  FiniteGroupTable(std::string name, std::size_t order, std::vector<std::uint32_t> table);

  const std::string& name() const { return name_; }
  std::size_t order() const { return order_; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return table_[a * order_ + b]; }
  std::uint32_t inv(std::uint32_t a) const { return inverse_[a]; }

  std::size_t conjugacy_class_count() const;
  bool is_abelian() const;

  // Text form: "order m" then m rows of m element ids.
  static FiniteGroupTable parse(std::string_view text, std::string name = "table");
  std::string to_text() const;

 private:
  std::string name_;
  std::size_t order_;
  std::vector<std::uint32_t> table_;
  std::vector<std::uint32_t> inverse_;
};

// "sym3", "sym4", "alt4", "dihedral4" (alias "d4"), "c<k>" / "cyclic(k)".
FiniteGroupTable builtin_group(std::string_view name);
FiniteGroupTable cyclic_group(std::size_t k);
FiniteGroupTable direct_product(const FiniteGroupTable& g, const FiniteGroupTable& h);

// sym3, dihedral4, alt4, sym4.
std::vector<FiniteGroupTable> default_battery();

inline constexpr std::uint64_t kDefaultHomCountCap = 100'000'000;

struct HomCountOptions {
  // Upper bound on |G|^k, where k counts generators that occur in some
  // relator (generators in no relator contribute a closed-form factor |G|).
  std::uint64_t cap = kDefaultHomCountCap;
  // Worker threads; the search is split on the first generator's image.
  unsigned jobs = 1;
};

// Number of assignments of group elements to generators under which every
// relator evaluates to the identity. Throws LimitExceeded above the cap.
std::uint64_t count_homs(const Presentation& p, const FiniteGroupTable& g,
                         const HomCountOptions& options = {});

struct Fingerprint {
  AbelianInvariants abelian;
  std::vector<std::pair<std::string, std::uint64_t>> counts;

  std::string to_string() const;
  bool operator==(const Fingerprint&) const = default;
};

Fingerprint fingerprint(const Presentation& p, std::span<const FiniteGroupTable> battery,
                        const HomCountOptions& options = {});

}  // namespace vgroups

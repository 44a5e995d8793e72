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

#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "oracles.hpp"
#include "vgroups/error.hpp"
#include "vgroups/homcount.hpp"
#include "vgroups/present.hpp"

using namespace vgroups;

namespace {

Presentation pres(const char* text) { return Presentation::parse(text); }

std::vector<int> oracle_gens(const Presentation& p) {
  std::vector<int> out;
  for (auto g : p.generators()) out.push_back(g.is_y() ? oracle::kY : static_cast<int>(g.index()));
  return out;
}

std::vector<oracle::Word> oracle_relators(const Presentation& p) {
  std::vector<oracle::Word> out;
  for (const auto& r : p.relators()) out.push_back(testing::to_oracle(r));
  return out;
}

}  // namespace

TEST_CASE("builtin groups") {
  CHECK(builtin_group("cyclic(1)").order() == 1);
  CHECK(builtin_group("c1").order() == 1);
  const auto s3 = builtin_group("sym3");
  CHECK(s3.order() == 6);
  CHECK(s3.conjugacy_class_count() == 3);
  CHECK_FALSE(s3.is_abelian());
  CHECK(builtin_group("sym4").order() == 24);
  CHECK(builtin_group("sym4").conjugacy_class_count() == 5);
  CHECK(builtin_group("alt4").order() == 12);
  CHECK(builtin_group("alt4").conjugacy_class_count() == 4);
  CHECK(builtin_group("dihedral4").order() == 8);
  CHECK(builtin_group("d4").conjugacy_class_count() == 5);
  CHECK(builtin_group("c5").is_abelian());
  CHECK_THROWS_AS(builtin_group("sym5"), ParseError);
  CHECK_THROWS_AS(builtin_group("c0"), ParseError);
  CHECK_THROWS_AS(cyclic_group(0), DomainError);
}

TEST_CASE("group tables are validated") {
  CHECK_THROWS_AS(FiniteGroupTable("bad", 2, {0, 1, 1, 1}), DomainError);
  CHECK_THROWS_AS(FiniteGroupTable("bad", 2, {1, 0, 0, 1}), DomainError);
  CHECK_THROWS_AS(FiniteGroupTable("bad", 2, {0, 1}), DomainError);
  // A Latin square with identity that is not associative (order 5 loop).
  const std::vector<std::uint32_t> loop{0, 1, 2, 3, 4,  //
                                        1, 0, 3, 4, 2,  //
                                        2, 4, 0, 1, 3,  //
                                        3, 2, 4, 0, 1,  //
                                        4, 3, 1, 2, 0};
  CHECK_THROWS_AS(FiniteGroupTable("loop", 5, loop), DomainError);

  const auto s3 = builtin_group("sym3");
  const auto back = FiniteGroupTable::parse(s3.to_text(), "copy");
  CHECK(back.order() == 6);
  CHECK(FiniteGroupTable::parse("order 2\n0 1\n1 0\n").is_abelian());
  CHECK_THROWS_AS(FiniteGroupTable::parse("2\n0 1\n1 0\n"), ParseError);
  CHECK_THROWS_AS(FiniteGroupTable::parse("order 2\n0 1\n1\n"), ParseError);
  CHECK_THROWS_AS(FiniteGroupTable::parse("order 2\n0 1\n1 x\n"), ParseError);
  CHECK_THROWS_AS(FiniteGroupTable::parse("order 2\n0 1\n1 1\n"), ParseError);
}

TEST_CASE("count examples") {
  const auto s3 = builtin_group("sym3");
  CHECK(count_homs(pres("gens: x1 y\n"), s3) == 36);
  const auto comm = pres("gens: x1 x2\nrel: x1 x2 x1^-1 x2^-1\n");
  CHECK(count_homs(comm, s3) == 18);
  CHECK(oracle::brute_hom_count(oracle_gens(comm), oracle_relators(comm), oracle::all_perms(3)) == 18);
  for (const auto& g : default_battery()) CHECK(count_homs(pres("gens: x1\nrel: x1\n"), g) == 1);
  CHECK(count_homs(pres("gens: x1\n"), builtin_group("c1")) == 1);
}

TEST_CASE("cap") {
  const auto p = pres("gens: x1 x2 x3 x4 x5 x6\nrel: x1 x2 x3 x4 x5 x6\n");
  CHECK_THROWS_AS(count_homs(p, builtin_group("sym4")), LimitExceeded);
  CHECK(count_homs(p, builtin_group("sym3"), {1'000'000, 1}) == 7776);
  // Generators outside every relator are free factors and do not count toward the cap.
  const auto q = pres("gens: x1 x2 x3 x4 x5 x6 x7\nrel: x1 x1\n");
  CHECK(count_homs(q, builtin_group("sym3"), {10, 1}) == 4 * 6ull * 6 * 6 * 6 * 6 * 6);
}

TEST_CASE("fingerprints") {
  const auto battery = default_battery();
  REQUIRE(battery.size() == 4);
  CHECK(battery[0].name() == "sym3");
  CHECK(battery[1].name() == "dihedral4");
  CHECK(battery[2].name() == "alt4");
  CHECK(battery[3].name() == "sym4");
  const auto f2 = fingerprint(pres("gens: x1 y\n"), battery);
  const auto f3 = fingerprint(pres("gens: x1 x2 y\n"), battery);
  CHECK(f2.counts[0].second == 36);
  CHECK(f3.counts[0].second == 216);
  CHECK(f2 != f3);
  CHECK(f2.to_string() == "Z^2 sym3=36 dihedral4=64 alt4=144 sym4=576");

  const auto vt = group_of_virtual_link(parse_braid("s1 s1 r1", 2, Theory::Virtual));
  const auto fv = fingerprint(vt, battery);
  CHECK(fv.counts[0].second == 30);
  CHECK(fv.counts[0].second < 36);
  CHECK(fv == fingerprint(tietze_simplify(vt).presentation, battery));
  CHECK(oracle::brute_hom_count(oracle_gens(vt), oracle_relators(vt), oracle::all_perms(3)) == 30);
}

TEST_SUITE("hom count properties") {
  TEST_CASE("free groups") {
    for (const auto& g : default_battery()) {
      std::uint64_t expect = 1;
      for (std::uint32_t r = 0; r <= 4; ++r) {
        const Ambient a{r, false};
        CHECK(count_homs(Presentation(a, a.generators(), {}), g) == expect);
        expect *= g.order();
      }
    }
  }

  TEST_CASE("agrees with brute force over permutations") {
    std::mt19937_64 rng(41);
    const auto s3 = builtin_group("sym3");
    const auto s4 = builtin_group("sym4");
    const auto p3 = oracle::all_perms(3);
    const auto p4 = oracle::all_perms(4);
    for (int trial = 0; trial < 150; ++trial) {
      const auto p = testing::random_presentation(rng, 3, 3, 8);
      CHECK(count_homs(p, s3) == oracle::brute_hom_count(oracle_gens(p), oracle_relators(p), p3));
      if (trial % 5 == 0) CHECK(count_homs(p, s4) == oracle::brute_hom_count(oracle_gens(p), oracle_relators(p), p4));
    }
  }

  TEST_CASE("invariant under reordering, rotation and inversion") {
    std::mt19937_64 rng(42);
    const auto battery = default_battery();
    for (int trial = 0; trial < 100; ++trial) {
      const auto p = testing::random_presentation(rng, 3, 3, 8);
      auto gens = p.generators();
      std::shuffle(gens.begin(), gens.end(), rng);
      std::vector<Word> rels;
      for (const auto& r : p.relators()) {
        std::vector<Letter> ls(r.letters().begin(), r.letters().end());
        std::rotate(ls.begin(), ls.begin() + static_cast<long>(rng() % ls.size()), ls.end());
        Word rot = reduce(p.ambient(), ls);
        rels.push_back(rng() % 2 == 0 ? invert(rot) : rot);
      }
      std::shuffle(rels.begin(), rels.end(), rng);
      const Presentation q(p.ambient(), gens, rels);
      for (const auto& g : battery) CHECK(count_homs(p, g) == count_homs(q, g));
    }
  }

  TEST_CASE("direct products multiply counts") {
    std::mt19937_64 rng(43);
    const auto c2 = cyclic_group(2);
    const auto c3 = cyclic_group(3);
    const auto c6 = cyclic_group(6);
    const auto prod = direct_product(c2, c3);
    CHECK(prod.order() == 6);
    CHECK(prod.is_abelian());
    const auto s3xc2 = direct_product(builtin_group("sym3"), c2);
    for (int trial = 0; trial < 100; ++trial) {
      const auto p = testing::random_presentation(rng, 3, 3, 8);
      const auto a = count_homs(p, c2);
      const auto b = count_homs(p, c3);
      CHECK(count_homs(p, prod) == a * b);
      CHECK(count_homs(p, c6) == a * b);
      CHECK(count_homs(p, s3xc2) == count_homs(p, builtin_group("sym3")) * a);
    }
  }

  TEST_CASE("parallel counts are identical") {
    std::mt19937_64 rng(44);
    const auto s4 = builtin_group("sym4");
    for (int trial = 0; trial < 30; ++trial) {
      const auto p = testing::random_presentation(rng, 3, 3, 8);
      CHECK(count_homs(p, s4, {kDefaultHomCountCap, 1}) == count_homs(p, s4, {kDefaultHomCountCap, 4}));
    }
  }
}

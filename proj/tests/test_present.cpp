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
#include "vgroups/reps.hpp"

using namespace vgroups;

namespace {

BraidWord v(const char* text, std::uint32_t n) { return parse_braid(text, n, Theory::Virtual); }

Presentation pres(const char* text) { return Presentation::parse(text); }

AbelianInvariants oracle_invariants(const Presentation& p) {
  const auto m = relation_matrix(p);
  std::vector<std::vector<std::int64_t>> rows(m.rows(), std::vector<std::int64_t>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) rows[r][c] = m(r, c);
  const auto inv = oracle::determinantal_invariants(rows, m.cols());
  return AbelianInvariants{inv.free_rank, inv.torsion};
}

IntegerMatrix matrix(std::size_t r, std::size_t c, std::vector<std::int64_t> entries) {
  IntegerMatrix m(r, c);
  for (std::size_t k = 0; k < entries.size(); ++k) m(k / c, k % c) = entries[k];
  return m;
}

bool is_diagonal_chain(const SmithForm& s) {
  for (std::size_t r = 0; r < s.d.rows(); ++r)
    for (std::size_t c = 0; c < s.d.cols(); ++c)
      if (r != c && s.d(r, c) != 0) return false;
  for (std::size_t k = 0; k + 1 < s.diagonal.size(); ++k) {
    if (s.diagonal[k] < 0) return false;
    if (s.diagonal[k] == 0 && s.diagonal[k + 1] != 0) return false;
    if (s.diagonal[k] != 0 && s.diagonal[k + 1] % s.diagonal[k] != 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> small_counts(const Presentation& p) {
  std::vector<std::uint64_t> out;
  for (const char* g : {"sym3", "c2", "c3", "dihedral4", "alt4", "sym4"}) out.push_back(count_homs(p, builtin_group(g)));
  return out;
}

}  // namespace

TEST_SUITE("presentations") {
  TEST_CASE("text and structured formats") {
    const auto p = pres("gens: x1 x2 y\nrel: x1 y x1^-1 y^-1\n");
    CHECK(p.to_text() == "gens: x1 x2 y\nrel: x1 y x1^-1 y^-1\n");
    CHECK(Presentation::parse(p.to_structured()).same_as(p));
    CHECK(p.to_structured() == R"({"generators":["x1","x2","y"],"relators":["x1 y x1^-1 y^-1"]})");
    CHECK_THROWS_AS(pres("rel: x1\n"), ParseError);
    CHECK_THROWS_AS(pres("gens: x1\nfoo\n"), ParseError);
    CHECK_THROWS_AS(pres("gens: x1\nrel: x2\n"), ParseError);
    CHECK_THROWS_AS(pres("{\"generators\": 3}"), ParseError);
  }

  TEST_CASE("relators are cyclically reduced and trivial ones dropped") {
    const auto p = pres("gens: x1 x2\nrel: x2^-1 x1 x2\nrel: x1 x1^-1\n");
    REQUIRE(p.relators().size() == 1);
    CHECK(p.relators()[0].to_string() == "x1");
  }

  TEST_CASE("virtual link groups") {
    const auto u = group_of_virtual_link(BraidWord(1, Theory::Virtual));
    CHECK(u.to_text() == "gens: x1 y\n");
    CHECK(free_rank_certificate(u) == 2u);

    const auto t = group_of_virtual_link(v("s1 s1 r1", 2));
    CHECK(t.relators().size() == 2);
    CHECK(t.to_text() ==
          "gens: x1 x2 y\n"
          "rel: x1^-1 y x2 y^-1 y^-1 x1 y y x2 y^-1 y^-1 x1^-1 y y x2^-1 y^-1\n"
          "rel: x2^-1 y x2 y^-1 y^-1 x1 y y x2^-1 y^-1\n");

    const auto k = group_of_virtual_link(v("r1 s1 s2 s1 r1 s1^-1 s2^-1 s1^-1", 3));
    CHECK(k.relators().size() == 3);
    CHECK(k.relators()[2].to_string() == "x3^-1 y x3^-1 x2 x3 y^-1");
    CHECK_THROWS_AS(group_of_virtual_link(parse_braid("a1", 2, Theory::Welded)), DomainError);
  }

  TEST_CASE("welded and classical link groups") {
    CHECK(group_of_welded_link(BraidWord(1, Theory::Welded)).to_text() == "gens: x1\n");
    const auto vt = v("s1 s1 r1", 2);
    const auto w = group_of_welded_link(virtual_to_welded(vt));
    CHECK(w.same_as(quotient_y(group_of_virtual_link(vt))));
    const auto tre = group_of_welded_link(parse_braid("s1 s1 s1", 2, Theory::Classical));
    CHECK(tre.same_as(group_of_classical_link(parse_braid("s1 s1 s1", 2, Theory::Classical))));

    CHECK(group_of_classical_link(BraidWord(1, Theory::Classical)).to_text() == "gens: x1\n");
    const auto hopf = group_of_classical_link(parse_braid("s1 s1", 2, Theory::Classical));
    CHECK(abelian_invariants(hopf) == AbelianInvariants{2, {}});
    const auto trefoil = group_of_classical_link(parse_braid("s1 s1 s1", 2, Theory::Classical));
    CHECK(abelian_invariants(trefoil) == AbelianInvariants{1, {}});
    // The trefoil group surjects onto sym3: 6 abelian + 6 surjective-ish images.
    CHECK(count_homs(trefoil, builtin_group("sym3")) == 12);
  }

  TEST_CASE("Wada groups") {
    CHECK(wada_group(BraidWord(2, Theory::Welded), 2).to_text() == "gens: x1 x2\n");
    const auto s = wada_group(parse_braid("s1", 2, Theory::Welded), 2);
    CHECK(s.relators().size() == 2);
    const auto ss = tietze_simplify(s).presentation;
    CHECK(ss.generators().size() == 1);
    CHECK(ss.relators().empty());
    const auto a = wada_group(parse_braid("a1", 2, Theory::Welded), 1);
    CHECK(a.relators().size() == 2);
    CHECK(free_rank_certificate(a) == 1u);
    CHECK_THROWS_WITH_AS(wada_group(parse_braid("s1", 2, Theory::Welded), 3),
                         doctest::Contains("a_i s_{i+1} s_i = s_{i+1} s_i a_{i+1}"), DomainError);
    CHECK_THROWS_AS(wada_group(parse_braid("s1", 2, Theory::Welded), 4), DomainError);
    CHECK_THROWS_AS(wada_group(parse_braid("r1", 2, Theory::Virtual), 1), DomainError);
  }

  TEST_CASE("quotient_y") {
    CHECK(quotient_y(pres("gens: x1 y\n")).to_text() == "gens: x1\n");
    const auto t = quotient_y(group_of_virtual_link(v("s1 s1 r1", 2)));
    CHECK(abelian_invariants(t) == AbelianInvariants{1, {}});
    const auto k = quotient_y(group_of_virtual_link(v("r1 s1 s2 s1 r1 s1^-1 s2^-1 s1^-1", 3)));
    CHECK(abelian_invariants(k) == AbelianInvariants{1, {}});
    CHECK(count_homs(k, builtin_group("sym3")) == 6);
    CHECK(free_rank_certificate(k) == 1u);
    CHECK_THROWS_AS(quotient_y(pres("gens: x1\n")), DomainError);
  }
}

TEST_SUITE("tietze") {
  TEST_CASE("examples") {
    const auto e = tietze_simplify(pres("gens: x1 x2 y\nrel: y x1 y^-1 x2^-1\n"));
    CHECK(e.presentation.to_text() == "gens: x1 y\n");
    CHECK_FALSE(e.budget_exhausted);

    const auto k = group_of_virtual_link(v("r1 s1 s2 s1 r1 s1^-1 s2^-1 s1^-1", 3));
    const auto ks = tietze_simplify(k).presentation;
    CHECK(ks.to_text() == "gens: x3 y\n");
    CHECK(free_rank_certificate(k) == 2u);

    const auto fixed = pres("gens: x1 x2\nrel: x1 x1 x2 x2\n");
    const auto fs = tietze_simplify(fixed);
    CHECK(fs.presentation.same_as(fixed));
    CHECK(fs.steps == 0);
  }

  TEST_CASE("virtual trefoil keeps one relator") {
    const auto t = group_of_virtual_link(v("s1 s1 r1", 2));
    const auto s = tietze_simplify(t).presentation;
    CHECK(s.to_text() == "gens: x2 y\nrel: y y x2^-1 y^-1 x2^-1 y x2 y^-1 y^-1 x2 y x2 y^-1 x2^-1\n");
    CHECK_FALSE(free_rank_certificate(t).has_value());
  }

  TEST_CASE("duplicate relators are removed") {
    const auto p = pres("gens: x1 x2\nrel: x1 x2 x1 x2\nrel: x2^-1 x1^-1 x2^-1 x1^-1\n");
    const auto s = tietze_simplify(p).presentation;
    CHECK(s.relators().size() == 1);
  }

  TEST_CASE("budget exhaustion returns the best presentation so far") {
    const auto k = group_of_virtual_link(v("r1 s1 s2 s1 r1 s1^-1 s2^-1 s1^-1", 3));
    const auto r = tietze_simplify(k, 5);
    CHECK(r.budget_exhausted);
    CHECK(abelian_invariants(r.presentation) == abelian_invariants(k));
  }

  TEST_CASE("property: every step is sound") {
    std::mt19937_64 rng(21);
    std::size_t steps = 0;
    for (int trial = 0; trial < 200; ++trial) {
      auto p = testing::random_presentation(rng, 3, 3, 7);
      const auto inv = abelian_invariants(p);
      const auto counts = small_counts(p);
      while (auto next = tietze_step(p)) {
        CHECK(abelian_invariants(*next) == inv);
        CHECK(small_counts(*next) == counts);
        CHECK(next->total_length() <= 4 * p.total_length() + 8);
        p = *next;
        ++steps;
      }
    }
    CHECK(steps > 100);
  }
}

TEST_SUITE("smith normal form") {
  TEST_CASE("examples") {
    auto s = smith_normal_form(IntegerMatrix::identity(2));
    CHECK(s.diagonal == std::vector<std::int64_t>{1, 1});
    s = smith_normal_form(matrix(2, 2, {2, 4, 6, 8}));
    CHECK(s.diagonal == std::vector<std::int64_t>{2, 4});
    s = smith_normal_form(IntegerMatrix(2, 3));
    CHECK(s.diagonal == std::vector<std::int64_t>{0, 0});
    CHECK(s.d.is_zero());
  }

  TEST_CASE("relation matrix examples") {
    const auto a = relation_matrix(pres("gens: x1\nrel: x1 x1\n"));
    CHECK(a == matrix(1, 1, {2}));
    const auto c = relation_matrix(pres("gens: x1 x2\nrel: x1 x2 x1^-1 x2^-1\n"));
    CHECK(c.rows() == 1);
    CHECK(c.is_zero());
    const auto t = relation_matrix(group_of_virtual_link(v("s1 s1 r1", 2)));
    CHECK(t.rows() == 2);
    CHECK(t.cols() == 3);
    CHECK(t(0, 2) == 0);
    CHECK(t(1, 2) == 0);
    CHECK(smith_normal_form(t).diagonal.front() <= 1);
  }

  TEST_CASE("abelian invariant examples") {
    CHECK(abelian_invariants(pres("gens: x1 y\n")) == AbelianInvariants{2, {}});
    CHECK(abelian_invariants(group_of_virtual_link(v("s1 s1 r1", 2))) == AbelianInvariants{2, {}});
    const auto a2 = abelian_invariants(pres("gens: x1\nrel: x1 x1\n"));
    CHECK(a2 == AbelianInvariants{0, {2}});
    CHECK(a2.to_string() == "Z/2");
    CHECK(AbelianInvariants{1, {2, 6}}.to_string() == "Z + Z/2 + Z/6");
    CHECK(AbelianInvariants{0, {}}.to_string() == "0");
    CHECK(AbelianInvariants{3, {}}.to_string() == "Z^3");
  }

  TEST_CASE("overflow is reported") {
    const std::int64_t big = std::int64_t{1} << 62;
    CHECK_THROWS_AS(IntegerMatrix::identity(1) * matrix(1, 1, {big}) * matrix(1, 1, {4}), LimitExceeded);
  }

  TEST_CASE("property: verified and agrees with determinantal divisors") {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> dim(1, 4);
    std::uniform_int_distribution<std::int64_t> entry(-6, 6);
    for (int trial = 0; trial < 300; ++trial) {
      const auto r = static_cast<std::size_t>(dim(rng));
      const auto c = static_cast<std::size_t>(dim(rng));
      IntegerMatrix m(r, c);
      std::vector<std::vector<std::int64_t>> rows(r, std::vector<std::int64_t>(c));
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j] = entry(rng);
      const auto s = smith_normal_form(m);
      CHECK(s.u * m * s.v == s.d);
      CHECK(is_diagonal_chain(s));
      const auto inv = oracle::determinantal_invariants(rows, c);
      std::vector<std::int64_t> tors;
      std::size_t rank = 0;
      for (auto d : s.diagonal) {
        if (d != 0) ++rank;
        if (d >= 2) tors.push_back(d);
      }
      CHECK(c - rank == inv.free_rank);
      CHECK(tors == inv.torsion);
    }
  }

  TEST_CASE("property: presentation invariants agree with the oracle") {
    std::mt19937_64 rng(32);
    for (int trial = 0; trial < 200; ++trial) {
      const auto p = testing::random_presentation(rng, 4, 4, 9);
      CHECK(abelian_invariants(p) == oracle_invariants(p));
    }
  }
}

TEST_SUITE("link group properties") {
  TEST_CASE("relator count and classical splitting") {
    for (std::uint64_t s = 0; s < 100; ++s) {
      const auto n = static_cast<std::uint32_t>(2 + s % 3);
      const auto c = random_braid(n, 12, Theory::Classical, s);
      const auto p = group_of_virtual_link(c);
      CHECK(p.relators().size() <= n);
      for (const auto& r : p.relators()) CHECK(occurrences(r, GeneratorId::y()) == 0);
      CHECK(group_of_virtual_link(random_braid(n, 12, Theory::Virtual, s)).relators().size() <= n);
    }
  }

  TEST_CASE("knot closures abelianize to Z^2") {
    std::size_t found = 0;
    for (std::uint64_t s = 0; found < 20; ++s) {
      const auto n = static_cast<std::uint32_t>(2 + s % 3);
      const auto b = random_braid(n, 10, Theory::Virtual, 1000 + s);
      if (!closure_is_knot(b)) continue;
      ++found;
      CHECK(abelian_invariants(group_of_virtual_link(b)) == AbelianInvariants{2, {}});
    }
  }

  TEST_CASE("y-quotient matches the welded group") {
    const auto battery = default_battery();
    for (std::uint64_t s = 0; s < 200; ++s) {
      const auto n = static_cast<std::uint32_t>(2 + s % 3);
      const auto b = random_braid(n, 10, Theory::Virtual, 5000 + s);
      const auto q = tietze_simplify(quotient_y(group_of_virtual_link(b))).presentation;
      const auto w = tietze_simplify(group_of_welded_link(virtual_to_welded(b))).presentation;
      CHECK(fingerprint(q, battery) == fingerprint(w, battery));
    }
  }

  TEST_CASE("simplification preserves fingerprints of link groups") {
    const auto battery = default_battery();
    for (std::uint64_t s = 0; s < 40; ++s) {
      const auto b = random_braid(2, 8, Theory::Virtual, 7000 + s);
      const auto p = group_of_virtual_link(b);
      CHECK(fingerprint(p, battery) == fingerprint(tietze_simplify(p).presentation, battery));
    }
  }
}

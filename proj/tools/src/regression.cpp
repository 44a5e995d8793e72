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

#include <cstdint>
#include <cstdlib>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "vgroups/braid.hpp"
#include "vgroups/freegroup.hpp"
#include "vgroups/homcount.hpp"
#include "vgroups/markov.hpp"
#include "vgroups/present.hpp"
#include "vgroups/reps.hpp"
#include "vgroups_cli/cli.hpp"

namespace vgroups::cli {
namespace {

class Suite {
 public:
  explicit Suite(std::ostream& out) : out_(out) {}

  void check(const std::string& name, bool ok, const std::string& detail) {
    out_ << (ok ? "PASS " : "FAIL ") << name << ": " << detail << "\n";
    if (!ok) ++failures_;
  }
  int failures() const { return failures_; }

 private:
  std::ostream& out_;
  int failures_ = 0;
};

// Equal up to cyclic rotation, optionally after inverting one side.
bool cyclically_equal(const Word& a, const Word& b) {
  if (a.size() != b.size()) return false;
  const auto n = a.size();
  if (n == 0) return true;
  for (const Word& c : {b, invert(b)}) {
    const auto la = a.letters();
    const auto lc = c.letters();
    for (std::size_t shift = 0; shift < n; ++shift) {
      bool same = true;
      for (std::size_t k = 0; k < n && same; ++k) same = la[k] == lc[(k + shift) % n];
      if (same) return true;
    }
  }
  return false;
}

// Expands "g^k" tokens into |k| copies of g or g^-1 before parsing.
Word parse_powers(Ambient a, const std::string& text) {
  std::istringstream in(text);
  std::string tok;
  std::string flat;
  while (in >> tok) {
    const auto caret = tok.find('^');
    const std::string gen = tok.substr(0, caret);
    const int k = caret == std::string::npos ? 1 : std::atoi(tok.c_str() + caret + 1);
    for (int r = 0; r < std::abs(k); ++r) flat += gen + (k < 0 ? "^-1 " : " ");
  }
  return Word::parse(a, flat);
}

std::uint64_t sym3_count(const Presentation& p) { return count_homs(p, builtin_group("sym3")); }

void example_unknot(Suite& s) {
  const auto p = group_of_virtual_link(BraidWord(1, Theory::Virtual));
  const auto rank = free_rank_certificate(p);
  s.check("example-0 unknot", p.relators().empty() && p.generators().size() == 2 && rank == 2u,
          "G_v = " + p.to_text().substr(6, p.to_text().find('\n') - 6) + ", free of rank 2");
}

void example_virtual_trefoil(Suite& s) {
  const auto b = parse_braid("s1 s1 r1", 2, Theory::Virtual);
  const auto p = group_of_virtual_link(b);
  const auto inv = abelian_invariants(p);
  const auto count = sym3_count(p);
  const auto free2 = sym3_count(Presentation({GeneratorId::x(1), GeneratorId::y()}, {}));
  s.check("example-1 relators", p.relators().size() == 2, std::to_string(p.relators().size()) + " relators");
  s.check("example-1 abelianization", inv == AbelianInvariants{2, {}}, inv.to_string());
  s.check("example-1 not free", count < free2 && free2 == 36,
          "sym3 count " + std::to_string(count) + " < " + std::to_string(free2) + " for F_2");

  const auto simple = tietze_simplify(p).presentation;
  bool matches = false;
  if (simple.generators().size() == 2 && simple.relators().size() == 1) {
    // x (y x y^-2 x y) = (y x y^-2 x y) x with x the surviving x generator.
    const auto x = simple.generators().front().name();
    const auto w = "y " + x + " y^-1 y^-1 " + x + " y";
    const auto expected =
        Word::parse(simple.ambient(), x + " " + w + " " + x + "^-1 " + "y^-1 " + x + "^-1 y y " + x + "^-1 y^-1");
    matches = cyclically_equal(simple.relators().front(), expected);
  }
  s.check("example-1 single relator", matches, "x (y x y^-2 x y) = (y x y^-2 x y) x");
}

void example_kishino(Suite& s) {
  const auto c = parse_braid("r1 s1 s2 s1 r1 s1^-1 s2^-1 s1^-1", 3, Theory::Virtual);
  const auto psi = Representation::psi(3);
  const auto e = psi.evaluate(c);
  const Ambient a = psi.target();
  const bool images =
      e.image(GeneratorId::x(1)) ==
          parse_powers(a, "y^2 x3^-1 x2 x3 y^-2 x3 y^2 x3^-1 x2^-1 x3 y^-2") &&
      e.image(GeneratorId::x(2)) ==
          parse_powers(a,
                       "x3^-1 x2 x3 y^-2 x3 y x3^-1 x2^-1 x1 x2 x3 y^-1 x3^-1 y^2 x3^-1 x2^-1 x3") &&
      e.image(GeneratorId::x(3)) == parse_powers(a, "y x3^-1 x2 x3 y^-1");
  s.check("example-2 images", images, "psi(c) on x1, x2, x3");

  const auto p = group_of_virtual_link(c);
  const auto rank = free_rank_certificate(p);
  s.check("example-2 free", rank == 2u, "G_v simplifies to a free group of rank 2");
  const auto q = quotient_y(p);
  const auto inv = abelian_invariants(q);
  const auto count = sym3_count(q);
  s.check("example-2 y-quotient", inv == AbelianInvariants{1, {}} && count == 6,
          inv.to_string() + ", sym3 count " + std::to_string(count));
}

void example_exchange(Suite& s) {
  const auto b1 = parse_braid("s1 r1 s1", 2, Theory::Virtual);
  const auto pair = exchange_pair(b1, inverse(b1), ExchangeSide::Right);
  FuzzConfig cfg;
  const auto battery = default_battery();
  const auto fc = fingerprint(invariant_presentation(pair.classical_form, cfg), battery);
  const auto fv = fingerprint(invariant_presentation(pair.virtual_form, cfg), battery);
  s.check("example-3 exchange", fc == fv, fv.to_string());

  const auto simple = tietze_simplify(group_of_virtual_link(pair.virtual_form)).presentation;
  s.check("example-3 simplifies", simple.generators().size() == 2 && simple.relators().empty(),
          "2 free generators");

  const auto count = sym3_count(simple);
  const auto trivial2 = sym3_count(group_of_virtual_link(BraidWord(2, Theory::Virtual)));
  const auto trivial3 = sym3_count(group_of_virtual_link(BraidWord(3, Theory::Virtual)));
  s.check("example-3 nontrivial", count != trivial2 && count != trivial3,
          "sym3 count " + std::to_string(count) + " vs trivial closures " + std::to_string(trivial2) +
              " (2 strands), " + std::to_string(trivial3) + " (3 strands)");
}

void kishino_braid(Suite& s) {
  const auto kb = parse_braid(
      "s2 s1 r2 s1^-1 s2^-1 r1 s2^-1 s1^-1 r2 s1 s2 s2 s1 r2 s1^-1 s2^-1 r1 s2^-1 s1^-1 r2 s1 s2", 3,
      Theory::Virtual);
  const auto psi = Representation::psi(3);
  s.check("kishino-braid", !is_identity(psi.evaluate(kb)), "psi(Kb) is not the identity");
}

void psi_relations(Suite& s) {
  for (std::uint32_t n : {3u, 4u}) {
    const auto psi = Representation::psi(n);
    std::size_t failed = 0;
    const auto reports = check_relations(psi);
    for (const auto& r : reports) failed += r.holds ? 0 : 1;
    s.check("psi-relations n=" + std::to_string(n), failed == 0,
            std::to_string(reports.size()) + " virtual braid relations hold");
  }
  const auto psi = Representation::psi(3);
  for (const auto& rel : forbidden_relations(Theory::Virtual, 3)) {
    const auto r = check_relation(psi, rel);
    std::string detail = rel.label() + " fails";
    if (r.witness) {
      detail += " at " + r.witness->generator.name() + ": " + r.witness->left_image.to_string() + " | " +
                r.witness->right_image.to_string();
    }
    s.check("psi-forbidden " + rel.name, !r.holds, detail);
  }
}

void wada_classification(Suite& s) {
  struct Case {
    int type;
    int h;
  };
  for (std::uint32_t n : {3u, 4u}) {
    for (Case c : {Case{1, 1}, Case{1, 2}, Case{1, 3}, Case{2, 1}, Case{3, 1}, Case{4, 1}}) {
      const auto rep = Representation::wada(n, c.type, c.h);
      std::vector<std::string> failed;
      for (const auto& r : check_relations(rep)) {
        if (!r.holds) failed.push_back(r.relation.name);
      }
      bool ok;
      std::string detail;
      if (c.type <= 2) {
        ok = failed.empty();
        detail = "all welded relations hold";
      } else {
        ok = failed.size() == n - 2;
        for (const auto& f : failed) ok = ok && f == "mixed-F1";
        detail = "fails exactly at a_i s_{i+1} s_i = s_{i+1} s_i a_{i+1} (" + std::to_string(failed.size()) +
                 " relation instances)";
      }
      std::string name = "wada" + std::to_string(c.type);
      if (c.type == 1) name += " h=" + std::to_string(c.h);
      s.check(name + " n=" + std::to_string(n), ok, detail);
    }
  }
}

}  // namespace

int run_regression_suite(std::ostream& out) {
  Suite s(out);
  example_unknot(s);
  example_virtual_trefoil(s);
  example_kishino(s);
  example_exchange(s);
  kishino_braid(s);
  psi_relations(s);
  wada_classification(s);
  out << (s.failures() == 0 ? "all checks passed" : std::to_string(s.failures()) + " checks failed") << "\n";
  return s.failures();
}

}  // namespace vgroups::cli

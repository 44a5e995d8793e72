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

#include "vgroups/braid.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "vgroups/error.hpp"

namespace vgroups {

std::string_view to_string(Theory t) {
  switch (t) {
    case Theory::Classical:
      return "classical";
    case Theory::Virtual:
      return "virtual";
    case Theory::Welded:
      return "welded";
  }
  return "?";
}

Theory parse_theory(std::string_view text) {
  if (text == "classical") return Theory::Classical;
  if (text == "virtual") return Theory::Virtual;
  if (text == "welded") return Theory::Welded;
  throw ParseError("unknown theory '" + std::string(text) + "'");
}

bool family_allowed(Family f, Theory t) {
  switch (f) {
    case Family::Sigma:
      return true;
    case Family::Rho:
      return t == Theory::Virtual;
    case Family::Alpha:
      return t == Theory::Welded;
  }
  return false;
}

std::string BraidLetter::to_string() const {
  std::string out;
  switch (family) {
    case Family::Sigma:
      out = "s";
      break;
    case Family::Rho:
      out = "r";
      break;
    case Family::Alpha:
      out = "a";
      break;
  }
  out += std::to_string(position);
  if (sign < 0) out += "^-1";
  return out;
}

BraidWord::BraidWord(std::uint32_t strands, Theory theory, std::span<const BraidLetter> letters)
    : strands_(strands), theory_(theory) {
  if (strands_ < 1) {
    throw DomainError("a braid needs at least one strand");
  }
  letters_.reserve(letters.size());
  for (auto l : letters) {
    if (l.position < 1 || l.position >= strands_) {
      throw DomainError("letter " + l.to_string() + " out of range for " +
                        std::to_string(strands_) + " strands");
    }
    if (!family_allowed(l.family, theory_)) {
      throw DomainError("letter " + l.to_string() + " is not in the " +
                        std::string(vgroups::to_string(theory_)) + " alphabet");
    }
    if (l.family != Family::Sigma) l.sign = 1;
    if (!letters_.empty() && letters_.back().cancels(l)) {
      letters_.pop_back();
    } else {
      letters_.push_back(l);
    }
  }
}

BraidWord parse_braid(std::string_view text, std::uint32_t strands, Theory theory) {
  std::vector<BraidLetter> letters;
  std::istringstream in{std::string(text)};
  std::string tok;
  std::size_t tokens = 0;
  bool saw_one = false;
  while (in >> tok) {
    ++tokens;
    if (tok == "1") {
      saw_one = true;
      continue;
    }
    std::string_view t = tok;
    int sign = 1;
    if (t.size() > 3 && t.substr(t.size() - 3) == "^-1") {
      sign = -1;
      t.remove_suffix(3);
    }
    if (t.size() < 2) throw ParseError("unknown braid token '" + tok + "'");
    Family family;
    switch (t[0]) {
      case 's':
        family = Family::Sigma;
        break;
      case 'r':
        family = Family::Rho;
        break;
      case 'a':
        family = Family::Alpha;
        break;
      default:
        throw ParseError("unknown braid token '" + tok + "'");
    }
    std::uint32_t pos = 0;
    auto [ptr, ec] = std::from_chars(t.data() + 1, t.data() + t.size(), pos);
    if (ec != std::errc{} || ptr != t.data() + t.size()) {
      throw ParseError("unknown braid token '" + tok + "'");
    }
    if (pos < 1 || pos >= strands) {
      throw ParseError("position out of range in '" + tok + "' for " + std::to_string(strands) +
                       " strands");
    }
    if (!family_allowed(family, theory)) {
      throw ParseError("token '" + tok + "' is illegal in " + std::string(to_string(theory)) +
                       " theory");
    }
    letters.push_back(BraidLetter{family, static_cast<std::int8_t>(family == Family::Sigma ? sign : 1), pos});
  }
  if (saw_one && tokens > 1) {
    throw ParseError("'1' must stand alone as the empty braid");
  }
  return BraidWord(strands, theory, letters);
}

std::string serialize(const BraidWord& b) {
  if (b.empty()) return "1";
  std::string out;
  for (const auto& l : b.letters()) {
    if (!out.empty()) out += ' ';
    out += l.to_string();
  }
  return out;
}

BraidWord concat(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands() || a.theory() != b.theory()) {
    throw DomainError("concat: braids differ in strands or theory");
  }
  std::vector<BraidLetter> ls(a.letters().begin(), a.letters().end());
  ls.insert(ls.end(), b.letters().begin(), b.letters().end());
  return BraidWord(a.strands(), a.theory(), ls);
}

BraidWord inverse(const BraidWord& b) {
  std::vector<BraidLetter> ls;
  ls.reserve(b.size());
  for (auto it = b.letters().rbegin(); it != b.letters().rend(); ++it) ls.push_back(it->inverse());
  return BraidWord(b.strands(), b.theory(), ls);
}

BraidWord retheory(const BraidWord& b, Theory theory) {
  return BraidWord(b.strands(), theory, b.letters());
}

BraidWord virtual_to_welded(const BraidWord& b) {
  if (b.theory() == Theory::Welded) return b;
  std::vector<BraidLetter> ls(b.letters().begin(), b.letters().end());
  for (auto& l : ls) {
    if (l.family == Family::Rho) l.family = Family::Alpha;
  }
  return BraidWord(b.strands(), Theory::Welded, ls);
}

Permutation underlying_permutation(const BraidWord& b) {
  // at[p] = starting strand currently at position p
  std::vector<std::uint32_t> at(b.strands());
  for (std::uint32_t k = 0; k < b.strands(); ++k) at[k] = k;
  for (const auto& l : b.letters()) std::swap(at[l.position - 1], at[l.position]);
  Permutation perm(b.strands());
  for (std::uint32_t p = 0; p < b.strands(); ++p) perm[at[p]] = p;
  return perm;
}

Permutation then(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) throw DomainError("permutation size mismatch");
  Permutation r(p.size());
  for (std::size_t k = 0; k < p.size(); ++k) r[k] = q[p[k]];
  return r;
}

std::size_t cycle_count(const Permutation& p) {
  std::vector<bool> seen(p.size(), false);
  std::size_t cycles = 0;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (seen[k]) continue;
    ++cycles;
    for (auto j = k; !seen[j]; j = p[j]) seen[j] = true;
  }
  return cycles;
}

bool closure_is_knot(const BraidWord& b) { return cycle_count(underlying_permutation(b)) == 1; }

BraidWord conjugate(const BraidWord& b, BraidLetter g) {
  if (!family_allowed(g.family, b.theory())) {
    throw DomainError("conjugate: letter " + g.to_string() + " illegal for " +
                      std::string(to_string(b.theory())) + " theory");
  }
  std::vector<BraidLetter> ls;
  ls.reserve(b.size() + 2);
  ls.push_back(g);
  ls.insert(ls.end(), b.letters().begin(), b.letters().end());
  ls.push_back(g.inverse());
  return BraidWord(b.strands(), b.theory(), ls);
}

std::string_view to_string(StabilizationKind k) {
  switch (k) {
    case StabilizationKind::Positive:
      return "positive";
    case StabilizationKind::Negative:
      return "negative";
    case StabilizationKind::Virtual:
      return "virtual";
  }
  return "?";
}

BraidWord stabilize(const BraidWord& b, StabilizationKind kind) {
  const auto n = b.strands();
  std::vector<BraidLetter> ls(b.letters().begin(), b.letters().end());
  switch (kind) {
    case StabilizationKind::Positive:
      ls.push_back(BraidLetter::sigma(n, 1));
      break;
    case StabilizationKind::Negative:
      ls.push_back(BraidLetter::sigma(n, -1));
      break;
    case StabilizationKind::Virtual:
      if (b.theory() == Theory::Classical) {
        throw DomainError("virtual stabilization is not available in classical theory");
      }
      ls.push_back(b.theory() == Theory::Welded ? BraidLetter::alpha(n) : BraidLetter::rho(n));
      break;
  }
  return BraidWord(n + 1, b.theory(), ls);
}

BraidWord shift(const BraidWord& b) {
  std::vector<BraidLetter> ls(b.letters().begin(), b.letters().end());
  for (auto& l : ls) ++l.position;
  return BraidWord(b.strands() + 1, b.theory(), ls);
}

std::string_view to_string(ExchangeSide s) { return s == ExchangeSide::Right ? "right" : "left"; }

ExchangePair exchange_pair(const BraidWord& b1, const BraidWord& b2, ExchangeSide side) {
  if (b1.theory() != Theory::Virtual || b2.theory() != Theory::Virtual) {
    throw DomainError("exchange moves are defined for virtual braids only");
  }
  if (b1.strands() != b2.strands()) {
    throw DomainError("exchange_pair: b1 and b2 differ in strand count");
  }
  const auto n = b1.strands();
  std::vector<BraidLetter> p, q;
  std::uint32_t at = n;
  if (side == ExchangeSide::Right) {
    p.assign(b1.letters().begin(), b1.letters().end());
    q.assign(b2.letters().begin(), b2.letters().end());
  } else {
    auto s1 = shift(b1);
    auto s2 = shift(b2);
    p.assign(s1.letters().begin(), s1.letters().end());
    q.assign(s2.letters().begin(), s2.letters().end());
    at = 1;
  }
  auto build = [&](BraidLetter first, BraidLetter last) {
    std::vector<BraidLetter> ls = p;
    ls.push_back(first);
    ls.insert(ls.end(), q.begin(), q.end());
    ls.push_back(last);
    return BraidWord(n + 1, Theory::Virtual, ls);
  };
  return ExchangePair{build(BraidLetter::sigma(at, -1), BraidLetter::sigma(at, 1)),
                      build(BraidLetter::rho(at), BraidLetter::rho(at))};
}

std::string DefiningRelation::label() const {
  std::string out = name + "(i=" + std::to_string(i);
  if (j != 0) out += ",j=" + std::to_string(j);
  out += "): ";
  auto side = [](const std::vector<BraidLetter>& ls) {
    if (ls.empty()) return std::string("1");
    std::string s;
    for (const auto& l : ls) {
      if (!s.empty()) s += ' ';
      s += l.to_string();
    }
    return s;
  };
  return out + side(left) + " = " + side(right);
}

namespace {

using L = BraidLetter;

BraidLetter involution(Theory t, std::uint32_t i) {
  return t == Theory::Welded ? L::alpha(i) : L::rho(i);
}

void add(std::vector<DefiningRelation>& out, Theory t, std::uint32_t n, std::string name,
         std::vector<L> left, std::vector<L> right, std::uint32_t i, std::uint32_t j = 0) {
  out.push_back(DefiningRelation{t, n, std::move(name), std::move(left), std::move(right), i, j});
}

void add_braid_group(std::vector<DefiningRelation>& out, Theory t, std::uint32_t n) {
  for (std::uint32_t i = 1; i + 1 <= n - 1; ++i) {
    add(out, t, n, "sigma-braid", {L::sigma(i), L::sigma(i + 1), L::sigma(i)},
        {L::sigma(i + 1), L::sigma(i), L::sigma(i + 1)}, i);
  }
  for (std::uint32_t i = 1; i < n; ++i) {
    for (std::uint32_t j = i + 2; j < n; ++j) {
      add(out, t, n, "sigma-commute", {L::sigma(i), L::sigma(j)}, {L::sigma(j), L::sigma(i)}, i, j);
    }
  }
}

void add_symmetric_group(std::vector<DefiningRelation>& out, Theory t, std::uint32_t n) {
  const std::string p = t == Theory::Welded ? "alpha" : "rho";
  auto v = [t](std::uint32_t i) { return involution(t, i); };
  for (std::uint32_t i = 1; i + 1 <= n - 1; ++i) {
    add(out, t, n, p + "-braid", {v(i), v(i + 1), v(i)}, {v(i + 1), v(i), v(i + 1)}, i);
  }
  for (std::uint32_t i = 1; i < n; ++i) {
    for (std::uint32_t j = i + 2; j < n; ++j) {
      add(out, t, n, p + "-commute", {v(i), v(j)}, {v(j), v(i)}, i, j);
    }
  }
  for (std::uint32_t i = 1; i < n; ++i) {
    add(out, t, n, p + "-square", {v(i), v(i)}, {}, i);
  }
  for (std::uint32_t i = 1; i < n; ++i) {
    for (std::uint32_t j = 1; j < n; ++j) {
      if ((i > j ? i - j : j - i) < 2) continue;
      add(out, t, n, "mixed-commute", {L::sigma(i), v(j)}, {v(j), L::sigma(i)}, i, j);
    }
  }
}

}  // namespace

std::vector<DefiningRelation> defining_relations(Theory theory, std::uint32_t strands) {
  std::vector<DefiningRelation> out;
  const auto n = strands;
  add_braid_group(out, theory, n);
  if (theory == Theory::Classical) return out;
  add_symmetric_group(out, theory, n);
  for (std::uint32_t i = 1; i + 1 <= n - 1; ++i) {
    if (theory == Theory::Virtual) {
      add(out, theory, n, "mixed", {L::rho(i), L::rho(i + 1), L::sigma(i)},
          {L::sigma(i + 1), L::rho(i), L::rho(i + 1)}, i);
    } else {
      add(out, theory, n, "mixed", {L::alpha(i + 1), L::alpha(i), L::sigma(i + 1)},
          {L::sigma(i), L::alpha(i + 1), L::alpha(i)}, i);
      add(out, theory, n, "mixed-F1", {L::alpha(i), L::sigma(i + 1), L::sigma(i)},
          {L::sigma(i + 1), L::sigma(i), L::alpha(i + 1)}, i);
    }
  }
  return out;
}

std::vector<DefiningRelation> forbidden_relations(Theory theory, std::uint32_t strands) {
  std::vector<DefiningRelation> out;
  if (theory == Theory::Classical) return out;
  const auto n = strands;
  auto v = [theory](std::uint32_t i) { return involution(theory, i); };
  for (std::uint32_t i = 1; i + 1 <= n - 1; ++i) {
    if (theory == Theory::Virtual) {
      add(out, theory, n, "F1", {v(i), L::sigma(i + 1), L::sigma(i)},
          {L::sigma(i + 1), L::sigma(i), v(i + 1)}, i);
    }
    add(out, theory, n, "F2", {v(i + 1), L::sigma(i), L::sigma(i + 1)},
        {L::sigma(i), L::sigma(i + 1), v(i)}, i);
  }
  return out;
}

namespace {

bool matches_at(std::span<const BraidLetter> word, const std::vector<BraidLetter>& side,
                std::size_t at) {
  if (side.empty() || at + side.size() > word.size()) return false;
  return std::equal(side.begin(), side.end(), word.begin() + static_cast<std::ptrdiff_t>(at));
}

}  // namespace

BraidWord rewrite_with_relation(const BraidWord& b, const DefiningRelation& rel, std::size_t at) {
  if (rel.theory != b.theory() || rel.strands > b.strands()) {
    throw DomainError("rewrite: relation " + rel.label() + " does not apply to this braid");
  }
  const std::vector<BraidLetter>* from = nullptr;
  const std::vector<BraidLetter>* to = nullptr;
  if (matches_at(b.letters(), rel.left, at)) {
    from = &rel.left;
    to = &rel.right;
  } else if (matches_at(b.letters(), rel.right, at)) {
    from = &rel.right;
    to = &rel.left;
  } else {
    throw DomainError("rewrite: no side of " + rel.label() + " occurs at index " +
                      std::to_string(at));
  }
  std::vector<BraidLetter> ls(b.letters().begin(), b.letters().begin() + static_cast<std::ptrdiff_t>(at));
  ls.insert(ls.end(), to->begin(), to->end());
  ls.insert(ls.end(), b.letters().begin() + static_cast<std::ptrdiff_t>(at + from->size()),
            b.letters().end());
  return BraidWord(b.strands(), b.theory(), ls);
}

std::vector<std::size_t> relation_sites(const BraidWord& b, const DefiningRelation& rel) {
  std::vector<std::size_t> sites;
  if (rel.theory != b.theory()) return sites;
  for (std::size_t at = 0; at < b.size(); ++at) {
    if (matches_at(b.letters(), rel.left, at) || matches_at(b.letters(), rel.right, at)) {
      sites.push_back(at);
    }
  }
  return sites;
}

BraidLetter random_letter(std::uint32_t strands, Theory theory, Rng& rng) {
  if (strands < 2) throw DomainError("random braid needs at least two strands");
  const std::uint64_t kinds = theory == Theory::Classical ? 2 : 3;
  const auto draw = uniform_below(rng, kinds * (strands - 1));
  const auto pos = static_cast<std::uint32_t>(draw / kinds) + 1;
  switch (draw % kinds) {
    case 0:
      return L::sigma(pos, 1);
    case 1:
      return L::sigma(pos, -1);
    default:
      return involution(theory, pos);
  }
}

BraidWord random_braid(std::uint32_t strands, std::size_t length, Theory theory, Rng& rng) {
  if (strands < 2) throw DomainError("random braid needs at least two strands");
  std::vector<BraidLetter> ls;
  ls.reserve(length);
  for (std::size_t k = 0; k < length; ++k) ls.push_back(random_letter(strands, theory, rng));
  return BraidWord(strands, theory, ls);
}

BraidWord random_braid(std::uint32_t strands, std::size_t length, Theory theory, std::uint64_t seed) {
  Rng rng(seed);
  return random_braid(strands, length, theory, rng);
}

}  // namespace vgroups

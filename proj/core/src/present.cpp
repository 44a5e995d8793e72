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

#include "vgroups/present.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "json.hpp"

#include "vgroups/error.hpp"
#include "vgroups/reps.hpp"

namespace vgroups {

namespace {

Ambient infer_ambient(const std::vector<GeneratorId>& gens) {
  Ambient a;
  for (auto g : gens) {
    if (g.is_y()) {
      a.with_y = true;
    } else {
      a.x_count = std::max(a.x_count, g.index());
    }
  }
  return a;
}

GeneratorId parse_generator(std::string_view t) {
  if (t == "y") return GeneratorId::y();
  if (t.size() >= 2 && t[0] == 'x' && t.find_first_not_of("0123456789", 1) == std::string_view::npos) {
    const auto k = std::stoul(std::string(t.substr(1)));
    if (k >= 1 && k <= 0xFFFFFFFEUL) return GeneratorId::x(static_cast<std::uint32_t>(k));
  }
  throw ParseError("bad generator name '" + std::string(t) + "'");
}

}  // namespace

Presentation::Presentation(Ambient ambient, std::vector<GeneratorId> generators,
                           std::vector<Word> relators)
    : ambient_(ambient), generators_(std::move(generators)) {
  for (std::size_t a = 0; a < generators_.size(); ++a) {
    if (!ambient_.contains(generators_[a])) {
      throw DomainError("presentation generator " + generators_[a].name() + " outside ambient");
    }
    for (std::size_t b = 0; b < a; ++b) {
      if (generators_[a] == generators_[b]) {
        throw DomainError("duplicate generator " + generators_[a].name());
      }
    }
  }
  relators_.reserve(relators.size());
  for (auto& r : relators) {
    if (!(r.ambient() == ambient_)) {
      throw DomainError("relator ambient differs from presentation ambient");
    }
    for (const auto& l : r.letters()) {
      if (!has_generator(l.gen)) {
        throw DomainError("relator uses " + l.gen.name() + " which is not a generator");
      }
    }
    auto core = cyclic_reduce(r).core;
    if (!core.empty()) relators_.push_back(std::move(core));
  }
}

Presentation::Presentation(std::vector<GeneratorId> generators, std::vector<Word> relators)
    : Presentation(Ambient{}, {}, {}) {
  const Ambient ambient = relators.empty() ? infer_ambient(generators) : relators.front().ambient();
  *this = Presentation(ambient, std::move(generators), std::move(relators));
}

bool Presentation::has_generator(GeneratorId g) const {
  return std::find(generators_.begin(), generators_.end(), g) != generators_.end();
}

std::size_t Presentation::total_length() const {
  std::size_t n = 0;
  for (const auto& r : relators_) n += r.size();
  return n;
}

std::string Presentation::to_text() const {
  std::string out = "gens:";
  for (auto g : generators_) out += " " + g.name();
  out += '\n';
  for (const auto& r : relators_) out += "rel: " + r.to_string() + '\n';
  return out;
}

std::string Presentation::to_structured() const {
  nlohmann::json j;
  j["generators"] = nlohmann::json::array();
  for (auto g : generators_) j["generators"].push_back(g.name());
  j["relators"] = nlohmann::json::array();
  for (const auto& r : relators_) j["relators"].push_back(r.to_string());
  return j.dump();
}

Presentation Presentation::parse(std::string_view text) {
  std::vector<GeneratorId> gens;
  std::vector<std::string> rels;
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
      for (const auto& g : j.at("generators")) gens.push_back(parse_generator(g.get<std::string>()));
      for (const auto& r : j.at("relators")) rels.push_back(r.get<std::string>());
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("structured presentation: ") + e.what());
    }
  } else {
    std::istringstream in{std::string(text)};
    std::string line;
    bool saw_gens = false;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.find_first_not_of(" \t") == std::string::npos) continue;
      if (line.rfind("gens:", 0) == 0) {
        if (saw_gens) throw ParseError("presentation has two 'gens:' lines");
        saw_gens = true;
        std::istringstream names(line.substr(5));
        std::string t;
        while (names >> t) gens.push_back(parse_generator(t));
      } else if (line.rfind("rel:", 0) == 0) {
        rels.push_back(line.substr(4));
      } else {
        throw ParseError("unexpected presentation line '" + line + "'");
      }
    }
    if (!saw_gens) throw ParseError("presentation lacks a 'gens:' line");
  }
  const auto ambient = infer_ambient(gens);
  std::vector<Word> relators;
  relators.reserve(rels.size());
  for (const auto& r : rels) {
    try {
      relators.push_back(Word::parse(ambient, r));
    } catch (const DomainError& e) {
      throw ParseError(std::string("relator '") + r + "': " + e.what());
    }
  }
  return Presentation(ambient, std::move(gens), std::move(relators));
}

bool Presentation::same_as(const Presentation& other) const {
  if (generators_ != other.generators_ || relators_.size() != other.relators_.size()) return false;
  for (std::size_t k = 0; k < relators_.size(); ++k) {
    const auto a = relators_[k].letters();
    const auto b = other.relators_[k].letters();
    if (!std::equal(a.begin(), a.end(), b.begin(), b.end())) return false;
  }
  return true;
}

namespace {

// <x_1..x_n [, y] || x_i^-1 e(x_i)>.
Presentation fixed_point_group(const Endomorphism& e) {
  const auto a = e.domain();
  std::vector<Word> relators;
  relators.reserve(a.x_count);
  for (std::uint32_t i = 1; i <= a.x_count; ++i) {
    const auto g = GeneratorId::x(i);
    relators.push_back(concat(Word::generator(a, g, -1), e.image(g)));
  }
  return Presentation(a, a.generators(), std::move(relators));
}

void require_theory(const BraidWord& b, Theory wanted, const char* what) {
  if (b.theory() != wanted && b.theory() != Theory::Classical) {
    throw DomainError(std::string(what) + " needs a " + std::string(to_string(wanted)) +
                      " or classical braid, got " + std::string(to_string(b.theory())));
  }
}

}  // namespace

Presentation group_of_virtual_link(const BraidWord& b) {
  require_theory(b, Theory::Virtual, "virtual link group");
  return fixed_point_group(Representation::psi(b.strands()).evaluate(b));
}

Presentation group_of_welded_link(const BraidWord& b) {
  require_theory(b, Theory::Welded, "welded link group");
  return fixed_point_group(Representation::welded(b.strands()).evaluate(b));
}

Presentation group_of_classical_link(const BraidWord& b) {
  if (b.theory() != Theory::Classical) {
    throw DomainError("classical link group needs a classical braid");
  }
  return fixed_point_group(Representation::artin(b.strands()).evaluate(b));
}

Presentation wada_group(const BraidWord& b, int k, int h) {
  if (k == 3 || k == 4) {
    throw DomainError("Wada type " + std::to_string(k) +
                      " does not extend to welded braids: the relation a_i s_{i+1} s_i = "
                      "s_{i+1} s_i a_{i+1} fails, so only types 1 and 2 define link groups");
  }
  if (k != 1 && k != 2) throw DomainError("Wada type must be 1 or 2");
  require_theory(b, Theory::Welded, "Wada group");
  return fixed_point_group(Representation::wada(b.strands(), k, h).evaluate(b));
}

Presentation quotient_y(const Presentation& p) {
  if (!p.has_generator(GeneratorId::y())) {
    throw DomainError("quotient_y: y is not a generator");
  }
  const Ambient target{p.ambient().x_count, false};
  std::vector<GeneratorId> gens;
  for (auto g : p.generators()) {
    if (!g.is_y()) gens.push_back(g);
  }
  std::vector<Word> relators;
  for (const auto& r : p.relators()) relators.push_back(erase_generator(r, GeneratorId::y(), target));
  return Presentation(target, std::move(gens), std::move(relators));
}

namespace {

using Code = std::uint64_t;

Code encode(const Letter& l) {
  const std::uint64_t g = l.gen.is_y() ? 0xFFFFFFFFULL : l.gen.index();
  return (g << 1) | (l.sign < 0 ? 1U : 0U);
}

std::vector<Code> least_rotation(std::vector<Code> s) {
  auto best = s;
  for (std::size_t k = 1; k < s.size(); ++k) {
    std::rotate(s.begin(), s.begin() + 1, s.end());
    if (s < best) best = s;
  }
  return best;
}

// Canonical representative of a cyclic word up to rotation and inversion.
std::vector<Code> cyclic_key(const Word& r) {
  std::vector<Code> fwd, inv;
  for (const auto& l : r.letters()) fwd.push_back(encode(l));
  for (auto it = r.letters().rbegin(); it != r.letters().rend(); ++it) inv.push_back(encode(it->inverse()));
  return std::min(least_rotation(std::move(fwd)), least_rotation(std::move(inv)));
}

std::optional<std::size_t> duplicate_relator(const Presentation& p) {
  const auto& rs = p.relators();
  std::map<std::vector<Code>, std::size_t> seen;
  for (std::size_t k = 0; k < rs.size(); ++k) {
    bool shares_length = false;
    for (std::size_t m = 0; m < rs.size(); ++m) {
      if (m != k && rs[m].size() == rs[k].size()) {
        shares_length = true;
        break;
      }
    }
    if (!shares_length) continue;
    if (!seen.emplace(cyclic_key(rs[k]), k).second) return k;
  }
  return std::nullopt;
}

// Generator rank for elimination preference: larger is preferred.
std::int64_t preference(GeneratorId g) { return g.is_y() ? -1 : static_cast<std::int64_t>(g.index()); }

}  // namespace

std::optional<Presentation> tietze_step(const Presentation& p) {
  if (auto dup = duplicate_relator(p)) {
    auto rels = p.relators();
    rels.erase(rels.begin() + static_cast<std::ptrdiff_t>(*dup));
    return Presentation(p.ambient(), p.generators(), std::move(rels));
  }

  const auto& rs = p.relators();
  std::vector<std::size_t> order(rs.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return rs[a].size() < rs[b].size(); });

  for (auto k : order) {
    const auto& r = rs[k];
    std::optional<GeneratorId> pick;
    for (auto g : p.generators()) {
      if (occurrences(r, g) != 1) continue;
      if (!pick || preference(g) > preference(*pick)) pick = g;
    }
    if (!pick) continue;

    // Rotate r to g^e w; then g = w^-1 when e = +1, g = w when e = -1.
    const auto ls = r.letters();
    std::size_t at = 0;
    while (ls[at].gen != *pick) ++at;
    const int e = ls[at].sign;
    WordBuilder rest(p.ambient());
    for (std::size_t m = 1; m < ls.size(); ++m) rest.push(ls[(at + m) % ls.size()]);
    Word w = std::move(rest).build();
    const Word replacement = e > 0 ? invert(w) : w;

    std::vector<Word> rels;
    rels.reserve(rs.size() - 1);
    for (std::size_t m = 0; m < rs.size(); ++m) {
      if (m == k) continue;
      WordBuilder out(p.ambient());
      for (const auto& l : rs[m].letters()) {
        if (l.gen != *pick) {
          out.push(l);
        } else if (l.sign > 0) {
          out.append(replacement);
        } else {
          out.append_inverse(replacement);
        }
      }
      rels.push_back(std::move(out).build());
    }
    std::vector<GeneratorId> gens;
    for (auto g : p.generators()) {
      if (g != *pick) gens.push_back(g);
    }
    return Presentation(p.ambient(), std::move(gens), std::move(rels));
  }
  return std::nullopt;
}

TietzeResult tietze_simplify(const Presentation& p, std::size_t budget) {
  TietzeResult result{p, false, 0};
  while (true) {
    std::optional<Presentation> next;
    try {
      next = tietze_step(result.presentation);
    } catch (const LimitExceeded&) {
      result.budget_exhausted = true;
      return result;
    }
    if (!next) return result;
    if (next->total_length() > budget) {
      result.budget_exhausted = true;
      return result;
    }
    result.presentation = std::move(*next);
    ++result.steps;
  }
}

std::optional<std::size_t> free_rank_certificate(const Presentation& p, std::size_t budget) {
  auto r = tietze_simplify(p, budget);
  if (r.presentation.relators().empty()) return r.presentation.generators().size();
  return std::nullopt;
}

IntegerMatrix relation_matrix(const Presentation& p) {
  IntegerMatrix m(p.relators().size(), p.generators().size());
  for (std::size_t r = 0; r < p.relators().size(); ++r) {
    for (std::size_t c = 0; c < p.generators().size(); ++c) {
      m(r, c) = exponent_sum(p.relators()[r], p.generators()[c]);
    }
  }
  return m;
}

namespace {

struct SmithWork {
  IntegerMatrix u, d, v;

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < d.cols(); ++c) std::swap(d(a, c), d(b, c));
    for (std::size_t c = 0; c < u.cols(); ++c) std::swap(u(a, c), u(b, c));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < d.rows(); ++r) std::swap(d(r, a), d(r, b));
    for (std::size_t r = 0; r < v.rows(); ++r) std::swap(v(r, a), v(r, b));
  }
  // row[dst] += q * row[src]
  void add_row(std::size_t dst, std::size_t src, std::int64_t q) {
    for (std::size_t c = 0; c < d.cols(); ++c) d(dst, c) = checked::add(d(dst, c), checked::mul(q, d(src, c)));
    for (std::size_t c = 0; c < u.cols(); ++c) u(dst, c) = checked::add(u(dst, c), checked::mul(q, u(src, c)));
  }
  void add_col(std::size_t dst, std::size_t src, std::int64_t q) {
    for (std::size_t r = 0; r < d.rows(); ++r) d(r, dst) = checked::add(d(r, dst), checked::mul(q, d(r, src)));
    for (std::size_t r = 0; r < v.rows(); ++r) v(r, dst) = checked::add(v(r, dst), checked::mul(q, v(r, src)));
  }
  void negate_row(std::size_t a) {
    for (std::size_t c = 0; c < d.cols(); ++c) d(a, c) = checked::mul(-1, d(a, c));
    for (std::size_t c = 0; c < u.cols(); ++c) u(a, c) = checked::mul(-1, u(a, c));
  }
};

std::int64_t magnitude(std::int64_t x) { return x < 0 ? checked::mul(-1, x) : x; }

}  // namespace

SmithForm smith_normal_form(const IntegerMatrix& m) {
  SmithWork w{IntegerMatrix::identity(m.rows()), m, IntegerMatrix::identity(m.cols())};
  const auto rows = m.rows();
  const auto cols = m.cols();
  const auto steps = std::min(rows, cols);
  for (std::size_t t = 0; t < steps; ++t) {
    while (true) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t pr = rows, pc = cols;
      std::int64_t best = 0;
      for (std::size_t r = t; r < rows; ++r) {
        for (std::size_t c = t; c < cols; ++c) {
          const auto a = magnitude(w.d(r, c));
          if (a != 0 && (best == 0 || a < best)) {
            best = a;
            pr = r;
            pc = c;
          }
        }
      }
      if (best == 0) break;
      w.swap_rows(t, pr);
      w.swap_cols(t, pc);
      const auto pivot = w.d(t, t);
      bool clean = true;
      for (std::size_t r = t + 1; r < rows; ++r) {
        if (w.d(r, t) == 0) continue;
        w.add_row(r, t, -(w.d(r, t) / pivot));
        if (w.d(r, t) != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        if (w.d(t, c) == 0) continue;
        w.add_col(c, t, -(w.d(t, c) / pivot));
        if (w.d(t, c) != 0) clean = false;
      }
      if (!clean) continue;
      // Enforce divisibility: fold an offending row into the pivot row.
      bool divides = true;
      for (std::size_t r = t + 1; r < rows && divides; ++r) {
        for (std::size_t c = t + 1; c < cols; ++c) {
          if (w.d(r, c) % pivot != 0) {
            w.add_row(t, r, 1);
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }
    if (w.d(t, t) < 0) w.negate_row(t);
  }

  SmithForm out{std::move(w.u), std::move(w.d), std::move(w.v), {}};
  for (std::size_t t = 0; t < steps; ++t) out.diagonal.push_back(out.d(t, t));
  if (!(out.u * m * out.v == out.d)) {
    throw Error("smith_normal_form: verification U*M*V == D failed");
  }
  return out;
}

std::string AbelianInvariants::to_string() const {
  std::string out;
  if (free_rank > 0) out = free_rank == 1 ? "Z" : "Z^" + std::to_string(free_rank);
  for (auto t : torsion) {
    if (!out.empty()) out += " + ";
    out += "Z/" + std::to_string(t);
  }
  return out.empty() ? "0" : out;
}

AbelianInvariants abelian_invariants(const Presentation& p) {
  const auto m = relation_matrix(p);
  const auto snf = smith_normal_form(m);
  AbelianInvariants inv;
  std::size_t rank = 0;
  for (auto d : snf.diagonal) {
    if (d != 0) ++rank;
    if (d >= 2) inv.torsion.push_back(d);
  }
  inv.free_rank = p.generators().size() - rank;
  return inv;
}

}  // namespace vgroups

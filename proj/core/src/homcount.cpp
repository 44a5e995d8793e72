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

#include "vgroups/homcount.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <sstream>
#include <thread>

#include "vgroups/error.hpp"
#include "vgroups/rng.hpp"

namespace vgroups {

FiniteGroupTable::FiniteGroupTable(std::string name, std::size_t order, std::vector<std::uint32_t> table)
    : name_(std::move(name)), order_(order), table_(std::move(table)) {
  const auto m = order_;
  if (m == 0) throw DomainError(name_ + ": a group has at least one element");
  if (table_.size() != m * m) throw DomainError(name_ + ": table must be order x order");
  for (auto v : table_) {
    if (v >= m) throw DomainError(name_ + ": table entry out of range");
  }
  for (std::uint32_t a = 0; a < m; ++a) {
    if (mul(0, a) != a || mul(a, 0) != a) throw DomainError(name_ + ": element 0 is not the identity");
  }
  // Latin square rows give unique solutions, hence inverses.
  inverse_.assign(m, static_cast<std::uint32_t>(m));
  for (std::uint32_t a = 0; a < m; ++a) {
    std::vector<bool> seen(m, false);
    for (std::uint32_t b = 0; b < m; ++b) {
      const auto c = mul(a, b);
      if (seen[c]) throw DomainError(name_ + ": row " + std::to_string(a) + " repeats an element");
      seen[c] = true;
      if (c == 0) inverse_[a] = b;
    }
  }
  for (std::uint32_t a = 0; a < m; ++a) {
    if (mul(inverse_[a], a) != 0) throw DomainError(name_ + ": inverses are not two-sided");
  }
  auto assoc = [&](std::uint32_t a, std::uint32_t b, std::uint32_t c) {
    if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
      throw DomainError(name_ + ": multiplication is not associative");
    }
  };
  if (m <= 64) {
    for (std::uint32_t a = 0; a < m; ++a)
      for (std::uint32_t b = 0; b < m; ++b)
        for (std::uint32_t c = 0; c < m; ++c) assoc(a, b, c);
  } else {
    Rng rng(m);
    for (int k = 0; k < 200'000; ++k) {
      assoc(static_cast<std::uint32_t>(uniform_below(rng, m)), static_cast<std::uint32_t>(uniform_below(rng, m)),
            static_cast<std::uint32_t>(uniform_below(rng, m)));
    }
  }
}

std::size_t FiniteGroupTable::conjugacy_class_count() const {
  std::vector<bool> seen(order_, false);
  std::size_t classes = 0;
  for (std::uint32_t a = 0; a < order_; ++a) {
    if (seen[a]) continue;
    ++classes;
    for (std::uint32_t g = 0; g < order_; ++g) seen[mul(mul(inv(g), a), g)] = true;
  }
  return classes;
}

bool FiniteGroupTable::is_abelian() const {
  for (std::uint32_t a = 0; a < order_; ++a)
    for (std::uint32_t b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

FiniteGroupTable FiniteGroupTable::parse(std::string_view text, std::string name) {
  std::istringstream in{std::string(text)};
  std::string word;
  std::size_t m = 0;
  if (!(in >> word) || word != "order" || !(in >> m) || m == 0) {
    throw ParseError("group table must start with 'order <m>'");
  }
  std::vector<std::uint32_t> table;
  table.reserve(m * m);
  long long v;
  while (in >> v) {
    if (v < 0) throw ParseError("group table entries must be non-negative");
    table.push_back(static_cast<std::uint32_t>(v));
  }
  if (!in.eof()) throw ParseError("group table contains a non-integer token");
  if (table.size() != m * m) {
    throw ParseError("group table has " + std::to_string(table.size()) + " entries, expected " +
                     std::to_string(m * m));
  }
  try {
    return FiniteGroupTable(std::move(name), m, std::move(table));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

std::string FiniteGroupTable::to_text() const {
  std::string out = "order " + std::to_string(order_) + "\n";
  for (std::uint32_t a = 0; a < order_; ++a) {
    for (std::uint32_t b = 0; b < order_; ++b) {
      if (b) out += ' ';
      out += std::to_string(mul(a, b));
    }
    out += '\n';
  }
  return out;
}

namespace {

using Perm = std::vector<std::uint8_t>;

// Table of a permutation group given by its elements; elements[0] must be
// the identity. Product convention: apply a, then b.
FiniteGroupTable from_permutations(std::string name, const std::vector<Perm>& elements) {
  std::map<Perm, std::uint32_t> index;
  for (std::uint32_t k = 0; k < elements.size(); ++k) index.emplace(elements[k], k);
  const auto m = elements.size();
  std::vector<std::uint32_t> table(m * m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      Perm c(elements[a].size());
      for (std::size_t p = 0; p < c.size(); ++p) c[p] = elements[b][elements[a][p]];
      table[a * m + b] = index.at(c);
    }
  }
  return FiniteGroupTable(std::move(name), m, std::move(table));
}

std::vector<Perm> all_permutations(std::uint8_t k, bool even_only) {
  Perm p(k);
  std::iota(p.begin(), p.end(), std::uint8_t{0});
  std::vector<Perm> out;
  do {
    std::size_t inversions = 0;
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = a + 1; b < k; ++b) inversions += p[a] > p[b];
    if (!even_only || inversions % 2 == 0) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Closure of a generating set by breadth-first multiplication.
std::vector<Perm> generated(const std::vector<Perm>& gens) {
  Perm id(gens.front().size());
  std::iota(id.begin(), id.end(), std::uint8_t{0});
  std::vector<Perm> out{id};
  std::map<Perm, bool> seen{{id, true}};
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (const auto& g : gens) {
      Perm c(id.size());
      for (std::size_t p = 0; p < c.size(); ++p) c[p] = g[out[k][p]];
      if (seen.emplace(c, true).second) out.push_back(c);
    }
  }
  return out;
}

}  // namespace

FiniteGroupTable cyclic_group(std::size_t k) {
  if (k == 0) throw DomainError("cyclic group order must be positive");
  std::vector<std::uint32_t> table(k * k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) table[a * k + b] = static_cast<std::uint32_t>((a + b) % k);
  return FiniteGroupTable("c" + std::to_string(k), k, std::move(table));
}

FiniteGroupTable direct_product(const FiniteGroupTable& g, const FiniteGroupTable& h) {
  const auto m = g.order() * h.order();
  std::vector<std::uint32_t> table(m * m);
  // (a, b) -> a * |H| + b keeps (0, 0) as element 0.
  for (std::uint32_t a1 = 0; a1 < g.order(); ++a1)
    for (std::uint32_t b1 = 0; b1 < h.order(); ++b1)
      for (std::uint32_t a2 = 0; a2 < g.order(); ++a2)
        for (std::uint32_t b2 = 0; b2 < h.order(); ++b2) {
          const auto x = a1 * h.order() + b1;
          const auto y = a2 * h.order() + b2;
          table[x * m + y] = static_cast<std::uint32_t>(g.mul(a1, a2) * h.order() + h.mul(b1, b2));
        }
  return FiniteGroupTable(g.name() + "x" + h.name(), m, std::move(table));
}

FiniteGroupTable builtin_group(std::string_view name) {
  if (name == "sym3") return from_permutations("sym3", all_permutations(3, false));
  if (name == "sym4") return from_permutations("sym4", all_permutations(4, false));
  if (name == "alt4") return from_permutations("alt4", all_permutations(4, true));
  if (name == "dihedral4" || name == "d4") {
    return from_permutations("dihedral4", generated({Perm{1, 2, 3, 0}, Perm{0, 3, 2, 1}}));
  }
  std::string_view digits;
  if (name.size() > 1 && name[0] == 'c') digits = name.substr(1);
  if (name.size() > 8 && name.substr(0, 7) == "cyclic(" && name.back() == ')') {
    digits = name.substr(7, name.size() - 8);
  }
  if (!digits.empty()) {
    std::size_t k = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
    if (ec == std::errc{} && ptr == digits.data() + digits.size() && k > 0) return cyclic_group(k);
  }
  throw ParseError("unknown group '" + std::string(name) + "'");
}

std::vector<FiniteGroupTable> default_battery() {
  std::vector<FiniteGroupTable> out;
  for (auto n : {"sym3", "dihedral4", "alt4", "sym4"}) out.push_back(builtin_group(n));
  return out;
}

namespace {

std::uint64_t checked_pow(std::uint64_t base, std::size_t exp) {
  std::uint64_t r = 1;
  for (std::size_t k = 0; k < exp; ++k) {
    if (__builtin_mul_overflow(r, base, &r)) throw LimitExceeded("hom count exceeds 64 bits");
  }
  return r;
}

struct CompiledLetter {
  std::uint32_t slot;
  bool inverse;
};

// Depth-first search over generator images. Relators are checked at the
// depth where their last generator is assigned.
class HomSearch {
 public:
  HomSearch(const FiniteGroupTable& g, std::size_t slots,
            std::vector<std::vector<std::vector<CompiledLetter>>> by_level)
      : g_(g), by_level_(std::move(by_level)), images_(slots) {}

  std::uint64_t count_with_first(std::uint32_t first) {
    images_[0] = first;
    return satisfied(0) ? descend(1) : 0;
  }

 private:
  bool satisfied(std::size_t level) const {
    for (const auto& rel : by_level_[level]) {
      std::uint32_t acc = 0;
      for (const auto& l : rel) {
        const auto e = images_[l.slot];
        acc = g_.mul(acc, l.inverse ? g_.inv(e) : e);
      }
      if (acc != 0) return false;
    }
    return true;
  }

  std::uint64_t descend(std::size_t level) {
    if (level == images_.size()) return 1;
    std::uint64_t total = 0;
    for (std::uint32_t e = 0; e < g_.order(); ++e) {
      images_[level] = e;
      if (satisfied(level)) total += descend(level + 1);
    }
    return total;
  }

  const FiniteGroupTable& g_;
  std::vector<std::vector<std::vector<CompiledLetter>>> by_level_;
  std::vector<std::uint32_t> images_;
};

}  // namespace

std::uint64_t count_homs(const Presentation& p, const FiniteGroupTable& g, const HomCountOptions& options) {
  const auto& gens = p.generators();
  std::vector<std::size_t> weight(gens.size(), 0);
  for (const auto& r : p.relators()) {
    for (std::size_t k = 0; k < gens.size(); ++k) weight[k] += occurrences(r, gens[k]);
  }
  // Most frequent generators first, so relators close early.
  std::vector<std::size_t> order;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    if (weight[k] > 0) order.push_back(k);
  }
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return weight[a] > weight[b]; });
  const std::size_t unused = gens.size() - order.size();
  const auto free_factor = checked_pow(g.order(), unused);
  if (order.empty()) return free_factor;

  std::uint64_t work = 1;
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (__builtin_mul_overflow(work, g.order(), &work) || work > options.cap) {
      throw LimitExceeded("hom count into " + g.name() + " needs " + std::to_string(g.order()) + "^" +
                          std::to_string(order.size()) + " evaluations, above the cap of " +
                          std::to_string(options.cap));
    }
  }

  std::vector<std::size_t> slot_of(gens.size());
  for (std::size_t s = 0; s < order.size(); ++s) slot_of[order[s]] = s;
  std::vector<std::vector<std::vector<CompiledLetter>>> by_level(order.size());
  for (const auto& r : p.relators()) {
    std::vector<CompiledLetter> compiled;
    std::size_t level = 0;
    for (const auto& l : r.letters()) {
      const auto k = static_cast<std::size_t>(std::find(gens.begin(), gens.end(), l.gen) - gens.begin());
      const auto s = static_cast<std::uint32_t>(slot_of[k]);
      compiled.push_back({s, l.sign < 0});
      level = std::max<std::size_t>(level, s);
    }
    by_level[level].push_back(std::move(compiled));
  }

  const unsigned jobs = std::max(1U, std::min<unsigned>(options.jobs, static_cast<unsigned>(g.order())));
  std::vector<std::uint64_t> partial(jobs, 0);
  auto worker = [&](unsigned w) {
    HomSearch search(g, order.size(), by_level);
    for (std::uint32_t e = w; e < g.order(); e += jobs) partial[w] += search.count_with_first(e);
  };
  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::jthread> threads;
    for (unsigned w = 0; w < jobs; ++w) threads.emplace_back(worker, w);
  }
  std::uint64_t total = 0;
  for (auto c : partial) total += c;
  std::uint64_t out;
  if (__builtin_mul_overflow(total, free_factor, &out)) throw LimitExceeded("hom count exceeds 64 bits");
  return out;
}

std::string Fingerprint::to_string() const {
  std::string out = abelian.to_string();
  for (const auto& [name, count] : counts) out += " " + name + "=" + std::to_string(count);
  return out;
}

Fingerprint fingerprint(const Presentation& p, std::span<const FiniteGroupTable> battery,
                        const HomCountOptions& options) {
  Fingerprint f{abelian_invariants(p), {}};
  for (const auto& g : battery) f.counts.emplace_back(g.name(), count_homs(p, g, options));
  return f;
}

}  // namespace vgroups

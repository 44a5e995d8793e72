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

#include "vgroups/freegroup.hpp"

#include <charconv>
#include <sstream>

#include "vgroups/error.hpp"

namespace vgroups {

std::string GeneratorId::name() const {
  return is_y() ? std::string("y") : "x" + std::to_string(index());
}

std::vector<GeneratorId> Ambient::generators() const {
  std::vector<GeneratorId> out;
  out.reserve(rank());
  for (std::size_t p = 0; p < rank(); ++p) out.push_back(generator(p));
  return out;
}

namespace {

void check_length(std::size_t n) {
  if (n > kMaxWordLength) {
    throw LimitExceeded("word length exceeds " + std::to_string(kMaxWordLength) + " letters");
  }
}

void require_same_ambient(const Ambient& a, const Ambient& b, const char* op) {
  if (!(a == b)) {
    throw DomainError(std::string(op) + ": ambient mismatch");
  }
}

std::string describe(GeneratorId g) {
  return g.is_y() ? "y" : "x" + std::to_string(g.index());
}

}  // namespace

void WordBuilder::push(Letter l) {
  if (!ambient_.contains(l.gen)) {
    throw DomainError("unknown generator " + describe(l.gen));
  }
  if (!letters_.empty() && letters_.back().cancels(l)) {
    letters_.pop_back();
    return;
  }
  letters_.push_back(l);
  check_length(letters_.size());
}

void WordBuilder::append(const Word& w) {
  for (const auto& l : w.letters()) push(l);
}

void WordBuilder::append_inverse(const Word& w) {
  auto ls = w.letters();
  for (auto it = ls.rbegin(); it != ls.rend(); ++it) push(it->inverse());
}

Word WordBuilder::build() && {
  Word w(ambient_);
  w.letters_ = std::move(letters_);
  return w;
}

Word reduce(Ambient ambient, std::span<const Letter> letters) {
  WordBuilder b(ambient);
  for (const auto& l : letters) b.push(l);
  return std::move(b).build();
}

Word Word::generator(Ambient ambient, GeneratorId g, int sign) {
  const Letter l{g, static_cast<std::int8_t>(sign < 0 ? -1 : 1)};
  return reduce(ambient, std::span<const Letter>(&l, 1));
}

Word Word::parse(Ambient ambient, std::string_view text) {
  std::vector<Letter> letters;
  std::istringstream in{std::string(text)};
  std::string tok;
  bool saw_one = false;
  while (in >> tok) {
    if (tok == "1") {
      saw_one = true;
      continue;
    }
    std::string_view t = tok;
    std::int8_t sign = 1;
    if (t.size() > 3 && t.substr(t.size() - 3) == "^-1") {
      sign = -1;
      t.remove_suffix(3);
    }
    GeneratorId g = GeneratorId::y();
    if (t == "y") {
      g = GeneratorId::y();
    } else if (t.size() >= 2 && t[0] == 'x') {
      std::uint32_t k = 0;
      auto [ptr, ec] = std::from_chars(t.data() + 1, t.data() + t.size(), k);
      if (ec != std::errc{} || ptr != t.data() + t.size() || k == 0) {
        throw ParseError("bad word token '" + tok + "'");
      }
      g = GeneratorId::x(k);
    } else {
      throw ParseError("bad word token '" + tok + "'");
    }
    letters.push_back(Letter{g, sign});
  }
  if (saw_one && !letters.empty()) {
    throw ParseError("'1' must stand alone as the identity word");
  }
  return reduce(ambient, letters);
}

std::string Word::to_string() const {
  if (letters_.empty()) return "1";
  std::string out;
  for (const auto& l : letters_) {
    if (!out.empty()) out += ' ';
    out += l.gen.name();
    if (l.sign < 0) out += "^-1";
  }
  return out;
}

Word concat(const Word& a, const Word& b) {
  require_same_ambient(a.ambient(), b.ambient(), "concat");
  WordBuilder out(a.ambient());
  out.append(a);
  out.append(b);
  return std::move(out).build();
}

Word invert(const Word& a) {
  WordBuilder out(a.ambient());
  out.append_inverse(a);
  return std::move(out).build();
}

CyclicReduction cyclic_reduce(const Word& a) {
  auto ls = a.letters();
  std::size_t lo = 0;
  std::size_t hi = ls.size();
  while (hi - lo >= 2 && ls[lo].cancels(ls[hi - 1])) {
    ++lo;
    --hi;
  }
  // a = c^-1 core c with c = ls[hi..end).
  return CyclicReduction{reduce(a.ambient(), ls.subspan(lo, hi - lo)),
                         reduce(a.ambient(), ls.subspan(hi))};
}

int exponent_sum(const Word& w, GeneratorId g) {
  int s = 0;
  for (const auto& l : w.letters()) {
    if (l.gen == g) s += l.sign;
  }
  return s;
}

std::size_t occurrences(const Word& w, GeneratorId g) {
  std::size_t n = 0;
  for (const auto& l : w.letters()) {
    if (l.gen == g) ++n;
  }
  return n;
}

Word erase_generator(const Word& w, GeneratorId g, Ambient target) {
  WordBuilder out(target);
  for (const auto& l : w.letters()) {
    if (l.gen != g) out.push(l);
  }
  return std::move(out).build();
}

Endomorphism::Endomorphism(Ambient domain, Ambient codomain, std::vector<Word> images)
    : domain_(domain), codomain_(codomain), images_(std::move(images)) {
  if (images_.size() != domain_.rank()) {
    throw DomainError("endomorphism needs one image per domain generator");
  }
  for (const auto& w : images_) {
    require_same_ambient(w.ambient(), codomain_, "endomorphism image");
  }
}

Endomorphism Endomorphism::identity(Ambient ambient) {
  std::vector<Word> images;
  images.reserve(ambient.rank());
  for (auto g : ambient.generators()) images.push_back(Word::generator(ambient, g));
  return Endomorphism(ambient, ambient, std::move(images));
}

const Word& Endomorphism::image(GeneratorId g) const {
  if (!domain_.contains(g)) {
    throw DomainError("generator " + describe(g) + " outside endomorphism domain");
  }
  return images_[domain_.position(g)];
}

Word apply(const Endomorphism& e, const Word& w) {
  if (!(w.ambient() == e.domain())) {
    throw DomainError("apply: word is not over the endomorphism's domain");
  }
  WordBuilder out(e.codomain());
  for (const auto& l : w.letters()) {
    const Word& img = e.image(l.gen);
    if (l.sign > 0) {
      out.append(img);
    } else {
      out.append_inverse(img);
    }
  }
  return std::move(out).build();
}

Endomorphism compose(const Endomorphism& f, const Endomorphism& g) {
  if (!(f.codomain() == g.domain())) {
    throw DomainError("compose: rank mismatch");
  }
  std::vector<Word> images;
  images.reserve(f.domain().rank());
  for (const auto& img : f.images()) images.push_back(apply(g, img));
  return Endomorphism(f.domain(), g.codomain(), std::move(images));
}

bool is_identity(const Endomorphism& e) {
  if (!(e.domain() == e.codomain())) return false;
  for (auto g : e.domain().generators()) {
    const auto& img = e.image(g);
    if (img.size() != 1 || img.letters()[0] != Letter{g, 1}) return false;
  }
  return true;
}

IntegerMatrix abelianized_matrix(const Endomorphism& e) {
  IntegerMatrix m(e.codomain().rank(), e.domain().rank());
  for (std::size_t j = 0; j < e.domain().rank(); ++j) {
    for (const auto& l : e.images()[j].letters()) {
      auto i = e.codomain().position(l.gen);
      m(i, j) += l.sign;
    }
  }
  return m;
}

Automorphism::Automorphism(Endomorphism forward, Endomorphism inverse)
    : forward_(std::move(forward)), inverse_(std::move(inverse)) {
  if (!(forward_.domain() == forward_.codomain()) || !(inverse_.domain() == forward_.domain()) ||
      !(inverse_.codomain() == forward_.domain())) {
    throw DomainError("automorphism: forward and inverse must act on one free group");
  }
  if (!is_identity(compose(forward_, inverse_)) || !is_identity(compose(inverse_, forward_))) {
    throw DomainError("automorphism: supplied inverse does not invert the forward map");
  }
}

Automorphism Automorphism::identity(Ambient ambient) {
  auto id = Endomorphism::identity(ambient);
  return Automorphism(id, id, Unchecked{});
}

}  // namespace vgroups

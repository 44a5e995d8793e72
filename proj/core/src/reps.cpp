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

#include "vgroups/reps.hpp"

#include <utility>

#include "vgroups/error.hpp"

namespace vgroups {

namespace {

// Builds words over `a` from compact (generator, exponent) runs.
class Words {
 public:
  explicit Words(Ambient a) : a_(a) {}

  Word x(std::uint32_t i, int e = 1) const { return power(GeneratorId::x(i), e); }
  Word y(int e = 1) const { return power(GeneratorId::y(), e); }

  Word power(GeneratorId g, int e) const {
    WordBuilder b(a_);
    for (int k = 0; k < (e < 0 ? -e : e); ++k) b.push(Letter{g, static_cast<std::int8_t>(e < 0 ? -1 : 1)});
    return std::move(b).build();
  }

  template <typename... Ws>
  Word product(const Ws&... ws) const {
    WordBuilder b(a_);
    (b.append(ws), ...);
    return std::move(b).build();
  }

 private:
  Ambient a_;
};

// Identity except on x_i, x_{i+1}.
Endomorphism local(Ambient a, std::uint32_t i, Word xi, Word xi1) {
  auto id = Endomorphism::identity(a);
  std::vector<Word> images(id.images().begin(), id.images().end());
  images[a.position(GeneratorId::x(i))] = std::move(xi);
  images[a.position(GeneratorId::x(i + 1))] = std::move(xi1);
  return Endomorphism(a, a, std::move(images));
}

// x_i -> x_i x_{i+1} x_i^-1, x_{i+1} -> x_i.
Automorphism artin_sigma(Ambient a, std::uint32_t i) {
  Words w(a);
  return Automorphism(local(a, i, w.product(w.x(i), w.x(i + 1), w.x(i, -1)), w.x(i)),
                      local(a, i, w.x(i + 1), w.product(w.x(i + 1, -1), w.x(i), w.x(i + 1))));
}

// x_i <-> x_{i+1}.
Automorphism swap(Ambient a, std::uint32_t i) {
  Words w(a);
  auto e = local(a, i, w.x(i + 1), w.x(i));
  return Automorphism(e, e);
}

// x_i -> y x_{i+1} y^-1, x_{i+1} -> y^-1 x_i y, y fixed. An involution.
Automorphism psi_rho(Ambient a, std::uint32_t i) {
  Words w(a);
  auto e = local(a, i, w.product(w.y(), w.x(i + 1), w.y(-1)), w.product(w.y(-1), w.x(i), w.y()));
  return Automorphism(e, e);
}

Automorphism wada_sigma(Ambient a, std::uint32_t i, int type, int h) {
  Words w(a);
  const auto xi = w.x(i);
  const auto xj = w.x(i + 1);
  switch (type) {
    case 1:
      // x_i -> x_i^h x_{i+1} x_i^-h, x_{i+1} -> x_i
      return Automorphism(local(a, i, w.product(w.x(i, h), xj, w.x(i, -h)), xi),
                          local(a, i, xj, w.product(w.x(i + 1, -h), xi, w.x(i + 1, h))));
    case 2:
      // x_i -> x_i x_{i+1}^-1 x_i, x_{i+1} -> x_i
      return Automorphism(local(a, i, w.product(xi, w.x(i + 1, -1), xi), xi),
                          local(a, i, xj, w.product(xj, w.x(i, -1), xj)));
    case 3:
      // x_i -> x_i x_{i+1} x_i, x_{i+1} -> x_i^-1
      return Automorphism(local(a, i, w.product(xi, xj, xi), w.x(i, -1)),
                          local(a, i, w.x(i + 1, -1), w.product(xj, xi, xj)));
    case 4:
      // x_i -> x_i^2 x_{i+1}, x_{i+1} -> x_{i+1}^-1 x_i^-1 x_{i+1}; fixes x_i x_{i+1}
      return Automorphism(local(a, i, w.product(w.x(i, 2), xj), w.product(w.x(i + 1, -1), w.x(i, -1), xj)),
                          local(a, i, w.product(xi, w.x(i + 1, -1), w.x(i, -1)), w.product(xi, w.x(i + 1, 2))));
    default:
      throw DomainError("Wada type must be 1, 2, 3 or 4");
  }
}

}  // namespace

Representation::Representation(RepKind kind, std::uint32_t strands, int wada_type, int wada_h)
    : kind_(kind), strands_(strands), wada_type_(wada_type), wada_h_(wada_h) {
  if (strands_ < 1) throw DomainError("representation needs at least one strand");
  target_ = Ambient{strands_, kind_ == RepKind::Psi};
  for (std::uint32_t i = 1; i < strands_; ++i) {
    switch (kind_) {
      case RepKind::Artin:
      case RepKind::Welded:
      case RepKind::Psi:
        sigma_.push_back(artin_sigma(target_, i));
        break;
      case RepKind::Wada:
        sigma_.push_back(wada_sigma(target_, i, wada_type_, wada_h_));
        break;
    }
    sigma_inv_.push_back(sigma_.back().inverted());
    if (kind_ == RepKind::Psi) {
      involution_.push_back(psi_rho(target_, i));
    } else if (kind_ != RepKind::Artin) {
      involution_.push_back(swap(target_, i));
    }
  }
}

Representation Representation::artin(std::uint32_t strands) {
  return Representation(RepKind::Artin, strands, 0, 0);
}
Representation Representation::psi(std::uint32_t strands) {
  return Representation(RepKind::Psi, strands, 0, 0);
}
Representation Representation::welded(std::uint32_t strands) {
  return Representation(RepKind::Welded, strands, 0, 0);
}
Representation Representation::wada(std::uint32_t strands, int type, int h) {
  if (type < 1 || type > 4) throw DomainError("Wada type must be 1, 2, 3 or 4");
  return Representation(RepKind::Wada, strands, type, type == 1 ? h : 0);
}

Representation Representation::by_name(std::string_view name, std::uint32_t strands, int wada_h) {
  if (name == "artin") return artin(strands);
  if (name == "psi") return psi(strands);
  if (name == "welded") return welded(strands);
  if (name.size() == 5 && name.substr(0, 4) == "wada" && name[4] >= '1' && name[4] <= '4') {
    return wada(strands, name[4] - '0', wada_h);
  }
  throw ParseError("unknown representation '" + std::string(name) + "'");
}

Theory Representation::theory() const {
  switch (kind_) {
    case RepKind::Artin:
      return Theory::Classical;
    case RepKind::Psi:
      return Theory::Virtual;
    case RepKind::Welded:
    case RepKind::Wada:
      return Theory::Welded;
  }
  return Theory::Classical;
}

std::string Representation::name() const {
  switch (kind_) {
    case RepKind::Artin:
      return "artin";
    case RepKind::Psi:
      return "psi";
    case RepKind::Welded:
      return "welded";
    case RepKind::Wada:
      return "wada" + std::to_string(wada_type_) + (wada_type_ == 1 ? "(h=" + std::to_string(wada_h_) + ")" : "");
  }
  return "?";
}

const Automorphism& Representation::generator_action(BraidLetter letter) const {
  if (letter.position < 1 || letter.position >= strands_) {
    throw DomainError("letter " + letter.to_string() + " out of range for " + name() + " on " +
                      std::to_string(strands_) + " strands");
  }
  const auto idx = letter.position - 1;
  if (letter.family == Family::Sigma) {
    return letter.sign > 0 ? sigma_[idx] : sigma_inv_[idx];
  }
  if (!family_allowed(letter.family, theory())) {
    throw DomainError("letter " + letter.to_string() + " is not acted on by " + name());
  }
  return involution_[idx];
}

Endomorphism Representation::evaluate(std::span<const BraidLetter> letters) const {
  auto result = Endomorphism::identity(target_);
  for (const auto& l : letters) result = compose(result, generator_action(l).forward());
  return result;
}

Endomorphism Representation::evaluate(const BraidWord& b) const {
  if (b.strands() != strands_) {
    throw DomainError("braid on " + std::to_string(b.strands()) + " strands given to " + name() +
                      " on " + std::to_string(strands_));
  }
  if (!accepts(b.theory())) {
    throw DomainError(std::string(to_string(b.theory())) + " braid given to " + name());
  }
  return evaluate(b.letters());
}

RelationReport check_relation(const Representation& rep, const DefiningRelation& rel) {
  const auto left = rep.evaluate(rel.left);
  const auto right = rep.evaluate(rel.right);
  RelationReport report{rel, true, std::nullopt};
  for (auto g : left.domain().generators()) {
    if (!(left.image(g) == right.image(g))) {
      report.holds = false;
      report.witness = RelationWitness{g, left.image(g), right.image(g)};
      break;
    }
  }
  return report;
}

std::vector<RelationReport> check_relations(const Representation& rep,
                                            std::span<const DefiningRelation> extra) {
  std::vector<RelationReport> out;
  for (const auto& rel : defining_relations(rep.theory(), rep.strands())) {
    out.push_back(check_relation(rep, rel));
  }
  for (const auto& rel : extra) out.push_back(check_relation(rep, rel));
  return out;
}

Endomorphism project_y(const Endomorphism& e) {
  if (!e.domain().with_y || !e.codomain().with_y) {
    throw DomainError("project_y: endomorphism does not involve y");
  }
  const Ambient target{e.codomain().x_count, false};
  const Ambient domain{e.domain().x_count, false};
  std::vector<Word> images;
  images.reserve(domain.rank());
  for (std::uint32_t i = 1; i <= domain.x_count; ++i) {
    images.push_back(erase_generator(e.image(GeneratorId::x(i)), GeneratorId::y(), target));
  }
  return Endomorphism(domain, target, std::move(images));
}

}  // namespace vgroups

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

#include "vgroups/markov.hpp"

#include <sstream>
#include <thread>

#include "vgroups/error.hpp"

namespace vgroups {

std::string Move::describe() const {
  switch (kind) {
    case MoveKind::RelationRewrite:
      return "rewrite " + relation + " at " + std::to_string(site);
    case MoveKind::Conjugation:
      return "conjugate by " + conjugator.to_string();
    case MoveKind::Stabilization:
      return "stabilize " + std::string(to_string(stabilization));
    case MoveKind::Exchange:
      return "exchange " + std::string(to_string(side)) + " cut=" + std::to_string(cut) +
             (to_virtual ? " classical->virtual" : " virtual->classical");
  }
  return "?";
}

std::string MoveTrace::to_text() const {
  std::ostringstream out;
  out << "theory " << to_string(theory) << "\n";
  out << "start [" << initial.strands() << "] " << serialize(initial) << "\n";
  for (std::size_t k = 0; k < steps.size(); ++k) {
    const auto& s = steps[k];
    out << "step " << k << ": " << s.move.describe();
    if (s.source) out << " from [" << s.source->strands() << "] " << serialize(*s.source);
    out << " -> [" << s.result.strands() << "] " << serialize(s.result) << "\n";
  }
  return out.str();
}

namespace {

enum class Menu { Rewrite, Conjugate, Stabilize, Exchange };

}  // namespace

MoveStep random_move(const BraidWord& b, Rng& rng, const MoveOptions& options) {
  std::vector<Menu> menu{Menu::Rewrite, Menu::Conjugate, Menu::Stabilize};
  if (b.theory() == Theory::Virtual) menu.push_back(Menu::Exchange);
  const bool can_grow = options.max_strands == 0 || b.strands() < options.max_strands;

  for (;;) {
    const auto pick = menu[uniform_below(rng, menu.size())];
    switch (pick) {
      case Menu::Rewrite: {
        std::vector<std::pair<const DefiningRelation*, std::size_t>> sites;
        const auto rels = defining_relations(b.theory(), b.strands());
        for (const auto& rel : rels) {
          for (auto at : relation_sites(b, rel)) sites.emplace_back(&rel, at);
        }
        if (sites.empty()) continue;
        const auto [rel, at] = sites[uniform_below(rng, sites.size())];
        Move m;
        m.kind = MoveKind::RelationRewrite;
        m.relation = rel->label();
        m.site = at;
        return MoveStep{m, std::nullopt, rewrite_with_relation(b, *rel, at)};
      }
      case Menu::Conjugate: {
        if (b.strands() < 2) continue;
        Move m;
        m.kind = MoveKind::Conjugation;
        m.conjugator = random_letter(b.strands(), b.theory(), rng);
        return MoveStep{m, std::nullopt, conjugate(b, m.conjugator)};
      }
      case Menu::Stabilize: {
        if (!can_grow) continue;
        Move m;
        m.kind = MoveKind::Stabilization;
        const std::uint64_t kinds = b.theory() == Theory::Classical ? 2 : 3;
        m.stabilization = static_cast<StabilizationKind>(uniform_below(rng, kinds));
        return MoveStep{m, std::nullopt, stabilize(b, m.stabilization)};
      }
      case Menu::Exchange: {
        if (!can_grow) continue;
        Move m;
        m.kind = MoveKind::Exchange;
        m.side = uniform_below(rng, 2) == 0 ? ExchangeSide::Right : ExchangeSide::Left;
        m.cut = uniform_below(rng, b.size() + 1);
        m.to_virtual = uniform_below(rng, 2) == 0;
        const auto ls = b.letters();
        const BraidWord b1(b.strands(), b.theory(), ls.first(m.cut));
        const BraidWord b2(b.strands(), b.theory(), ls.subspan(m.cut));
        auto pair = exchange_pair(b1, b2, m.side);
        if (m.to_virtual) {
          return MoveStep{m, std::move(pair.classical_form), std::move(pair.virtual_form)};
        }
        return MoveStep{m, std::move(pair.virtual_form), std::move(pair.classical_form)};
      }
    }
  }
}

std::string FuzzReport::to_text() const {
  std::ostringstream out;
  out << "markov-fuzz theory=" << to_string(config.theory) << " trials=" << config.trials
      << " strands<=" << config.strands << " len<=" << config.length << " depth=" << config.depth
      << " seed=" << config.seed;
  if (config.wada != 0) out << " wada=" << config.wada << " h=" << config.wada_h;
  out << "\n";
  out << "trials run: " << trials_run << ", comparisons: " << comparisons << ", skipped: " << skipped.size()
      << ", mismatches: " << mismatches.size() << "\n";
  for (const auto& [trial, reason] : skipped) out << "skipped trial " << trial << ": " << reason << "\n";
  for (const auto& m : mismatches) {
    out << "MISMATCH trial " << m.trial << " (seed " << config.seed << ", trial seed " << m.trial_seed
        << ") in segment starting at step " << m.segment_start << "\n";
    out << "  before: " << m.before.to_string() << "\n";
    out << "  after:  " << m.after.to_string() << "\n";
    std::istringstream trace(m.trace.to_text());
    std::string line;
    while (std::getline(trace, line)) out << "  " << line << "\n";
  }
  return out.str();
}

Presentation invariant_presentation(const BraidWord& b, const FuzzConfig& config) {
  Presentation p = [&] {
    if (config.wada != 0) {
      if (config.theory != Theory::Welded) throw DomainError("Wada groups need welded theory");
      return wada_group(b, config.wada, config.wada_h);
    }
    switch (config.theory) {
      case Theory::Virtual:
        return group_of_virtual_link(b);
      case Theory::Welded:
        return group_of_welded_link(b);
      case Theory::Classical:
        return group_of_classical_link(b);
    }
    throw DomainError("unknown theory");
  }();
  return tietze_simplify(p, config.tietze_budget).presentation;
}

FuzzTrialResult run_trial(const FuzzConfig& config, std::size_t trial) {
  if (config.strands < 2) throw DomainError("markov-fuzz needs at least two strands");
  FuzzTrialResult result;
  result.trial = trial;
  result.trial_seed = mix_seed(config.seed, trial);
  Rng rng(result.trial_seed);

  const auto n = static_cast<std::uint32_t>(2 + uniform_below(rng, config.strands - 1));
  const auto len = uniform_below(rng, config.length + 1);
  auto current = random_braid(n, len, config.theory, rng);
  result.trace = MoveTrace{config.theory, current, {}};

  for (std::size_t d = 0; d < config.depth; ++d) {
    result.trace.steps.push_back(random_move(result.trace.steps.empty() ? current : result.trace.steps.back().result,
                                             rng, config.moves));
  }

  auto fp = [&](const BraidWord& b) {
    return fingerprint(invariant_presentation(b, config), config.battery, config.homcount);
  };
  try {
    auto start = fp(current);
    std::size_t segment_start = 0;
    auto compare = [&](const Fingerprint& end) {
      ++result.comparisons;
      if (!(end == start) && !result.mismatch) {
        result.mismatch = FuzzMismatch{trial, result.trial_seed, result.trace, segment_start, start, end};
      }
    };
    for (std::size_t d = 0; d < result.trace.steps.size(); ++d) {
      const auto& step = result.trace.steps[d];
      if (step.source) {
        compare(fp(current));
        start = fp(*step.source);
        segment_start = d;
      }
      current = step.result;
    }
    compare(fp(current));
  } catch (const LimitExceeded& e) {
    result.skipped = e.what();
  }
  return result;
}

FuzzReport fuzz(const FuzzConfig& config) {
  std::vector<FuzzTrialResult> results(config.trials);
  const unsigned jobs = std::max(1U, config.jobs);
  auto worker = [&](unsigned w) {
    for (std::size_t t = w; t < config.trials; t += jobs) results[t] = run_trial(config, t);
  };
  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::jthread> threads;
    for (unsigned w = 0; w < jobs; ++w) threads.emplace_back(worker, w);
  }
  FuzzReport report;
  report.config = config;
  for (auto& r : results) {
    ++report.trials_run;
    report.comparisons += r.comparisons;
    if (r.skipped) report.skipped.emplace_back(r.trial, *r.skipped);
    if (r.mismatch) report.mismatches.push_back(std::move(*r.mismatch));
  }
  return report;
}

}  // namespace vgroups

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

#include "vgroups_cli/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "vgroups/braid.hpp"
#include "vgroups/error.hpp"
#include "vgroups/freegroup.hpp"
#include "vgroups/homcount.hpp"
#include "vgroups/markov.hpp"
#include "vgroups/present.hpp"
#include "vgroups/reps.hpp"

namespace vgroups::cli {
namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kCapEnv = "VGROUPS_HOMCOUNT_CAP";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "text";
  unsigned jobs = 1;
  std::uint64_t cap = kDefaultHomCountCap;
  std::size_t budget = kDefaultTietzeBudget;

  std::string theory = "virtual";
  std::uint32_t strands = 0;
  std::string word;
  std::string rep;
  int wada_h = 1;
  std::string on;
  std::string input;
  std::vector<std::string> groups;
  bool include_forbidden = false;
  bool quotient = false;
  bool simplify = false;
  int wada = 0;

  std::size_t trials = 100;
  std::size_t length = 10;
  std::size_t depth = 6;
  std::uint64_t seed = 1;
  std::uint32_t max_strands = 0;
};

std::string one_line(std::string s) {
  std::replace(s.begin(), s.end(), '\n', ' ');
  std::replace(s.begin(), s.end(), '\r', ' ');
  return s;
}

bool structured(const Options& o) { return o.format == "structured"; }

HomCountOptions homcount_options(const Options& o) { return {o.cap, o.jobs}; }

std::string read_all(std::istream& in) {
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Presentation read_presentation(const Options& o, std::istream& in) {
  if (o.input.empty() || o.input == "-") return Presentation::parse(read_all(in));
  std::ifstream file(o.input);
  if (!file) throw UsageError("cannot open '" + o.input + "'");
  return Presentation::parse(read_all(file));
}

std::string emit_presentation(const Presentation& p, const Options& o) {
  if (!structured(o)) return p.to_text();
  return p.to_structured() + "\n";
}

// --- parse ---------------------------------------------------------------

std::string cmd_parse(const Options& o) {
  const auto b = parse_braid(o.word, o.strands, parse_theory(o.theory));
  const auto perm = underlying_permutation(b);
  std::vector<std::uint32_t> one_based;
  for (auto v : perm) one_based.push_back(v + 1);
  if (structured(o)) {
    Json j;
    j["braid"] = serialize(b);
    j["strands"] = b.strands();
    j["theory"] = std::string(to_string(b.theory()));
    j["length"] = b.size();
    j["permutation"] = one_based;
    j["components"] = cycle_count(perm);
    return j.dump(2) + "\n";
  }
  std::ostringstream out;
  out << "braid: " << serialize(b) << "\n";
  out << "strands: " << b.strands() << "\n";
  out << "theory: " << to_string(b.theory()) << "\n";
  out << "length: " << b.size() << "\n";
  out << "permutation:";
  for (auto v : one_based) out << ' ' << v;
  out << "\n";
  out << "components: " << cycle_count(perm) << "\n";
  return out.str();
}

// --- act -----------------------------------------------------------------

std::string cmd_act(const Options& o, bool h_given) {
  if (h_given && o.rep != "wada1") throw UsageError("--wada-h applies only to --rep wada1");
  const auto rep = Representation::by_name(o.rep, o.strands, o.wada_h);
  const auto b = parse_braid(o.word, o.strands, rep.theory());
  std::optional<Word> on;
  if (!o.on.empty()) on = Word::parse(rep.target(), o.on);

  const auto e = rep.evaluate(b);
  if (on) {
    const auto image = apply(e, *on);
    if (structured(o)) {
      Json j;
      j["word"] = on->to_string();
      j["image"] = image.to_string();
      return j.dump(2) + "\n";
    }
    return image.to_string() + "\n";
  }
  if (structured(o)) {
    Json j;
    j["representation"] = rep.name();
    j["braid"] = serialize(b);
    Json images = Json::object();
    for (auto g : rep.target().generators()) images[g.name()] = e.image(g).to_string();
    j["images"] = images;
    return j.dump(2) + "\n";
  }
  std::ostringstream out;
  for (auto g : rep.target().generators()) out << g.name() << " -> " << e.image(g).to_string() << "\n";
  return out.str();
}

// --- present / simplify / abelianize ---------------------------------------

std::string cmd_present(const Options& o, bool h_given) {
  const auto theory = parse_theory(o.theory);
  if (o.quotient && theory != Theory::Virtual) throw UsageError("--quotient-y needs --theory virtual");
  if (o.wada != 0) {
    if (theory == Theory::Virtual) throw UsageError("--wada needs --theory welded or classical");
    if (o.quotient) throw UsageError("--wada and --quotient-y are exclusive");
    if (o.wada < 1 || o.wada > 4) throw UsageError("--wada must be 1..4");
  }
  if (h_given && o.wada != 1) throw UsageError("--wada-h applies only to --wada 1");
  const auto b = parse_braid(o.word, o.strands, theory);
  Presentation p = [&] {
    if (o.wada != 0) return wada_group(b, o.wada, o.wada_h);
    switch (theory) {
      case Theory::Virtual:
        return group_of_virtual_link(b);
      case Theory::Welded:
        return group_of_welded_link(b);
      case Theory::Classical:
        break;
    }
    return group_of_classical_link(b);
  }();
  if (o.quotient) p = quotient_y(p);
  return emit_presentation(p, o);
}

std::string cmd_simplify(const Options& o, std::istream& in, std::ostream& err) {
  const auto p = read_presentation(o, in);
  const auto r = tietze_simplify(p, o.budget);
  if (r.budget_exhausted) err << "warning: tietze budget exhausted; result is partially simplified\n";
  return emit_presentation(r.presentation, o);
}

std::string cmd_abelianize(const Options& o, std::istream& in) {
  const auto inv = abelian_invariants(read_presentation(o, in));
  if (structured(o)) {
    Json j;
    j["group"] = inv.to_string();
    j["free_rank"] = inv.free_rank;
    j["torsion"] = inv.torsion;
    return j.dump(2) + "\n";
  }
  return inv.to_string() + "\n";
}

// --- homcount ------------------------------------------------------------

FiniteGroupTable load_group(const std::string& selector) {
  if (selector.rfind("table:", 0) == 0) {
    const auto path = selector.substr(6);
    std::ifstream file(path);
    if (!file) throw UsageError("cannot open group table '" + path + "'");
    return FiniteGroupTable::parse(read_all(file), selector);
  }
  try {
    return builtin_group(selector);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

std::string cmd_homcount(const Options& o, std::istream& in) {
  std::vector<FiniteGroupTable> groups;
  std::vector<std::string> labels;
  if (o.groups.empty()) {
    groups = default_battery();
    for (const auto& g : groups) labels.push_back(g.name());
  } else {
    for (const auto& selector : o.groups) {
      groups.push_back(load_group(selector));
      labels.push_back(selector);
    }
  }
  auto p = read_presentation(o, in);
  if (o.simplify) p = tietze_simplify(p, o.budget).presentation;

  std::vector<std::uint64_t> counts;
  for (const auto& g : groups) counts.push_back(count_homs(p, g, homcount_options(o)));
  if (structured(o)) {
    Json j = Json::object();
    for (std::size_t k = 0; k < groups.size(); ++k) j[labels[k]] = counts[k];
    return j.dump(2) + "\n";
  }
  std::ostringstream out;
  for (std::size_t k = 0; k < groups.size(); ++k) out << labels[k] << ": " << counts[k] << "\n";
  return out.str();
}

// --- check-relations -----------------------------------------------------

std::string cmd_check_relations(const Options& o, bool h_given) {
  if (h_given && o.rep != "wada1") throw UsageError("--wada-h applies only to --rep wada1");
  const auto rep = Representation::by_name(o.rep, o.strands, o.wada_h);
  std::vector<DefiningRelation> extra;
  if (o.include_forbidden) {
    if (rep.theory() == Theory::Classical) throw UsageError("--include-forbidden needs a virtual or welded representation");
    extra = forbidden_relations(rep.theory(), o.strands);
  }
  const auto reports = check_relations(rep, extra);
  std::size_t failed = 0;
  for (const auto& r : reports) failed += r.holds ? 0 : 1;

  if (structured(o)) {
    Json j;
    j["representation"] = rep.name();
    j["strands"] = o.strands;
    Json rows = Json::array();
    for (const auto& r : reports) {
      Json row;
      row["relation"] = r.relation.label();
      row["holds"] = r.holds;
      if (r.witness) {
        row["witness"] = {{"generator", r.witness->generator.name()},
                          {"left", r.witness->left_image.to_string()},
                          {"right", r.witness->right_image.to_string()}};
      }
      rows.push_back(row);
    }
    j["relations"] = rows;
    j["passed"] = reports.size() - failed;
    j["failed"] = failed;
    return j.dump(2) + "\n";
  }
  std::ostringstream out;
  out << "representation " << rep.name() << ", " << o.strands << " strands\n";
  for (const auto& r : reports) {
    out << (r.holds ? "PASS  " : "FAIL  ") << r.relation.label() << "\n";
    if (r.witness) {
      out << "      witness " << r.witness->generator.name() << ": " << r.witness->left_image.to_string()
          << " | " << r.witness->right_image.to_string() << "\n";
    }
  }
  out << reports.size() - failed << " passed, " << failed << " failed\n";
  return out.str();
}

// --- markov-fuzz ---------------------------------------------------------

int cmd_fuzz(const Options& o, bool h_given, std::string& text) {
  const auto theory = parse_theory(o.theory);
  if (theory == Theory::Classical) throw UsageError("--theory must be virtual or welded");
  if (o.wada != 0) {
    if (theory != Theory::Welded) throw UsageError("--wada needs --theory welded");
    if (o.wada != 1 && o.wada != 2) throw UsageError("--wada must be 1 or 2 (types 3 and 4 are not welded invariants)");
  }
  if (h_given && o.wada != 1) throw UsageError("--wada-h applies only to --wada 1");
  if (o.max_strands != 0 && o.max_strands < o.strands) throw UsageError("--max-strands is below --strands");

  FuzzConfig cfg;
  cfg.theory = theory;
  cfg.trials = o.trials;
  cfg.strands = o.strands;
  cfg.length = o.length;
  cfg.depth = o.depth;
  cfg.seed = o.seed;
  cfg.wada = o.wada;
  cfg.wada_h = o.wada_h;
  cfg.homcount = {o.cap, 1};
  cfg.tietze_budget = o.budget;
  cfg.moves.max_strands = o.max_strands;
  cfg.jobs = o.jobs;
  const auto report = fuzz(cfg);

  if (structured(o)) {
    Json j;
    j["theory"] = std::string(to_string(theory));
    j["trials"] = cfg.trials;
    j["seed"] = cfg.seed;
    j["wada"] = cfg.wada;
    j["trials_run"] = report.trials_run;
    j["comparisons"] = report.comparisons;
    Json skipped = Json::array();
    for (const auto& [trial, reason] : report.skipped) skipped.push_back({{"trial", trial}, {"reason", reason}});
    j["skipped"] = skipped;
    Json mism = Json::array();
    for (const auto& m : report.mismatches) {
      mism.push_back({{"trial", m.trial},
                      {"trial_seed", m.trial_seed},
                      {"segment_start", m.segment_start},
                      {"before", m.before.to_string()},
                      {"after", m.after.to_string()},
                      {"trace", m.trace.to_text()}});
    }
    j["mismatches"] = mism;
    text = j.dump(2) + "\n";
  } else {
    text = report.to_text();
  }
  return report.ok() ? kOk : kFuzzMismatch;
}

// --- dispatch ------------------------------------------------------------

void add_word_options(CLI::App* sub, Options& o) {
  sub->add_option("--strands", o.strands, "Number of strands")->required()->check(CLI::Range(1u, 100000u));
  sub->add_option("--word", o.word, "Braid word, e.g. \"s1 s1 r1\"")->required();
}

void add_input_option(CLI::App* sub, Options& o) {
  sub->add_option("--input,input", o.input, "Presentation file ('-' or omitted: standard input)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Group invariants of virtual and welded braid closures", "vgroups"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "structured"}));
  app.add_option("--jobs", o.jobs, "Worker threads")->check(CLI::Range(1u, 256u));
  app.add_option("--cap", o.cap, "Hom-count enumeration cap")->envname(kCapEnv)->check(CLI::PositiveNumber);
  app.add_option("--budget", o.budget, "Tietze letter budget")->check(CLI::PositiveNumber);

  const std::vector<std::string> theories{"classical", "virtual", "welded"};
  const std::vector<std::string> reps{"artin", "psi", "welded", "wada1", "wada2", "wada3", "wada4"};

  auto* parse = app.add_subcommand("parse", "Normalize a braid word and report its permutation");
  parse->add_option("--theory", o.theory)->check(CLI::IsMember(theories));
  add_word_options(parse, o);

  auto* act = app.add_subcommand("act", "Evaluate a representation on a braid");
  act->add_option("--rep", o.rep)->required()->check(CLI::IsMember(reps));
  auto* act_h = act->add_option("--wada-h", o.wada_h, "Exponent of Wada type 1");
  add_word_options(act, o);
  act->add_option("--on", o.on, "Free-group word to act on");

  auto* present = app.add_subcommand("present", "Emit the link group presentation of a braid closure");
  present->add_option("--theory", o.theory)->check(CLI::IsMember(theories));
  add_word_options(present, o);
  present->add_option("--wada", o.wada, "Wada group type instead of the link group");
  auto* present_h = present->add_option("--wada-h", o.wada_h, "Exponent of Wada type 1");
  present->add_flag("--quotient-y", o.quotient, "Kill the generator y");

  auto* simplify = app.add_subcommand("simplify", "Tietze-simplify a presentation");
  add_input_option(simplify, o);

  auto* abelianize = app.add_subcommand("abelianize", "Abelian invariants of a presentation");
  add_input_option(abelianize, o);

  auto* homcount = app.add_subcommand("homcount", "Count homomorphisms into finite groups");
  add_input_option(homcount, o);
  homcount->add_option("--group", o.groups, "sym3|sym4|alt4|d4|c<k>|table:<path> (repeatable)");
  homcount->add_flag("--simplify", o.simplify, "Tietze-simplify before counting");

  auto* check = app.add_subcommand("check-relations", "Check defining relations under a representation");
  check->add_option("--rep", o.rep)->required()->check(CLI::IsMember(reps));
  auto* check_h = check->add_option("--wada-h", o.wada_h, "Exponent of Wada type 1");
  check->add_option("--strands", o.strands)->required()->check(CLI::Range(1u, 100000u));
  check->add_flag("--include-forbidden", o.include_forbidden, "Also check the forbidden relations");

  auto* fuzzcmd = app.add_subcommand("markov-fuzz", "Check invariance under random Markov-type moves");
  fuzzcmd->add_option("--theory", o.theory)->check(CLI::IsMember(theories));
  fuzzcmd->add_option("--trials", o.trials);
  o.strands = 4;
  fuzzcmd->add_option("--strands", o.strands, "Maximum initial strands")->check(CLI::Range(2u, 64u));
  fuzzcmd->add_option("--len", o.length, "Maximum initial length");
  fuzzcmd->add_option("--depth", o.depth, "Moves per trial");
  fuzzcmd->add_option("--seed", o.seed);
  fuzzcmd->add_option("--wada", o.wada, "Fingerprint the Wada group of type 1 or 2");
  auto* fuzz_h = fuzzcmd->add_option("--wada-h", o.wada_h, "Exponent of Wada type 1");
  fuzzcmd->add_option("--max-strands", o.max_strands, "No stabilization or exchange beyond this many strands");

  auto* examples = app.add_subcommand("paper-examples", "Replay the worked examples as a regression suite");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    const auto subs = app.get_subcommands();
    out << (subs.empty() ? app.help() : subs.front()->help());
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: usage: " << one_line(e.what()) << "\n";
    return kUsageError;
  }

  std::string text;
  int status = kOk;
  try {
    if (parse->parsed()) {
      text = cmd_parse(o);
    } else if (act->parsed()) {
      text = cmd_act(o, act_h->count() > 0);
    } else if (present->parsed()) {
      text = cmd_present(o, present_h->count() > 0);
    } else if (simplify->parsed()) {
      text = cmd_simplify(o, in, err);
    } else if (abelianize->parsed()) {
      text = cmd_abelianize(o, in);
    } else if (homcount->parsed()) {
      text = cmd_homcount(o, in);
    } else if (check->parsed()) {
      text = cmd_check_relations(o, check_h->count() > 0);
    } else if (fuzzcmd->parsed()) {
      status = cmd_fuzz(o, fuzz_h->count() > 0, text);
    } else if (examples->parsed()) {
      std::ostringstream ss;
      status = run_regression_suite(ss) == 0 ? kOk : kComputationError;
      text = ss.str();
    }
  } catch (const UsageError& e) {
    err << "error: usage: " << one_line(e.what()) << "\n";
    return kUsageError;
  } catch (const ParseError& e) {
    err << "error: parse: " << one_line(e.what()) << "\n";
    return kUsageError;
  } catch (const DomainError& e) {
    err << "error: domain: " << one_line(e.what()) << "\n";
    return kUsageError;
  } catch (const LimitExceeded& e) {
    err << "error: limit: " << one_line(e.what()) << "\n";
    return kComputationError;
  } catch (const std::exception& e) {
    err << "error: compute: " << one_line(e.what()) << "\n";
    return kComputationError;
  }
  out << text;
  return status;
}

}  // namespace vgroups::cli

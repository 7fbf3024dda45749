#pragma once

// Command line surface. run() parses an argument vector, dispatches to the
// library, and returns the exit code together with everything that would be
// printed, so the whole surface is testable in process. Exit codes: 0 for
// success or a proved equivalence, 1 for a definite or unresolved negative,
// 2 for usage and input errors.

#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "stvb/closure.hpp"
#include "stvb/invariants.hpp"
#include "stvb/markov.hpp"
#include "stvb/morse.hpp"
#include "stvb/reduced.hpp"
#include "stvb/relations.hpp"
#include "stvb/rewrite.hpp"
#include "stvb/search.hpp"
#include "stvb/word.hpp"

namespace stvb::cli {

struct RunResult {
  int code = 0;
  std::string out;
};

namespace detail {

using Json = nlohmann::ordered_json;

inline const char* outcome_name(Outcome o) {
  switch (o) {
    case Outcome::Equivalent: return "Equivalent";
    case Outcome::DistinctByInvariant: return "DistinctByInvariant";
    case Outcome::NotProvedWithinBounds: return "NotProvedWithinBounds";
  }
  return "?";
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in.good()) throw Error(ErrorKind::IllegalParams, "cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

inline Json record_json(const InvariantRecord& rec) {
  Json j;
  j["perm"] = rec.perm;
  j["bars"] = rec.bars;
  j["sigmaExp"] = rec.sigma_exp;
  j["tauCount"] = rec.tau_count;
  j["vParity"] = rec.v_parity;
  j["gammaParity"] = rec.gamma_parity;
  return j;
}

inline Json closure_json(const ClosureCode& code) {
  Json comps = Json::array();
  for (const std::vector<ClosureEvent>& comp : code.components) {
    Json events = Json::array();
    for (const ClosureEvent& ev : comp) {
      Json e;
      e["kind"] = event_kind_name(ev.kind);
      if (ev.kind != EventKind::Bar) e["crossing"] = ev.crossing;
      if (ev.kind == EventKind::Over || ev.kind == EventKind::Under) e["sign"] = ev.sign;
      events.push_back(std::move(e));
    }
    comps.push_back(std::move(events));
  }
  Json j;
  j["components"] = std::move(comps);
  return j;
}

inline std::string closure_text(const ClosureCode& code) {
  std::ostringstream os;
  for (std::size_t c = 0; c < code.components.size(); ++c) {
    os << "component " << c + 1 << ":";
    for (const ClosureEvent& ev : code.components[c]) {
      os << ' ' << event_kind_name(ev.kind);
      if (ev.kind == EventKind::Over || ev.kind == EventKind::Under)
        os << (ev.sign > 0 ? '+' : '-') << ev.crossing;
      else if (ev.kind != EventKind::Bar)
        os << ev.crossing;
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace detail

inline RunResult run(std::vector<std::string> args) {
  using detail::Json;
  CLI::App app{"exact computation with singular twisted virtual braid words"};
  app.name("stvb");
  app.require_subcommand(1);

  std::string word_a, word_b, letter, file, rules = "standard", moves = "full";
  std::string presentation;
  int degree = 0, max_degree = 0;
  std::size_t max_len = 0;
  std::uint64_t max_states = 1000000;
  bool json = false;
  const auto add_json = [&](CLI::App* cmd) {
    cmd->add_flag("--json", json, "machine readable output");
  };

  CLI::App* cmd_parse = app.add_subcommand("parse", "parse a word and echo it");
  cmd_parse->add_option("word", word_a)->required();
  add_json(cmd_parse);

  CLI::App* cmd_inv = app.add_subcommand("inv", "invariant record of a word");
  cmd_inv->add_option("word", word_a)->required();
  add_json(cmd_inv);

  CLI::App* cmd_equiv = app.add_subcommand("equiv", "bounded rewrite search between two words");
  cmd_equiv->add_option("first", word_a)->required();
  cmd_equiv->add_option("second", word_b)->required();
  cmd_equiv->add_option("--rules", rules, "standard|reduced|standard+aux");
  cmd_equiv->add_option("--max-len", max_len)->check(CLI::PositiveNumber);
  cmd_equiv->add_option("--max-states", max_states)->check(CLI::PositiveNumber);
  add_json(cmd_equiv);

  CLI::App* cmd_expand = app.add_subcommand("expand", "expand one generator over index one");
  cmd_expand->add_option("letter", letter)->required();
  cmd_expand->add_option("--degree", degree)->required()->check(CLI::PositiveNumber);
  add_json(cmd_expand);

  CLI::App* cmd_reduce = app.add_subcommand("reduce", "rewrite a word over the reduced generators");
  cmd_reduce->add_option("word", word_a)->required();
  add_json(cmd_reduce);

  CLI::App* cmd_markov = app.add_subcommand("markov", "bounded move search between closures");
  cmd_markov->add_option("first", word_a)->required();
  cmd_markov->add_option("second", word_b)->required();
  cmd_markov->add_option("--max-degree", max_degree)->check(CLI::PositiveNumber);
  cmd_markov->add_option("--max-len", max_len)->check(CLI::PositiveNumber);
  cmd_markov->add_option("--max-states", max_states)->check(CLI::PositiveNumber);
  cmd_markov->add_option("--moves", moves, "full|reduced");
  add_json(cmd_markov);

  CLI::App* cmd_close = app.add_subcommand("close", "trace the closure of a word");
  cmd_close->add_option("word", word_a)->required();
  add_json(cmd_close);

  CLI::App* cmd_braid = app.add_subcommand("braid", "compile a diagram file to a braid word");
  cmd_braid->add_option("file", file)->required();
  add_json(cmd_braid);

  CLI::App* cmd_verify = app.add_subcommand("verify", "sweep every relation instance");
  cmd_verify->add_option("--presentation", presentation, "standard|reduced")->required();
  cmd_verify->add_option("--degree", degree)->required()->check(CLI::PositiveNumber);
  add_json(cmd_verify);

  CLI::App* cmd_check = app.add_subcommand("check", "replay a derivation file");
  cmd_check->add_option("file", file)->required();
  add_json(cmd_check);

  std::reverse(args.begin(), args.end());
  try {
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    std::ostringstream os;
    const int code = app.exit(e, os, os);
    return {code == 0 ? 0 : 2, os.str()};
  }

  std::ostringstream out;
  int code = 0;
  try {
    if (cmd_parse->parsed()) {
      const BraidWord w = parse_word(word_a);
      if (json) {
        Json j;
        j["degree"] = w.degree;
        j["length"] = w.letters.size();
        j["word"] = format_word(w);
        out << j.dump() << '\n';
      } else {
        out << format_word(w) << '\n';
      }
    } else if (cmd_inv->parsed()) {
      const InvariantRecord rec = invariant_record(parse_word(word_a));
      if (json) {
        out << detail::record_json(rec).dump() << '\n';
      } else {
        const auto row = [&](const char* name, const std::vector<int>& xs) {
          out << name << ':';
          for (const int x : xs) out << ' ' << x;
          out << '\n';
        };
        row("perm", rec.perm);
        row("bars", rec.bars);
        out << "sigmaExp: " << rec.sigma_exp << '\n';
        out << "tauCount: " << rec.tau_count << '\n';
        out << "vParity: " << rec.v_parity << '\n';
        out << "gammaParity: " << rec.gamma_parity << '\n';
      }
    } else if (cmd_equiv->parsed()) {
      const BraidWord a = parse_word(word_a);
      const BraidWord b = parse_word(word_b);
      if (max_len == 0) max_len = std::max(a.letters.size(), b.letters.size()) + 4;
      const EquivalenceResult res =
          equivalent(a, b, ruleset_from_string(rules), max_len, max_states);
      code = res.outcome == Outcome::Equivalent ? 0 : 1;
      if (json) {
        Json j;
        j["outcome"] = detail::outcome_name(res.outcome);
        j["field"] = res.field;
        j["states"] = res.stats.states;
        Json trace = Json::array();
        for (const RewriteStep& st : res.trace) trace.push_back(format_step(st));
        j["trace"] = std::move(trace);
        out << j.dump() << '\n';
      } else if (res.outcome == Outcome::Equivalent) {
        out << "equivalent\nsteps: " << res.trace.size() << "\nstates: " << res.stats.states
            << '\n';
        for (const RewriteStep& st : res.trace) out << format_step(st) << '\n';
      } else if (res.outcome == Outcome::DistinctByInvariant) {
        out << "distinct by invariant: " << res.field << "\nstates: " << res.stats.states << '\n';
      } else {
        out << "not proved within bounds\nstates: " << res.stats.states << '\n';
      }
    } else if (cmd_expand->parsed()) {
      const BraidWord w = parse_word(std::to_string(degree) + "; " + letter);
      if (w.letters.size() != 1)
        throw Error(ErrorKind::UnknownToken, "expand takes a single letter");
      const ReducedWord r = expand_generator(w.letters[0], degree);
      if (json) {
        Json j;
        j["word"] = format_word(r.word);
        out << j.dump() << '\n';
      } else {
        out << format_word(r.word) << '\n';
      }
    } else if (cmd_reduce->parsed()) {
      const ReducedWord r = reduce_word(parse_word(word_a));
      if (json) {
        Json j;
        j["word"] = format_word(r.word);
        out << j.dump() << '\n';
      } else {
        out << format_word(r.word) << '\n';
      }
    } else if (cmd_markov->parsed()) {
      const BraidWord a = parse_word(word_a);
      const BraidWord b = parse_word(word_b);
      if (max_degree == 0) max_degree = std::max(a.degree, b.degree) + 1;
      if (max_len == 0) max_len = std::max(a.letters.size(), b.letters.size()) + 6;
      const MarkovResult res = markov_equivalent(a, b, max_degree, max_len, max_states,
                                                 moveset_from_string(moves));
      code = res.outcome == Outcome::Equivalent ? 0 : 1;
      if (json) {
        Json j;
        j["outcome"] = detail::outcome_name(res.outcome);
        j["field"] = res.field;
        j["states"] = res.states;
        Json path = Json::array();
        for (const BraidWord& w : res.path) path.push_back(format_word(w));
        j["path"] = std::move(path);
        out << j.dump() << '\n';
      } else if (res.outcome == Outcome::Equivalent) {
        out << "equivalent\nmoves: " << res.path.size() - 1 << "\nstates: " << res.states << '\n';
        for (const BraidWord& w : res.path) out << format_word(w) << '\n';
      } else if (res.outcome == Outcome::DistinctByInvariant) {
        out << "distinct by invariant: " << res.field << "\nstates: " << res.states << '\n';
      } else {
        out << "not proved within bounds\nstates: " << res.states << '\n';
      }
    } else if (cmd_close->parsed()) {
      const ClosureCode codev = close(parse_word(word_a));
      if (json) out << detail::closure_json(codev).dump() << '\n';
      else out << detail::closure_text(codev);
    } else if (cmd_braid->parsed()) {
      const MorseWord d = parse_morse(detail::read_file(file));
      const BraidWord w = braid_morse(d);
      if (json) {
        const MorseInvariants mi = morse_invariants(d);
        Json j;
        j["word"] = format_word(w);
        j["degree"] = w.degree;
        j["components"] = mi.components;
        j["barParities"] = mi.bar_parities;
        j["positive"] = mi.positive;
        j["negative"] = mi.negative;
        j["virtual"] = mi.virtuals;
        j["singular"] = mi.singulars;
        out << j.dump() << '\n';
      } else {
        out << format_word(w) << '\n';
      }
    } else if (cmd_verify->parsed()) {
      const PresentationReport rep =
          verify_presentation(ruleset_from_string(presentation), degree);
      code = rep.ok() ? 0 : 1;
      if (json) {
        Json j;
        j["presentation"] = ruleset_name(rep.ruleset);
        j["degree"] = rep.degree;
        j["instances"] = rep.instances;
        Json vs = Json::array();
        for (const PresentationViolation& v : rep.violations) {
          Json e;
          e["relation"] = relation_label(v.rel);
          e["i"] = v.i;
          e["j"] = v.j;
          e["field"] = v.field;
          vs.push_back(std::move(e));
        }
        j["violations"] = std::move(vs);
        out << j.dump() << '\n';
      } else if (rep.ok()) {
        out << "all " << rep.instances << " instances pass\n";
      } else {
        for (const PresentationViolation& v : rep.violations)
          out << "violation " << relation_label(v.rel) << " i=" << v.i << " j=" << v.j
              << " field=" << v.field << '\n';
        out << rep.violations.size() << " of " << rep.instances << " instances fail\n";
      }
    } else if (cmd_check->parsed()) {
      const Derivation d = parse_derivation(detail::read_file(file));
      const DerivationResult res = check_derivation(d.start, d.steps);
      code = res.valid ? 0 : 1;
      if (json) {
        Json j;
        j["valid"] = res.valid;
        j["final"] = format_word(res.final_word);
        if (res.failing_step) j["failingStep"] = *res.failing_step + 1;
        else j["failingStep"] = nullptr;
        out << j.dump() << '\n';
      } else if (res.valid) {
        out << "valid\nfinal: " << format_word(res.final_word) << '\n';
      } else {
        out << "invalid at step " << *res.failing_step + 1 << '\n';
      }
    }
  } catch (const Error& e) {
    return {2, std::string("error: ") + e.what() + '\n'};
  }
  return {code, out.str()};
}

}  // namespace stvb::cli

#pragma once

// Equational rewriting: applying one relation instance at a position, in
// either direction, plus neighbor enumeration and derivation replay. The
// derivation file format is
//     line 1:  start word
//     line k:  <rule-label> <position> <LR|RL> [i [j]]
// with '#' comments and blank lines ignored.

#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "stvb/relations.hpp"
#include "stvb/word.hpp"

namespace stvb {

enum class Dir { LR, RL };

struct RewriteStep {
  RelationId rel = RelationId::Std1;
  int i = 0;
  int j = 0;
  int pos = 0;
  Dir dir = Dir::LR;

  friend bool operator==(const RewriteStep&, const RewriteStep&) = default;
};

inline RewriteStep inverse_step(RewriteStep s) {
  s.dir = s.dir == Dir::LR ? Dir::RL : Dir::LR;
  return s;
}

inline std::string format_step(const RewriteStep& s) {
  std::ostringstream os;
  os << relation_label(s.rel) << ' ' << s.pos << ' ' << (s.dir == Dir::LR ? "LR" : "RL");
  int params = relation_param_count(s.rel);
  if (params >= 1) os << ' ' << s.i;
  if (params >= 2) os << ' ' << s.j;
  return os.str();
}

inline RewriteStep parse_step(const std::string& line) {
  std::istringstream is(line);
  std::string label, dir;
  RewriteStep s;
  if (!(is >> label >> s.pos >> dir))
    throw Error(ErrorKind::UnknownToken, "malformed derivation step: " + line);
  s.rel = relation_from_label(label);
  if (dir == "LR")
    s.dir = Dir::LR;
  else if (dir == "RL")
    s.dir = Dir::RL;
  else
    throw Error(ErrorKind::UnknownToken, "direction must be LR or RL: " + line);
  int params = relation_param_count(s.rel);
  if (params >= 1 && !(is >> s.i))
    throw Error(ErrorKind::UnknownToken, "missing index for " + label);
  if (params >= 2 && !(is >> s.j))
    throw Error(ErrorKind::UnknownToken, "missing second index for " + label);
  std::string extra;
  if (is >> extra)
    throw Error(ErrorKind::UnknownToken, "trailing tokens in step: " + line);
  return s;
}

inline BraidWord apply(const BraidWord& w, const RewriteStep& s) {
  RelationInstance inst = instantiate(s.rel, w.degree, s.i, s.j);
  const std::vector<Generator>& src =
      s.dir == Dir::LR ? inst.lhs.letters : inst.rhs.letters;
  const std::vector<Generator>& dst =
      s.dir == Dir::LR ? inst.rhs.letters : inst.lhs.letters;
  std::size_t pos = static_cast<std::size_t>(s.pos);
  if (s.pos < 0 || pos + src.size() > w.letters.size())
    throw Error(ErrorKind::NoMatchAtPosition,
                format_step(s) + " does not fit in " + format_word(w));
  for (std::size_t k = 0; k < src.size(); ++k)
    if (w.letters[pos + k] != src[k])
      throw Error(ErrorKind::NoMatchAtPosition,
                  format_step(s) + " does not match " + format_word(w));
  BraidWord r;
  r.degree = w.degree;
  r.letters.reserve(w.letters.size() - src.size() + dst.size());
  r.letters.insert(r.letters.end(), w.letters.begin(), w.letters.begin() + s.pos);
  r.letters.insert(r.letters.end(), dst.begin(), dst.end());
  r.letters.insert(r.letters.end(), w.letters.begin() + s.pos + src.size(),
                   w.letters.end());
  return r;
}

// All words one rewrite away, in deterministic order (position, then rule
// label, then instance indices, then direction), exact duplicates dropped.
inline std::vector<BraidWord> neighbors(const BraidWord& w, Ruleset rules, int max_len) {
  if (max_len < static_cast<int>(w.letters.size()))
    throw Error(ErrorKind::IllegalParams, "max_len smaller than the word");
  std::vector<RelationInstance> instances = ruleset_instances(rules, w.degree);
  std::vector<BraidWord> out;
  std::unordered_set<std::string> seen;
  auto try_side = [&](int pos, const std::vector<Generator>& src,
                      const std::vector<Generator>& dst) {
    std::size_t p = static_cast<std::size_t>(pos);
    if (p + src.size() > w.letters.size()) return;
    if (static_cast<int>(w.letters.size() - src.size() + dst.size()) > max_len) return;
    for (std::size_t k = 0; k < src.size(); ++k)
      if (w.letters[p + k] != src[k]) return;
    BraidWord r;
    r.degree = w.degree;
    r.letters.assign(w.letters.begin(), w.letters.begin() + pos);
    r.letters.insert(r.letters.end(), dst.begin(), dst.end());
    r.letters.insert(r.letters.end(), w.letters.begin() + pos + src.size(),
                     w.letters.end());
    if (seen.insert(format_word(r)).second) out.push_back(std::move(r));
  };
  for (int pos = 0; pos <= static_cast<int>(w.letters.size()); ++pos)
    for (const RelationInstance& inst : instances) {
      try_side(pos, inst.lhs.letters, inst.rhs.letters);
      try_side(pos, inst.rhs.letters, inst.lhs.letters);
    }
  return out;
}

struct DerivationResult {
  bool valid = true;
  BraidWord final_word;
  std::optional<std::size_t> failing_step;
};

inline DerivationResult check_derivation(const BraidWord& start,
                                         const std::vector<RewriteStep>& steps) {
  DerivationResult r;
  r.final_word = start;
  for (std::size_t k = 0; k < steps.size(); ++k) {
    try {
      r.final_word = apply(r.final_word, steps[k]);
    } catch (const Error&) {
      r.valid = false;
      r.failing_step = k;
      return r;
    }
  }
  return r;
}

struct Derivation {
  BraidWord start;
  std::vector<RewriteStep> steps;
};

inline Derivation parse_derivation(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  Derivation d;
  bool have_start = false;
  while (std::getline(is, line)) {
    std::size_t h = line.find('#');
    if (h != std::string::npos) line.erase(h);
    std::size_t a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos) continue;
    std::size_t z = line.find_last_not_of(" \t\r");
    std::string body = line.substr(a, z - a + 1);
    if (!have_start) {
      d.start = parse_word(body);
      have_start = true;
    } else {
      d.steps.push_back(parse_step(body));
    }
  }
  if (!have_start)
    throw Error(ErrorKind::MalformedHeader, "derivation file has no start word");
  return d;
}

inline std::string format_derivation(const Derivation& d) {
  std::ostringstream os;
  os << format_word(d.start) << '\n';
  for (const RewriteStep& s : d.steps) os << format_step(s) << '\n';
  return os.str();
}

}  // namespace stvb

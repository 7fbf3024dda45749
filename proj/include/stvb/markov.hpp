#pragma once

// Moves on braid closures: conjugation by a single generator, stabilization
// and destabilization (real and virtual), threading a fresh strand under a
// neighbouring one from either side, and the trailing-pattern exchange that
// slides a singular crossing past a threaded strand. On top of single-move
// application this header enumerates move-or-rewrite neighbours, runs a
// bounded bidirectional search for closure equivalence, and constructs the
// reduction of the left-side threading moves to conjugations plus their
// right-side counterparts.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "stvb/closure.hpp"
#include "stvb/reduced.hpp"
#include "stvb/rewrite.hpp"
#include "stvb/search.hpp"
#include "stvb/word.hpp"

namespace stvb {

enum class MoveKind : std::uint8_t {
  ConjReal,
  ConjVirtual,
  ConjSingular,
  ConjTwist,
  StabReal,
  StabVirtual,
  DestabReal,
  DestabVirtual,
  UnderThreadRight,
  UnderThreadLeft,
  UnthreadRight,
  UnthreadLeft,
  RsThreadRight,
  RsThreadLeft,
};

struct MarkovMove {
  MoveKind kind = MoveKind::StabReal;
  int index = 0;  // conjugating generator index; unused for the other kinds
  int sign = 1;   // crossing sign; for ConjSingular, +1 moves a leading tau
                  // to the tail and -1 moves a trailing tau to the head
};

inline std::string format_move(const MarkovMove& m) {
  const std::string s = m.sign > 0 ? "+" : "-";
  const std::string i = std::to_string(m.index);
  switch (m.kind) {
    case MoveKind::ConjReal: return "ConjReal(" + i + "," + s + ")";
    case MoveKind::ConjVirtual: return "ConjVirtual(" + i + ")";
    case MoveKind::ConjSingular: return "ConjSingular(" + i + "," + s + ")";
    case MoveKind::ConjTwist: return "ConjTwist(" + i + ")";
    case MoveKind::StabReal: return "StabReal(" + s + ")";
    case MoveKind::StabVirtual: return "StabVirtual";
    case MoveKind::DestabReal: return "DestabReal(" + s + ")";
    case MoveKind::DestabVirtual: return "DestabVirtual";
    case MoveKind::UnderThreadRight: return "UnderThreadRight(" + s + ")";
    case MoveKind::UnderThreadLeft: return "UnderThreadLeft(" + s + ")";
    case MoveKind::UnthreadRight: return "UnthreadRight(" + s + ")";
    case MoveKind::UnthreadLeft: return "UnthreadLeft(" + s + ")";
    case MoveKind::RsThreadRight: return "RsThreadRight(" + s + ")";
    case MoveKind::RsThreadLeft: return "RsThreadLeft(" + s + ")";
  }
  return "";
}

namespace detail {

// Strand w.degree is untouched, so the word is a lift of a word one degree
// lower: sigma/v/tau letters stay below index degree-1, bars below degree.
inline bool avoids_top_strand(const std::vector<Generator>& letters, int degree) {
  for (Generator g : letters) {
    const int cap = g.kind == Kind::Bar ? degree - 1 : degree - 2;
    if (g.index > cap) return false;
  }
  return true;
}

// Strand 1 is untouched, so every letter keeps clear of position 1.
inline bool avoids_bottom_strand(const std::vector<Generator>& letters) {
  for (Generator g : letters)
    if (g.index <= 1) return false;
  return true;
}

inline Generator sigma(int index, int sign) {
  return {sign > 0 ? Kind::SigmaPos : Kind::SigmaNeg, index};
}

inline BraidWord reworded(int degree, std::vector<Generator> letters) {
  BraidWord r;
  r.degree = degree;
  r.letters = std::move(letters);
  for (Generator g : r.letters) check_letter(r.degree, g);
  return r;
}

inline bool tail_matches(const BraidWord& w, const std::vector<Generator>& pattern) {
  if (w.letters.size() < pattern.size()) return false;
  return std::equal(pattern.begin(), pattern.end(), w.letters.end() - pattern.size());
}

}  // namespace detail

inline BraidWord apply_move(const BraidWord& w, const MarkovMove& m) {
  const int n = w.degree;
  switch (m.kind) {
    case MoveKind::ConjReal:
    case MoveKind::ConjVirtual:
    case MoveKind::ConjTwist: {
      Kind kind = m.kind == MoveKind::ConjReal
                      ? (m.sign > 0 ? Kind::SigmaPos : Kind::SigmaNeg)
                      : (m.kind == MoveKind::ConjVirtual ? Kind::Virtual : Kind::Bar);
      const Generator a{kind, m.index};
      check_letter(n, a);
      BraidWord r;
      r.degree = n;
      r.letters.reserve(w.letters.size() + 2);
      r.letters.push_back(a);
      r.letters.insert(r.letters.end(), w.letters.begin(), w.letters.end());
      r.letters.push_back(invert_letter(a));
      return r;
    }
    case MoveKind::ConjSingular: {
      const Generator t{Kind::Singular, m.index};
      check_letter(n, t);
      BraidWord r;
      r.degree = n;
      if (m.sign > 0) {
        if (w.letters.empty() || !(w.letters.front() == t))
          throw Error(ErrorKind::PatternAbsent, "word does not begin with t" + std::to_string(m.index));
        r.letters.assign(w.letters.begin() + 1, w.letters.end());
        r.letters.push_back(t);
      } else {
        if (w.letters.empty() || !(w.letters.back() == t))
          throw Error(ErrorKind::PatternAbsent, "word does not end with t" + std::to_string(m.index));
        r.letters.push_back(t);
        r.letters.insert(r.letters.end(), w.letters.begin(), w.letters.end() - 1);
      }
      return r;
    }
    case MoveKind::StabReal: {
      BraidWord r = iota(w, 0, 1);
      r.letters.push_back(detail::sigma(n, m.sign));
      return r;
    }
    case MoveKind::StabVirtual: {
      BraidWord r = iota(w, 0, 1);
      r.letters.push_back({Kind::Virtual, n});
      return r;
    }
    case MoveKind::DestabReal:
    case MoveKind::DestabVirtual: {
      const Generator expect = m.kind == MoveKind::DestabReal
                                   ? detail::sigma(n - 1, m.sign)
                                   : Generator{Kind::Virtual, n - 1};
      if (n < 2 || w.letters.empty() || !(w.letters.back() == expect))
        throw Error(ErrorKind::PatternAbsent, "word does not end with a stabilizing letter");
      std::vector<Generator> rest(w.letters.begin(), w.letters.end() - 1);
      if (!detail::avoids_top_strand(rest, n))
        throw Error(ErrorKind::PatternAbsent, "word touches the stabilized strand elsewhere");
      return detail::reworded(n - 1, std::move(rest));
    }
    case MoveKind::UnderThreadRight: {
      if (n < 2)
        throw Error(ErrorKind::IndexOutOfRange, "threading needs at least two strands");
      BraidWord r = iota(w, 0, 1);
      r.letters.push_back(detail::sigma(n, m.sign));
      r.letters.push_back({Kind::Virtual, n - 1});
      r.letters.push_back(detail::sigma(n, -m.sign));
      return r;
    }
    case MoveKind::UnderThreadLeft: {
      if (n < 2)
        throw Error(ErrorKind::IndexOutOfRange, "threading needs at least two strands");
      BraidWord r = iota(w, 1, 0);
      r.letters.push_back(detail::sigma(1, m.sign));
      r.letters.push_back({Kind::Virtual, 2});
      r.letters.push_back(detail::sigma(1, -m.sign));
      return r;
    }
    case MoveKind::UnthreadRight: {
      const std::vector<Generator> pat{detail::sigma(n - 1, m.sign),
                                       {Kind::Virtual, n - 2},
                                       detail::sigma(n - 1, -m.sign)};
      if (n < 3 || !detail::tail_matches(w, pat))
        throw Error(ErrorKind::PatternAbsent, "word does not end with a right threading");
      std::vector<Generator> rest(w.letters.begin(), w.letters.end() - 3);
      if (!detail::avoids_top_strand(rest, n))
        throw Error(ErrorKind::PatternAbsent, "word touches the threaded strand elsewhere");
      return detail::reworded(n - 1, std::move(rest));
    }
    case MoveKind::UnthreadLeft: {
      const std::vector<Generator> pat{detail::sigma(1, m.sign),
                                       {Kind::Virtual, 2},
                                       detail::sigma(1, -m.sign)};
      if (n < 3 || !detail::tail_matches(w, pat))
        throw Error(ErrorKind::PatternAbsent, "word does not end with a left threading");
      std::vector<Generator> rest(w.letters.begin(), w.letters.end() - 3);
      if (!detail::avoids_bottom_strand(rest))
        throw Error(ErrorKind::PatternAbsent, "word touches the threaded strand elsewhere");
      for (Generator& g : rest) --g.index;
      return detail::reworded(n - 1, std::move(rest));
    }
    case MoveKind::RsThreadRight:
    case MoveKind::RsThreadLeft: {
      const bool right = m.kind == MoveKind::RsThreadRight;
      const int hi = right ? n - 1 : 1;
      const int mid = right ? n - 2 : 2;
      const Generator tau{Kind::Singular, right ? n - 1 : 1};
      const std::vector<Generator> tau_first{tau, {Kind::Virtual, mid}, detail::sigma(hi, m.sign)};
      const std::vector<Generator> tau_last{detail::sigma(hi, m.sign), {Kind::Virtual, mid}, tau};
      const bool fwd = n >= 3 && detail::tail_matches(w, tau_first);
      const bool bwd = n >= 3 && !fwd && detail::tail_matches(w, tau_last);
      if (!fwd && !bwd)
        throw Error(ErrorKind::PatternAbsent, "word does not end with an rs-threading pattern");
      std::vector<Generator> rest(w.letters.begin(), w.letters.end() - 3);
      const bool clear = right ? detail::avoids_top_strand(rest, n)
                               : detail::avoids_bottom_strand(rest);
      if (!clear)
        throw Error(ErrorKind::PatternAbsent, "word touches the threaded strand elsewhere");
      const std::vector<Generator>& repl = fwd ? tau_last : tau_first;
      rest.insert(rest.end(), repl.begin(), repl.end());
      return detail::reworded(n, std::move(rest));
    }
  }
  throw Error(ErrorKind::IllegalParams, "unknown move");
}

enum class Moveset { Full, Reduced };

inline Moveset moveset_from_string(const std::string& name) {
  if (name == "full") return Moveset::Full;
  if (name == "reduced") return Moveset::Reduced;
  throw Error(ErrorKind::UnknownToken, "unknown moveset: " + name);
}

inline const char* moveset_name(Moveset m) {
  return m == Moveset::Full ? "full" : "reduced";
}

namespace detail {

inline bool left_threading(MoveKind k) {
  return k == MoveKind::UnderThreadLeft || k == MoveKind::UnthreadLeft ||
         k == MoveKind::RsThreadLeft;
}

inline std::vector<MarkovMove> candidate_moves(int degree, Moveset moveset) {
  std::vector<MarkovMove> moves;
  for (int i = 1; i < degree; ++i) {
    moves.push_back({MoveKind::ConjReal, i, 1});
    moves.push_back({MoveKind::ConjReal, i, -1});
  }
  for (int i = 1; i < degree; ++i) moves.push_back({MoveKind::ConjVirtual, i, 1});
  for (int i = 1; i < degree; ++i) {
    moves.push_back({MoveKind::ConjSingular, i, 1});
    moves.push_back({MoveKind::ConjSingular, i, -1});
  }
  for (int i = 1; i <= degree; ++i) moves.push_back({MoveKind::ConjTwist, i, 1});
  for (MoveKind k : {MoveKind::StabReal, MoveKind::DestabReal, MoveKind::UnderThreadRight,
                     MoveKind::UnderThreadLeft, MoveKind::UnthreadRight, MoveKind::UnthreadLeft,
                     MoveKind::RsThreadRight, MoveKind::RsThreadLeft}) {
    moves.push_back({k, 0, 1});
    moves.push_back({k, 0, -1});
  }
  moves.push_back({MoveKind::StabVirtual, 0, 1});
  moves.push_back({MoveKind::DestabVirtual, 0, 1});
  if (moveset == Moveset::Reduced) {
    std::erase_if(moves, [](const MarkovMove& m) { return left_threading(m.kind); });
  }
  return moves;
}

}  // namespace detail

inline std::vector<BraidWord> markov_neighbors(const BraidWord& w, int max_degree, int max_len,
                                               Moveset moveset = Moveset::Full) {
  if (max_degree < w.degree)
    throw Error(ErrorKind::IllegalParams, "degree bound below the degree of the word");
  std::vector<BraidWord> out;
  std::unordered_set<std::string> seen;
  const auto consider = [&](const BraidWord& c) {
    if (c.degree > max_degree || static_cast<int>(c.letters.size()) > max_len) return;
    if (seen.insert(format_word(c)).second) out.push_back(c);
  };
  if (static_cast<int>(w.letters.size()) <= max_len) {
    for (const BraidWord& c : neighbors(w, Ruleset::Standard, max_len)) consider(c);
  }
  for (const MarkovMove& m : detail::candidate_moves(w.degree, moveset)) {
    try {
      consider(apply_move(w, m));
    } catch (const Error&) {
    }
  }
  return out;
}

struct MarkovResult {
  Outcome outcome = Outcome::NotProvedWithinBounds;
  std::string field;            // closure invariant separating the inputs
  std::vector<BraidWord> path;  // words from the first input to the second
  std::uint64_t states = 0;     // words stored by the search
};

namespace detail {

struct MarkovNode {
  BraidWord word;
  std::int32_t parent;
  std::int8_t side;
};

}  // namespace detail

inline MarkovResult markov_equivalent(const BraidWord& a, const BraidWord& b, int max_degree,
                                      int max_len, std::uint64_t max_states,
                                      Moveset moveset = Moveset::Full) {
  if (max_degree < std::max(a.degree, b.degree))
    throw Error(ErrorKind::IllegalParams, "degree bound below the degree of an input");
  if (max_len < static_cast<int>(std::max(a.letters.size(), b.letters.size())))
    throw Error(ErrorKind::IllegalParams, "length bound below the length of an input");
  MarkovResult res;
  if (const char* field = closure_difference(closure_invariants(a), closure_invariants(b))) {
    res.outcome = Outcome::DistinctByInvariant;
    res.field = field;
    return res;
  }
  if (format_word(a) == format_word(b)) {
    res.outcome = Outcome::Equivalent;
    res.path = {a};
    return res;
  }

  std::vector<detail::MarkovNode> nodes;
  std::unordered_map<std::string, std::int32_t> seen;
  std::deque<std::int32_t> queue[2];
  std::uint64_t popped[2] = {0, 0};
  std::int32_t meet[2] = {-1, -1};

  const auto splice = [&](MarkovResult* r) {
    std::vector<BraidWord> left;
    for (std::int32_t id = meet[0]; id >= 0; id = nodes[id].parent) left.push_back(nodes[id].word);
    std::reverse(left.begin(), left.end());
    for (std::int32_t id = nodes[meet[1]].parent; id >= 0; id = nodes[id].parent)
      left.push_back(nodes[id].word);
    r->outcome = Outcome::Equivalent;
    r->path = std::move(left);
  };

  // Returns the fresh node id, -1 for an already-seen word on the same side,
  // or -2 when the word joins the two sides of the search.
  const auto insert = [&](const BraidWord& w, std::int32_t parent, int side) -> std::int32_t {
    const auto [it, fresh] = seen.try_emplace(format_word(w), static_cast<std::int32_t>(nodes.size()));
    if (!fresh) {
      if (nodes[it->second].side == side) return -1;
      nodes.push_back({w, parent, static_cast<std::int8_t>(side)});
      meet[side] = static_cast<std::int32_t>(nodes.size()) - 1;
      meet[1 - side] = it->second;
      return -2;
    }
    nodes.push_back({w, parent, static_cast<std::int8_t>(side)});
    ++res.states;
    return static_cast<std::int32_t>(nodes.size()) - 1;
  };

  queue[0].push_back(insert(a, -1, 0));
  queue[1].push_back(insert(b, -1, 1));

  while (res.states <= max_states && (!queue[0].empty() || !queue[1].empty())) {
    int side;
    if (queue[0].empty()) side = 1;
    else if (queue[1].empty()) side = 0;
    else side = popped[0] <= popped[1] ? 0 : 1;
    const std::int32_t id = queue[side].front();
    queue[side].pop_front();
    ++popped[side];
    const BraidWord word = nodes[id].word;
    for (const BraidWord& c : markov_neighbors(word, max_degree, max_len, moveset)) {
      const std::int32_t got = insert(c, id, side);
      if (got == -2) {
        splice(&res);
        return res;
      }
      if (res.states > max_states) break;
      if (got >= 0) queue[side].push_back(got);
    }
  }
  res.outcome = Outcome::NotProvedWithinBounds;
  return res;
}

enum class ThreadKind { UnderThread, RsThread };

struct MarkovPathStep {
  BraidWord word;
  std::string justification;

  friend bool operator==(const MarkovPathStep&, const MarkovPathStep&) = default;
};

namespace detail {

// Wraps the word in single-letter conjugations spelling out the star element
// of its degree, innermost letter first, so the final word is the literal
// star-conjugate sandwich.
inline void wrap_star(BraidWord* w, std::vector<MarkovPathStep>* path) {
  const BraidWord star = star_element(w->degree);
  for (auto it = star.letters.rbegin(); it != star.letters.rend(); ++it) {
    const MarkovMove m{it->kind == Kind::Virtual ? MoveKind::ConjVirtual : MoveKind::ConjTwist,
                       it->index, 1};
    *w = apply_move(*w, m);
    path->push_back({*w, "move " + format_move(m)});
  }
}

// Replaces the current star-sandwich around `core` by the flip of `core`;
// the two are equivalent, and their invariant records agree letter for
// letter, which is checked here.
inline void collapse_star(BraidWord* w, const BraidWord& core, std::vector<MarkovPathStep>* path) {
  const BraidWord flipped = flip(core);
  if (record_difference(invariant_record(*w), invariant_record(flipped)))
    throw Error(ErrorKind::IllegalParams, "star collapse changed an invariant");
  *w = flipped;
  path->push_back({*w, "collapse star conjugation"});
}

}  // namespace detail

inline std::vector<MarkovPathStep> derive_left_from_right(const BraidWord& alpha, ThreadKind kind,
                                                          int sign) {
  if (alpha.degree < 2)
    throw Error(ErrorKind::IllegalParams, "threading reduction needs at least two strands");
  if (sign != 1 && sign != -1)
    throw Error(ErrorKind::IllegalParams, "threading sign must be +1 or -1");
  std::vector<MarkovPathStep> path;
  BraidWord w;
  if (kind == ThreadKind::UnderThread) {
    w = alpha;
    path.push_back({w, "start"});
    detail::wrap_star(&w, &path);
    detail::collapse_star(&w, alpha, &path);
  } else {
    w = iota(alpha, 1, 0);
    w.letters.push_back({Kind::Singular, 1});
    w.letters.push_back({Kind::Virtual, 2});
    w.letters.push_back(detail::sigma(1, sign));
    path.push_back({w, "start"});
    const BraidWord start = w;
    detail::wrap_star(&w, &path);
    detail::collapse_star(&w, start, &path);
  }
  const MarkovMove m{kind == ThreadKind::UnderThread ? MoveKind::UnderThreadRight
                                                     : MoveKind::RsThreadRight,
                     0, sign};
  w = apply_move(w, m);
  path.push_back({w, "move " + format_move(m)});
  const BraidWord threaded = w;
  detail::wrap_star(&w, &path);
  detail::collapse_star(&w, threaded, &path);
  return path;
}

}  // namespace stvb

#pragma once

// Bounded equivalence search over the rewrite relation. Bidirectional
// meet-in-the-middle; each side expands states in order of (word length,
// insertion sequence), so cancellation-heavy derivations are found early
// while length-increasing detours are explored level by level. The length
// cap is raised in steps of 2 (every relation preserves length parity) up to
// max_len, which keeps proofs that stay short cheap. The search is
// deterministic: enumeration order is position, then rule label, then
// instance indices, then direction; side selection compares queue minima.
//
// A NotProvedWithinBounds outcome is never evidence of inequivalence.

#include <array>
#include <cstdint>
#include <cstring>
#include <deque>
#include <string>
#include <unordered_map>
#include <vector>

#include "stvb/invariants.hpp"
#include "stvb/rewrite.hpp"

namespace stvb {

enum class Outcome { Equivalent, DistinctByInvariant, NotProvedWithinBounds };

struct SearchStats {
  std::uint64_t states = 0;   // peak states stored by any single length-cap stage
  int max_len_reached = 0;
};

struct EquivalenceResult {
  Outcome outcome = Outcome::NotProvedWithinBounds;
  std::string field;               // differing InvariantRecord field
  std::vector<RewriteStep> trace;  // replays from the first word to the second
  SearchStats stats;
};

namespace detail {

inline constexpr int kMaxSearchLen = 62;
inline constexpr int kMaxSearchDegree = 31;

inline std::uint8_t pack_letter(Generator g) {
  return static_cast<std::uint8_t>(static_cast<int>(g.kind) * 32 + g.index);
}

inline Generator unpack_letter(std::uint8_t b) {
  return {static_cast<Kind>(b / 32), b % 32};
}

struct PackedWord {
  std::uint8_t len = 0;
  std::uint8_t data[kMaxSearchLen] = {};

  friend bool operator==(const PackedWord& a, const PackedWord& b) {
    return a.len == b.len && std::memcmp(a.data, b.data, a.len) == 0;
  }
};

struct PackedHash {
  std::size_t operator()(const PackedWord& w) const {
    std::uint64_t h = 1469598103934665603ull;
    h = (h ^ w.len) * 1099511628211ull;
    for (int k = 0; k < w.len; ++k) h = (h ^ w.data[k]) * 1099511628211ull;
    return static_cast<std::size_t>(h);
  }
};

inline PackedWord pack_word(const BraidWord& w) {
  if (static_cast<int>(w.letters.size()) > kMaxSearchLen)
    throw Error(ErrorKind::IllegalParams, "word too long for bounded search");
  if (w.degree > kMaxSearchDegree)
    throw Error(ErrorKind::IllegalParams, "degree too large for bounded search");
  PackedWord p;
  p.len = static_cast<std::uint8_t>(w.letters.size());
  for (std::size_t k = 0; k < w.letters.size(); ++k)
    p.data[k] = pack_letter(w.letters[k]);
  return p;
}

inline BraidWord unpack_word(const PackedWord& p, int degree) {
  BraidWord w;
  w.degree = degree;
  w.letters.reserve(p.len);
  for (int k = 0; k < p.len; ++k) w.letters.push_back(unpack_letter(p.data[k]));
  return w;
}

struct CompiledRule {
  RelationId rel;
  int i, j;
  std::vector<std::uint8_t> lhs, rhs;
};

inline std::vector<CompiledRule> compile_rules(Ruleset rules, int degree) {
  std::vector<CompiledRule> out;
  for (const RelationInstance& inst : ruleset_instances(rules, degree)) {
    CompiledRule c{inst.rel, inst.i, inst.j, {}, {}};
    for (Generator g : inst.lhs.letters) c.lhs.push_back(pack_letter(g));
    for (Generator g : inst.rhs.letters) c.rhs.push_back(pack_letter(g));
    out.push_back(std::move(c));
  }
  return out;
}

inline InvariantRecord record_of_packed(const PackedWord& p, int degree) {
  return invariant_record(unpack_word(p, degree));
}

struct SearchNode {
  PackedWord word;
  std::int32_t parent;  // arena index, -1 for a root
  RewriteStep step;     // forward orientation: apply(parent-or-self per side)
  std::uint8_t side;
};

// One bidirectional stage at a fixed length cap. Returns true with the trace
// on a meet; false when either side exhausts its queue or the budget is gone.
class RewriteStage {
 public:
  RewriteStage(const BraidWord& a, const BraidWord& b,
               const std::vector<CompiledRule>& rules, int cap,
               std::uint64_t budget, SearchStats& stats)
      : degree_(a.degree), rules_(rules), cap_(cap), budget_(budget), stats_(stats) {
    reference_ = invariant_record(a);
    roots_[0] = pack_word(a);
    roots_[1] = pack_word(b);
  }

  bool run(std::vector<RewriteStep>& trace_out) {
    insert(roots_[0], -1, RewriteStep{}, 0);
    if (met_) return finish(trace_out);
    insert(roots_[1], -1, RewriteStep{}, 1);
    if (met_) return finish(trace_out);
    while (used_ < budget_) {
      int side = pick_side();
      if (side < 0) return false;  // both queues empty: cap exhausted
      std::int32_t idx = pop(side);
      if (expand(idx)) return finish(trace_out);
    }
    return false;
  }

  std::uint64_t used() const { return used_; }

 private:
  int degree_;
  const std::vector<CompiledRule>& rules_;
  int cap_;
  std::uint64_t budget_;
  SearchStats& stats_;
  InvariantRecord reference_;
  PackedWord roots_[2];

  std::vector<SearchNode> arena_;
  std::unordered_map<PackedWord, std::int32_t, PackedHash> seen_;
  std::array<std::deque<std::int32_t>, kMaxSearchLen + 1> queue_[2];
  int qmin_[2] = {kMaxSearchLen + 1, kMaxSearchLen + 1};
  std::uint64_t pending_[2] = {0, 0};
  std::uint64_t popped_[2] = {0, 0};
  std::uint64_t used_ = 0;
  bool met_ = false;
  std::int32_t meet_old_ = -1;  // node already in the arena
  std::int32_t meet_parent_ = -1;
  RewriteStep meet_step_;
  int meet_new_side_ = 0;

  // Alternate sides by expansion count so a short root cannot starve the
  // other side by flooding the queue with its shallow neighborhood.
  int pick_side() {
    refresh(0);
    refresh(1);
    bool e0 = pending_[0] == 0, e1 = pending_[1] == 0;
    if (e0 || e1) return -1;
    if (popped_[0] != popped_[1]) return popped_[0] < popped_[1] ? 0 : 1;
    if (qmin_[0] != qmin_[1]) return qmin_[0] < qmin_[1] ? 0 : 1;
    return 0;
  }

  void refresh(int side) {
    while (qmin_[side] <= kMaxSearchLen && queue_[side][qmin_[side]].empty()) ++qmin_[side];
    if (pending_[side] == 0) qmin_[side] = kMaxSearchLen + 1;
  }

  std::int32_t pop(int side) {
    std::int32_t idx = queue_[side][qmin_[side]].front();
    queue_[side][qmin_[side]].pop_front();
    --pending_[side];
    ++popped_[side];
    return idx;
  }

  // Returns true when the other side already holds the word (a meet).
  bool insert(const PackedWord& w, std::int32_t parent, const RewriteStep& step, int side) {
    auto [it, fresh] = seen_.try_emplace(w, static_cast<std::int32_t>(arena_.size()));
    if (!fresh) {
      if (arena_[it->second].side != side) {
        met_ = true;
        meet_old_ = it->second;
        meet_parent_ = parent;
        meet_step_ = step;
        meet_new_side_ = side;
      }
      return met_;
    }
    if (record_of_packed(w, degree_) != reference_)
      throw Error(ErrorKind::IllegalParams,
                  "rewrite produced a word with a different invariant record: " +
                      format_word(unpack_word(w, degree_)));
    arena_.push_back({w, parent, step, static_cast<std::uint8_t>(side)});
    queue_[side][w.len].push_back(it->second);
    ++pending_[side];
    if (w.len < qmin_[side]) qmin_[side] = w.len;
    ++used_;
    if (used_ > stats_.states) stats_.states = used_;
    if (w.len > stats_.max_len_reached) stats_.max_len_reached = w.len;
    return false;
  }

  bool expand(std::int32_t idx) {
    PackedWord w = arena_[idx].word;
    int side = arena_[idx].side;
    PackedWord out;
    for (int pos = 0; pos <= w.len; ++pos)
      for (const CompiledRule& rule : rules_)
        for (int d = 0; d < 2; ++d) {
          const std::vector<std::uint8_t>& src = d == 0 ? rule.lhs : rule.rhs;
          const std::vector<std::uint8_t>& dst = d == 0 ? rule.rhs : rule.lhs;
          int slen = static_cast<int>(src.size());
          int dlen = static_cast<int>(dst.size());
          if (pos + slen > w.len) continue;
          int nlen = w.len - slen + dlen;
          if (nlen > cap_) continue;
          if (slen > 0 && std::memcmp(w.data + pos, src.data(), slen) != 0) continue;
          out.len = static_cast<std::uint8_t>(nlen);
          std::memcpy(out.data, w.data, pos);
          if (dlen > 0) std::memcpy(out.data + pos, dst.data(), dlen);
          std::memcpy(out.data + pos + dlen, w.data + pos + slen, w.len - pos - slen);
          RewriteStep step{rule.rel, rule.i, rule.j, pos, d == 0 ? Dir::LR : Dir::RL};
          // the backward side stores the step that leads toward its root
          if (side == 1) step = inverse_step(step);
          if (insert(out, idx, step, side)) return true;
          if (used_ >= budget_) return false;
        }
    return false;
  }

  bool finish(std::vector<RewriteStep>& trace_out) {
    // Chains: root0 -> ... -> meet word -> ... -> root1. Forward steps are
    // stored as parent->node on side 0 and node->parent on side 1.
    std::int32_t node0, node1;
    bool new_is_0 = meet_new_side_ == 0;
    std::vector<RewriteStep> forward, backward;
    if (new_is_0) {
      node0 = meet_parent_;
      forward.push_back(meet_step_);
      node1 = meet_old_;
    } else {
      node0 = meet_old_;
      backward.push_back(meet_step_);
      node1 = meet_parent_;
    }
    for (std::int32_t k = node0; k >= 0 && arena_[k].parent >= 0; k = arena_[k].parent)
      forward.push_back(arena_[k].step);
    std::reverse(forward.begin(), forward.end());
    for (std::int32_t k = node1; k >= 0 && arena_[k].parent >= 0; k = arena_[k].parent)
      backward.push_back(arena_[k].step);
    trace_out = std::move(forward);
    trace_out.insert(trace_out.end(), backward.begin(), backward.end());
    return true;
  }
};

}  // namespace detail

inline EquivalenceResult equivalent(const BraidWord& a, const BraidWord& b,
                                    Ruleset rules, int max_len,
                                    std::uint64_t max_states) {
  if (a.degree != b.degree)
    throw Error(ErrorKind::DegreeMismatch, "equivalence search needs equal degrees");
  EquivalenceResult res;
  if (a == b) {
    res.outcome = Outcome::Equivalent;
    return res;
  }
  const char* diff = record_difference(invariant_record(a), invariant_record(b));
  if (diff) {
    res.outcome = Outcome::DistinctByInvariant;
    res.field = diff;
    return res;
  }
  int lo = static_cast<int>(std::max(a.letters.size(), b.letters.size()));
  if (max_len < lo)
    throw Error(ErrorKind::IllegalParams, "max_len smaller than the input words");
  if (max_len > detail::kMaxSearchLen)
    throw Error(ErrorKind::IllegalParams, "max_len exceeds the search limit");
  std::vector<detail::CompiledRule> compiled = detail::compile_rules(rules, a.degree);
  for (int cap = lo; cap <= max_len; cap += 2) {
    detail::RewriteStage stage(a, b, compiled, cap, max_states, res.stats);
    if (stage.run(res.trace)) {
      res.outcome = Outcome::Equivalent;
      return res;
    }
  }
  res.outcome = Outcome::NotProvedWithinBounds;
  return res;
}

}  // namespace stvb

#pragma once

// Closure of a braid word. Joining each bottom endpoint to the top endpoint
// at the same position turns a word into a link-like object; this header
// traces the resulting components, records the events each component passes
// through, and extracts the invariants that every closure-preserving move
// keeps intact.

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "stvb/word.hpp"

namespace stvb {

enum class EventKind : std::uint8_t { Over, Under, SingPass, VirtualPass, Bar };

inline const char* event_kind_name(EventKind k) {
  switch (k) {
    case EventKind::Over: return "over";
    case EventKind::Under: return "under";
    case EventKind::SingPass: return "sing";
    case EventKind::VirtualPass: return "virtual";
    case EventKind::Bar: return "bar";
  }
  return "";
}

struct ClosureEvent {
  EventKind kind = EventKind::Bar;
  int crossing = 0;  // 1-based position of the crossing letter, 0 for bars
  int sign = 0;      // crossing sign for Over/Under, 0 otherwise

  friend bool operator==(const ClosureEvent&, const ClosureEvent&) = default;
};

struct ClosureCode {
  // One cyclic event list per component. Components are ordered by the
  // smallest top position they visit and each list starts at that position.
  std::vector<std::vector<ClosureEvent>> components;

  friend bool operator==(const ClosureCode&, const ClosureCode&) = default;
};

namespace detail {

// Follows the strand entering at top position `top` down through the word,
// appending the events it participates in; returns the bottom position the
// strand leaves at. A positive crossing carries the strand entering on the
// left over the one entering on the right; a negative crossing is the mirror.
inline int trace_strand(const BraidWord& w, int top, std::vector<ClosureEvent>* out) {
  int c = top;
  for (std::size_t k = 0; k < w.letters.size(); ++k) {
    const Generator g = w.letters[k];
    const int id = static_cast<int>(k) + 1;
    const bool left = c == g.index;
    const bool right = g.kind != Kind::Bar && c == g.index + 1;
    if (!left && !right) continue;
    switch (g.kind) {
      case Kind::SigmaPos:
      case Kind::SigmaNeg: {
        const int sign = g.kind == Kind::SigmaPos ? 1 : -1;
        const bool over = left == (sign > 0);
        if (out) out->push_back({over ? EventKind::Over : EventKind::Under, id, sign});
        c = left ? g.index + 1 : g.index;
        break;
      }
      case Kind::Virtual:
        if (out) out->push_back({EventKind::VirtualPass, id, 0});
        c = left ? g.index + 1 : g.index;
        break;
      case Kind::Singular:
        if (out) out->push_back({EventKind::SingPass, id, 0});
        c = left ? g.index + 1 : g.index;
        break;
      case Kind::Bar:
        if (out) out->push_back({EventKind::Bar, 0, 0});
        break;
    }
  }
  return c;
}

}  // namespace detail

inline ClosureCode close(const BraidWord& w) {
  ClosureCode code;
  std::vector<bool> visited(static_cast<std::size_t>(w.degree) + 1, false);
  for (int start = 1; start <= w.degree; ++start) {
    if (visited[start]) continue;
    std::vector<ClosureEvent> events;
    int p = start;
    do {
      visited[p] = true;
      p = detail::trace_strand(w, p, &events);
    } while (p != start);
    code.components.push_back(std::move(events));
  }
  return code;
}

struct ClosureInvariants {
  int components = 0;
  std::vector<int> bar_parities;     // sorted, one entry per component
  std::int64_t tau_count = 0;        // total singular letters in the word
  std::vector<int> singular_passes;  // sorted per-component pass counts

  friend bool operator==(const ClosureInvariants&, const ClosureInvariants&) = default;
};

inline ClosureInvariants closure_invariants(const BraidWord& w) {
  const ClosureCode code = close(w);
  ClosureInvariants inv;
  inv.components = static_cast<int>(code.components.size());
  for (const auto& events : code.components) {
    int bars = 0;
    int sings = 0;
    for (const ClosureEvent& e : events) {
      if (e.kind == EventKind::Bar) ++bars;
      if (e.kind == EventKind::SingPass) ++sings;
    }
    inv.bar_parities.push_back(bars % 2);
    inv.singular_passes.push_back(sings);
  }
  std::sort(inv.bar_parities.begin(), inv.bar_parities.end());
  std::sort(inv.singular_passes.begin(), inv.singular_passes.end());
  for (Generator g : w.letters)
    if (g.kind == Kind::Singular) ++inv.tau_count;
  return inv;
}

// First of the fields used to separate closures before any move search, in a
// fixed order; null when the records agree on all of them.
inline const char* closure_difference(const ClosureInvariants& a, const ClosureInvariants& b) {
  if (a.components != b.components) return "components";
  if (a.bar_parities != b.bar_parities) return "bar_parities";
  if (a.tau_count != b.tau_count) return "tau_count";
  return nullptr;
}

}  // namespace stvb

#pragma once

// Morse-event encodings of closed diagrams and the braiding compiler that
// turns them into braid words with the same closure. A diagram is a top to
// bottom list of events: births (cup), deaths (cap), classical crossings of
// either sign, virtual and singular crossings, and bars. The compiler orients
// every component, rotates each crossing that a strand runs upward through so
// that all crossings sit on downward strands, keeps rightmost upward arcs as
// closure returns, and cuts every other upward arc, rerouting it around the
// closure axis on a fresh strand using virtual crossings only.

#include <algorithm>
#include <array>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "stvb/word.hpp"

namespace stvb {

enum class MorseKind : std::uint8_t { Cup, Cap, Pos, Neg, Virt, Sing, Bar };

inline const char* morse_kind_name(MorseKind k) {
  switch (k) {
    case MorseKind::Cup: return "cup";
    case MorseKind::Cap: return "cap";
    case MorseKind::Pos: return "pos";
    case MorseKind::Neg: return "neg";
    case MorseKind::Virt: return "virt";
    case MorseKind::Sing: return "sing";
    case MorseKind::Bar: return "bar";
  }
  return "";
}

struct MorseEvent {
  MorseKind kind = MorseKind::Cup;
  int slot = 1;

  friend bool operator==(const MorseEvent&, const MorseEvent&) = default;
};

struct MorseWord {
  std::vector<MorseEvent> events;

  friend bool operator==(const MorseWord&, const MorseWord&) = default;
};

inline MorseWord parse_morse(const std::string& text) {
  MorseWord d;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string kind;
    if (!(ls >> kind)) continue;
    MorseEvent ev;
    if (kind == "cup") ev.kind = MorseKind::Cup;
    else if (kind == "cap") ev.kind = MorseKind::Cap;
    else if (kind == "pos") ev.kind = MorseKind::Pos;
    else if (kind == "neg") ev.kind = MorseKind::Neg;
    else if (kind == "virt") ev.kind = MorseKind::Virt;
    else if (kind == "sing") ev.kind = MorseKind::Sing;
    else if (kind == "bar") ev.kind = MorseKind::Bar;
    else throw Error(ErrorKind::UnknownToken, "unknown event: " + kind);
    if (!(ls >> ev.slot) || ev.slot < 1)
      throw Error(ErrorKind::UnknownToken, "missing slot after " + kind);
    std::string extra;
    if (ls >> extra) throw Error(ErrorKind::UnknownToken, "trailing tokens after " + kind);
    d.events.push_back(ev);
  }
  return d;
}

inline std::string format_morse(const MorseWord& d) {
  std::string out;
  for (const MorseEvent& ev : d.events) {
    out += morse_kind_name(ev.kind);
    out += ' ';
    out += std::to_string(ev.slot);
    out += '\n';
  }
  return out;
}

inline void check_morse(const MorseWord& d) {
  if (d.events.empty()) throw Error(ErrorKind::InvalidMorse, "diagram has no events");
  int width = 0;
  for (std::size_t e = 0; e < d.events.size(); ++e) {
    const MorseEvent ev = d.events[e];
    const bool pair = ev.kind != MorseKind::Cup && ev.kind != MorseKind::Bar;
    const int top = ev.kind == MorseKind::Cup ? width + 1 : (pair ? width - 1 : width);
    if (ev.slot > top) {
      std::ostringstream os;
      os << morse_kind_name(ev.kind) << " " << ev.slot << " out of range at event " << e + 1;
      throw Error(ErrorKind::InvalidMorse, os.str());
    }
    if (ev.kind == MorseKind::Cup) width += 2;
    if (ev.kind == MorseKind::Cap) width -= 2;
  }
  if (width != 0) throw Error(ErrorKind::InvalidMorse, "diagram leaves strands open");
}

namespace detail {

struct MorseArc {
  int cup_event = -1;
  int cap_event = -1;
  int cup_partner = -1;
  int cap_partner = -1;
  int bars = 0;
  bool descending = false;
  int component = -1;
};

struct MorseAnalysis {
  std::vector<MorseArc> arcs;
  std::vector<std::vector<int>> occ;               // slot occupancy after each event
  std::vector<std::array<int, 2>> event_arcs;      // arcs touched by each event
  int components = 0;
};

inline MorseAnalysis analyze_morse(const MorseWord& d) {
  MorseAnalysis an;
  an.event_arcs.assign(d.events.size(), {-1, -1});
  std::vector<int> cur;
  for (std::size_t e = 0; e < d.events.size(); ++e) {
    const MorseEvent ev = d.events[e];
    const int i = ev.slot - 1;
    switch (ev.kind) {
      case MorseKind::Cup: {
        const int left = static_cast<int>(an.arcs.size());
        an.arcs.push_back({static_cast<int>(e), -1, left + 1, -1, 0, false, -1});
        an.arcs.push_back({static_cast<int>(e), -1, left, -1, 0, false, -1});
        cur.insert(cur.begin() + i, {left, left + 1});
        an.event_arcs[e] = {left, left + 1};
        break;
      }
      case MorseKind::Cap: {
        const int a = cur[i], b = cur[i + 1];
        an.arcs[a].cap_event = static_cast<int>(e);
        an.arcs[b].cap_event = static_cast<int>(e);
        an.arcs[a].cap_partner = b;
        an.arcs[b].cap_partner = a;
        an.event_arcs[e] = {a, b};
        cur.erase(cur.begin() + i, cur.begin() + i + 2);
        break;
      }
      case MorseKind::Bar:
        ++an.arcs[cur[i]].bars;
        an.event_arcs[e] = {cur[i], -1};
        break;
      default:
        an.event_arcs[e] = {cur[i], cur[i + 1]};
        std::swap(cur[i], cur[i + 1]);
        break;
    }
    an.occ.push_back(cur);
  }
  // Orient: the first arc of each component runs downward; the ant turns
  // around at every cup and cap, so partners alternate direction.
  for (std::size_t seed = 0; seed < an.arcs.size(); ++seed) {
    if (an.arcs[seed].component >= 0) continue;
    const int comp = an.components++;
    std::vector<int> stack{static_cast<int>(seed)};
    an.arcs[seed].component = comp;
    an.arcs[seed].descending = true;
    while (!stack.empty()) {
      const int a = stack.back();
      stack.pop_back();
      for (const int b : {an.arcs[a].cup_partner, an.arcs[a].cap_partner}) {
        if (an.arcs[b].component >= 0) continue;
        an.arcs[b].component = comp;
        an.arcs[b].descending = !an.arcs[a].descending;
        stack.push_back(b);
      }
    }
  }
  return an;
}

inline MorseKind flipped_crossing(MorseKind k) {
  if (k == MorseKind::Pos) return MorseKind::Neg;
  if (k == MorseKind::Neg) return MorseKind::Pos;
  return k;
}

// Rewrites the diagram so that both strands of every crossing run downward.
// A crossing with one upward strand is rotated by detouring that strand
// through a fresh cup and cap beside the crossing; with both upward the
// detour is applied to each strand, leaving the crossing type unchanged.
inline MorseWord rotate_crossings(const MorseWord& d, const MorseAnalysis& an) {
  MorseWord out;
  std::vector<char> dir;
  for (std::size_t e = 0; e < d.events.size(); ++e) {
    const MorseEvent ev = d.events[e];
    const int i = ev.slot - 1;
    const int s = ev.slot;
    switch (ev.kind) {
      case MorseKind::Cup: {
        const auto [left, right] = an.event_arcs[e];
        dir.insert(dir.begin() + i,
                   {an.arcs[left].descending ? char(1) : char(0),
                    an.arcs[right].descending ? char(1) : char(0)});
        out.events.push_back(ev);
        break;
      }
      case MorseKind::Cap:
        dir.erase(dir.begin() + i, dir.begin() + i + 2);
        out.events.push_back(ev);
        break;
      case MorseKind::Bar:
        out.events.push_back(ev);
        break;
      default: {
        const bool left_down = dir[i];
        const bool right_down = dir[i + 1];
        if (left_down && right_down) {
          out.events.push_back(ev);
        } else if (left_down) {
          out.events.push_back({MorseKind::Cup, s});
          out.events.push_back({flipped_crossing(ev.kind), s + 1});
          out.events.push_back({MorseKind::Cap, s + 2});
        } else if (right_down) {
          out.events.push_back({MorseKind::Cup, s + 2});
          out.events.push_back({flipped_crossing(ev.kind), s + 1});
          out.events.push_back({MorseKind::Cap, s});
        } else {
          out.events.push_back({MorseKind::Cup, s});
          out.events.push_back({MorseKind::Cup, s + 1});
          out.events.push_back({ev.kind, s + 2});
          out.events.push_back({MorseKind::Cap, s + 3});
          out.events.push_back({MorseKind::Cap, s + 2});
        }
        std::swap(dir[i], dir[i + 1]);
        break;
      }
    }
  }
  return out;
}

// An upward arc can serve as a closure return when it carries no bars and,
// at every level it spans, nothing but other returns lies to its right.
inline std::vector<char> free_returns(const MorseAnalysis& an) {
  std::vector<char> free_arc(an.arcs.size(), 0);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t a = 0; a < an.arcs.size(); ++a) {
      const MorseArc& arc = an.arcs[a];
      if (free_arc[a] || arc.descending || arc.bars > 0) continue;
      bool ok = true;
      for (int g = arc.cup_event; g < arc.cap_event && ok; ++g) {
        const std::vector<int>& row = an.occ[g];
        const auto it = std::find(row.begin(), row.end(), static_cast<int>(a));
        for (auto q = it + 1; q != row.end(); ++q)
          if (!free_arc[*q]) {
            ok = false;
            break;
          }
      }
      if (ok) {
        free_arc[a] = 1;
        changed = true;
      }
    }
  }
  return free_arc;
}

}  // namespace detail

struct MorseInvariants {
  int components = 0;
  std::vector<int> bar_parities;  // sorted, one entry per component
  std::int64_t positive = 0;      // classical crossings by oriented sign
  std::int64_t negative = 0;
  std::int64_t virtuals = 0;
  std::int64_t singulars = 0;

  friend bool operator==(const MorseInvariants&, const MorseInvariants&) = default;
};

inline MorseInvariants morse_invariants(const MorseWord& d) {
  check_morse(d);
  const detail::MorseAnalysis an = detail::analyze_morse(d);
  MorseInvariants inv;
  inv.components = an.components;
  std::vector<int> bars(an.components, 0);
  for (const detail::MorseArc& arc : an.arcs) bars[arc.component] += arc.bars;
  for (const int b : bars) inv.bar_parities.push_back(b % 2);
  std::sort(inv.bar_parities.begin(), inv.bar_parities.end());
  for (std::size_t e = 0; e < d.events.size(); ++e) {
    const MorseKind kind = d.events[e].kind;
    if (kind == MorseKind::Cup || kind == MorseKind::Cap || kind == MorseKind::Bar) continue;
    if (kind == MorseKind::Virt) {
      ++inv.virtuals;
      continue;
    }
    if (kind == MorseKind::Sing) {
      ++inv.singulars;
      continue;
    }
    const auto [a, b] = an.event_arcs[e];
    const bool same = an.arcs[a].descending == an.arcs[b].descending;
    const bool positive = (kind == MorseKind::Pos) == same;
    if (positive) ++inv.positive;
    else ++inv.negative;
  }
  return inv;
}

inline BraidWord braid_morse(const MorseWord& d) {
  check_morse(d);
  const MorseWord flat = detail::rotate_crossings(d, detail::analyze_morse(d));
  const detail::MorseAnalysis an = detail::analyze_morse(flat);
  const std::vector<char> free_arc = detail::free_returns(an);

  // Columns: downward arcs first, then the cut upward arcs, both in the
  // order their cups appear.
  std::vector<int> col(an.arcs.size(), 0);
  int degree = 0;
  for (std::size_t a = 0; a < an.arcs.size(); ++a)
    if (an.arcs[a].descending) col[a] = ++degree;
  for (std::size_t a = 0; a < an.arcs.size(); ++a)
    if (!an.arcs[a].descending && !free_arc[a]) col[a] = ++degree;

  // Closure wiring: the strand dying on a column must come back around to
  // the top of the column its arc connects onward to.
  std::vector<int> wire(degree + 1, 0);
  for (std::size_t a = 0; a < an.arcs.size(); ++a) {
    const detail::MorseArc& arc = an.arcs[a];
    if (arc.descending) {
      const int up = arc.cap_partner;
      wire[col[a]] = free_arc[up] ? col[an.arcs[up].cup_partner] : col[up];
    } else if (!free_arc[a]) {
      wire[col[a]] = col[an.arcs[a].cup_partner];
    }
  }

  BraidWord w;
  w.degree = degree;
  std::vector<int> pos(degree + 1), at(degree + 1);
  for (int c = 1; c <= degree; ++c) pos[c] = at[c] = c;
  const auto emit = [&](Kind kind, int p) {
    w.letters.push_back({kind, p});
    if (kind == Kind::Bar) return;
    const int x = at[p], y = at[p + 1];
    at[p] = y;
    at[p + 1] = x;
    pos[x] = p + 1;
    pos[y] = p;
  };

  std::vector<int> cur;
  for (std::size_t e = 0; e < flat.events.size(); ++e) {
    const MorseEvent ev = flat.events[e];
    const int i = ev.slot - 1;
    switch (ev.kind) {
      case MorseKind::Cup: {
        const auto [left, right] = an.event_arcs[e];
        cur.insert(cur.begin() + i, {left, right});
        break;
      }
      case MorseKind::Cap:
        cur.erase(cur.begin() + i, cur.begin() + i + 2);
        break;
      case MorseKind::Bar:
        emit(Kind::Bar, pos[col[cur[i]]]);
        break;
      default: {
        const int sa = col[cur[i]];
        const int sb = col[cur[i + 1]];
        if (pos[sa] < pos[sb]) {
          for (int q = pos[sa]; q <= pos[sb] - 2; ++q) emit(Kind::Virtual, q);
        } else {
          for (int q = pos[sa] - 1; q >= pos[sb]; --q) emit(Kind::Virtual, q);
        }
        Kind kind = Kind::Virtual;
        if (ev.kind == MorseKind::Pos) kind = Kind::SigmaPos;
        if (ev.kind == MorseKind::Neg) kind = Kind::SigmaNeg;
        if (ev.kind == MorseKind::Sing) kind = Kind::Singular;
        emit(kind, pos[sa]);
        std::swap(cur[i], cur[i + 1]);
        break;
      }
    }
  }

  std::vector<int> need(degree + 1, 0);
  for (int c = 1; c <= degree; ++c) need[wire[c]] = c;
  for (int t = 1; t <= degree; ++t)
    for (int q = pos[need[t]] - 1; q >= t; --q) emit(Kind::Virtual, q);
  return w;
}

inline MorseWord morse_encode_closure(const BraidWord& w) {
  MorseWord d;
  for (int k = 1; k <= w.degree; ++k) d.events.push_back({MorseKind::Cup, k});
  for (const Generator g : w.letters) {
    MorseKind kind = MorseKind::Bar;
    switch (g.kind) {
      case Kind::SigmaPos: kind = MorseKind::Pos; break;
      case Kind::SigmaNeg: kind = MorseKind::Neg; break;
      case Kind::Virtual: kind = MorseKind::Virt; break;
      case Kind::Singular: kind = MorseKind::Sing; break;
      case Kind::Bar: kind = MorseKind::Bar; break;
    }
    d.events.push_back({kind, g.index});
  }
  for (int k = w.degree; k >= 1; --k) d.events.push_back({MorseKind::Cap, k});
  return d;
}

}  // namespace stvb

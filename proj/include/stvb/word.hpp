#pragma once

// Words in the singular twisted virtual braid monoid STVB_n.
//
// A word is a degree n >= 1 plus a sequence of letters read top to bottom:
//   s<i> / S<i>  positive / negative real crossing of strands i, i+1
//   v<i>         virtual crossing of strands i, i+1
//   t<i>         singular crossing of strands i, i+1 (not invertible)
//   g<i>         bar on the strand currently at position i
// Text form: "<degree>; <letter><index> ...", e.g. "3; s1 v2 g3".

#include <cstdint>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace stvb {

enum class ErrorKind {
  UnknownToken,
  IndexOutOfRange,
  MalformedHeader,
  DegreeMismatch,
  NotInvertible,
  IllegalParams,
  NoMatchAtPosition,
  PatternAbsent,
  InvalidMorse,
  IllegalGenerator,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

enum class Kind : std::uint8_t { SigmaPos, SigmaNeg, Virtual, Singular, Bar };

struct Generator {
  Kind kind;
  int index;  // 1-based; bars address positions 1..n, the rest 1..n-1

  friend bool operator==(const Generator&, const Generator&) = default;
  friend auto operator<=>(const Generator&, const Generator&) = default;
};

inline char kind_char(Kind k) {
  switch (k) {
    case Kind::SigmaPos: return 's';
    case Kind::SigmaNeg: return 'S';
    case Kind::Virtual: return 'v';
    case Kind::Singular: return 't';
    case Kind::Bar: return 'g';
  }
  throw Error(ErrorKind::IllegalGenerator, "corrupt generator kind");
}

// Largest legal index for a letter kind on n strands.
inline int max_index(Kind k, int degree) { return k == Kind::Bar ? degree : degree - 1; }

inline void check_letter(int degree, Generator g) {
  if (g.index < 1 || g.index > max_index(g.kind, degree)) {
    std::ostringstream os;
    os << "letter " << kind_char(g.kind) << g.index << " out of range on " << degree << " strands";
    throw Error(ErrorKind::IndexOutOfRange, os.str());
  }
}

struct BraidWord {
  int degree = 1;
  std::vector<Generator> letters;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

inline BraidWord make_word(int degree, std::initializer_list<Generator> letters) {
  if (degree < 1) throw Error(ErrorKind::MalformedHeader, "degree must be >= 1");
  BraidWord w{degree, letters};
  for (Generator g : w.letters) check_letter(degree, g);
  return w;
}

inline BraidWord parse_word(const std::string& text) {
  std::size_t p = 0;
  auto skip_ws = [&] {
    while (p < text.size() && (text[p] == ' ' || text[p] == '\t')) ++p;
  };
  skip_ws();
  std::size_t d0 = p;
  while (p < text.size() && text[p] >= '0' && text[p] <= '9') ++p;
  if (p == d0) throw Error(ErrorKind::MalformedHeader, "word must start with a degree");
  long degree = std::stol(text.substr(d0, p - d0));
  skip_ws();
  if (p >= text.size() || text[p] != ';')
    throw Error(ErrorKind::MalformedHeader, "missing ';' after degree");
  ++p;
  if (degree < 1 || degree > 1000)
    throw Error(ErrorKind::MalformedHeader, "degree out of range: " + std::to_string(degree));

  BraidWord w;
  w.degree = static_cast<int>(degree);
  while (true) {
    skip_ws();
    if (p >= text.size()) break;
    char c = text[p];
    Kind k;
    switch (c) {
      case 's': k = Kind::SigmaPos; break;
      case 'S': k = Kind::SigmaNeg; break;
      case 'v': k = Kind::Virtual; break;
      case 't': k = Kind::Singular; break;
      case 'g': k = Kind::Bar; break;
      default:
        throw Error(ErrorKind::UnknownToken, std::string("unknown letter '") + c + "'");
    }
    ++p;
    std::size_t i0 = p;
    while (p < text.size() && text[p] >= '0' && text[p] <= '9') ++p;
    if (p == i0)
      throw Error(ErrorKind::UnknownToken, std::string("letter '") + c + "' needs an index");
    long idx = std::stol(text.substr(i0, p - i0));
    if (p < text.size() && text[p] != ' ' && text[p] != '\t')
      throw Error(ErrorKind::UnknownToken,
                  std::string("malformed token near '") + text[p] + "'");
    Generator g{k, static_cast<int>(idx)};
    check_letter(w.degree, g);
    w.letters.push_back(g);
  }
  return w;
}

inline std::string format_word(const BraidWord& w) {
  std::ostringstream os;
  os << w.degree << ';';
  for (Generator g : w.letters) os << ' ' << kind_char(g.kind) << g.index;
  return os.str();
}

inline BraidWord compose(const BraidWord& a, const BraidWord& b) {
  if (a.degree != b.degree)
    throw Error(ErrorKind::DegreeMismatch, "cannot compose words of degrees " +
                                               std::to_string(a.degree) + " and " +
                                               std::to_string(b.degree));
  BraidWord r = a;
  r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
  return r;
}

inline Generator invert_letter(Generator g) {
  switch (g.kind) {
    case Kind::SigmaPos: return {Kind::SigmaNeg, g.index};
    case Kind::SigmaNeg: return {Kind::SigmaPos, g.index};
    case Kind::Virtual:
    case Kind::Bar: return g;
    case Kind::Singular:
      throw Error(ErrorKind::NotInvertible,
                  "t" + std::to_string(g.index) + " has no inverse");
  }
  throw Error(ErrorKind::IllegalGenerator, "corrupt generator kind");
}

inline BraidWord invert(const BraidWord& w) {
  BraidWord r;
  r.degree = w.degree;
  r.letters.reserve(w.letters.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    r.letters.push_back(invert_letter(*it));
  return r;
}

// Embed w into degree + below + above strands: `below` fresh strands are added
// beneath strand 1 (shifting every index up) and `above` fresh strands above
// strand n (indices unchanged).
inline BraidWord iota(const BraidWord& w, int below, int above) {
  if (below < 0 || above < 0)
    throw Error(ErrorKind::IllegalParams, "iota offsets must be non-negative");
  BraidWord r;
  r.degree = w.degree + below + above;
  r.letters.reserve(w.letters.size());
  for (Generator g : w.letters) r.letters.push_back({g.kind, g.index + below});
  return r;
}

// Left-right mirror automorphism: crossings at i go to n-i, bars at i to n+1-i.
// Letter order is preserved (it is an automorphism, not an anti-automorphism).
inline Generator flip_letter(int degree, Generator g) {
  int i = g.kind == Kind::Bar ? degree + 1 - g.index : degree - g.index;
  return {g.kind, i};
}

inline BraidWord flip(const BraidWord& w) {
  BraidWord r;
  r.degree = w.degree;
  r.letters.reserve(w.letters.size());
  for (Generator g : w.letters) r.letters.push_back(flip_letter(w.degree, g));
  return r;
}

inline BraidWord conjugate(const BraidWord& a, const BraidWord& w) {
  return compose(compose(a, w), invert(a));
}

}  // namespace stvb

#pragma once

// Translation between the full generating set and the reduced one in which
// every crossing and bar with index >= 2 is a virtual conjugate of the
// index-1 generator, plus the mirror apparatus: the flip automorphism on
// letters and the word b* whose conjugation action realizes it.

#include <string>
#include <vector>

#include "stvb/relations.hpp"
#include "stvb/word.hpp"

namespace stvb {

// A word over sigma_1^{+-1}, tau_1, gamma_1, and the virtual letters only.
struct ReducedWord {
  BraidWord word;
};

inline bool is_reduced_letter(Generator g) {
  return g.kind == Kind::Virtual || g.index == 1;
}

inline ReducedWord as_reduced(const BraidWord& w) {
  for (Generator g : w.letters)
    if (!is_reduced_letter(g))
      throw Error(ErrorKind::IllegalGenerator,
                  std::string("letter ") + kind_char(g.kind) +
                      std::to_string(g.index) + " is not a reduced generator");
  return ReducedWord{w};
}

inline ReducedWord expand_generator(Generator g, int degree) {
  try {
    check_letter(degree, g);
  } catch (const Error&) {
    throw Error(ErrorKind::IllegalGenerator,
                std::string("letter ") + kind_char(g.kind) + std::to_string(g.index) +
                    " out of range on " + std::to_string(degree) + " strands");
  }
  BraidWord out;
  out.degree = degree;
  if (is_reduced_letter(g)) {
    out.letters.push_back(g);
  } else {
    out.letters = detail::expansion_letters(g.kind, g.index);
  }
  return ReducedWord{out};
}

inline ReducedWord reduce_word(const BraidWord& w) {
  BraidWord out;
  out.degree = w.degree;
  for (Generator g : w.letters) {
    ReducedWord piece = expand_generator(g, w.degree);
    out.letters.insert(out.letters.end(), piece.word.letters.begin(),
                       piece.word.letters.end());
  }
  return ReducedWord{out};
}

// b*_n = prod_{i=1}^{n-1} (v_i v_{i-1} ... v_1) followed by g_1 g_2 ... g_n.
// Every letter is an involution and b*^2 is equivalent to the identity.
inline BraidWord star_element(int degree) {
  if (degree < 1) throw Error(ErrorKind::IllegalParams, "degree must be >= 1");
  BraidWord r;
  r.degree = degree;
  for (int i = 1; i < degree; ++i)
    for (int j = i; j >= 1; --j) r.letters.push_back({Kind::Virtual, j});
  for (int j = 1; j <= degree; ++j) r.letters.push_back({Kind::Bar, j});
  return r;
}

inline BraidWord conjugate_by_star(const BraidWord& w) {
  return conjugate(star_element(w.degree), w);
}

}  // namespace stvb

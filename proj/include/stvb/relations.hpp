#pragma once

// Defining relations of STVB_n, in three families:
//   Std1..Std23   the standard presentation on all generators
//   Red27..Red45  the reduced presentation on sigma_1^{+-1}, tau_1, gamma_1, v_*
//   Exp24..Exp26  expansion schemas rewriting sigma_i / tau_i / gamma_i into
//                 the reduced generating set
//   Aux46         the v-word identity (v_1..v_{i-1}) v_i (v_{i-1}..v_1)
//                 = (v_i..v_2) v_1 (v_2..v_i)
//   AuxTauGamma   tau_i gamma_1 = gamma_1 tau_i for i >= 2 (coincides with
//                 Std22 at j=1; kept as its own label for derivation files)
//
// Each relation is an unoriented equational pair (lhs, rhs). Commutation
// schemas with two independent indices accept both index orders; enumeration
// emits each unordered pair once. Cancellation schemas (Std14/Red38) carry an
// orientation parameter because both letter orders are needed as insertions.

#include <string>
#include <vector>

#include "stvb/invariants.hpp"
#include "stvb/word.hpp"

namespace stvb {

enum class RelationId {
  Std1, Std2, Std3, Std4, Std5, Std6, Std7, Std8, Std9, Std10, Std11, Std12,
  Std13, Std14, Std15, Std16, Std17, Std18, Std19, Std20, Std21, Std22, Std23,
  Red27, Red28, Red29, Red30, Red31, Red32, Red33, Red34, Red35, Red36, Red37,
  Red38, Red39, Red40, Red41, Red42, Red43, Red44, Red45,
  Exp24, Exp25, Exp26, Aux46, AuxTauGamma,
};

inline const char* relation_label(RelationId r) {
  static const char* names[] = {
      "Std1",  "Std2",  "Std3",  "Std4",  "Std5",  "Std6",  "Std7",  "Std8",
      "Std9",  "Std10", "Std11", "Std12", "Std13", "Std14", "Std15", "Std16",
      "Std17", "Std18", "Std19", "Std20", "Std21", "Std22", "Std23", "Red27",
      "Red28", "Red29", "Red30", "Red31", "Red32", "Red33", "Red34", "Red35",
      "Red36", "Red37", "Red38", "Red39", "Red40", "Red41", "Red42", "Red43",
      "Red44", "Red45", "Exp24", "Exp25", "Exp26", "Aux46", "AuxTauGamma"};
  return names[static_cast<int>(r)];
}

inline constexpr int kRelationCount = 47;

inline RelationId relation_from_label(const std::string& s) {
  for (int k = 0; k < kRelationCount; ++k) {
    RelationId r = static_cast<RelationId>(k);
    if (s == relation_label(r)) return r;
  }
  throw Error(ErrorKind::UnknownToken, "unknown relation label '" + s + "'");
}

// Number of index parameters the label carries in derivation files.
inline int relation_param_count(RelationId r) {
  switch (r) {
    case RelationId::Std1: case RelationId::Std4: case RelationId::Std6:
    case RelationId::Std9: case RelationId::Std10: case RelationId::Std11:
    case RelationId::Std14: case RelationId::Std15: case RelationId::Std16:
    case RelationId::Std20: case RelationId::Std22:
      return 2;
    case RelationId::Red30: case RelationId::Red31: case RelationId::Red33:
    case RelationId::Red35: case RelationId::Red36: case RelationId::Red37:
    case RelationId::Red39: case RelationId::Red41: case RelationId::Red42:
    case RelationId::Red43: case RelationId::Red44: case RelationId::Red45:
      return 0;
    default:
      return 1;
  }
}

struct RelationInstance {
  RelationId rel;
  int i = 0;
  int j = 0;
  BraidWord lhs, rhs;
};

namespace detail {

// v_a v_{a+-1} ... v_b inclusive; empty when the range is empty in the
// direction from a to b.
inline void ladder(std::vector<Generator>& out, int a, int b) {
  if (a <= b)
    for (int k = a; k <= b; ++k) out.push_back({Kind::Virtual, k});
  else
    for (int k = a; k >= b; --k) out.push_back({Kind::Virtual, k});
}

inline std::vector<Generator> expansion_letters(Kind k, int i) {
  std::vector<Generator> out;
  if (k == Kind::Bar) {
    ladder(out, i - 1, 1);
    out.push_back({Kind::Bar, 1});
    ladder(out, 1, i - 1);
  } else {
    ladder(out, i - 1, 1);
    ladder(out, i, 2);
    out.push_back({k, 1});
    ladder(out, 2, i);
    ladder(out, 1, i - 1);
  }
  return out;
}

// The clothed conjugate v2 v3 v1 v2 <mid_1> v2 v1 v3 v2 used by the reduced
// distant-commutation rows (it represents the index-3 generator).
inline std::vector<Generator> clothed3(Kind mid, bool neg = false) {
  std::vector<Generator> out{{Kind::Virtual, 2}, {Kind::Virtual, 3},
                             {Kind::Virtual, 1}, {Kind::Virtual, 2}};
  out.push_back({neg ? Kind::SigmaNeg : mid, 1});
  out.insert(out.end(), {{Kind::Virtual, 2}, {Kind::Virtual, 1},
                         {Kind::Virtual, 3}, {Kind::Virtual, 2}});
  return out;
}

inline void require(bool ok, RelationId r) {
  if (!ok)
    throw Error(ErrorKind::IllegalParams,
                std::string("illegal params for ") + relation_label(r));
}

}  // namespace detail

inline RelationInstance instantiate(RelationId rel, int degree, int i = 0, int j = 0) {
  using detail::require;
  int n = degree;
  if (n < 1) throw Error(ErrorKind::IllegalParams, "degree must be >= 1");
  auto G = [](Kind k, int idx) { return Generator{k, idx}; };
  auto word = [n](std::vector<Generator> ls) { return BraidWord{n, std::move(ls)}; };
  RelationInstance out;
  out.rel = rel;
  out.i = i;
  out.j = j;
  std::vector<Generator> L, R;

  auto distant2 = [&](Kind a, Kind b, int amax, int bmax) {
    require(i >= 1 && i <= amax && j >= 1 && j <= bmax, rel);
    require(i - j >= 2 || j - i >= 2, rel);
    L = {G(a, i), G(b, j)};
    R = {G(b, j), G(a, i)};
  };
  auto bar_distant = [&](Kind a) {
    // a_i gamma_j = gamma_j a_i for j not in {i, i+1}
    require(i >= 1 && i <= n - 1 && j >= 1 && j <= n, rel);
    require(j != i && j != i + 1, rel);
    L = {G(a, i), G(Kind::Bar, j)};
    R = {G(Kind::Bar, j), G(a, i)};
  };
  auto braid3 = [&](Kind mid) {
    require(i >= 1 && i <= n - 2, rel);
    L = {G(Kind::Virtual, i), G(mid, i + 1), G(Kind::Virtual, i)};
    R = {G(Kind::Virtual, i + 1), G(mid, i), G(Kind::Virtual, i + 1)};
  };
  auto twisted_conj = [&](Kind mid) {
    require(i >= 1 && i <= n - 1, rel);
    L = {G(Kind::Virtual, i), G(mid, i), G(Kind::Virtual, i)};
    R = {G(Kind::Bar, i + 1), G(Kind::Bar, i), G(mid, i), G(Kind::Bar, i),
         G(Kind::Bar, i + 1)};
  };
  auto reduced_clothed_commute = [&](Kind outer, Kind mid) {
    require(n >= 4, rel);
    std::vector<Generator> c = detail::clothed3(mid);
    L = {G(outer, 1)};
    L.insert(L.end(), c.begin(), c.end());
    R = c;
    R.push_back(G(outer, 1));
  };
  auto reduced_sleeve_commute = [&](Kind mid) {
    // gamma_1 (v1 v2 mid_1 v2 v1) = (v1 v2 mid_1 v2 v1) gamma_1
    require(n >= 3, rel);
    std::vector<Generator> c{G(Kind::Virtual, 1), G(Kind::Virtual, 2), G(mid, 1),
                             G(Kind::Virtual, 2), G(Kind::Virtual, 1)};
    L = {G(Kind::Bar, 1)};
    L.insert(L.end(), c.begin(), c.end());
    R = c;
    R.push_back(G(Kind::Bar, 1));
  };
  auto reduced_twist_fix = [&](Kind mid) {
    // gamma_1 v1 gamma_1 mid_1 gamma_1 v1 gamma_1 = mid_1
    require(n >= 2, rel);
    L = {G(Kind::Bar, 1), G(Kind::Virtual, 1), G(Kind::Bar, 1), G(mid, 1),
         G(Kind::Bar, 1), G(Kind::Virtual, 1), G(Kind::Bar, 1)};
    R = {G(mid, 1)};
  };

  switch (rel) {
    case RelationId::Std1: distant2(Kind::SigmaPos, Kind::SigmaPos, n - 1, n - 1); break;
    case RelationId::Std2:
      require(i >= 1 && i <= n - 2, rel);
      L = {G(Kind::SigmaPos, i), G(Kind::SigmaPos, i + 1), G(Kind::SigmaPos, i)};
      R = {G(Kind::SigmaPos, i + 1), G(Kind::SigmaPos, i), G(Kind::SigmaPos, i + 1)};
      break;
    case RelationId::Std3:
    case RelationId::Red27:
      require(i >= 1 && i <= n - 1, rel);
      L = {G(Kind::Virtual, i), G(Kind::Virtual, i)};
      break;
    case RelationId::Std4:
    case RelationId::Red28: distant2(Kind::Virtual, Kind::Virtual, n - 1, n - 1); break;
    case RelationId::Std5:
    case RelationId::Red29: braid3(Kind::Virtual); break;
    case RelationId::Std6: distant2(Kind::SigmaPos, Kind::Virtual, n - 1, n - 1); break;
    case RelationId::Std7: braid3(Kind::SigmaPos); break;
    case RelationId::Std8:
      require(i >= 1 && i <= n, rel);
      L = {G(Kind::Bar, i), G(Kind::Bar, i)};
      break;
    case RelationId::Std9:
      require(i >= 1 && i <= n && j >= 1 && j <= n, rel);
      L = {G(Kind::Bar, i), G(Kind::Bar, j)};
      R = {G(Kind::Bar, j), G(Kind::Bar, i)};
      break;
    case RelationId::Std10: bar_distant(Kind::Virtual); break;
    case RelationId::Std11: bar_distant(Kind::SigmaPos); break;
    case RelationId::Std12:
      require(i >= 1 && i <= n - 1, rel);
      L = {G(Kind::Bar, i + 1), G(Kind::Virtual, i)};
      R = {G(Kind::Virtual, i), G(Kind::Bar, i)};
      break;
    case RelationId::Std13: twisted_conj(Kind::SigmaPos); break;
    case RelationId::Std14:
      require(i >= 1 && i <= n - 1 && (j == 0 || j == 1), rel);
      if (j == 0)
        L = {G(Kind::SigmaPos, i), G(Kind::SigmaNeg, i)};
      else
        L = {G(Kind::SigmaNeg, i), G(Kind::SigmaPos, i)};
      break;
    case RelationId::Std15: distant2(Kind::Singular, Kind::Singular, n - 1, n - 1); break;
    case RelationId::Std16: distant2(Kind::SigmaPos, Kind::Singular, n - 1, n - 1); break;
    case RelationId::Std17:
      require(i >= 1 && i <= n - 1, rel);
      L = {G(Kind::SigmaPos, i), G(Kind::Singular, i)};
      R = {G(Kind::Singular, i), G(Kind::SigmaPos, i)};
      break;
    case RelationId::Std18:
      require(i >= 1 && i <= n - 2, rel);
      L = {G(Kind::SigmaPos, i), G(Kind::SigmaPos, i + 1), G(Kind::Singular, i)};
      R = {G(Kind::Singular, i + 1), G(Kind::SigmaPos, i), G(Kind::SigmaPos, i + 1)};
      break;
    case RelationId::Std19:
      require(i >= 1 && i <= n - 2, rel);
      L = {G(Kind::SigmaPos, i + 1), G(Kind::SigmaPos, i), G(Kind::Singular, i + 1)};
      R = {G(Kind::Singular, i), G(Kind::SigmaPos, i + 1), G(Kind::SigmaPos, i)};
      break;
    case RelationId::Std20: distant2(Kind::Singular, Kind::Virtual, n - 1, n - 1); break;
    case RelationId::Std21: braid3(Kind::Singular); break;
    case RelationId::Std22: bar_distant(Kind::Singular); break;
    case RelationId::Std23: twisted_conj(Kind::Singular); break;

    case RelationId::Red30: reduced_clothed_commute(Kind::SigmaPos, Kind::SigmaPos); break;
    case RelationId::Red31: {
      require(n >= 3, rel);
      std::vector<Generator> A{G(Kind::Virtual, 1), G(Kind::SigmaPos, 1), G(Kind::Virtual, 1)};
      std::vector<Generator> B{G(Kind::Virtual, 2), G(Kind::SigmaPos, 1), G(Kind::Virtual, 2)};
      for (auto* p : {&A, &B, &A}) L.insert(L.end(), p->begin(), p->end());
      for (auto* p : {&B, &A, &B}) R.insert(R.end(), p->begin(), p->end());
      break;
    }
    case RelationId::Red32:
      require(i >= 3 && i <= n - 1, rel);
      L = {G(Kind::SigmaPos, 1), G(Kind::Virtual, i)};
      R = {G(Kind::Virtual, i), G(Kind::SigmaPos, 1)};
      break;
    case RelationId::Red33:
      L = {G(Kind::Bar, 1), G(Kind::Bar, 1)};
      break;
    case RelationId::Red34:
      require(i >= 2 && i <= n - 1, rel);
      L = {G(Kind::Bar, 1), G(Kind::Virtual, i)};
      R = {G(Kind::Virtual, i), G(Kind::Bar, 1)};
      break;
    case RelationId::Red35:
      require(n >= 2, rel);
      L = {G(Kind::Bar, 1), G(Kind::Virtual, 1), G(Kind::Bar, 1), G(Kind::Virtual, 1)};
      R = {G(Kind::Virtual, 1), G(Kind::Bar, 1), G(Kind::Virtual, 1), G(Kind::Bar, 1)};
      break;
    case RelationId::Red36: reduced_sleeve_commute(Kind::SigmaPos); break;
    case RelationId::Red37: reduced_twist_fix(Kind::SigmaPos); break;
    case RelationId::Red38:
      require((i == 0 || i == 1) && n >= 2, rel);
      if (i == 0)
        L = {G(Kind::SigmaPos, 1), G(Kind::SigmaNeg, 1)};
      else
        L = {G(Kind::SigmaNeg, 1), G(Kind::SigmaPos, 1)};
      break;
    case RelationId::Red39:
      require(n >= 2, rel);
      L = {G(Kind::SigmaPos, 1), G(Kind::Singular, 1)};
      R = {G(Kind::Singular, 1), G(Kind::SigmaPos, 1)};
      break;
    case RelationId::Red40:
      require(i >= 3 && i <= n - 1, rel);
      L = {G(Kind::Singular, 1), G(Kind::Virtual, i)};
      R = {G(Kind::Virtual, i), G(Kind::Singular, 1)};
      break;
    case RelationId::Red41: {
      require(n >= 3, rel);
      std::vector<Generator> c{G(Kind::Virtual, 1), G(Kind::Virtual, 2),
                               G(Kind::SigmaPos, 1), G(Kind::Virtual, 2),
                               G(Kind::Virtual, 1)};
      L = {G(Kind::Singular, 1)};
      L.insert(L.end(), c.begin(), c.end());
      L.push_back(G(Kind::SigmaPos, 1));
      R = c;
      R.push_back(G(Kind::SigmaPos, 1));
      R.insert(R.end(), {G(Kind::Virtual, 1), G(Kind::Virtual, 2),
                         G(Kind::Singular, 1), G(Kind::Virtual, 2),
                         G(Kind::Virtual, 1)});
      break;
    }
    case RelationId::Red42: reduced_clothed_commute(Kind::Singular, Kind::SigmaPos); break;
    case RelationId::Red43: reduced_clothed_commute(Kind::Singular, Kind::Singular); break;
    case RelationId::Red44: reduced_sleeve_commute(Kind::Singular); break;
    case RelationId::Red45: reduced_twist_fix(Kind::Singular); break;

    case RelationId::Exp24:
      require(i >= 2 && i <= n - 1 && (j == 0 || j == 1), rel);
      if (j == 0) {
        L = {G(Kind::SigmaPos, i)};
        R = detail::expansion_letters(Kind::SigmaPos, i);
      } else {
        L = {G(Kind::SigmaNeg, i)};
        R = detail::expansion_letters(Kind::SigmaNeg, i);
      }
      break;
    case RelationId::Exp25:
      require(i >= 2 && i <= n - 1, rel);
      L = {G(Kind::Singular, i)};
      R = detail::expansion_letters(Kind::Singular, i);
      break;
    case RelationId::Exp26:
      require(i >= 2 && i <= n, rel);
      L = {G(Kind::Bar, i)};
      R = detail::expansion_letters(Kind::Bar, i);
      break;
    case RelationId::Aux46:
      require(i >= 1 && i <= n - 1, rel);
      if (i >= 2) detail::ladder(L, 1, i - 1);
      L.push_back(G(Kind::Virtual, i));
      if (i >= 2) detail::ladder(L, i - 1, 1);
      if (i >= 2) detail::ladder(R, i, 2);
      R.push_back(G(Kind::Virtual, 1));
      if (i >= 2) detail::ladder(R, 2, i);
      break;
    case RelationId::AuxTauGamma:
      require(i >= 2 && i <= n - 1, rel);
      L = {G(Kind::Singular, i), G(Kind::Bar, 1)};
      R = {G(Kind::Bar, 1), G(Kind::Singular, i)};
      break;
  }

  out.lhs = word(std::move(L));
  out.rhs = word(std::move(R));
  for (Generator g : out.lhs.letters) check_letter(n, g);
  for (Generator g : out.rhs.letters) check_letter(n, g);
  return out;
}

enum class Ruleset { Standard, Reduced, StandardAux };

inline Ruleset ruleset_from_string(const std::string& s) {
  if (s == "standard") return Ruleset::Standard;
  if (s == "reduced") return Ruleset::Reduced;
  if (s == "standard+aux") return Ruleset::StandardAux;
  throw Error(ErrorKind::UnknownToken, "unknown ruleset '" + s + "'");
}

inline const char* ruleset_name(Ruleset r) {
  switch (r) {
    case Ruleset::Standard: return "standard";
    case Ruleset::Reduced: return "reduced";
    case Ruleset::StandardAux: return "standard+aux";
  }
  return "?";
}

namespace detail {

template <typename F>
void for_each_instance(RelationId rel, int n, F&& emit) {
  auto pair_distant = [&](int amax, int bmax, bool symmetric) {
    for (int i = 1; i <= amax; ++i)
      for (int j = symmetric ? i + 2 : 1; j <= bmax; ++j) {
        if (!symmetric && (j == i || j == i + 1 || j + 1 == i)) continue;
        if (!symmetric && !(i - j >= 2 || j - i >= 2)) continue;
        emit(i, j);
      }
  };
  switch (rel) {
    case RelationId::Std1:
    case RelationId::Std4:
    case RelationId::Std15:
    case RelationId::Red28:
      pair_distant(n - 1, n - 1, true);
      break;
    case RelationId::Std6:
    case RelationId::Std16:
    case RelationId::Std20:
      pair_distant(n - 1, n - 1, false);
      break;
    case RelationId::Std9:
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) emit(i, j);
      break;
    case RelationId::Std10:
    case RelationId::Std11:
    case RelationId::Std22:
      for (int i = 1; i + 1 <= n; ++i)
        for (int j = 1; j <= n; ++j)
          if (j != i && j != i + 1) emit(i, j);
      break;
    case RelationId::Std14:
      for (int i = 1; i <= n - 1; ++i)
        for (int j = 0; j <= 1; ++j) emit(i, j);
      break;
    case RelationId::Red38:
      if (n >= 2)
        for (int i = 0; i <= 1; ++i) emit(i, 0);
      break;
    case RelationId::Std2:
    case RelationId::Std5:
    case RelationId::Std7:
    case RelationId::Std18:
    case RelationId::Std19:
    case RelationId::Std21:
    case RelationId::Red29:
      for (int i = 1; i <= n - 2; ++i) emit(i, 0);
      break;
    case RelationId::Std3:
    case RelationId::Std12:
    case RelationId::Std13:
    case RelationId::Std17:
    case RelationId::Std23:
    case RelationId::Red27:
      for (int i = 1; i <= n - 1; ++i) emit(i, 0);
      break;
    case RelationId::Std8:
      for (int i = 1; i <= n; ++i) emit(i, 0);
      break;
    case RelationId::Red30:
    case RelationId::Red42:
    case RelationId::Red43:
      if (n >= 4) emit(0, 0);
      break;
    case RelationId::Red31:
    case RelationId::Red36:
    case RelationId::Red41:
    case RelationId::Red44:
      if (n >= 3) emit(0, 0);
      break;
    case RelationId::Red33:
      emit(0, 0);
      break;
    case RelationId::Red35:
    case RelationId::Red37:
    case RelationId::Red39:
    case RelationId::Red45:
      if (n >= 2) emit(0, 0);
      break;
    case RelationId::Red32:
    case RelationId::Red34:
    case RelationId::Red40: {
      int lo = rel == RelationId::Red34 ? 2 : 3;
      for (int i = lo; i <= n - 1; ++i) emit(i, 0);
      break;
    }
    case RelationId::Exp24:
      for (int i = 2; i <= n - 1; ++i)
        for (int j = 0; j <= 1; ++j) emit(i, j);
      break;
    case RelationId::Exp25:
      for (int i = 2; i <= n - 1; ++i) emit(i, 0);
      break;
    case RelationId::Exp26:
      for (int i = 2; i <= n; ++i) emit(i, 0);
      break;
    case RelationId::Aux46:
      // i = 1 is the degenerate identity instance; skip it when enumerating
      for (int i = 2; i <= n - 1; ++i) emit(i, 0);
      break;
    case RelationId::AuxTauGamma:
      for (int i = 2; i <= n - 1; ++i) emit(i, 0);
      break;
  }
}

}  // namespace detail

inline const std::vector<RelationId>& ruleset_relations(Ruleset rs) {
  static const std::vector<RelationId> standard = [] {
    std::vector<RelationId> v;
    for (int k = static_cast<int>(RelationId::Std1); k <= static_cast<int>(RelationId::Std23); ++k)
      v.push_back(static_cast<RelationId>(k));
    return v;
  }();
  static const std::vector<RelationId> reduced = [] {
    std::vector<RelationId> v;
    for (int k = static_cast<int>(RelationId::Red27); k <= static_cast<int>(RelationId::Red45); ++k)
      v.push_back(static_cast<RelationId>(k));
    return v;
  }();
  static const std::vector<RelationId> standard_aux = [] {
    std::vector<RelationId> v = standard;
    v.push_back(RelationId::Aux46);
    return v;
  }();
  switch (rs) {
    case Ruleset::Standard: return standard;
    case Ruleset::Reduced: return reduced;
    case Ruleset::StandardAux: return standard_aux;
  }
  throw Error(ErrorKind::IllegalParams, "corrupt ruleset");
}

inline std::vector<RelationInstance> ruleset_instances(Ruleset rs, int degree) {
  std::vector<RelationInstance> out;
  for (RelationId rel : ruleset_relations(rs))
    detail::for_each_instance(rel, degree, [&](int i, int j) {
      out.push_back(instantiate(rel, degree, i, j));
    });
  return out;
}

struct PresentationViolation {
  RelationId rel;
  int i, j;
  std::string field;
};

struct PresentationReport {
  int degree = 0;
  Ruleset ruleset = Ruleset::Standard;
  std::size_t instances = 0;
  std::vector<PresentationViolation> violations;
  bool ok() const { return violations.empty(); }
};

inline PresentationReport verify_presentation(Ruleset which, int degree) {
  if (degree < 2) throw Error(ErrorKind::IllegalParams, "verify needs degree >= 2");
  if (which == Ruleset::StandardAux)
    throw Error(ErrorKind::IllegalParams, "verify expects 'standard' or 'reduced'");
  PresentationReport rep;
  rep.degree = degree;
  rep.ruleset = which;
  for (const RelationInstance& inst : ruleset_instances(which, degree)) {
    ++rep.instances;
    const char* diff =
        record_difference(invariant_record(inst.lhs), invariant_record(inst.rhs));
    if (diff) rep.violations.push_back({inst.rel, inst.i, inst.j, diff});
  }
  return rep;
}

}  // namespace stvb

#pragma once

// Cheap complete-word invariants: the signed permutation (underlying
// permutation plus per-strand bar parity) together with exact letter counters.
// Every defining relation preserves the whole record, so unequal records prove
// two words inequivalent. Bar parities suffice because the twisted relations
// only ever change bar counts by even amounts.

#include <cstdint>
#include <numeric>
#include <vector>

#include "stvb/word.hpp"

namespace stvb {

struct InvariantRecord {
  int degree = 1;
  std::vector<int> perm;        // perm[p-1] = bottom position of the strand entering at top p
  std::vector<int> bars;        // bars[q-1] = bar parity of the strand leaving at bottom q
  std::int64_t sigma_exp = 0;   // sum of crossing signs
  std::int64_t tau_count = 0;   // number of singular crossings
  int v_parity = 0;             // number of virtual crossings mod 2
  int gamma_parity = 0;         // number of bars mod 2

  friend bool operator==(const InvariantRecord&, const InvariantRecord&) = default;
};

inline InvariantRecord invariant_record(const BraidWord& w) {
  int n = w.degree;
  // strand_at[p-1] = top position of the strand currently at position p
  std::vector<int> strand_at(n);
  std::iota(strand_at.begin(), strand_at.end(), 1);
  std::vector<int> parity(n, 0);  // indexed by strand (top position)

  InvariantRecord r;
  r.degree = n;
  for (Generator g : w.letters) {
    switch (g.kind) {
      case Kind::SigmaPos: r.sigma_exp += 1; break;
      case Kind::SigmaNeg: r.sigma_exp -= 1; break;
      case Kind::Singular: r.tau_count += 1; break;
      case Kind::Virtual: r.v_parity ^= 1; break;
      case Kind::Bar: r.gamma_parity ^= 1; break;
    }
    if (g.kind == Kind::Bar) {
      parity[strand_at[g.index - 1] - 1] ^= 1;
    } else {
      std::swap(strand_at[g.index - 1], strand_at[g.index]);
    }
  }

  r.perm.assign(n, 0);
  r.bars.assign(n, 0);
  for (int q = 1; q <= n; ++q) {
    int strand = strand_at[q - 1];
    r.perm[strand - 1] = q;
    r.bars[q - 1] = parity[strand - 1];
  }
  return r;
}

// Composition law for records; tracing compose(a, b) directly must agree.
inline InvariantRecord compose_records(const InvariantRecord& a, const InvariantRecord& b) {
  if (a.degree != b.degree)
    throw Error(ErrorKind::DegreeMismatch, "cannot compose records of different degrees");
  int n = a.degree;
  InvariantRecord r;
  r.degree = n;
  r.perm.assign(n, 0);
  r.bars.assign(n, 0);
  std::vector<int> b_inv(n, 0);
  for (int p = 1; p <= n; ++p) b_inv[b.perm[p - 1] - 1] = p;
  for (int p = 1; p <= n; ++p) r.perm[p - 1] = b.perm[a.perm[p - 1] - 1];
  for (int q = 1; q <= n; ++q) r.bars[q - 1] = a.bars[b_inv[q - 1] - 1] ^ b.bars[q - 1];
  r.sigma_exp = a.sigma_exp + b.sigma_exp;
  r.tau_count = a.tau_count + b.tau_count;
  r.v_parity = a.v_parity ^ b.v_parity;
  r.gamma_parity = a.gamma_parity ^ b.gamma_parity;
  return r;
}

// Names the first differing field, for DistinctByInvariant reporting.
inline const char* record_difference(const InvariantRecord& a, const InvariantRecord& b) {
  if (a.degree != b.degree) return "degree";
  if (a.perm != b.perm) return "perm";
  if (a.bars != b.bars) return "bars";
  if (a.sigma_exp != b.sigma_exp) return "sigma_exp";
  if (a.tau_count != b.tau_count) return "tau_count";
  if (a.v_parity != b.v_parity) return "v_parity";
  if (a.gamma_parity != b.gamma_parity) return "gamma_parity";
  return nullptr;
}

}  // namespace stvb

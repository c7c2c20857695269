#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qrm/reed_muller.hpp"

// CSS codes built from a self-dual-nested Reed-Muller pair: C1 = RM(r, m)
// with C2 = C1^perp = RM(m-r-1, m) contained in C1. The quantum parameters
// are [[n, 2 k1 - n, 2^(m-r)]] where k1 = dim C1.

namespace qrm {

inline constexpr int kDefaultLeaderCapLog2 = 16;

struct CssCode {
  RmSpec c1;  // the outer classical code C1
  long n = 0;
  long k1 = 0;  // dim C1
  long k = 0;   // logical qubits, 2 k1 - n
  long d = 0;   // 2^(m-r)
  long t = 0;   // correctable errors, floor((d-1)/2)

  bool operator==(const CssCode& other) const = default;
};

// Throws InvalidOrder for a bad (r, m) pair and NotSelfDualNested when
// m - r - 1 > r, i.e. when C1^perp does not fit inside C1. The nesting is
// verified on the actual generators, not assumed.
CssCode css_from_rm(int r, int m);

// Minimum-weight representative of each coset of C1^perp in C1, ties broken
// lexicographically, returned in lexicographic order (the zero word first).
// The cosets index the 2^k basis states. Guards: k <= leader_cap_log2 and
// dim C1^perp <= enum_cap_log2, else CapExceeded.
std::vector<BitVec> coset_leaders(const CssCode& code, int leader_cap_log2 = kDefaultLeaderCapLog2,
                                  int enum_cap_log2 = kDefaultEnumCapLog2);

// A stabilizer basis state as an explicit sparse vector over computational
// basis strings: sum of sign * |v> over the listed terms, not normalized.
// Terms are sorted lexicographically by v.
struct StateTerm {
  BitVec v;
  int sign = 1;  // +1 or -1

  bool operator==(const StateTerm& other) const = default;
};

struct SparseState {
  long n = 0;
  int basis = 1;  // 1: sign form, 2: coset form
  BitVec w;       // the codeword labeling the state
  std::vector<StateTerm> terms;
};

// First encoded basis: sum over v in C1 of (-1)^(v.w) |v>, for w in C1.
// Exactly 2^k1 terms. Throws NotInCodespace when w is outside C1 and
// CapExceeded when k1 exceeds the enumeration cap.
SparseState encode_basis1(const CssCode& code, const BitVec& w,
                          int enum_cap_log2 = kDefaultEnumCapLog2);

// Second encoded basis: sum over v in C1^perp of |v + w>, all signs +1,
// 2^(n - k1) terms. Same guards as encode_basis1.
SparseState encode_basis2(const CssCode& code, const BitVec& w,
                          int enum_cap_log2 = kDefaultEnumCapLog2);

// Amplitude <u|H^(x)n|state> up to the common normalization: for a state with
// terms sign_v |v>, returns sum_v sign_v * (-1)^(u.v). Mapping a basis-2
// state through this yields |C1^perp| on its matching basis-1 support and 0
// elsewhere.
long long hadamard_amplitude(const SparseState& state, const BitVec& u);

// JSON form of a state: {"n", "k", "basis", "w", "terms"} with terms as
// {"v": "<bits>", "sign": +-1} in the state's lexicographic order.
std::string state_to_json(const CssCode& code, const SparseState& state);

}  // namespace qrm

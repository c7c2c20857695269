#pragma once

#include "qrm/linear_code.hpp"

// Binary Reed-Muller codes RM(r, m): length 2^m, dimension sum_{l<=r} C(m,l),
// minimum distance 2^(m-r). Order r = -1 is the zero code, so the duality
// RM(r, m)^perp = RM(m-r-1, m) closes over the whole family.

namespace qrm {

inline constexpr int kZeroCodeOrder = -1;

struct RmSpec {
  int r = 0;
  int m = 0;
  bool operator==(const RmSpec& other) const = default;
};

long rm_block_length(int m);
long rm_dimension(int r, int m);
long rm_distance(int r, int m);

// Canonical generator: blocks G_0 (all-ones row), G_1 (row i evaluates the
// coordinate function x_i, i.e. bit m-1-i of the column index), then G_l for
// l = 2..r whose rows are entrywise products of l distinct G_1 rows, listed
// in lexicographic order of the ascending index sets.
BitMatrix rm_generator(RmSpec spec);

// RM code with its known distance attached (r >= 0). r = -1 gives the zero
// code of length 2^m.
LinearCode rm_code(RmSpec spec);

RmSpec rm_dual_spec(RmSpec spec);

// True when RM(inner) is a subcode of RM(outer), decided by reducing the
// inner generator against the outer one. Holds whenever inner.r <= outer.r.
bool check_nesting(RmSpec inner, RmSpec outer);

// One-step decomposition of RM(r, m) over RM(r-1, m): the transversal rows
// (the G_r block) pick coset representatives of the child inside the parent.
struct Partition {
  LinearCode parent;
  LinearCode child;
  BitMatrix transversal;
};

Partition rm_partition(RmSpec spec);

// Squaring construction on a partition: the length-2n code of all (a, b)
// with a, b in the parent and a + b in the child, generated by rows (g, g)
// for parent basis g plus (h, 0) for child basis h. For an RM partition of
// order (r, m) the result equals RM(r, m+1). The minimum distance of the
// result is min(d_child, 2 d_parent); it is cached when the inputs carry
// their distances.
LinearCode squaring_construct(const Partition& p);

// Builds the squaring codes of the partitions of orders (r, m) and (m-r, m),
// a dual pair of length 2^(m+1), and checks their generators pairwise
// orthogonal.
bool check_dual_partition_orthogonality(int r, int m);

}  // namespace qrm

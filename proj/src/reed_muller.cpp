#include "qrm/reed_muller.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace qrm {

namespace {

void validate_spec(RmSpec spec) {
  if (spec.m < 0) throw InvalidOrder("m must be nonnegative, got " + std::to_string(spec.m));
  if (spec.r < kZeroCodeOrder || spec.r > spec.m)
    throw InvalidOrder("order r must lie in [-1, m], got r=" + std::to_string(spec.r) +
                       " m=" + std::to_string(spec.m));
}

}  // namespace

long rm_block_length(int m) {
  if (m < 0 || m > 62) throw InvalidOrder("m out of range: " + std::to_string(m));
  return 1L << m;
}

long rm_dimension(int r, int m) {
  validate_spec({r, m});
  if (r < 0) return 0;
  long k = 0;
  long binom = 1;  // C(m, 0)
  for (int l = 0; l <= r; ++l) {
    k += binom;
    binom = binom * (m - l) / (l + 1);
  }
  return k;
}

long rm_distance(int r, int m) {
  validate_spec({r, m});
  if (r < 0) throw InvalidOrder("the zero code has no distance");
  return 1L << (m - r);
}

BitMatrix rm_generator(RmSpec spec) {
  validate_spec(spec);
  long n = rm_block_length(spec.m);
  BitMatrix gen(0, n);
  if (spec.r < 0) return gen;

  BitVec ones(n);
  for (long c = 0; c < n; ++c) ones.set(c, true);
  gen.append_row(ones);

  // Coordinate rows: row i of G_1 is bit m-1-i of the column index, so the
  // slowest-varying coordinate comes first.
  std::vector<BitVec> coord(static_cast<std::size_t>(spec.m), BitVec(n));
  for (int i = 0; i < spec.m; ++i)
    for (long c = 0; c < n; ++c)
      coord[static_cast<std::size_t>(i)].set(c, (c >> (spec.m - 1 - i)) & 1);

  for (int l = 1; l <= spec.r; ++l) {
    // Index sets of size l in lexicographic order.
    std::vector<int> idx(static_cast<std::size_t>(l));
    for (int i = 0; i < l; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
      BitVec row = coord[static_cast<std::size_t>(idx[0])];
      for (int i = 1; i < l; ++i) row &= coord[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
      gen.append_row(row);
      int pos = l - 1;
      while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == spec.m - l + pos) --pos;
      if (pos < 0) break;
      ++idx[static_cast<std::size_t>(pos)];
      for (int i = pos + 1; i < l; ++i)
        idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
    }
  }
  return gen;
}

LinearCode rm_code(RmSpec spec) {
  validate_spec(spec);
  if (spec.r < 0) return LinearCode::zero_code(rm_block_length(spec.m));
  return LinearCode::from_generator(rm_generator(spec), rm_distance(spec.r, spec.m));
}

RmSpec rm_dual_spec(RmSpec spec) {
  validate_spec(spec);
  return {spec.m - spec.r - 1, spec.m};
}

bool check_nesting(RmSpec inner, RmSpec outer) {
  validate_spec(inner);
  validate_spec(outer);
  if (inner.m != outer.m)
    throw MismatchedLength("nesting check needs equal block lengths, got m=" +
                           std::to_string(inner.m) + " and m=" + std::to_string(outer.m));
  if (inner.r < 0) return true;
  return rm_code(outer).contains_rows(rm_generator(inner));
}

Partition rm_partition(RmSpec spec) {
  validate_spec(spec);
  if (spec.r < 0) throw InvalidOrder("partition needs order r >= 0");
  LinearCode parent = rm_code(spec);
  LinearCode child = rm_code({spec.r - 1, spec.m});
  // The G_r block, i.e. the rows the parent generator adds below the child's.
  BitMatrix transversal(0, parent.n());
  const BitMatrix& gen = parent.generator();
  for (int r = child.k(); r < parent.k(); ++r) transversal.append_row(gen.row_vec(r));
  return {std::move(parent), std::move(child), std::move(transversal)};
}

LinearCode squaring_construct(const Partition& p) {
  long n = p.parent.n();
  if (p.child.n() != n || p.transversal.cols() != n)
    throw MismatchedLength("partition parts differ in block length");
  if (!p.parent.contains_rows(p.child.generator()))
    throw InvalidPartition("child is not a subcode of the parent");
  BitMatrix stacked = stack_rows(p.child.generator(), p.transversal);
  RrefResult red = rank_and_rref(stacked);
  if (red.rank != stacked.rows())
    throw InvalidPartition("transversal rows are dependent modulo the child");
  if (red.rank != p.parent.k() || !p.parent.contains_rows(p.transversal))
    throw InvalidPartition("child plus transversal does not span the parent");

  BitMatrix gen(0, 2 * n);
  for (int r = 0; r < p.parent.k(); ++r) {
    BitVec row(2 * n);
    for (long c = 0; c < n; ++c) {
      bool bit = p.parent.generator().get(r, c);
      row.set(c, bit);
      row.set(n + c, bit);
    }
    gen.append_row(row);
  }
  for (int r = 0; r < p.child.k(); ++r) {
    BitVec row(2 * n);
    for (long c = 0; c < n; ++c) row.set(c, p.child.generator().get(r, c));
    gen.append_row(row);
  }

  // Weight argument for the distance: a codeword is (a + h, a) with a in the
  // parent and h in the child. For h != 0 its weight is at least wt(h); for
  // h = 0 it is 2 wt(a). Both bounds are met by minimum-weight choices.
  std::optional<long> dist;
  if (p.parent.k() > 0 && p.parent.distance().has_value()) {
    if (p.child.k() == 0)
      dist = 2 * *p.parent.distance();
    else if (p.child.distance().has_value())
      dist = std::min(*p.child.distance(), 2 * *p.parent.distance());
  }
  return LinearCode::from_generator(std::move(gen), dist);
}

bool check_dual_partition_orthogonality(int r, int m) {
  validate_spec({r, m});
  if (r < 0) throw InvalidOrder("partition needs order r >= 0");
  LinearCode a = squaring_construct(rm_partition({r, m}));
  LinearCode b = squaring_construct(rm_partition({m - r, m}));
  return rows_orthogonal(a.generator(), b.generator());
}

}  // namespace qrm

#include "qrm/bit_matrix.hpp"

#include <algorithm>
#include <utility>

#include "qrm/bitops.hpp"

namespace qrm {

BitMatrix::BitMatrix(int rows, long cols)
    : rows_(rows), cols_(cols), stride_(words_for_bits(cols)) {
  if (rows < 0 || cols < 1) throw DomainError("BitMatrix needs rows >= 0 and cols >= 1");
  data_.assign(static_cast<std::size_t>(rows) * stride_, 0);
}

BitMatrix BitMatrix::from_rows(const std::vector<BitVec>& rows, long cols) {
  BitMatrix m(0, cols);
  for (const BitVec& v : rows) m.append_row(v);
  return m;
}

BitMatrix BitMatrix::from_text(std::string_view text) {
  std::vector<BitVec> rows;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() : eol + 1;
    if (line.empty()) continue;
    rows.push_back(BitVec::from_string(line));
  }
  if (rows.empty()) throw DomainError("matrix text holds no rows");
  long cols = rows.front().size();
  for (const BitVec& v : rows)
    if (v.size() != cols) throw MismatchedLength("matrix text rows differ in length");
  return from_rows(rows, cols);
}

void BitMatrix::set(int r, long c, bool value) {
  std::uint64_t mask = std::uint64_t{1} << (c % kWordBits);
  std::uint64_t& word = row_ptr(r)[static_cast<std::size_t>(c / kWordBits)];
  if (value)
    word |= mask;
  else
    word &= ~mask;
}

BitVec BitMatrix::row_vec(int r) const {
  BitVec v(cols_);
  std::copy_n(row_ptr(r), stride_, v.data());
  return v;
}

void BitMatrix::append_row(const BitVec& v) {
  if (v.size() != cols_) throw MismatchedLength("appended row length differs from matrix width");
  data_.insert(data_.end(), v.words().begin(), v.words().end());
  ++rows_;
}

void BitMatrix::xor_rows(int dst, int src) {
  bitops::active_kernels().xor_into(row_ptr(dst), row_ptr(src), stride_);
}

void BitMatrix::swap_rows(int a, int b) {
  if (a == b) return;
  std::swap_ranges(row_ptr(a), row_ptr(a) + stride_, row_ptr(b));
}

std::string BitMatrix::to_text() const {
  std::string out;
  out.reserve(static_cast<std::size_t>(rows_) * static_cast<std::size_t>(cols_ + 1));
  for (int r = 0; r < rows_; ++r) {
    out += row_vec(r).to_string();
    out += '\n';
  }
  return out;
}

RrefResult rank_and_rref(const BitMatrix& m) {
  RrefResult res;
  res.rref = m;
  BitMatrix& a = res.rref;
  int rank = 0;
  for (long col = 0; col < a.cols() && rank < a.rows(); ++col) {
    int pivot = -1;
    for (int r = rank; r < a.rows(); ++r) {
      if (a.get(r, col)) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    a.swap_rows(rank, pivot);
    for (int r = 0; r < a.rows(); ++r)
      if (r != rank && a.get(r, col)) a.xor_rows(r, rank);
    res.pivot_cols.push_back(col);
    ++rank;
  }
  res.rank = rank;
  return res;
}

BitMatrix nullspace_generator(const BitMatrix& m) {
  RrefResult red = rank_and_rref(m);
  // Free columns index the basis vectors: each takes 1 at its own column and
  // copies the pivot-row entries at the pivot columns.
  std::vector<char> is_pivot(static_cast<std::size_t>(m.cols()), 0);
  for (long c : red.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = 1;
  BitMatrix basis(0, m.cols());
  for (long free = 0; free < m.cols(); ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    BitVec v(m.cols());
    v.set(free, true);
    for (int r = 0; r < red.rank; ++r)
      if (red.rref.get(r, free)) v.set(red.pivot_cols[static_cast<std::size_t>(r)], true);
    basis.append_row(v);
  }
  return basis;
}

bool in_row_space(const RrefResult& reduced, const BitVec& v) {
  if (v.size() != reduced.rref.cols())
    throw MismatchedLength("vector length differs from matrix width");
  BitVec work = v;
  const auto& xor_into = bitops::active_kernels().xor_into;
  for (int r = 0; r < reduced.rank; ++r) {
    if (work.get(reduced.pivot_cols[static_cast<std::size_t>(r)]))
      xor_into(work.data(), reduced.rref.row_ptr(r), reduced.rref.words_per_row());
  }
  return work.is_zero();
}

bool same_row_space(const BitMatrix& a, const BitMatrix& b) {
  if (a.cols() != b.cols()) return false;
  RrefResult ra = rank_and_rref(a);
  RrefResult rb = rank_and_rref(b);
  if (ra.rank != rb.rank) return false;
  for (int r = 0; r < rb.rank; ++r)
    if (!in_row_space(ra, rb.rref.row_vec(r))) return false;
  return true;
}

bool rows_orthogonal(const BitMatrix& a, const BitMatrix& b) {
  if (a.cols() != b.cols()) throw MismatchedLength("orthogonality check on unequal lengths");
  const auto& and_popcount = bitops::active_kernels().and_popcount;
  std::size_t words = a.words_per_row();
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < b.rows(); ++j)
      if (and_popcount(a.row_ptr(i), b.row_ptr(j), words) & 1u) return false;
  return true;
}

BitMatrix stack_rows(const BitMatrix& top, const BitMatrix& bottom) {
  if (top.cols() != bottom.cols()) throw MismatchedLength("stacked matrices differ in width");
  BitMatrix out = top;
  for (int r = 0; r < bottom.rows(); ++r) out.append_row(bottom.row_vec(r));
  return out;
}

}  // namespace qrm

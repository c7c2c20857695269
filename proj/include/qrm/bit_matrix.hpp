#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qrm/errors.hpp"

// Bit-packed vectors and matrices over GF(2).
//
// Packing convention: column 0 is the leftmost symbol of a codeword and lives
// in the least significant bit of word 0; column c sits at bit (c % 64) of
// word (c / 64). Bits past the column count are kept zero so whole-word
// equality, popcount and lexicographic compare need no masking.

namespace qrm {

inline constexpr int kWordBits = 64;

constexpr std::size_t words_for_bits(long bits) {
  return static_cast<std::size_t>((bits + kWordBits - 1) / kWordBits);
}

class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(long n_bits) : n_bits_(n_bits), words_(words_for_bits(n_bits), 0) {
    if (n_bits < 0) throw DomainError("BitVec length must be nonnegative");
  }

  // Parses a string of '0'/'1' characters, one per column.
  static BitVec from_string(std::string_view s) {
    BitVec v(static_cast<long>(s.size()));
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] == '1')
        v.set(static_cast<long>(i), true);
      else if (s[i] != '0')
        throw DomainError("bit string may contain only '0' and '1'");
    }
    return v;
  }

  long size() const { return n_bits_; }
  std::size_t word_count() const { return words_.size(); }
  std::uint64_t* data() { return words_.data(); }
  const std::uint64_t* data() const { return words_.data(); }
  std::span<const std::uint64_t> words() const { return words_; }

  bool get(long c) const {
    return (words_[static_cast<std::size_t>(c / kWordBits)] >> (c % kWordBits)) & 1u;
  }

  void set(long c, bool value) {
    std::uint64_t mask = std::uint64_t{1} << (c % kWordBits);
    if (value)
      words_[static_cast<std::size_t>(c / kWordBits)] |= mask;
    else
      words_[static_cast<std::size_t>(c / kWordBits)] &= ~mask;
  }

  BitVec& operator^=(const BitVec& other) {
    if (other.n_bits_ != n_bits_) throw MismatchedLength("BitVec xor operands differ in length");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
    return *this;
  }

  friend BitVec operator^(BitVec a, const BitVec& b) {
    a ^= b;
    return a;
  }

  BitVec& operator&=(const BitVec& other) {
    if (other.n_bits_ != n_bits_) throw MismatchedLength("BitVec and operands differ in length");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
  }

  long weight() const {
    long w = 0;
    for (std::uint64_t word : words_) w += std::popcount(word);
    return w;
  }

  bool is_zero() const {
    for (std::uint64_t word : words_)
      if (word != 0) return false;
    return true;
  }

  // GF(2) inner product (parity of the AND).
  bool dot(const BitVec& other) const {
    if (other.n_bits_ != n_bits_) throw MismatchedLength("BitVec dot operands differ in length");
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) acc ^= words_[i] & other.words_[i];
    return std::popcount(acc) & 1;
  }

  // Lexicographic order on the column sequence: the vector with 0 at the
  // first differing column is smaller. With the LSB-first packing this is the
  // word whose lowest differing bit belongs to *this.
  bool lex_less(const BitVec& other) const {
    if (other.n_bits_ != n_bits_) throw MismatchedLength("BitVec compare operands differ in length");
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t diff = words_[i] ^ other.words_[i];
      if (diff != 0) {
        int c = std::countr_zero(diff);
        return ((words_[i] >> c) & 1u) == 0;
      }
    }
    return false;
  }

  bool operator==(const BitVec& other) const = default;

  std::string to_string() const {
    std::string s(static_cast<std::size_t>(n_bits_), '0');
    for (long c = 0; c < n_bits_; ++c)
      if (get(c)) s[static_cast<std::size_t>(c)] = '1';
    return s;
  }

 private:
  long n_bits_ = 0;
  std::vector<std::uint64_t> words_;
};

class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(int rows, long cols);

  static BitMatrix from_rows(const std::vector<BitVec>& rows, long cols);
  // Parses the text form: one '0'/'1' row per line, all rows equal length.
  static BitMatrix from_text(std::string_view text);

  int rows() const { return rows_; }
  long cols() const { return cols_; }
  std::size_t words_per_row() const { return stride_; }

  std::uint64_t* row_ptr(int r) { return data_.data() + static_cast<std::size_t>(r) * stride_; }
  const std::uint64_t* row_ptr(int r) const {
    return data_.data() + static_cast<std::size_t>(r) * stride_;
  }
  std::span<const std::uint64_t> row_span(int r) const { return {row_ptr(r), stride_}; }

  bool get(int r, long c) const {
    return (row_ptr(r)[static_cast<std::size_t>(c / kWordBits)] >> (c % kWordBits)) & 1u;
  }
  void set(int r, long c, bool value);

  BitVec row_vec(int r) const;
  void append_row(const BitVec& v);
  void xor_rows(int dst, int src);
  void swap_rows(int a, int b);

  std::string to_text() const;
  bool operator==(const BitMatrix& other) const = default;

 private:
  int rows_ = 0;
  long cols_ = 0;
  std::size_t stride_ = 0;
  std::vector<std::uint64_t> data_;
};

struct RrefResult {
  int rank = 0;
  BitMatrix rref;               // same shape as the input, zero rows at the bottom
  std::vector<long> pivot_cols;  // one ascending column per nonzero row
};

RrefResult rank_and_rref(const BitMatrix& m);

// Basis of the right null space {v : m v^T = 0}, one row per free column.
// The result has cols(m) - rank(m) rows and is itself full-rank.
BitMatrix nullspace_generator(const BitMatrix& m);

// Membership of v in the row space described by a reduction result.
bool in_row_space(const RrefResult& reduced, const BitVec& v);

bool same_row_space(const BitMatrix& a, const BitMatrix& b);

// True when every row of a is orthogonal to every row of b.
bool rows_orthogonal(const BitMatrix& a, const BitMatrix& b);

BitMatrix stack_rows(const BitMatrix& top, const BitMatrix& bottom);

}  // namespace qrm

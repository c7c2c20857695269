#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "qrm/bit_matrix.hpp"

namespace qrm {

// Enumeration guard: operations that walk all 2^k codewords refuse to start
// when k exceeds this log2 cap unless the caller raises it explicitly.
inline constexpr int kDefaultEnumCapLog2 = 26;

// A binary linear [n, k] code held as a full-rank generator matrix. The
// reduced form is computed once so membership tests are cheap.
class LinearCode {
 public:
  // Throws DomainError when the rows are linearly dependent; a generator is
  // required to be a basis. An optional known minimum distance may be cached.
  static LinearCode from_generator(BitMatrix gen, std::optional<long> distance = std::nullopt);

  // The [n, 0] code containing only the zero word.
  static LinearCode zero_code(long n);

  long n() const { return gen_.cols(); }
  int k() const { return gen_.rows(); }
  const BitMatrix& generator() const { return gen_; }
  const RrefResult& reduced() const { return reduced_; }
  std::optional<long> distance() const { return distance_; }

  bool contains(const BitVec& v) const { return in_row_space(reduced_, v); }
  bool contains_rows(const BitMatrix& m) const;

 private:
  LinearCode(BitMatrix gen, RrefResult reduced, std::optional<long> distance)
      : gen_(std::move(gen)), reduced_(std::move(reduced)), distance_(distance) {}

  BitMatrix gen_;
  RrefResult reduced_;
  std::optional<long> distance_;
};

// The dual code, generated by a parity-check basis of the input.
LinearCode dual_code(const LinearCode& code);

// Walks all 2^k codewords in message Gray-code order: step i flips generator
// row ctz(i), so each codeword costs one row XOR. The first word is zero and
// every codeword appears exactly once. Throws CapExceeded when k > cap_log2.
class CodewordStream {
 public:
  explicit CodewordStream(const LinearCode& code, int cap_log2 = kDefaultEnumCapLog2);

  std::span<const std::uint64_t> current() const { return acc_.words(); }
  const BitVec& current_vec() const { return acc_; }
  std::uint64_t index() const { return index_; }
  std::uint64_t total() const { return total_; }

  // Advances to the next codeword; false once all have been produced.
  bool advance();

 private:
  BitMatrix gen_;
  BitVec acc_;
  std::uint64_t index_ = 0;
  std::uint64_t total_ = 1;
};

// Minimum Hamming weight of a nonzero codeword, by exhaustive enumeration.
// Throws EmptyCode for k = 0 (no nonzero codeword exists) and CapExceeded
// when 2^k enumeration would breach the cap.
long min_weight_bruteforce(const LinearCode& code, int cap_log2 = kDefaultEnumCapLog2);

}  // namespace qrm

#include "qrm/linear_code.hpp"

#include <bit>
#include <string>
#include <utility>

#include "qrm/bitops.hpp"

namespace qrm {

LinearCode LinearCode::from_generator(BitMatrix gen, std::optional<long> distance) {
  RrefResult reduced = rank_and_rref(gen);
  if (reduced.rank != gen.rows())
    throw DomainError("generator rows are linearly dependent (rank " +
                      std::to_string(reduced.rank) + " of " + std::to_string(gen.rows()) + ")");
  return LinearCode(std::move(gen), std::move(reduced), distance);
}

LinearCode LinearCode::zero_code(long n) {
  return from_generator(BitMatrix(0, n), std::nullopt);
}

bool LinearCode::contains_rows(const BitMatrix& m) const {
  for (int r = 0; r < m.rows(); ++r)
    if (!contains(m.row_vec(r))) return false;
  return true;
}

LinearCode dual_code(const LinearCode& code) {
  return LinearCode::from_generator(nullspace_generator(code.generator()));
}

CodewordStream::CodewordStream(const LinearCode& code, int cap_log2)
    : gen_(code.generator()), acc_(code.n()) {
  int k = code.k();
  if (k > cap_log2)
    throw CapExceeded("codeword enumeration needs 2^" + std::to_string(k) +
                      " steps, cap is 2^" + std::to_string(cap_log2));
  total_ = std::uint64_t{1} << k;
}

bool CodewordStream::advance() {
  if (index_ + 1 == total_) return false;
  ++index_;
  // Gray code: message index_ ^ (index_ >> 1) differs from its predecessor
  // in exactly bit ctz(index_).
  int flipped = std::countr_zero(index_);
  bitops::active_kernels().xor_into(acc_.data(), gen_.row_ptr(flipped), gen_.words_per_row());
  return true;
}

long min_weight_bruteforce(const LinearCode& code, int cap_log2) {
  if (code.k() == 0) throw EmptyCode("minimum weight is undefined for a dimensionless code");
  if (code.k() > cap_log2)
    throw CapExceeded("minimum-weight search needs 2^" + std::to_string(code.k()) +
                      " steps, cap is 2^" + std::to_string(cap_log2));
  const BitMatrix& gen = code.generator();
  std::uint64_t total = std::uint64_t{1} << code.k();
  long best = code.n();
  if (gen.words_per_row() == 1) {
    // Single-word codes: run the Gray walk on one register.
    std::uint64_t acc = 0;
    for (std::uint64_t i = 1; i < total; ++i) {
      acc ^= gen.row_ptr(std::countr_zero(i))[0];
      long w = std::popcount(acc);
      if (w < best) best = w;
    }
    return best;
  }
  const auto& kernels = bitops::active_kernels();
  BitVec acc(code.n());
  std::size_t words = gen.words_per_row();
  for (std::uint64_t i = 1; i < total; ++i) {
    long w = static_cast<long>(
        kernels.xor_into_popcount(acc.data(), gen.row_ptr(std::countr_zero(i)), words));
    if (w < best) best = w;
  }
  return best;
}

}  // namespace qrm

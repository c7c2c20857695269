#include "qrm/weight_enumerator.hpp"

#include <bit>
#include <string>

#include "qrm/bitops.hpp"

namespace qrm {

namespace {

// Pascal triangle up to row n, exact.
std::vector<std::vector<BigInt>> binomial_table(long n) {
  std::vector<std::vector<BigInt>> c(static_cast<std::size_t>(n) + 1);
  for (long i = 0; i <= n; ++i) {
    auto& row = c[static_cast<std::size_t>(i)];
    row.assign(static_cast<std::size_t>(i) + 1, 1);
    for (long j = 1; j < i; ++j)
      row[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] +
                                         c[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)];
  }
  return c;
}

}  // namespace

WeightEnumerator weight_enumerator(const LinearCode& code, int cap_log2) {
  if (code.k() > cap_log2)
    throw CapExceeded("weight enumeration needs 2^" + std::to_string(code.k()) +
                      " steps, cap is 2^" + std::to_string(cap_log2));
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(code.n()) + 1, 0);
  const BitMatrix& gen = code.generator();
  std::uint64_t total = std::uint64_t{1} << code.k();
  counts[0] = 1;
  if (code.k() > 0) {
    if (gen.words_per_row() == 1) {
      std::uint64_t acc = 0;
      for (std::uint64_t i = 1; i < total; ++i) {
        acc ^= gen.row_ptr(std::countr_zero(i))[0];
        ++counts[static_cast<std::size_t>(std::popcount(acc))];
      }
    } else {
      const auto& kernels = bitops::active_kernels();
      BitVec acc(code.n());
      std::size_t words = gen.words_per_row();
      for (std::uint64_t i = 1; i < total; ++i) {
        std::uint64_t w =
            kernels.xor_into_popcount(acc.data(), gen.row_ptr(std::countr_zero(i)), words);
        ++counts[static_cast<std::size_t>(w)];
      }
    }
  }
  WeightEnumerator result;
  result.n = code.n();
  result.coeff.assign(counts.begin(), counts.end());
  return result;
}

WeightEnumerator macwilliams_transform(const WeightEnumerator& w, int k) {
  long n = w.n;
  if (n < 1 || w.coeff.size() != static_cast<std::size_t>(n) + 1)
    throw DomainError("weight distribution must hold n + 1 coefficients");
  if (k < 0 || k > n) throw DomainError("code dimension out of range");

  auto binom = binomial_table(n);
  BigInt size = BigInt(1) << k;

  WeightEnumerator dual;
  dual.n = n;
  dual.coeff.assign(static_cast<std::size_t>(n) + 1, 0);
  for (long j = 0; j <= n; ++j) {
    BigInt sum = 0;
    for (long i = 0; i <= n; ++i) {
      const BigInt& a = w.coeff[static_cast<std::size_t>(i)];
      if (a == 0) continue;
      // K_j(i), built from the two halves of the column split.
      BigInt kern = 0;
      long s_lo = std::max(0L, j - (n - i));
      long s_hi = std::min(i, j);
      for (long s = s_lo; s <= s_hi; ++s) {
        BigInt term = binom[static_cast<std::size_t>(i)][static_cast<std::size_t>(s)] *
                      binom[static_cast<std::size_t>(n - i)][static_cast<std::size_t>(j - s)];
        if (s & 1)
          kern -= term;
        else
          kern += term;
      }
      sum += a * kern;
    }
    if (sum % size != 0)
      throw NonIntegerResult("dual coefficient A'_" + std::to_string(j) +
                             " is not divisible by 2^" + std::to_string(k));
    BigInt value = sum / size;
    if (value < 0)
      throw NonIntegerResult("dual coefficient A'_" + std::to_string(j) + " is negative");
    dual.coeff[static_cast<std::size_t>(j)] = value;
  }
  return dual;
}

}  // namespace qrm

#include "qrm/bitops.hpp"

#include <bit>
#include <cstdlib>

namespace qrm::bitops {

namespace {

void xor_into_scalar(std::uint64_t* dst, const std::uint64_t* src, std::size_t n_words) {
  for (std::size_t i = 0; i < n_words; ++i) dst[i] ^= src[i];
}

std::uint64_t xor_into_popcount_scalar(std::uint64_t* dst, const std::uint64_t* src,
                                       std::size_t n_words) {
  std::uint64_t count = 0;
  for (std::size_t i = 0; i < n_words; ++i) {
    dst[i] ^= src[i];
    count += static_cast<std::uint64_t>(std::popcount(dst[i]));
  }
  return count;
}

std::uint64_t popcount_scalar(const std::uint64_t* a, std::size_t n_words) {
  std::uint64_t count = 0;
  for (std::size_t i = 0; i < n_words; ++i)
    count += static_cast<std::uint64_t>(std::popcount(a[i]));
  return count;
}

std::uint64_t and_popcount_scalar(const std::uint64_t* a, const std::uint64_t* b,
                                  std::size_t n_words) {
  std::uint64_t count = 0;
  for (std::size_t i = 0; i < n_words; ++i)
    count += static_cast<std::uint64_t>(std::popcount(a[i] & b[i]));
  return count;
}

constexpr Kernels kScalar = {
    "scalar",
    &xor_into_scalar,
    &xor_into_popcount_scalar,
    &popcount_scalar,
    &and_popcount_scalar,
};

}  // namespace

const Kernels& scalar_kernels() { return kScalar; }

const Kernels& active_kernels() {
  static const Kernels& chosen = []() -> const Kernels& {
    const char* force = std::getenv("QRM_FORCE_SCALAR");
    if (force != nullptr && force[0] != '\0' && force[0] != '0') return kScalar;
    if (const Kernels* avx2 = avx2_kernels()) return *avx2;
    return kScalar;
  }();
  return chosen;
}

}  // namespace qrm::bitops

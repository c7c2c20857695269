#include "qrm/bitops.hpp"

// AVX2 variants of the GF(2) word kernels. Compiled with per-function target
// attributes so the translation unit builds without -mavx2; dispatch happens
// once at runtime in avx2_kernels(). Popcount uses the 4-bit table lookup via
// pshufb with a horizontal reduce through sad_epu8.

#if defined(__x86_64__) || defined(__i386__)

#include <immintrin.h>

#include <bit>

namespace qrm::bitops {

namespace {

#define QRM_AVX2 __attribute__((target("avx2")))

QRM_AVX2 inline __m256i popcount_bytes(__m256i v) {
  const __m256i table = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,  //
                                         0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low_mask = _mm256_set1_epi8(0x0f);
  __m256i lo = _mm256_and_si256(v, low_mask);
  __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
  __m256i counts = _mm256_add_epi8(_mm256_shuffle_epi8(table, lo), _mm256_shuffle_epi8(table, hi));
  // Four lane-wise sums of eight bytes each, as 64-bit counters.
  return _mm256_sad_epu8(counts, _mm256_setzero_si256());
}

QRM_AVX2 inline std::uint64_t horizontal_sum(__m256i acc) {
  __m128i lo = _mm256_castsi256_si128(acc);
  __m128i hi = _mm256_extracti128_si256(acc, 1);
  __m128i sum = _mm_add_epi64(lo, hi);
  return static_cast<std::uint64_t>(_mm_extract_epi64(sum, 0)) +
         static_cast<std::uint64_t>(_mm_extract_epi64(sum, 1));
}

QRM_AVX2 void xor_into_avx2(std::uint64_t* dst, const std::uint64_t* src, std::size_t n_words) {
  std::size_t i = 0;
  for (; i + 4 <= n_words; i += 4) {
    __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_xor_si256(d, s));
  }
  for (; i < n_words; ++i) dst[i] ^= src[i];
}

QRM_AVX2 std::uint64_t xor_into_popcount_avx2(std::uint64_t* dst, const std::uint64_t* src,
                                              std::size_t n_words) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= n_words; i += 4) {
    __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    __m256i x = _mm256_xor_si256(d, s);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), x);
    acc = _mm256_add_epi64(acc, popcount_bytes(x));
  }
  std::uint64_t count = horizontal_sum(acc);
  for (; i < n_words; ++i) {
    dst[i] ^= src[i];
    count += static_cast<std::uint64_t>(std::popcount(dst[i]));
  }
  return count;
}

QRM_AVX2 std::uint64_t popcount_avx2(const std::uint64_t* a, std::size_t n_words) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= n_words; i += 4) {
    __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    acc = _mm256_add_epi64(acc, popcount_bytes(v));
  }
  std::uint64_t count = horizontal_sum(acc);
  for (; i < n_words; ++i) count += static_cast<std::uint64_t>(std::popcount(a[i]));
  return count;
}

QRM_AVX2 std::uint64_t and_popcount_avx2(const std::uint64_t* a, const std::uint64_t* b,
                                         std::size_t n_words) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= n_words; i += 4) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    acc = _mm256_add_epi64(acc, popcount_bytes(_mm256_and_si256(va, vb)));
  }
  std::uint64_t count = horizontal_sum(acc);
  for (; i < n_words; ++i) count += static_cast<std::uint64_t>(std::popcount(a[i] & b[i]));
  return count;
}

#undef QRM_AVX2

constexpr Kernels kAvx2 = {
    "avx2",
    &xor_into_avx2,
    &xor_into_popcount_avx2,
    &popcount_avx2,
    &and_popcount_avx2,
};

}  // namespace

const Kernels* avx2_kernels() {
  static const Kernels* probed = []() -> const Kernels* {
    return __builtin_cpu_supports("avx2") ? &kAvx2 : nullptr;
  }();
  return probed;
}

}  // namespace qrm::bitops

#else  // non-x86 build: no AVX2 variant

namespace qrm::bitops {

const Kernels* avx2_kernels() { return nullptr; }

}  // namespace qrm::bitops

#endif

#pragma once

#include <cstddef>
#include <cstdint>

// Word-level kernels for bit-packed GF(2) rows. Everything above this layer
// (row reduction, codeword enumeration, weight counting) funnels through
// these four operations, so they exist in a scalar reference form and, on
// x86-64 with AVX2, a vectorized form selected at runtime.

namespace qrm::bitops {

struct Kernels {
  const char* name;
  // dst ^= src, word-wise.
  void (*xor_into)(std::uint64_t* dst, const std::uint64_t* src, std::size_t n_words);
  // dst ^= src, returning popcount(dst) after the update.
  std::uint64_t (*xor_into_popcount)(std::uint64_t* dst, const std::uint64_t* src,
                                     std::size_t n_words);
  std::uint64_t (*popcount)(const std::uint64_t* a, std::size_t n_words);
  // popcount(a & b), without materializing the AND.
  std::uint64_t (*and_popcount)(const std::uint64_t* a, const std::uint64_t* b,
                                std::size_t n_words);
};

// Portable reference implementation; always available.
const Kernels& scalar_kernels();

// AVX2 implementation, or nullptr when the CPU lacks AVX2 (or the build
// targets a non-x86 architecture).
const Kernels* avx2_kernels();

// Best kernels for this machine, probed once. Setting QRM_FORCE_SCALAR=1 in
// the environment pins the scalar set regardless of CPU features.
const Kernels& active_kernels();

}  // namespace qrm::bitops

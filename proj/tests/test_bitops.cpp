#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <cstdint>
#include <random>
#include <vector>

#include "qrm/bitops.hpp"

using qrm::bitops::Kernels;

namespace {

std::vector<std::uint64_t> random_words(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::uint64_t> v(n);
  for (auto& w : v) w = rng();
  return v;
}

// The scalar set is the reference; any other kernel set must agree on every
// buffer size, including the empty one and sizes around the vector width.
void check_equivalence(const Kernels& ref, const Kernels& other) {
  std::mt19937_64 rng(0xb17093u);
  for (std::size_t n : {0u, 1u, 2u, 3u, 4u, 5u, 7u, 8u, 15u, 16u, 17u, 33u, 64u, 100u}) {
    for (int rep = 0; rep < 8; ++rep) {
      std::vector<std::uint64_t> a = random_words(rng, n);
      std::vector<std::uint64_t> b = random_words(rng, n);

      CHECK(ref.popcount(a.data(), n) == other.popcount(a.data(), n));
      CHECK(ref.and_popcount(a.data(), b.data(), n) == other.and_popcount(a.data(), b.data(), n));

      std::vector<std::uint64_t> dst_ref = a;
      std::vector<std::uint64_t> dst_other = a;
      ref.xor_into(dst_ref.data(), b.data(), n);
      other.xor_into(dst_other.data(), b.data(), n);
      CHECK(dst_ref == dst_other);

      dst_ref = a;
      dst_other = a;
      std::uint64_t count_ref = ref.xor_into_popcount(dst_ref.data(), b.data(), n);
      std::uint64_t count_other = other.xor_into_popcount(dst_other.data(), b.data(), n);
      CHECK(count_ref == count_other);
      CHECK(dst_ref == dst_other);
    }
  }
}

}  // namespace

TEST_CASE("scalar kernels match plain definitions") {
  const Kernels& k = qrm::bitops::scalar_kernels();
  std::mt19937_64 rng(0x5ca1a4u);
  for (int rep = 0; rep < 20; ++rep) {
    std::vector<std::uint64_t> a = random_words(rng, 9);
    std::vector<std::uint64_t> b = random_words(rng, 9);

    std::uint64_t pop = 0;
    std::uint64_t and_pop = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      pop += static_cast<std::uint64_t>(std::popcount(a[i]));
      and_pop += static_cast<std::uint64_t>(std::popcount(a[i] & b[i]));
    }
    CHECK(k.popcount(a.data(), a.size()) == pop);
    CHECK(k.and_popcount(a.data(), b.data(), a.size()) == and_pop);

    std::vector<std::uint64_t> dst = a;
    std::uint64_t after = k.xor_into_popcount(dst.data(), b.data(), a.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(dst[i] == (a[i] ^ b[i]));
    CHECK(after == k.popcount(dst.data(), dst.size()));

    // XORing the same operand twice restores the original buffer.
    k.xor_into(dst.data(), b.data(), dst.size());
    k.xor_into(dst.data(), b.data(), dst.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(dst[i] == (a[i] ^ b[i]));
  }
}

TEST_CASE("avx2 kernels agree with scalar kernels") {
  const Kernels* avx2 = qrm::bitops::avx2_kernels();
  if (avx2 == nullptr) {
    MESSAGE("AVX2 not available on this machine; nothing to compare");
    return;
  }
  CHECK(std::string_view(avx2->name) == "avx2");
  check_equivalence(qrm::bitops::scalar_kernels(), *avx2);
}

TEST_CASE("active kernels agree with scalar kernels") {
  check_equivalence(qrm::bitops::scalar_kernels(), qrm::bitops::active_kernels());
}

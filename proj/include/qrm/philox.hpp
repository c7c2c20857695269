#pragma once

#include <array>
#include <cstdint>

// Philox4x64 with 10 rounds, the counter-based generator of Salmon et al.
// as shipped in Random123 and numpy. Any (counter, key) block is computable
// independently, which makes Monte Carlo trials reproducible under a
// documented addressing scheme and verifiable against reference outputs.

namespace qrm {

struct Philox4x64 {
  static constexpr const char* kAlgorithm = "philox4x64-10";
  static constexpr int kRounds = 10;

  using Counter = std::array<std::uint64_t, 4>;
  using Key = std::array<std::uint64_t, 2>;

  static constexpr std::uint64_t kMult0 = 0xD2E7470EE14C6C93ull;
  static constexpr std::uint64_t kMult1 = 0xCA5A826395121157ull;
  static constexpr std::uint64_t kWeyl0 = 0x9E3779B97F4A7C15ull;
  static constexpr std::uint64_t kWeyl1 = 0xBB67AE8584CAA73Bull;

  static Counter block(Counter ctr, Key key) {
    for (int round = 0; round < kRounds; ++round) {
      if (round > 0) {
        key[0] += kWeyl0;
        key[1] += kWeyl1;
      }
      unsigned __int128 prod0 = static_cast<unsigned __int128>(kMult0) * ctr[0];
      unsigned __int128 prod1 = static_cast<unsigned __int128>(kMult1) * ctr[2];
      std::uint64_t hi0 = static_cast<std::uint64_t>(prod0 >> 64);
      std::uint64_t lo0 = static_cast<std::uint64_t>(prod0);
      std::uint64_t hi1 = static_cast<std::uint64_t>(prod1 >> 64);
      std::uint64_t lo1 = static_cast<std::uint64_t>(prod1);
      ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
    }
    return ctr;
  }
};

}  // namespace qrm

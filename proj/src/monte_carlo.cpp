#include "qrm/monte_carlo.hpp"

#include <cmath>

#include "qrm/errors.hpp"
#include "qrm/philox.hpp"

namespace qrm {

McResult monte_carlo_block_error(long n, long t, double p, long trials, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("probability must lie in [0, 1]");
  if (n < 1) throw DomainError("block length must be positive");
  if (t < 0 || t >= n) throw DomainError("threshold t must lie in [0, n)");
  if (trials < 1) throw DomainError("need at least one trial");

  // A uniform 64-bit draw u flips the bit when u < floor(p * 2^64). The
  // long double product is exact for every double p, so the acceptance
  // probability is within 2^-64 of p.
  bool always = p >= 1.0;
  std::uint64_t threshold =
      always ? 0 : static_cast<std::uint64_t>(static_cast<long double>(p) * 18446744073709551616.0L);

  Philox4x64::Key key = {seed, 0};
  long failures = 0;
  for (long trial = 0; trial < trials; ++trial) {
    long flips = 0;
    for (long j = 0; j < n && flips <= t; j += 4) {
      Philox4x64::Counter out = Philox4x64::block(
          {static_cast<std::uint64_t>(j / 4), static_cast<std::uint64_t>(trial), 0, 0}, key);
      long lanes = n - j < 4 ? n - j : 4;
      for (long lane = 0; lane < lanes; ++lane)
        flips += always || out[static_cast<std::size_t>(lane)] < threshold;
    }
    failures += flips > t;
  }

  McResult result;
  result.estimate = static_cast<double>(failures) / static_cast<double>(trials);
  result.std_error = std::sqrt(result.estimate * (1.0 - result.estimate) /
                               static_cast<double>(trials));
  result.trials = trials;
  result.seed = seed;
  result.algorithm = Philox4x64::kAlgorithm;
  return result;
}

}  // namespace qrm

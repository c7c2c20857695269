#pragma once

#include <cstdint>

namespace qrm {

struct McResult {
  double estimate = 0;
  double std_error = 0;
  long trials = 0;
  std::uint64_t seed = 0;
  const char* algorithm = nullptr;
};

// Estimates the block error rate of a t-error-correcting length-n code under
// independent bit flips of probability p: the fraction of trials in which
// more than t flips occur. Deterministic for a given seed: flip j of trial T
// reads lane j%4 of the Philox4x64-10 block with counter {j/4, T, 0, 0} and
// key {seed, 0}, so results do not depend on scheduling or early exits.
// std_error is sqrt(est (1-est) / trials).
McResult monte_carlo_block_error(long n, long t, double p, long trials, std::uint64_t seed);

}  // namespace qrm

#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "qrm/linear_code.hpp"

namespace qrm {

using BigInt = boost::multiprecision::cpp_int;

// Weight distribution A_0..A_n of an [n, k] code: A_j counts codewords of
// Hamming weight j. Coefficients are exact integers; their sum is 2^k.
struct WeightEnumerator {
  long n = 0;
  std::vector<BigInt> coeff;

  bool operator==(const WeightEnumerator& other) const = default;
};

// Exhaustive distribution via Gray-code enumeration. Throws CapExceeded when
// k exceeds the log2 cap.
WeightEnumerator weight_enumerator(const LinearCode& code, int cap_log2 = kDefaultEnumCapLog2);

// Dual distribution: A'_j = 2^-k * sum_i A_i K_j(i) with the binary
// Krawtchouk kernel K_j(i) = sum_s (-1)^s C(i,s) C(n-i,j-s). All arithmetic
// is exact; a division that does not come out integral, or a negative
// coefficient, means the input was not a genuine weight distribution and
// raises NonIntegerResult.
WeightEnumerator macwilliams_transform(const WeightEnumerator& w, int k);

}  // namespace qrm

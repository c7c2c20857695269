#pragma once

#include <string>
#include <vector>

#include "qrm/css.hpp"
#include "qrm/linear_code.hpp"

// Structural self-checks over the code families: duality, nesting, minimum
// distances, the squaring construction, dual partitions, MacWilliams
// identities and encoded-state algebra. Checks that would breach an
// enumeration cap are reported as skipped, not silently dropped.

namespace qrm {

enum class CheckStatus { kPass, kFail, kSkip };

struct CheckResult {
  CheckStatus status = CheckStatus::kPass;
  std::string name;
  std::string detail;
};

struct VerifyOptions {
  int max_m = 6;
  int enum_cap_log2 = kDefaultEnumCapLog2;
  int leader_cap_log2 = kDefaultLeaderCapLog2;
};

std::vector<CheckResult> run_verification(const VerifyOptions& opts);

}  // namespace qrm

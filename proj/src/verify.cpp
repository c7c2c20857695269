#include "qrm/verify.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "qrm/philox.hpp"
#include "qrm/reed_muller.hpp"
#include "qrm/weight_enumerator.hpp"

namespace qrm {

namespace {

std::string rm_name(int r, int m) {
  return "r=" + std::to_string(r) + " m=" + std::to_string(m);
}

// Runs body and turns any library error into a FAIL with the message.
template <typename Body>
void run_check(std::vector<CheckResult>& out, const std::string& name, Body body) {
  try {
    body(out);
  } catch (const Error& e) {
    out.push_back({CheckStatus::kFail, name, e.what()});
  }
}

void check_duality(std::vector<CheckResult>& out, int m) {
  std::string name = "duality m=" + std::to_string(m);
  run_check(out, name, [&](std::vector<CheckResult>& res) {
    for (int r = 0; r <= m; ++r) {
      RmSpec dual = rm_dual_spec({r, m});
      if (rm_dimension(r, m) + rm_dimension(dual.r, m) != rm_block_length(m)) {
        res.push_back({CheckStatus::kFail, name, "dimension sum off at " + rm_name(r, m)});
        return;
      }
      if (!rows_orthogonal(rm_generator({r, m}), rm_generator(dual))) {
        res.push_back({CheckStatus::kFail, name, "generators not orthogonal at " + rm_name(r, m)});
        return;
      }
    }
    res.push_back({CheckStatus::kPass, name, "orders 0.." + std::to_string(m)});
  });
}

void check_nesting_chain(std::vector<CheckResult>& out, int m) {
  std::string name = "nesting m=" + std::to_string(m);
  run_check(out, name, [&](std::vector<CheckResult>& res) {
    for (int r = 0; r < m; ++r) {
      if (!check_nesting({r, m}, {r + 1, m}) || rm_dimension(r, m) >= rm_dimension(r + 1, m)) {
        res.push_back({CheckStatus::kFail, name, "chain breaks at " + rm_name(r, m)});
        return;
      }
    }
    res.push_back({CheckStatus::kPass, name, "chain of length " + std::to_string(m + 1)});
  });
}

void check_distance(std::vector<CheckResult>& out, int r, int m, int cap) {
  std::string name = "distance " + rm_name(r, m);
  long k = rm_dimension(r, m);
  if (k > cap) {
    out.push_back({CheckStatus::kSkip, name,
                   "k=" + std::to_string(k) + " over enumeration cap " + std::to_string(cap)});
    return;
  }
  run_check(out, name, [&](std::vector<CheckResult>& res) {
    long expect = rm_distance(r, m);
    long found = min_weight_bruteforce(rm_code({r, m}), cap);
    if (found == expect)
      res.push_back({CheckStatus::kPass, name, "min weight " + std::to_string(found)});
    else
      res.push_back({CheckStatus::kFail, name,
                     "min weight " + std::to_string(found) + ", expected " + std::to_string(expect)});
  });
}

void check_squaring(std::vector<CheckResult>& out, int r, int m) {
  std::string name = "squaring " + rm_name(r, m);
  run_check(out, name, [&](std::vector<CheckResult>& res) {
    LinearCode squared = squaring_construct(rm_partition({r, m}));
    LinearCode direct = rm_code({r, m + 1});
    if (same_row_space(squared.generator(), direct.generator()))
      res.push_back({CheckStatus::kPass, name, "matches the order-" + std::to_string(r) +
                                                   " code of length " + std::to_string(2 * rm_block_length(m))});
    else
      res.push_back({CheckStatus::kFail, name, "row space differs from the direct construction"});
  });
}

void check_dual_partition(std::vector<CheckResult>& out, int r, int m) {
  std::string name = "dual-partition " + rm_name(r, m);
  run_check(out, name, [&](std::vector<CheckResult>& res) {
    if (check_dual_partition_orthogonality(r, m))
      res.push_back({CheckStatus::kPass, name, "squared pair orthogonal"});
    else
      res.push_back({CheckStatus::kFail, name, "squared pair not orthogonal"});
  });
}

void check_macwilliams(std::vector<CheckResult>& out, int r, int m, int cap) {
  std::string name = "macwilliams " + rm_name(r, m);
  RmSpec dual = rm_dual_spec({r, m});
  long k = rm_dimension(r, m);
  long k_dual = rm_dimension(dual.r, m);
  if (k > cap || k_dual > cap) {
    out.push_back({CheckStatus::kSkip, name,
                   "dimensions " + std::to_string(k) + "/" + std::to_string(k_dual) +
                       " over enumeration cap " + std::to_string(cap)});
    return;
  }
  run_check(out, name, [&](std::vector<CheckResult>& res) {
    WeightEnumerator primal = weight_enumerator(rm_code({r, m}), cap);
    WeightEnumerator expect = weight_enumerator(rm_code(dual), cap);
    if (macwilliams_transform(primal, static_cast<int>(k)) == expect)
      res.push_back({CheckStatus::kPass, name, "transform matches the dual distribution"});
    else
      res.push_back({CheckStatus::kFail, name, "transform disagrees with the dual distribution"});
  });
}

void check_states(std::vector<CheckResult>& out, int r, int m, const VerifyOptions& opts) {
  std::string name = "states " + rm_name(r, m);
  run_check(out, name, [&](std::vector<CheckResult>& res) {
    CssCode code = css_from_rm(r, m);
    if (code.k > opts.leader_cap_log2 || code.n - code.k1 > opts.enum_cap_log2 ||
        code.k1 > opts.enum_cap_log2) {
      res.push_back({CheckStatus::kSkip, name, "caps too low for state enumeration"});
      return;
    }
    std::vector<BitVec> leaders = coset_leaders(code, opts.leader_cap_log2, opts.enum_cap_log2);
    if (leaders.size() != std::size_t{1} << code.k) {
      res.push_back({CheckStatus::kFail, name, "leader count is not 2^k"});
      return;
    }
    if (!leaders.front().is_zero()) {
      res.push_back({CheckStatus::kFail, name, "zero coset leader is not the zero word"});
      return;
    }
    // Basis-2 supports must tile C1: right sizes, no overlap.
    std::set<std::string> seen;
    for (const BitVec& w : leaders) {
      SparseState state = encode_basis2(code, w, opts.enum_cap_log2);
      if (state.terms.size() != std::size_t{1} << (code.n - code.k1)) {
        res.push_back({CheckStatus::kFail, name, "basis-2 support has the wrong size"});
        return;
      }
      for (const StateTerm& term : state.terms)
        if (!seen.insert(term.v.to_string()).second) {
          res.push_back({CheckStatus::kFail, name, "basis-2 supports overlap"});
          return;
        }
    }
    if (seen.size() != std::size_t{1} << code.k1) {
      res.push_back({CheckStatus::kFail, name, "basis-2 supports do not cover C1"});
      return;
    }
    if (code.k > 6) {
      res.push_back({CheckStatus::kPass, name, "partition checks only (k too large for sign scans)"});
      return;
    }
    // Basis-1 states of distinct leaders are sign-orthogonal.
    std::vector<SparseState> basis1;
    for (const BitVec& w : leaders) basis1.push_back(encode_basis1(code, w, opts.enum_cap_log2));
    for (std::size_t i = 0; i < basis1.size(); ++i) {
      for (std::size_t j = i + 1; j < basis1.size(); ++j) {
        long long ip = 0;
        for (std::size_t idx = 0; idx < basis1[i].terms.size(); ++idx)
          ip += basis1[i].terms[idx].sign * basis1[j].terms[idx].sign;
        if (ip != 0) {
          res.push_back({CheckStatus::kFail, name, "basis-1 states are not orthogonal"});
          return;
        }
      }
    }
    // Hadamard relation: probing a basis-1 state at u gives |C1| exactly
    // when u lies on the matching basis-2 support (u + w in C2) and 0 off
    // it, sampled here at 20 random off-support strings per leader.
    LinearCode c2 = rm_code(rm_dual_spec(code.c1));
    long long magnitude = 1LL << code.k1;
    std::uint64_t probe_counter = 0;
    for (std::size_t li = 0; li < leaders.size(); ++li) {
      SparseState state2 = encode_basis2(code, leaders[li], opts.enum_cap_log2);
      for (const StateTerm& term : state2.terms) {
        if (hadamard_amplitude(basis1[li], term.v) != magnitude) {
          res.push_back({CheckStatus::kFail, name, "on-support amplitude mismatch"});
          return;
        }
      }
      for (int probe = 0; probe < 20;) {
        Philox4x64::Counter draw = Philox4x64::block({probe_counter++, 0, 0, 0}, {0x5eedu, 1});
        BitVec u(code.n);
        for (long c = 0; c < code.n; ++c)
          u.set(c, (draw[static_cast<std::size_t>(c / 64)] >> (c % 64)) & 1);
        BitVec diff = u ^ leaders[li];
        if (c2.contains(diff)) continue;
        ++probe;
        if (hadamard_amplitude(basis1[li], u) != 0) {
          res.push_back({CheckStatus::kFail, name, "off-support amplitude is nonzero"});
          return;
        }
      }
    }
    res.push_back({CheckStatus::kPass, name,
                   std::to_string(leaders.size()) + " leaders, signs and amplitudes verified"});
  });
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& opts) {
  if (opts.max_m < 2) throw DomainError("verification needs max_m >= 2");
  std::vector<CheckResult> out;
  for (int m = 2; m <= opts.max_m; ++m) check_duality(out, m);
  for (int m = 2; m <= opts.max_m; ++m) check_nesting_chain(out, m);
  for (int m = 2; m <= opts.max_m; ++m)
    for (int r = 0; r <= m; ++r) check_distance(out, r, m, opts.enum_cap_log2);
  int squaring_max = std::min(opts.max_m, 6);
  for (int m = 1; m <= squaring_max; ++m)
    for (int r = 0; r <= m; ++r) check_squaring(out, r, m);
  for (int m = 1; m <= squaring_max; ++m)
    for (int r = 0; r <= m; ++r) check_dual_partition(out, r, m);
  for (int m = 2; m <= std::min(opts.max_m, 6); ++m)
    for (int r = 0; 2 * r <= m - 1; ++r) check_macwilliams(out, r, m, opts.enum_cap_log2);
  for (int m = 2; m <= std::min(opts.max_m, 4); ++m)
    for (int r = (m - 1 + 1) / 2; r < m; ++r) check_states(out, r, m, opts);
  return out;
}

}  // namespace qrm

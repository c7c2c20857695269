#include "qrm/css.hpp"

#include <algorithm>
#include <bit>
#include <json.hpp>
#include <utility>

#include "qrm/bitops.hpp"

namespace qrm {

CssCode css_from_rm(int r, int m) {
  RmSpec c1{r, m};
  RmSpec c2 = rm_dual_spec(c1);  // validates the pair
  if (c2.r > c1.r)
    throw NotSelfDualNested("RM(" + std::to_string(r) + "," + std::to_string(m) +
                            ") needs m - r - 1 <= r to contain its dual");
  if (!check_nesting(c2, c1))
    throw NotSelfDualNested("dual code failed the containment check");
  CssCode code;
  code.c1 = c1;
  code.n = rm_block_length(m);
  code.k1 = rm_dimension(r, m);
  code.k = 2 * code.k1 - code.n;
  code.d = rm_distance(r, m);
  code.t = (code.d - 1) / 2;
  return code;
}

namespace {

// Rows of C1's generator that are independent modulo C1^perp; their spans
// pick exactly one representative per coset.
std::vector<BitVec> coset_directions(const LinearCode& c1, const LinearCode& c2) {
  struct Reduced {
    long pivot;
    BitVec row;
  };
  std::vector<Reduced> elim;
  for (int r = 0; r < c2.reduced().rank; ++r)
    elim.push_back({c2.reduced().pivot_cols[static_cast<std::size_t>(r)],
                    c2.reduced().rref.row_vec(r)});
  std::vector<BitVec> directions;
  for (int r = 0; r < c1.k(); ++r) {
    BitVec work = c1.generator().row_vec(r);
    for (const Reduced& e : elim)
      if (work.get(e.pivot)) work ^= e.row;
    if (work.is_zero()) continue;
    directions.push_back(c1.generator().row_vec(r));
    long pivot = 0;
    while (!work.get(pivot)) ++pivot;
    elim.push_back({pivot, std::move(work)});
  }
  return directions;
}

}  // namespace

std::vector<BitVec> coset_leaders(const CssCode& code, int leader_cap_log2, int enum_cap_log2) {
  if (code.k > leader_cap_log2)
    throw CapExceeded("coset enumeration needs 2^" + std::to_string(code.k) +
                      " cosets, cap is 2^" + std::to_string(leader_cap_log2));
  LinearCode c1 = rm_code(code.c1);
  LinearCode c2 = rm_code(rm_dual_spec(code.c1));
  if (c2.k() > enum_cap_log2)
    throw CapExceeded("coset scan needs 2^" + std::to_string(c2.k()) +
                      " codewords per coset, cap is 2^" + std::to_string(enum_cap_log2));

  std::vector<BitVec> directions = coset_directions(c1, c2);

  std::vector<BitVec> leaders;
  leaders.reserve(std::size_t{1} << code.k);
  std::uint64_t combos = std::uint64_t{1} << directions.size();
  for (std::uint64_t bits = 0; bits < combos; ++bits) {
    BitVec rep(code.n);
    for (std::size_t i = 0; i < directions.size(); ++i)
      if ((bits >> i) & 1u) rep ^= directions[i];
    // Scan the coset rep + C1^perp for its minimum-weight word, breaking
    // weight ties toward the lexicographically smaller string.
    BitVec best = rep;
    long best_weight = best.weight();
    CodewordStream stream(c2, enum_cap_log2);
    while (stream.advance()) {
      BitVec cand = rep;
      cand ^= stream.current_vec();
      long w = cand.weight();
      if (w < best_weight || (w == best_weight && cand.lex_less(best))) {
        best = std::move(cand);
        best_weight = w;
      }
    }
    leaders.push_back(std::move(best));
  }
  std::sort(leaders.begin(), leaders.end(),
            [](const BitVec& a, const BitVec& b) { return a.lex_less(b); });
  return leaders;
}

namespace {

SparseState encode_common(const CssCode& code, const BitVec& w, int enum_cap_log2, int basis) {
  if (w.size() != code.n)
    throw DomainError("codeword label has length " + std::to_string(w.size()) + ", expected " +
                      std::to_string(code.n));
  LinearCode c1 = rm_code(code.c1);
  if (!c1.contains(w)) throw NotInCodespace("label word is not a codeword of C1");

  SparseState state;
  state.n = code.n;
  state.basis = basis;
  state.w = w;
  if (basis == 1) {
    CodewordStream stream(c1, enum_cap_log2);
    state.terms.reserve(static_cast<std::size_t>(stream.total()));
    do {
      const BitVec& v = stream.current_vec();
      state.terms.push_back({v, v.dot(w) ? -1 : 1});
    } while (stream.advance());
  } else {
    LinearCode c2 = rm_code(rm_dual_spec(code.c1));
    CodewordStream stream(c2, enum_cap_log2);
    state.terms.reserve(static_cast<std::size_t>(stream.total()));
    do {
      BitVec v = stream.current_vec();
      v ^= w;
      state.terms.push_back({std::move(v), 1});
    } while (stream.advance());
  }
  std::sort(state.terms.begin(), state.terms.end(),
            [](const StateTerm& a, const StateTerm& b) { return a.v.lex_less(b.v); });
  return state;
}

}  // namespace

SparseState encode_basis1(const CssCode& code, const BitVec& w, int enum_cap_log2) {
  return encode_common(code, w, enum_cap_log2, 1);
}

SparseState encode_basis2(const CssCode& code, const BitVec& w, int enum_cap_log2) {
  return encode_common(code, w, enum_cap_log2, 2);
}

long long hadamard_amplitude(const SparseState& state, const BitVec& u) {
  if (u.size() != state.n) throw MismatchedLength("amplitude probe has the wrong length");
  long long sum = 0;
  for (const StateTerm& term : state.terms)
    sum += term.v.dot(u) ? -term.sign : term.sign;
  return sum;
}

std::string state_to_json(const CssCode& code, const SparseState& state) {
  nlohmann::ordered_json j;
  j["n"] = state.n;
  j["k"] = code.k;
  j["basis"] = state.basis;
  j["w"] = state.w.to_string();
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const StateTerm& term : state.terms)
    terms.push_back(nlohmann::ordered_json{{"v", term.v.to_string()}, {"sign", term.sign}});
  j["terms"] = std::move(terms);
  return j.dump();
}

}  // namespace qrm

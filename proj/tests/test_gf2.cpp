#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "qrm/bit_matrix.hpp"
#include "qrm/linear_code.hpp"
#include "qrm/weight_enumerator.hpp"

using namespace qrm;

namespace {

BitMatrix random_matrix(std::mt19937_64& rng, int rows, long cols) {
  BitMatrix m(rows, cols);
  std::bernoulli_distribution bit(0.5);
  for (int r = 0; r < rows; ++r)
    for (long c = 0; c < cols; ++c) m.set(r, c, bit(rng));
  return m;
}

}  // namespace

TEST_CASE("bit vector round-trips strings and tracks weight") {
  BitVec v = BitVec::from_string("0110100000000000000000000000000000000000000000000000000000000000001");
  CHECK(v.size() == 67);
  CHECK(v.weight() == 4);
  CHECK(v.get(1));
  CHECK(v.get(66));
  CHECK_FALSE(v.get(0));
  CHECK(v.to_string() ==
        "0110100000000000000000000000000000000000000000000000000000000000001");
  CHECK_THROWS_AS(BitVec::from_string("01x"), DomainError);
}

TEST_CASE("bit vector xor, dot and lexicographic order") {
  BitVec a = BitVec::from_string("0011");
  BitVec b = BitVec::from_string("0101");
  CHECK((a ^ b).to_string() == "0110");
  CHECK(a.dot(b) == true);   // overlap at one column
  CHECK(a.dot(a) == false);  // even weight
  CHECK(a.lex_less(b));
  CHECK_FALSE(b.lex_less(a));
  CHECK_FALSE(a.lex_less(a));
  // Order must match plain string comparison on every pair.
  std::vector<std::string> strings;
  for (int i = 0; i < 32; ++i) {
    std::string s(5, '0');
    for (int c = 0; c < 5; ++c) s[static_cast<std::size_t>(c)] = (i >> c) & 1 ? '1' : '0';
    strings.push_back(s);
  }
  for (const std::string& x : strings)
    for (const std::string& y : strings)
      CHECK(BitVec::from_string(x).lex_less(BitVec::from_string(y)) == (x < y));
  CHECK_THROWS_AS(a.dot(BitVec::from_string("01")), MismatchedLength);
}

TEST_CASE("matrix text form round-trips") {
  std::string text = "1111\n0011\n0101\n";
  BitMatrix m = BitMatrix::from_text(text);
  CHECK(m.rows() == 3);
  CHECK(m.cols() == 4);
  CHECK(m.to_text() == text);
  CHECK_THROWS_AS(BitMatrix::from_text("11\n111\n"), MismatchedLength);
  CHECK_THROWS_AS(BitMatrix::from_text(""), DomainError);
}

TEST_CASE("rref finds rank and pivots") {
  BitMatrix m = BitMatrix::from_text("1111\n0011\n1100\n");  // row 2 = row 0 + row 1
  RrefResult red = rank_and_rref(m);
  CHECK(red.rank == 2);
  CHECK(red.pivot_cols == std::vector<long>{0, 2});
  // Row space is preserved and the bottom row is zero.
  CHECK(in_row_space(red, BitVec::from_string("1100")));
  CHECK(red.rref.row_vec(2).is_zero());
  CHECK(same_row_space(m, red.rref));
}

TEST_CASE("nullspace is the orthogonal complement") {
  std::mt19937_64 rng(0x90f2u);
  for (int trial = 0; trial < 40; ++trial) {
    int rows = 1 + static_cast<int>(rng() % 12);
    long cols = 2 + static_cast<long>(rng() % 70);
    BitMatrix m = random_matrix(rng, rows, cols);
    RrefResult red = rank_and_rref(m);
    BitMatrix ns = nullspace_generator(m);
    CHECK(ns.rows() == cols - red.rank);
    CHECK(rows_orthogonal(m, ns));
    CHECK(rank_and_rref(ns).rank == ns.rows());
    // Double complement returns the original row space.
    BitMatrix back = nullspace_generator(ns);
    CHECK(same_row_space(m, back));
  }
}

TEST_CASE("generator must have independent rows") {
  CHECK_THROWS_AS(LinearCode::from_generator(BitMatrix::from_text("1111\n0011\n1100\n")),
                  DomainError);
  LinearCode code = LinearCode::from_generator(BitMatrix::from_text("1111\n0011\n"));
  CHECK(code.n() == 4);
  CHECK(code.k() == 2);
  CHECK(code.contains(BitVec::from_string("1100")));
  CHECK_FALSE(code.contains(BitVec::from_string("1000")));
}

TEST_CASE("codeword stream yields each codeword once, zero first") {
  LinearCode code =
      LinearCode::from_generator(BitMatrix::from_text("1111\n0011\n0101\n"));
  CodewordStream stream(code);
  // Gray-code walk over messages: step i flips generator row ctz(i).
  std::vector<std::string> expected = {"0000", "1111", "1100", "0011",
                                       "0110", "1001", "1010", "0101"};
  std::vector<std::string> got;
  do {
    got.push_back(stream.current_vec().to_string());
  } while (stream.advance());
  CHECK(got == expected);
  CHECK_FALSE(stream.advance());
}

TEST_CASE("stream visits exactly the row space") {
  std::mt19937_64 rng(0xdeadu);
  for (int trial = 0; trial < 12; ++trial) {
    long cols = 5 + static_cast<long>(rng() % 60);
    BitMatrix m = random_matrix(rng, 1 + static_cast<int>(rng() % 9), cols);
    RrefResult red = rank_and_rref(m);
    BitMatrix basis(0, cols);
    for (int r = 0; r < red.rank; ++r) basis.append_row(red.rref.row_vec(r));
    LinearCode code = LinearCode::from_generator(basis);

    std::set<std::string> seen;
    CodewordStream stream(code);
    do {
      CHECK(in_row_space(red, stream.current_vec()));
      seen.insert(stream.current_vec().to_string());
    } while (stream.advance());
    CHECK(seen.size() == (std::size_t{1} << code.k()));
  }
}

TEST_CASE("enumeration cap guards the stream") {
  LinearCode code = LinearCode::from_generator(BitMatrix::from_text("1111\n0011\n0101\n"));
  CHECK_THROWS_AS(CodewordStream(code, 2), CapExceeded);
  CHECK_THROWS_AS(min_weight_bruteforce(code, 2), CapExceeded);
  CHECK_THROWS_AS(weight_enumerator(code, 2), CapExceeded);
  CHECK_THROWS_AS(min_weight_bruteforce(LinearCode::zero_code(4)), EmptyCode);
}

TEST_CASE("minimum weight by enumeration") {
  CHECK(min_weight_bruteforce(LinearCode::from_generator(BitMatrix::from_text("1111\n"))) == 4);
  CHECK(min_weight_bruteforce(
            LinearCode::from_generator(BitMatrix::from_text("1111\n0011\n0101\n"))) == 2);
  // A code wider than one word exercises the kernel path.
  std::mt19937_64 rng(7u);
  BitMatrix wide = random_matrix(rng, 10, 130);
  RrefResult red = rank_and_rref(wide);
  BitMatrix basis(0, 130);
  for (int r = 0; r < red.rank; ++r) basis.append_row(red.rref.row_vec(r));
  LinearCode code = LinearCode::from_generator(basis);
  long best = code.n();
  CodewordStream stream(code);
  while (stream.advance()) best = std::min(best, stream.current_vec().weight());
  CHECK(min_weight_bruteforce(code) == best);
}

TEST_CASE("weight enumerator counts and sums to the code size") {
  LinearCode code = LinearCode::from_generator(BitMatrix::from_text("1111\n0011\n0101\n"));
  WeightEnumerator w = weight_enumerator(code);
  CHECK(w.n == 4);
  CHECK(w.coeff == std::vector<BigInt>{1, 0, 6, 0, 1});
  BigInt total = 0;
  for (const BigInt& c : w.coeff) total += c;
  CHECK(total == 8);
}

TEST_CASE("macwilliams transform on a known pair") {
  // Even-weight [4,3] against the repetition [4,1].
  WeightEnumerator even{4, {1, 0, 6, 0, 1}};
  WeightEnumerator dual = macwilliams_transform(even, 3);
  CHECK(dual.coeff == std::vector<BigInt>{1, 0, 0, 0, 1});
  // And back.
  WeightEnumerator back = macwilliams_transform(dual, 1);
  CHECK(back.coeff == even.coeff);
}

TEST_CASE("macwilliams transform matches dual enumeration on random codes") {
  std::mt19937_64 rng(0xfeedu);
  for (int trial = 0; trial < 25; ++trial) {
    long cols = 4 + static_cast<long>(rng() % 12);
    BitMatrix m = random_matrix(rng, 1 + static_cast<int>(rng() % 7), cols);
    RrefResult red = rank_and_rref(m);
    if (red.rank == 0 || red.rank == cols) continue;
    BitMatrix basis(0, cols);
    for (int r = 0; r < red.rank; ++r) basis.append_row(red.rref.row_vec(r));
    LinearCode code = LinearCode::from_generator(basis);
    LinearCode dual = dual_code(code);
    CHECK(macwilliams_transform(weight_enumerator(code), code.k()) == weight_enumerator(dual));
    CHECK(macwilliams_transform(weight_enumerator(dual), dual.k()) == weight_enumerator(code));
  }
}

TEST_CASE("macwilliams transform rejects corrupted distributions") {
  // Sum 7 is not a power of two: division by 2^3 cannot come out integral.
  WeightEnumerator bad{4, {1, 0, 5, 0, 1}};
  CHECK_THROWS_AS(macwilliams_transform(bad, 3), NonIntegerResult);
  WeightEnumerator short_list{4, {1, 0, 6, 0}};
  CHECK_THROWS_AS(macwilliams_transform(short_list, 3), DomainError);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>
#include <string>
#include <vector>

#include "qrm/reed_muller.hpp"
#include "qrm/tables.hpp"

using namespace qrm;

TEST_CASE("dimension, length and distance formulas") {
  CHECK(rm_block_length(0) == 1);
  CHECK(rm_block_length(10) == 1024);
  CHECK(rm_dimension(-1, 5) == 0);
  CHECK(rm_dimension(0, 5) == 1);
  CHECK(rm_dimension(1, 5) == 6);
  CHECK(rm_dimension(2, 5) == 16);
  CHECK(rm_dimension(5, 5) == 32);
  CHECK(rm_dimension(5, 10) == 638);
  CHECK(rm_distance(5, 10) == 32);
  CHECK(rm_distance(0, 3) == 8);
  CHECK_THROWS_AS(rm_dimension(4, 3), InvalidOrder);
  CHECK_THROWS_AS(rm_dimension(-2, 3), InvalidOrder);
  CHECK_THROWS_AS(rm_distance(-1, 3), InvalidOrder);
  CHECK_THROWS_AS(rm_generator({1, -1}), InvalidOrder);
}

TEST_CASE("generator layout for small orders") {
  CHECK(rm_generator({1, 2}).to_text() == "1111\n0011\n0101\n");
  CHECK(rm_generator({2, 2}).to_text() == "1111\n0011\n0101\n0001\n");
  CHECK(rm_generator({-1, 2}).rows() == 0);
  CHECK(rm_generator({-1, 2}).cols() == 4);
  // m = 3: coordinate rows then the three pair products in lex order of
  // index sets {0,1}, {0,2}, {1,2}.
  CHECK(rm_generator({2, 3}).to_text() ==
        "11111111\n"
        "00001111\n"
        "00110011\n"
        "01010101\n"
        "00000011\n"
        "00000101\n"
        "00010001\n");
}

TEST_CASE("rm codes carry their parameters") {
  LinearCode code = rm_code({2, 5});
  CHECK(code.n() == 32);
  CHECK(code.k() == 16);
  CHECK(code.distance() == 8);
  CHECK(min_weight_bruteforce(code) == 8);
  LinearCode zero = rm_code({-1, 3});
  CHECK(zero.k() == 0);
  CHECK(zero.n() == 8);
}

TEST_CASE("distance matches the formula wherever enumeration is feasible") {
  for (int m = 1; m <= 6; ++m)
    for (int r = 0; r <= m; ++r) {
      if (rm_dimension(r, m) > 22) continue;
      CAPTURE(r);
      CAPTURE(m);
      CHECK(min_weight_bruteforce(rm_code({r, m})) == rm_distance(r, m));
    }
  CHECK(min_weight_bruteforce(rm_code({1, 10})) == 512);
}

TEST_CASE("duality pairs the family across orders") {
  CHECK(rm_dual_spec({1, 4}) == RmSpec{2, 4});
  CHECK(rm_dual_spec({3, 4}) == RmSpec{0, 4});
  CHECK(rm_dual_spec({4, 4}) == RmSpec{-1, 4});
  for (int m = 2; m <= 7; ++m)
    for (int r = 0; r <= m; ++r) {
      RmSpec dual = rm_dual_spec({r, m});
      CHECK(rm_dimension(r, m) + rm_dimension(dual.r, m) == rm_block_length(m));
      CHECK(rows_orthogonal(rm_generator({r, m}), rm_generator(dual)));
    }
  // The nullspace construction lands on the very same code.
  for (int m = 2; m <= 5; ++m)
    for (int r = 0; r < m; ++r) {
      RmSpec dual = rm_dual_spec({r, m});
      CHECK(same_row_space(nullspace_generator(rm_generator({r, m})), rm_generator(dual)));
    }
}

TEST_CASE("nesting follows the order relation") {
  for (int m = 2; m <= 8; ++m)
    for (int inner = -1; inner <= m; ++inner)
      for (int outer = 0; outer <= m; ++outer) {
        CAPTURE(m);
        CAPTURE(inner);
        CAPTURE(outer);
        CHECK(check_nesting({inner, m}, {outer, m}) == (inner <= outer));
      }
  CHECK_THROWS_AS(check_nesting({1, 3}, {1, 4}), MismatchedLength);
}

TEST_CASE("partition splits the generator at the top block") {
  Partition p = rm_partition({2, 4});
  CHECK(p.parent.k() == 11);
  CHECK(p.child.k() == 5);
  CHECK(p.transversal.rows() == 6);  // C(4,2) degree-2 products
  CHECK(p.parent.contains_rows(p.transversal));
  CHECK_FALSE(p.child.contains(p.transversal.row_vec(0)));
  Partition base = rm_partition({0, 3});
  CHECK(base.child.k() == 0);
  CHECK(base.transversal.rows() == 1);
  CHECK_THROWS_AS(rm_partition({-1, 3}), InvalidOrder);
}

TEST_CASE("squaring a partition gives the next-length code") {
  for (int m = 1; m <= 5; ++m)
    for (int r = 0; r <= m; ++r) {
      CAPTURE(m);
      CAPTURE(r);
      LinearCode squared = squaring_construct(rm_partition({r, m}));
      LinearCode direct = rm_code({r, m + 1});
      CHECK(squared.n() == direct.n());
      CHECK(squared.k() == direct.k());
      CHECK(same_row_space(squared.generator(), direct.generator()));
      CHECK(squared.distance() == direct.distance());
    }
}

TEST_CASE("squaring output is the coset combination set") {
  // Every word of the squared code splits as (t1 + c, t2 + c) with halves in
  // the parent and difference in the child, and all such pairs occur.
  Partition p = rm_partition({1, 2});
  LinearCode squared = squaring_construct(p);
  std::set<std::string> words;
  CodewordStream stream(squared);
  do {
    words.insert(stream.current_vec().to_string());
  } while (stream.advance());

  std::set<std::string> expected;
  CodewordStream a(p.parent);
  do {
    CodewordStream b(p.parent);
    do {
      BitVec diff = a.current_vec() ^ b.current_vec();
      if (p.child.contains(diff))
        expected.insert(a.current_vec().to_string() + b.current_vec().to_string());
    } while (b.advance());
  } while (a.advance());
  CHECK(words == expected);
}

TEST_CASE("squaring rejects broken partitions") {
  Partition p = rm_partition({1, 3});
  // Child outside the parent.
  Partition bad1{rm_code({1, 3}), rm_code({2, 3}), p.transversal};
  CHECK_THROWS_AS(squaring_construct(bad1), InvalidPartition);
  // Transversal rows dependent modulo the child.
  BitMatrix doubled = p.transversal;
  doubled.append_row(p.transversal.row_vec(0));
  Partition bad2{p.parent, p.child, doubled};
  CHECK_THROWS_AS(squaring_construct(bad2), InvalidPartition);
  // Transversal too small to span the parent.
  BitMatrix short_t(0, 8);
  short_t.append_row(p.transversal.row_vec(0));
  Partition bad3{p.parent, p.child, short_t};
  CHECK_THROWS_AS(squaring_construct(bad3), InvalidPartition);
  // Mismatched lengths.
  Partition bad4{p.parent, rm_code({0, 2}), p.transversal};
  CHECK_THROWS_AS(squaring_construct(bad4), MismatchedLength);
}

TEST_CASE("dual partitions square to orthogonal codes") {
  for (int m = 1; m <= 5; ++m)
    for (int r = 0; r <= m; ++r) CHECK(check_dual_partition_orthogonality(r, m));
}

TEST_CASE("classical table reproduces the known grid") {
  std::vector<CodeTableRow> rows = classical_code_table(10);
  // 9 values of m, each with m + 1 orders.
  std::size_t expected_rows = 0;
  for (int m = 2; m <= 10; ++m) expected_rows += static_cast<std::size_t>(m) + 1;
  CHECK(rows.size() == expected_rows);
  auto find = [&](long n, long d) -> long {
    for (const CodeTableRow& row : rows)
      if (row.n == n && row.d == d) return row.k;
    return -1;
  };
  CHECK(find(4, 2) == 3);
  CHECK(find(4, 4) == 1);
  CHECK(find(256, 16) == 163);
  CHECK(find(1024, 2) == 1023);
  CHECK(find(1024, 32) == 638);
  CHECK(find(1024, 1024) == 1);
  // Ordered by m ascending, then d ascending.
  CHECK(rows.front() == CodeTableRow{2, 2, 4, 4, 1});
  CHECK(rows[1] == CodeTableRow{2, 1, 4, 3, 2});
  CHECK(rows.back() == CodeTableRow{10, 0, 1024, 1, 1024});
}

TEST_CASE("table rendering") {
  std::vector<CodeTableRow> rows = classical_code_table(2);
  CHECK(table_to_csv(rows) == "m,r,n,k,d\n2,2,4,4,1\n2,1,4,3,2\n2,0,4,1,4\n");
  std::string md = table_to_markdown(rows);
  CHECK(md == "| n \\ d | 2 | 4 |\n| --- | --- | --- |\n| 4 | 3 | 1 |\n");
  CHECK_THROWS_AS(classical_code_table(1), DomainError);
}

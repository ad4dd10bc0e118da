#include "doctest.h"
#include "oracles.hpp"
#include "yfuse/combinatorics.hpp"

using namespace yfuse;

TEST_CASE("conjugate") {
  CHECK(conjugate(Partition{1, 1, 1}) == Partition{3});
  CHECK(conjugate(Partition{5, 3, 3, 3, 3}).parts() == oracle::conjugate_by_counting({5, 3, 3, 3, 3}));
  CHECK(conjugate(Partition{5, 3, 3, 3, 3}) == Partition{5, 5, 5, 1, 1});
  CHECK(conjugate(Partition{}) == Partition{});
}

TEST_CASE("conjugate is an involution up to size 12") {
  for (int n = 0; n <= 12; ++n)
    for (const auto& p : partitions_of(n)) CHECK(conjugate(conjugate(p)) == p);
}

TEST_CASE("partition normalization and validation") {
  CHECK(Partition(std::vector<int>{2, 1, 0, 0}) == Partition{2, 1});
  CHECK_THROWS_AS(Partition(std::vector<int>{1, 2}), Error);
  CHECK(partitions_of(5).size() == 7);
}

TEST_CASE("skew_cells") {
  CHECK(skew_cells(SkewShape({5, 3, 3, 3, 3}, {3, 3, 2})).size() == 9);
  CHECK(skew_cells(SkewShape({2, 1}, {2, 1})).empty());
  const auto row = skew_cells(SkewShape({2}));
  REQUIRE(row.size() == 2);
  CHECK(row[0] == Cell{1, 1});
  CHECK(row[1] == Cell{1, 2});
  try {
    SkewShape bad({1}, {2});
    FAIL("expected ShapeInvalid");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ShapeInvalid);
  }
}

TEST_CASE("column_tableau of the figure shape") {
  const auto t = column_tableau(SkewShape({5, 3, 3, 3, 3}, {3, 3, 2}));
  // col1 {1,2}, col2 {3,4}, col3 {5,6,7}, col4 {8}, col5 {9}
  const std::vector<int> expected_cols = {1, 1, 2, 2, 3, 3, 3, 4, 5};
  for (int k = 1; k <= 9; ++k) CHECK(t.column(k) == expected_cols[static_cast<std::size_t>(k - 1)]);
  CHECK(t.cell(5) == Cell{3, 3});
  CHECK(t.cell(7) == Cell{5, 3});
}

TEST_CASE("column_tableau small cases") {
  const auto r = column_tableau(SkewShape({4}));
  for (int k = 1; k <= 4; ++k) CHECK(r.cell(k) == Cell{1, k});
  const auto c = column_tableau(SkewShape({1, 1}));
  CHECK(c.cell(1) == Cell{1, 1});
  CHECK(c.cell(2) == Cell{2, 1});
}

TEST_CASE("contents") {
  CHECK(contents(column_tableau(SkewShape({5, 3, 3, 3, 3}, {3, 3, 2}))) ==
        std::vector<int>{-3, -4, -2, -3, 0, -1, -2, 3, 4});
  CHECK(contents(row_tableau(SkewShape({3}))) == std::vector<int>{0, 1, 2});
  CHECK(contents(column_tableau(SkewShape({1, 1, 1}))) == std::vector<int>{0, -1, -2});
}

TEST_CASE("standard tableau validation") {
  CHECK_THROWS_AS(StandardTableau(SkewShape({2}), {Cell{1, 2}, Cell{1, 1}}), Error);
  CHECK_NOTHROW(StandardTableau(SkewShape({2}, {1}), {Cell{1, 2}}));
}

TEST_CASE("enumerate_standard_tableaux") {
  CHECK(enumerate_standard_tableaux(SkewShape({2, 1})).size() == 2);
  CHECK(oracle::standard_count_bruteforce({2, 1}, {}) == 2);
  CHECK(enumerate_standard_tableaux(SkewShape({5})).size() == 1);
  CHECK(enumerate_standard_tableaux(SkewShape({2, 2}, {1})).size() ==
        static_cast<std::size_t>(oracle::standard_count_bruteforce({2, 2}, {1})));
  CHECK(enumerate_standard_tableaux(SkewShape({2, 2}, {1})).size() == 2);
  CHECK_THROWS_AS(enumerate_standard_tableaux(SkewShape({9})), Error);
}

TEST_CASE("tableau count equals hook length formula up to size 7") {
  for (int n = 0; n <= 7; ++n)
    for (const auto& p : partitions_of(n))
      CHECK(static_cast<long>(enumerate_standard_tableaux(SkewShape(p)).size()) == hook_length_count(p));
}

TEST_CASE("skew tableau counts match brute force") {
  for (const auto& outer : oracle::partitions_up_to(5))
    for (const auto& inner : oracle::partitions_up_to(outer.size())) {
      if (!outer.contains(inner) || outer.size() - inner.size() > 5) continue;
      CHECK(static_cast<long>(enumerate_standard_tableaux(SkewShape(outer, inner)).size()) ==
            oracle::standard_count_bruteforce(outer.parts(), inner.parts()));
    }
}

TEST_CASE("contents lie within the diagram bounds") {
  for (const auto& outer : oracle::partitions_up_to(5))
    for (const auto& inner : oracle::partitions_up_to(outer.size())) {
      if (!outer.contains(inner)) continue;
      const SkewShape s(outer, inner);
      for (const auto& t : enumerate_standard_tableaux(s))
        for (int c : contents(t)) {
          CHECK(c >= 1 - conjugate(outer)[1]);
          CHECK(c <= outer[1] - 1);
        }
    }
}

TEST_CASE("dim_oracles") {
  CHECK(dim_oracles(SkewShape({2, 1}), 2).ssyt_count == 2);
  CHECK(oracle::ssyt_count_bruteforce({2, 1}, {}, 2) == 2);
  for (int N = 1; N <= 4; ++N) CHECK(dim_oracles(SkewShape({1}), N).ssyt_count == N);
  CHECK(dim_oracles(SkewShape({2}, {1}), 2).ssyt_count == 2);
  CHECK_THROWS_AS(ssyt_count(SkewShape({1}), 5), Error);
}

TEST_CASE("ssyt counts match brute force and Weyl dimension") {
  for (int N = 1; N <= 3; ++N)
    for (const auto& outer : oracle::partitions_up_to(4))
      for (const auto& inner : oracle::partitions_up_to(outer.size())) {
        if (!outer.contains(inner)) continue;
        const auto o = dim_oracles(SkewShape(outer, inner), N);
        CHECK(o.ssyt_count == oracle::ssyt_count_bruteforce(outer.parts(), inner.parts(), N));
        if (o.weyl_dim) CHECK(*o.weyl_dim == o.ssyt_count);
      }
}

TEST_CASE("weyl dimension of mixed weights") {
  // weight (1,-1) of GL_2: the adjoint-type module of dimension 3
  CHECK(weyl_dimension(Partition{1}, Partition{1}, 2) == 3);
  // weight (1,0,-1) of GL_3: dimension 8
  CHECK(weyl_dimension(Partition{1}, Partition{1}, 3) == 8);
  CHECK(weyl_dimension(Partition{1, 1}, Partition{1}, 2) == 0);
}

TEST_CASE("nonvanishing_condition") {
  CHECK(nonvanishing_condition(Partition{2}, Partition{}, Partition{1}, Partition{}, 1));
  CHECK_FALSE(nonvanishing_condition(Partition{1, 1}, Partition{}, Partition{}, Partition{}, 1));
  CHECK(nonvanishing_condition(Partition{5, 3, 3, 3, 3}, Partition{}, Partition{3, 3, 2}, Partition{}, 3));
  CHECK_FALSE(nonvanishing_condition(Partition{1}, Partition{}, Partition{2}, Partition{}, 3));
}

TEST_CASE("restriction and remainder of tableaux") {
  const auto t = column_tableau(SkewShape({2, 1}));
  const auto u = restrict_to_first(t, 1);
  const auto o = remainder_after(t, 1);
  CHECK(u.shape() == SkewShape({1}));
  CHECK(o.shape() == SkewShape({2, 1}, {1}));
  CHECK(concatenate(u, o) == t);
}

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include <webforge/tableaux.hpp>

#include "fixtures.hpp"

using namespace webforge;

namespace {

// Every filling of the k x 2 grid by 1..2k, kept when rows and columns increase.
std::set<StandardTableau> brute_force_syt(int k) {
  std::vector<int> perm(2 * k);
  std::iota(perm.begin(), perm.end(), 1);
  std::set<StandardTableau> out;
  do {
    StandardTableau t{k, std::vector<int>(perm.begin(), perm.begin() + k), std::vector<int>(perm.begin() + k, perm.end())};
    bool ok = std::is_sorted(t.col1.begin(), t.col1.end()) && std::is_sorted(t.col2.begin(), t.col2.end());
    for (int r = 0; r < k && ok; ++r) ok = t.col1[r] < t.col2[r];
    if (ok) out.insert(t);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

// The unique noncrossing matching (found among all perfect matchings) with left endpoints col1.
NoncrossingMatching brute_matching_with_left_endpoints(const StandardTableau& t) {
  std::vector<NoncrossingMatching> hits;
  for (const auto& arcs : fixtures::all_perfect_matchings(t.k)) {
    if (!fixtures::brute_noncrossing(arcs)) continue;
    std::vector<int> lefts;
    for (const auto& [a, b] : arcs) lefts.push_back(a);
    std::sort(lefts.begin(), lefts.end());
    if (lefts == t.col1) hits.push_back(make_matching(t.k, arcs));
  }
  EXPECT_EQ(hits.size(), 1u);
  return hits.at(0);
}

int row_of(const StandardTableau& t, int v) {
  for (int r = 0; r < t.k; ++r)
    if (t.col1[r] == v || t.col2[r] == v) return r;
  return -1;
}

}  // namespace

TEST(Tableaux, EnumerateStandardSmall) {
  auto one = enumerate_standard(1);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0], make_standard({1}, {2}));

  auto two = enumerate_standard(2);
  ASSERT_EQ(two.size(), 2u);
  EXPECT_EQ(two[0], make_standard({1, 2}, {3, 4}));
  EXPECT_EQ(two[1], make_standard({1, 3}, {2, 4}));
}

TEST(Tableaux, EnumerateMatchesBruteForce) {
  for (int k = 1; k <= 4; ++k) {
    auto got = enumerate_standard(k);
    std::set<StandardTableau> as_set(got.begin(), got.end());
    EXPECT_EQ(as_set.size(), got.size());
    EXPECT_EQ(as_set, brute_force_syt(k));
    EXPECT_TRUE(std::is_sorted(got.begin(), got.end(),
                               [](const auto& a, const auto& b) { return a.col1 < b.col1; }));
  }
}

TEST(Tableaux, CountsAreCatalan) {
  EXPECT_EQ(enumerate_standard(6).size(), 132u);
  for (int k = 1; k <= 7; ++k) EXPECT_EQ(enumerate_standard(k).size(), enumerate_matchings(k).size());
}

TEST(Tableaux, RejectsEmptyParameter) { EXPECT_THROW(enumerate_standard(0), DomainError); }

TEST(Tableaux, CatalanBijectionExamples) {
  EXPECT_EQ(catalan_bijection(make_standard({1, 2}, {3, 4})), make_matching(2, {{1, 4}, {2, 3}}));
  EXPECT_EQ(catalan_bijection(make_standard({1, 3}, {2, 4})), make_matching(2, {{1, 2}, {3, 4}}));
  EXPECT_EQ(catalan_bijection(fixtures::running_tableau()), fixtures::running_matching());
}

TEST(Tableaux, CatalanBijectionAgainstOracle) {
  for (int k = 1; k <= 5; ++k)
    for (const auto& t : enumerate_standard(k)) EXPECT_EQ(catalan_bijection(t), brute_matching_with_left_endpoints(t));
}

TEST(Tableaux, CatalanRoundTrip) {
  for (int k = 1; k <= 7; ++k)
    for (const auto& t : enumerate_standard(k)) EXPECT_EQ(tableau_of_matching(catalan_bijection(t)), t);
}

TEST(Tableaux, DescentExamples) {
  EXPECT_EQ(descents(make_standard({1, 3}, {2, 4})), (std::vector<int>{2, 4}));
  EXPECT_EQ(descents(make_standard({1, 2}, {3, 4})), (std::vector<int>{1, 3}));
  // running example: color sets of sizes 3,3,2,2,4,4 give 2+2+1+1+3+3 internal pairs
  EXPECT_EQ(descents(fixtures::running_tableau()), (std::vector<int>{1, 2, 4, 5, 7, 9, 11, 12, 13, 15, 16, 17}));
}

TEST(Tableaux, DescentsFromRowsAndColorSets) {
  for (int k = 2; k <= 7; ++k)
    for (const auto& t : enumerate_standard(k)) {
      const int n = 2 * k;
      auto sets = color_sets(catalan_bijection(t));
      std::vector<int> expected;
      for (int i = 1; i <= n; ++i) {
        int j = i % n + 1;
        bool same = std::any_of(sets.begin(), sets.end(), [&](const auto& c) { return c.contains(i) && c.contains(j); });
        if (same) expected.push_back(i);
      }
      EXPECT_EQ(descents(t), expected);
      // non-wrap part straight from the row definition
      for (int i = 1; i < n; ++i) {
        bool d = row_of(t, i) < row_of(t, i + 1);
        EXPECT_EQ(d, std::find(expected.begin(), expected.end(), i) != expected.end());
      }
    }
}

TEST(Tableaux, StandardizeFixesStandard) {
  for (const auto& t : enumerate_standard(4)) {
    auto [hat_t, enc] = standardize(as_semistandard(t));
    EXPECT_EQ(hat_t, t);
    EXPECT_TRUE(enc.is_identity());
    EXPECT_EQ(enc.a, (std::vector<int>{1, 2, 3, 4, 5, 6, 7, 8}));
  }
}

TEST(Tableaux, StandardizeDoubledEntries) {
  auto [hat_t, enc] = standardize(make_semistandard(2, {1, 2}, {1, 2}));
  EXPECT_EQ(hat_t, make_standard({1, 3}, {2, 4}));
  EXPECT_EQ(enc.a, (std::vector<int>{1, 1, 2, 2}));
  EXPECT_EQ(enc.d, (std::vector<int>{2, 2}));
}

TEST(Tableaux, StandardizeRunningSemistandard) {
  auto t = fixtures::running_semistandard();
  auto [hat_t, enc] = standardize(t);
  EXPECT_EQ(hat_t, fixtures::running_tableau());
  EXPECT_EQ(enc.a, (std::vector<int>{1, 2, 3, 3, 4, 5, 5, 6, 7, 8, 9, 10, 11, 12, 12, 13, 14, 15}));
  EXPECT_EQ(destandardize(hat_t, enc), t);
}

TEST(Tableaux, InvalidInputsRejected) {
  EXPECT_THROW(make_standard({1, 2}, {2, 4}), DomainError);
  EXPECT_THROW(make_standard({2, 1}, {3, 4}), DomainError);
  EXPECT_THROW(make_semistandard(2, {1, 1}, {2, 2}), DomainError);
  EXPECT_THROW(make_semistandard(3, {1, 2}, {2, 4}), DomainError);
}

// Property: standardization always yields a valid SYT and undoing it recovers T.
TEST(Tableaux, StandardizeRoundTripExhaustive) {
  for (int k = 1; k <= 3; ++k)
    for (int n = 1; n <= 6; ++n)
      for (const auto& t : enumerate_semistandard(k, n)) {
        auto [hat_t, enc] = standardize(t);
        EXPECT_NO_THROW(validate(hat_t));
        EXPECT_EQ(destandardize(hat_t, enc), t);
        EXPECT_EQ(enc.length(), 2 * k);
      }
}

TEST(Tableaux, SemistandardEnumerationAgainstFilter) {
  // Brute force: all pairs of k-subsets of [n] with weakly increasing rows.
  for (int k = 1; k <= 3; ++k)
    for (int n = 1; n <= 6; ++n) {
      std::size_t count = 0;
      std::vector<int> cols(n);
      std::iota(cols.begin(), cols.end(), 1);
      std::vector<std::vector<int>> subsets;
      for (int mask = 0; mask < (1 << n); ++mask) {
        if (__builtin_popcount(mask) != k) continue;
        std::vector<int> s;
        for (int i = 0; i < n; ++i)
          if (mask >> i & 1) s.push_back(i + 1);
        subsets.push_back(s);
      }
      for (const auto& a : subsets)
        for (const auto& b : subsets) {
          bool ok = true;
          for (int r = 0; r < k; ++r) ok = ok && a[r] <= b[r];
          count += ok;
        }
      EXPECT_EQ(enumerate_semistandard(k, n).size(), count);
    }
}

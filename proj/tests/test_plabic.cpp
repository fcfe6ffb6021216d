#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <vector>

#include <webforge/gallery.hpp>
#include <webforge/invariants.hpp>
#include <webforge/plabic.hpp>

#include "fixtures.hpp"

using namespace webforge;

namespace {

std::set<std::vector<int>> all_subsets(int k, int n) {
  std::set<std::vector<int>> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != k) continue;
    std::vector<int> s;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) s.push_back(i + 1);
    out.insert(s);
  }
  return out;
}

// Greedy lexicographic basis in the order a, a+1, ..., using independence
// (being contained in some basis) as the only matroid query.
std::vector<int> greedy_necklace_term(const Positroid& p, int a) {
  auto independent = [&](const std::vector<int>& s) {
    auto sorted = s;
    std::sort(sorted.begin(), sorted.end());
    return std::any_of(p.bases.begin(), p.bases.end(), [&](const std::vector<int>& b) {
      return std::includes(b.begin(), b.end(), sorted.begin(), sorted.end());
    });
  };
  std::vector<int> chosen;
  for (int step = 0; step < p.n; ++step) {
    int v = (a - 1 + step) % p.n + 1;
    chosen.push_back(v);
    if (!independent(chosen)) chosen.pop_back();
  }
  return chosen;
}

// Expected trip targets of a pipeline web: b -> b+1 inside a color set,
// the last element of C_a -> first element of C_{a+2}.
std::vector<int> expected_trips(const std::vector<CyclicInterval>& sets) {
  const int s = static_cast<int>(sets.size());
  const int n = sets.front().n;
  std::vector<int> target(n, 0);
  for (int a = 0; a < s; ++a) {
    auto el = sets[a].elements();
    for (std::size_t i = 0; i + 1 < el.size(); ++i) target[el[i] - 1] = el[i + 1];
    target[el.back() - 1] = sets[(a + 2) % s].elements().front();
  }
  return target;
}

}  // namespace

TEST(Plabic, ClawIsAStar) {
  auto g = plabic_of_web(claw_web({1, 2, 3}, 3, 5));
  EXPECT_EQ(g.interior_count(Color::White), 1);
  EXPECT_EQ(g.interior_count(Color::Black), 0);
  EXPECT_EQ(g.edge_count(), 3);
  EXPECT_TRUE(validate_plabic(g).ok());
}

TEST(Plabic, RunningWebCounts) {
  auto w = tableau_to_web(fixtures::running_tableau()).front();
  auto g = plabic_of_web(w);
  EXPECT_EQ(g.n, 18);
  EXPECT_EQ(g.interior_count(Color::White), 6);
  EXPECT_EQ(g.interior_count(Color::Black), 4);
  EXPECT_TRUE(validate_plabic(g).ok());
  EXPECT_EQ(graph_type(g), std::make_pair(2, 18));
}

TEST(Plabic, TripsOfClawOnAllVertices) {
  for (int k = 2; k <= 6; ++k) {
    std::vector<int> all(k);
    for (int i = 0; i < k; ++i) all[i] = i + 1;
    auto t = trip_permutation(plabic_of_web(claw_web(all, k, k)));
    for (int i = 1; i <= k; ++i) EXPECT_EQ(t(i), i % k + 1);
  }
}

TEST(Plabic, TripsOfTwoClaws) {
  auto w = tableau_to_web(make_standard({1, 3}, {2, 4})).front();
  auto t = trip_permutation(plabic_of_web(w));
  EXPECT_EQ(t.target, (std::vector<int>{4, 3, 2, 1}));
}

TEST(Plabic, IsolatedBoundaryIsFlaggedFixedPoint) {
  auto t = trip_permutation(plabic_of_web(claw_web({1, 2}, 2, 4)));
  EXPECT_EQ(t(1), 2);
  EXPECT_EQ(t(2), 1);
  EXPECT_EQ(t(3), 3);
  EXPECT_TRUE(t.isolated[2]);
  EXPECT_FALSE(t.isolated[0]);
}

TEST(Plabic, PipelineTripsMatchColorSets) {
  for (int k = 2; k <= 6; ++k)
    for (const auto& t : enumerate_standard(k)) {
      auto sets = color_sets(catalan_bijection(t));
      auto expected = expected_trips(sets);
      for (const auto& w : tableau_to_web(t, ExtensionChoice::all())) {
        auto trips = trip_permutation(plabic_of_web(w));
        EXPECT_EQ(trips.target, expected) << "k=" << k;
        for (int i = 1; i <= 2 * k; ++i) EXPECT_NE(trips(i), i);
      }
    }
}

TEST(Plabic, CyclicIntervalPositroidExamples) {
  auto split = cyclic_interval_positroid({{1, 2, 4}, {3, 2, 4}});
  EXPECT_EQ(split.bases, (std::set<std::vector<int>>{{1, 3}, {1, 4}, {2, 3}, {2, 4}}));
  EXPECT_TRUE(satisfies_exchange(split));

  std::vector<CyclicInterval> singletons;
  for (int i = 1; i <= 6; ++i) singletons.push_back({i, 1, 6});
  EXPECT_EQ(cyclic_interval_positroid(singletons).bases, all_subsets(2, 6));

  auto running = cyclic_interval_positroid(color_sets(fixtures::running_matching()));
  EXPECT_FALSE(running.is_basis({1, 2}));
  EXPECT_TRUE(running.is_basis({3, 4}));
  EXPECT_TRUE(satisfies_exchange(running));

  EXPECT_THROW(cyclic_interval_positroid({{1, 2, 4}, {2, 2, 4}}), DomainError);
  EXPECT_THROW(cyclic_interval_positroid({{1, 2, 5}, {3, 2, 5}}), DomainError);
}

TEST(Plabic, ExchangeAxiomRejectsNonMatroid) {
  Positroid p{2, 4, {{1, 2}, {3, 4}}};
  EXPECT_FALSE(satisfies_exchange(p));
}

TEST(Plabic, NecklaceOfUniform) {
  Positroid p{2, 4, all_subsets(2, 4)};
  auto neck = grassmann_necklace(p);
  EXPECT_EQ(neck, (std::vector<std::vector<int>>{{1, 2}, {2, 3}, {3, 4}, {4, 1}}));
}

TEST(Plabic, NecklaceMatchesGreedyOracle) {
  std::vector<Positroid> cases{cyclic_interval_positroid({{1, 2, 4}, {3, 2, 4}}),
                               cyclic_interval_positroid(color_sets(fixtures::running_matching()))};
  for (const auto& t : enumerate_standard(4)) cases.push_back(cyclic_interval_positroid(color_sets(catalan_bijection(t))));
  for (const auto& p : cases) {
    auto neck = grassmann_necklace(p);
    for (int a = 1; a <= p.n; ++a) EXPECT_EQ(neck[a - 1], greedy_necklace_term(p, a));
  }
  auto split = grassmann_necklace(cases[0]);
  EXPECT_EQ(split, (std::vector<std::vector<int>>{{1, 3}, {2, 3}, {3, 1}, {4, 1}}));
  EXPECT_EQ(grassmann_necklace(cases[1])[2], (std::vector<int>{3, 4}));
}

TEST(Plabic, DimerCoversOfClaw) {
  auto g = plabic_of_web(claw_web({1, 2}, 2, 2));
  // Viewed as a plabic graph the 2-leg claw has one white and no interior black vertex.
  EXPECT_EQ(graph_type(g).first, 1);
  auto covers = dimer_covers(g);
  ASSERT_EQ(covers.size(), 2u);
  EXPECT_EQ(covers[0].boundary, std::vector<int>{1});
  EXPECT_EQ(covers[1].boundary, std::vector<int>{2});
  auto p = positroid_of_graph(g);
  EXPECT_EQ(p.bases, (std::set<std::vector<int>>{{1}, {2}}));
}

TEST(Plabic, TwoClawPositroid) {
  auto w = tableau_to_web(make_standard({1, 2}, {3, 4})).front();
  auto p = positroid_of_graph(plabic_of_web(w));
  EXPECT_EQ(p.k, 2);
  EXPECT_EQ(p.bases, (std::set<std::vector<int>>{{1, 3}, {1, 4}, {2, 3}, {2, 4}}));
}

TEST(Plabic, GraphWithoutCoverIsRejected) {
  PlabicGraph g;
  g.n = 1;
  g.color = {Color::Black, Color::White, Color::White};
  g.ends = {{0, 1}, {0, 2}};
  g.rotation = {{0, 1}, {0}, {1}};
  try {
    positroid_of_graph(g);
    FAIL() << "expected an error";
  } catch (const DomainError& e) {
    EXPECT_STREQ(e.what(), "graph has no cover");
  }
}

TEST(Plabic, PipelinePositroidIsColorSetPositroid) {
  for (int k = 1; k <= 5; ++k)
    for (const auto& t : enumerate_standard(k)) {
      auto expected = cyclic_interval_positroid(color_sets(catalan_bijection(t)));
      for (const auto& w : tableau_to_web(t, ExtensionChoice::all())) {
        auto g = plabic_of_web(w);
        EXPECT_EQ(graph_type(g), std::make_pair(2, 2 * k));
        for (const auto& c : dimer_covers(g)) EXPECT_EQ(c.boundary.size(), 2u);
        EXPECT_EQ(positroid_of_graph(g), expected) << "k=" << k;
      }
    }
}

TEST(Plabic, RunningPositroid) {
  auto g = plabic_of_web(tableau_to_web(fixtures::running_tableau()).front());
  EXPECT_EQ(positroid_of_graph(g), cyclic_interval_positroid(color_sets(fixtures::running_matching())));
}

TEST(Plabic, TopCellGraphs) {
  for (auto [k, n] : std::vector<std::pair<int, int>>{{1, 3}, {2, 4}, {2, 5}, {2, 6}, {3, 6}, {3, 7}, {4, 8}}) {
    auto g = top_cell_graph(k, n);
    EXPECT_TRUE(validate_plabic(g).ok()) << k << "," << n << ": " << validate_plabic(g).message;
    EXPECT_EQ(graph_type(g), std::make_pair(k, n));
    auto p = positroid_of_graph(g);
    EXPECT_EQ(p.bases, all_subsets(k, n)) << k << "," << n;
    auto trips = trip_permutation(g);
    for (int i = 1; i <= n; ++i) EXPECT_EQ(trips(i), (i - 1 + k) % n + 1) << k << "," << n;
  }
}

TEST(Plabic, SameGraphDifferentWeb) {
  auto [w1, w2] = same_graph_pair();
  require_valid(w1);
  require_valid(w2);
  EXPECT_EQ(w1.k, 9);
  EXPECT_EQ(w1.n, 18);
  EXPECT_FALSE(isomorphic(w1, w2));
  EXPECT_TRUE(plabic_isomorphic(plabic_of_web(w1), plabic_of_web(w2)));
  auto d1 = dual_matchings(w1);
  auto d2 = dual_matchings(w2);
  ASSERT_EQ(d1.size(), 1u);
  ASSERT_EQ(d2.size(), 1u);
  EXPECT_NE(d1.front().first, d2.front().first);
}

TEST(Plabic, NoncanonicalWeb) {
  for (int x : {1, 2}) {
    auto w = noncanonical_sl5_web(x);
    auto report = validate_web(w);
    EXPECT_TRUE(report.ok()) << report.code << ": " << report.message;
    EXPECT_GE(dual_matchings(w).size(), 2u);
    auto g = plabic_of_web(w);
    EXPECT_EQ(positroid_of_graph(g),
              cyclic_interval_positroid({{1, 2, 10}, {3, 3, 10}, {6, 2, 10}, {8, 3, 10}}));
  }
  EXPECT_TRUE(plabic_isomorphic(plabic_of_web(noncanonical_sl5_web(1)), plabic_of_web(noncanonical_sl5_web(2))));
}

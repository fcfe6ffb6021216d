#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <vector>

#include <webforge/immanants.hpp>

using namespace webforge;

namespace {

Rational q(long p, long d) {
  Rational r(p, d);
  r.canonicalize();
  return r;
}

PlabicNetwork two_claw_network(const std::vector<int>& col1, const std::vector<int>& col2) {
  return unit_network(plabic_of_web(tableau_to_web(make_standard(col1, col2)).front()));
}

// Plain graph with interior vertices only, colors alternating along the given edges.
PlabicGraph interior_graph(std::vector<Color> colors, std::vector<std::pair<int, int>> edges) {
  PlabicGraph g;
  g.n = 0;
  g.color = std::move(colors);
  g.ends = std::move(edges);
  g.rotation.assign(g.color.size(), {});
  for (int e = 0; e < g.edge_count(); ++e) {
    g.rotation[g.ends[e].first].push_back(e);
    g.rotation[g.ends[e].second].push_back(e);
  }
  return g;
}

std::map<std::vector<int>, Rational> by_multiplicity(const std::vector<TwoLikeSubgraph>& list) {
  std::map<std::vector<int>, Rational> out;
  for (const auto& w : list) {
    EXPECT_EQ(out.count(w.mult), 0u);
    out[w.mult] = w.weight;
  }
  return out;
}

std::vector<PlabicGraph> sample_graphs() {
  std::vector<PlabicGraph> out;
  for (int k = 2; k <= 4; ++k)
    for (const auto& t : enumerate_standard(k)) out.push_back(plabic_of_web(tableau_to_web(t).front()));
  for (auto [k, n] : std::vector<std::pair<int, int>>{{2, 4}, {2, 5}, {3, 6}}) out.push_back(top_cell_graph(k, n));
  return out;
}

}  // namespace

TEST(Measurements, SingleWhiteVertex) {
  auto g = plabic_of_web(claw_web({1, 2}, 2, 2));
  PlabicNetwork net{g, {q(2, 3), q(5, 1)}};
  auto m = boundary_measurements(net);
  EXPECT_EQ(m.k, 1);
  EXPECT_EQ(m.at({1}), q(2, 3));
  EXPECT_EQ(m.at({2}), q(5, 1));
  auto vt = realize_matrix(m);
  EXPECT_EQ(vt.dim, 1);
  EXPECT_EQ(vt.at(1, 1), q(2, 3));
  EXPECT_EQ(vt.at(2, 1), q(5, 1));
}

TEST(Measurements, TwoClaws) {
  auto m = boundary_measurements(two_claw_network({1, 2}, {3, 4}));
  for (auto s : std::vector<std::vector<int>>{{1, 3}, {1, 4}, {2, 3}, {2, 4}}) EXPECT_EQ(m.at(s), 1);
  EXPECT_EQ(m.at({1, 2}), 0);
  EXPECT_EQ(m.at({3, 4}), 0);
  auto vt = realize_matrix(m);
  for (const auto& s : k_subsets(2, 4)) EXPECT_EQ(minor(vt, s), m.at(s));
}

TEST(Measurements, RealizeRejectsZeroPoint) {
  Measurements m{2, 4, {}};
  EXPECT_THROW(realize_matrix(m), DomainError);
}

TEST(Measurements, ThreeTermRelationOnPipelineNetworks) {
  std::mt19937_64 rng(11);
  for (int k = 2; k <= 4; ++k)
    for (const auto& t : enumerate_standard(k)) {
      auto m = boundary_measurements(random_network(plabic_of_web(tableau_to_web(t).front()), rng));
      const int n = 2 * k;
      for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
          for (int c = b + 1; c <= n; ++c)
            for (int d = c + 1; d <= n; ++d) EXPECT_EQ(three_term_defect(m, a, b, c, d), 0);
    }
}

TEST(Measurements, PlueckerRelationsOnTopCells) {
  std::mt19937_64 rng(12);
  for (auto [k, n] : std::vector<std::pair<int, int>>{{2, 4}, {2, 5}, {2, 6}, {2, 7}, {2, 8}, {3, 5}, {3, 6}}) {
    for (int rep = 0; rep < 2; ++rep) {
      auto m = boundary_measurements(random_network(top_cell_graph(k, n), rng));
      EXPECT_FALSE(check_pluecker(m).has_value()) << k << "," << n;
      EXPECT_EQ(m.values.size(), k_subsets(k, n).size());
    }
  }
}

TEST(Measurements, CorruptedPointIsCaught) {
  std::mt19937_64 rng(13);
  auto m = boundary_measurements(random_network(top_cell_graph(2, 4), rng));
  m.values[{1, 3}] += 1;
  auto bad = check_pluecker(m);
  ASSERT_TRUE(bad.has_value());
  EXPECT_NE(bad->value, 0);
  EXPECT_NE(three_term_defect(m, 1, 2, 3, 4), 0);
}

TEST(Measurements, RealizeIsRightInverseOfMinors) {
  std::mt19937_64 rng(14);
  for (const auto& g : sample_graphs()) {
    auto m = boundary_measurements(random_network(g, rng));
    auto back = minors_of(realize_matrix(m));
    EXPECT_EQ(back.values, m.values);
  }
}

TEST(TwoLike, TwoClaws) {
  auto net = two_claw_network({1, 2}, {3, 4});
  auto list = two_like_subgraphs(net);
  EXPECT_EQ(list.size(), 9u);
  std::set<std::pair<std::vector<Arc>, std::vector<int>>> seen;
  for (const auto& w : list) {
    EXPECT_EQ(w.cycles, 0);
    EXPECT_EQ(w.weight, 1);
    EXPECT_FALSE(w.crossing);
    seen.insert({w.arcs, w.doubled});
  }
  // Each claw independently contributes its path 1-2 (or 3-4) or one doubled leg.
  std::set<std::pair<std::vector<Arc>, std::vector<int>>> expected;
  std::vector<std::pair<std::vector<Arc>, std::vector<int>>> left{{{{1, 2}}, {}}, {{}, {1}}, {{}, {2}}};
  std::vector<std::pair<std::vector<Arc>, std::vector<int>>> right{{{{3, 4}}, {}}, {{}, {3}}, {{}, {4}}};
  for (const auto& [la, ld] : left)
    for (const auto& [ra, rd] : right) {
      auto arcs = la;
      arcs.insert(arcs.end(), ra.begin(), ra.end());
      auto dbl = ld;
      dbl.insert(dbl.end(), rd.begin(), rd.end());
      expected.insert({arcs, dbl});
    }
  EXPECT_EQ(seen, expected);
}

TEST(TwoLike, FourCycleCountsTwice) {
  auto g = interior_graph({Color::White, Color::Black, Color::White, Color::Black}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  auto list = two_like_subgraphs(unit_network(g));
  ASSERT_EQ(list.size(), 3u);
  int cycles = 0;
  for (const auto& w : list) {
    if (w.cycles == 1) {
      ++cycles;
      EXPECT_EQ(w.weight, 2);
      EXPECT_EQ(w.mult, (std::vector<int>{1, 1, 1, 1}));
    } else {
      EXPECT_EQ(w.weight, 1);
    }
  }
  EXPECT_EQ(cycles, 1);
}

TEST(TwoLike, DoubledEdge) {
  auto g = interior_graph({Color::White, Color::Black}, {{0, 1}});
  PlabicNetwork net{g, {q(3, 2)}};
  auto list = two_like_subgraphs(net);
  ASSERT_EQ(list.size(), 1u);
  EXPECT_EQ(list[0].mult, std::vector<int>{2});
  EXPECT_EQ(list[0].weight, q(9, 4));
}

TEST(TwoLike, DirectSearchMatchesCoverPairs) {
  std::mt19937_64 rng(15);
  for (const auto& g : sample_graphs()) {
    auto net = random_network(g, rng);
    auto direct = two_like_subgraphs(net);
    EXPECT_EQ(by_multiplicity(direct), by_multiplicity(two_like_by_cover_pairs(net)));
    auto [k, n] = graph_type(g);
    for (const auto& w : direct) {
      EXPECT_FALSE(w.crossing);
      EXPECT_EQ(2 * w.arcs.size() + 2 * w.doubled.size(), static_cast<std::size_t>(2 * k));
    }
  }
}

TEST(Immanants, TwoClawValues) {
  auto net = two_claw_network({1, 3}, {2, 4});
  EXPECT_EQ(immanant_value(net, make_partial_matching(4, {{2, 3}, {4, 1}}, {})), 1);
  EXPECT_EQ(immanant_value(net, make_partial_matching(4, {{1, 2}, {3, 4}}, {})), 0);
  EXPECT_EQ(immanant_value(net, make_partial_matching(4, {{1, 4}}, {2})), 1);
}

TEST(Immanants, PartitionOfUnity) {
  std::mt19937_64 rng(16);
  for (const auto& g : sample_graphs()) {
    auto net = random_network(g, rng);
    Rational table_total = 0;
    for (const auto& [pm, value] : immanant_table(net)) {
      table_total += value;
      EXPECT_EQ(immanant_value(net, pm), value);
    }
    Rational oracle_total = 0;
    for (const auto& w : two_like_by_cover_pairs(net)) oracle_total += w.weight;
    EXPECT_EQ(table_total, oracle_total);
  }
}

TEST(Immanants, AgreeWithWebInvariantsUpToConstantSign) {
  std::mt19937_64 rng(17);
  for (int k = 2; k <= 3; ++k) {
    auto g = top_cell_graph(k, 2 * k);
    for (const auto& t : enumerate_standard(k)) {
      std::set<int> signs;
      for (int rep = 0; rep < 5; ++rep) {
        auto c = immanant_vs_invariant(t, random_network(g, rng));
        EXPECT_NE(c.rhs, 0);
        EXPECT_NE(c.sign, 0) << c.lhs << " vs " << c.rhs;
        signs.insert(c.sign);
      }
      ASSERT_EQ(signs.size(), 1u);
      EXPECT_EQ(*signs.begin(), final_proof_sign(t));
    }
  }
}

TEST(Immanants, SignIndependentOfExtension) {
  std::mt19937_64 rng(18);
  auto g = top_cell_graph(3, 6);
  for (const auto& t : enumerate_standard(3)) {
    auto net = random_network(g, rng);
    const auto count = tableau_to_web(t, ExtensionChoice::all()).size();
    for (std::size_t i = 0; i < count; ++i)
      EXPECT_EQ(immanant_vs_invariant(t, net, ExtensionChoice::single(static_cast<int>(i))).sign, final_proof_sign(t));
  }
}

TEST(Immanants, SampledRankFour) {
  std::mt19937_64 rng(19);
  auto g = top_cell_graph(4, 8);
  auto all = enumerate_standard(4);
  for (std::size_t i = 0; i < all.size(); i += 5) {
    auto c = immanant_vs_invariant(all[i], random_network(g, rng));
    EXPECT_EQ(c.sign, final_proof_sign(all[i]));
  }
}

TEST(Stitching, NetworkMatchesStitchedVectors) {
  std::mt19937_64 rng(20);
  auto net = random_network(top_cell_graph(2, 5), rng);
  auto vt = realize_matrix(boundary_measurements(net));
  for (auto d : std::vector<std::vector<int>>{{1, 0, 2, 1, 0}, {2, 0, 0, 2, 0}, {1, 1, 1, 1, 0}, {0, 1, 2, 0, 1}}) {
    auto enc = ContentEncoding::from_content(d);
    auto stitched = stitch_network(net, enc);
    EXPECT_TRUE(validate_plabic(stitched.graph).ok()) << validate_plabic(stitched.graph).message;
    VectorTuple picked{vt.dim, {}};
    for (int a : enc.a) picked.columns.push_back(vt.columns[a - 1]);
    EXPECT_EQ(boundary_measurements(stitched).values, minors_of(picked).values);
  }
}

TEST(Stitching, ImmanantIdentity) {
  std::mt19937_64 rng(21);
  for (auto [k, n] : std::vector<std::pair<int, int>>{{2, 3}, {2, 5}, {3, 5}, {3, 6}}) {
    auto net = random_network(top_cell_graph(k, n), rng);
    auto table = immanant_table(net);
    for (const auto& pm : enumerate_partial_matchings(k, n)) {
      auto enc = ContentEncoding::from_content(pm.content());
      auto stitched = stitch_network(net, enc);
      auto it = table.find(pm);
      Rational lhs = it == table.end() ? Rational(0) : it->second;
      auto h = hat(pm);
      EXPECT_EQ(lhs, immanant_value(stitched, make_partial_matching(2 * k, h.arcs, {})));
    }
  }
}

TEST(Stitching, DroppingUnusedIndexKeepsValues) {
  std::mt19937_64 rng(22);
  auto net = random_network(top_cell_graph(2, 6), rng);
  auto table = immanant_table(net);
  auto pm = make_partial_matching(6, {{1, 3}, {5, 6}}, {});
  auto dropped = stitch_network(net, ContentEncoding::from_content({1, 0, 1, 0, 1, 1}));
  EXPECT_EQ(dropped.graph.n, 4);
  EXPECT_EQ(table.at(pm), immanant_value(dropped, make_partial_matching(4, {{1, 2}, {3, 4}}, {})));
}

TEST(Stitching, WebInvariantIdentity) {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> dist(-9, 9);
  for (auto [k, n] : std::vector<std::pair<int, int>>{{2, 3}, {2, 5}, {3, 5}, {3, 7}}) {
    for (const auto& t : enumerate_semistandard(k, n)) {
      std::vector<std::vector<Rational>> cols(n, std::vector<Rational>(k));
      for (auto& c : cols)
        for (auto& x : c) x = dist(rng);
      auto vt = make_vector_tuple(cols);
      auto [hat_t, enc] = standardize(t);
      VectorTuple picked{k, {}};
      for (int a : enc.a) picked.columns.push_back(vt.columns[a - 1]);
      EXPECT_EQ(evaluate_web(tableau_to_web(t).front(), vt), evaluate_web(tableau_to_web(hat_t).front(), picked));
    }
  }
}

TEST(Stitching, SemistandardImmanantsAreWebInvariants) {
  std::mt19937_64 rng(24);
  for (auto [k, n] : std::vector<std::pair<int, int>>{{2, 3}, {2, 5}, {3, 5}}) {
    auto g = top_cell_graph(k, n);
    for (const auto& t : enumerate_semistandard(k, n)) {
      auto c = immanant_vs_invariant(t, random_network(g, rng));
      auto expected = final_proof_sign(standardize(t).first);
      if (c.rhs == 0) {
        EXPECT_EQ(c.lhs, 0);
      } else {
        EXPECT_EQ(c.sign, expected);
      }
    }
  }
}

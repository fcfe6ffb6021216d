#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "common.hpp"
#include "invariants.hpp"
#include "matchings.hpp"
#include "plabic.hpp"
#include "tableaux.hpp"
#include "web.hpp"

namespace webforge {

/// Plabic graph with a nonzero rational weight on every edge.
struct PlabicNetwork {
  PlabicGraph graph;
  std::vector<Rational> weight;  // indexed by edge id
};

inline void validate(const PlabicNetwork& net) {
  require(static_cast<int>(net.weight.size()) == net.graph.edge_count(), "network: one weight per edge");
  for (const auto& w : net.weight) require(w != 0, "network: edge weights must be nonzero");
}

inline PlabicNetwork unit_network(const PlabicGraph& g) { return {g, std::vector<Rational>(g.edge_count(), 1)}; }

/// Independent weights p/q with 1 <= p, q <= bound.
inline PlabicNetwork random_network(const PlabicGraph& g, std::mt19937_64& rng, int bound = 9) {
  std::uniform_int_distribution<int> dist(1, bound);
  PlabicNetwork net{g, {}};
  for (int e = 0; e < g.edge_count(); ++e) {
    Rational w(dist(rng), dist(rng));
    w.canonicalize();
    net.weight.push_back(w);
  }
  return net;
}

// -- boundary measurements ----------------------------------------------------------

/// Delta_I for every k-subset I (absent subsets are zero).
struct Measurements {
  int k = 0;
  int n = 0;
  std::map<std::vector<int>, Rational> values;

  Rational at(std::vector<int> subset) const {
    std::sort(subset.begin(), subset.end());
    auto it = values.find(subset);
    return it == values.end() ? Rational(0) : it->second;
  }

  /// Delta of an ordered tuple: sign of the sorting permutation, zero on repeats.
  Rational signed_at(const std::vector<int>& tuple) const {
    auto s = tuple;
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) return 0;
    return sort_sign(tuple) * at(s);
  }
};

inline Measurements boundary_measurements(const PlabicNetwork& net) {
  validate(net);
  auto [k, n] = graph_type(net.graph);
  Measurements m{k, n, {}};
  for (const auto& cover : dimer_covers(net.graph)) {
    Rational w = 1;
    for (int e : cover.edges) w *= net.weight[e];
    m.values[cover.boundary] += w;
  }
  for (auto it = m.values.begin(); it != m.values.end();)
    it = it->second == 0 ? m.values.erase(it) : std::next(it);
  return m;
}

inline std::vector<std::vector<int>> k_subsets(int k, int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int from) {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int v = from; v <= n; ++v) {
      cur.push_back(v);
      rec(v + 1);
      cur.pop_back();
    }
  };
  rec(1);
  return out;
}

/// A Grassmann-Pluecker relation that fails, as (I, J) with |I| = k-1 and |J| = k+1.
struct PlueckerViolation {
  std::vector<int> i;
  std::vector<int> j;
  Rational value;
};

/// Checks sum_l (-1)^l Delta(I, j_l) Delta(J \ j_l) = 0 for all I, J.
inline std::optional<PlueckerViolation> check_pluecker(const Measurements& m) {
  if (m.k == 0 || m.k >= m.n) return std::nullopt;
  auto smaller = m.k >= 2 ? k_subsets(m.k - 1, m.n) : std::vector<std::vector<int>>{{}};
  auto larger = k_subsets(m.k + 1, m.n);
  for (const auto& i : smaller)
    for (const auto& j : larger) {
      Rational total = 0;
      for (int l = 0; l <= m.k; ++l) {
        auto first = i;
        first.push_back(j[l]);
        auto second = j;
        second.erase(second.begin() + l);
        Rational term = m.signed_at(first) * m.at(second);
        total += (l % 2 == 0) ? term : Rational(-term);
      }
      if (total != 0) return PlueckerViolation{i, j, total};
    }
  return std::nullopt;
}

/// a<b<c<d: Delta_ac Delta_bd - Delta_ab Delta_cd - Delta_ad Delta_bc (zero on Gr(2,n)).
inline Rational three_term_defect(const Measurements& m, int a, int b, int c, int d) {
  return m.at({a, c}) * m.at({b, d}) - m.at({a, b}) * m.at({c, d}) - m.at({a, d}) * m.at({b, c});
}

/// k x n matrix (as column vectors) whose maximal minors are the given measurements.
inline VectorTuple realize_matrix(const Measurements& m) {
  std::vector<int> base;
  for (const auto& [subset, value] : m.values)
    if (value != 0) {
      base = subset;  // std::map iterates lexicographically, so this is the lex-min basis
      break;
    }
  require(!base.empty(), "realize_matrix: all measurements vanish");
  const Rational pivot = m.at(base);
  VectorTuple vt;
  vt.dim = m.k;
  vt.columns.assign(m.n, std::vector<Rational>(m.k));
  for (int j = 1; j <= m.n; ++j)
    for (int r = 0; r < m.k; ++r) {
      auto swapped = base;
      swapped[r] = j;
      Rational entry = m.signed_at(swapped) / pivot;
      if (r == 0) entry *= pivot;
      vt.columns[j - 1][r] = entry;
    }
  return vt;
}

inline Measurements minors_of(const VectorTuple& vt) {
  Measurements m{vt.dim, vt.size(), {}};
  for (const auto& s : k_subsets(vt.dim, vt.size())) {
    Rational v = minor(vt, s);
    if (v != 0) m.values[s] = v;
  }
  return m;
}

// -- 2-like subgraphs -------------------------------------------------------------------

/// Edge multiplicities in {0,1,2} with every interior vertex of total multiplicity 2,
/// together with its connectivity and weight.
struct TwoLikeSubgraph {
  std::vector<int> mult;
  std::vector<Arc> arcs;     // boundary-to-boundary paths, (smaller, larger), sorted
  std::vector<int> doubled;  // boundary vertices with a doubled edge
  int cycles = 0;
  bool crossing = false;
  Rational weight;

  PartialMatching connectivity(int n) const {
    require(!crossing, "2-like subgraph has crossing connectivity");
    return make_partial_matching(n, arcs, doubled);
  }
};

namespace detail {

inline TwoLikeSubgraph describe_two_like(const PlabicNetwork& net, const std::vector<int>& mult) {
  const auto& g = net.graph;
  TwoLikeSubgraph out;
  out.mult = mult;
  out.weight = 1;
  for (int e = 0; e < g.edge_count(); ++e)
    for (int c = 0; c < mult[e]; ++c) out.weight *= net.weight[e];

  std::vector<bool> seen(g.vertex_count(), false);
  auto next_single = [&](int v, int from) {
    for (int e : g.rotation[v])
      if (e != from && mult[e] == 1) return e;
    return -1;
  };
  for (int b = 0; b < g.n; ++b) {
    for (int e : g.rotation[b]) {
      if (mult[e] == 2) out.doubled.push_back(b + 1);
      if (mult[e] != 1 || seen[b]) continue;
      seen[b] = true;
      int edge = e;
      int v = g.other(e, b);
      while (!g.is_boundary(v)) {
        seen[v] = true;
        edge = next_single(v, edge);
        v = g.other(edge, v);
      }
      seen[v] = true;
      out.arcs.emplace_back(std::min(b, v) + 1, std::max(b, v) + 1);
    }
  }
  for (int v = g.n; v < g.vertex_count(); ++v) {
    if (seen[v] || next_single(v, -1) < 0) continue;
    ++out.cycles;
    int edge = -1;
    int u = v;
    do {
      seen[u] = true;
      edge = next_single(u, edge);
      u = g.other(edge, u);
    } while (u != v);
  }
  std::sort(out.arcs.begin(), out.arcs.end());
  std::sort(out.doubled.begin(), out.doubled.end());
  for (std::size_t i = 0; i < out.arcs.size(); ++i)
    for (std::size_t j = i + 1; j < out.arcs.size(); ++j)
      if (arcs_cross(out.arcs[i], out.arcs[j])) out.crossing = true;
  for (int c = 0; c < out.cycles; ++c) out.weight *= 2;
  return out;
}

}  // namespace detail

/// Every 2-like subgraph, found by a vertex-by-vertex search over edge multiplicities.
inline void for_each_two_like(const PlabicNetwork& net, const std::function<void(const TwoLikeSubgraph&)>& visit) {
  validate(net);
  const auto& g = net.graph;
  std::vector<int> mult(g.edge_count(), 0);
  std::vector<int> load(g.vertex_count(), 0);
  auto open = [&](int e, int v) {
    int o = g.other(e, v);
    return mult[e] == 0 && (g.is_boundary(o) || o > v);
  };
  std::function<void(int)> rec = [&](int v) {
    if (v == g.vertex_count()) {
      visit(detail::describe_two_like(net, mult));
      return;
    }
    const int need = 2 - load[v];
    if (need == 0) {
      rec(v + 1);
      return;
    }
    const auto& r = g.rotation[v];
    for (std::size_t a = 0; a < r.size(); ++a) {
      int e = r[a];
      if (!open(e, v)) continue;
      int o = g.other(e, v);
      if (need == 2 && load[o] == 0) {
        mult[e] = 2;
        load[o] += 2;
        load[v] += 2;
        rec(v + 1);
        load[v] -= 2;
        load[o] -= 2;
        mult[e] = 0;
      }
      if (load[o] >= 2) continue;
      mult[e] = 1;
      ++load[o];
      ++load[v];
      if (need == 1) {
        rec(v + 1);
      } else {
        for (std::size_t b = a + 1; b < r.size(); ++b) {
          int f = r[b];
          if (!open(f, v)) continue;
          int p = g.other(f, v);
          if (load[p] >= 2) continue;
          mult[f] = 1;
          ++load[p];
          ++load[v];
          rec(v + 1);
          --load[v];
          --load[p];
          mult[f] = 0;
        }
      }
      --load[v];
      --load[o];
      mult[e] = 0;
    }
  };
  rec(g.n);
}

inline std::vector<TwoLikeSubgraph> two_like_subgraphs(const PlabicNetwork& net) {
  std::vector<TwoLikeSubgraph> out;
  for_each_two_like(net, [&](const TwoLikeSubgraph& w) { out.push_back(w); });
  return out;
}

/// The same subgraphs obtained as the distinct superpositions of ordered pairs of dimer covers.
inline std::vector<TwoLikeSubgraph> two_like_by_cover_pairs(const PlabicNetwork& net) {
  validate(net);
  auto covers = dimer_covers(net.graph);
  std::set<std::vector<int>> seen;
  std::vector<TwoLikeSubgraph> out;
  for (const auto& p : covers)
    for (const auto& q : covers) {
      std::vector<int> mult(net.graph.edge_count(), 0);
      for (int e : p.edges) ++mult[e];
      for (int e : q.edges) ++mult[e];
      if (seen.insert(mult).second) out.push_back(detail::describe_two_like(net, mult));
    }
  return out;
}

/// F_{(M,P)} evaluated at the point of the network.
inline Rational immanant_value(const PlabicNetwork& net, const PartialMatching& pm) {
  Rational total = 0;
  for_each_two_like(net, [&](const TwoLikeSubgraph& w) {
    require(!w.crossing, "immanant_value: planar network produced a crossing connectivity");
    if (w.arcs == pm.arcs && w.doubled == pm.doubled) total += w.weight;
  });
  return total;
}

/// All immanant values at once, keyed by connectivity.
inline std::map<PartialMatching, Rational> immanant_table(const PlabicNetwork& net) {
  const int n = net.graph.n;
  std::map<PartialMatching, Rational> out;
  for_each_two_like(net, [&](const TwoLikeSubgraph& w) { out[w.connectivity(n)] += w.weight; });
  return out;
}

// -- stitching ------------------------------------------------------------------------

/// N': boundary vertex i is dropped when d_i = 0 and split into two adjacent boundary
/// vertices (each carrying the original edge weight) when d_i = 2. The boundary of N'
/// is indexed by the encoding a_1..a_2k. Every boundary vertex of N must have degree one.
inline PlabicNetwork stitch_network(const PlabicNetwork& net, const ContentEncoding& enc) {
  validate(net);
  const auto& g = net.graph;
  require(enc.n() == g.n, "stitch_network: content length must equal n");
  for (int b = 0; b < g.n; ++b) require(g.rotation[b].size() == 1, "stitch_network: boundary vertices need degree one");
  const int m = enc.length();
  const int shift = m - g.n;

  PlabicNetwork out;
  PlabicGraph& h = out.graph;
  h.n = m;
  h.color.assign(m, Color::Black);
  for (int v = g.n; v < g.vertex_count(); ++v) h.color.push_back(g.color[v]);
  h.rotation.assign(h.color.size(), {});
  std::vector<int> edge_map(g.edge_count(), -1);
  std::vector<bool> is_leg(g.edge_count(), false);
  for (int b = 0; b < g.n; ++b) is_leg[g.rotation[b].front()] = true;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (is_leg[e]) continue;
    edge_map[e] = h.edge_count();
    h.ends.emplace_back(g.ends[e].first + shift, g.ends[e].second + shift);
    out.weight.push_back(net.weight[e]);
  }
  // New legs: position j (1-based) attaches to the interior end of the old leg at a_j.
  std::vector<std::vector<int>> replacement(g.edge_count());
  for (int j = 1; j <= m; ++j) {
    int old_leg = g.rotation[enc.a[j - 1] - 1].front();
    int inner = g.other(old_leg, enc.a[j - 1] - 1) + shift;
    int e = h.edge_count();
    h.ends.emplace_back(j - 1, inner);
    out.weight.push_back(net.weight[old_leg]);
    h.rotation[j - 1].push_back(e);
    replacement[old_leg].push_back(e);
  }
  for (int v = g.n; v < g.vertex_count(); ++v)
    for (int e : g.rotation[v]) {
      if (!is_leg[e]) {
        h.rotation[v + shift].push_back(edge_map[e]);
        continue;
      }
      // consecutive boundary positions appear counterclockwise in increasing order
      for (int r : replacement[e]) h.rotation[v + shift].push_back(r);
    }
  return out;
}

// -- immanants versus web invariants ----------------------------------------------------

struct ImmanantComparison {
  Rational lhs;   // F_{pm(T)} at the network point
  Rational rhs;   // [W(T)] at a matrix realizing the same point
  int sign = 0;   // lhs / rhs when that is +-1, otherwise 0
  bool ok() const { return sign != 0 || (lhs == 0 && rhs == 0); }
};

inline ImmanantComparison immanant_vs_invariant(const SemistandardTableau& t, const PlabicNetwork& net,
                                                ExtensionChoice which = ExtensionChoice::single(0)) {
  validate(t);
  auto [k, n] = graph_type(net.graph);
  require(k == t.k && n == t.n, "immanant_vs_invariant: network type must be (k, n) of the tableau");
  auto pm = partial_matching_of_ssyt(t);
  ImmanantComparison out;
  out.lhs = immanant_value(net, pm);
  auto vt = realize_matrix(boundary_measurements(net));
  out.rhs = evaluate_web(tableau_to_web(t, which).front(), vt);
  if (out.rhs != 0) {
    Rational ratio = out.lhs / out.rhs;
    if (ratio == 1) out.sign = 1;
    if (ratio == -1) out.sign = -1;
  }
  return out;
}

inline ImmanantComparison immanant_vs_invariant(const StandardTableau& t, const PlabicNetwork& net,
                                                ExtensionChoice which = ExtensionChoice::single(0)) {
  return immanant_vs_invariant(as_semistandard(t), net, which);
}

}  // namespace webforge

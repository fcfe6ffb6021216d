#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "common.hpp"
#include "matchings.hpp"
#include "web.hpp"

namespace webforge {

/// Bipartite graph embedded in a disk: a web with its multiplicities forgotten.
/// Vertex and edge ids follow the same conventions as WebDiagram.
struct PlabicGraph {
  int n = 0;
  std::vector<Color> color;
  std::vector<std::pair<int, int>> ends;
  std::vector<std::vector<int>> rotation;

  int vertex_count() const { return static_cast<int>(color.size()); }
  int edge_count() const { return static_cast<int>(ends.size()); }
  bool is_boundary(int v) const { return v < n; }
  int other(int e, int v) const { return ends[e].first == v ? ends[e].second : ends[e].first; }

  int interior_count(Color c) const {
    int count = 0;
    for (int v = n; v < vertex_count(); ++v)
      if (color[v] == c) ++count;
    return count;
  }

  friend bool operator==(const PlabicGraph&, const PlabicGraph&) = default;
};

inline PlabicGraph plabic_of_web(const WebDiagram& w) {
  PlabicGraph g;
  g.n = w.n;
  g.color = w.color;
  g.rotation = w.rotation;
  for (const auto& e : w.edges) g.ends.emplace_back(e.u, e.v);
  return g;
}

/// The graph as a web with unit multiplicities (used for embedding checks and isomorphism).
inline WebDiagram shape_of(const PlabicGraph& g) {
  WebDiagram w;
  w.k = 1;
  w.n = g.n;
  w.color = g.color;
  w.rotation = g.rotation;
  for (const auto& [u, v] : g.ends) w.edges.push_back({u, v, 1});
  return w;
}

inline WebReport validate_plabic(const PlabicGraph& g) {
  for (int v = 0; v < g.n; ++v)
    if (g.color[v] != Color::Black) return {"bipartite", "boundary vertices must be black"};
  for (const auto& [u, v] : g.ends)
    if (g.color[u] == g.color[v]) return {"bipartite", "edge joins vertices of equal color"};
  return check_embedding(shape_of(g));
}

inline bool plabic_isomorphic(const PlabicGraph& a, const PlabicGraph& b) {
  return isomorphic(shape_of(a), shape_of(b), false);
}

// -- trips -------------------------------------------------------------------------

/// Turn rule at interior vertices: next edge counterclockwise at white, clockwise at black.
struct TripPermutation {
  std::vector<int> target;     // target[i-1] is where the trip from i ends
  std::vector<bool> isolated;  // boundary vertices without edges (reported as fixed points)

  int operator()(int i) const { return target[i - 1]; }
};

inline TripPermutation trip_permutation(const PlabicGraph& g) {
  TripPermutation out;
  out.target.assign(g.n, 0);
  out.isolated.assign(g.n, false);
  const int limit = 2 * g.edge_count() + 2;
  for (int b = 0; b < g.n; ++b) {
    if (g.rotation[b].empty()) {
      out.target[b] = b + 1;
      out.isolated[b] = true;
      continue;
    }
    int e = g.rotation[b].front();
    int v = g.other(e, b);
    int steps = 0;
    while (!g.is_boundary(v)) {
      const auto& r = g.rotation[v];
      const int deg = static_cast<int>(r.size());
      const int i = static_cast<int>(std::find(r.begin(), r.end(), e) - r.begin());
      e = g.color[v] == Color::White ? r[(i + 1) % deg] : r[(i + deg - 1) % deg];
      v = g.other(e, v);
      require(++steps <= limit, "trip_permutation: trip does not reach the boundary");
    }
    out.target[b] = v + 1;
  }
  return out;
}

// -- positroids --------------------------------------------------------------------

/// Matroid on [n] given by its bases (sorted k-subsets).
struct Positroid {
  int k = 0;
  int n = 0;
  std::set<std::vector<int>> bases;

  bool is_basis(std::vector<int> subset) const {
    std::sort(subset.begin(), subset.end());
    return bases.count(subset) != 0;
  }

  friend bool operator==(const Positroid&, const Positroid&) = default;
};

/// Basis exchange: for bases A, B and a in A \ B there is b in B \ A with A - a + b a basis.
inline bool satisfies_exchange(const Positroid& p) {
  if (p.bases.empty()) return false;
  for (const auto& a : p.bases)
    for (const auto& b : p.bases)
      for (int x : a) {
        if (std::binary_search(b.begin(), b.end(), x)) continue;
        bool found = false;
        for (int y : b) {
          if (std::binary_search(a.begin(), a.end(), y)) continue;
          auto c = a;
          c.erase(std::find(c.begin(), c.end(), x));
          c.push_back(y);
          std::sort(c.begin(), c.end());
          if (p.bases.count(c)) {
            found = true;
            break;
          }
        }
        if (!found) return false;
      }
  return true;
}

/// Rank-two positroid whose bases are the pairs meeting two different intervals.
inline Positroid cyclic_interval_positroid(const std::vector<CyclicInterval>& intervals) {
  require(!intervals.empty(), "cyclic_interval_positroid: no intervals");
  const int n = intervals.front().n;
  std::vector<int> owner(n + 1, -1);
  for (std::size_t j = 0; j < intervals.size(); ++j) {
    require(intervals[j].n == n, "cyclic_interval_positroid: intervals on different ground sets");
    for (int v : intervals[j].elements()) {
      require(owner[v] == -1, "cyclic_interval_positroid: intervals overlap");
      owner[v] = static_cast<int>(j);
    }
  }
  for (int v = 1; v <= n; ++v) require(owner[v] >= 0, "cyclic_interval_positroid: intervals do not cover [n]");
  Positroid p{2, n, {}};
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      if (owner[a] != owner[b]) p.bases.insert({a, b});
  return p;
}

/// I_a: the basis that is lexicographically minimal for the order a < a+1 < ... < a-1.
/// Each term is listed in that shifted order.
inline std::vector<std::vector<int>> grassmann_necklace(const Positroid& p) {
  require(!p.bases.empty(), "grassmann_necklace: positroid has no bases");
  std::vector<std::vector<int>> out;
  for (int a = 1; a <= p.n; ++a) {
    auto shift = [&](int v) { return ((v - a) % p.n + p.n) % p.n; };
    std::vector<int> best;
    for (const auto& basis : p.bases) {
      auto s = basis;
      std::sort(s.begin(), s.end(), [&](int x, int y) { return shift(x) < shift(y); });
      std::vector<int> key;
      for (int v : s) key.push_back(shift(v));
      std::vector<int> best_key;
      for (int v : best) best_key.push_back(shift(v));
      if (best.empty() || key < best_key) best = s;
    }
    out.push_back(best);
  }
  return out;
}

// -- dimer covers ------------------------------------------------------------------

/// Edge set covering each interior vertex exactly once; `boundary` lists the covered boundary labels.
struct DimerCover {
  std::vector<int> edges;
  std::vector<int> boundary;

  friend bool operator==(const DimerCover&, const DimerCover&) = default;
  friend auto operator<=>(const DimerCover&, const DimerCover&) = default;
};

inline void for_each_dimer_cover(const PlabicGraph& g, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<bool> covered(g.vertex_count(), false);
  std::vector<int> chosen;
  std::function<void(int)> rec = [&](int from) {
    int v = from;
    while (v < g.vertex_count() && (g.is_boundary(v) || covered[v])) ++v;
    if (v == g.vertex_count()) {
      visit(chosen);
      return;
    }
    covered[v] = true;
    for (int e : g.rotation[v]) {
      int o = g.other(e, v);
      if (covered[o]) continue;
      covered[o] = true;
      chosen.push_back(e);
      rec(v + 1);
      chosen.pop_back();
      covered[o] = false;
    }
    covered[v] = false;
  };
  rec(g.n);
}

inline std::vector<DimerCover> dimer_covers(const PlabicGraph& g) {
  std::vector<DimerCover> out;
  for_each_dimer_cover(g, [&](const std::vector<int>& edges) {
    DimerCover c;
    c.edges = edges;
    std::sort(c.edges.begin(), c.edges.end());
    for (int e : edges) {
      auto [u, v] = g.ends[e];
      if (g.is_boundary(u)) c.boundary.push_back(u + 1);
      if (g.is_boundary(v)) c.boundary.push_back(v + 1);
    }
    std::sort(c.boundary.begin(), c.boundary.end());
    out.push_back(std::move(c));
  });
  std::sort(out.begin(), out.end());
  return out;
}

/// (k, n) with k = #white - #interior black.
inline std::pair<int, int> graph_type(const PlabicGraph& g) {
  return {g.interior_count(Color::White) - g.interior_count(Color::Black), g.n};
}

inline Positroid positroid_of_graph(const PlabicGraph& g) {
  auto [k, n] = graph_type(g);
  Positroid p{k, n, {}};
  for (const auto& c : dimer_covers(g)) p.bases.insert(c.boundary);
  require(!p.bases.empty(), "graph has no cover");
  return p;
}

// -- a top-cell graph of type (k, n) --------------------------------------------------

/// Grid graph on a k x (n-k) array of boxes whose boundary measurements are all
/// nonzero for positive edge weights. Rotations come from the planar drawing.
inline PlabicGraph top_cell_graph(int k, int n) {
  require(k >= 1 && n > k, "top_cell_graph: need 1 <= k < n");
  const int m = n - k;
  PlabicGraph g;
  g.n = n;
  std::vector<std::pair<double, double>> pos;
  for (int label = 1; label <= n; ++label) {
    g.color.push_back(Color::Black);
    if (label <= k)
      pos.emplace_back(m + 1, -label);
    else
      pos.emplace_back(m - (label - k) + 1, -(k + 1));
  }
  auto add_vertex = [&](Color c, double x, double y) {
    g.color.push_back(c);
    pos.emplace_back(x, y);
    return g.vertex_count() - 1;
  };
  auto add_edge = [&](int u, int v) { g.ends.emplace_back(u, v); };
  auto link = [&](int u, int v) {
    if (g.color[u] == g.color[v]) {
      Color c = g.color[u] == Color::White ? Color::Black : Color::White;
      int mid = add_vertex(c, (pos[u].first + pos[v].first) / 2, (pos[u].second + pos[v].second) / 2);
      add_edge(u, mid);
      add_edge(mid, v);
    } else {
      add_edge(u, v);
    }
  };
  std::map<std::pair<int, int>, int> east, west, north, south;
  for (int r = 1; r <= k; ++r)
    for (int c = 1; c <= m; ++c) {
      const bool left = c > 1;
      const bool up = r > 1;
      if (left && up) {
        int a = add_vertex(Color::Black, c + 0.2, -r + 0.2);
        int b = add_vertex(Color::White, c - 0.2, -r - 0.2);
        add_edge(a, b);
        north[{r, c}] = east[{r, c}] = a;
        west[{r, c}] = south[{r, c}] = b;
      } else if (left) {
        int x = add_vertex(Color::White, c, -r);
        east[{r, c}] = west[{r, c}] = south[{r, c}] = x;
      } else if (up) {
        int x = add_vertex(Color::Black, c, -r);
        east[{r, c}] = north[{r, c}] = south[{r, c}] = x;
      } else {
        int x = add_vertex(Color::White, c, -r);
        east[{r, c}] = south[{r, c}] = x;
      }
    }
  for (int r = 1; r <= k; ++r)
    for (int c = 1; c < m; ++c) link(east[{r, c}], west[{r, c + 1}]);
  for (int c = 1; c <= m; ++c)
    for (int r = 1; r < k; ++r) link(south[{r, c}], north[{r + 1, c}]);
  for (int r = 1; r <= k; ++r) link(r - 1, east[{r, m}]);
  for (int c = 1; c <= m; ++c) link(k + (m - c + 1) - 1, south[{k, c}]);

  // Mirror so that the labels run counterclockwise, then sort edges by angle.
  for (auto& p : pos) p.first = -p.first;
  g.rotation.assign(g.vertex_count(), {});
  for (int e = 0; e < g.edge_count(); ++e) {
    g.rotation[g.ends[e].first].push_back(e);
    g.rotation[g.ends[e].second].push_back(e);
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    auto angle = [&](int e) {
      int o = g.other(e, v);
      return std::atan2(pos[o].second - pos[v].second, pos[o].first - pos[v].first);
    };
    std::sort(g.rotation[v].begin(), g.rotation[v].end(), [&](int x, int y) { return angle(x) < angle(y); });
  }
  return g;
}

}  // namespace webforge

#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <tuple>
#include <utility>
#include <vector>

#include "dissections.hpp"
#include "matchings.hpp"
#include "web.hpp"

namespace webforge {

/// A web described by a drawing: boundary vertices and interior vertices at points,
/// edges as (u, v, mult). Rotations are read off by sorting neighbours by angle.
struct WebDrawing {
  int k = 0;
  int n = 0;
  std::vector<std::pair<double, double>> position;  // boundary first, then interior
  std::vector<Color> interior;
  std::vector<std::tuple<int, int, int>> edges;
};

inline WebDiagram web_of_drawing(const WebDrawing& d) {
  require(static_cast<int>(d.position.size()) == d.n + static_cast<int>(d.interior.size()),
          "web_of_drawing: one position per vertex");
  WebDiagram w(d.k, d.n);
  for (Color c : d.interior) w.add_interior(c);
  for (const auto& [u, v, m] : d.edges) {
    int e = w.add_edge(u, v, m);
    w.rotation[u].push_back(e);
    w.rotation[v].push_back(e);
  }
  for (int v = 0; v < w.vertex_count(); ++v) {
    auto angle = [&](int e) {
      int o = w.edges[e].other(v);
      return std::atan2(d.position[o].second - d.position[v].second, d.position[o].first - d.position[v].first);
    };
    std::sort(w.rotation[v].begin(), w.rotation[v].end(), [&](int a, int b) { return angle(a) < angle(b); });
  }
  return w;
}

/// Two weightings of the triangulated square (diagonal 1-3) with equal vertex contents.
/// Their webs share a plabic graph yet have different multiplicities.
inline std::pair<WebDiagram, WebDiagram> same_graph_pair() {
  auto make = [](int bottom, int right, int top, int left) {
    WeightedDissection d{4, {}};
    d.weights[Chord(1, 2)] = bottom;
    d.weights[Chord(2, 3)] = right;
    d.weights[Chord(3, 4)] = top;
    d.weights[Chord(1, 4)] = left;
    d.weights[Chord(1, 3)] = 1;
    return WeightedTriangulation{d};
  };
  std::vector<CyclicInterval> sets{{1, 5, 18}, {6, 4, 18}, {10, 5, 18}, {15, 4, 18}};
  return {web_of_triangulation(make(2, 2, 2, 2), sets), web_of_triangulation(make(1, 3, 1, 3), sets)};
}

/// SL_5 web on the 10-gon with color sets [1,2], [3,4,5], [6,7], [8,9,10] whose two
/// trivalent black vertices sit on the diagonal joining the sets [1,2] and [6,7].
/// `x` is the multiplicity from the first black vertex to the [1,2] white vertex (1 or 2;
/// the two choices are mirror images).
inline WebDiagram noncanonical_sl5_web(int x = 1) {
  require(x == 1 || x == 2, "noncanonical_sl5_web: x must be 1 or 2");
  WebDrawing d;
  d.k = 5;
  d.n = 10;
  const double deg = std::numbers::pi / 5;
  auto polar = [&](double r, double steps) { return std::make_pair(r * std::cos(steps * deg), r * std::sin(steps * deg)); };
  for (int label = 1; label <= 10; ++label) d.position.push_back(polar(1.5, label - 5));
  d.interior = {Color::White, Color::White, Color::White, Color::White, Color::Black, Color::Black};
  d.position.push_back(polar(1.05, -3.5));  // 10: legs 1, 2
  d.position.push_back(polar(1.05, -1));    // 11: legs 3, 4, 5
  d.position.push_back(polar(1.05, 1.5));   // 12: legs 6, 7
  d.position.push_back(polar(1.05, 4));     // 13: legs 8, 9, 10
  d.position.push_back(polar(0.35, -1));    // 14
  d.position.push_back(polar(0.35, 4));     // 15
  for (int label : {1, 2}) d.edges.emplace_back(label - 1, 10, 1);
  for (int label : {3, 4, 5}) d.edges.emplace_back(label - 1, 11, 1);
  for (int label : {6, 7}) d.edges.emplace_back(label - 1, 12, 1);
  for (int label : {8, 9, 10}) d.edges.emplace_back(label - 1, 13, 1);
  d.edges.emplace_back(14, 10, x);
  d.edges.emplace_back(14, 11, 2);
  d.edges.emplace_back(14, 12, 3 - x);
  d.edges.emplace_back(15, 10, 3 - x);
  d.edges.emplace_back(15, 12, x);
  d.edges.emplace_back(15, 13, 2);
  return web_of_drawing(d);
}

}  // namespace webforge

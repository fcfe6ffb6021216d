#pragma once

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "web.hpp"

namespace webforge {

using Point = std::pair<double, double>;

/// Boundary vertices evenly spaced counterclockwise on the unit circle (label 1 at the top),
/// interior vertices at the barycentre of their neighbours.
inline std::vector<Point> radial_layout(const WebDiagram& w, int iterations = 500) {
  std::vector<Point> pos(w.vertex_count(), {0.0, 0.0});
  for (int b = 0; b < w.n; ++b) {
    double angle = std::numbers::pi / 2 + 2 * std::numbers::pi * b / std::max(w.n, 1);
    pos[b] = {std::cos(angle), std::sin(angle)};
  }
  for (int v = w.n; v < w.vertex_count(); ++v) {
    // start near the average of the boundary vertices reachable in one step, if any
    double x = 0, y = 0;
    int count = 0;
    for (int e : w.rotation[v]) {
      int o = w.edges[e].other(v);
      if (w.is_boundary(o)) {
        x += 0.7 * pos[o].first;
        y += 0.7 * pos[o].second;
        ++count;
      }
    }
    if (count) pos[v] = {x / count, y / count};
  }
  for (int it = 0; it < iterations; ++it)
    for (int v = w.n; v < w.vertex_count(); ++v) {
      if (w.rotation[v].empty()) continue;
      double x = 0, y = 0;
      for (int e : w.rotation[v]) {
        int o = w.edges[e].other(v);
        x += pos[o].first;
        y += pos[o].second;
      }
      pos[v] = {x / w.rotation[v].size(), y / w.rotation[v].size()};
    }
  return pos;
}

namespace detail {

inline std::string fixed(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", std::abs(x) < 5e-4 ? 0.0 : x);
  return buf;
}

}  // namespace detail

inline std::string to_dot(const WebDiagram& w, double scale = 4.0) {
  auto pos = radial_layout(w);
  std::ostringstream out;
  out << "graph web {\n  layout=neato;\n  node [shape=circle, width=0.25, fixedsize=true, fontsize=9];\n";
  for (int v = 0; v < w.vertex_count(); ++v) {
    bool black = w.color[v] == Color::Black;
    out << "  v" << v + 1 << " [pos=\"" << detail::fixed(scale * pos[v].first) << "," << detail::fixed(scale * pos[v].second)
        << "!\", style=filled, fillcolor=" << (black ? "black" : "white") << ", fontcolor=" << (black ? "white" : "black")
        << ", label=\"" << (w.is_boundary(v) ? std::to_string(v + 1) : "") << "\"];\n";
  }
  for (const auto& e : w.edges) {
    out << "  v" << e.u + 1 << " -- v" << e.v + 1;
    if (e.mult != 1) out << " [label=\"" << e.mult << "\"]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

inline std::string to_tikz(const WebDiagram& w, double scale = 3.0) {
  auto pos = radial_layout(w);
  std::ostringstream out;
  out << "\\begin{tikzpicture}\n";
  for (int v = 0; v < w.vertex_count(); ++v) {
    out << "  \\node[circle, draw, inner sep=1.5pt, fill=" << (w.color[v] == Color::Black ? "black" : "white") << "] (v"
        << v + 1 << ") at (" << detail::fixed(scale * pos[v].first) << "," << detail::fixed(scale * pos[v].second) << ") {};\n";
    if (w.is_boundary(v))
      out << "  \\node at (" << detail::fixed(1.12 * scale * pos[v].first) << "," << detail::fixed(1.12 * scale * pos[v].second)
          << ") {\\small " << v + 1 << "};\n";
  }
  for (const auto& e : w.edges) {
    out << "  \\draw (v" << e.u + 1 << ") -- (v" << e.v + 1 << ")";
    if (e.mult != 1) out << " node[midway, fill=white, inner sep=1pt] {\\small " << e.mult << "}";
    out << ";\n";
  }
  out << "\\end{tikzpicture}\n";
  return out.str();
}

}  // namespace webforge

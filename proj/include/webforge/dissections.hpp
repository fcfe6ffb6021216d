#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "common.hpp"
#include "matchings.hpp"

namespace webforge {

/// Unordered pair of polygon vertices, stored with a < b.
struct Chord {
  int a = 0;
  int b = 0;

  Chord() = default;
  Chord(int x, int y) : a(std::min(x, y)), b(std::max(x, y)) {}

  friend bool operator==(const Chord&, const Chord&) = default;
  friend auto operator<=>(const Chord&, const Chord&) = default;
};

inline bool is_side(const Chord& c, int s) { return c.b == c.a + 1 || (c.a == 1 && c.b == s); }

inline bool chords_cross(const Chord& x, const Chord& y) {
  return (x.a < y.a && y.a < x.b && x.b < y.b) || (y.a < x.a && x.a < y.b && y.b < x.b);
}

/// Weighted noncrossing chord system of an s-gon; sides count as chords.
/// Keys are the chords present in the dissection (a present chord may have weight 0).
struct WeightedDissection {
  int s = 0;
  std::map<Chord, int> weights;

  int weight(const Chord& c) const {
    auto it = weights.find(c);
    return it == weights.end() ? 0 : it->second;
  }

  bool contains(const Chord& c) const { return weights.count(c) != 0; }

  int total_weight() const {
    int w = 0;
    for (const auto& [c, x] : weights) w += x;
    return w;
  }

  /// d_i: total weight of chords at vertex i (index 0 unused).
  std::vector<int> content() const {
    std::vector<int> d(s + 1, 0);
    for (const auto& [c, x] : weights) {
      d[c.a] += x;
      d[c.b] += x;
    }
    return d;
  }

  friend bool operator==(const WeightedDissection&, const WeightedDissection&) = default;
};

using Triangle = std::array<int, 3>;  // increasing vertex labels

/// A weighted dissection whose chord set is a triangulation (sides plus s-3 diagonals).
/// For s = 2 this is the degenerate 2-gon with one edge and no triangles.
struct WeightedTriangulation {
  WeightedDissection dissection;

  int s() const { return dissection.s; }
  int weight(const Chord& c) const { return dissection.weight(c); }

  std::vector<Triangle> triangles() const {
    std::vector<Triangle> out;
    const int s = dissection.s;
    for (int x = 1; x <= s; ++x)
      for (int y = x + 1; y <= s; ++y) {
        if (!dissection.contains({x, y})) continue;
        for (int z = y + 1; z <= s; ++z)
          if (dissection.contains({x, z}) && dissection.contains({y, z})) out.push_back({x, y, z});
      }
    return out;
  }

  friend bool operator==(const WeightedTriangulation&, const WeightedTriangulation&) = default;
};

inline void validate(const WeightedDissection& d) {
  require(d.s >= 2, "dissection needs at least two polygon vertices");
  std::vector<Chord> chords;
  for (const auto& [c, w] : d.weights) {
    require(c.a >= 1 && c.b <= d.s && c.a < c.b, "chord outside polygon");
    require(w >= 0, "chord weights must be nonnegative");
    chords.push_back(c);
  }
  for (std::size_t i = 0; i < chords.size(); ++i)
    for (std::size_t j = i + 1; j < chords.size(); ++j)
      require(!chords_cross(chords[i], chords[j]), "dissection chords cross");
}

inline void validate(const WeightedTriangulation& t) {
  validate(t.dissection);
  const int s = t.s();
  if (s < 3) return;
  for (int i = 1; i <= s; ++i) require(t.dissection.contains({i, i % s + 1}), "triangulation misses a side");
  require(static_cast<int>(t.dissection.weights.size()) == 2 * s - 3,
          "triangulation must have 2s-3 chords");
}

/// Merge each color set of M to one polygon vertex; chord weights count arcs between sets.
inline WeightedDissection dissection_of_matching(const NoncrossingMatching& m) {
  auto sets = color_sets(m);
  const int s = static_cast<int>(sets.size());
  std::vector<int> color(m.size() + 1, 0);
  for (int j = 0; j < s; ++j)
    for (int v : sets[j].elements()) color[v] = j + 1;
  WeightedDissection d{s, {}};
  for (const auto& [x, y] : m.arcs) {
    require(color[x] != color[y], "monochromatic arc");
    d.weights[Chord(color[x], color[y])] += 1;
  }
  return d;
}

namespace detail {

inline bool compatible(const Chord& c, const std::vector<Chord>& required) {
  return std::none_of(required.begin(), required.end(),
                      [&](const Chord& r) { return chords_cross(c, r); });
}

// Triangulations of the convex polygon verts[lo..hi] avoiding chords that cross `required`.
inline std::vector<std::vector<Chord>> triangulate(const std::vector<int>& verts, std::size_t lo,
                                                   std::size_t hi, const std::vector<Chord>& required) {
  if (hi - lo < 2) return {{}};
  std::vector<std::vector<Chord>> out;
  for (std::size_t m = lo + 1; m < hi; ++m) {
    Chord left(verts[lo], verts[m]);
    Chord right(verts[m], verts[hi]);
    if (!compatible(left, required) || !compatible(right, required)) continue;
    auto ls = triangulate(verts, lo, m, required);
    if (ls.empty()) continue;
    auto rs = triangulate(verts, m, hi, required);
    for (const auto& l : ls)
      for (const auto& r : rs) {
        std::vector<Chord> tri = l;
        tri.insert(tri.end(), r.begin(), r.end());
        if (m != lo + 1) tri.push_back(left);
        if (m + 1 != hi) tri.push_back(right);
        out.push_back(std::move(tri));
      }
  }
  return out;
}

}  // namespace detail

/// Every triangulation of the s-gon (unweighted diagonal sets), optionally containing `required`.
inline std::vector<std::vector<Chord>> triangulations_containing(int s, const std::vector<Chord>& required) {
  std::vector<int> verts(s);
  std::iota(verts.begin(), verts.end(), 1);
  auto raw = detail::triangulate(verts, 0, static_cast<std::size_t>(s - 1), required);
  for (auto& t : raw) std::sort(t.begin(), t.end());
  return raw;
}

/// Every weighted triangulation extending d by weight-zero chords.
inline std::vector<WeightedTriangulation> triangulation_extensions(const WeightedDissection& d) {
  validate(d);
  if (d.s < 3) return {WeightedTriangulation{d}};
  std::vector<Chord> required;
  for (const auto& [c, w] : d.weights)
    if (!is_side(c, d.s)) required.push_back(c);
  std::vector<WeightedTriangulation> out;
  for (const auto& diagonals : triangulations_containing(d.s, required)) {
    WeightedDissection t{d.s, {}};
    for (int i = 1; i <= d.s; ++i) t.weights[Chord(i, i % d.s + 1)] = d.weight(Chord(i, i % d.s + 1));
    for (const auto& c : diagonals) t.weights[c] = d.weight(c);
    out.push_back(WeightedTriangulation{std::move(t)});
  }
  return out;
}

/// Replaces a weight-zero diagonal by the other diagonal of its quadrilateral.
inline WeightedTriangulation flip(const WeightedTriangulation& t, const Chord& diagonal) {
  const int s = t.s();
  require(s >= 4, "flip needs a polygon with at least four vertices");
  require(t.dissection.contains(diagonal) && !is_side(diagonal, s), "flip: not a diagonal of the triangulation");
  require(t.weight(diagonal) == 0, "flip: diagonal has positive weight");
  std::vector<int> apex;
  for (const auto& tri : t.triangles()) {
    int hits = 0;
    int other = 0;
    for (int v : tri) {
      if (v == diagonal.a || v == diagonal.b)
        ++hits;
      else
        other = v;
    }
    if (hits == 2) apex.push_back(other);
  }
  require(apex.size() == 2, "flip: diagonal does not bound two triangles");
  WeightedTriangulation out = t;
  out.dissection.weights.erase(diagonal);
  out.dissection.weights[Chord(apex[0], apex[1])] = 0;
  return out;
}

}  // namespace webforge

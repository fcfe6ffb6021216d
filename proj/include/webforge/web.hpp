#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "common.hpp"
#include "dissections.hpp"
#include "matchings.hpp"
#include "tableaux.hpp"

namespace webforge {

enum class Color { Black, White };

inline const char* color_name(Color c) { return c == Color::Black ? "b" : "w"; }

struct WebEdge {
  int u = 0;
  int v = 0;
  int mult = 1;

  int other(int x) const { return x == u ? v : u; }
  friend bool operator==(const WebEdge&, const WebEdge&) = default;
};

/// SL_k web diagram in a disk.
///
/// Vertices 0..n-1 are the boundary vertices 1..n (always black); the rest are
/// interior. `rotation[v]` lists the edges at v in counterclockwise order, with
/// the boundary labels increasing counterclockwise around the disk.
struct WebDiagram {
  int k = 0;
  int n = 0;
  std::vector<Color> color;
  std::vector<WebEdge> edges;
  std::vector<std::vector<int>> rotation;

  WebDiagram() = default;
  WebDiagram(int k_, int n_) : k(k_), n(n_), color(n_, Color::Black), rotation(n_) {}

  int vertex_count() const { return static_cast<int>(color.size()); }
  int edge_count() const { return static_cast<int>(edges.size()); }
  bool is_boundary(int v) const { return v < n; }

  int add_interior(Color c) {
    color.push_back(c);
    rotation.emplace_back();
    return vertex_count() - 1;
  }

  // Appends an edge; callers place it into the rotations themselves.
  int add_edge(int u, int v, int mult) {
    edges.push_back({u, v, mult});
    return edge_count() - 1;
  }

  int interior_count(Color c) const {
    int count = 0;
    for (int v = n; v < vertex_count(); ++v)
      if (color[v] == c) ++count;
    return count;
  }

  /// Number of legs at each boundary vertex.
  std::vector<int> content() const {
    std::vector<int> d(n, 0);
    for (const auto& e : edges) {
      if (is_boundary(e.u)) ++d[e.u];
      if (is_boundary(e.v)) ++d[e.v];
    }
    return d;
  }

  int degree() const {
    auto d = content();
    int total = std::accumulate(d.begin(), d.end(), 0);
    return k == 0 ? 0 : total / k;
  }

  bool is_standard() const {
    auto d = content();
    return std::all_of(d.begin(), d.end(), [](int x) { return x == 1; });
  }

  /// The unique leg at boundary vertex `label` (1-based), or -1.
  int leg(int label) const {
    const auto& r = rotation[label - 1];
    return r.size() == 1 ? r.front() : -1;
  }

  friend bool operator==(const WebDiagram&, const WebDiagram&) = default;
};

/// Outcome of validate_web; `code` is empty when the web is valid.
struct WebReport {
  std::string code;
  std::string message;

  bool ok() const { return code.empty(); }
};

namespace detail {

inline WebReport violation(std::string code, std::string message) {
  return WebReport{std::move(code), std::move(message)};
}

// Rotation per vertex with the boundary circle spliced in; circle edge j joins
// boundary j to boundary j+1 and gets id edge_count + j.
inline std::vector<std::vector<int>> rotations_with_circle(const WebDiagram& w) {
  auto rot = w.rotation;
  if (w.n < 2) return rot;
  const int base = w.edge_count();
  for (int j = 0; j < w.n; ++j) {
    int next = base + j;
    int prev = base + (j + w.n - 1) % w.n;
    rot[j].insert(rot[j].begin(), next);
    rot[j].push_back(prev);
  }
  return rot;
}

inline std::pair<int, int> ends_with_circle(const WebDiagram& w, int e) {
  if (e < w.edge_count()) return {w.edges[e].u, w.edges[e].v};
  int j = e - w.edge_count();
  return {j, (j + 1) % w.n};
}

}  // namespace detail

/// Planarity of the rotation system with the boundary circle added, and the
/// boundary vertices 1..n in order around the outer face. Multiplicities are ignored.
inline WebReport check_embedding(const WebDiagram& w) {
  using detail::violation;
  const int nv = w.vertex_count();
  auto rot = detail::rotations_with_circle(w);
  const int total_edges = w.edge_count() + (w.n >= 2 ? w.n : 0);
  std::map<std::pair<int, int>, int> where;  // (vertex, edge) -> index in rot
  for (int v = 0; v < nv; ++v)
    for (int i = 0; i < static_cast<int>(rot[v].size()); ++i) where[{v, rot[v][i]}] = i;
  // dart id: 2*e for u->v, 2*e+1 for v->u
  auto dart_tail = [&](int d) {
    auto [a, b] = detail::ends_with_circle(w, d / 2);
    return d % 2 == 0 ? a : b;
  };
  auto dart_head = [&](int d) {
    auto [a, b] = detail::ends_with_circle(w, d / 2);
    return d % 2 == 0 ? b : a;
  };
  auto next_dart = [&](int d) {
    int v = dart_head(d);
    int e = d / 2;
    int i = where.at({v, e});
    int e2 = rot[v][(i + 1) % rot[v].size()];
    auto [a, b] = detail::ends_with_circle(w, e2);
    if (a == b) return 2 * e2 + (d % 2 == 0 ? 1 : 0);  // loop, not produced by valid webs
    return a == v ? 2 * e2 : 2 * e2 + 1;
  };
  std::vector<int> face_of(2 * total_edges, -1);
  int faces = 0;
  std::vector<int> face_component;
  // components by union-find
  std::vector<int> parent(nv);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (int e = 0; e < total_edges; ++e) {
    auto [a, b] = detail::ends_with_circle(w, e);
    parent[find(a)] = find(b);
  }
  for (int d = 0; d < 2 * total_edges; ++d) {
    if (face_of[d] >= 0) continue;
    int cur = d;
    while (face_of[cur] < 0) {
      face_of[cur] = faces;
      cur = next_dart(cur);
    }
    face_component.push_back(find(dart_tail(d)));
    ++faces;
  }
  std::map<int, int> chi;
  for (int v = 0; v < nv; ++v) chi[find(v)] += 1;
  for (int e = 0; e < total_edges; ++e) chi[find(detail::ends_with_circle(w, e).first)] -= 1;
  for (int f = 0; f < faces; ++f) chi[face_component[f]] += 1;
  for (int v = 0; v < nv; ++v)
    if (rot[v].empty()) chi[find(v)] += 1;  // isolated vertex bounds one face
  for (const auto& [comp, x] : chi)
    if (x != 2) return violation("planarity", "rotation system is not planar");

  if (w.n >= 2) {
    int outer = face_of[2 * w.edge_count()];
    int size = static_cast<int>(std::count(face_of.begin(), face_of.end(), outer));
    if (size != w.n) return violation("boundary order", "boundary vertices are not on the outer face in order");
  }
  return {};
}

/// Checks the web axioms and reports the first violation found.
inline WebReport validate_web(const WebDiagram& w) {
  using detail::violation;
  const int nv = w.vertex_count();
  if (w.k < 0) return violation("multiplicity range", "k must be nonnegative");
  if (static_cast<int>(w.rotation.size()) != nv) return violation("rotation", "rotation table size mismatch");
  for (int v = 0; v < w.n; ++v)
    if (w.color[v] != Color::Black) return violation("bipartite", "boundary vertices must be black");

  std::vector<int> sum(nv, 0);
  std::vector<int> deg(nv, 0);
  for (int e = 0; e < w.edge_count(); ++e) {
    const auto& ed = w.edges[e];
    if (ed.u < 0 || ed.v < 0 || ed.u >= nv || ed.v >= nv)
      return violation("rotation", "edge " + std::to_string(e) + " has an invalid endpoint");
    if (w.color[ed.u] == w.color[ed.v])
      return violation("bipartite", "edge " + std::to_string(e) + " joins vertices of equal color");
    if (ed.mult < 0 || ed.mult > w.k)
      return violation("multiplicity range", "edge " + std::to_string(e) + " multiplicity outside [0,k]");
    if ((w.is_boundary(ed.u) || w.is_boundary(ed.v)) && ed.mult != 1)
      return violation("boundary edge multiplicity", "boundary edge " + std::to_string(e) + " must have multiplicity 1");
    sum[ed.u] += ed.mult;
    sum[ed.v] += ed.mult;
    ++deg[ed.u];
    ++deg[ed.v];
  }
  for (int v = w.n; v < nv; ++v)
    if (sum[v] != w.k)
      return violation("vertex sum", "interior vertex " + std::to_string(v) + " has multiplicity sum " +
                                         std::to_string(sum[v]) + " != " + std::to_string(w.k));

  for (int v = 0; v < nv; ++v) {
    auto r = w.rotation[v];
    if (static_cast<int>(r.size()) != deg[v])
      return violation("rotation", "rotation at vertex " + std::to_string(v) + " has wrong length");
    std::sort(r.begin(), r.end());
    if (std::adjacent_find(r.begin(), r.end()) != r.end())
      return violation("rotation", "rotation at vertex " + std::to_string(v) + " repeats an edge");
    for (int e : r)
      if (e < 0 || e >= w.edge_count() || (w.edges[e].u != v && w.edges[e].v != v))
        return violation("rotation", "rotation at vertex " + std::to_string(v) + " lists a foreign edge");
  }

  return check_embedding(w);
}

inline void require_valid(const WebDiagram& w) {
  auto r = validate_web(w);
  require(r.ok(), "invalid web: " + r.code + ": " + r.message);
}

// -- constructions -------------------------------------------------------------

/// One white vertex joined to each boundary vertex of I.
inline WebDiagram claw_web(const std::vector<int>& subset, int k, int n) {
  require(static_cast<int>(subset.size()) == k, "claw_web: |I| must equal k");
  auto legs = subset;
  std::sort(legs.begin(), legs.end());
  require(std::adjacent_find(legs.begin(), legs.end()) == legs.end(), "claw_web: repeated vertex");
  WebDiagram w(k, n);
  int white = w.add_interior(Color::White);
  for (int label : legs) {
    require(label >= 1 && label <= n, "claw_web: vertex outside [n]");
    int e = w.add_edge(label - 1, white, 1);
    w.rotation[label - 1].push_back(e);
    w.rotation[white].push_back(e);
  }
  return w;
}

/// The SL_2 web W_M: one bivalent white vertex per arc.
inline WebDiagram sl2_web_of_matching(const NoncrossingMatching& m) {
  WebDiagram w(2, m.size());
  for (const auto& [a, b] : m.arcs) {
    int white = w.add_interior(Color::White);
    int ea = w.add_edge(a - 1, white, 1);
    int eb = w.add_edge(b - 1, white, 1);
    w.rotation[a - 1].push_back(ea);
    w.rotation[b - 1].push_back(eb);
    w.rotation[white] = {ea, eb};
  }
  return w;
}

/// Sum of the weights of chords inside the sub-polygon cut off by chord (from, to),
/// walking from `from` to `to` in increasing cyclic order.
inline int region_weight(const WeightedTriangulation& t, int from, int to) {
  const int s = t.s();
  auto offset = [&](int v) { return ((v - from) % s + s) % s; };
  const int span = offset(to);
  int total = 0;
  for (const auto& [c, wgt] : t.dissection.weights)
    if (offset(c.a) <= span && offset(c.b) <= span) total += wgt;
  return total;
}

/// W(t): a white vertex per polygon vertex, a black vertex per triangle, and legs
/// from white vertex i to the boundary vertices of color set i.
inline WebDiagram web_of_triangulation(const WeightedTriangulation& t, const std::vector<CyclicInterval>& sets) {
  validate(t);
  const int s = t.s();
  require(static_cast<int>(sets.size()) == s, "web_of_triangulation: need one color set per polygon vertex");
  const int k = t.dissection.total_weight();
  const int n = 2 * k;
  auto d = t.dissection.content();
  std::vector<int> owner(n + 1, 0);
  for (int i = 0; i < s; ++i) {
    require(sets[i].n == n, "web_of_triangulation: color sets must live on [2k]");
    require(sets[i].length == d[i + 1], "web_of_triangulation: color set size differs from vertex content");
    for (int v : sets[i].elements()) {
      require(owner[v] == 0, "web_of_triangulation: color sets overlap");
      owner[v] = i + 1;
    }
  }

  WebDiagram w(k, n);
  std::vector<int> white(s + 1);
  for (int i = 1; i <= s; ++i) white[i] = w.add_interior(Color::White);
  for (int i = 1; i <= s; ++i)
    for (int v : sets[i - 1].elements()) {
      int e = w.add_edge(v - 1, white[i], 1);
      w.rotation[v - 1].push_back(e);
      w.rotation[white[i]].push_back(e);
    }

  // Interior edges at each white vertex, keyed by the triangle's nearest other vertex.
  std::vector<std::vector<std::pair<int, int>>> fan(s + 1);
  for (const auto& tri : t.triangles()) {
    int black = w.add_interior(Color::Black);
    for (int c = 0; c < 3; ++c) {
      int a = tri[c];
      int b = tri[(c + 1) % 3];
      int cc = tri[(c + 2) % 3];
      int mult = region_weight(t, b, cc);
      if (mult == 0) continue;
      int e = w.add_edge(black, white[a], mult);
      w.rotation[black].push_back(e);
      auto off = [&](int v) { return ((v - a) % s + s) % s; };
      fan[a].emplace_back(std::min(off(b), off(cc)), e);
    }
  }
  for (int i = 1; i <= s; ++i) {
    std::sort(fan[i].begin(), fan[i].end());
    for (const auto& [key, e] : fan[i]) w.rotation[white[i]].push_back(e);
  }
  return w;
}

/// Moves leg e_i of a standard web on [2k] to boundary vertex a_i of [n].
inline WebDiagram reattach_boundary(const WebDiagram& hat, const ContentEncoding& enc) {
  require(hat.is_standard(), "reattach_boundary: web must be standard");
  require(enc.length() == hat.n, "reattach_boundary: encoding length must match boundary size");
  const int n = enc.n();
  const int shift = n - hat.n;
  WebDiagram w;
  w.k = hat.k;
  w.n = n;
  w.color.assign(n, Color::Black);
  for (int v = hat.n; v < hat.vertex_count(); ++v) w.color.push_back(hat.color[v]);
  w.rotation.assign(w.color.size(), {});
  auto remap = [&](int v) { return hat.is_boundary(v) ? enc.a[v] - 1 : v + shift; };
  for (const auto& e : hat.edges) w.edges.push_back({remap(e.u), remap(e.v), e.mult});
  for (int v = hat.n; v < hat.vertex_count(); ++v) w.rotation[v + shift] = hat.rotation[v];
  // Legs at a doubled vertex sit adjacent; counterclockwise the later index comes first.
  for (int i = hat.n; i >= 1; --i) w.rotation[enc.a[i - 1] - 1].push_back(hat.leg(i));
  return w;
}

/// Inverse of reattach_boundary: splits every boundary vertex into one vertex per leg.
inline std::pair<WebDiagram, ContentEncoding> standard_form(const WebDiagram& w) {
  auto d = w.content();
  for (int x : d) require(x <= 2, "standard_form: boundary vertex with more than two legs");
  auto enc = ContentEncoding::from_content(d);
  const int m = enc.length();
  WebDiagram hat;
  hat.k = w.k;
  hat.n = m;
  hat.color.assign(m, Color::Black);
  for (int v = w.n; v < w.vertex_count(); ++v) hat.color.push_back(w.color[v]);
  hat.rotation.assign(hat.color.size(), {});
  hat.edges = w.edges;
  const int shift = m - w.n;
  for (auto& e : hat.edges) {
    if (!w.is_boundary(e.u)) e.u += shift;
    if (!w.is_boundary(e.v)) e.v += shift;
  }
  for (int v = w.n; v < w.vertex_count(); ++v) hat.rotation[v + shift] = w.rotation[v];
  int next = 0;
  for (int b = 0; b < w.n; ++b) {
    const auto& legs = w.rotation[b];
    for (auto it = legs.rbegin(); it != legs.rend(); ++it) {
      auto& e = hat.edges[*it];
      if (e.u == b)
        e.u = next;
      else
        e.v = next;
      hat.rotation[next].push_back(*it);
      ++next;
    }
  }
  return {std::move(hat), std::move(enc)};
}

/// Drops the given edges, renumbering the remaining edges.
inline WebDiagram remove_edges(const WebDiagram& w, const std::vector<bool>& drop) {
  WebDiagram out = w;
  std::vector<int> remap(w.edge_count(), -1);
  out.edges.clear();
  for (int e = 0; e < w.edge_count(); ++e)
    if (!drop[e]) {
      remap[e] = out.edge_count();
      out.edges.push_back(w.edges[e]);
    }
  for (auto& r : out.rotation) {
    std::vector<int> kept;
    for (int e : r)
      if (remap[e] >= 0) kept.push_back(remap[e]);
    r = std::move(kept);
  }
  return out;
}

/// Drops interior vertices flagged in `drop` (they must have no edges left).
inline WebDiagram remove_vertices(const WebDiagram& w, const std::vector<bool>& drop) {
  std::vector<int> remap(w.vertex_count(), -1);
  WebDiagram out;
  out.k = w.k;
  out.n = w.n;
  for (int v = 0; v < w.vertex_count(); ++v)
    if (w.is_boundary(v) || !drop[v]) {
      remap[v] = static_cast<int>(out.color.size());
      out.color.push_back(w.color[v]);
      out.rotation.push_back(w.rotation[v]);
    }
  out.edges = w.edges;
  for (auto& e : out.edges) {
    e.u = remap[e.u];
    e.v = remap[e.v];
    require(e.u >= 0 && e.v >= 0, "remove_vertices: removed vertex still has edges");
  }
  return out;
}

/// W \ pi: decrements multiplicities along a dimer cover, dropping edges that reach zero.
inline WebDiagram remove_dimer(const WebDiagram& w, const std::vector<int>& cover) {
  require(w.k >= 1, "remove_dimer: web must have k >= 1");
  std::vector<int> hits(w.vertex_count(), 0);
  std::vector<bool> used(w.edge_count(), false);
  for (int e : cover) {
    require(e >= 0 && e < w.edge_count() && !used[e], "remove_dimer: bad edge in cover");
    used[e] = true;
    ++hits[w.edges[e].u];
    ++hits[w.edges[e].v];
  }
  for (int v = w.n; v < w.vertex_count(); ++v)
    require(hits[v] == 1, "remove_dimer: edge set is not a dimer cover");
  for (int v = 0; v < w.n; ++v) require(hits[v] <= 1, "remove_dimer: boundary vertex covered twice");
  WebDiagram out = w;
  out.k = w.k - 1;
  std::vector<bool> drop(w.edge_count(), false);
  for (int e : cover)
    if (--out.edges[e].mult == 0) drop[e] = true;
  return remove_edges(out, drop);
}

/// Merges the two interior neighbours of every bivalent interior vertex until none remain.
/// The multiplicities at a bivalent vertex sum to k, so consistent labelings are preserved.
inline WebDiagram contract_bivalent(const WebDiagram& input) {
  WebDiagram w = input;
  for (;;) {
    int target = -1;
    for (int v = w.n; v < w.vertex_count() && target < 0; ++v) {
      if (w.rotation[v].size() != 2) continue;
      int u1 = w.edges[w.rotation[v][0]].other(v);
      int u2 = w.edges[w.rotation[v][1]].other(v);
      if (!w.is_boundary(u1) && !w.is_boundary(u2)) target = v;
    }
    if (target < 0) return w;
    const int v = target;
    const int e1 = w.rotation[v][0];
    const int e2 = w.rotation[v][1];
    require(w.edges[e1].mult + w.edges[e2].mult == w.k, "contract_bivalent: multiplicities at a bivalent vertex must sum to k");
    const int u1 = w.edges[e1].other(v);
    const int u2 = w.edges[e2].other(v);
    std::vector<bool> drop_edges(w.edge_count(), false);
    drop_edges[e1] = drop_edges[e2] = true;
    std::vector<bool> drop_vertices(w.vertex_count(), false);
    drop_vertices[v] = true;
    if (u1 != u2) {
      // Splice: u1's edges after e1, then u2's edges after e2.
      auto tail = [&](int u, int e) {
        const auto& r = w.rotation[u];
        auto it = std::find(r.begin(), r.end(), e);
        std::vector<int> out(it + 1, r.end());
        out.insert(out.end(), r.begin(), it);
        return out;
      };
      auto merged = tail(u1, e1);
      auto rest = tail(u2, e2);
      merged.insert(merged.end(), rest.begin(), rest.end());
      for (int e : rest) {
        auto& ed = w.edges[e];
        if (ed.u == u2) ed.u = u1;
        if (ed.v == u2) ed.v = u1;
      }
      w.rotation[u1] = std::move(merged);
      w.rotation[u2].clear();
      drop_vertices[u2] = true;
    }
    w.rotation[v].clear();
    w = remove_vertices(remove_edges(w, drop_edges), drop_vertices);
  }
}

/// Drops boundary vertices without legs and relabels the rest order-preservingly.
inline WebDiagram restrict_to_legs(const WebDiagram& w, std::vector<int>* kept_labels = nullptr) {
  auto d = w.content();
  std::vector<int> remap(w.vertex_count(), -1);
  WebDiagram out;
  out.k = w.k;
  int nb = 0;
  for (int v = 0; v < w.n; ++v)
    if (d[v] > 0) {
      remap[v] = nb++;
      if (kept_labels) kept_labels->push_back(v + 1);
    }
  out.n = nb;
  out.color.assign(nb, Color::Black);
  out.rotation.assign(nb, {});
  for (int v = 0; v < w.n; ++v)
    if (remap[v] >= 0) out.rotation[remap[v]] = w.rotation[v];
  for (int v = w.n; v < w.vertex_count(); ++v) {
    remap[v] = static_cast<int>(out.color.size());
    out.color.push_back(w.color[v]);
    out.rotation.push_back(w.rotation[v]);
  }
  out.edges = w.edges;
  for (auto& e : out.edges) {
    e.u = remap[e.u];
    e.v = remap[e.v];
  }
  return out;
}

/// Rotation-preserving isomorphism fixing every boundary label. Components that
/// never reach the boundary are ignored.
inline bool isomorphic(const WebDiagram& x, const WebDiagram& y, bool compare_multiplicities = true) {
  if (x.n != y.n) return false;
  if (compare_multiplicities && x.k != y.k) return false;
  std::vector<int> vmap(x.vertex_count(), -1);
  std::vector<int> emap(x.edge_count(), -1);
  std::queue<std::pair<int, int>> work;  // (x-vertex, y-vertex) aligned through edge pairs
  auto match_at = [&](int vx, int vy, int ex, int ey) {
    const auto& rx = x.rotation[vx];
    const auto& ry = y.rotation[vy];
    if (rx.size() != ry.size()) return false;
    const auto ix = std::find(rx.begin(), rx.end(), ex) - rx.begin();
    const auto iy = std::find(ry.begin(), ry.end(), ey) - ry.begin();
    const auto deg = static_cast<long>(rx.size());
    for (long j = 0; j < deg; ++j) {
      int fx = rx[(ix + j) % deg];
      int fy = ry[(iy + j) % deg];
      if (emap[fx] == -1) {
        emap[fx] = fy;
        int ox = x.edges[fx].other(vx);
        int oy = y.edges[fy].other(vy);
        if (compare_multiplicities && x.edges[fx].mult != y.edges[fy].mult) return false;
        if (x.is_boundary(ox) != y.is_boundary(oy)) return false;
        if (x.is_boundary(ox) && ox != oy) return false;
        if (x.color[ox] != y.color[oy]) return false;
        if (vmap[ox] == -1) {
          vmap[ox] = oy;
          work.push({ox, oy});
        } else if (vmap[ox] != oy) {
          return false;
        }
      } else if (emap[fx] != fy) {
        return false;
      }
    }
    return true;
  };
  for (int b = 0; b < x.n; ++b) {
    if (x.rotation[b].size() != y.rotation[b].size()) return false;
    vmap[b] = b;
  }
  for (int b = 0; b < x.n; ++b) {
    if (x.rotation[b].empty()) continue;
    if (!match_at(b, b, x.rotation[b].front(), y.rotation[b].front())) return false;
  }
  while (!work.empty()) {
    auto [vx, vy] = work.front();
    work.pop();
    // Align through any already-mapped edge at vx.
    int ex = -1;
    for (int e : x.rotation[vx])
      if (emap[e] >= 0) {
        ex = e;
        break;
      }
    if (ex < 0) return false;
    if (!match_at(vx, vy, ex, emap[ex])) return false;
  }
  return true;
}

// -- the tableau-to-web map ------------------------------------------------------

/// Selects which triangulation extension(s) tableau_to_web builds.
struct ExtensionChoice {
  std::optional<int> index;  // empty means all

  static ExtensionChoice all() { return {}; }
  static ExtensionChoice single(int i) { return {i}; }
};

/// Standard-tableau pipeline intermediates, exposed for inspection and tests.
struct PipelineStages {
  StandardTableau tableau;
  NoncrossingMatching matching;
  std::vector<CyclicInterval> colors;
  WeightedDissection dissection;
  std::vector<WeightedTriangulation> extensions;
};

inline PipelineStages pipeline_stages(const StandardTableau& t) {
  validate(t);
  PipelineStages p;
  p.tableau = t;
  p.matching = catalan_bijection(t);
  p.colors = color_sets(p.matching);
  p.dissection = dissection_of_matching(p.matching);
  p.extensions = triangulation_extensions(p.dissection);
  return p;
}

inline std::vector<WebDiagram> tableau_to_web(const SemistandardTableau& t,
                                              ExtensionChoice which = ExtensionChoice::single(0)) {
  auto [hat_t, enc] = standardize(t);
  auto stages = pipeline_stages(hat_t);
  std::vector<WebDiagram> out;
  auto build = [&](const WeightedTriangulation& tri) {
    auto w = web_of_triangulation(tri, stages.colors);
    out.push_back(enc.is_identity() ? std::move(w) : reattach_boundary(w, enc));
  };
  if (which.index) {
    require(*which.index >= 0 && *which.index < static_cast<int>(stages.extensions.size()),
            "tableau_to_web: extension index out of range");
    build(stages.extensions[*which.index]);
  } else {
    for (const auto& tri : stages.extensions) build(tri);
  }
  return out;
}

inline std::vector<WebDiagram> tableau_to_web(const StandardTableau& t,
                                              ExtensionChoice which = ExtensionChoice::single(0)) {
  return tableau_to_web(as_semistandard(t), which);
}

}  // namespace webforge

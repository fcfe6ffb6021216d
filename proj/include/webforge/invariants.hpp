#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "common.hpp"
#include "matchings.hpp"
#include "tableaux.hpp"
#include "web.hpp"

namespace webforge {

using LabelSet = std::uint32_t;  // bit j-1 set means j in the label

inline std::vector<int> label_elements(LabelSet s) {
  std::vector<int> out;
  for (int j = 0; s >> j; ++j)
    if (s >> j & 1u) out.push_back(j + 1);
  return out;
}

inline std::string label_string(LabelSet s) {
  std::string out;
  for (int j : label_elements(s)) out += std::to_string(j);
  return out;
}

/// One subset of [k] per edge of the web, indexed by edge id.
struct ConsistentLabeling {
  std::vector<LabelSet> labels;

  friend bool operator==(const ConsistentLabeling&, const ConsistentLabeling&) = default;
  friend auto operator<=>(const ConsistentLabeling&, const ConsistentLabeling&) = default;
};

namespace detail {

// Backtracking over interior vertices; at each vertex the still-free incident edges
// split the labels not yet used there. Legs may be pinned in advance.
class LabelingSearch {
public:
  using Visitor = std::function<void(const std::vector<LabelSet>&)>;

  LabelingSearch(const WebDiagram& w, const std::vector<LabelSet>& pinned) : w_(w), labels_(pinned) {
    require(w.k >= 0 && w.k <= 31, "labelings: k out of range");
    full_ = w.k == 0 ? 0u : (w.k == 32 ? ~0u : ((1u << w.k) - 1u));
    used_.assign(w.vertex_count(), 0u);
    ok_ = true;
    for (int e = 0; e < w.edge_count(); ++e) {
      if (labels_[e] == kFree) continue;
      if (std::popcount(labels_[e]) != w.edges[e].mult || (labels_[e] & ~full_)) ok_ = false;
      for (int v : {w.edges[e].u, w.edges[e].v}) {
        if (w.is_boundary(v)) continue;
        if (used_[v] & labels_[e]) ok_ = false;
        used_[v] |= labels_[e];
      }
    }
    order_ = vertex_order();
  }

  static constexpr LabelSet kFree = 0xFFFFFFFFu;

  void run(const Visitor& visit) {
    if (!ok_) return;
    visit_ = &visit;
    step(0);
  }

private:
  std::vector<int> vertex_order() const {
    // BFS from the boundary so that pinned legs constrain early vertices.
    std::vector<int> order;
    std::vector<bool> seen(w_.vertex_count(), false);
    std::queue<int> q;
    for (int b = 0; b < w_.n; ++b) {
      seen[b] = true;
      q.push(b);
    }
    auto drain = [&] {
      while (!q.empty()) {
        int v = q.front();
        q.pop();
        if (!w_.is_boundary(v)) order.push_back(v);
        for (int e : w_.rotation[v]) {
          int o = w_.edges[e].other(v);
          if (!seen[o]) {
            seen[o] = true;
            q.push(o);
          }
        }
      }
    };
    drain();
    for (int v = w_.n; v < w_.vertex_count(); ++v)
      if (!seen[v]) {
        seen[v] = true;
        q.push(v);
        drain();
      }
    return order;
  }

  void step(std::size_t idx) {
    if (idx == order_.size()) {
      // Legs at boundary vertices whose interior end was processed are all set by now.
      (*visit_)(labels_);
      return;
    }
    const int v = order_[idx];
    std::vector<int> free_edges;
    for (int e : w_.rotation[v])
      if (labels_[e] == kFree) free_edges.push_back(e);
    assign(idx, v, free_edges, 0, full_ & ~used_[v]);
  }

  void assign(std::size_t idx, int v, const std::vector<int>& free_edges, std::size_t j, LabelSet avail) {
    if (j == free_edges.size()) {
      if (avail == 0) step(idx + 1);
      return;
    }
    const int e = free_edges[j];
    const int m = w_.edges[e].mult;
    const int o = w_.edges[e].other(v);
    const bool check_other = !w_.is_boundary(o);
    auto try_label = [&](LabelSet s) {
      if (check_other && (used_[o] & s)) return;
      labels_[e] = s;
      used_[v] |= s;
      if (check_other) used_[o] |= s;
      assign(idx, v, free_edges, j + 1, avail & ~s);
      if (check_other) used_[o] &= ~s;
      used_[v] &= ~s;
      labels_[e] = kFree;
    };
    if (j + 1 == free_edges.size()) {
      if (std::popcount(avail) == m) try_label(avail);
      return;
    }
    if (m == 0) {
      try_label(0);
      return;
    }
    // submasks of avail with exactly m bits, in increasing order
    for (LabelSet s = avail;; s = (s - 1) & avail) {
      if (std::popcount(s) == m) try_label(s);
      if (s == 0) break;
    }
  }

  const WebDiagram& w_;
  std::vector<LabelSet> labels_;
  std::vector<LabelSet> used_;
  std::vector<int> order_;
  LabelSet full_ = 0;
  bool ok_ = true;
  const Visitor* visit_ = nullptr;
};

inline std::vector<LabelSet> pin_legs(const WebDiagram& w, const BalancedWord* word) {
  std::vector<LabelSet> pinned(w.edge_count(), LabelingSearch::kFree);
  if (!word) return pinned;
  for (int label = 1; label <= w.n; ++label) {
    int e = w.leg(label);
    pinned[e] = 1u << (word->letters[label - 1] - 1);
  }
  return pinned;
}

inline bool word_fits(const WebDiagram& w, const BalancedWord& word) {
  if (!w.is_standard()) return false;
  if (static_cast<int>(word.letters.size()) != w.n || word.k != w.k) return false;
  return is_balanced(word.letters, word.k, word.d);
}

}  // namespace detail

/// Calls `visit` with the edge labels of every consistent labeling of W.
inline void for_each_labeling(const WebDiagram& w, const std::function<void(const std::vector<LabelSet>&)>& visit) {
  detail::LabelingSearch search(w, detail::pin_legs(w, nullptr));
  search.run(visit);
}

/// The consistent labelings of a standard web with boundary word `word`.
inline std::vector<ConsistentLabeling> labelings(const WebDiagram& w, const BalancedWord& word) {
  std::vector<ConsistentLabeling> out;
  if (!detail::word_fits(w, word)) return out;
  detail::LabelingSearch search(w, detail::pin_legs(w, &word));
  search.run([&](const std::vector<LabelSet>& labels) { out.push_back({labels}); });
  return out;
}

/// a(W, w).
inline long long labeling_count(const WebDiagram& w, const BalancedWord& word) {
  if (!detail::word_fits(w, word)) return 0;
  long long count = 0;
  detail::LabelingSearch search(w, detail::pin_legs(w, &word));
  search.run([&](const std::vector<LabelSet>&) { ++count; });
  return count;
}

inline long long pairing(const WebDiagram& w, const BalancedWord& word) { return labeling_count(w, word); }

inline BalancedWord boundary_word(const WebDiagram& w, const std::vector<LabelSet>& labels) {
  std::vector<int> letters(w.n);
  for (int label = 1; label <= w.n; ++label) {
    LabelSet s = labels[w.leg(label)];
    letters[label - 1] = std::countr_zero(s) + 1;
  }
  return BalancedWord{w.k, w.degree(), std::move(letters)};
}

/// Sparse coefficients w -> sign(w) a(W, w) over balanced words.
struct InvariantVector {
  int k = 0;
  int d = 0;
  int n = 0;
  std::map<std::vector<int>, long long> coeffs;

  long long coefficient(const std::vector<int>& word) const {
    auto it = coeffs.find(word);
    return it == coeffs.end() ? 0 : it->second;
  }

  InvariantVector scaled(int factor) const {
    InvariantVector out = *this;
    for (auto& [w, c] : out.coeffs) c *= factor;
    return out;
  }

  friend bool operator==(const InvariantVector&, const InvariantVector&) = default;
};

inline InvariantVector invariant_vector(const WebDiagram& w) {
  require(w.is_standard(), "invariant_vector: web must be standard");
  InvariantVector out{w.k, w.degree(), w.n, {}};
  std::vector<int> legs(w.n);
  for (int label = 1; label <= w.n; ++label) legs[label - 1] = w.leg(label);
  std::map<std::vector<int>, long long> counts;
  std::vector<int> letters(w.n);
  for_each_labeling(w, [&](const std::vector<LabelSet>& labels) {
    for (int i = 0; i < w.n; ++i) letters[i] = std::countr_zero(labels[legs[i]]) + 1;
    ++counts[letters];
  });
  for (auto& [word, c] : counts) {
    if (c == 0) continue;
    out.coeffs[word] = word_sign(BalancedWord{out.k, out.d, word}) * c;
  }
  return out;
}

/// Noncrossing matchings M' of [n] with a(W, w(M')) > 0, in enumeration order.
inline std::vector<std::pair<NoncrossingMatching, long long>> dual_matchings(const WebDiagram& w) {
  require(w.is_standard() && w.n == 2 * w.k, "dual_matchings: web must be standard of degree two");
  std::vector<std::pair<NoncrossingMatching, long long>> out;
  for (const auto& m : enumerate_matchings(w.k)) {
    long long a = labeling_count(w, word_of_matching(m));
    if (a > 0) out.emplace_back(m, a);
  }
  return out;
}

// -- Pluecker monomials ----------------------------------------------------------

/// Product of minors Delta_{I_1} ... Delta_{I_k}; each I_j sorted.
struct PlueckerMonomial {
  std::vector<std::vector<int>> subsets;

  std::string str() const {
    std::string out;
    for (const auto& s : subsets) {
      out += "D";
      bool wide = std::any_of(s.begin(), s.end(), [](int x) { return x > 9; });
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (wide && i > 0) out += ',';
        out += std::to_string(s[i]);
      }
      out += " ";
    }
    if (!out.empty()) out.pop_back();
    return out;
  }

  friend bool operator==(const PlueckerMonomial&, const PlueckerMonomial&) = default;
};

inline PlueckerMonomial delta_monomial(const BalancedWord& w) {
  require(is_balanced(w.letters, w.k, w.d), "delta_monomial: word is not balanced");
  PlueckerMonomial m;
  m.subsets.assign(w.k, {});
  for (std::size_t p = 0; p < w.letters.size(); ++p) m.subsets[w.letters[p] - 1].push_back(static_cast<int>(p) + 1);
  return m;
}

/// Column vectors v_1..v_n over the rationals, all of one dimension.
struct VectorTuple {
  int dim = 0;
  std::vector<std::vector<Rational>> columns;

  int size() const { return static_cast<int>(columns.size()); }
  const Rational& at(int label, int row) const { return columns[label - 1][row - 1]; }
};

inline VectorTuple make_vector_tuple(std::vector<std::vector<Rational>> cols) {
  VectorTuple vt;
  vt.dim = cols.empty() ? 0 : static_cast<int>(cols[0].size());
  for (const auto& c : cols) require(static_cast<int>(c.size()) == vt.dim, "vector tuple: ragged columns");
  vt.columns = std::move(cols);
  return vt;
}

/// Exact determinant by fraction-preserving Gaussian elimination.
inline Rational determinant(std::vector<std::vector<Rational>> a) {
  const std::size_t n = a.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a[r][c] == 0) continue;
      Rational f = a[r][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[r][j] -= f * a[c][j];
    }
  }
  return det;
}

/// det(v_{i_1}, ..., v_{i_m}) with columns in the given order.
inline Rational minor(const VectorTuple& vt, const std::vector<int>& cols) {
  require(static_cast<int>(cols.size()) == vt.dim, "minor: need as many columns as the dimension");
  std::vector<std::vector<Rational>> a(vt.dim, std::vector<Rational>(vt.dim));
  for (int j = 0; j < vt.dim; ++j) {
    require(cols[j] >= 1 && cols[j] <= vt.size(), "minor: column index out of range");
    for (int r = 0; r < vt.dim; ++r) a[r][j] = vt.columns[cols[j] - 1][r];
  }
  return determinant(std::move(a));
}

inline Rational evaluate_monomial(const PlueckerMonomial& m, const VectorTuple& vt) {
  Rational out = 1;
  for (const auto& s : m.subsets) out *= minor(vt, s);
  return out;
}

/// [W](v_1, ..., v_n); webs with doubled boundary vertices are evaluated through their standard form.
inline Rational evaluate_web(const WebDiagram& w, const VectorTuple& vt) {
  require(vt.dim == w.k, "evaluate_web: vectors must have dimension k");
  require(vt.size() == w.n, "evaluate_web: need one vector per boundary vertex");
  if (!w.is_standard()) {
    auto [hat_w, enc] = standard_form(w);
    VectorTuple stitched{vt.dim, {}};
    for (int a : enc.a) stitched.columns.push_back(vt.columns[a - 1]);
    return evaluate_web(hat_w, stitched);
  }
  auto iv = invariant_vector(w);
  Rational total = 0;
  for (const auto& [word, c] : iv.coeffs) {
    Rational term = static_cast<long>(c);
    for (int p = 0; p < w.n && term != 0; ++p) term *= vt.columns[p][word[p] - 1];
    total += term;
  }
  return total;
}

/// Coefficients of the monomials prod_p (v_p)_{w_p} in Delta(M) = prod_{arcs} Delta_{ab}, over 2 x 2k data.
inline InvariantVector word_expansion(const NoncrossingMatching& m) {
  InvariantVector out{2, m.k, m.size(), {}};
  std::vector<int> word(m.size(), 0);
  std::function<void(std::size_t, long long)> rec = [&](std::size_t j, long long c) {
    if (j == m.arcs.size()) {
      out.coeffs[word] = c;
      return;
    }
    auto [a, b] = m.arcs[j];
    word[a - 1] = 1;
    word[b - 1] = 2;
    rec(j + 1, c);
    word[a - 1] = 2;
    word[b - 1] = 1;
    rec(j + 1, -c);
  };
  rec(0, 1);
  return out;
}

/// prod_j (-1)^{i_j - j} over the first column (i_1, ..., i_k).
inline int sign_lemma_factor(const StandardTableau& t) {
  int e = 0;
  for (int j = 0; j < t.k; ++j) e += t.col1[j] - (j + 1);
  return e % 2 == 0 ? 1 : -1;
}

/// prod_j (-1)^{i_j - 1}; differs from sign_lemma_factor by (-1)^{k(k-1)/2}.
inline int final_proof_sign(const StandardTableau& t) {
  int e = 0;
  for (int j = 0; j < t.k; ++j) e += t.col1[j] - 1;
  return e % 2 == 0 ? 1 : -1;
}

}  // namespace webforge

#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "common.hpp"

namespace webforge {

using Arc = std::pair<int, int>;  // (left, right) with left < right

// Perfect noncrossing matching of the 2k-gon, vertices 1..2k.
struct NoncrossingMatching {
  int k = 0;
  std::vector<Arc> arcs;  // sorted by left endpoint

  int size() const { return 2 * k; }

  int partner(int v) const {
    for (const auto& [a, b] : arcs) {
      if (a == v) return b;
      if (b == v) return a;
    }
    return 0;
  }

  friend bool operator==(const NoncrossingMatching&, const NoncrossingMatching&) = default;
  friend auto operator<=>(const NoncrossingMatching&, const NoncrossingMatching&) = default;
};

inline bool arcs_cross(const Arc& x, const Arc& y) {
  auto [a, b] = x;
  auto [c, d] = y;
  return (a < c && c < b && b < d) || (c < a && a < d && d < b);
}

inline NoncrossingMatching make_matching(int k, std::vector<Arc> arcs) {
  for (auto& [a, b] : arcs)
    if (a > b) std::swap(a, b);
  std::sort(arcs.begin(), arcs.end());
  require(static_cast<int>(arcs.size()) == k, "matching must have k arcs");
  std::vector<int> seen(2 * k + 1, 0);
  for (const auto& [a, b] : arcs) {
    require(a >= 1 && b <= 2 * k && a != b, "arc endpoint out of range");
    require(++seen[a] == 1 && ++seen[b] == 1, "vertex used twice in matching");
  }
  for (std::size_t i = 0; i < arcs.size(); ++i)
    for (std::size_t j = i + 1; j < arcs.size(); ++j)
      require(!arcs_cross(arcs[i], arcs[j]), "matching is crossing");
  return NoncrossingMatching{k, std::move(arcs)};
}

namespace detail {

inline std::vector<std::vector<Arc>> matchings_rec(const std::vector<int>& pts, std::size_t lo,
                                                   std::size_t hi) {
  if (lo >= hi) return {{}};
  std::vector<std::vector<Arc>> out;
  // pts[lo] is joined to pts[j] with an even number of points strictly between.
  for (std::size_t j = lo + 1; j < hi; j += 2) {
    auto inside = matchings_rec(pts, lo + 1, j);
    auto outside = matchings_rec(pts, j + 1, hi);
    for (const auto& in : inside)
      for (const auto& ou : outside) {
        std::vector<Arc> m{{pts[lo], pts[j]}};
        m.insert(m.end(), in.begin(), in.end());
        m.insert(m.end(), ou.begin(), ou.end());
        std::sort(m.begin(), m.end());
        out.push_back(std::move(m));
      }
  }
  return out;
}

}  // namespace detail

/// All noncrossing perfect matchings of the given (sorted) point list.
inline std::vector<std::vector<Arc>> noncrossing_matchings_on(const std::vector<int>& pts) {
  if (pts.size() % 2 != 0) return {};
  return detail::matchings_rec(pts, 0, pts.size());
}

inline std::vector<NoncrossingMatching> enumerate_matchings(int k) {
  require(k >= 1, "enumerate_matchings: k must be positive");
  std::vector<int> pts(2 * k);
  std::iota(pts.begin(), pts.end(), 1);
  std::vector<NoncrossingMatching> out;
  for (auto& arcs : noncrossing_matchings_on(pts)) out.push_back({k, std::move(arcs)});
  return out;
}

/// Indices i with {i, i+1 mod 2k} an arc, ascending.
inline std::vector<int> short_arcs(const NoncrossingMatching& m) {
  const int n = m.size();
  std::vector<int> partner(n + 1, 0);
  for (const auto& [a, b] : m.arcs) {
    partner[a] = b;
    partner[b] = a;
  }
  std::vector<int> out;
  for (int i = 1; i <= n; ++i)
    if (partner[i] == i % n + 1) out.push_back(i);
  return out;
}

/// A cyclic interval of [n]: start, start+1, ..., start+length-1 taken mod n.
struct CyclicInterval {
  int start = 1;
  int length = 0;
  int n = 0;

  int at(int offset) const { return (start - 1 + offset) % n + 1; }
  int first() const { return start; }
  int last() const { return at(length - 1); }

  bool contains(int v) const {
    int off = ((v - start) % n + n) % n;
    return off < length;
  }

  std::vector<int> elements() const {
    std::vector<int> out;
    for (int i = 0; i < length; ++i) out.push_back(at(i));
    return out;
  }

  friend bool operator==(const CyclicInterval&, const CyclicInterval&) = default;
};

/// Color sets (i_j, i_{j+1}] between consecutive short arcs; the interval
/// containing vertex 1 is reported first.
inline std::vector<CyclicInterval> color_sets(const NoncrossingMatching& m) {
  const int n = m.size();
  auto idx = short_arcs(m);
  const int s = static_cast<int>(idx.size());
  std::vector<CyclicInterval> sets;
  for (int j = 0; j < s; ++j) {
    int lo = idx[j];
    int hi = idx[(j + 1) % s];
    int len = ((hi - lo) % n + n) % n;
    if (len == 0) len = n;
    sets.push_back({lo % n + 1, len, n});
  }
  auto it = std::find_if(sets.begin(), sets.end(), [](const auto& c) { return c.contains(1); });
  std::rotate(sets.begin(), it, sets.end());
  return sets;
}

// -- balanced words ---------------------------------------------------------

/// Word of length d*k over 1..k with each symbol appearing d times.
struct BalancedWord {
  int k = 0;
  int d = 0;
  std::vector<int> letters;

  std::string str() const {
    std::string s;
    for (std::size_t i = 0; i < letters.size(); ++i) {
      if (k > 9 && i > 0) s += ',';
      s += std::to_string(letters[i]);
    }
    return s;
  }

  friend bool operator==(const BalancedWord&, const BalancedWord&) = default;
};

inline bool is_balanced(const std::vector<int>& letters, int k, int d) {
  if (static_cast<int>(letters.size()) != d * k) return false;
  std::vector<int> count(k + 1, 0);
  for (int x : letters) {
    if (x < 1 || x > k) return false;
    ++count[x];
  }
  return std::all_of(count.begin() + 1, count.end(), [d](int c) { return c == d; });
}

inline BalancedWord make_word(int k, int d, std::vector<int> letters) {
  require(is_balanced(letters, k, d), "word is not balanced");
  return BalancedWord{k, d, std::move(letters)};
}

/// Parses "1221" (k <= 9) or "1,2,10,..." into letters.
inline std::vector<int> parse_letters(const std::string& s) {
  std::vector<int> out;
  if (s.find(',') != std::string::npos) {
    std::size_t pos = 0;
    while (pos <= s.size()) {
      auto next = s.find(',', pos);
      if (next == std::string::npos) next = s.size();
      out.push_back(std::stoi(s.substr(pos, next - pos)));
      pos = next + 1;
    }
  } else {
    for (char c : s) {
      if (c < '0' || c > '9') throw ParseError("bad word character");
      out.push_back(c - '0');
    }
  }
  return out;
}

/// Sign of the permutation of the subscripted alphabet read off from `w`.
inline int word_sign(const BalancedWord& w) {
  require(is_balanced(w.letters, w.k, w.d), "word_sign: word is not balanced");
  std::vector<int> seen(w.k + 1, 0);
  std::vector<int> ranks;
  ranks.reserve(w.letters.size());
  for (int x : w.letters) ranks.push_back((x - 1) * w.d + seen[x]++);
  // parity via cycle decomposition
  std::vector<bool> visited(ranks.size(), false);
  int sign = 1;
  for (std::size_t i = 0; i < ranks.size(); ++i) {
    if (visited[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !visited[j]; j = static_cast<std::size_t>(ranks[j])) {
      visited[j] = true;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

/// Symbol j occupies the two endpoints of the j-th arc (arcs ordered by left endpoint).
inline BalancedWord word_of_matching(const NoncrossingMatching& m) {
  std::vector<int> letters(m.size(), 0);
  int j = 1;
  for (const auto& [a, b] : m.arcs) {
    letters[a - 1] = j;
    letters[b - 1] = j;
    ++j;
  }
  return BalancedWord{m.k, 2, std::move(letters)};
}

/// Inverse of word_of_matching; fails if the word does not come from a noncrossing matching.
inline NoncrossingMatching matching_of_word(const BalancedWord& w) {
  require(w.d == 2, "matching_of_word: degree must be 2");
  std::vector<Arc> arcs(w.k, {0, 0});
  for (int p = 1; p <= static_cast<int>(w.letters.size()); ++p) {
    auto& arc = arcs[w.letters[p - 1] - 1];
    (arc.first == 0 ? arc.first : arc.second) = p;
  }
  auto m = make_matching(w.k, arcs);
  require(word_of_matching(m) == w, "word is not the word of its matching");
  return m;
}

/// Removes the short arc {i, i+1 mod 2k} and relabels survivors order-preservingly.
inline NoncrossingMatching remove_arc(const NoncrossingMatching& m, int i) {
  const int n = m.size();
  const int j = i % n + 1;
  require(i >= 1 && i <= n && m.partner(i) == j, "remove_arc: not a short arc of the matching");
  auto relabel = [&](int v) { return v - (v > i ? 1 : 0) - (v > j ? 1 : 0); };
  std::vector<Arc> arcs;
  for (const auto& [a, b] : m.arcs) {
    if (a == std::min(i, j) && b == std::max(i, j)) continue;
    arcs.emplace_back(relabel(a), relabel(b));
  }
  return make_matching(m.k - 1, std::move(arcs));
}

// -- partial matchings --------------------------------------------------------

/// Partial noncrossing matching of type (k, n): arcs on S, doubled vertices P.
struct PartialMatching {
  int n = 0;
  int k = 0;
  std::vector<Arc> arcs;     // on S, sorted
  std::vector<int> doubled;  // P, sorted

  std::vector<int> matched() const {
    std::vector<int> s;
    for (const auto& [a, b] : arcs) {
      s.push_back(a);
      s.push_back(b);
    }
    std::sort(s.begin(), s.end());
    return s;
  }

  std::vector<int> content() const {
    std::vector<int> d(n, 0);
    for (int v : matched()) d[v - 1] = 1;
    for (int v : doubled) d[v - 1] = 2;
    return d;
  }

  friend bool operator==(const PartialMatching&, const PartialMatching&) = default;
  friend auto operator<=>(const PartialMatching&, const PartialMatching&) = default;
};

inline PartialMatching make_partial_matching(int n, std::vector<Arc> arcs, std::vector<int> doubled) {
  for (auto& [a, b] : arcs)
    if (a > b) std::swap(a, b);
  std::sort(arcs.begin(), arcs.end());
  std::sort(doubled.begin(), doubled.end());
  std::vector<int> used(n + 1, 0);
  for (const auto& [a, b] : arcs) {
    require(a >= 1 && b <= n && a != b, "partial matching: arc out of range");
    require(++used[a] == 1 && ++used[b] == 1, "partial matching: vertex reused");
  }
  for (int p : doubled) {
    require(p >= 1 && p <= n, "partial matching: doubled vertex out of range");
    require(++used[p] == 1, "partial matching: doubled vertex also matched");
  }
  for (std::size_t i = 0; i < arcs.size(); ++i)
    for (std::size_t j = i + 1; j < arcs.size(); ++j)
      require(!arcs_cross(arcs[i], arcs[j]), "partial matching is crossing");
  int twice_k = static_cast<int>(2 * arcs.size() + 2 * doubled.size());
  return PartialMatching{n, twice_k / 2, std::move(arcs), std::move(doubled)};
}

/// All partial noncrossing matchings of type (k, n).
inline std::vector<PartialMatching> enumerate_partial_matchings(int k, int n) {
  std::vector<PartialMatching> out;
  // content vectors d in {0,1,2}^n with sum 2k, enumerated lexicographically
  std::vector<int> d(n, 0);
  std::function<void(int, int)> rec = [&](int pos, int remaining) {
    if (pos == n) {
      if (remaining != 0) return;
      std::vector<int> single, dbl;
      for (int i = 0; i < n; ++i) {
        if (d[i] == 1) single.push_back(i + 1);
        if (d[i] == 2) dbl.push_back(i + 1);
      }
      for (auto& arcs : noncrossing_matchings_on(single))
        out.push_back(PartialMatching{n, k, std::move(arcs), dbl});
      return;
    }
    for (int v = 0; v <= 2 && v <= remaining; ++v) {
      d[pos] = v;
      rec(pos + 1, remaining - v);
    }
    d[pos] = 0;
  };
  rec(0, 2 * k);
  return out;
}

/// Weakly increasing sequence in which i appears d_i times.
inline std::vector<int> encode_content(const std::vector<int>& content) {
  std::vector<int> a;
  for (std::size_t i = 0; i < content.size(); ++i)
    for (int c = 0; c < content[i]; ++c) a.push_back(static_cast<int>(i) + 1);
  return a;
}

/// The standard matching of the 2k-gon obtained by splitting doubled vertices.
inline NoncrossingMatching hat(const PartialMatching& pm) {
  auto a = encode_content(pm.content());
  const int len = static_cast<int>(a.size());
  std::vector<int> first_pos(pm.n + 1, 0);
  for (int i = len; i >= 1; --i) first_pos[a[i - 1]] = i;
  std::vector<Arc> arcs;
  for (int i = 1; i < len; ++i)
    if (a[i - 1] == a[i]) arcs.emplace_back(i, i + 1);
  for (const auto& [x, y] : pm.arcs) arcs.emplace_back(first_pos[x], first_pos[y]);
  return make_matching(len / 2, std::move(arcs));
}

}  // namespace webforge

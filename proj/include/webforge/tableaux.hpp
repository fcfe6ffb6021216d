#pragma once

#include <algorithm>
#include <functional>
#include <set>
#include <utility>
#include <vector>

#include "common.hpp"
#include "matchings.hpp"

namespace webforge {

/// Standard filling of the k x 2 rectangle by 1..2k, stored column-wise.
struct StandardTableau {
  int k = 0;
  std::vector<int> col1;
  std::vector<int> col2;

  friend bool operator==(const StandardTableau&, const StandardTableau&) = default;
  friend auto operator<=>(const StandardTableau&, const StandardTableau&) = default;
};

/// Semistandard filling of the k x 2 rectangle by entries in [1, n].
struct SemistandardTableau {
  int k = 0;
  int n = 0;
  std::vector<int> col1;
  std::vector<int> col2;

  friend bool operator==(const SemistandardTableau&, const SemistandardTableau&) = default;
  friend auto operator<=>(const SemistandardTableau&, const SemistandardTableau&) = default;
};

/// Content d_1..d_n (each 0, 1 or 2) and its weakly increasing encoding a_1..a_2k.
struct ContentEncoding {
  std::vector<int> d;
  std::vector<int> a;

  static ContentEncoding from_content(std::vector<int> d) {
    for (int x : d) require(x >= 0 && x <= 2, "content entries must lie in {0,1,2}");
    auto a = encode_content(d);
    return {std::move(d), std::move(a)};
  }

  static ContentEncoding identity(int size) { return from_content(std::vector<int>(size, 1)); }

  int n() const { return static_cast<int>(d.size()); }
  int length() const { return static_cast<int>(a.size()); }
  bool is_identity() const {
    return std::all_of(d.begin(), d.end(), [](int x) { return x == 1; });
  }

  friend bool operator==(const ContentEncoding&, const ContentEncoding&) = default;
};

inline bool strictly_increasing(const std::vector<int>& v) {
  return std::adjacent_find(v.begin(), v.end(), std::greater_equal<>()) == v.end();
}

inline void validate(const StandardTableau& t) {
  require(t.k >= 1, "tableau must have at least one row");
  require(static_cast<int>(t.col1.size()) == t.k && static_cast<int>(t.col2.size()) == t.k,
          "tableau columns must have k entries");
  require(strictly_increasing(t.col1) && strictly_increasing(t.col2),
          "tableau columns must be strictly increasing");
  std::vector<int> all = t.col1;
  all.insert(all.end(), t.col2.begin(), t.col2.end());
  std::sort(all.begin(), all.end());
  for (int i = 0; i < 2 * t.k; ++i) require(all[i] == i + 1, "tableau entries must be 1..2k");
  for (int r = 0; r < t.k; ++r) require(t.col1[r] < t.col2[r], "tableau rows must increase");
}

inline void validate(const SemistandardTableau& t) {
  require(t.k >= 1 && t.n >= 1, "tableau must have positive k and n");
  require(static_cast<int>(t.col1.size()) == t.k && static_cast<int>(t.col2.size()) == t.k,
          "tableau columns must have k entries");
  require(strictly_increasing(t.col1) && strictly_increasing(t.col2),
          "tableau columns must be strictly increasing");
  for (int r = 0; r < t.k; ++r) {
    require(t.col1[r] <= t.col2[r], "tableau rows must weakly increase");
    require(t.col1[r] >= 1 && t.col2[r] <= t.n, "tableau entry outside [1,n]");
  }
}

inline StandardTableau make_standard(std::vector<int> col1, std::vector<int> col2) {
  StandardTableau t{static_cast<int>(col1.size()), std::move(col1), std::move(col2)};
  validate(t);
  return t;
}

inline SemistandardTableau make_semistandard(int n, std::vector<int> col1, std::vector<int> col2) {
  SemistandardTableau t{static_cast<int>(col1.size()), n, std::move(col1), std::move(col2)};
  validate(t);
  return t;
}

inline SemistandardTableau as_semistandard(const StandardTableau& t) {
  return SemistandardTableau{t.k, 2 * t.k, t.col1, t.col2};
}

/// All of SYT(2^k), lexicographic in the first column.
inline std::vector<StandardTableau> enumerate_standard(int k) {
  require(k >= 1, "enumerate_standard: k must be positive");
  std::vector<StandardTableau> out;
  StandardTableau cur{k, {}, {}};
  std::function<void(int)> place = [&](int v) {
    if (v > 2 * k) {
      out.push_back(cur);
      return;
    }
    if (static_cast<int>(cur.col1.size()) < k) {
      cur.col1.push_back(v);
      place(v + 1);
      cur.col1.pop_back();
    }
    if (cur.col2.size() < cur.col1.size()) {
      cur.col2.push_back(v);
      place(v + 1);
      cur.col2.pop_back();
    }
  };
  place(1);
  return out;
}

/// All of SSYT(2^k, [n]), lexicographic in (col1, col2).
inline std::vector<SemistandardTableau> enumerate_semistandard(int k, int n) {
  require(k >= 1 && n >= 1, "enumerate_semistandard: k and n must be positive");
  std::vector<SemistandardTableau> out;
  std::vector<std::vector<int>> columns;
  std::vector<int> cur;
  std::function<void(int)> pick = [&](int from) {
    if (static_cast<int>(cur.size()) == k) {
      columns.push_back(cur);
      return;
    }
    for (int v = from; v <= n; ++v) {
      cur.push_back(v);
      pick(v + 1);
      cur.pop_back();
    }
  };
  pick(1);
  for (const auto& c1 : columns)
    for (const auto& c2 : columns) {
      bool ok = true;
      for (int r = 0; r < k && ok; ++r) ok = c1[r] <= c2[r];
      if (ok) out.push_back(SemistandardTableau{k, n, c1, c2});
    }
  return out;
}

/// The noncrossing matching whose left endpoints are the first column.
inline NoncrossingMatching catalan_bijection(const StandardTableau& t) {
  std::vector<bool> left(2 * t.k + 1, false);
  for (int v : t.col1) left[v] = true;
  std::vector<int> stack;
  std::vector<Arc> arcs;
  for (int v = 1; v <= 2 * t.k; ++v) {
    if (left[v]) {
      stack.push_back(v);
    } else {
      require(!stack.empty(), "catalan_bijection: invalid tableau");
      arcs.emplace_back(stack.back(), v);
      stack.pop_back();
    }
  }
  return make_matching(t.k, std::move(arcs));
}

inline StandardTableau tableau_of_matching(const NoncrossingMatching& m) {
  StandardTableau t{m.k, {}, {}};
  for (const auto& [a, b] : m.arcs) {
    t.col1.push_back(a);
    t.col2.push_back(b);
  }
  std::sort(t.col1.begin(), t.col1.end());
  std::sort(t.col2.begin(), t.col2.end());
  return t;
}

/// Descent set; the wrap-around pair {1, 2k} is reported as 2k.
inline std::vector<int> descents(const StandardTableau& t) {
  const int n = 2 * t.k;
  std::vector<int> row(n + 1, 0);
  for (int r = 0; r < t.k; ++r) {
    row[t.col1[r]] = r;
    row[t.col2[r]] = r;
  }
  std::vector<int> out;
  for (int i = 1; i < n; ++i)
    if (row[i] < row[i + 1]) out.push_back(i);
  // T \ {1, 2k}: drop 1 and 2k, slide the first column up one box.
  for (int r = 0; r + 1 < t.k; ++r) {
    if (t.col1[r + 1] > t.col2[r]) {
      out.push_back(n);
      break;
    }
  }
  return out;
}

inline ContentEncoding content_of(const SemistandardTableau& t) {
  std::vector<int> d(t.n, 0);
  for (int v : t.col1) ++d[v - 1];
  for (int v : t.col2) ++d[v - 1];
  return ContentEncoding::from_content(std::move(d));
}

/// Relabels boxes by insertion order; among equal entries the column-1 copy comes first.
inline std::pair<StandardTableau, ContentEncoding> standardize(const SemistandardTableau& t) {
  validate(t);
  auto enc = content_of(t);
  StandardTableau hat{t.k, std::vector<int>(t.k), std::vector<int>(t.k)};
  int next = 1;
  std::size_t r1 = 0;
  std::size_t r2 = 0;
  for (int v = 1; v <= t.n; ++v) {
    if (r1 < t.col1.size() && t.col1[r1] == v) hat.col1[r1++] = next++;
    if (r2 < t.col2.size() && t.col2[r2] == v) hat.col2[r2++] = next++;
  }
  validate(hat);
  return {std::move(hat), std::move(enc)};
}

/// Replaces each entry i of a standard tableau by a_i.
inline SemistandardTableau destandardize(const StandardTableau& hat, const ContentEncoding& enc) {
  require(enc.length() == 2 * hat.k, "destandardize: encoding length must be 2k");
  SemistandardTableau t{hat.k, enc.n(), {}, {}};
  for (int v : hat.col1) t.col1.push_back(enc.a[v - 1]);
  for (int v : hat.col2) t.col2.push_back(enc.a[v - 1]);
  validate(t);
  return t;
}

/// T(M,P): Catalan-invert hat(M,P) and substitute a_i for i.
inline SemistandardTableau ssyt_of_partial_matching(const PartialMatching& pm) {
  auto enc = ContentEncoding::from_content(pm.content());
  return destandardize(tableau_of_matching(hat(pm)), enc);
}

inline PartialMatching partial_matching_of_ssyt(const SemistandardTableau& t) {
  auto [hat_t, enc] = standardize(t);
  auto m = catalan_bijection(hat_t);
  std::vector<Arc> arcs;
  std::vector<int> doubled;
  for (const auto& [i, j] : m.arcs) {
    int x = enc.a[i - 1];
    int y = enc.a[j - 1];
    if (x == y)
      doubled.push_back(x);
    else
      arcs.emplace_back(x, y);
  }
  return make_partial_matching(t.n, std::move(arcs), std::move(doubled));
}

}  // namespace webforge

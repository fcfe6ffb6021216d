#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include <webforge/tableaux.hpp>

namespace fixtures {

// The 9-row running example and its noncrossing matching on 18 points.
inline webforge::StandardTableau running_tableau() {
  return webforge::make_standard({1, 2, 3, 5, 6, 8, 10, 13, 14}, {4, 7, 9, 11, 12, 15, 16, 17, 18});
}

inline webforge::NoncrossingMatching running_matching() {
  return webforge::make_matching(
      9, {{1, 18}, {2, 17}, {3, 4}, {5, 12}, {6, 7}, {8, 9}, {10, 11}, {13, 16}, {14, 15}});
}

// A semistandard tableau on [15] that standardizes to the running example.
inline webforge::SemistandardTableau running_semistandard() {
  return webforge::make_semistandard(15, {1, 2, 3, 4, 5, 6, 8, 11, 12}, {3, 5, 7, 9, 10, 12, 13, 14, 15});
}

// Brute force: every perfect matching of 1..2k, then filter noncrossing pairs.
inline std::vector<std::vector<std::pair<int, int>>> all_perfect_matchings(int k) {
  std::vector<std::vector<std::pair<int, int>>> out;
  std::vector<std::pair<int, int>> cur;
  std::vector<bool> used(2 * k + 1, false);
  auto rec = [&](auto&& self) -> void {
    int first = 0;
    for (int v = 1; v <= 2 * k; ++v)
      if (!used[v]) {
        first = v;
        break;
      }
    if (first == 0) {
      out.push_back(cur);
      return;
    }
    used[first] = true;
    for (int v = first + 1; v <= 2 * k; ++v) {
      if (used[v]) continue;
      used[v] = true;
      cur.emplace_back(first, v);
      self(self);
      cur.pop_back();
      used[v] = false;
    }
    used[first] = false;
  };
  rec(rec);
  return out;
}

inline bool brute_noncrossing(const std::vector<std::pair<int, int>>& arcs) {
  for (const auto& [a, b] : arcs)
    for (const auto& [c, d] : arcs)
      if (a < c && c < b && b < d) return false;
  return true;
}

}  // namespace fixtures

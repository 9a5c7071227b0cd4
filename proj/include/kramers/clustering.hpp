#pragma once

#include <vector>

#include "kramers/types.hpp"

namespace kramers {

/// Single-linkage clustering of points in the complex plane: clusters are the
/// connected components of the graph joining points closer than `radius`.
/// Returns index groups; within a group indices are ascending.
inline std::vector<std::vector<int>> cluster_single_linkage(
    const std::vector<Complex>& points, double radius) {
  const int n = static_cast<int>(points.size());
  std::vector<int> parent(n);
  for (int i = 0; i < n; ++i) parent[i] = i;
  auto find = [&](int i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (std::abs(points[i] - points[j]) <= radius) {
        int a = find(i), b = find(j);
        if (a != b) parent[a] = b;
      }
  std::vector<std::vector<int>> groups;
  std::vector<int> root_to_group(n, -1);
  for (int i = 0; i < n; ++i) {
    int r = find(i);
    if (root_to_group[r] < 0) {
      root_to_group[r] = static_cast<int>(groups.size());
      groups.emplace_back();
    }
    groups[root_to_group[r]].push_back(i);
  }
  return groups;
}

}  // namespace kramers

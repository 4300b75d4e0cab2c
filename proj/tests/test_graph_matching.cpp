#include <random>

#include "doctest.h"
#include "hypercover/errors.hpp"
#include "hypercover/graph_matching.hpp"

using namespace hypercover;

namespace {

// Largest matching by recursion over the lowest unmatched vertex.
int brute_matching(int n, const std::vector<std::pair<int, int>>& edges, unsigned used, int from) {
  while (from < n && (used >> from & 1)) ++from;
  if (from >= n) return 0;
  int best = brute_matching(n, edges, used | 1u << from, from + 1);
  for (auto [u, v] : edges) {
    int other = u == from ? v : v == from ? u : -1;
    if (other < 0 || (used >> other & 1)) continue;
    best = std::max(best, 1 + brute_matching(n, edges, used | 1u << from | 1u << other, from + 1));
  }
  return best;
}

}  // namespace

TEST_CASE("odd cycle and blossom examples") {
  CHECK(max_matching_general_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}}).size() == 2);
  // Triangle with a pendant path forces a blossom contraction.
  const auto m = max_matching_general_graph(6, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {4, 5}});
  CHECK(m.size() == 3);
  CHECK(max_matching_general_graph(3, {}).empty());
  CHECK_THROWS_AS(max_matching_general_graph(3, {{0, 3}}), ParameterError);
}

TEST_CASE("blossom matches the exhaustive oracle on small graphs") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 8);
    std::vector<std::pair<int, int>> edges;
    const int density = static_cast<int>(rng() % 100);
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (static_cast<int>(rng() % 100) < density) edges.emplace_back(u, v);
      }
    }
    const auto m = max_matching_general_graph(n, edges);
    CHECK(static_cast<int>(m.size()) == brute_matching(n, edges, 0, 0));
    std::vector<bool> seen(n, false);
    for (auto [u, v] : m) {
      CHECK(u < v);
      CHECK(std::find(edges.begin(), edges.end(), std::make_pair(u, v)) != edges.end());
      CHECK_FALSE(seen[u]);
      CHECK_FALSE(seen[v]);
      seen[u] = seen[v] = true;
    }
  }
}

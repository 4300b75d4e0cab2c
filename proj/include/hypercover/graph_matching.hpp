#pragma once

#include <utility>
#include <vector>

#include "hypercover/hypergraph.hpp"

namespace hypercover {

/// Maximum-cardinality matching in a general simple graph (Edmonds'
/// blossom algorithm). Pairs are returned as (u, v) with u < v, sorted.
std::vector<std::pair<int, int>> max_matching_general_graph(int n,
                                                            const std::vector<std::pair<int, int>>& edges);
std::vector<std::pair<int, int>> max_matching_general_graph(const SimpleGraph& g);

}  // namespace hypercover

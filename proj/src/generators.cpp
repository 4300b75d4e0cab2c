#include "hypercover/generators.hpp"

#include <algorithm>
#include <random>

#include "hypercover/errors.hpp"
#include "hypercover/exact.hpp"

namespace hypercover {

Hypergraph gen_complete_extremal(int k) {
  if (k < 2) throw ParameterError("gen_complete_extremal: k must be >= 2");
  if (k + 1 > kMaxVertices) throw ParameterError("gen_complete_extremal: k too large");
  std::vector<Edge> edges = subsets_of_size(all_vertices(k + 1), k);
  return Hypergraph(k + 1, k, std::move(edges));
}

Hypergraph gen_triangle_hypergraph(int n, const std::vector<std::pair<int, int>>& graph_edges) {
  return gen_triangle_hypergraph(make_graph(n, graph_edges));
}

Hypergraph gen_triangle_hypergraph(const SimpleGraph& g) {
  if (g.n > kMaxVertices) throw ParameterError("triangle hypergraph: more than 64 vertices");
  std::vector<VertexSet> neighbors(g.n, 0);
  for (auto [u, v] : g.edges) {
    if (u == v) throw MalformedInput("triangle hypergraph: self-loop");
    if (u < 0 || v < 0 || u >= g.n || v >= g.n) throw MalformedInput("triangle hypergraph: vertex out of range");
    if (neighbors[u] & singleton(v)) throw MalformedInput("triangle hypergraph: repeated edge");
    neighbors[u] |= singleton(v);
    neighbors[v] |= singleton(u);
  }
  std::vector<Edge> triangles;
  for (int a = 0; a < g.n; ++a) {
    for (int b : to_vertices(neighbors[a] & ~all_vertices(a + 1))) {
      for (int c : to_vertices(neighbors[a] & neighbors[b] & ~all_vertices(b + 1))) {
        triangles.push_back(singleton(a) | singleton(b) | singleton(c));
      }
    }
  }
  return Hypergraph(std::max(g.n, 3), 3, std::move(triangles));
}

DesignCheck check_symmetric_design(const Hypergraph& h, int lambda) {
  DesignCheck check;
  check.lambda = lambda;
  check.every_pair_in_lambda_blocks = true;
  for (int a = 0; a < h.vertex_count(); ++a) {
    for (int b = a + 1; b < h.vertex_count(); ++b) {
      const VertexSet pair = singleton(a) | singleton(b);
      const auto count = std::count_if(h.edges().begin(), h.edges().end(),
                                       [pair](Edge e) { return is_subset(pair, e); });
      if (count != lambda) check.every_pair_in_lambda_blocks = false;
    }
  }
  check.every_block_pair_meets_in_lambda = true;
  for (std::size_t i = 0; i < h.edge_count(); ++i) {
    for (std::size_t j = i + 1; j < h.edge_count(); ++j) {
      if (intersection_size(h.edge(i), h.edge(j)) != lambda) check.every_block_pair_meets_in_lambda = false;
    }
  }
  return check;
}

Hypergraph gen_biplane_11_5_2() {
  constexpr int kPoints = 11;
  constexpr int kResidues[] = {1, 3, 4, 5, 9};
  std::vector<Edge> blocks;
  for (int shift = 0; shift < kPoints; ++shift) {
    Edge block = 0;
    for (int r : kResidues) block |= singleton((r + shift) % kPoints);
    blocks.push_back(block);
  }
  Hypergraph h(kPoints, 5, std::move(blocks));
  const auto check = check_symmetric_design(h, 2);
  if (h.edge_count() != kPoints || !check.every_pair_in_lambda_blocks ||
      !check.every_block_pair_meets_in_lambda) {
    throw InvariantViolation("biplane construction failed the 2-(11,5,2) design check");
  }
  return h;
}

namespace {

Edge random_k_subset(int n, int k, std::mt19937_64& rng) {
  std::vector<int> vertices(n);
  for (int i = 0; i < n; ++i) vertices[i] = i;
  Edge e = 0;
  for (int i = 0; i < k; ++i) {
    std::uniform_int_distribution<int> pick(i, n - 1);
    std::swap(vertices[i], vertices[pick(rng)]);
    e |= singleton(vertices[i]);
  }
  return e;
}

// Replaces `swaps` vertices of `e` by vertices outside it.
Edge perturb(Edge e, int n, int swaps, std::mt19937_64& rng) {
  for (int s = 0; s < swaps; ++s) {
    auto inside = to_vertices(e);
    auto outside = to_vertices(all_vertices(n) & ~e);
    if (outside.empty()) break;
    std::uniform_int_distribution<std::size_t> in_pick(0, inside.size() - 1);
    std::uniform_int_distribution<std::size_t> out_pick(0, outside.size() - 1);
    e &= ~singleton(inside[in_pick(rng)]);
    e |= singleton(outside[out_pick(rng)]);
  }
  return e;
}

}  // namespace

Hypergraph gen_random(const RandomSpec& spec) {
  const int n = spec.n;
  const int k = spec.k;
  if (k < 2 || n < k || n > kMaxVertices) throw ParameterError("gen_random: need 2 <= k <= n <= 64");
  if (spec.m < 1 || spec.m > k - 1) throw ParameterError("gen_random: need 1 <= m <= k-1");
  if (spec.target_nu && *spec.target_nu < 0) throw ParameterError("gen_random: negative target");

  const std::uint64_t possible = binomial(n, k);
  const int cap = spec.max_edges > 0 ? spec.max_edges : 24;
  const int max_edges = static_cast<int>(std::min<std::uint64_t>(possible, static_cast<std::uint64_t>(cap)));
  std::mt19937_64 rng(spec.seed);

  for (int attempt = 0; attempt < spec.attempts; ++attempt) {
    std::uniform_int_distribution<int> size_draw(spec.target_nu ? std::max(1, *spec.target_nu) : 1,
                                                 std::max(1, max_edges));
    const int target_edges = std::min(size_draw(rng), max_edges);
    std::vector<Edge> edges;
    int budget = 20 * target_edges + 20;
    while (static_cast<int>(edges.size()) < target_edges && budget-- > 0) {
      Edge candidate;
      std::bernoulli_distribution mutate(0.75);
      if (!edges.empty() && mutate(rng)) {
        std::uniform_int_distribution<std::size_t> parent(0, edges.size() - 1);
        std::uniform_int_distribution<int> swaps(1, std::max(1, k - spec.m));
        candidate = perturb(edges[parent(rng)], n, swaps(rng), rng);
      } else {
        candidate = random_k_subset(n, k, rng);
      }
      if (std::find(edges.begin(), edges.end(), candidate) != edges.end()) continue;
      edges.push_back(candidate);
      if (spec.target_nu && matching_number(Hypergraph(n, k, edges), spec.m) > *spec.target_nu) {
        edges.pop_back();
      }
    }
    Hypergraph h(n, k, std::move(edges));
    if (!spec.target_nu || matching_number(h, spec.m) == *spec.target_nu) return h;
  }
  throw PreconditionError("gen_random: sampling budget exhausted before reaching nu=" +
                          std::to_string(spec.target_nu.value_or(-1)));
}

}  // namespace hypercover

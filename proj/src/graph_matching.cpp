#include "hypercover/graph_matching.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "hypercover/errors.hpp"

namespace hypercover {

namespace {

// Augmenting-path search with blossom contraction tracked through `base_`.
class Blossom {
 public:
  Blossom(int n, const std::vector<std::pair<int, int>>& edges) : n_(n), adj_(n) {
    for (auto [u, v] : edges) {
      if (u < 0 || v < 0 || u >= n || v >= n || u == v) {
        throw ParameterError("max_matching_general_graph: invalid edge");
      }
      adj_[u].push_back(v);
      adj_[v].push_back(u);
    }
    for (auto& list : adj_) {
      std::sort(list.begin(), list.end());
      list.erase(std::unique(list.begin(), list.end()), list.end());
    }
  }

  std::vector<std::pair<int, int>> solve() {
    match_.assign(n_, -1);
    for (int root = 0; root < n_; ++root) {
      if (match_[root] != -1) continue;
      int v = find_augmenting_path(root);
      while (v != -1) {
        const int pv = parent_[v];
        const int next = match_[pv];
        match_[v] = pv;
        match_[pv] = v;
        v = next;
      }
    }
    std::vector<std::pair<int, int>> out;
    for (int v = 0; v < n_; ++v) {
      if (match_[v] > v) out.emplace_back(v, match_[v]);
    }
    return out;
  }

 private:
  int lowest_common_base(int a, int b) const {
    std::vector<bool> seen(n_, false);
    while (true) {
      a = base_[a];
      seen[a] = true;
      if (match_[a] == -1) break;
      a = parent_[match_[a]];
    }
    while (true) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[match_[b]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = true;
      in_blossom_[base_[match_[v]]] = true;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  int find_augmenting_path(int root) {
    used_.assign(n_, false);
    parent_.assign(n_, -1);
    base_.resize(n_);
    std::iota(base_.begin(), base_.end(), 0);
    used_[root] = true;
    std::queue<int> queue;
    queue.push(root);
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop();
      for (int to : adj_[v]) {
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] != -1 && parent_[match_[to]] != -1)) {
          const int b = lowest_common_base(v, to);
          in_blossom_.assign(n_, false);
          mark_path(v, b, to);
          mark_path(to, b, v);
          for (int i = 0; i < n_; ++i) {
            if (in_blossom_[base_[i]]) {
              base_[i] = b;
              if (!used_[i]) {
                used_[i] = true;
                queue.push(i);
              }
            }
          }
        } else if (parent_[to] == -1) {
          parent_[to] = v;
          if (match_[to] == -1) return to;
          used_[match_[to]] = true;
          queue.push(match_[to]);
        }
      }
    }
    return -1;
  }

  int n_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> match_;
  std::vector<int> parent_;
  std::vector<int> base_;
  std::vector<bool> used_;
  std::vector<bool> in_blossom_;
};

}  // namespace

std::vector<std::pair<int, int>> max_matching_general_graph(int n,
                                                            const std::vector<std::pair<int, int>>& edges) {
  if (n < 0) throw ParameterError("max_matching_general_graph: negative vertex count");
  return Blossom(n, edges).solve();
}

std::vector<std::pair<int, int>> max_matching_general_graph(const SimpleGraph& g) {
  return max_matching_general_graph(g.n, g.edges);
}

}  // namespace hypercover

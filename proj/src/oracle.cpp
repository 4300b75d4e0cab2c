#include "hypercover/oracle.hpp"

#include <algorithm>
#include <functional>

#include "hypercover/errors.hpp"

namespace hypercover {

namespace {

void check(const Hypergraph& h, int m, const char* op) {
  if (m < 1 || m > h.uniformity()) throw ParameterError(std::string(op) + ": m out of range");
  if (h.edge_count() > kOracleEdgeGuard) throw GuardExceeded(std::string(op) + ": too many edges");
}

}  // namespace

int oracle_matching_number(const Hypergraph& h, int m) {
  check(h, m, "oracle_matching_number");
  const auto edges = h.edges();
  std::vector<Edge> chosen;
  std::function<int(std::size_t)> best = [&](std::size_t i) -> int {
    if (i == edges.size()) return static_cast<int>(chosen.size());
    int without = best(i + 1);
    const bool fits = std::all_of(chosen.begin(), chosen.end(),
                                  [&](Edge c) { return intersection_size(c, edges[i]) < m; });
    if (!fits) return without;
    chosen.push_back(edges[i]);
    const int with = best(i + 1);
    chosen.pop_back();
    return std::max(with, without);
  };
  return best(0);
}

int oracle_cover_number(const Hypergraph& h, int m) {
  check(h, m, "oracle_cover_number");
  const auto edges = h.edges();
  std::vector<VertexSet> family;
  // Iterative deepening: the first uncovered edge must receive one of its
  // own m-subsets.
  std::function<bool(int)> search = [&](int left) -> bool {
    const auto open = std::find_if(edges.begin(), edges.end(), [&](Edge e) {
      return std::none_of(family.begin(), family.end(), [e](VertexSet s) { return is_subset(s, e); });
    });
    if (open == edges.end()) return true;
    if (left == 0) return false;
    for (VertexSet s : subsets_of_size(*open, m)) {
      family.push_back(s);
      const bool ok = search(left - 1);
      family.pop_back();
      if (ok) return true;
    }
    return false;
  };
  for (int size = 0;; ++size) {
    if (search(size)) return size;
  }
}

}  // namespace hypercover

#include "hypercover/vertex_set.hpp"

#include <stdexcept>

#include "hypercover/errors.hpp"

namespace hypercover {

std::vector<int> to_vertices(VertexSet s) {
  std::vector<int> out;
  out.reserve(set_size(s));
  while (s) {
    out.push_back(lowest_vertex(s));
    s &= s - 1;
  }
  return out;
}

VertexSet from_vertices(const std::vector<int>& vertices) {
  VertexSet s = 0;
  for (int v : vertices) {
    if (v < 0 || v >= kMaxVertices) {
      throw ParameterError("vertex id out of range: " + std::to_string(v));
    }
    s |= singleton(v);
  }
  return s;
}

std::vector<VertexSet> subsets_of_size(VertexSet s, int m) {
  const auto elems = to_vertices(s);
  const int k = static_cast<int>(elems.size());
  std::vector<VertexSet> out;
  if (m < 0 || m > k) return out;
  out.reserve(binomial(k, m));
  std::vector<int> idx(m);
  for (int i = 0; i < m; ++i) idx[i] = i;
  while (true) {
    VertexSet sub = 0;
    for (int i : idx) sub |= singleton(elems[i]);
    out.push_back(sub);
    int i = m - 1;
    while (i >= 0 && idx[i] == k - m + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

std::string format_set(VertexSet s, char separator) {
  std::string out;
  for (int v : to_vertices(s)) {
    if (!out.empty()) out += separator;
    out += std::to_string(v);
  }
  return out;
}

std::uint64_t binomial(int n, int r) {
  if (r < 0 || n < 0 || r > n) return 0;
  if (r > n - r) r = n - r;
  std::uint64_t result = 1;
  for (int i = 1; i <= r; ++i) {
    result = result * static_cast<std::uint64_t>(n - r + i) / static_cast<std::uint64_t>(i);
  }
  return result;
}

}  // namespace hypercover

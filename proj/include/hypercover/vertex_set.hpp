#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace hypercover {

/// Vertex subset of a hypergraph on at most 64 vertices, one bit per vertex.
using VertexSet = std::uint64_t;

inline constexpr int kMaxVertices = 64;

constexpr int set_size(VertexSet s) noexcept { return std::popcount(s); }

constexpr int intersection_size(VertexSet a, VertexSet b) noexcept {
  return std::popcount(a & b);
}

constexpr bool is_subset(VertexSet a, VertexSet b) noexcept {
  return (a & ~b) == 0;
}

constexpr VertexSet singleton(int v) noexcept { return VertexSet{1} << v; }

constexpr int lowest_vertex(VertexSet s) noexcept { return std::countr_zero(s); }

constexpr VertexSet all_vertices(int n) noexcept {
  return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

/// Lexicographic order on the ascending vertex sequences of two sets.
///
/// The first position where the sequences differ holds the smallest vertex
/// of the symmetric difference; whichever set owns it is smaller unless the
/// other sequence has already ended.
constexpr bool lex_less(VertexSet a, VertexSet b) noexcept {
  const VertexSet diff = a ^ b;
  if (diff == 0) return false;
  const VertexSet low = diff & (~diff + 1);
  const VertexSet above = ~((low << 1) - 1);
  if (a & low) return (b & above) != 0;
  return (a & above) == 0;
}

struct LexLess {
  constexpr bool operator()(VertexSet a, VertexSet b) const noexcept {
    return lex_less(a, b);
  }
};

std::vector<int> to_vertices(VertexSet s);
VertexSet from_vertices(const std::vector<int>& vertices);

/// All m-element subsets of `s`, in lexicographic order.
std::vector<VertexSet> subsets_of_size(VertexSet s, int m);

/// "0 1 2" style rendering with a caller-chosen separator.
std::string format_set(VertexSet s, char separator = ' ');

/// Binomial coefficient; 0 when r < 0 or r > n.
std::uint64_t binomial(int n, int r);

constexpr int ceil_div(int a, int b) { return (a + b - 1) / b; }

}  // namespace hypercover

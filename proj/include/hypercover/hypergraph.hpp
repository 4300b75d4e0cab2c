#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hypercover/vertex_set.hpp"

namespace hypercover {

using Edge = VertexSet;

/// An m-element vertex set; the unit of covers and of fractional cover
/// support.
struct MSet {
  VertexSet vertices = 0;

  int size() const noexcept { return set_size(vertices); }
  bool contained_in(Edge e) const noexcept { return is_subset(vertices, e); }

  friend bool operator==(const MSet&, const MSet&) = default;
  friend bool operator<(const MSet& a, const MSet& b) noexcept {
    return lex_less(a.vertices, b.vertices);
  }
};

/// k-uniform hypergraph on vertices 0..n-1.
///
/// Edges are deduplicated and kept in lexicographic order of their vertex
/// sequences, so equal hypergraphs compare and serialize identically.
/// Immutable after construction.
class Hypergraph {
 public:
  Hypergraph() = default;
  /// Throws ParameterError on a non-k-element edge or a vertex >= n.
  Hypergraph(int n, int k, std::vector<Edge> edges);

  int vertex_count() const noexcept { return n_; }
  int uniformity() const noexcept { return k_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return edges_.empty(); }

  std::span<const Edge> edges() const noexcept { return edges_; }
  Edge edge(std::size_t i) const { return edges_.at(i); }

  std::optional<std::size_t> index_of(Edge e) const;
  bool contains(Edge e) const { return index_of(e).has_value(); }

  /// Same vertex set and uniformity, different edge list.
  Hypergraph with_edges(std::vector<Edge> edges) const;
  /// Sub-hypergraph on the listed edge indices.
  Hypergraph restricted_to(std::span<const std::size_t> indices) const;
  /// Edges of this hypergraph not present in `other`.
  Hypergraph minus(const Hypergraph& other) const;

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  int n_ = 0;
  int k_ = 1;
  std::vector<Edge> edges_;
};

/// Collection of edges with pairwise intersections smaller than m,
/// referenced by index into the owning hypergraph's edge list.
struct Matching {
  std::vector<std::size_t> edge_indices;
  int m = 1;

  std::size_t size() const noexcept { return edge_indices.size(); }
};

/// A family of m-sets claimed to contain a subset of every edge.
struct CoverCertificate {
  std::vector<MSet> msets;
  int m = 1;

  std::size_t size() const noexcept { return msets.size(); }
};

/// All C(|e|, m) m-subsets of e in lexicographic order.
/// Throws ParameterError when m > |e| or m < 0.
std::vector<MSet> m_subsets(Edge e, int m);

// Text formats.

/// Reads `n k e` followed by e lines of k vertex ids. `#` starts a comment
/// line. Labels that are not dense 0..n-1 are re-indexed in ascending order;
/// the original labels are returned alongside.
struct ParsedHypergraph {
  Hypergraph hypergraph;
  std::vector<long long> labels;  // labels[new id] = original label
};
ParsedHypergraph read_hypergraph(std::istream& in);
Hypergraph parse_hypergraph(const std::string& text);
void write_hypergraph(std::ostream& out, const Hypergraph& h);
std::string to_text(const Hypergraph& h);

/// Simple undirected graph as read from the `n e` / `u v` format.
struct SimpleGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // u < v, deduplicated input order
  std::vector<long long> labels;
};
/// Rejects self-loops and repeated edges.
SimpleGraph read_graph(std::istream& in);
SimpleGraph make_graph(int n, std::vector<std::pair<int, int>> edges);
void write_graph(std::ostream& out, const SimpleGraph& g);

/// One m-set per line, ascending ids separated by spaces; `#` comments.
void write_cover(std::ostream& out, const CoverCertificate& cover);
CoverCertificate read_cover(std::istream& in);

}  // namespace hypercover

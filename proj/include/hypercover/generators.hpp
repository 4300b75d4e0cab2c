#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hypercover/hypergraph.hpp"

namespace hypercover {

/// All k-subsets of a (k+1)-set. Requires k >= 2.
Hypergraph gen_complete_extremal(int k);

/// Triangle hypergraph T(G): same vertices as G, one 3-edge per triangle.
/// A 2-matching of T(G) is a set of edge-disjoint triangles and a 2-cover
/// is a set of graph edges meeting every triangle. Throws MalformedInput on
/// self-loops or repeated edges and ParameterError above 64 vertices.
Hypergraph gen_triangle_hypergraph(int n, const std::vector<std::pair<int, int>>& graph_edges);
Hypergraph gen_triangle_hypergraph(const SimpleGraph& g);

/// The symmetric 2-(11,5,2) design: cyclic translates of the quadratic
/// residues {1,3,4,5,9} mod 11. The pair-balance and block-intersection
/// properties are checked before returning; failure throws
/// InvariantViolation.
Hypergraph gen_biplane_11_5_2();

/// Pair and block-intersection counts of a hypergraph seen as a design.
struct DesignCheck {
  bool every_pair_in_lambda_blocks = false;
  bool every_block_pair_meets_in_lambda = false;
  int lambda = 0;
};
DesignCheck check_symmetric_design(const Hypergraph& h, int lambda);

struct RandomSpec {
  int n = 6;
  int k = 3;
  int m = 2;
  std::optional<int> target_nu;
  std::uint64_t seed = 0;
  /// Upper end of the edge-count draw; 0 picks a size-dependent default.
  int max_edges = 0;
  /// Full restarts before giving up on target_nu.
  int attempts = 2000;
};

/// Seeded random k-uniform hypergraph. Edges are proposed either uniformly
/// or as one-vertex swaps of an existing edge. With a target, proposals
/// raising the m-matching number above it are rejected, and a finished draw
/// is kept only when its exact m-matching number equals the target.
/// Throws PreconditionError when the attempt budget runs out.
Hypergraph gen_random(const RandomSpec& spec);

}  // namespace hypercover

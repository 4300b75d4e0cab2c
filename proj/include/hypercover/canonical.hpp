#pragma once

#include <string>
#include <vector>

#include "hypercover/hypergraph.hpp"

namespace hypercover {

inline constexpr int kCanonicalVertexGuard = 16;

/// Isomorphism-invariant edge list: the lexicographically smallest sorted
/// relabeled edge list over the leaves of a color-refinement search.
/// Throws GuardExceeded above 16 vertices.
std::vector<Edge> canonical_edges(const Hypergraph& h);

/// `n:k:` followed by the canonical edges, '.'-separated, each edge written
/// as a string of hex vertex digits, e.g. "4:3:012.013.023.123".
std::string canonical_form(const Hypergraph& h);

/// Inverse of canonical_form (the result is the canonical representative).
Hypergraph parse_canonical_form(const std::string& text);

}  // namespace hypercover

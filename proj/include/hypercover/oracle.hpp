#pragma once

#include "hypercover/hypergraph.hpp"

namespace hypercover {

// Brute-force reference values, written independently of the branch-and-bound
// solvers and used to cross-check them. Exponential in the edge count.

inline constexpr std::size_t kOracleEdgeGuard = 40;

/// Largest m-matching by plain include/exclude recursion.
int oracle_matching_number(const Hypergraph& h, int m);

/// Smallest m-cover by iterative deepening over the m-subsets of the first
/// uncovered edge. Throws GuardExceeded on large instances.
int oracle_cover_number(const Hypergraph& h, int m);

}  // namespace hypercover

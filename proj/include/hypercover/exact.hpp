#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "hypercover/hypergraph.hpp"
#include "hypercover/rational.hpp"

namespace hypercover {

struct SolveStats {
  std::uint64_t nodes_explored = 0;
  int best_bound = 0;
  std::chrono::nanoseconds elapsed{0};
};

struct MatchingResult {
  Matching matching;
  SolveStats stats;
};

struct CoverResult {
  CoverCertificate cover;
  SolveStats stats;
};

/// Maximum m-matching by branch and bound over the edge conflict graph
/// (edges conflict when they share at least m vertices).
///
/// Among all maximum matchings the one with the lexicographically smallest
/// ascending index sequence is returned. Requires 1 <= m <= k.
MatchingResult max_m_matching(const Hypergraph& h, int m);

/// Minimum m-cover by branching on the first uncovered edge over its
/// m-subsets. Candidates are restricted to m-subsets of edges. Requires
/// 1 <= m <= k.
CoverResult min_m_cover(const Hypergraph& h, int m);

int matching_number(const Hypergraph& h, int m);
int cover_number(const Hypergraph& h, int m);

/// Calls `visit` with every maximum m-matching (ascending index lists, in
/// lexicographic order). Stops early when `visit` returns false.
void for_each_maximum_matching(const Hypergraph& h, int m,
                               const std::function<bool(const Matching&)>& visit);
std::vector<Matching> all_maximum_matchings(const Hypergraph& h, int m);

/// Index of the first edge containing no m-set of the certificate.
/// Throws MalformedInput if an m-set has the wrong size or a vertex >= n.
std::optional<std::size_t> first_uncovered_edge(const Hypergraph& h, const CoverCertificate& c);
bool verify_cover(const Hypergraph& h, const CoverCertificate& c);

/// Throws MalformedInput on an out-of-range edge index.
bool verify_matching(const Hypergraph& h, const Matching& matching);

/// nu <= nu* = tau* <= tau <= C(k,m) nu, every quantity exact.
struct SandwichReport {
  int nu = 0;
  Rational nu_star;
  Rational tau_star;
  int tau = 0;
  std::uint64_t binom_bound = 0;
};

/// Solves all four quantities and checks the chain. Throws
/// InvariantViolation when any link fails.
SandwichReport sandwich_check(const Hypergraph& h, int m);

}  // namespace hypercover

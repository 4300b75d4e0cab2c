#pragma once

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

#include "hypercover/hypergraph.hpp"
#include "hypercover/rational.hpp"

namespace hypercover {

enum class AssignmentSide {
  Matching,  // weights on edges
  Cover,     // weights on m-sets
};

/// Exact weights on edges (matching side) or m-sets (cover side), kept in
/// lexicographic object order with no repeated objects.
struct FractionalAssignment {
  AssignmentSide side = AssignmentSide::Cover;
  int m = 1;
  std::vector<std::pair<VertexSet, Rational>> weights;

  Rational total() const;
  /// Adds `w` to the weight of `object`, keeping canonical order.
  void add(VertexSet object, const Rational& w);
  Rational weight_of(VertexSet object) const;
};

struct FractionalSolution {
  FractionalAssignment matching;
  FractionalAssignment cover;
  std::uint64_t pivots = 0;
};

inline constexpr std::size_t kDefaultLpGuard = 5000;

/// Optimal fractional m-matching and fractional m-cover from one simplex
/// solve, with |f| = |c| exactly. Rows are the m-sets lying inside at least
/// one edge. Throws GuardExceeded when edges + rows exceed `guard`.
FractionalSolution solve_fractional(const Hypergraph& h, int m,
                                    std::size_t guard = kDefaultLpGuard);

/// Rechecks every constraint of the assignment's side in exact arithmetic,
/// over all m-subsets of V for the matching side and all edges for the
/// cover side. Throws MalformedInput on a negative weight or an object of
/// the wrong size.
bool verify_fractional(const Hypergraph& h, const FractionalAssignment& a);

/// `object-descriptor num/den` lines (descriptor = comma-separated ids),
/// preceded by a `# side=... m=...` header.
void write_assignment(std::ostream& out, const FractionalAssignment& a);
FractionalAssignment read_assignment(std::istream& in);

}  // namespace hypercover

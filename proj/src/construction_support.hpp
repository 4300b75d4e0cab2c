#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hypercover/constructions.hpp"

namespace hypercover::detail {

using Sets = std::vector<VertexSet>;
using Trace = std::vector<std::string>;

std::vector<Edge> edge_list(const Hypergraph& h);

/// The `size` smallest vertices of `s`.
VertexSet first_subset(VertexSet s, int size);

/// Intersection of all edges; all vertices when `edges` is empty.
VertexSet common_core(const std::vector<Edge>& edges);

bool is_covered(Edge e, const Sets& sets);
std::vector<Edge> uncovered(const std::vector<Edge>& edges, const Sets& sets);
void append(Sets& out, const Sets& more);

/// Cover of a family with (k-1)-matching number at most 1 by at most
/// ceil(|edges|/2) sets, or a single set when all edges share k-1 vertices.
Sets pair_cover(int k, const std::vector<Edge>& edges);

/// (k-1)-cover of any instance with nu^(k-1) <= 3 by the matching-number
/// recipes. Throws PreconditionError above 3.
Sets small_nu_cover(const Hypergraph& h, Trace& trace);
Sets nu2_cover(const Hypergraph& h, Trace& trace);
Sets nu3_cover(const Hypergraph& h, Trace& trace);

/// Edges of `h` meeting some edge of `centers` in at least k-1 vertices.
std::vector<Edge> neighborhood(const Hypergraph& h, const std::vector<Edge>& centers);

/// Deduplicates, verifies against `h`, checks the bound, then removes
/// redundant sets from the back. Throws InvariantViolation on an invalid
/// cover or a size above `bound`.
CertifiedCover finalize(const Hypergraph& h, int m, Sets raw, std::uint64_t bound, const Trace& trace);

void require_matching_number(const Hypergraph& h, int m, int expected, const char* op);

std::string join(const Trace& trace);

}  // namespace hypercover::detail

#include <algorithm>

#include "construction_support.hpp"
#include "hypercover/constructions.hpp"
#include "hypercover/errors.hpp"
#include "hypercover/exact.hpp"
#include "hypercover/graph_matching.hpp"

namespace hypercover {

namespace {

using detail::Sets;
using detail::Trace;

// Edge with the most dispensable m-sets; ties go to the first edge.
DispensabilityTable best_table(const Hypergraph& h, int m) {
  std::optional<DispensabilityTable> best;
  for (Edge e : h.edges()) {
    auto t = dispensability(h, e, m);
    if (!best || t.dispensable.size() > best->dispensable.size()) best = std::move(t);
  }
  return *best;
}

// Removes and returns the first pair (a, b) of `pool` with |a ∩ b| == overlap.
std::optional<std::pair<std::size_t, std::size_t>> take_pair(std::vector<std::size_t>& pool,
                                                             const DispensabilityTable& t, int overlap) {
  for (std::size_t i = 0; i < pool.size(); ++i) {
    for (std::size_t j = i + 1; j < pool.size(); ++j) {
      const VertexSet a = t.indispensable[pool[i]].vertices;
      const VertexSet b = t.indispensable[pool[j]].vertices;
      if (intersection_size(a, b) != overlap) continue;
      std::pair out{pool[i], pool[j]};
      pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(j));
      pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(i));
      return out;
    }
  }
  return std::nullopt;
}

std::uint64_t ceil_quarter_square(int k) {
  return static_cast<std::uint64_t>(ceil_div(k * k, 4));
}

Sets kkm2_cover(const Hypergraph& h, Trace& trace) {
  const int k = h.uniformity();
  if (h.empty()) return {};
  if (k <= 4) {
    trace.push_back("kkm2/base-exact-k" + std::to_string(k));
    Sets out;
    for (const MSet& s : min_m_cover(h, k - 2).cover.msets) out.push_back(s.vertices);
    return out;
  }
  const auto all = detail::edge_list(h);

  for (Edge e : all) {
    const bool meets_all = std::all_of(all.begin(), all.end(), [&](Edge x) {
      return x == e || intersection_size(x, e) == k - 2;
    });
    if (!meets_all) continue;
    trace.push_back("kkm2/auxiliary-matching");
    const auto graph = auxiliary_intersection_graph(e, k - 2);
    const auto matched = max_matching_general_graph(static_cast<int>(graph.vertices.size()), graph.edges);
    if (matched.size() != binomial(k, 2) / 2) {
      throw InvariantViolation("kkm2: auxiliary graph matching is not near-perfect");
    }
    auto witnesses = [&](VertexSet a) {
      std::vector<Edge> w;
      for (Edge x : all) {
        if (x != e && (x & e) == a) w.push_back(x);
      }
      return w;
    };
    Sets out;
    std::vector<bool> saturated(graph.vertices.size(), false);
    for (auto [p, q] : matched) {
      saturated[p] = saturated[q] = true;
      const VertexSet a = graph.vertices[p];
      const VertexSet b = graph.vertices[q];
      const auto wa = witnesses(a);
      const auto wb = witnesses(b);
      if (!wa.empty() && !wb.empty()) {
        out.push_back(wa.front() & wb.front());
      } else if (!wa.empty()) {
        out.push_back(a);
      } else if (!wb.empty()) {
        out.push_back(b);
      }
    }
    const auto lone = std::find(saturated.begin(), saturated.end(), false);
    if (lone != saturated.end()) {
      out.push_back(graph.vertices[static_cast<std::size_t>(lone - saturated.begin())]);
    } else if (!detail::is_covered(e, out)) {
      out.push_back(detail::first_subset(e, k - 2));
    }
    return out;
  }

  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      if (intersection_size(all[i], all[j]) != k - 1) continue;
      trace.push_back("kkm2/contract");
      const VertexSet shared = all[i] & all[j];
      const VertexSet uv = (all[i] ^ all[j]);
      Sets out = subsets_of_size(shared, k - 2);
      std::vector<Edge> reduced;
      for (Edge g : detail::uncovered(all, out)) {
        if (!is_subset(uv, g) || intersection_size(g, shared) != k - 3) {
          throw InvariantViolation("kkm2: uncovered edge does not contain the contracted pair");
        }
        reduced.push_back(g & ~uv);
      }
      const Hypergraph smaller(h.vertex_count(), k - 2, std::move(reduced));
      for (VertexSet s : kkm2_cover(smaller, trace)) out.push_back(s | uv);
      return out;
    }
  }
  throw InvariantViolation("kkm2: neither an all-meeting edge nor a (k-1)-intersecting pair");
}

}  // namespace

CertifiedCover cover_g1_km(const Hypergraph& h, int m) {
  const int k = h.uniformity();
  if (k < 6) throw ParameterError("cover_g1_km: requires k >= 6");
  if (2 * m < k || m > k - 2) throw ParameterError("cover_g1_km: requires k/2 <= m <= k-2");
  detail::require_matching_number(h, m, 1, "cover_g1_km");

  const std::uint64_t bound = binomial(k, m) - static_cast<std::uint64_t>(m);
  const auto t = best_table(h, m);
  Trace trace;
  Sets out;
  if (static_cast<int>(t.dispensable.size()) >= m) {
    trace.push_back("g1km/drop-dispensable");
    const auto dropped = std::vector<MSet>(t.dispensable.begin(), t.dispensable.begin() + m);
    for (const MSet& a : m_subsets(t.edge, m)) {
      if (std::find(dropped.begin(), dropped.end(), a) == dropped.end()) out.push_back(a.vertices);
    }
    return detail::finalize(h, m, std::move(out), bound, trace);
  }

  trace.push_back("g1km/pair-indispensable");
  const int overlap = 2 * m - k;
  std::vector<std::size_t> pool(t.indispensable.size());
  for (std::size_t i = 0; i < pool.size(); ++i) pool[i] = i;
  const int pairs = m - static_cast<int>(t.dispensable.size());
  for (int i = 0; i < pairs; ++i) {
    auto pair = take_pair(pool, t, overlap);
    if (!pair) throw InvariantViolation("cover_g1_km: no indispensable pair at the minimum overlap");
    const VertexSet a = t.indispensable[pair->first].vertices;
    const VertexSet b = t.indispensable[pair->second].vertices;
    out.push_back((a & b) | (t.witness[pair->first] & ~t.edge));
  }
  for (auto i : pool) out.push_back(t.indispensable[i].vertices);
  return detail::finalize(h, m, std::move(out), bound, trace);
}

CertifiedCover cover_g1_52(const Hypergraph& h) {
  if (h.uniformity() != 5) throw ParameterError("cover_g1_52: requires k = 5");
  detail::require_matching_number(h, 2, 1, "cover_g1_52");
  constexpr std::uint64_t kBound = 7;
  const auto all = detail::edge_list(h);
  Trace trace;
  if (all.size() == 1) {
    trace.push_back("g52/single-edge");
    return detail::finalize(h, 2, {detail::first_subset(all.front(), 2)}, kBound, trace);
  }

  int r = 0;
  std::pair<Edge, Edge> widest;
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      const int s = intersection_size(all[i], all[j]);
      if (s > r) {
        r = s;
        widest = {all[i], all[j]};
      }
    }
  }
  Sets out;
  if (r >= 3) {
    trace.push_back("g52/r>=3");
    const auto [e, f] = widest;
    out = subsets_of_size(e & f, 2);
    for (int a : to_vertices(e & ~f)) {
      for (int b : to_vertices(f & ~e)) out.push_back(singleton(a) | singleton(b));
    }
    return detail::finalize(h, 2, std::move(out), kBound, trace);
  }

  const auto t = best_table(h, 2);
  const int dispensable = static_cast<int>(t.dispensable.size());
  if (dispensable >= 3) {
    trace.push_back("g52/drop-dispensable");
    const auto dropped = std::vector<MSet>(t.dispensable.begin(), t.dispensable.begin() + 3);
    for (const MSet& a : m_subsets(t.edge, 2)) {
      if (std::find(dropped.begin(), dropped.end(), a) == dropped.end()) out.push_back(a.vertices);
    }
    return detail::finalize(h, 2, std::move(out), kBound, trace);
  }
  trace.push_back("g52/disjoint-pairs");
  std::vector<std::size_t> pool(t.indispensable.size());
  for (std::size_t i = 0; i < pool.size(); ++i) pool[i] = i;
  for (int i = 0; i < ceil_div(5 - dispensable, 2); ++i) {
    auto pair = take_pair(pool, t, 0);
    if (!pair) throw InvariantViolation("cover_g1_52: no disjoint indispensable pair");
    out.push_back(t.witness[pair->first] & t.witness[pair->second]);
  }
  for (auto i : pool) out.push_back(t.indispensable[i].vertices);
  return detail::finalize(h, 2, std::move(out), kBound, trace);
}

CertifiedCover cover_g1_kkm2(const Hypergraph& h) {
  const int k = h.uniformity();
  if (k < 3) throw ParameterError("cover_g1_kkm2: requires k >= 3");
  detail::require_matching_number(h, k - 2, 1, "cover_g1_kkm2");
  Trace trace;
  auto raw = kkm2_cover(h, trace);
  return detail::finalize(h, k - 2, std::move(raw), ceil_quarter_square(k), trace);
}

}  // namespace hypercover

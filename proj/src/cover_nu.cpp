#include <algorithm>

#include "construction_support.hpp"
#include "hypercover/constructions.hpp"
#include "hypercover/errors.hpp"
#include "hypercover/exact.hpp"

namespace hypercover {

namespace detail {

namespace {

std::vector<Edge> minus_edges(const std::vector<Edge>& all, const std::vector<Edge>& removed) {
  std::vector<Edge> out;
  for (Edge x : all) {
    if (std::find(removed.begin(), removed.end(), x) == removed.end()) out.push_back(x);
  }
  return out;
}

// S_x for every edge of the matching, in matching order.
std::vector<std::vector<Edge>> s_edges(const Hypergraph& h, const Matching& m) {
  const auto d = decompose(h, m);
  std::vector<std::vector<Edge>> out;
  for (const auto& list : d.s_sets) {
    std::vector<Edge> edges;
    for (auto i : list) edges.push_back(h.edge(i));
    out.push_back(std::move(edges));
  }
  return out;
}

std::vector<Edge> s_edges_of(const Hypergraph& h, const Matching& m, Edge x) {
  const auto all = s_edges(h, m);
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (h.edge(m.edge_indices[i]) == x) return all[i];
  }
  throw InvariantViolation("s_edges_of: edge not in matching");
}

Sets edge_minus(Edge e, VertexSet vertices) {
  Sets out;
  for (int v : to_vertices(vertices)) out.push_back(e & ~singleton(v));
  return out;
}

Sets cover_rest(const Hypergraph& h, const std::vector<Edge>& remaining, Trace& trace) {
  return small_nu_cover(h.with_edges(remaining), trace);
}

Sets disconnected_cover(const Hypergraph& h, const MatchingPartition& p, Trace& trace) {
  trace.push_back("disconnected");
  std::vector<Edge> first_centers;
  for (auto i : p.first) first_centers.push_back(h.edge(i));
  const auto first = neighborhood(h, first_centers);
  const auto second = minus_edges(edge_list(h), first);
  Sets out = cover_rest(h, first, trace);
  append(out, cover_rest(h, second, trace));
  return out;
}

// Covers the edges of each list still missed by `out`, in order.
void add_residuals(Sets& out, int k, const std::vector<std::vector<Edge>>& lists) {
  for (const auto& list : lists) append(out, pair_cover(k, uncovered(list, out)));
}

struct Seed {
  Matching matching;
  MatchingTypeClassification cls;
};

}  // namespace

Sets nu2_cover(const Hypergraph& h, Trace& trace) {
  const int k = h.uniformity();
  if (k < 3) throw ParameterError("nu2 construction requires k >= 3");

  std::optional<Matching> first;
  std::optional<std::pair<Matching, MatchingPartition>> split;
  for_each_maximum_matching(h, k - 1, [&](const Matching& m) {
    if (!first) first = m;
    if (auto p = find_disconnected_partition(m, h)) {
      split.emplace(m, *p);
      return false;
    }
    return true;
  });
  if (split) return disconnected_cover(h, split->second, trace);
  if (!first || first->size() != 2) throw InvariantViolation("nu2 construction: no 2-matching");

  const Edge e = h.edge(first->edge_indices[0]);
  const Edge f = h.edge(first->edge_indices[1]);
  const auto s = s_edges(h, *first);
  const auto& se = s[0];
  const auto& sf = s[1];
  const VertexSet shared = e & f;
  auto all_contain_shared = [&](const std::vector<Edge>& list) {
    return std::all_of(list.begin(), list.end(), [&](Edge x) { return is_subset(shared, x); });
  };

  Sets out;
  if (all_contain_shared(se) || all_contain_shared(sf)) {
    const bool on_e = all_contain_shared(se);
    trace.push_back(on_e ? "nu2/S_e-contains-S" : "nu2/S_f-contains-S");
    append(out, edge_minus(on_e ? e : f, on_e ? e & ~f : f & ~e));
    append(out, pair_cover(k, on_e ? sf : se));
    return out;
  }
  const VertexSet core_e = common_core(se);
  const VertexSet core_f = common_core(sf);
  if (set_size(core_e) >= k - 1 || set_size(core_f) >= k - 1) {
    const bool on_e = set_size(core_e) >= k - 1;
    trace.push_back(on_e ? "nu2/tau(S_e)=1" : "nu2/tau(S_f)=1");
    out.push_back(first_subset(on_e ? core_e : core_f, k - 1));
    for (const MSet& a : m_subsets(on_e ? f : e, k - 1)) out.push_back(a.vertices);
    return out;
  }
  trace.push_back("nu2/unique-vertex");
  append(out, pair_cover(k, se));
  append(out, pair_cover(k, minus_edges(sf, {f})));
  append(out, edge_minus(f, f & ~e));
  return out;
}

Sets nu3_cover(const Hypergraph& h, Trace& trace) {
  const int k = h.uniformity();
  if (k < 3) throw ParameterError("nu3 construction requires k >= 3");

  const auto matchings = all_maximum_matchings(h, k - 1);
  if (matchings.empty() || matchings.front().size() != 3) {
    throw InvariantViolation("nu3 construction: no 3-matching");
  }
  for (const auto& m : matchings) {
    if (auto p = find_disconnected_partition(m, h)) return disconnected_cover(h, *p, trace);
  }
  std::vector<Seed> seeds;
  for (const auto& m : matchings) seeds.push_back({m, classify_matching(h, m)});
  auto first_of = [&](MatchingType t) -> const Seed* {
    for (const auto& s : seeds) {
      if (s.cls.type == t) return &s;
    }
    return nullptr;
  };
  const auto all = edge_list(h);
  auto t_of = [&](Edge x) { return neighborhood(h, {x}); };

  if (k == 3) {
    if (const Seed* seed = first_of(MatchingType::ThreeUniformA)) {
      const auto& c = seed->cls;
      const Edge e = c.center, f = c.f, g = c.g;
      const VertexSet x = c.roles.at("x"), y = c.roles.at("y");
      const VertexSet a = c.roles.at("a"), cc = c.roles.at("c");
      // Prefers an edge whose third vertex lies in `target`.
      auto other_containing = [&](VertexSet pair, Edge owner, VertexSet target) -> std::optional<Edge> {
        std::optional<Edge> any;
        for (Edge z : all) {
          if (z == owner || !is_subset(pair, z)) continue;
          if (is_subset(z & ~pair, target)) return z;
          if (!any) any = z;
        }
        return any;
      };
      const auto f1 = other_containing(a, f, g & ~e);
      const auto g1 = other_containing(cc, g, f & ~e);
      if (!f1 || !g1) {
        const bool on_f = !f1;
        trace.push_back(on_f ? "nu3/3U-a/lonely-f" : "nu3/3U-a/lonely-g");
        const Edge leaf = on_f ? f : g;
        const VertexSet hub = on_f ? x : y;
        Sets out;
        for (int v : to_vertices(leaf & ~hub)) out.push_back(hub | singleton(v));
        append(out, cover_rest(h, minus_edges(all, t_of(leaf)), trace));
        return out;
      }
      const auto sf = s_edges_of(h, seed->matching, f);
      const auto sg = s_edges_of(h, seed->matching, g);
      for (auto [leaf, list] : {std::pair{f, &sf}, std::pair{g, &sg}}) {
        const VertexSet core = common_core(*list);
        if (set_size(core) >= 2) {
          trace.push_back("nu3/3U-a/pendant");
          Sets out{first_subset(core, 2)};
          for (const MSet& p : m_subsets(e, 2)) out.push_back(p.vertices);
          append(out, cover_rest(h, minus_edges(minus_edges(all, t_of(leaf)), t_of(e)), trace));
          return out;
        }
      }
      const VertexSet u = *f1 & ~a;
      const VertexSet v = *g1 & ~cc;
      if (!is_subset(u, g) || !is_subset(v, f)) {
        throw InvariantViolation("nu3/3U-a: completing vertices are not where the case requires");
      }
      trace.push_back("nu3/3U-a/six");
      Sets out;
      for (const MSet& p : m_subsets(e, 2)) out.push_back(p.vertices);
      out.push_back(u | v);
      out.push_back(f & ~v);
      out.push_back(g & ~u);
      return out;
    }
    for (std::size_t i = 0; i < all.size(); ++i) {
      for (std::size_t j = i + 1; j < all.size(); ++j) {
        if ((all[i] & all[j]) != 0) continue;
        trace.push_back("nu3/3U/disjoint-pair");
        Sets out;
        for (const MSet& p : m_subsets(all[i], 2)) out.push_back(p.vertices);
        for (const MSet& p : m_subsets(all[j], 2)) out.push_back(p.vertices);
        return out;
      }
    }
    for (const auto& seed : seeds) {
      if (seed.cls.type != MatchingType::ThreeUniformB) continue;
      const VertexSet x = seed.cls.roles.at("x");
      for (Edge leaf : {seed.cls.center, seed.cls.f, seed.cls.g}) {
        const VertexSet pair = leaf & ~x;
        const bool alone = std::none_of(all.begin(), all.end(),
                                        [&](Edge z) { return z != leaf && is_subset(pair, z); });
        if (!alone) continue;
        trace.push_back("nu3/3U-b");
        Sets out;
        for (int v : to_vertices(pair)) out.push_back(x | singleton(v));
        append(out, cover_rest(h, minus_edges(all, t_of(leaf)), trace));
        return out;
      }
    }
    if (const Seed* seed = first_of(MatchingType::ThreeUniformC)) {
      trace.push_back("nu3/3U-c");
      const auto& r = seed->cls.roles;
      const VertexSet x = r.at("x"), y = r.at("y"), z = r.at("z");
      return {x | y, x | z, y | z, x | r.at("c"), y | r.at("b"), z | r.at("a")};
    }
    throw InvariantViolation("nu3/3U: no case of the classification applies");
  }

  if (const Seed* seed = first_of(MatchingType::KUniformA)) {
    trace.push_back("nu3/kU-a");
    const auto& c = seed->cls;
    Sets out = edge_minus(c.center, c.roles.at("s") | c.roles.at("u") | c.roles.at("u_bar"));
    append(out, cover_rest(h, minus_edges(all, t_of(c.center)), trace));
    return out;
  }
  if (const Seed* seed = first_of(MatchingType::KUniformB)) {
    trace.push_back("nu3/kU-b");
    const VertexSet shared = seed->cls.roles.at("S");
    Sets out;
    for (Edge x : {seed->cls.center, seed->cls.f, seed->cls.g}) append(out, edge_minus(x, x & ~shared));
    return out;
  }
  auto s_lists = [&](const Seed& seed, std::initializer_list<Edge> order) {
    std::vector<std::vector<Edge>> lists;
    for (Edge x : order) lists.push_back(s_edges_of(h, seed.matching, x));
    return lists;
  };
  if (const Seed* seed = first_of(MatchingType::KUniformC)) {
    trace.push_back("nu3/kU-c");
    const auto& c = seed->cls;
    Sets out = edge_minus(c.center, c.roles.at("u") | c.roles.at("s"));
    add_residuals(out, k, s_lists(*seed, {c.g, c.f}));
    return out;
  }
  if (const Seed* seed = first_of(MatchingType::KUniformD)) {
    trace.push_back("nu3/kU-d");
    const auto& c = seed->cls;
    const auto& r = c.roles;
    Sets out = edge_minus(c.g, r.at("v_bar") | r.at("w"));
    append(out, edge_minus(c.f, r.at("v_bar") | r.at("v")));
    add_residuals(out, k, s_lists(*seed, {c.center, c.g, c.f}));
    return out;
  }
  if (const Seed* seed = first_of(MatchingType::KUniformE)) {
    trace.push_back("nu3/kU-e");
    const auto& c = seed->cls;
    const VertexSet s = c.roles.at("s");
    Sets out = edge_minus(c.center, s);
    append(out, edge_minus(c.f, s));
    append(out, edge_minus(c.f, c.roles.at("v")));
    add_residuals(out, k, s_lists(*seed, {c.center, c.f, c.g}));
    return out;
  }
  if (const Seed* seed = first_of(MatchingType::KUniformF)) {
    const auto& c = seed->cls;
    for (std::size_t i = 0; i < all.size(); ++i) {
      for (std::size_t j = i + 1; j < all.size(); ++j) {
        if (intersection_size(all[i], all[j]) != k - 3) continue;
        trace.push_back("nu3/kU-f/near-pair");
        const VertexSet shared = all[i] & all[j];
        Sets out;
        for (Edge x : {all[i], all[j]}) {
          for (const MSet& p : m_subsets(x & ~shared, 2)) out.push_back(shared | p.vertices);
        }
        const auto left = uncovered(all, out);
        for (Edge x : {all[i], all[j]}) append(out, pair_cover(k, neighborhood(h.with_edges(left), {x})));
        return out;
      }
    }
    trace.push_back("nu3/kU-f");
    const auto& r = c.roles;
    Sets out{c.center & ~r.at("u"), c.f & ~r.at("v"), c.g & ~r.at("w")};
    add_residuals(out, k, s_lists(*seed, {c.center, c.f, c.g}));
    return out;
  }
  throw InvariantViolation("nu3/kU: no case of the classification applies");
}

}  // namespace detail

namespace {

int ceil_half_k_plus_1(int k) { return ceil_div(k + 1, 2); }

}  // namespace

CertifiedCover cover_nu1(const Hypergraph& h) {
  const int k = h.uniformity();
  if (k < 2) throw ParameterError("cover_nu1: requires k >= 2");
  detail::require_matching_number(h, k - 1, 1, "cover_nu1");
  detail::Trace trace{"nu1"};
  return detail::finalize(h, k - 1, detail::pair_cover(k, detail::edge_list(h)),
                          static_cast<std::uint64_t>(ceil_half_k_plus_1(k)), trace);
}

CertifiedCover cover_nu2(const Hypergraph& h) {
  const int k = h.uniformity();
  if (k < 3) throw ParameterError("cover_nu2: requires k >= 3");
  detail::require_matching_number(h, k - 1, 2, "cover_nu2");
  detail::Trace trace;
  auto raw = detail::nu2_cover(h, trace);
  return detail::finalize(h, k - 1, std::move(raw), 2u * ceil_half_k_plus_1(k), trace);
}

CertifiedCover cover_nu3(const Hypergraph& h) {
  const int k = h.uniformity();
  if (k < 3) throw ParameterError("cover_nu3: requires k >= 3");
  detail::require_matching_number(h, k - 1, 3, "cover_nu3");
  detail::Trace trace;
  auto raw = detail::nu3_cover(h, trace);
  return detail::finalize(h, k - 1, std::move(raw), 3u * ceil_half_k_plus_1(k), trace);
}

CertifiedCover cover_small_nu(const Hypergraph& h) {
  const int k = h.uniformity();
  if (k < 3) throw ParameterError("cover_small_nu: requires k >= 3");
  const int nu = h.empty() ? 0 : matching_number(h, k - 1);
  if (nu > 3) throw PreconditionError("cover_small_nu: nu^(k-1)=" + std::to_string(nu) + " exceeds 3");
  detail::Trace trace;
  auto raw = detail::small_nu_cover(h, trace);
  if (trace.empty()) trace.push_back("empty");
  return detail::finalize(h, k - 1, std::move(raw), static_cast<std::uint64_t>(nu) * ceil_half_k_plus_1(k),
                          trace);
}

}  // namespace hypercover

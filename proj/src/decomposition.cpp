#include <algorithm>
#include <numeric>

#include "construction_support.hpp"
#include "hypercover/constructions.hpp"
#include "hypercover/errors.hpp"
#include "hypercover/exact.hpp"

namespace hypercover {

namespace {

void require_valid_matching(const Hypergraph& h, const Matching& m, const char* op) {
  if (m.m != h.uniformity() - 1) {
    throw PreconditionError(std::string(op) + ": matching must be a (k-1)-matching");
  }
  if (!verify_matching(h, m)) {
    throw PreconditionError(std::string(op) + ": edges of the matching share k-1 vertices");
  }
}

std::vector<Edge> matching_edges(const Hypergraph& h, const Matching& m) {
  std::vector<Edge> out;
  for (auto i : m.edge_indices) out.push_back(h.edge(i));
  return out;
}

}  // namespace

NeighborhoodDecomposition decompose(const Hypergraph& h, const Matching& m) {
  require_valid_matching(h, m, "decompose");
  const int k = h.uniformity();
  const auto centers = matching_edges(h, m);

  NeighborhoodDecomposition d;
  d.base_matching = m;
  d.s_sets.resize(centers.size());
  d.t_sets.resize(centers.size());
  d.degrees.assign(h.vertex_count(), 0);
  for (Edge e : centers) {
    for (int v : to_vertices(e)) ++d.degrees[v];
  }
  for (std::size_t i = 0; i < h.edge_count(); ++i) {
    const Edge x = h.edge(i);
    std::vector<std::size_t> near;
    for (std::size_t c = 0; c < centers.size(); ++c) {
      if (intersection_size(x, centers[c]) >= k - 1) near.push_back(c);
    }
    for (auto c : near) d.t_sets[c].push_back(i);
    if (near.size() == 1) d.s_sets[near.front()].push_back(i);
    if (near.empty()) d.unattached.push_back(i);
  }
  return d;
}

std::optional<MatchingPartition> find_disconnected_partition(const Matching& m, const Hypergraph& h) {
  require_valid_matching(h, m, "find_disconnected_partition");
  const int k = h.uniformity();
  const auto& idx = m.edge_indices;
  if (idx.size() < 2) return std::nullopt;

  std::vector<bool> reached(idx.size(), false);
  std::vector<std::size_t> stack{0};
  reached[0] = true;
  while (!stack.empty()) {
    const auto a = stack.back();
    stack.pop_back();
    for (std::size_t b = 0; b < idx.size(); ++b) {
      if (!reached[b] && intersection_size(h.edge(idx[a]), h.edge(idx[b])) >= k - 2) {
        reached[b] = true;
        stack.push_back(b);
      }
    }
  }
  MatchingPartition p;
  for (std::size_t a = 0; a < idx.size(); ++a) (reached[a] ? p.first : p.second).push_back(idx[a]);
  if (p.second.empty()) return std::nullopt;
  return p;
}

std::string_view to_string(MatchingType t) {
  switch (t) {
    case MatchingType::Disconnected: return "disconnected";
    case MatchingType::ThreeUniformA: return "3U-a";
    case MatchingType::ThreeUniformB: return "3U-b";
    case MatchingType::ThreeUniformC: return "3U-c";
    case MatchingType::KUniformA: return "kU-a";
    case MatchingType::KUniformB: return "kU-b";
    case MatchingType::KUniformC: return "kU-c";
    case MatchingType::KUniformD: return "kU-d";
    case MatchingType::KUniformE: return "kU-e";
    case MatchingType::KUniformF: return "kU-f";
  }
  return "?";
}

MatchingTypeClassification classify_matching(const Hypergraph& h, const Matching& m) {
  require_valid_matching(h, m, "classify_matching");
  if (m.size() != 3) throw PreconditionError("classify_matching: matching must have 3 edges");
  const int k = h.uniformity();
  if (k < 3) throw ParameterError("classify_matching: requires k >= 3");

  MatchingTypeClassification c;
  if (find_disconnected_partition(m, h)) {
    c.type = MatchingType::Disconnected;
    return c;
  }
  const auto edges = matching_edges(h, m);
  auto adjacent = [&](Edge a, Edge b) { return intersection_size(a, b) >= k - 2; };
  std::size_t center = 0;
  while (!(adjacent(edges[center], edges[(center + 1) % 3]) && adjacent(edges[center], edges[(center + 2) % 3]))) {
    ++center;
  }
  std::vector<Edge> rest;
  for (std::size_t i = 0; i < 3; ++i) {
    if (i != center) rest.push_back(edges[i]);
  }
  const Edge e = edges[center];
  const Edge f = rest[0];
  const Edge g = rest[1];
  c.center = e;
  c.f = f;
  c.g = g;
  auto& r = c.roles;

  if (k == 3) {
    const VertexSet x = e & f;
    const VertexSet y = e & g;
    if ((f & g) == 0) {
      c.type = MatchingType::ThreeUniformA;
      r = {{"x", x}, {"y", y}, {"a", f & ~x}, {"c", g & ~y}, {"b", e & ~x & ~y}};
    } else if (x == y) {
      c.type = MatchingType::ThreeUniformB;
      r = {{"x", x}};
    } else {
      const VertexSet z = f & g;
      c.type = MatchingType::ThreeUniformC;
      // x = e∩f, y = f∩g, z = e∩g; a, b, c private to f, e, g.
      r = {{"x", x}, {"y", z}, {"z", y}, {"a", f & ~x & ~z}, {"b", e & ~x & ~y}, {"c", g & ~y & ~z}};
    }
    return c;
  }

  const VertexSet S = e & f;
  const VertexSet Sp = S & g;
  const VertexSet U = e & ~f;
  const VertexSet V = f & ~e;
  const VertexSet T = g & ~e & ~f;
  const int sp = set_size(Sp);
  const int fg = intersection_size(f, g);
  r = {{"S", S}, {"S'", Sp}, {"T", T}, {"u", U}, {"v", V}};
  if (sp == k - 2) {
    c.type = MatchingType::KUniformB;
  } else if (sp == k - 3) {
    r["s"] = S & ~g;
    r["u_bar"] = (g & e) & ~Sp;
    r["u"] = U & ~r["u_bar"];
    if (fg == k - 3) {
      c.type = MatchingType::KUniformA;
    } else {
      c.type = MatchingType::KUniformF;
      r["v_bar"] = (g & f) & ~Sp;
      r["v"] = V & ~r["v_bar"];
      r["w"] = T;
    }
  } else {
    r["s"] = S & ~Sp;
    if (fg == k - 4) {
      c.type = MatchingType::KUniformC;
    } else if (fg == k - 3) {
      c.type = MatchingType::KUniformD;
      r["v_bar"] = (f & g) & ~Sp;
      r["v"] = V & ~r["v_bar"];
      r["w"] = T & ~f;
    } else {
      c.type = MatchingType::KUniformE;
    }
  }
  return c;
}

DispensabilityTable dispensability(const Hypergraph& h, Edge e, int m) {
  if (m < 1 || m > set_size(e)) throw ParameterError("dispensability: m out of range");
  DispensabilityTable t;
  t.edge = e;
  t.m = m;
  for (const MSet& a : m_subsets(e, m)) {
    std::optional<Edge> witness;
    for (Edge f : h.edges()) {
      if (f != e && (f & e) == a.vertices) {
        witness = f;
        break;
      }
    }
    if (witness) {
      t.indispensable.push_back(a);
      t.witness.push_back(*witness);
    } else {
      t.dispensable.push_back(a);
    }
  }
  return t;
}

std::uint64_t AuxiliaryIntersectionGraph::expected_degree(int k, int m) {
  const int overlap = std::max(0, 2 * m - k);
  return overlap == 0 ? binomial(k - m, m) : binomial(m, 2 * m - k);
}

AuxiliaryIntersectionGraph auxiliary_intersection_graph(Edge e, int m) {
  const int k = set_size(e);
  if (m < 1 || m > k) throw ParameterError("auxiliary_intersection_graph: m out of range");
  AuxiliaryIntersectionGraph g;
  g.overlap = std::max(0, 2 * m - k);
  g.vertices = subsets_of_size(e, m);
  for (std::size_t a = 0; a < g.vertices.size(); ++a) {
    for (std::size_t b = a + 1; b < g.vertices.size(); ++b) {
      if (intersection_size(g.vertices[a], g.vertices[b]) == g.overlap) {
        g.edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
      }
    }
  }
  return g;
}

}  // namespace hypercover

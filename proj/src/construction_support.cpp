#include "construction_support.hpp"

#include <algorithm>

#include "hypercover/errors.hpp"
#include "hypercover/exact.hpp"

namespace hypercover::detail {

std::vector<Edge> edge_list(const Hypergraph& h) {
  return {h.edges().begin(), h.edges().end()};
}

VertexSet first_subset(VertexSet s, int size) {
  VertexSet out = 0;
  for (int i = 0; i < size; ++i) {
    if (s == 0) throw InvariantViolation("first_subset: set too small");
    const VertexSet low = s & (~s + 1);
    out |= low;
    s &= ~low;
  }
  return out;
}

VertexSet common_core(const std::vector<Edge>& edges) {
  VertexSet core = ~VertexSet{0};
  for (Edge e : edges) core &= e;
  return core;
}

bool is_covered(Edge e, const Sets& sets) {
  return std::any_of(sets.begin(), sets.end(), [e](VertexSet s) { return is_subset(s, e); });
}

std::vector<Edge> uncovered(const std::vector<Edge>& edges, const Sets& sets) {
  std::vector<Edge> out;
  for (Edge e : edges) {
    if (!is_covered(e, sets)) out.push_back(e);
  }
  return out;
}

void append(Sets& out, const Sets& more) {
  out.insert(out.end(), more.begin(), more.end());
}

Sets pair_cover(int k, const std::vector<Edge>& edges) {
  if (edges.empty()) return {};
  const VertexSet core = common_core(edges);
  if (set_size(core) >= k - 1) return {first_subset(core, k - 1)};

  // Every other edge leaves the base edge through one and the same vertex.
  const Edge base = edges.front();
  VertexSet outside = 0;
  std::vector<Edge> others(edges.begin() + 1, edges.end());
  for (Edge e : others) {
    const VertexSet d = e & ~base;
    if (set_size(d) != 1 || (outside != 0 && d != outside)) {
      throw InvariantViolation("pair_cover: no unique external vertex; input has nu^(k-1) > 1");
    }
    outside = d;
  }
  Sets out;
  std::size_t i = 0;
  for (; i + 1 < others.size(); i += 2) {
    const VertexSet shared = others[i] & others[i + 1] & base;
    out.push_back(first_subset(shared, k - 2) | outside);
  }
  if (i < others.size()) {
    out.push_back(others[i] & base);
  } else {
    out.push_back(first_subset(base, k - 1));
  }
  return out;
}

std::vector<Edge> neighborhood(const Hypergraph& h, const std::vector<Edge>& centers) {
  const int k = h.uniformity();
  std::vector<Edge> out;
  for (Edge x : h.edges()) {
    if (std::any_of(centers.begin(), centers.end(),
                    [&](Edge c) { return intersection_size(x, c) >= k - 1; })) {
      out.push_back(x);
    }
  }
  return out;
}

Sets small_nu_cover(const Hypergraph& h, Trace& trace) {
  if (h.empty()) return {};
  const int nu = matching_number(h, h.uniformity() - 1);
  switch (nu) {
    case 1:
      trace.push_back("nu1");
      return pair_cover(h.uniformity(), edge_list(h));
    case 2:
      return nu2_cover(h, trace);
    case 3:
      return nu3_cover(h, trace);
    default:
      throw PreconditionError("no construction for nu^(k-1)=" + std::to_string(nu));
  }
}

std::string join(const Trace& trace) {
  std::string out;
  for (const auto& step : trace) {
    if (!out.empty()) out += " > ";
    out += step;
  }
  return out;
}

CertifiedCover finalize(const Hypergraph& h, int m, Sets raw, std::uint64_t bound, const Trace& trace) {
  std::sort(raw.begin(), raw.end(), LexLess{});
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
  for (VertexSet s : raw) {
    if (set_size(s) != m) throw InvariantViolation("construction emitted a set of the wrong size");
  }

  CertifiedCover out;
  out.bound = bound;
  out.recipe = join(trace);
  out.construction_size = raw.size();
  out.cover.m = m;

  CoverCertificate full{{}, m};
  for (VertexSet s : raw) full.msets.push_back(MSet{s});
  if (auto miss = first_uncovered_edge(h, full)) {
    throw InvariantViolation("construction '" + out.recipe + "' misses edge {" +
                             format_set(h.edge(*miss)) + "}");
  }
  if (raw.size() > bound) {
    throw InvariantViolation("construction '" + out.recipe + "' emitted " + std::to_string(raw.size()) +
                             " sets, above the bound " + std::to_string(bound));
  }

  std::vector<int> hits(h.edge_count(), 0);
  for (std::size_t i = 0; i < h.edge_count(); ++i) {
    for (VertexSet s : raw) hits[i] += is_subset(s, h.edge(i)) ? 1 : 0;
  }
  std::vector<bool> keep(raw.size(), true);
  for (std::size_t j = raw.size(); j-- > 0;) {
    bool redundant = true;
    for (std::size_t i = 0; i < h.edge_count() && redundant; ++i) {
      if (is_subset(raw[j], h.edge(i)) && hits[i] < 2) redundant = false;
    }
    if (!redundant) continue;
    keep[j] = false;
    for (std::size_t i = 0; i < h.edge_count(); ++i) {
      if (is_subset(raw[j], h.edge(i))) --hits[i];
    }
  }
  for (std::size_t j = 0; j < raw.size(); ++j) {
    if (keep[j]) out.cover.msets.push_back(MSet{raw[j]});
  }
  return out;
}

void require_matching_number(const Hypergraph& h, int m, int expected, const char* op) {
  const int nu = matching_number(h, m);
  if (nu != expected) {
    throw PreconditionError(std::string(op) + ": requires nu^(" + std::to_string(m) + ")=" +
                            std::to_string(expected) + ", instance has " + std::to_string(nu));
  }
}

}  // namespace hypercover::detail

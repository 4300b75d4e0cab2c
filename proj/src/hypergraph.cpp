#include "hypercover/hypergraph.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "hypercover/errors.hpp"

namespace hypercover {

Hypergraph::Hypergraph(int n, int k, std::vector<Edge> edges)
    : n_(n), k_(k), edges_(std::move(edges)) {
  if (n < 0 || n > kMaxVertices) {
    throw ParameterError("vertex count must be in 0..64, got " + std::to_string(n));
  }
  if (k < 1) throw ParameterError("uniformity must be >= 1");
  const VertexSet universe = all_vertices(n);
  for (Edge e : edges_) {
    if (set_size(e) != k) {
      throw ParameterError("edge {" + format_set(e) + "} does not have " +
                           std::to_string(k) + " vertices");
    }
    if (!is_subset(e, universe)) {
      throw ParameterError("edge {" + format_set(e) + "} has a vertex >= n");
    }
  }
  std::sort(edges_.begin(), edges_.end(), LexLess{});
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

std::optional<std::size_t> Hypergraph::index_of(Edge e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e, LexLess{});
  if (it == edges_.end() || *it != e) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

Hypergraph Hypergraph::with_edges(std::vector<Edge> edges) const {
  return Hypergraph(n_, k_, std::move(edges));
}

Hypergraph Hypergraph::restricted_to(std::span<const std::size_t> indices) const {
  std::vector<Edge> sub;
  sub.reserve(indices.size());
  for (auto i : indices) sub.push_back(edges_.at(i));
  return with_edges(std::move(sub));
}

Hypergraph Hypergraph::minus(const Hypergraph& other) const {
  std::vector<Edge> rest;
  for (Edge e : edges_) {
    if (!other.contains(e)) rest.push_back(e);
  }
  return with_edges(std::move(rest));
}

std::vector<MSet> m_subsets(Edge e, int m) {
  if (m < 0 || m > set_size(e)) {
    throw ParameterError("m_subsets: m=" + std::to_string(m) + " exceeds edge size " +
                         std::to_string(set_size(e)));
  }
  std::vector<MSet> out;
  for (VertexSet s : subsets_of_size(e, m)) out.push_back(MSet{s});
  return out;
}

namespace {

// Non-empty, non-comment lines split into tokens.
std::vector<std::vector<std::string>> tokenized_lines(std::istream& in) {
  std::vector<std::vector<std::string>> lines;
  std::string line;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ss(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (ss >> tok) tokens.push_back(tok);
    lines.push_back(std::move(tokens));
  }
  return lines;
}

long long parse_integer(const std::string& tok) {
  try {
    std::size_t pos = 0;
    long long v = std::stoll(tok, &pos);
    if (pos != tok.size()) throw MalformedInput("not an integer: '" + tok + "'");
    return v;
  } catch (const std::logic_error&) {
    throw MalformedInput("not an integer: '" + tok + "'");
  }
}

// Maps arbitrary non-negative labels to dense ids. Identity when every label
// already lies in 0..n-1.
std::map<long long, int> dense_relabeling(const std::vector<long long>& used, int n,
                                          std::vector<long long>& labels) {
  std::map<long long, int> index;
  bool dense = true;
  for (long long v : used) {
    if (v < 0) throw MalformedInput("negative vertex label " + std::to_string(v));
    if (v >= n) dense = false;
  }
  labels.clear();
  if (dense) {
    for (int v = 0; v < n; ++v) {
      index[v] = v;
      labels.push_back(v);
    }
    return index;
  }
  for (long long v : used) index.emplace(v, 0);
  if (static_cast<int>(index.size()) > n) {
    throw MalformedInput("more distinct vertex labels than the declared n=" + std::to_string(n));
  }
  int next = 0;
  for (auto& [label, id] : index) {
    id = next++;
    labels.push_back(label);
  }
  // ids past the last used label stay isolated and have no original label
  return index;
}

}  // namespace

ParsedHypergraph read_hypergraph(std::istream& in) {
  auto lines = tokenized_lines(in);
  if (lines.empty()) throw MalformedInput("hypergraph: missing header line `n k e`");
  if (lines[0].size() != 3) throw MalformedInput("hypergraph: header must be `n k e`");
  const long long n = parse_integer(lines[0][0]);
  const long long k = parse_integer(lines[0][1]);
  const long long e = parse_integer(lines[0][2]);
  if (n < 0 || n > kMaxVertices) throw MalformedInput("hypergraph: n must be in 0..64");
  if (k < 1 || k > n) throw MalformedInput("hypergraph: k must be in 1..n");
  if (e < 0 || static_cast<std::size_t>(e) != lines.size() - 1) {
    throw MalformedInput("hypergraph: header announces " + std::to_string(e) + " edges, found " +
                         std::to_string(lines.size() - 1));
  }
  std::vector<long long> used;
  std::vector<std::vector<long long>> raw;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (static_cast<long long>(lines[i].size()) != k) {
      throw MalformedInput("hypergraph: edge line " + std::to_string(i) + " does not have k ids");
    }
    std::vector<long long> ids;
    for (const auto& tok : lines[i]) ids.push_back(parse_integer(tok));
    used.insert(used.end(), ids.begin(), ids.end());
    raw.push_back(std::move(ids));
  }
  ParsedHypergraph out;
  auto index = dense_relabeling(used, static_cast<int>(n), out.labels);
  std::vector<Edge> edges;
  for (const auto& ids : raw) {
    Edge edge = 0;
    for (long long id : ids) edge |= singleton(index.at(id));
    if (set_size(edge) != k) throw MalformedInput("hypergraph: repeated vertex inside an edge");
    edges.push_back(edge);
  }
  out.hypergraph = Hypergraph(static_cast<int>(n), static_cast<int>(k), std::move(edges));
  return out;
}

Hypergraph parse_hypergraph(const std::string& text) {
  std::istringstream in(text);
  return read_hypergraph(in).hypergraph;
}

void write_hypergraph(std::ostream& out, const Hypergraph& h) {
  out << h.vertex_count() << ' ' << h.uniformity() << ' ' << h.edge_count() << '\n';
  for (Edge e : h.edges()) out << format_set(e) << '\n';
}

std::string to_text(const Hypergraph& h) {
  std::ostringstream out;
  write_hypergraph(out, h);
  return out.str();
}

SimpleGraph make_graph(int n, std::vector<std::pair<int, int>> edges) {
  if (n < 0) throw ParameterError("graph: negative vertex count");
  SimpleGraph g;
  g.n = n;
  std::vector<std::pair<int, int>> seen;
  for (auto [u, v] : edges) {
    if (u == v) throw MalformedInput("graph: self-loop at vertex " + std::to_string(u));
    if (u < 0 || v < 0 || u >= n || v >= n) throw MalformedInput("graph: vertex out of range");
    if (u > v) std::swap(u, v);
    if (std::find(seen.begin(), seen.end(), std::pair{u, v}) != seen.end()) {
      throw MalformedInput("graph: repeated edge " + std::to_string(u) + "-" + std::to_string(v));
    }
    seen.emplace_back(u, v);
  }
  g.edges = std::move(seen);
  for (int v = 0; v < n; ++v) g.labels.push_back(v);
  return g;
}

SimpleGraph read_graph(std::istream& in) {
  auto lines = tokenized_lines(in);
  if (lines.empty() || lines[0].size() != 2) throw MalformedInput("graph: header must be `n e`");
  const long long n = parse_integer(lines[0][0]);
  const long long e = parse_integer(lines[0][1]);
  if (n < 0 || e < 0 || static_cast<std::size_t>(e) != lines.size() - 1) {
    throw MalformedInput("graph: header edge count does not match the body");
  }
  std::vector<long long> used;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].size() != 2) throw MalformedInput("graph: each edge line needs two ids");
    used.push_back(parse_integer(lines[i][0]));
    used.push_back(parse_integer(lines[i][1]));
  }
  std::vector<long long> labels;
  auto index = dense_relabeling(used, static_cast<int>(n), labels);
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < used.size(); i += 2) {
    edges.emplace_back(index.at(used[i]), index.at(used[i + 1]));
  }
  auto g = make_graph(static_cast<int>(n), std::move(edges));
  g.labels = std::move(labels);
  return g;
}

void write_graph(std::ostream& out, const SimpleGraph& g) {
  out << g.n << ' ' << g.edges.size() << '\n';
  for (auto [u, v] : g.edges) out << u << ' ' << v << '\n';
}

void write_cover(std::ostream& out, const CoverCertificate& cover) {
  out << "# m=" << cover.m << " size=" << cover.size() << '\n';
  for (const auto& s : cover.msets) out << format_set(s.vertices) << '\n';
}

CoverCertificate read_cover(std::istream& in) {
  CoverCertificate cover;
  std::optional<int> declared_m;
  std::string line;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') {
      auto pos = line.find("m=");
      if (pos != std::string::npos && !declared_m) {
        declared_m = static_cast<int>(parse_integer(line.substr(pos + 2, line.find(' ', pos) - pos - 2)));
      }
      continue;
    }
    std::istringstream ss(line);
    std::string tok;
    VertexSet s = 0;
    int count = 0;
    while (ss >> tok) {
      const long long v = parse_integer(tok);
      if (v < 0 || v >= kMaxVertices) throw MalformedInput("cover: vertex id out of range");
      s |= singleton(static_cast<int>(v));
      ++count;
    }
    if (set_size(s) != count) throw MalformedInput("cover: repeated vertex in an m-set");
    cover.msets.push_back(MSet{s});
  }
  if (!cover.msets.empty()) {
    cover.m = cover.msets.front().size();
    for (const auto& s : cover.msets) {
      if (s.size() != cover.m) throw MalformedInput("cover: m-sets of different sizes");
    }
    if (declared_m && *declared_m != cover.m) throw MalformedInput("cover: header m disagrees with sets");
  } else if (declared_m) {
    cover.m = *declared_m;
  }
  return cover;
}

}  // namespace hypercover

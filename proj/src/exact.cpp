#include "hypercover/exact.hpp"

#include <algorithm>
#include <boost/dynamic_bitset.hpp>
#include <map>
#include <numeric>

#include "hypercover/errors.hpp"

namespace hypercover {

namespace {

using Bits = boost::dynamic_bitset<std::uint64_t>;

void check_parameter(const Hypergraph& h, int m, const char* op) {
  if (m < 1 || m > h.uniformity()) {
    throw ParameterError(std::string(op) + ": m must satisfy 1 <= m <= k (m=" + std::to_string(m) +
                         ", k=" + std::to_string(h.uniformity()) + ")");
  }
}

// conflict[i] holds every j != i whose edge shares at least m vertices with
// edge i.
std::vector<Bits> conflict_graph(const Hypergraph& h, int m) {
  const auto n = h.edge_count();
  std::vector<Bits> conflict(n, Bits(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (intersection_size(h.edge(i), h.edge(j)) >= m) {
        conflict[i].set(j);
        conflict[j].set(i);
      }
    }
  }
  return conflict;
}

// Greedy partition of `candidates` into conflict cliques; a matching takes at
// most one edge per clique.
std::size_t clique_cover_bound(const std::vector<Bits>& conflict, Bits remaining) {
  std::size_t cliques = 0;
  while (remaining.any()) {
    auto v = remaining.find_first();
    remaining.reset(v);
    Bits common = remaining & conflict[v];
    while (common.any()) {
      auto w = common.find_first();
      remaining.reset(w);
      common.reset(w);
      common &= conflict[w];
    }
    ++cliques;
  }
  return cliques;
}

class MatchingSearch {
 public:
  MatchingSearch(const Hypergraph& h, int m) : conflict_(conflict_graph(h, m)), n_(h.edge_count()) {}

  std::vector<std::size_t> run(SolveStats& stats) {
    Bits all(n_);
    all.set();
    expand(all);
    stats.nodes_explored = nodes_;
    return best_;
  }

  // Enumerates independent sets of exactly `target` edges in lexicographic
  // order.
  void enumerate(std::size_t target, const std::function<bool(const std::vector<std::size_t>&)>& visit) {
    Bits all(n_);
    all.set();
    stop_ = false;
    enumerate_from(all, target, visit);
  }

 private:
  void expand(const Bits& candidates) {
    ++nodes_;
    if (candidates.none()) {
      if (current_.size() > best_.size()) best_ = current_;
      return;
    }
    if (current_.size() + clique_cover_bound(conflict_, candidates) <= best_.size()) return;
    const auto v = candidates.find_first();
    Bits with = candidates - conflict_[v];
    with.reset(v);
    current_.push_back(v);
    expand(with);
    current_.pop_back();
    Bits without = candidates;
    without.reset(v);
    expand(without);
  }

  void enumerate_from(const Bits& candidates, std::size_t target,
                      const std::function<bool(const std::vector<std::size_t>&)>& visit) {
    if (stop_) return;
    if (current_.size() == target) {
      if (!visit(current_)) stop_ = true;
      return;
    }
    if (current_.size() + clique_cover_bound(conflict_, candidates) < target) return;
    const auto v = candidates.find_first();
    Bits with = candidates - conflict_[v];
    with.reset(v);
    current_.push_back(v);
    enumerate_from(with, target, visit);
    current_.pop_back();
    Bits without = candidates;
    without.reset(v);
    enumerate_from(without, target, visit);
  }

  std::vector<Bits> conflict_;
  std::size_t n_;
  std::vector<std::size_t> current_;
  std::vector<std::size_t> best_;
  std::uint64_t nodes_ = 0;
  bool stop_ = false;
};

class CoverSearch {
 public:
  CoverSearch(const Hypergraph& h, int m) : edges_(h.edge_count()), conflict_(conflict_graph(h, m)) {
    std::map<VertexSet, std::size_t, LexLess> index;
    for (Edge e : h.edges()) {
      for (VertexSet s : subsets_of_size(e, m)) index.emplace(s, 0);
    }
    for (auto& [s, i] : index) {
      i = pool_.size();
      pool_.push_back(s);
    }
    coverage_.assign(pool_.size(), Bits(edges_));
    options_.resize(edges_);
    for (std::size_t i = 0; i < edges_; ++i) {
      for (VertexSet s : subsets_of_size(h.edge(i), m)) {
        const auto p = index.at(s);
        coverage_[p].set(i);
        options_[i].push_back(p);
      }
    }
  }

  std::vector<VertexSet> run(SolveStats& stats) {
    Bits uncovered(edges_);
    uncovered.set();
    best_ = greedy(uncovered);
    Bits forbidden(pool_.size());
    std::vector<std::size_t> chosen;
    expand(uncovered, forbidden, chosen);
    stats.nodes_explored = std::max<std::uint64_t>(nodes_, edges_ ? 1 : 0);
    std::vector<VertexSet> out;
    for (auto p : best_) out.push_back(pool_[p]);
    std::sort(out.begin(), out.end(), LexLess{});
    return out;
  }

 private:
  std::vector<std::size_t> greedy(Bits uncovered) const {
    std::vector<std::size_t> chosen;
    while (uncovered.any()) {
      const auto e = uncovered.find_first();
      std::size_t pick = options_[e].front();
      std::size_t gain = 0;
      for (auto p : options_[e]) {
        const auto g = (coverage_[p] & uncovered).count();
        if (g > gain) {
          gain = g;
          pick = p;
        }
      }
      chosen.push_back(pick);
      uncovered -= coverage_[pick];
    }
    return chosen;
  }

  // Edges pairwise sharing fewer than m vertices need distinct cover sets.
  std::size_t packing_bound(Bits remaining) const {
    std::size_t count = 0;
    while (remaining.any()) {
      const auto v = remaining.find_first();
      remaining.reset(v);
      remaining -= conflict_[v];
      ++count;
    }
    return count;
  }

  void expand(const Bits& uncovered, Bits forbidden, std::vector<std::size_t>& chosen) {
    ++nodes_;
    if (uncovered.none()) {
      if (chosen.size() < best_.size()) best_ = chosen;
      return;
    }
    if (chosen.size() + packing_bound(uncovered) >= best_.size()) return;
    const auto e = uncovered.find_first();

    struct Option {
      std::size_t pool_index;
      Bits gain;
      std::size_t gain_count;
    };
    std::vector<Option> options;
    for (auto p : options_[e]) {
      if (forbidden.test(p)) continue;
      Bits gain = coverage_[p] & uncovered;
      const auto count = gain.count();
      options.push_back({p, std::move(gain), count});
    }
    // Drop options whose newly covered edges are a subset of another option's.
    std::vector<bool> dominated(options.size(), false);
    for (std::size_t i = 0; i < options.size(); ++i) {
      for (std::size_t j = 0; j < options.size() && !dominated[i]; ++j) {
        if (i == j) continue;
        if (options[i].gain.is_subset_of(options[j].gain) &&
            (options[i].gain != options[j].gain || j < i)) {
          dominated[i] = true;
        }
      }
    }
    std::vector<Option> kept;
    for (std::size_t i = 0; i < options.size(); ++i) {
      if (!dominated[i]) kept.push_back(std::move(options[i]));
    }
    std::stable_sort(kept.begin(), kept.end(),
                     [](const Option& a, const Option& b) { return a.gain_count > b.gain_count; });
    for (const auto& opt : kept) {
      chosen.push_back(opt.pool_index);
      expand(uncovered - opt.gain, forbidden, chosen);
      chosen.pop_back();
      forbidden.set(opt.pool_index);
    }
  }

  std::size_t edges_;
  std::vector<Bits> conflict_;
  std::vector<VertexSet> pool_;
  std::vector<Bits> coverage_;
  std::vector<std::vector<std::size_t>> options_;
  std::vector<std::size_t> best_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

MatchingResult max_m_matching(const Hypergraph& h, int m) {
  check_parameter(h, m, "max_m_matching");
  const auto start = std::chrono::steady_clock::now();
  MatchingResult result;
  result.matching.m = m;
  if (!h.empty()) {
    MatchingSearch search(h, m);
    result.matching.edge_indices = search.run(result.stats);
  }
  result.stats.best_bound = static_cast<int>(result.matching.size());
  result.stats.elapsed = std::chrono::steady_clock::now() - start;
  return result;
}

CoverResult min_m_cover(const Hypergraph& h, int m) {
  check_parameter(h, m, "min_m_cover");
  const auto start = std::chrono::steady_clock::now();
  CoverResult result;
  result.cover.m = m;
  if (!h.empty()) {
    CoverSearch search(h, m);
    for (VertexSet s : search.run(result.stats)) result.cover.msets.push_back(MSet{s});
  }
  result.stats.best_bound = static_cast<int>(result.cover.size());
  result.stats.elapsed = std::chrono::steady_clock::now() - start;
  return result;
}

int matching_number(const Hypergraph& h, int m) {
  return static_cast<int>(max_m_matching(h, m).matching.size());
}

int cover_number(const Hypergraph& h, int m) {
  return static_cast<int>(min_m_cover(h, m).cover.size());
}

void for_each_maximum_matching(const Hypergraph& h, int m,
                               const std::function<bool(const Matching&)>& visit) {
  check_parameter(h, m, "for_each_maximum_matching");
  if (h.empty()) {
    visit(Matching{{}, m});
    return;
  }
  const auto nu = max_m_matching(h, m).matching.size();
  MatchingSearch search(h, m);
  search.enumerate(nu, [&](const std::vector<std::size_t>& indices) {
    return visit(Matching{indices, m});
  });
}

std::vector<Matching> all_maximum_matchings(const Hypergraph& h, int m) {
  std::vector<Matching> out;
  for_each_maximum_matching(h, m, [&](const Matching& mt) {
    out.push_back(mt);
    return true;
  });
  return out;
}

std::optional<std::size_t> first_uncovered_edge(const Hypergraph& h, const CoverCertificate& c) {
  const VertexSet universe = all_vertices(h.vertex_count());
  for (const auto& s : c.msets) {
    if (!is_subset(s.vertices, universe)) {
      throw MalformedInput("certificate m-set {" + format_set(s.vertices) + "} has a vertex >= n");
    }
    if (s.size() != c.m) {
      throw MalformedInput("certificate m-set {" + format_set(s.vertices) + "} does not have m=" +
                           std::to_string(c.m) + " vertices");
    }
  }
  for (std::size_t i = 0; i < h.edge_count(); ++i) {
    const Edge e = h.edge(i);
    const bool hit = std::any_of(c.msets.begin(), c.msets.end(),
                                 [e](const MSet& s) { return s.contained_in(e); });
    if (!hit) return i;
  }
  return std::nullopt;
}

bool verify_cover(const Hypergraph& h, const CoverCertificate& c) {
  return !first_uncovered_edge(h, c).has_value();
}

bool verify_matching(const Hypergraph& h, const Matching& matching) {
  for (auto i : matching.edge_indices) {
    if (i >= h.edge_count()) {
      throw MalformedInput("matching references edge " + std::to_string(i) + " of " +
                           std::to_string(h.edge_count()));
    }
  }
  const auto& idx = matching.edge_indices;
  for (std::size_t a = 0; a < idx.size(); ++a) {
    for (std::size_t b = a + 1; b < idx.size(); ++b) {
      if (intersection_size(h.edge(idx[a]), h.edge(idx[b])) >= matching.m) return false;
    }
  }
  return true;
}

}  // namespace hypercover

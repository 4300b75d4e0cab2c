#include "hypercover/canonical.hpp"

#include <algorithm>
#include <map>

#include "hypercover/errors.hpp"

namespace hypercover {

namespace {

using Coloring = std::vector<int>;

bool sequence_less(const std::vector<Edge>& a, const std::vector<Edge>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), LexLess{});
}

// Individualization-refinement search. Every choice below depends only on
// colors, so the set of leaves maps onto itself under isomorphism and the
// minimum leaf is canonical.
class Canonizer {
 public:
  explicit Canonizer(const Hypergraph& h) : h_(h), n_(h.vertex_count()), incident_(n_) {
    for (Edge e : h.edges()) {
      for (int v : to_vertices(e)) incident_[v].push_back(e);
    }
  }

  std::vector<Edge> run() {
    Coloring start(n_, 0);
    search(refine(start));
    return best_;
  }

 private:
  // Replaces colors by ranks of keys; keys start with the old color so the
  // order of existing cells is kept.
  template <class Key>
  static Coloring rank_by(const std::vector<Key>& keys) {
    std::vector<Key> sorted = keys;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    Coloring out(keys.size());
    for (std::size_t v = 0; v < keys.size(); ++v) {
      out[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), keys[v]) - sorted.begin());
    }
    return out;
  }

  static int cell_count(const Coloring& c) {
    return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
  }

  Coloring refine(Coloring c) const {
    using Key = std::pair<int, std::vector<std::vector<int>>>;
    while (true) {
      std::vector<Key> keys(n_);
      for (int v = 0; v < n_; ++v) {
        keys[v].first = c[v];
        for (Edge e : incident_[v]) {
          std::vector<int> colors;
          for (int w : to_vertices(e & ~singleton(v))) colors.push_back(c[w]);
          std::sort(colors.begin(), colors.end());
          keys[v].second.push_back(std::move(colors));
        }
        std::sort(keys[v].second.begin(), keys[v].second.end());
      }
      Coloring next = rank_by(keys);
      if (cell_count(next) == cell_count(c)) return next;
      c = std::move(next);
    }
  }

  bool swap_preserves_edges(int a, int b) const {
    const VertexSet both = singleton(a) | singleton(b);
    for (Edge e : h_.edges()) {
      if (set_size(e & both) != 1) continue;
      if (!h_.contains(e ^ both)) return false;
    }
    return true;
  }

  void search(const Coloring& c) {
    const int cells = cell_count(c);
    if (cells == n_) {
      evaluate(c);
      return;
    }
    std::vector<int> size(cells, 0);
    for (int v = 0; v < n_; ++v) ++size[c[v]];
    const int target = static_cast<int>(std::find_if(size.begin(), size.end(), [](int s) { return s > 1; }) -
                                        size.begin());
    std::vector<int> members;
    for (int v = 0; v < n_; ++v) {
      if (c[v] == target) members.push_back(v);
    }
    // Mutually interchangeable members give identical subtrees.
    const bool twins = std::all_of(members.begin() + 1, members.end(),
                                   [&](int v) { return swap_preserves_edges(members.front(), v); });
    if (twins) members.resize(1);
    for (int chosen : members) {
      std::vector<std::pair<int, int>> keys(n_);
      for (int v = 0; v < n_; ++v) keys[v] = {c[v], (c[v] == target && v != chosen) ? 1 : 0};
      search(refine(rank_by(keys)));
    }
  }

  void evaluate(const Coloring& label) {
    std::vector<Edge> relabeled;
    relabeled.reserve(h_.edge_count());
    for (Edge e : h_.edges()) {
      Edge image = 0;
      for (int v : to_vertices(e)) image |= singleton(label[v]);
      relabeled.push_back(image);
    }
    std::sort(relabeled.begin(), relabeled.end(), LexLess{});
    if (!have_best_ || sequence_less(relabeled, best_)) {
      best_ = std::move(relabeled);
      have_best_ = true;
    }
  }

  const Hypergraph& h_;
  int n_;
  std::vector<std::vector<Edge>> incident_;
  std::vector<Edge> best_;
  bool have_best_ = false;
};

}  // namespace

std::vector<Edge> canonical_edges(const Hypergraph& h) {
  if (h.vertex_count() > kCanonicalVertexGuard) {
    throw GuardExceeded("canonical_form: n=" + std::to_string(h.vertex_count()) + " exceeds the limit of " +
                        std::to_string(kCanonicalVertexGuard));
  }
  if (h.vertex_count() == 0) return {};
  return Canonizer(h).run();
}

std::string canonical_form(const Hypergraph& h) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out = std::to_string(h.vertex_count()) + ":" + std::to_string(h.uniformity()) + ":";
  bool first = true;
  for (Edge e : canonical_edges(h)) {
    if (!first) out += '.';
    first = false;
    for (int v : to_vertices(e)) out += kDigits[v];
  }
  return out;
}

Hypergraph parse_canonical_form(const std::string& text) {
  const auto c1 = text.find(':');
  const auto c2 = c1 == std::string::npos ? std::string::npos : text.find(':', c1 + 1);
  if (c2 == std::string::npos) throw MalformedInput("canonical form needs 'n:k:edges'");
  int n = 0;
  int k = 0;
  try {
    n = std::stoi(text.substr(0, c1));
    k = std::stoi(text.substr(c1 + 1, c2 - c1 - 1));
  } catch (const std::exception&) {
    throw MalformedInput("canonical form has a bad header: '" + text + "'");
  }
  if (n < 0 || n > kCanonicalVertexGuard) throw MalformedInput("canonical form: n out of range");
  std::vector<Edge> edges;
  Edge current = 0;
  auto flush = [&] {
    if (current != 0) edges.push_back(current);
    current = 0;
  };
  for (std::size_t i = c2 + 1; i < text.size(); ++i) {
    const char ch = text[i];
    if (ch == '.') {
      flush();
      continue;
    }
    int v = -1;
    if (ch >= '0' && ch <= '9') v = ch - '0';
    if (ch >= 'a' && ch <= 'f') v = ch - 'a' + 10;
    if (v < 0) throw MalformedInput("canonical form: bad vertex digit");
    current |= singleton(v);
  }
  flush();
  try {
    return Hypergraph(n, k, std::move(edges));
  } catch (const ParameterError& err) {
    throw MalformedInput(std::string("canonical form: ") + err.what());
  }
}

}  // namespace hypercover

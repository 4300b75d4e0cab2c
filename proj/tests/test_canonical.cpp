#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "hypercover/canonical.hpp"
#include "hypercover/errors.hpp"
#include "hypercover/generators.hpp"

using namespace hypercover;

namespace {

Hypergraph relabel(const Hypergraph& h, const std::vector<int>& perm) {
  std::vector<Edge> edges;
  for (Edge e : h.edges()) {
    Edge out = 0;
    for (int v : to_vertices(e)) out |= singleton(perm[v]);
    edges.push_back(out);
  }
  return h.with_edges(edges);
}

// Smallest sorted edge list over all n! relabelings.
std::vector<Edge> brute_canonical(const Hypergraph& h) {
  std::vector<int> perm(h.vertex_count());
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Edge> best;
  bool first = true;
  do {
    const Hypergraph r = relabel(h, perm);
    std::vector<Edge> list(r.edges().begin(), r.edges().end());
    if (first || std::lexicographical_compare(list.begin(), list.end(), best.begin(), best.end(), lex_less)) {
      best = list;
      first = false;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

TEST_CASE("relabelings share a canonical form") {
  const auto h = gen_complete_extremal(3);
  CHECK(canonical_form(h) == canonical_form(relabel(h, {2, 0, 3, 1})));
  const auto smaller = h.with_edges({h.edge(0), h.edge(1), h.edge(2)});
  CHECK(canonical_form(h) != canonical_form(smaller));
  CHECK(canonical_form(h) == "4:3:012.013.023.123");
}

TEST_CASE("3-uniform classes on four vertices") {
  const auto all = subsets_of_size(all_vertices(4), 3);
  std::set<std::string> forms;
  for (unsigned mask = 1; mask < 16; ++mask) {
    std::vector<Edge> edges;
    for (int i = 0; i < 4; ++i) {
      if (mask >> i & 1) edges.push_back(all[i]);
    }
    forms.insert(canonical_form(Hypergraph(4, 3, edges)));
  }
  // One class per edge count.
  CHECK(forms.size() == 4);
}

TEST_CASE("canonical form separates exactly the isomorphism classes") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 3);
    const int k = 2 + static_cast<int>(rng() % 2);
    RandomSpec spec{n, k, 1, std::nullopt, rng(), 8, 1};
    const auto a = gen_random(spec);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto b = relabel(a, perm);
    CHECK(canonical_form(a) == canonical_form(b));
    spec.seed = rng();
    const auto c = gen_random(spec);
    CHECK((canonical_form(a) == canonical_form(c)) == (brute_canonical(a) == brute_canonical(c)));
  }
}

TEST_CASE("canonical form survives regular instances") {
  const auto h = gen_biplane_11_5_2();
  std::vector<int> perm(11);
  std::iota(perm.begin(), perm.end(), 0);
  std::mt19937_64 rng(1);
  std::shuffle(perm.begin(), perm.end(), rng);
  CHECK(canonical_form(h) == canonical_form(relabel(h, perm)));
}

TEST_CASE("canonical form round trip and guard") {
  const auto h = gen_complete_extremal(4);
  const auto text = canonical_form(h);
  CHECK(canonical_form(parse_canonical_form(text)) == text);
  CHECK_THROWS(parse_canonical_form("4:3:01"));
  CHECK_THROWS_AS(canonical_form(Hypergraph(17, 2, {})), GuardExceeded);
}

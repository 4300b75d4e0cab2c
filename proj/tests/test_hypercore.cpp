#include <sstream>

#include "doctest.h"
#include "hypercover/errors.hpp"
#include "hypercover/hypergraph.hpp"

using namespace hypercover;

TEST_CASE("vertex set helpers") {
  const VertexSet s = from_vertices({0, 2, 5});
  CHECK(set_size(s) == 3);
  CHECK(to_vertices(s) == std::vector<int>{0, 2, 5});
  CHECK(lowest_vertex(s) == 0);
  CHECK(is_subset(from_vertices({2, 5}), s));
  CHECK_FALSE(is_subset(from_vertices({1, 2}), s));
  CHECK(intersection_size(s, from_vertices({2, 3, 5})) == 2);
  CHECK(all_vertices(64) == ~VertexSet{0});
  CHECK(format_set(s) == "0 2 5");
  CHECK(format_set(s, ',') == "0,2,5");
  CHECK(binomial(8, 4) == 70);
  CHECK(binomial(3, 5) == 0);
  CHECK(ceil_div(7, 2) == 4);
}

TEST_CASE("lex order compares sorted vertex sequences") {
  // {0,3} < {1,2} < {1,2,3}? sequences: (0,3) < (1,2); (1,2) is a prefix of (1,2,3).
  CHECK(lex_less(from_vertices({0, 3}), from_vertices({1, 2})));
  CHECK(lex_less(from_vertices({1, 2}), from_vertices({1, 2, 3})));
  CHECK_FALSE(lex_less(from_vertices({1, 2, 3}), from_vertices({1, 2})));
  CHECK(lex_less(from_vertices({0, 1, 5}), from_vertices({0, 2, 3})));
  CHECK_FALSE(lex_less(from_vertices({2}), from_vertices({2})));
}

TEST_CASE("subsets of size m in lexicographic order") {
  const auto pairs = m_subsets(from_vertices({0, 1, 2}), 2);
  REQUIRE(pairs.size() == 3);
  CHECK(pairs[0].vertices == from_vertices({0, 1}));
  CHECK(pairs[1].vertices == from_vertices({0, 2}));
  CHECK(pairs[2].vertices == from_vertices({1, 2}));
  CHECK(m_subsets(from_vertices({0, 1, 2}), 3).size() == 1);
  CHECK(m_subsets(from_vertices({0, 1, 2, 3}), 2).size() == 6);
  CHECK_THROWS_AS(m_subsets(from_vertices({0, 1}), 3), ParameterError);
}

TEST_CASE("hypergraph construction dedups and sorts") {
  const Hypergraph h(5, 3, {from_vertices({2, 3, 4}), from_vertices({0, 1, 2}), from_vertices({2, 3, 4})});
  REQUIRE(h.edge_count() == 2);
  CHECK(h.edge(0) == from_vertices({0, 1, 2}));
  CHECK(h.index_of(from_vertices({2, 3, 4})) == std::optional<std::size_t>(1));
  CHECK_FALSE(h.contains(from_vertices({0, 1, 3})));
  CHECK_THROWS_AS(Hypergraph(5, 3, {from_vertices({0, 1})}), ParameterError);
  CHECK_THROWS_AS(Hypergraph(3, 3, {from_vertices({0, 1, 3})}), ParameterError);
  CHECK_THROWS_AS(Hypergraph(65, 3, {}), ParameterError);
}

TEST_CASE("sub-hypergraph operations") {
  const Hypergraph h(5, 2, {from_vertices({0, 1}), from_vertices({1, 2}), from_vertices({3, 4})});
  const std::vector<std::size_t> idx{0, 2};
  const auto r = h.restricted_to(idx);
  CHECK(r.edge_count() == 2);
  CHECK(h.minus(r).edge_count() == 1);
  CHECK(h.minus(r).edge(0) == from_vertices({1, 2}));
  CHECK(h.with_edges({}).vertex_count() == 5);
}

TEST_CASE("hypergraph text round trip") {
  const std::string text = "# comment\n5 3 2\n0 1 2\n2 3 4\n";
  const Hypergraph h = parse_hypergraph(text);
  CHECK(h.vertex_count() == 5);
  CHECK(h.uniformity() == 3);
  CHECK(parse_hypergraph(to_text(h)) == h);
}

TEST_CASE("sparse labels are re-indexed and remembered") {
  std::istringstream in("3 2 2\n10 30\n30 20\n");
  const auto parsed = read_hypergraph(in);
  CHECK(parsed.labels == std::vector<long long>{10, 20, 30});
  CHECK(parsed.hypergraph.edge(0) == from_vertices({0, 2}));
  CHECK(parsed.hypergraph.edge(1) == from_vertices({1, 2}));
}

TEST_CASE("malformed hypergraph input") {
  CHECK_THROWS_AS(parse_hypergraph(""), MalformedInput);
  CHECK_THROWS_AS(parse_hypergraph("4 3\n"), MalformedInput);
  CHECK_THROWS_AS(parse_hypergraph("4 3 2\n0 1 2\n"), MalformedInput);
  CHECK_THROWS_AS(parse_hypergraph("4 3 1\n0 1\n"), MalformedInput);
  CHECK_THROWS_AS(parse_hypergraph("4 3 1\n0 1 1\n"), MalformedInput);
  CHECK_THROWS_AS(parse_hypergraph("4 3 1\n0 1 x\n"), MalformedInput);
  CHECK_THROWS_AS(parse_hypergraph("3 3 2\n0 1 2\n3 4 5\n"), MalformedInput);
}

TEST_CASE("graph input rejects loops and repeats") {
  std::istringstream ok("4 2\n0 1\n2 3\n");
  CHECK(read_graph(ok).edges.size() == 2);
  std::istringstream loop("3 1\n1 1\n");
  CHECK_THROWS_AS(read_graph(loop), MalformedInput);
  std::istringstream repeat("3 2\n0 1\n1 0\n");
  CHECK_THROWS_AS(read_graph(repeat), MalformedInput);
}

TEST_CASE("cover text round trip") {
  CoverCertificate c{{MSet{from_vertices({0, 1})}, MSet{from_vertices({2, 3})}}, 2};
  std::ostringstream out;
  write_cover(out, c);
  std::istringstream in(out.str());
  const auto back = read_cover(in);
  CHECK(back.m == 2);
  CHECK(back.msets == c.msets);
}

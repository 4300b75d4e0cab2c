#include "doctest.h"
#include "hypercover/errors.hpp"
#include "hypercover/exact.hpp"
#include "hypercover/generators.hpp"

using namespace hypercover;

TEST_CASE("extremal family sizes") {
  const auto h3 = gen_complete_extremal(3);
  CHECK(h3.vertex_count() == 4);
  CHECK(h3.edge_count() == 4);
  CHECK(gen_complete_extremal(2).edge_count() == 3);
  CHECK(gen_complete_extremal(5).edge_count() == 6);
  CHECK_THROWS_AS(gen_complete_extremal(1), ParameterError);
}

TEST_CASE("biplane is a symmetric 2-design") {
  const auto h = gen_biplane_11_5_2();
  CHECK(h.vertex_count() == 11);
  CHECK(h.edge_count() == 11);
  CHECK(h.uniformity() == 5);
  const auto d = check_symmetric_design(h, 2);
  CHECK(d.every_pair_in_lambda_blocks);
  CHECK(d.every_block_pair_meets_in_lambda);
  CHECK_FALSE(check_symmetric_design(h, 1).every_pair_in_lambda_blocks);
}

TEST_CASE("triangle hypergraphs") {
  const std::vector<std::pair<int, int>> k4{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  const auto t4 = gen_triangle_hypergraph(4, k4);
  CHECK(t4.edge_count() == 4);
  CHECK(matching_number(t4, 2) == 1);
  CHECK(cover_number(t4, 2) == 2);

  std::vector<std::pair<int, int>> k5;
  for (int u = 0; u < 5; ++u) {
    for (int v = u + 1; v < 5; ++v) k5.emplace_back(u, v);
  }
  const auto t5 = gen_triangle_hypergraph(5, k5);
  CHECK(t5.edge_count() == 10);
  CHECK(matching_number(t5, 2) == 2);
  CHECK(cover_number(t5, 2) == 4);

  const std::vector<std::pair<int, int>> c4{{0, 1}, {1, 2}, {2, 3}, {0, 3}};
  CHECK(gen_triangle_hypergraph(4, c4).empty());
  CHECK_THROWS_AS(gen_triangle_hypergraph(3, {{1, 1}}), MalformedInput);
  CHECK_THROWS_AS(gen_triangle_hypergraph(3, {{0, 1}, {1, 0}}), MalformedInput);
}

TEST_CASE("random generator is deterministic and honors the target") {
  RandomSpec spec{6, 3, 2, 2, 7, 0, 2000};
  const auto a = gen_random(spec);
  const auto b = gen_random(spec);
  CHECK(a == b);
  CHECK(matching_number(a, 2) == 2);
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    RandomSpec s{8, 4, 3, 1 + static_cast<int>(seed % 3), seed, 0, 2000};
    const auto h = gen_random(s);
    CHECK(h.uniformity() == 4);
    CHECK(matching_number(h, 3) == *s.target_nu);
  }
}

TEST_CASE("random generator on a tiny vertex set") {
  RandomSpec spec{3, 3, 2, std::nullopt, 0, 0, 10};
  const auto h = gen_random(spec);
  CHECK(h.edge_count() <= 1);
  CHECK_THROWS_AS(gen_random(RandomSpec{3, 3, 3, std::nullopt, 0, 0, 10}), ParameterError);
}

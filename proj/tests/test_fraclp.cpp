#include <random>
#include <sstream>

#include "doctest.h"
#include "hypercover/errors.hpp"
#include "hypercover/exact.hpp"
#include "hypercover/fraclp.hpp"
#include "hypercover/generators.hpp"
#include "hypercover/simplex.hpp"

using namespace hypercover;

TEST_CASE("rational formatting") {
  CHECK(to_fraction_string(make_rational(6, 4)) == "3/2");
  CHECK(to_fraction_string(Rational(2)) == "2/1");
  CHECK(parse_rational("4/6") == Rational(2, 3));
  CHECK(parse_rational("5") == Rational(5));
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("abc"));
}

TEST_CASE("simplex on a textbook LP") {
  // max 3x + 2y s.t. x + y <= 4, x + 3y <= 6, x <= 3 -> x=3, y=1, value 11.
  using R = Rational;
  RationalSimplex lp({{R(1), R(1)}, {R(1), R(3)}, {R(1), R(0)}}, {R(4), R(6), R(3)}, {R(3), R(2)});
  const auto s = lp.solve();
  REQUIRE(s.status == RationalSimplex::Status::Optimal);
  CHECK(s.objective == R(11));
  CHECK(s.primal == std::vector<R>{R(3), R(1)});
  R dual_value = R(4) * s.dual[0] + R(6) * s.dual[1] + R(3) * s.dual[2];
  CHECK(dual_value == R(11));
}

TEST_CASE("simplex detects unboundedness and bad input") {
  using R = Rational;
  RationalSimplex lp({{R(1), R(-1)}}, {R(1)}, {R(1), R(1)});
  CHECK(lp.solve().status == RationalSimplex::Status::Unbounded);
  CHECK_THROWS_AS(RationalSimplex({{R(1)}}, {R(-1)}, {R(1)}), ParameterError);
  CHECK_THROWS_AS(RationalSimplex({{R(1), R(2)}, {R(1)}}, {R(1), R(1)}, {R(1), R(1)}), ParameterError);
}

TEST_CASE("fractional optimum examples") {
  const auto ext = solve_fractional(gen_complete_extremal(3), 2);
  CHECK(ext.matching.total() == Rational(2));
  CHECK(ext.cover.total() == Rational(2));
  const auto single = solve_fractional(Hypergraph(4, 3, {from_vertices({0, 1, 2})}), 2);
  CHECK(single.cover.total() == Rational(1));
  const std::vector<std::pair<int, int>> k4{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  CHECK(solve_fractional(gen_triangle_hypergraph(4, k4), 2).cover.total() == Rational(2));
  CHECK(solve_fractional(gen_biplane_11_5_2(), 2).cover.total() == Rational(11, 2));
}

TEST_CASE("fractional verification") {
  const auto h = gen_complete_extremal(3);
  FractionalAssignment zero_matching{AssignmentSide::Matching, 2, {}};
  CHECK(verify_fractional(h, zero_matching));
  FractionalAssignment zero_cover{AssignmentSide::Cover, 2, {}};
  CHECK_FALSE(verify_fractional(h, zero_cover));
  FractionalAssignment heavy{AssignmentSide::Matching, 2, {}};
  for (Edge e : h.edges()) heavy.add(e, Rational(2, 3));
  CHECK_FALSE(verify_fractional(h, heavy));
  FractionalAssignment negative{AssignmentSide::Cover, 2, {}};
  negative.add(from_vertices({0, 1}), Rational(-1));
  CHECK_THROWS_AS(verify_fractional(h, negative), MalformedInput);
}

TEST_CASE("assignment add keeps lexicographic order") {
  FractionalAssignment a{AssignmentSide::Cover, 2, {}};
  a.add(from_vertices({1, 2}), Rational(1, 3));
  a.add(from_vertices({0, 3}), Rational(1, 3));
  a.add(from_vertices({1, 2}), Rational(1, 3));
  REQUIRE(a.weights.size() == 2);
  CHECK(a.weights[0].first == from_vertices({0, 3}));
  CHECK(a.weight_of(from_vertices({1, 2})) == Rational(2, 3));
  CHECK(a.total() == Rational(1));
}

TEST_CASE("assignment text round trip") {
  const auto sol = solve_fractional(gen_biplane_11_5_2(), 2);
  std::stringstream io;
  write_assignment(io, sol.cover);
  const auto back = read_assignment(io);
  CHECK(back.side == AssignmentSide::Cover);
  CHECK(back.m == 2);
  CHECK(back.weights == sol.cover.weights);
}

TEST_CASE("strong duality and the sandwich chain on random instances") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 80; ++trial) {
    const int k = 2 + static_cast<int>(rng() % 4);
    const int m = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(k - 1));
    const int n = k + 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(9 - k));
    RandomSpec spec{n, k, m, std::nullopt, rng(), 10, 1};
    const auto h = gen_random(spec);
    CAPTURE(to_text(h));
    const auto sol = solve_fractional(h, m);
    CHECK(sol.matching.total() == sol.cover.total());
    CHECK(verify_fractional(h, sol.matching));
    CHECK(verify_fractional(h, sol.cover));
    CHECK_NOTHROW(sandwich_check(h, m));
  }
}

TEST_CASE("LP size guard") {
  CHECK_THROWS_AS(solve_fractional(gen_biplane_11_5_2(), 2, 10), GuardExceeded);
}

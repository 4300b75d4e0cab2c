#include "doctest.h"
#include "hypercover/canonical.hpp"
#include "hypercover/errors.hpp"
#include "hypercover/generators.hpp"
#include "hypercover/scan.hpp"

using namespace hypercover;

TEST_CASE("exhaustive scan of small 3-uniform classes") {
  const auto r4 = scan_exhaustive(3, 2, 4);
  CHECK(r4.records.size() == 4);
  CHECK(r4.violations.empty());
  REQUIRE(r4.max_ratio().has_value());
  CHECK(*r4.max_ratio() == Rational(2));

  const auto r5 = scan_exhaustive(3, 2, 5);
  CHECK(r5.violations.empty());
  CHECK(*r5.max_ratio() == Rational(2));
  CHECK(to_text(r5) == to_text(scan_exhaustive(3, 2, 5, ScanOptions{0, 2, {}})));
  for (std::size_t i = 1; i < r5.records.size(); ++i) CHECK(r5.records[i - 1].canonical < r5.records[i].canonical);
}

TEST_CASE("exhaustive scan guards") {
  CHECK_THROWS_AS(scan_exhaustive(3, 2, 8), GuardExceeded);
  CHECK_THROWS_AS(scan_exhaustive(4, 3, 7), GuardExceeded);
  CHECK_THROWS_AS(scan_exhaustive(3, 3, 5), ParameterError);
  CHECK_THROWS_AS(scan_exhaustive(3, 2, 2), ParameterError);
}

TEST_CASE("sampled scan is reproducible and keeps injected instances first") {
  ScanOptions options;
  const auto base = gen_complete_extremal(4);
  options.injected.push_back(Hypergraph(6, 4, {}));
  const auto ext = Hypergraph(6, 4, {base.edges().begin(), base.edges().end()});
  options.injected.push_back(ext);
  const auto a = scan_sampled(4, 3, 6, 20, 99, options);
  const auto b = scan_sampled(4, 3, 6, 20, 99, options);
  CHECK(to_text(a) == to_text(b));
  REQUIRE(a.records.size() == 21);
  CHECK(a.records.front().canonical == canonical_form(ext));
  CHECK(a.records.front().tau == 3);
  CHECK(a.violations.empty());
  CHECK_THROWS_AS(scan_sampled(4, 3, 7, 1, 0, options), ParameterError);
}

TEST_CASE("merging exhaustive reports deduplicates") {
  const auto a = scan_exhaustive(3, 2, 4);
  const auto b = scan_exhaustive(3, 2, 5);
  const auto ab = merge(a, b);
  CHECK(ab.records.size() >= b.records.size());
  CHECK(to_text(merge(ab, a)) == to_text(ab));
  CHECK_THROWS_AS(merge(a, scan_exhaustive(3, 1, 4)), ParameterError);
}

TEST_CASE("report text layout") {
  const auto text = to_text(scan_exhaustive(3, 2, 4));
  CHECK(text.rfind("# scan k=3 m=2 n=4 mode=exhaustive\n", 0) == 0);
  CHECK(text.find("# max_ratio 2/1\n") != std::string::npos);
  CHECK(text.find("# violations 0\n") != std::string::npos);
  CHECK(text.find("4:3:012.013.023.123 1 2 2/1 2/1\n") != std::string::npos);
}

TEST_CASE("triangle packing and covering of small graphs") {
  std::vector<std::pair<int, int>> k5;
  for (int u = 0; u < 5; ++u) {
    for (int v = u + 1; v < 5; ++v) k5.emplace_back(u, v);
  }
  const auto r = check_tuza_corollary(make_graph(5, k5));
  CHECK(r.triangles == 10);
  CHECK(r.nu == 2);
  CHECK(r.tau == 4);
  CHECK(r.holds());
  REQUIRE(r.constructive.has_value());
  CHECK(r.constructive->cover.size() <= 4);

  const auto empty = check_tuza_corollary(make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}));
  CHECK(empty.triangles == 0);
  CHECK(empty.holds());
}

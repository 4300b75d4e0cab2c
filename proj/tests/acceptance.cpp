// One PASS/FAIL line per acceptance criterion; exit status is the number of
// failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hypercover/canonical.hpp"
#include "hypercover/constructions.hpp"
#include "hypercover/exact.hpp"
#include "hypercover/fraclp.hpp"
#include "hypercover/generators.hpp"
#include "hypercover/graph_matching.hpp"
#include "hypercover/oracle.hpp"
#include "hypercover/scan.hpp"
#include "support.hpp"

using namespace hypercover;
using hypercover::testing::random_instance;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
  void expect(bool cond, const std::string& why) {
    if (!cond) fail(why);
  }
};

using Clock = std::chrono::steady_clock;

int failures = 0;

void criterion(int id, const std::string& name, double limit_seconds, const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto start = Clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.fail(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (limit_seconds > 0 && secs > limit_seconds) {
    out.fail("took " + std::to_string(secs) + " s, limit " + std::to_string(limit_seconds) + " s");
  }
  if (!out.ok) ++failures;
  std::printf("criterion %2d %s  %s (%.2f s)%s%s\n", id, out.ok ? "PASS" : "FAIL", name.c_str(), secs,
              out.ok ? "" : ": ", out.detail.c_str());
  std::fflush(stdout);
}

std::string describe(const Hypergraph& h) {
  std::ostringstream s;
  write_hypergraph(s, h);
  return s.str();
}

// Checks a certified cover against the instance with the generic verifier.
void check_cover(Outcome& out, const Hypergraph& h, int m, const CertifiedCover& c, std::uint64_t bound,
                 const std::string& label) {
  out.expect(c.cover.m == m, label + ": wrong m");
  out.expect(verify_cover(h, c.cover), label + ": cover does not verify on\n" + describe(h));
  out.expect(c.cover.size() <= bound, label + ": size " + std::to_string(c.cover.size()) + " above " +
                                          std::to_string(bound) + " on\n" + describe(h));
}

int half_up(int k) { return ceil_div(k + 1, 2); }

}  // namespace

int main() {
  criterion(1, "extremal family k=3..7", 10, [](Outcome& out) {
    for (int k = 3; k <= 7; ++k) {
      const auto h = gen_complete_extremal(k);
      const int nu = matching_number(h, k - 1);
      const int tau = cover_number(h, k - 1);
      out.expect(nu == 1, "k=" + std::to_string(k) + " nu=" + std::to_string(nu));
      out.expect(tau == half_up(k), "k=" + std::to_string(k) + " tau=" + std::to_string(tau));
    }
  });

  criterion(2, "biplane 2-(11,5,2)", 0, [](Outcome& out) {
    const auto h = gen_biplane_11_5_2();
    const auto d = check_symmetric_design(h, 2);
    out.expect(h.edge_count() == 11 && d.every_pair_in_lambda_blocks && d.every_block_pair_meets_in_lambda,
               "design check");
    out.expect(matching_number(h, 2) == 1, "nu^(2) != 1");
    out.expect(cover_number(h, 2) == 6, "tau^(2) != 6");
    check_cover(out, h, 2, cover_g1_52(h), 7, "cover_g1_52");
  });

  criterion(3, "triangle hypergraphs of K4 and K5", 0, [](Outcome& out) {
    for (int n : {4, 5}) {
      std::vector<std::pair<int, int>> edges;
      for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
      }
      const auto t = gen_triangle_hypergraph(n, edges);
      const int nu = matching_number(t, 2);
      const int tau = cover_number(t, 2);
      const int want_nu = n == 4 ? 1 : 2;
      out.expect(nu == want_nu && tau == 2 * want_nu,
                 "K" + std::to_string(n) + ": tau/nu = " + std::to_string(tau) + "/" + std::to_string(nu));
    }
  });

  criterion(4, "cover_nu1/2/3 on >= 100 seeds per (nu, k)", 600, [](Outcome& out) {
    const std::vector<std::pair<int, int>> cases = {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {1, 7},
                                                    {2, 3}, {2, 4}, {2, 5}, {2, 6}, {3, 3}, {3, 4},
                                                    {3, 5}};
    for (auto [nu, k] : cases) {
      int done = 0;
      for (std::uint64_t seed = 1; done < 100 && seed < 1000; ++seed) {
        const int n = k + 1 + static_cast<int>(seed % (2 * nu + 1));
        const auto h = random_instance(n, k, k - 1, nu, seed * 7919 + static_cast<std::uint64_t>(k));
        if (!h) continue;
        ++done;
        const std::string label = "nu=" + std::to_string(nu) + " k=" + std::to_string(k);
        CertifiedCover c;
        try {
          c = nu == 1 ? cover_nu1(*h) : nu == 2 ? cover_nu2(*h) : cover_nu3(*h);
        } catch (const std::exception& e) {
          out.fail(label + ": " + e.what() + " on\n" + describe(*h));
          return;
        }
        check_cover(out, *h, k - 1, c, static_cast<std::uint64_t>(nu * half_up(k)), label);
        out.expect(static_cast<int>(c.cover.size()) >= cover_number(*h, k - 1), label + ": below exact tau");
        if (!out.ok) return;
      }
      out.expect(done >= 100, "only " + std::to_string(done) + " instances for nu=" + std::to_string(nu) +
                                  " k=" + std::to_string(k));
    }
  });

  criterion(5, "cover_g1_km and cover_g1_kkm2, 50 seeds each", 0, [](Outcome& out) {
    const std::vector<std::pair<int, int>> km = {{6, 3}, {6, 4}, {7, 4}, {7, 5}, {8, 5}, {8, 6}};
    for (auto [k, m] : km) {
      int done = 0;
      for (std::uint64_t seed = 1; done < 50 && seed < 1000; ++seed) {
        const int n = k + 1 + static_cast<int>(seed % 4);
        const auto h = random_instance(n, k, m, 1, seed * 104729 + static_cast<std::uint64_t>(k * 10 + m));
        if (!h) continue;
        ++done;
        check_cover(out, *h, m, cover_g1_km(*h, m), binomial(k, m) - static_cast<std::uint64_t>(m),
                    "g1km k=" + std::to_string(k) + " m=" + std::to_string(m));
        if (!out.ok) return;
      }
      out.expect(done >= 50, "too few instances for k=" + std::to_string(k) + " m=" + std::to_string(m));
    }
    for (int k = 3; k <= 6; ++k) {
      int done = 0;
      for (std::uint64_t seed = 1; done < 50 && seed < 1000; ++seed) {
        const int n = k + 1 + static_cast<int>(seed % 4);
        const auto h = random_instance(n, k, k - 2, 1, seed * 15485863 + static_cast<std::uint64_t>(k));
        if (!h) continue;
        ++done;
        check_cover(out, *h, k - 2, cover_g1_kkm2(*h), static_cast<std::uint64_t>(ceil_div(k * k, 4)),
                    "g1kkm2 k=" + std::to_string(k));
        if (!out.ok) return;
      }
      out.expect(done >= 50, "too few instances for kkm2 k=" + std::to_string(k));
    }
  });

  criterion(6, "auxiliary graph matching size k=5..8", 0, [](Outcome& out) {
    for (int k = 5; k <= 8; ++k) {
      const auto aux = auxiliary_intersection_graph(all_vertices(k), k - 2);
      const auto matching = max_matching_general_graph(static_cast<int>(aux.vertices.size()), aux.edges);
      out.expect(matching.size() == binomial(k, 2) / 2,
                 "k=" + std::to_string(k) + " matching size " + std::to_string(matching.size()));
    }
  });

  criterion(7, "fractional constructions", 0, [](Outcome& out) {
    auto check = [&](const Hypergraph& h, const CertifiedFractionalCover& c, const Rational& bound,
                     const std::string& label) {
      out.expect(verify_fractional(h, c.assignment), label + ": not a fractional cover");
      out.expect(c.assignment.total() <= bound, label + ": total " + to_fraction_string(c.assignment.total()) +
                                                    " above " + to_fraction_string(bound));
    };
    for (int k : {2, 3}) {
      const int uniform = 2 * k;
      const Rational bound = (make_rational(1, 2) + make_rational(1, 2 * (k + 1))) * Rational(static_cast<long>(binomial(uniform, k)));
      int done = 0;
      for (std::uint64_t seed = 1; done < 30 && seed < 500; ++seed) {
        const auto h = random_instance(uniform + 1 + static_cast<int>(seed % 3), uniform, k, 1, seed * 31 + 5);
        if (!h) continue;
        ++done;
        check(*h, frac_cover_2kk(*h), bound, "2kk k=" + std::to_string(uniform));
      }
      out.expect(done >= 30, "too few 2kk instances");
    }
    struct HStarCase {
      int k, m;
      FractionalSubroutine sub;
    };
    const std::vector<HStarCase> hstar = {{4, 2, subroutine_2kk(4)}, {6, 3, subroutine_2kk(6)},
                                          {5, 3, subroutine_kkm2(5)}};
    for (const auto& hc : hstar) {
      for (int nu = 1; nu <= 3; ++nu) {
        int done = 0;
        for (std::uint64_t seed = 1; done < 10 && seed < 500; ++seed) {
          const int n = hc.k + 2 + 2 * nu;
          const auto h = random_instance(n, hc.k, hc.m, nu, seed * 131 + static_cast<std::uint64_t>(nu), 14);
          if (!h) continue;
          ++done;
          const Rational bound =
              make_rational(1, 2) * (Rational(static_cast<long>(binomial(hc.k, hc.m))) + hc.sub.bound) * Rational(nu);
          check(*h, frac_cover_hstar(*h, hc.m, hc.sub), bound,
                "hstar k=" + std::to_string(hc.k) + " m=" + std::to_string(hc.m) + " nu=" + std::to_string(nu));
        }
        out.expect(done >= 10, "too few hstar instances");
      }
    }
    for (int k : {7, 8}) {
      const Rational bound = make_rational(static_cast<long>(binomial(k - 2, 2)), 6) + Rational(2 * k - 3);
      check(gen_complete_extremal(k), frac_cover_kkm2(gen_complete_extremal(k)), bound, "kkm2 extremal");
      int done = 0;
      for (std::uint64_t seed = 1; done < 20 && seed < 500; ++seed) {
        const auto h = random_instance(k + 1 + static_cast<int>(seed % 3), k, k - 2, 1, seed * 977 + 3, 12);
        if (!h) continue;
        ++done;
        check(*h, frac_cover_kkm2(*h), bound, "kkm2 k=" + std::to_string(k));
      }
      out.expect(done >= 20, "too few kkm2 instances");
    }
  });

  criterion(8, "LP duality on 200 random instances", 0, [](Outcome& out) {
    std::mt19937_64 rng(8);
    int done = 0;
    while (done < 200) {
      const int k = 2 + static_cast<int>(rng() % 4);
      const int m = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(k - 1));
      const int n = k + 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(9 - k));
      RandomSpec spec{n, k, m, std::nullopt, rng(), 12, 1};
      const auto h = gen_random(spec);
      if (h.empty()) continue;
      ++done;
      const auto sol = solve_fractional(h, m);
      const Rational primal = sol.matching.total();
      const Rational dual = sol.cover.total();
      out.expect(primal == dual, "primal != dual");
      out.expect(verify_fractional(h, sol.matching) && verify_fractional(h, sol.cover), "infeasible LP output");
      const int nu = matching_number(h, m);
      const int tau = cover_number(h, m);
      out.expect(Rational(nu) <= primal && dual <= Rational(tau), "sandwich fails on\n" + describe(h));
      if (!out.ok) return;
    }
  });

  criterion(9, "branch and bound against the oracle", 0, [](Outcome& out) {
    const auto all = subsets_of_size(all_vertices(4), 3);
    std::set<std::string> classes;
    for (unsigned mask = 1; mask < (1u << all.size()); ++mask) {
      std::vector<Edge> edges;
      for (std::size_t i = 0; i < all.size(); ++i) {
        if (mask & (1u << i)) edges.push_back(all[i]);
      }
      const Hypergraph h(4, 3, edges);
      if (!classes.insert(canonical_form(h)).second) continue;
      for (int m = 1; m <= 3; ++m) {
        out.expect(matching_number(h, m) == oracle_matching_number(h, m), "nu mismatch on n=4");
        out.expect(cover_number(h, m) == oracle_cover_number(h, m), "tau mismatch on n=4");
      }
    }
    out.expect(classes.size() == 4, "expected 4 nonempty classes on n=4, got " + std::to_string(classes.size()));
    std::mt19937_64 rng(9);
    for (int i = 0; i < 200; ++i) {
      const int k = 2 + static_cast<int>(rng() % 4);
      const int m = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(k - 1));
      const int n = k + 1 + static_cast<int>(rng() % 4);
      RandomSpec spec{n, k, m, std::nullopt, rng(), 16, 1};
      const auto h = gen_random(spec);
      out.expect(matching_number(h, m) == oracle_matching_number(h, m), "nu mismatch on\n" + describe(h));
      out.expect(cover_number(h, m) == oracle_cover_number(h, m), "tau mismatch on\n" + describe(h));
      if (!out.ok) return;
    }
  });

  criterion(10, "exhaustive scan k=3 m=2 n=5", 0, [](Outcome& out) {
    const auto first = scan_exhaustive(3, 2, 5);
    const auto second = scan_exhaustive(3, 2, 5);
    out.expect(first.violations.empty(), "violations reported");
    out.expect(first.max_ratio() && *first.max_ratio() == Rational(2), "max ratio is not 2");
    out.expect(to_text(first) == to_text(second), "reports differ between runs");
  });

  return failures;
}

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hypercover/generators.hpp"
#include "hypercover/hypergraph.hpp"

namespace hypercover::testing {

/// Seeded instance with exact m-matching number `nu`, or nullopt when the
/// sampler gives up.
inline std::optional<Hypergraph> random_instance(int n, int k, int m, int nu, std::uint64_t seed,
                                                 int max_edges = 0) {
  RandomSpec spec;
  spec.n = n;
  spec.k = k;
  spec.m = m;
  spec.target_nu = nu;
  spec.seed = seed;
  spec.max_edges = max_edges;
  spec.attempts = 200;
  try {
    return gen_random(spec);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

/// Every m-matching of size 2 or more has pairwise small intersections;
/// used to pick a roomy vertex count per (k, nu).
inline int roomy_n(int k, int nu) { return std::min(64, k + 1 + 2 * nu); }

}  // namespace hypercover::testing

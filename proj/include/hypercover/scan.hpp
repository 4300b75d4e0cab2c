#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hypercover/constructions.hpp"
#include "hypercover/hypergraph.hpp"
#include "hypercover/rational.hpp"

namespace hypercover {

enum class ScanMode { Exhaustive, Sampled };

struct ScanParameters {
  int k = 3;
  int m = 2;
  int n = 4;
  ScanMode mode = ScanMode::Exhaustive;
  std::uint64_t seed = 0;
  std::size_t count = 0;  // sampled mode only
};

struct ScanRecord {
  std::string canonical;
  int nu = 0;
  int tau = 0;
  Rational tau_star;

  Rational ratio() const { return make_rational(tau, nu); }
};

/// Instance above the conjectured ceil((k+1)/2)·nu bound for m = k-1,
/// confirmed by the brute-force oracle.
struct Violation {
  std::string canonical;
  int nu = 0;
  int tau = 0;
  std::vector<Edge> matching;
};

struct ScanReport {
  ScanParameters parameters;
  std::vector<ScanRecord> records;
  std::map<int, Rational> best_ratio_per_nu;       // lower bounds on g_i(k,m)
  std::map<int, Rational> best_frac_ratio_per_nu;  // lower bounds on g_i*(k,m)
  std::vector<Violation> violations;

  std::optional<Rational> max_ratio() const;
  std::optional<Rational> max_frac_ratio() const;
};

struct ScanOptions {
  /// Largest n accepted by scan_exhaustive; 0 picks 7 for k = 3 and k + 2
  /// otherwise.
  int max_n = 0;
  int jobs = 1;
  /// Extra instances evaluated ahead of the random ones in sampled mode.
  std::vector<Hypergraph> injected;
};

/// All nonempty k-uniform hypergraphs on exactly n labeled vertices, one
/// per isomorphism class, in canonical-form order. Throws GuardExceeded
/// above the n guard.
ScanReport scan_exhaustive(int k, int m, int n, const ScanOptions& options = {});

/// `count` seeded random instances (duplicates kept), in sample order.
ScanReport scan_sampled(int k, int m, int n, std::size_t count, std::uint64_t seed,
                        const ScanOptions& options = {});

/// Combines reports with equal (k, m). In exhaustive mode records are
/// deduplicated by canonical form and re-sorted, so merging is associative.
ScanReport merge(const ScanReport& a, const ScanReport& b);

/// One `canonical nu tau taustar ratio` line per record, then a summary
/// block of `#`-prefixed lines.
void write_report(std::ostream& out, const ScanReport& report);
std::string to_text(const ScanReport& report);

struct TuzaReport {
  std::size_t graph_edges = 0;
  std::size_t triangles = 0;
  int nu = 0;
  int tau = 0;
  bool precondition_met = false;  // nu <= 3
  std::optional<CertifiedCover> constructive;
  bool holds() const { return tau <= 2 * nu; }
};

/// Exact triangle packing and covering numbers of a graph via its triangle
/// hypergraph, plus a constructive cover when at most 3 edge-disjoint
/// triangles exist.
TuzaReport check_tuza_corollary(const SimpleGraph& g);

}  // namespace hypercover

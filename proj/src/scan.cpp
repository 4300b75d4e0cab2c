#include "hypercover/scan.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <thread>

#include "hypercover/canonical.hpp"
#include "hypercover/errors.hpp"
#include "hypercover/exact.hpp"
#include "hypercover/fraclp.hpp"
#include "hypercover/generators.hpp"
#include "hypercover/oracle.hpp"

namespace hypercover {

namespace {

void check_km(int k, int m, int n) {
  if (k < 2 || m < 1 || m >= k) throw ParameterError("scan: need k >= 2 and 1 <= m <= k-1");
  if (n < k) throw ParameterError("scan: need n >= k");
  if (n > kCanonicalVertexGuard) throw GuardExceeded("scan: n above the canonical-form limit");
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

ScanRecord evaluate(const Hypergraph& h, int m) {
  ScanRecord r;
  r.canonical = canonical_form(h);
  r.nu = matching_number(h, m);
  r.tau = cover_number(h, m);
  r.tau_star = solve_fractional(h, m).cover.total();
  return r;
}

// Evaluates instances on `jobs` threads; output order equals input order.
std::vector<ScanRecord> evaluate_all(const std::vector<Hypergraph>& instances, int m, int jobs) {
  std::vector<ScanRecord> out(instances.size());
  const auto workers = static_cast<std::size_t>(std::max(1, jobs));
  if (workers == 1 || instances.size() < 2) {
    for (std::size_t i = 0; i < instances.size(); ++i) out[i] = evaluate(instances[i], m);
    return out;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < instances.size(); i += workers) out[i] = evaluate(instances[i], m);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

// Rebuilds the aggregates and violation list from `report.records`.
void summarize(ScanReport& report) {
  const auto& p = report.parameters;
  report.best_ratio_per_nu.clear();
  report.best_frac_ratio_per_nu.clear();
  report.violations.clear();
  const auto trivial = binomial(p.k, p.m);
  for (const auto& r : report.records) {
    if (r.nu <= 0) throw InvariantViolation("scan: record with zero matching number");
    const Rational ratio = r.ratio();
    const Rational frac = r.tau_star / r.nu;
    if (ratio > Rational(static_cast<unsigned long>(trivial))) {
      throw InvariantViolation("scan: ratio above C(k,m) for " + r.canonical);
    }
    auto [it, fresh] = report.best_ratio_per_nu.emplace(r.nu, ratio);
    if (!fresh && ratio > it->second) it->second = ratio;
    auto [jt, fresh2] = report.best_frac_ratio_per_nu.emplace(r.nu, frac);
    if (!fresh2 && frac > jt->second) jt->second = frac;

    if (p.m != p.k - 1 || r.tau <= r.nu * ceil_div(p.k + 1, 2)) continue;
    // Confirm with the brute-force oracle before reporting anything.
    const Hypergraph h = parse_canonical_form(r.canonical);
    const int nu = oracle_matching_number(h, p.m);
    const int tau = oracle_cover_number(h, p.m);
    if (nu != r.nu || tau != r.tau) {
      throw InvariantViolation("scan: solver disagrees with the oracle on " + r.canonical);
    }
    Violation v{r.canonical, nu, tau, {}};
    for (auto i : max_m_matching(h, p.m).matching.edge_indices) v.matching.push_back(h.edge(i));
    report.violations.push_back(std::move(v));
  }
}

int default_max_n(int k) { return k == 3 ? 7 : k + 2; }

}  // namespace

std::optional<Rational> ScanReport::max_ratio() const {
  std::optional<Rational> best;
  for (const auto& [nu, r] : best_ratio_per_nu) {
    if (!best || r > *best) best = r;
  }
  return best;
}

std::optional<Rational> ScanReport::max_frac_ratio() const {
  std::optional<Rational> best;
  for (const auto& [nu, r] : best_frac_ratio_per_nu) {
    if (!best || r > *best) best = r;
  }
  return best;
}

ScanReport scan_exhaustive(int k, int m, int n, const ScanOptions& options) {
  check_km(k, m, n);
  const int guard = options.max_n > 0 ? options.max_n : default_max_n(k);
  if (n > guard) {
    throw GuardExceeded("scan_exhaustive: n=" + std::to_string(n) + " above the guard " + std::to_string(guard));
  }
  // Level-by-level extension: every class with e+1 edges arises from some
  // class with e edges by adding one edge.
  const auto all = subsets_of_size(all_vertices(n), k);
  std::set<std::string> seen;
  std::vector<std::vector<Edge>> level;
  for (Edge e : all) {
    Hypergraph h(n, k, {e});
    if (seen.insert(canonical_form(h)).second) level.push_back({e});
  }
  std::vector<Hypergraph> classes;
  while (!level.empty()) {
    std::vector<std::vector<Edge>> next;
    for (const auto& edges : level) {
      classes.emplace_back(n, k, edges);
      for (Edge e : all) {
        if (std::find(edges.begin(), edges.end(), e) != edges.end()) continue;
        auto grown = edges;
        grown.push_back(e);
        Hypergraph h(n, k, grown);
        if (seen.insert(canonical_form(h)).second) next.push_back(std::move(grown));
      }
    }
    level = std::move(next);
  }

  ScanReport report;
  report.parameters = {k, m, n, ScanMode::Exhaustive, 0, 0};
  report.records = evaluate_all(classes, m, options.jobs);
  std::sort(report.records.begin(), report.records.end(),
            [](const ScanRecord& a, const ScanRecord& b) { return a.canonical < b.canonical; });
  summarize(report);
  return report;
}

ScanReport scan_sampled(int k, int m, int n, std::size_t count, std::uint64_t seed, const ScanOptions& options) {
  check_km(k, m, n);
  std::vector<Hypergraph> instances;
  for (const auto& h : options.injected) {
    if (h.uniformity() != k || h.vertex_count() != n) {
      throw ParameterError("scan_sampled: injected instance does not match k and n");
    }
    if (!h.empty()) instances.push_back(h);
  }
  for (std::size_t i = 0; i < count; ++i) {
    RandomSpec spec;
    spec.n = n;
    spec.k = k;
    spec.m = m;
    spec.seed = splitmix64(seed ^ splitmix64(i));
    instances.push_back(gen_random(spec));
  }
  ScanReport report;
  report.parameters = {k, m, n, ScanMode::Sampled, seed, count};
  report.records = evaluate_all(instances, m, options.jobs);
  summarize(report);
  return report;
}

ScanReport merge(const ScanReport& a, const ScanReport& b) {
  const auto& pa = a.parameters;
  const auto& pb = b.parameters;
  if (pa.k != pb.k || pa.m != pb.m || pa.mode != pb.mode) {
    throw ParameterError("merge: reports differ in k, m or mode");
  }
  ScanReport out;
  out.parameters = pa;
  out.parameters.n = std::max(pa.n, pb.n);
  out.parameters.count = pa.count + pb.count;
  out.records = a.records;
  out.records.insert(out.records.end(), b.records.begin(), b.records.end());
  if (pa.mode == ScanMode::Exhaustive) {
    auto by_form = [](const ScanRecord& x, const ScanRecord& y) { return x.canonical < y.canonical; };
    std::stable_sort(out.records.begin(), out.records.end(), by_form);
    out.records.erase(std::unique(out.records.begin(), out.records.end(),
                                  [](const ScanRecord& x, const ScanRecord& y) { return x.canonical == y.canonical; }),
                      out.records.end());
  }
  summarize(out);
  return out;
}

void write_report(std::ostream& out, const ScanReport& report) {
  const auto& p = report.parameters;
  out << "# scan k=" << p.k << " m=" << p.m << " n=" << p.n
      << " mode=" << (p.mode == ScanMode::Exhaustive ? "exhaustive" : "sampled");
  if (p.mode == ScanMode::Sampled) out << " seed=" << p.seed << " count=" << p.count;
  out << '\n';
  for (const auto& r : report.records) {
    out << r.canonical << ' ' << r.nu << ' ' << r.tau << ' ' << to_fraction_string(r.tau_star) << ' '
        << to_fraction_string(r.ratio()) << '\n';
  }
  out << "# summary\n";
  out << "# instances " << report.records.size() << '\n';
  const auto max_ratio = report.max_ratio();
  const auto max_frac = report.max_frac_ratio();
  out << "# max_ratio " << (max_ratio ? to_fraction_string(*max_ratio) : "-") << '\n';
  out << "# max_frac_ratio " << (max_frac ? to_fraction_string(*max_frac) : "-") << '\n';
  for (const auto& [nu, r] : report.best_ratio_per_nu) {
    out << "# best_ratio nu=" << nu << ' ' << to_fraction_string(r) << '\n';
  }
  for (const auto& [nu, r] : report.best_frac_ratio_per_nu) {
    out << "# best_frac_ratio nu=" << nu << ' ' << to_fraction_string(r) << '\n';
  }
  out << "# violations " << report.violations.size() << '\n';
  for (const auto& v : report.violations) {
    out << "# violation " << v.canonical << " nu=" << v.nu << " tau=" << v.tau << " matching=";
    for (std::size_t i = 0; i < v.matching.size(); ++i) out << (i ? "|" : "") << format_set(v.matching[i], ',');
    out << '\n';
  }
}

std::string to_text(const ScanReport& report) {
  std::ostringstream out;
  write_report(out, report);
  return out.str();
}

TuzaReport check_tuza_corollary(const SimpleGraph& g) {
  const Hypergraph t = gen_triangle_hypergraph(g);
  TuzaReport report;
  report.graph_edges = g.edges.size();
  report.triangles = t.edge_count();
  report.nu = t.empty() ? 0 : matching_number(t, 2);
  report.tau = t.empty() ? 0 : cover_number(t, 2);
  report.precondition_met = report.nu <= 3;
  if (report.precondition_met && !t.empty()) report.constructive = cover_small_nu(t);
  return report;
}

}  // namespace hypercover

#include "hypercover/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "hypercover/canonical.hpp"
#include "hypercover/constructions.hpp"
#include "hypercover/errors.hpp"
#include "hypercover/exact.hpp"
#include "hypercover/fraclp.hpp"
#include "hypercover/generators.hpp"
#include "hypercover/scan.hpp"

namespace hypercover::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Io {
  std::istream& in;
  std::ostream& out;
};

std::string slurp(const std::string& path, std::istream& fallback) {
  std::ostringstream buffer;
  if (path.empty() || path == "-") {
    buffer << fallback.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path);
  if (!file) throw UsageError("cannot open '" + path + "'");
  buffer << file.rdbuf();
  return buffer.str();
}

Hypergraph load_hypergraph(const std::string& path, std::istream& fallback) {
  std::istringstream text(slurp(path, fallback));
  return read_hypergraph(text).hypergraph;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream file(path);
  if (!file) throw UsageError("cannot write '" + path + "'");
  file << content;
}

// Writes to --out when given, else to the command's stdout.
void emit(const std::string& path, std::ostream& out, const std::string& content) {
  if (path.empty() || path == "-") {
    out << content;
  } else {
    write_file(path, content);
  }
}

std::string cover_text(const CoverCertificate& c) {
  std::ostringstream s;
  write_cover(s, c);
  return s.str();
}

std::string assignment_text(const FractionalAssignment& a) {
  std::ostringstream s;
  write_assignment(s, a);
  return s.str();
}

int resolve_m(const Hypergraph& h, int m) {
  if (m == 0) return h.uniformity() - 1;
  return m;
}

int do_compute(Io io, const std::string& in_path, int m_opt, const std::string& cert_path) {
  const Hypergraph h = load_hypergraph(in_path, io.in);
  const int m = resolve_m(h, m_opt);
  const auto report = sandwich_check(h, m);
  io.out << "nu=" << report.nu << " tau=" << report.tau << '\n';
  io.out << "nustar=" << to_fraction_string(report.nu_star) << " taustar=" << to_fraction_string(report.tau_star)
         << '\n';
  io.out << "sandwich " << report.nu << " <= " << to_fraction_string(report.nu_star) << " = "
         << to_fraction_string(report.tau_star) << " <= " << report.tau << " <= " << report.binom_bound
         << " holds\n";
  if (!cert_path.empty()) write_file(cert_path, cover_text(min_m_cover(h, m).cover));
  return kExitOk;
}

int do_construct(Io io, const std::string& in_path, const std::string& theorem, int m_opt,
                 const std::string& cert_path) {
  const Hypergraph h = load_hypergraph(in_path, io.in);
  CertifiedCover c;
  if (theorem == "nu1") {
    c = cover_nu1(h);
  } else if (theorem == "nu2") {
    c = cover_nu2(h);
  } else if (theorem == "nu3") {
    c = cover_nu3(h);
  } else if (theorem == "g1km") {
    if (m_opt == 0) throw UsageError("construct --theorem g1km needs --m");
    c = cover_g1_km(h, m_opt);
  } else if (theorem == "g152") {
    c = cover_g1_52(h);
  } else {
    c = cover_g1_kkm2(h);
  }
  io.out << "# theorem=" << theorem << " recipe=" << c.recipe << " construction_size=" << c.construction_size
         << " size=" << c.cover.size() << " bound=" << c.bound << " verified\n";
  io.out << cover_text(c.cover);
  if (!cert_path.empty()) write_file(cert_path, cover_text(c.cover));
  return kExitOk;
}

int do_fractional(Io io, const std::string& in_path, const std::string& theorem, int m_opt,
                  const std::string& cert_path) {
  const Hypergraph h = load_hypergraph(in_path, io.in);
  const int k = h.uniformity();
  CertifiedFractionalCover c;
  if (theorem == "2kk") {
    c = frac_cover_2kk(h);
  } else if (theorem == "kkm2") {
    c = frac_cover_kkm2(h);
  } else {
    if (m_opt == 0) throw UsageError("fractional --theorem hstar needs --m");
    if (k == 2 * m_opt) {
      c = frac_cover_hstar(h, m_opt, subroutine_2kk(k));
    } else if (m_opt == k - 2) {
      c = frac_cover_hstar(h, m_opt, subroutine_kkm2(k));
    } else {
      throw PreconditionError("hstar: no matching-number-1 routine for (k, m) = (" + std::to_string(k) + ", " +
                              std::to_string(m_opt) + ")");
    }
  }
  io.out << "# theorem=" << theorem << " recipe=" << c.recipe << " total=" << to_fraction_string(c.assignment.total())
         << " bound=" << to_fraction_string(c.bound) << " verified\n";
  io.out << assignment_text(c.assignment);
  if (!cert_path.empty()) write_file(cert_path, assignment_text(c.assignment));
  return kExitOk;
}

struct GenerateOptions {
  std::string family;
  int k = 0;
  int n = 0;
  int m = 0;
  std::optional<int> nu;
  std::uint64_t seed = 0;
  int max_edges = 0;
  std::string graph;
  std::string out;
};

int do_generate(Io io, const GenerateOptions& o) {
  Hypergraph h;
  if (o.family == "extremal") {
    if (o.k == 0) throw UsageError("generate --family extremal needs --k");
    h = gen_complete_extremal(o.k);
  } else if (o.family == "biplane") {
    h = gen_biplane_11_5_2();
  } else if (o.family == "triangle") {
    std::istringstream text(slurp(o.graph, io.in));
    h = gen_triangle_hypergraph(read_graph(text));
  } else {
    if (o.n == 0 || o.k == 0) throw UsageError("generate --family random needs --n and --k");
    RandomSpec spec;
    spec.n = o.n;
    spec.k = o.k;
    spec.m = o.m == 0 ? o.k - 1 : o.m;
    spec.target_nu = o.nu;
    spec.seed = o.seed;
    spec.max_edges = o.max_edges;
    h = gen_random(spec);
  }
  emit(o.out, io.out, to_text(h));
  return kExitOk;
}

struct ScanCliOptions {
  int k = 3;
  int m = 0;
  int n = 0;
  std::optional<std::size_t> samples;
  std::uint64_t seed = 0;
  int jobs = 1;
  int max_n = 0;
  std::vector<std::string> inject;
  std::string out;
};

int do_scan(Io io, const ScanCliOptions& o) {
  const int m = o.m == 0 ? o.k - 1 : o.m;
  ScanOptions options;
  options.jobs = o.jobs;
  options.max_n = o.max_n;
  for (const auto& path : o.inject) options.injected.push_back(load_hypergraph(path, io.in));
  const ScanReport report = o.samples ? scan_sampled(o.k, m, o.n, *o.samples, o.seed, options)
                                      : scan_exhaustive(o.k, m, o.n, options);
  emit(o.out, io.out, to_text(report));
  return report.violations.empty() ? kExitOk : kExitInvariant;
}

int do_verify(Io io, std::ostream& err, const std::string& in_path, const std::string& cert_path) {
  const Hypergraph h = load_hypergraph(in_path, io.in);
  const std::string cert = slurp(cert_path, io.in);
  if (cert.find("# side=") != std::string::npos) {
    std::istringstream text(cert);
    const auto a = read_assignment(text);
    if (!verify_fractional(h, a)) {
      err << "fractional certificate violates a constraint\n";
      return kExitPrecondition;
    }
    io.out << "valid fractional " << (a.side == AssignmentSide::Cover ? "cover" : "matching")
           << " m=" << a.m << " total=" << to_fraction_string(a.total()) << '\n';
    return kExitOk;
  }
  std::istringstream text(cert);
  const auto c = read_cover(text);
  if (auto miss = first_uncovered_edge(h, c)) {
    err << "uncovered edge: " << format_set(h.edge(*miss)) << '\n';
    return kExitPrecondition;
  }
  io.out << "valid cover m=" << c.m << " size=" << c.size() << '\n';
  return kExitOk;
}

int do_tuza(Io io, const std::string& graph_path) {
  std::istringstream text(slurp(graph_path, io.in));
  const auto report = check_tuza_corollary(read_graph(text));
  io.out << "triangles=" << report.triangles << " nu_t=" << report.nu << " tau_t=" << report.tau;
  if (report.nu > 0) io.out << " ratio=" << to_fraction_string(make_rational(report.tau, report.nu));
  io.out << '\n';
  if (!report.precondition_met) {
    io.out << "corollary precondition unmet (nu_t >= 4)\n";
  } else if (report.constructive) {
    io.out << "constructive cover size=" << report.constructive->cover.size()
           << " recipe=" << report.constructive->recipe << '\n';
    io.out << cover_text(report.constructive->cover);
  }
  io.out << (report.holds() ? "tuza bound holds" : "tuza bound FAILS") << '\n';
  return report.holds() ? kExitOk : kExitInvariant;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"k-uniform hypergraph m-matchings and m-covers", "hypercover"};
  app.require_subcommand(1);
  Io io{in, out};

  std::string in_path;
  std::string cert_path;
  std::string theorem;
  int m = 0;

  auto* compute = app.add_subcommand("compute", "exact nu, tau, nu*, tau* and the sandwich chain");
  compute->add_option("--in", in_path, "hypergraph file (default stdin)");
  compute->add_option("--m", m, "intersection parameter (default k-1)")->check(CLI::PositiveNumber);
  compute->add_option("--emit-certificate", cert_path, "write an optimal cover here");

  auto* construct = app.add_subcommand("construct", "certified cover from a constructive bound");
  construct->add_option("--in", in_path, "hypergraph file (default stdin)");
  construct->add_option("--theorem", theorem)
      ->required()
      ->check(CLI::IsMember({"nu1", "nu2", "nu3", "g1km", "g152", "g1kkm2"}));
  construct->add_option("--m", m, "m for g1km")->check(CLI::PositiveNumber);
  construct->add_option("--emit-certificate", cert_path);

  auto* fractional = app.add_subcommand("fractional", "certified fractional cover");
  fractional->add_option("--in", in_path, "hypergraph file (default stdin)");
  fractional->add_option("--theorem", theorem)->required()->check(CLI::IsMember({"2kk", "hstar", "kkm2"}));
  fractional->add_option("--m", m, "m for hstar")->check(CLI::PositiveNumber);
  fractional->add_option("--emit-certificate", cert_path);

  GenerateOptions gen;
  auto* generate = app.add_subcommand("generate", "write a hypergraph");
  generate->add_option("--family", gen.family)
      ->required()
      ->check(CLI::IsMember({"extremal", "biplane", "triangle", "random"}));
  generate->add_option("--k", gen.k)->check(CLI::PositiveNumber);
  generate->add_option("--n", gen.n)->check(CLI::PositiveNumber);
  generate->add_option("--m", gen.m)->check(CLI::PositiveNumber);
  generate->add_option("--nu", gen.nu, "target m-matching number");
  generate->add_option("--seed", gen.seed);
  generate->add_option("--max-edges", gen.max_edges)->check(CLI::NonNegativeNumber);
  generate->add_option("--graph", gen.graph, "graph file for --family triangle (default stdin)");
  generate->add_option("--out", gen.out);

  ScanCliOptions sc;
  auto* scan = app.add_subcommand("scan", "exhaustive or sampled ratio scan");
  scan->add_option("--k", sc.k)->required()->check(CLI::PositiveNumber);
  scan->add_option("--m", sc.m, "default k-1")->check(CLI::PositiveNumber);
  scan->add_option("--n", sc.n)->required()->check(CLI::PositiveNumber);
  scan->add_option("--samples", sc.samples, "sampled mode with this many instances");
  scan->add_option("--seed", sc.seed);
  scan->add_option("--jobs", sc.jobs)->check(CLI::PositiveNumber);
  scan->add_option("--max-n", sc.max_n, "exhaustive n guard")->check(CLI::PositiveNumber);
  scan->add_option("--inject", sc.inject, "hypergraph files evaluated first in sampled mode");
  scan->add_option("--out", sc.out);

  auto* verify = app.add_subcommand("verify", "replay a cover or fractional certificate");
  verify->add_option("--in", in_path, "hypergraph file");
  verify->add_option("--cert", cert_path)->required();

  std::string graph_path;
  auto* tuza = app.add_subcommand("tuza", "triangle packing/covering check of a graph");
  tuza->add_option("--graph", graph_path, "graph file (default stdin)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n' << app.help();
    return kExitUsage;
  }

  try {
    if (*compute) return do_compute(io, in_path, m, cert_path);
    if (*construct) return do_construct(io, in_path, theorem, m, cert_path);
    if (*fractional) return do_fractional(io, in_path, theorem, m, cert_path);
    if (*generate) return do_generate(io, gen);
    if (*scan) return do_scan(io, sc);
    if (*verify) return do_verify(io, err, in_path, cert_path);
    return do_tuza(io, graph_path);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const PreconditionError& e) {
    err << "precondition unmet: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const MalformedInput& e) {
    err << "malformed input: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const GuardExceeded& e) {
    err << "guard exceeded: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const InvariantViolation& e) {
    err << "internal invariant violated: " << e.what() << '\n';
    return kExitInvariant;
  }
}

}  // namespace hypercover::cli

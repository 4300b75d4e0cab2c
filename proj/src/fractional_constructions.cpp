#include <algorithm>

#include "construction_support.hpp"
#include "hypercover/constructions.hpp"
#include "hypercover/errors.hpp"
#include "hypercover/exact.hpp"

namespace hypercover {

namespace {

Rational from_count(std::uint64_t n) { return Rational(static_cast<unsigned long>(n)); }

void certify(const Hypergraph& h, const CertifiedFractionalCover& c) {
  if (!verify_fractional(h, c.assignment)) {
    throw InvariantViolation("fractional construction '" + c.recipe + "' is not a fractional cover");
  }
  if (c.assignment.total() > c.bound) {
    throw InvariantViolation("fractional construction '" + c.recipe + "' total " +
                             to_fraction_string(c.assignment.total()) + " exceeds bound " +
                             to_fraction_string(c.bound));
  }
}

std::vector<Edge> meeting_exactly(const Hypergraph& h, Edge e, VertexSet part) {
  std::vector<Edge> out;
  for (Edge x : h.edges()) {
    if (x != e && (x & e) == part) out.push_back(x);
  }
  return out;
}

}  // namespace

Rational bound_2kk(int k) {
  if (k < 4 || k % 2 != 0) throw ParameterError("bound_2kk: uniformity must be even and >= 4");
  const int half = k / 2;
  return (make_rational(1, 2) + make_rational(1, 2 * (half + 1))) * from_count(binomial(k, half));
}

Rational bound_kkm2(int k) {
  if (k < 3) throw ParameterError("bound_kkm2: requires k >= 3");
  return make_rational(1, 6) * from_count(binomial(k - 2, 2)) + Rational(2 * k - 3);
}

Rational bound_hstar(int k, int m, const Rational& subroutine_bound, int nu) {
  return make_rational(1, 2) * (from_count(binomial(k, m)) + subroutine_bound) * Rational(nu);
}

CertifiedFractionalCover frac_cover_2kk(const Hypergraph& h) {
  const int k2 = h.uniformity();
  if (k2 < 4 || k2 % 2 != 0) throw ParameterError("frac_cover_2kk: uniformity must be even and >= 4");
  const int k = k2 / 2;
  detail::require_matching_number(h, k, 1, "frac_cover_2kk");

  CertifiedFractionalCover out;
  out.recipe = "2kk";
  out.bound = bound_2kk(k2);
  out.assignment.side = AssignmentSide::Cover;
  out.assignment.m = k;

  const Edge e = h.edge(0);
  const Rational base(1, k + 1);
  const Rational boost(k, k + 1);
  for (const MSet& a : m_subsets(e, k)) out.assignment.add(a.vertices, base);
  const VertexSet anchor = singleton(lowest_vertex(e));
  for (const MSet& a : m_subsets(e, k)) {
    if ((a.vertices & anchor) == 0) continue;
    const VertexSet s = a.vertices;
    const VertexSet t = e & ~s;
    const auto fs = meeting_exactly(h, e, s);
    const auto ft = meeting_exactly(h, e, t);
    if (!fs.empty() && !ft.empty()) {
      const VertexSet outside = fs.front() & ~e;
      out.assignment.add(outside, boost);
    } else if (!fs.empty()) {
      out.assignment.add(s, boost);
    } else if (!ft.empty()) {
      out.assignment.add(t, boost);
    }
  }
  certify(h, out);
  return out;
}

CertifiedFractionalCover frac_cover_kkm2(const Hypergraph& h) {
  const int k = h.uniformity();
  if (k < 3) throw ParameterError("frac_cover_kkm2: requires k >= 3");
  const int m = k - 2;
  detail::require_matching_number(h, m, 1, "frac_cover_kkm2");

  CertifiedFractionalCover out;
  out.bound = bound_kkm2(k);
  out.assignment.side = AssignmentSide::Cover;
  out.assignment.m = m;
  const auto all = detail::edge_list(h);

  if (all.size() == 1) {
    out.recipe = "kkm2/single-edge";
    out.assignment.add(detail::first_subset(all.front(), m), Rational(1));
    certify(h, out);
    return out;
  }
  if (k <= 6) {
    out.recipe = "kkm2/lp";
    out.assignment = solve_fractional(h, m).cover;
    certify(h, out);
    return out;
  }

  for (Edge e : all) {
    const bool meets_all = std::all_of(all.begin(), all.end(), [&](Edge x) {
      return x == e || intersection_size(x, e) == k - 1;
    });
    if (!meets_all) continue;
    out.recipe = "kkm2/near-edge";
    for (const MSet& a : m_subsets(e, m)) out.assignment.add(a.vertices, make_rational(1, k - 1));
    certify(h, out);
    return out;
  }

  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      if (intersection_size(all[i], all[j]) != k - 2) continue;
      out.recipe = "kkm2/split";
      const Edge e = all[i];
      const Edge f = all[j];
      const VertexSet shared = e & f;
      const VertexSet outer = (e | f) & ~shared;
      out.assignment.add(shared, Rational(1));
      for (VertexSet sp : subsets_of_size(shared, k - 4)) {
        for (int x : to_vertices(e & ~shared)) {
          for (int y : to_vertices(f & ~shared)) {
            out.assignment.add(sp | singleton(x) | singleton(y), make_rational(1, k - 3));
          }
        }
      }
      const Rational rest = (Rational(1) - make_rational(4, k - 3)) / from_count(binomial(k - 4, 2));
      if (rest > 0) {
        for (VertexSet spp : subsets_of_size(shared, k - 6)) out.assignment.add(spp | outer, rest);
      }
      certify(h, out);
      return out;
    }
  }
  throw InvariantViolation("frac_cover_kkm2: no edge pair meeting in k-2 vertices");
}

FractionalSubroutine subroutine_2kk(int k) {
  return {"2kk", [](const Hypergraph& h) { return frac_cover_2kk(h).assignment; }, bound_2kk(k)};
}

FractionalSubroutine subroutine_kkm2(int k) {
  return {"kkm2", [](const Hypergraph& h) { return frac_cover_kkm2(h).assignment; }, bound_kkm2(k)};
}

CertifiedFractionalCover frac_cover_hstar(const Hypergraph& h, int m, const FractionalSubroutine& sub) {
  const int k = h.uniformity();
  if (m < 2 || m >= k) throw ParameterError("frac_cover_hstar: requires 2 <= m < k");
  if (!sub.construct) throw ParameterError("frac_cover_hstar: missing subroutine");

  const auto matching = max_m_matching(h, m).matching;
  const int nu = static_cast<int>(matching.size());
  CertifiedFractionalCover out;
  out.recipe = "hstar/" + sub.name;
  out.bound = bound_hstar(k, m, sub.bound, nu);
  out.assignment.side = AssignmentSide::Cover;
  out.assignment.m = m;

  std::vector<Edge> centers;
  for (auto i : matching.edge_indices) centers.push_back(h.edge(i));
  const Rational half(1, 2);
  for (Edge e : centers) {
    for (const MSet& a : m_subsets(e, m)) out.assignment.add(a.vertices, half);
  }

  auto load = [&](Edge x) {
    Rational sum = 0;
    for (const auto& [s, w] : out.assignment.weights) {
      if (is_subset(s, x)) sum += w;
    }
    return sum;
  };
  std::vector<std::vector<Edge>> groups(centers.size());
  for (Edge x : h.edges()) {
    if (load(x) >= 1) continue;
    std::optional<std::size_t> owner;
    for (std::size_t c = 0; c < centers.size(); ++c) {
      if (intersection_size(x, centers[c]) == m) owner = c;
    }
    if (!owner) throw InvariantViolation("frac_cover_hstar: uncovered edge meets no matching edge in m vertices");
    groups[*owner].push_back(x);
  }
  for (const auto& group : groups) {
    if (group.empty()) continue;
    const Hypergraph part = h.with_edges(group);
    const FractionalAssignment local = sub.construct(part);
    if (local.side != AssignmentSide::Cover || local.m != m || !verify_fractional(part, local)) {
      throw InvariantViolation("frac_cover_hstar: subroutine '" + sub.name + "' returned an infeasible cover");
    }
    if (local.total() > sub.bound) {
      throw InvariantViolation("frac_cover_hstar: subroutine '" + sub.name + "' exceeded its bound");
    }
    for (const auto& [s, w] : local.weights) out.assignment.add(s, half * w);
  }
  certify(h, out);
  return out;
}

}  // namespace hypercover

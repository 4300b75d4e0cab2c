#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hypercover/fraclp.hpp"
#include "hypercover/hypergraph.hpp"
#include "hypercover/rational.hpp"

namespace hypercover {

// Structure around a (k-1)-matching M.
//
// T_e: edges meeting e in at least k-1 vertices.
// S_e: edges of T_e meeting no other edge of M in k-1 vertices.
struct NeighborhoodDecomposition {
  Matching base_matching;
  std::vector<std::vector<std::size_t>> s_sets;  // parallel to base_matching.edge_indices
  std::vector<std::vector<std::size_t>> t_sets;
  std::vector<int> degrees;                 // d_M(v) for v in 0..n-1
  std::vector<std::size_t> unattached;      // edges in no T_e
};

/// Throws PreconditionError unless M is a valid (k-1)-matching of H.
NeighborhoodDecomposition decompose(const Hypergraph& h, const Matching& m);

/// Split of M's edge indices with every cross pair meeting in < k-2
/// vertices. `first` is the component of M's first edge.
struct MatchingPartition {
  std::vector<std::size_t> first;
  std::vector<std::size_t> second;
};

std::optional<MatchingPartition> find_disconnected_partition(const Matching& m, const Hypergraph& h);

enum class MatchingType {
  Disconnected,
  ThreeUniformA,
  ThreeUniformB,
  ThreeUniformC,
  KUniformA,
  KUniformB,
  KUniformC,
  KUniformD,
  KUniformE,
  KUniformF,
};

std::string_view to_string(MatchingType t);

/// Type of a maximum (k-1)-matching of size 3, with the named vertices and
/// sets of its case. `center` meets both other edges in k-2 vertices.
struct MatchingTypeClassification {
  MatchingType type = MatchingType::Disconnected;
  Edge center = 0;
  Edge f = 0;
  Edge g = 0;
  std::map<std::string, VertexSet> roles;
};

/// Throws PreconditionError unless `m` is a (k-1)-matching of size 3.
MatchingTypeClassification classify_matching(const Hypergraph& h, const Matching& m);

/// Split of binom(e, m) by whether some other edge meets e exactly there.
struct DispensabilityTable {
  Edge edge = 0;
  int m = 0;
  std::vector<MSet> dispensable;
  std::vector<MSet> indispensable;
  std::vector<Edge> witness;  // parallel to indispensable; lexicographically first
};

DispensabilityTable dispensability(const Hypergraph& h, Edge e, int m);

/// Graph on binom(e, m) joining sets that meet in exactly max(0, 2m-k)
/// vertices.
struct AuxiliaryIntersectionGraph {
  std::vector<VertexSet> vertices;
  int overlap = 0;
  std::vector<std::pair<int, int>> edges;  // indices into `vertices`, u < v

  /// Closed-form degree: C(k-m, m) when overlap is 0, else C(m, 2m-k).
  static std::uint64_t expected_degree(int k, int m);
};

AuxiliaryIntersectionGraph auxiliary_intersection_graph(Edge e, int m);

/// Verified cover together with how it was obtained.
///
/// `construction_size` counts the distinct sets the recipe emitted; the
/// returned cover has redundant sets removed afterwards, so cover.size()
/// can only be smaller.
struct CertifiedCover {
  CoverCertificate cover;
  std::size_t construction_size = 0;
  std::uint64_t bound = 0;
  std::string recipe;
};

CertifiedCover cover_nu1(const Hypergraph& h);
CertifiedCover cover_nu2(const Hypergraph& h);
CertifiedCover cover_nu3(const Hypergraph& h);
/// Dispatches on nu^(k-1) in {0, 1, 2, 3}.
CertifiedCover cover_small_nu(const Hypergraph& h);

CertifiedCover cover_g1_km(const Hypergraph& h, int m);
CertifiedCover cover_g1_52(const Hypergraph& h);
CertifiedCover cover_g1_kkm2(const Hypergraph& h);

struct CertifiedFractionalCover {
  FractionalAssignment assignment;
  Rational bound;
  std::string recipe;
};

/// Fractional cover routine for instances with m-matching number 1,
/// certified to stay within `bound`.
struct FractionalSubroutine {
  std::string name;
  std::function<FractionalAssignment(const Hypergraph&)> construct;
  Rational bound;
};

FractionalSubroutine subroutine_2kk(int k);
FractionalSubroutine subroutine_kkm2(int k);

Rational bound_2kk(int k);    // k = uniformity
Rational bound_kkm2(int k);
Rational bound_hstar(int k, int m, const Rational& subroutine_bound, int nu);

CertifiedFractionalCover frac_cover_2kk(const Hypergraph& h);
CertifiedFractionalCover frac_cover_hstar(const Hypergraph& h, int m, const FractionalSubroutine& sub);
CertifiedFractionalCover frac_cover_kkm2(const Hypergraph& h);

}  // namespace hypercover

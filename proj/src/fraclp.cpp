#include "hypercover/fraclp.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "hypercover/errors.hpp"
#include "hypercover/simplex.hpp"

namespace hypercover {

Rational FractionalAssignment::total() const {
  Rational sum = 0;
  for (const auto& [object, w] : weights) sum += w;
  return sum;
}

void FractionalAssignment::add(VertexSet object, const Rational& w) {
  auto it = std::lower_bound(weights.begin(), weights.end(), object,
                             [](const auto& entry, VertexSet o) { return lex_less(entry.first, o); });
  if (it != weights.end() && it->first == object) {
    it->second += w;
  } else {
    weights.insert(it, {object, w});
  }
}

Rational FractionalAssignment::weight_of(VertexSet object) const {
  for (const auto& [o, w] : weights) {
    if (o == object) return w;
  }
  return 0;
}

FractionalSolution solve_fractional(const Hypergraph& h, int m, std::size_t guard) {
  if (m < 1 || m > h.uniformity()) throw ParameterError("solve_fractional: need 1 <= m <= k");
  std::map<VertexSet, std::size_t, LexLess> row_of;
  for (Edge e : h.edges()) {
    for (VertexSet s : subsets_of_size(e, m)) row_of.emplace(s, 0);
  }
  std::vector<VertexSet> rows;
  for (auto& [s, r] : row_of) {
    r = rows.size();
    rows.push_back(s);
  }
  const std::size_t cols = h.edge_count();
  if (cols + rows.size() > guard) {
    throw GuardExceeded("solve_fractional: " + std::to_string(cols) + " edges + " +
                        std::to_string(rows.size()) + " rows exceed the LP guard of " +
                        std::to_string(guard));
  }

  FractionalSolution out;
  out.matching.side = AssignmentSide::Matching;
  out.matching.m = m;
  out.cover.side = AssignmentSide::Cover;
  out.cover.m = m;
  if (cols == 0) return out;

  std::vector<std::vector<Rational>> a(rows.size(), std::vector<Rational>(cols));
  for (std::size_t j = 0; j < cols; ++j) {
    for (VertexSet s : subsets_of_size(h.edge(j), m)) a[row_of.at(s)][j] = 1;
  }
  std::vector<Rational> b(rows.size(), Rational(1));
  std::vector<Rational> c(cols, Rational(1));
  RationalSimplex lp(std::move(a), std::move(b), std::move(c));
  auto sol = lp.solve();
  if (sol.status != RationalSimplex::Status::Optimal) {
    throw InvariantViolation("fractional matching LP reported unbounded");
  }
  out.pivots = sol.pivots;
  for (std::size_t j = 0; j < cols; ++j) {
    if (sol.primal[j] != 0) out.matching.weights.emplace_back(h.edge(j), sol.primal[j]);
  }
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (sol.dual[r] != 0) out.cover.weights.emplace_back(rows[r], sol.dual[r]);
  }
  if (out.matching.total() != out.cover.total()) {
    throw InvariantViolation("fractional LP: primal and dual totals differ");
  }
  return out;
}

bool verify_fractional(const Hypergraph& h, const FractionalAssignment& a) {
  const VertexSet universe = all_vertices(h.vertex_count());
  const int object_size = a.side == AssignmentSide::Matching ? h.uniformity() : a.m;
  for (const auto& [object, w] : a.weights) {
    if (w < 0) throw MalformedInput("fractional assignment has a negative weight");
    if (set_size(object) != object_size || !is_subset(object, universe)) {
      throw MalformedInput("fractional assignment object {" + format_set(object) +
                           "} has the wrong size or a vertex >= n");
    }
  }
  if (a.side == AssignmentSide::Cover) {
    for (Edge e : h.edges()) {
      Rational load = 0;
      for (const auto& [s, w] : a.weights) {
        if (is_subset(s, e)) load += w;
      }
      if (load < 1) return false;
    }
    return true;
  }
  for (const auto& [object, w] : a.weights) {
    if (!h.contains(object)) {
      throw MalformedInput("matching-side weight on a non-edge {" + format_set(object) + "}");
    }
  }
  // An m-set inside no weighted edge carries load 0, so only m-subsets of
  // weighted edges need checking among all of binom(V, m).
  std::map<VertexSet, Rational, LexLess> load;
  for (const auto& [edge, w] : a.weights) {
    for (VertexSet s : subsets_of_size(edge, a.m)) load[s] += w;
  }
  return std::all_of(load.begin(), load.end(), [](const auto& entry) { return entry.second <= 1; });
}

void write_assignment(std::ostream& out, const FractionalAssignment& a) {
  out << "# side=" << (a.side == AssignmentSide::Matching ? "matching" : "cover") << " m=" << a.m
      << " total=" << to_fraction_string(a.total()) << '\n';
  for (const auto& [object, w] : a.weights) {
    out << format_set(object, ',') << ' ' << to_fraction_string(w) << '\n';
  }
}

FractionalAssignment read_assignment(std::istream& in) {
  FractionalAssignment a;
  bool have_m = false;
  std::string line;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') {
      if (line.find("side=matching") != std::string::npos) a.side = AssignmentSide::Matching;
      auto pos = line.find(" m=");
      if (pos != std::string::npos) {
        std::istringstream ss(line.substr(pos + 3));
        if (ss >> a.m) have_m = true;
      }
      continue;
    }
    std::istringstream ss(line);
    std::string descriptor, weight;
    if (!(ss >> descriptor >> weight)) throw MalformedInput("assignment: expected `ids num/den`");
    VertexSet object = 0;
    std::istringstream ids(descriptor);
    std::string tok;
    int count = 0;
    while (std::getline(ids, tok, ',')) {
      int v = -1;
      try {
        v = std::stoi(tok);
      } catch (const std::logic_error&) {
        throw MalformedInput("assignment: bad vertex id '" + tok + "'");
      }
      if (v < 0 || v >= kMaxVertices) throw MalformedInput("assignment: vertex id out of range");
      object |= singleton(v);
      ++count;
    }
    if (set_size(object) != count) throw MalformedInput("assignment: repeated vertex id");
    a.add(object, parse_rational(weight));
  }
  if (!have_m && !a.weights.empty() && a.side == AssignmentSide::Cover) {
    a.m = set_size(a.weights.front().first);
  }
  return a;
}

}  // namespace hypercover

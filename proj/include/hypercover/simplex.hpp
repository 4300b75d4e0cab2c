#pragma once

#include <cstdint>
#include <vector>

#include "hypercover/rational.hpp"

namespace hypercover {

/// Dense-tableau primal simplex over exact rationals for
///
///   maximize c^T x  subject to  A x <= b,  x >= 0,   with b >= 0,
///
/// so the slack basis is feasible from the start. Entering and leaving
/// variables follow Bland's rule, which rules out cycling. At optimality the
/// objective row under the slack columns is an optimal solution of the dual
///
///   minimize b^T y  subject to  A^T y >= c,  y >= 0.
class RationalSimplex {
 public:
  enum class Status { Optimal, Unbounded };

  struct Solution {
    Status status = Status::Optimal;
    Rational objective;
    std::vector<Rational> primal;  // one per column of A
    std::vector<Rational> dual;    // one per row of A
    std::uint64_t pivots = 0;
  };

  /// Throws ParameterError on ragged input or a negative right-hand side.
  RationalSimplex(std::vector<std::vector<Rational>> a, std::vector<Rational> b,
                  std::vector<Rational> c);

  Solution solve();

 private:
  void pivot(std::size_t row, std::size_t col);

  std::size_t rows_;
  std::size_t cols_;  // structural columns
  // tableau_[r] for r < rows_ is constraint row r; tableau_[rows_] is the
  // objective row holding reduced costs z_j - c_j. Last column is the RHS.
  std::vector<std::vector<Rational>> tableau_;
  std::vector<std::size_t> basis_;
};

}  // namespace hypercover

#include "hypercover/simplex.hpp"

#include <optional>

#include "hypercover/errors.hpp"

namespace hypercover {

RationalSimplex::RationalSimplex(std::vector<std::vector<Rational>> a, std::vector<Rational> b,
                                 std::vector<Rational> c)
    : rows_(b.size()), cols_(c.size()) {
  if (a.size() != rows_) throw ParameterError("simplex: A and b row counts differ");
  const std::size_t width = cols_ + rows_ + 1;
  tableau_.assign(rows_ + 1, std::vector<Rational>(width));
  for (std::size_t r = 0; r < rows_; ++r) {
    if (a[r].size() != cols_) throw ParameterError("simplex: ragged constraint matrix");
    if (b[r] < 0) throw ParameterError("simplex: right-hand side must be non-negative");
    for (std::size_t j = 0; j < cols_; ++j) tableau_[r][j] = std::move(a[r][j]);
    tableau_[r][cols_ + r] = 1;
    tableau_[r][width - 1] = std::move(b[r]);
    basis_.push_back(cols_ + r);
  }
  for (std::size_t j = 0; j < cols_; ++j) tableau_[rows_][j] = -c[j];
}

void RationalSimplex::pivot(std::size_t row, std::size_t col) {
  auto& pivot_row = tableau_[row];
  const Rational factor = pivot_row[col];
  for (auto& x : pivot_row) {
    if (x != 0) x /= factor;
  }
  for (std::size_t r = 0; r <= rows_; ++r) {
    if (r == row) continue;
    auto& target = tableau_[r];
    if (target[col] == 0) continue;
    const Rational scale = target[col];
    for (std::size_t j = 0; j < target.size(); ++j) {
      if (pivot_row[j] != 0) target[j] -= scale * pivot_row[j];
    }
  }
  basis_[row] = col;
}

RationalSimplex::Solution RationalSimplex::solve() {
  Solution sol;
  const std::size_t total = cols_ + rows_;
  const std::size_t rhs = total;
  while (true) {
    // Bland: lowest-index improving column.
    std::optional<std::size_t> entering;
    for (std::size_t j = 0; j < total; ++j) {
      if (tableau_[rows_][j] < 0) {
        entering = j;
        break;
      }
    }
    if (!entering) break;
    // Minimum ratio; ties go to the lowest-index basic variable.
    std::optional<std::size_t> leaving;
    Rational best_ratio;
    for (std::size_t r = 0; r < rows_; ++r) {
      const Rational& coef = tableau_[r][*entering];
      if (coef <= 0) continue;
      Rational ratio = tableau_[r][rhs] / coef;
      if (!leaving || ratio < best_ratio || (ratio == best_ratio && basis_[r] < basis_[*leaving])) {
        leaving = r;
        best_ratio = std::move(ratio);
      }
    }
    if (!leaving) {
      sol.status = Status::Unbounded;
      return sol;
    }
    pivot(*leaving, *entering);
    ++sol.pivots;
  }
  sol.status = Status::Optimal;
  sol.objective = tableau_[rows_][rhs];
  sol.primal.assign(cols_, Rational(0));
  for (std::size_t r = 0; r < rows_; ++r) {
    if (basis_[r] < cols_) sol.primal[basis_[r]] = tableau_[r][rhs];
  }
  sol.dual.resize(rows_);
  for (std::size_t r = 0; r < rows_; ++r) sol.dual[r] = tableau_[rows_][cols_ + r];
  return sol;
}

}  // namespace hypercover

#include "rankone/linsolve.hpp"

#include <cassert>
#include <utility>

namespace rankone {

namespace {

// Reduces [rows | rhs] in place; returns pivot columns in row order.
std::vector<std::size_t> reduce(RationalMatrix& rows, RationalVector* rhs, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    if (rhs) std::swap((*rhs)[p], (*rhs)[r]);
    const Rational inv = 1 / rows[r][c];
    for (auto& x : rows[r]) x *= inv;
    if (rhs) (*rhs)[r] *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const Rational f = rows[i][c];
      for (std::size_t k = c; k < cols; ++k) rows[i][k] -= f * rows[r][k];
      if (rhs) (*rhs)[i] -= f * (*rhs)[r];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

LinearSolution solve_linear(RationalMatrix rows, RationalVector rhs, std::size_t unknowns) {
  assert(rows.size() == rhs.size());
  for ([[maybe_unused]] const auto& row : rows) assert(row.size() == unknowns);
  const auto pivots = reduce(rows, &rhs, unknowns);
  LinearSolution out;
  out.rank = pivots.size();
  for (std::size_t i = pivots.size(); i < rows.size(); ++i) {
    if (rhs[i] != 0) {
      out.status = SolveStatus::inconsistent;
      return out;
    }
  }
  if (pivots.size() < unknowns) {
    out.status = SolveStatus::family;
    return out;
  }
  out.status = SolveStatus::unique;
  out.values = zeros(unknowns);
  for (std::size_t i = 0; i < pivots.size(); ++i) out.values[pivots[i]] = rhs[i];
  return out;
}

std::size_t rank_of(RationalMatrix rows) {
  if (rows.empty()) return 0;
  return reduce(rows, nullptr, rows.front().size()).size();
}

}  // namespace rankone

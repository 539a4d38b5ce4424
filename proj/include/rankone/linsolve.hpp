#pragma once

#include "rankone/rational.hpp"

#include <vector>

namespace rankone {

using RationalMatrix = std::vector<RationalVector>;

enum class SolveStatus { unique, family, inconsistent };

struct LinearSolution {
  SolveStatus status = SolveStatus::inconsistent;
  RationalVector values;  // set when status == unique
  std::size_t rank = 0;
};

/// Solves rows * x = rhs exactly by Gauss-Jordan elimination.
/// Every row must have `unknowns` entries.
LinearSolution solve_linear(RationalMatrix rows, RationalVector rhs, std::size_t unknowns);

/// Rank of a matrix over Q.
std::size_t rank_of(RationalMatrix rows);

}  // namespace rankone

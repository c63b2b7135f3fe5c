#pragma once

#include "octoform/rational.hpp"

#include <vector>

namespace octoform {

using RationalMatrix = std::vector<std::vector<Rational>>;

// Row reduction over the rationals with a fixed, deterministic pivot rule:
// columns are processed left to right and the pivot is the first remaining
// row with a nonzero entry. Rows that reduce to zero come back with the
// exact combination of original rows that produced them.
struct RowReduction {
  int rank = 0;
  struct Dependency {
    int row;                            // index of the row that vanished
    std::vector<Rational> combination;  // weights over the original rows
  };
  std::vector<Dependency> dependencies;
};

RowReduction row_reduce_with_certificate(RationalMatrix rows);

int matrix_rank(RationalMatrix rows);

// Solves the overdetermined system A x = b exactly. Pivot selection follows
// the same first-nonzero rule. On success the solution satisfies every row,
// not just the pivot rows; the first violated row index is reported
// otherwise.
struct LinearSolve {
  enum class Status { Solved, RankDeficient, Inconsistent };
  Status status = Status::RankDeficient;
  std::vector<Rational> solution;
  int deficient_column = -1;   // RankDeficient: first column without a pivot
  int inconsistent_row = -1;   // Inconsistent: first row with nonzero residual
};

LinearSolve solve_exact(const RationalMatrix& matrix, const std::vector<Rational>& rhs);

}  // namespace octoform

#include "octoform/linalg.hpp"

#include <stdexcept>

namespace octoform {

RowReduction row_reduce_with_certificate(RationalMatrix rows) {
  RowReduction result;
  if (rows.empty()) return result;
  const std::size_t m = rows.size();
  const std::size_t n = rows[0].size();
  for (const auto& row : rows)
    if (row.size() != n) throw std::invalid_argument("ragged matrix");

  // Track row operations against an identity block.
  RationalMatrix trace(m, std::vector<Rational>(m));
  for (std::size_t i = 0; i < m; ++i) trace[i][i] = 1;

  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < n && pivot_row < m; ++col) {
    std::size_t pivot = pivot_row;
    while (pivot < m && rows[pivot][col] == 0) ++pivot;
    if (pivot == m) continue;
    std::swap(rows[pivot], rows[pivot_row]);
    std::swap(trace[pivot], trace[pivot_row]);
    const Rational inv = 1 / rows[pivot_row][col];
    for (std::size_t j = 0; j < n; ++j) rows[pivot_row][j] *= inv;
    for (std::size_t j = 0; j < m; ++j) trace[pivot_row][j] *= inv;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == pivot_row || rows[r][col] == 0) continue;
      Rational factor = rows[r][col];
      for (std::size_t j = 0; j < n; ++j) rows[r][j] -= factor * rows[pivot_row][j];
      for (std::size_t j = 0; j < m; ++j) trace[r][j] -= factor * trace[pivot_row][j];
    }
    ++pivot_row;
  }
  result.rank = static_cast<int>(pivot_row);

  for (std::size_t r = pivot_row; r < m; ++r) {
    // r-th reduced row vanished; its trace row is a left-kernel vector.
    RowReduction::Dependency dep;
    dep.combination.assign(trace[r].begin(), trace[r].end());
    // name the dependency after the last original row it involves
    dep.row = -1;
    for (std::size_t j = 0; j < m; ++j)
      if (dep.combination[j] != 0) dep.row = static_cast<int>(j);
    result.dependencies.push_back(std::move(dep));
  }
  return result;
}

int matrix_rank(RationalMatrix rows) {
  return row_reduce_with_certificate(std::move(rows)).rank;
}

LinearSolve solve_exact(const RationalMatrix& matrix, const std::vector<Rational>& rhs) {
  LinearSolve out;
  const std::size_t m = matrix.size();
  if (rhs.size() != m) throw std::invalid_argument("rhs length mismatch");
  if (m == 0) throw std::invalid_argument("empty system");
  const std::size_t d = matrix[0].size();

  // Forward elimination on an augmented working copy.
  RationalMatrix work(m, std::vector<Rational>(d + 1));
  for (std::size_t i = 0; i < m; ++i) {
    if (matrix[i].size() != d) throw std::invalid_argument("ragged matrix");
    for (std::size_t j = 0; j < d; ++j) work[i][j] = matrix[i][j];
    work[i][d] = rhs[i];
  }

  std::vector<std::size_t> pivot_of_col(d);
  std::size_t pivots = 0;
  for (std::size_t col = 0; col < d; ++col) {
    std::size_t pivot = pivots;
    while (pivot < m && work[pivot][col] == 0) ++pivot;
    if (pivot == m) {
      out.status = LinearSolve::Status::RankDeficient;
      out.deficient_column = static_cast<int>(col);
      return out;
    }
    std::swap(work[pivot], work[pivots]);
    const Rational inv = 1 / work[pivots][col];
    for (std::size_t j = col; j <= d; ++j) work[pivots][j] *= inv;
    for (std::size_t r = pivots + 1; r < m; ++r) {
      if (work[r][col] == 0) continue;
      Rational factor = work[r][col];
      for (std::size_t j = col; j <= d; ++j) work[r][j] -= factor * work[pivots][j];
    }
    pivot_of_col[col] = pivots;
    ++pivots;
  }

  // Back substitution over the triangular pivot block.
  std::vector<Rational> solution(d);
  for (std::size_t col = d; col-- > 0;) {
    Rational value = work[pivot_of_col[col]][d];
    for (std::size_t j = col + 1; j < d; ++j)
      value -= work[pivot_of_col[col]][j] * solution[j];
    solution[col] = value;
  }

  // The solution must reproduce every equation, not just the pivot rows.
  for (std::size_t i = 0; i < m; ++i) {
    Rational acc = 0;
    for (std::size_t j = 0; j < d; ++j) {
      if (matrix[i][j] == 0) continue;
      acc += matrix[i][j] * solution[j];
    }
    if (acc != rhs[i]) {
      out.status = LinearSolve::Status::Inconsistent;
      out.inconsistent_row = static_cast<int>(i);
      return out;
    }
  }

  out.status = LinearSolve::Status::Solved;
  out.solution = std::move(solution);
  return out;
}

}  // namespace octoform

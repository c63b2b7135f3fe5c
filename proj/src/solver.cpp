#include "octoform/solver.hpp"

#include "octoform/linalg.hpp"

#include <algorithm>
#include <numeric>

namespace octoform {

bool QuadraticForm::valid() const {
  if (i < 0 || j < 0 || k < 0 || l < 0 || m < 0) return false;
  return i + j + k + l + m == 8;
}

std::array<int, 8> QuadraticForm::coefficients() const {
  std::array<int, 8> out{};
  int pos = 0;
  auto fill = [&](int count, int value) {
    for (int r = 0; r < count; ++r) out[static_cast<std::size_t>(pos++)] = value;
  };
  fill(i, 1);
  fill(j, 2);
  fill(k, 3);
  fill(l, 4);
  fill(m, 6);
  return out;
}

std::string QuadraticForm::key() const {
  return std::to_string(i) + std::to_string(j) + std::to_string(k) + std::to_string(l) +
         std::to_string(m);
}

std::string QuadraticForm::display() const {
  std::string out;
  auto part = [&](int count, int base) {
    if (count == 0) return;
    if (!out.empty()) out += ' ';
    out += std::to_string(base) + "^" + std::to_string(count);
  };
  part(i, 1);
  part(j, 2);
  part(k, 3);
  part(l, 4);
  part(m, 6);
  return out;
}

SpaceId classify_space(const QuadraticForm& form) {
  if (!form.valid())
    throw NotInScopeError("exponents must be nonnegative and sum to 8");
  if (form.k == 0 && form.m == 0) {
    // coefficients within {1,2,4}
    if (form.l == 0)
      throw NotInScopeError("form " + form.key() + " uses coefficients 1,2 only: not in scope");
    if (form.j % 2 == 1) return SpaceId::M4_16_chi8;
    throw NotInScopeError("form " + form.key() +
                          " over coefficients 1,2,4 with even 2-power: not in scope");
  }
  if (form.i == 0 && form.j == 0 && form.k == 0)
    throw NotInScopeError("form " + form.key() +
                          " is twice a form over coefficients 2,3: not in scope");
  bool odd_two = (form.j + form.m) % 2 == 1;
  bool odd_three = (form.k + form.m) % 2 == 1;
  if (!odd_two && !odd_three) return SpaceId::M4_48_triv;
  if (odd_two && !odd_three) return SpaceId::M4_48_chi8;
  if (!odd_two && odd_three) return SpaceId::M4_48_chi12;
  return SpaceId::M4_48_chi24;
}

QSeries theta_product(const QuadraticForm& form, int prec) {
  if (!form.valid()) throw NotInScopeError("invalid form exponents");
  QSeries theta = theta_series(prec);
  QSeries result = QSeries::one(prec);
  const std::array<std::pair<int, int>, 5> parts = {
      {{1, form.i}, {2, form.j}, {3, form.k}, {4, form.l}, {6, form.m}}};
  for (const auto& [value, count] : parts) {
    if (count == 0) continue;
    QSeries factor = value == 1 ? theta : dilate(theta, value);
    result = mul(result, pow(factor, count));
  }
  return result;
}

namespace {

int gamma0_index(int level) {
  // [SL2(Z) : Gamma_0(N)] = N * prod_{p | N} (1 + 1/p)
  int index = level;
  int remaining = level;
  for (int p = 2; p * p <= remaining; ++p) {
    if (remaining % p != 0) continue;
    index = index / p * (p + 1);
    while (remaining % p == 0) remaining /= p;
  }
  if (remaining > 1) index = index / remaining * (remaining + 1);
  return index;
}

int space_level(SpaceId space) {
  return space == SpaceId::M4_16_chi8 ? 16 : 48;
}

}  // namespace

int sturm_bound(SpaceId space) {
  return 4 * gamma0_index(space_level(space)) / 12;
}

int coefficients_needed(SpaceId space) {
  switch (space) {
    case SpaceId::M4_16_chi8: return sturm_bound(space) + 1;
    case SpaceId::M4_48_triv: return 33;
    case SpaceId::M4_48_chi8: return 28;
    case SpaceId::M4_48_chi12: return 31;
    case SpaceId::M4_48_chi24: return 28;
  }
  throw std::logic_error("unknown space");
}

std::vector<Rational> solve_combination(const QSeries& target, const Basis& basis) {
  int prec = std::min(target.precision(), basis.precision);
  if (prec < sturm_bound(basis.space) + 2)
    throw SolveError("target precision " + std::to_string(prec) +
                     " is below sturm bound + 2 for " + space_name(basis.space),
                     -1);
  const RankReport& rank = rank_report(basis.space, basis.precision);
  if (!rank.full_rank()) {
    std::string detail;
    for (const auto& dep : rank.dependencies) {
      if (!detail.empty()) detail += "; ";
      detail += dep.describe();
    }
    throw SolveError(std::string("basis for ") + space_name(basis.space) +
                     " is rank deficient (rank " + std::to_string(rank.rank) + " of " +
                     std::to_string(rank.declared_dimension) + "): " + detail,
                     -1);
  }

  const int dim = dimension(basis.space);
  RationalMatrix matrix(static_cast<std::size_t>(prec),
                        std::vector<Rational>(static_cast<std::size_t>(dim)));
  std::vector<Rational> rhs(static_cast<std::size_t>(prec));
  for (int n = 0; n < prec; ++n) {
    for (int a = 0; a < dim; ++a)
      matrix[static_cast<std::size_t>(n)][static_cast<std::size_t>(a)] =
          basis.elements[static_cast<std::size_t>(a)].series.coefficient(n);
    rhs[static_cast<std::size_t>(n)] = target.coefficient(n);
  }

  LinearSolve solve = solve_exact(matrix, rhs);
  switch (solve.status) {
    case LinearSolve::Status::Solved:
      return std::move(solve.solution);
    case LinearSolve::Status::RankDeficient:
      throw SolveError(std::string("basis for ") + space_name(basis.space) +
                       " lost rank during elimination at column " +
                       std::to_string(solve.deficient_column),
                       -1);
    case LinearSolve::Status::Inconsistent:
      throw SolveError("no combination matches the target: first mismatch at coefficient " +
                       std::to_string(solve.inconsistent_row),
                       solve.inconsistent_row);
  }
  throw std::logic_error("unreachable solve status");
}

Formula derive_formula(const QuadraticForm& form, int prec) {
  SpaceId space = classify_space(form);
  int working = std::max(prec, 34);
  const Basis& basis = basis_for_space(space, working);
  QSeries target = theta_product(form, working);
  Formula formula;
  formula.form = form;
  formula.space = space;
  formula.coefficients = solve_combination(target, basis);
  return formula;
}

}  // namespace octoform

#pragma once

#include "octoform/bases.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace octoform {

// Diagonal octonary form 1^i 2^j 3^k 4^l 6^m with i+j+k+l+m = 8.
struct QuadraticForm {
  int i = 0, j = 0, k = 0, l = 0, m = 0;

  bool valid() const;
  std::array<int, 8> coefficients() const;  // sorted multiset of the eight a_r
  std::string key() const;                   // "ijklm" digit string, e.g. "50210"
  std::string display() const;               // "1^5 3^2 4^1"

  friend bool operator==(const QuadraticForm&, const QuadraticForm&) = default;
};

// Raised when a form falls outside the solved families.
class NotInScopeError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Routes a form to its space. Forms over coefficients {1,2,4} go to level 16
// when the 2-power is odd; at level 48 the character is fixed by the
// parities of j+m and k+m. Uncovered families are rejected.
SpaceId classify_space(const QuadraticForm& form);

// Theta(z)^i Theta(2z)^j Theta(3z)^k Theta(4z)^l Theta(6z)^m; coefficient of
// q^n counts the representations of n by construction.
QSeries theta_product(const QuadraticForm& form, int prec);

// k * index(Gamma_0(N)) / 12 for the space's level.
int sturm_bound(SpaceId space);

// How many leading coefficients already determine the combination (the
// published per-space counts for the level-48 spaces).
int coefficients_needed(SpaceId space);

// Failure of an exact solve: either the basis was rank deficient or some
// coefficient beyond the pivots broke the candidate combination.
class SolveError : public std::runtime_error {
 public:
  SolveError(std::string message, int mismatch_index)
      : std::runtime_error(std::move(message)), mismatch_index_(mismatch_index) {}
  // index n of the first mismatching coefficient, or -1 for rank refusal
  int mismatch_index() const { return mismatch_index_; }

 private:
  int mismatch_index_;
};

// The unique exact combination of basis elements matching the target on all
// shared coefficients. Requires target precision >= sturm bound + 2 and a
// full-rank basis; the residual is checked on every coefficient.
std::vector<Rational> solve_combination(const QSeries& target, const Basis& basis);

struct Formula {
  QuadraticForm form;
  SpaceId space = SpaceId::M4_48_triv;
  std::vector<Rational> coefficients;  // one per basis element, in label order
};

// classify -> basis -> theta product -> solve, at the given precision
// (default max(34, requested)).
Formula derive_formula(const QuadraticForm& form, int prec = 34);

}  // namespace octoform

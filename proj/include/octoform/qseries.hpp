#pragma once

#include "octoform/characters.hpp"
#include "octoform/rational.hpp"

#include <span>
#include <vector>

namespace octoform {

// Truncated formal power series in q over exact rationals. A series stores
// the coefficients of q^0 .. q^{prec-1} and nothing else; asking for a
// coefficient at or beyond the precision is a hard error, never a silent
// zero. Values are immutable once built and every operation returns a new
// series whose precision is the minimum of the operand precisions.
class QSeries {
 public:
  explicit QSeries(int prec);  // the zero series
  explicit QSeries(std::vector<Rational> coefficients);

  static QSeries one(int prec);
  static QSeries monomial(const Rational& coefficient, int degree, int prec);

  int precision() const { return static_cast<int>(coefficients_.size()); }

  // Coefficient of q^n. Throws std::out_of_range for n >= precision().
  const Rational& coefficient(int n) const;

  std::span<const Rational> coefficients() const { return coefficients_; }

  bool is_zero() const;

  friend bool operator==(const QSeries&, const QSeries&) = default;

 private:
  std::vector<Rational> coefficients_;
};

QSeries add(const QSeries& f, const QSeries& g);
QSeries sub(const QSeries& f, const QSeries& g);

// Cauchy product truncated at the shorter operand.
QSeries mul(const QSeries& f, const QSeries& g);

QSeries scale(const Rational& c, const QSeries& f);
QSeries negate(const QSeries& f);

// 1/f; requires a nonzero constant term.
QSeries inverse(const QSeries& f);

// f^e with e any integer; negative e inverts first, e = 0 gives 1.
QSeries pow(const QSeries& f, int e);

// Multiplication by q^e (the top e coefficients fall off the truncation).
QSeries shift(const QSeries& f, int e);

// q -> q^d substitution: coefficient of q^n becomes coefficient of q^{n/d}
// when d | n and 0 otherwise. Precision is preserved.
QSeries dilate(const QSeries& f, int d);

// Coefficient-wise twist: a(n) -> chi(n) a(n) for n >= 1, constant term
// dropped to 0.
QSeries twist(const QSeries& f, const DirichletCharacter& chi);

// Keeps coefficients at indices n == r (mod m), zeroes the rest.
QSeries restrict_residue(const QSeries& f, int r, int m);

inline QSeries operator+(const QSeries& f, const QSeries& g) { return add(f, g); }
inline QSeries operator-(const QSeries& f, const QSeries& g) { return sub(f, g); }
inline QSeries operator*(const QSeries& f, const QSeries& g) { return mul(f, g); }
inline QSeries operator*(const Rational& c, const QSeries& f) { return scale(c, f); }
inline QSeries operator-(const QSeries& f) { return negate(f); }

}  // namespace octoform

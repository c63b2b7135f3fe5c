#include "octoform/qseries.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace octoform {

namespace {

int check_precision(int prec) {
  if (prec < 1) throw std::domain_error("series precision must be positive");
  return prec;
}

}  // namespace

QSeries::QSeries(int prec) : coefficients_(static_cast<std::size_t>(check_precision(prec))) {}

QSeries::QSeries(std::vector<Rational> coefficients) : coefficients_(std::move(coefficients)) {
  check_precision(precision());
}

QSeries QSeries::one(int prec) {
  QSeries result(prec);
  result.coefficients_[0] = 1;
  return result;
}

QSeries QSeries::monomial(const Rational& coefficient, int degree, int prec) {
  QSeries result(prec);
  if (degree < 0) throw std::domain_error("monomial degree must be nonnegative");
  if (degree < prec) result.coefficients_[static_cast<std::size_t>(degree)] = coefficient;
  return result;
}

const Rational& QSeries::coefficient(int n) const {
  if (n < 0 || n >= precision())
    throw std::out_of_range("coefficient index " + std::to_string(n) +
                            " outside precision " + std::to_string(precision()));
  return coefficients_[static_cast<std::size_t>(n)];
}

bool QSeries::is_zero() const {
  return std::all_of(coefficients_.begin(), coefficients_.end(),
                     [](const Rational& c) { return c == 0; });
}

QSeries add(const QSeries& f, const QSeries& g) {
  int prec = std::min(f.precision(), g.precision());
  std::vector<Rational> out(static_cast<std::size_t>(prec));
  for (int n = 0; n < prec; ++n) out[static_cast<std::size_t>(n)] = f.coefficient(n) + g.coefficient(n);
  return QSeries(std::move(out));
}

QSeries sub(const QSeries& f, const QSeries& g) {
  int prec = std::min(f.precision(), g.precision());
  std::vector<Rational> out(static_cast<std::size_t>(prec));
  for (int n = 0; n < prec; ++n) out[static_cast<std::size_t>(n)] = f.coefficient(n) - g.coefficient(n);
  return QSeries(std::move(out));
}

QSeries mul(const QSeries& f, const QSeries& g) {
  int prec = std::min(f.precision(), g.precision());
  std::vector<Rational> out(static_cast<std::size_t>(prec));
  Rational term;
  for (int a = 0; a < prec; ++a) {
    const Rational& fa = f.coefficient(a);
    if (fa == 0) continue;
    for (int b = 0; a + b < prec; ++b) {
      const Rational& gb = g.coefficient(b);
      if (gb == 0) continue;
      term = fa * gb;
      out[static_cast<std::size_t>(a + b)] += term;
    }
  }
  return QSeries(std::move(out));
}

QSeries scale(const Rational& c, const QSeries& f) {
  std::vector<Rational> out(static_cast<std::size_t>(f.precision()));
  for (int n = 0; n < f.precision(); ++n) out[static_cast<std::size_t>(n)] = c * f.coefficient(n);
  return QSeries(std::move(out));
}

QSeries negate(const QSeries& f) {
  return scale(Rational(-1), f);
}

QSeries inverse(const QSeries& f) {
  if (f.coefficient(0) == 0)
    throw std::domain_error("series inverse requires a nonzero constant term");
  int prec = f.precision();
  std::vector<Rational> out(static_cast<std::size_t>(prec));
  Rational lead = 1 / f.coefficient(0);
  out[0] = lead;
  for (int n = 1; n < prec; ++n) {
    Rational acc = 0;
    for (int k = 1; k <= n; ++k) {
      const Rational& fk = f.coefficient(k);
      if (fk == 0) continue;
      acc += fk * out[static_cast<std::size_t>(n - k)];
    }
    out[static_cast<std::size_t>(n)] = -lead * acc;
  }
  return QSeries(std::move(out));
}

QSeries pow(const QSeries& f, int e) {
  if (e == 0) return QSeries::one(f.precision());
  QSeries base = e < 0 ? inverse(f) : f;
  unsigned exponent = static_cast<unsigned>(e < 0 ? -static_cast<long>(e) : e);
  QSeries result = QSeries::one(f.precision());
  while (exponent > 0) {
    if (exponent & 1u) result = mul(result, base);
    exponent >>= 1u;
    if (exponent > 0) base = mul(base, base);
  }
  return result;
}

QSeries shift(const QSeries& f, int e) {
  if (e < 0) throw std::domain_error("shift exponent must be nonnegative");
  int prec = f.precision();
  std::vector<Rational> out(static_cast<std::size_t>(prec));
  for (int n = e; n < prec; ++n) out[static_cast<std::size_t>(n)] = f.coefficient(n - e);
  return QSeries(std::move(out));
}

QSeries dilate(const QSeries& f, int d) {
  if (d < 1) throw std::domain_error("dilation factor must be positive");
  int prec = f.precision();
  std::vector<Rational> out(static_cast<std::size_t>(prec));
  for (int n = 0; n * d < prec; ++n) out[static_cast<std::size_t>(n * d)] = f.coefficient(n);
  return QSeries(std::move(out));
}

QSeries twist(const QSeries& f, const DirichletCharacter& chi) {
  int prec = f.precision();
  std::vector<Rational> out(static_cast<std::size_t>(prec));
  for (int n = 1; n < prec; ++n) {
    int value = chi(n);
    if (value == 0) continue;
    out[static_cast<std::size_t>(n)] = value > 0 ? f.coefficient(n) : -f.coefficient(n);
  }
  return QSeries(std::move(out));
}

QSeries restrict_residue(const QSeries& f, int r, int m) {
  if (m < 1 || r < 0 || r >= m) throw std::domain_error("bad residue class");
  int prec = f.precision();
  std::vector<Rational> out(static_cast<std::size_t>(prec));
  for (int n = r; n < prec; n += m) out[static_cast<std::size_t>(n)] = f.coefficient(n);
  return QSeries(std::move(out));
}

}  // namespace octoform

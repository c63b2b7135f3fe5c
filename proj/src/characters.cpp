#include "octoform/characters.hpp"

#include <cstdlib>
#include <stdexcept>
#include <vector>

namespace octoform {

int kronecker(long m, long n) {
  if (m == 0) throw std::domain_error("kronecker symbol requires a nonzero discriminant");
  mpz_class top(m);
  mpz_class bottom(n);
  return mpz_kronecker(top.get_mpz_t(), bottom.get_mpz_t());
}

DirichletCharacter::DirichletCharacter(long discriminant)
    : discriminant_(discriminant), modulus_(std::labs(discriminant)) {
  if (discriminant == 0) throw std::domain_error("character discriminant must be nonzero");
  if (modulus_ == 0) modulus_ = 1;
}

int DirichletCharacter::operator()(long n) const {
  return kronecker(discriminant_, n);
}

namespace characters {
DirichletCharacter trivial() { return DirichletCharacter(1); }
DirichletCharacter chi4() { return DirichletCharacter(4); }
DirichletCharacter chi8() { return DirichletCharacter(8); }
DirichletCharacter chi12() { return DirichletCharacter(12); }
DirichletCharacter chi24() { return DirichletCharacter(24); }
DirichletCharacter chi_minus3() { return DirichletCharacter(-3); }
DirichletCharacter chi_minus4() { return DirichletCharacter(-4); }
DirichletCharacter chi_minus8() { return DirichletCharacter(-8); }
}  // namespace characters

Rational bernoulli_number(int k) {
  if (k < 0) throw std::domain_error("Bernoulli index must be nonnegative");
  // sum_{j=0}^{m} C(m+1, j) B_j = 0 for m >= 1, solved for B_m.
  std::vector<Rational> b(static_cast<std::size_t>(k) + 1);
  b[0] = 1;
  for (int m = 1; m <= k; ++m) {
    Rational acc = 0;
    for (int j = 0; j < m; ++j) {
      mpz_class binom;
      mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned>(m) + 1, static_cast<unsigned>(j));
      acc += Rational(binom) * b[static_cast<std::size_t>(j)];
    }
    b[static_cast<std::size_t>(m)] = -acc / Rational(m + 1);
  }
  return b[static_cast<std::size_t>(k)];
}

Rational bernoulli_polynomial(int k, const Rational& x) {
  // B_k(x) = sum_j C(k,j) B_j x^{k-j}
  Rational total = 0;
  Rational power = 1;  // x^{k-j}, built from the j = k term downwards
  for (int j = k; j >= 0; --j) {
    mpz_class binom;
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned>(k), static_cast<unsigned>(j));
    total += Rational(binom) * bernoulli_number(j) * power;
    power *= x;
  }
  return total;
}

Rational generalized_bernoulli(int k, const DirichletCharacter& psi) {
  if (k < 1) throw std::domain_error("generalized Bernoulli index must be positive");
  long f = psi.modulus();
  Rational sum = 0;
  for (long a = 1; a <= f; ++a) {
    int value = psi(a);
    if (value == 0) continue;
    sum += Rational(value) * bernoulli_polynomial(k, Rational(a, f));
  }
  mpz_class fk;
  mpz_ui_pow_ui(fk.get_mpz_t(), static_cast<unsigned long>(f), static_cast<unsigned>(k - 1));
  return Rational(fk) * sum;
}

}  // namespace octoform

#pragma once

#include "octoform/rational.hpp"

namespace octoform {

// Kronecker symbol (m/n), defined for every integer n and nonzero m,
// with the usual extensions (m/0), (m/-1) and (m/2).
// Throws std::domain_error when m == 0.
int kronecker(long m, long n);

// Real Dirichlet character chi_m = (m/.) attached to a Kronecker
// discriminant m. Completely multiplicative, periodic with period
// modulus(), and zero exactly on arguments sharing a factor with the
// modulus. m = 1 is the trivial character of conductor 1 (identically 1).
class DirichletCharacter {
 public:
  explicit DirichletCharacter(long discriminant);

  long discriminant() const { return discriminant_; }
  long modulus() const { return modulus_; }

  // chi_m(n), a value in {-1, 0, +1}.
  int operator()(long n) const;

  bool is_even() const { return kronecker(discriminant_, -1) == 1; }
  bool is_trivial() const { return discriminant_ == 1; }

  friend bool operator==(const DirichletCharacter&, const DirichletCharacter&) = default;

 private:
  long discriminant_;
  long modulus_;
};

// The eight characters the bases are built from.
namespace characters {
DirichletCharacter trivial();  // conductor-1 character, written 1
DirichletCharacter chi4();
DirichletCharacter chi8();
DirichletCharacter chi12();
DirichletCharacter chi24();
DirichletCharacter chi_minus3();
DirichletCharacter chi_minus4();
DirichletCharacter chi_minus8();
}  // namespace characters

// Ordinary Bernoulli number B_k in the B_1 = -1/2 convention.
Rational bernoulli_number(int k);

// Bernoulli polynomial B_k(x) evaluated exactly.
Rational bernoulli_polynomial(int k, const Rational& x);

// Generalized Bernoulli number B_{k,psi}, computed as
// f^{k-1} * sum_{a=1..f} psi(a) B_k(a/f) with f the modulus of psi.
// For the trivial character this is the ordinary B_k.
Rational generalized_bernoulli(int k, const DirichletCharacter& psi);

}  // namespace octoform

#pragma once

#include "octoform/qseries.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace octoform {

// Theta(z) = 1 + 2 q + 2 q^4 + 2 q^9 + ...
QSeries theta_series(int prec);

struct EtaFactor {
  int dilation;   // d in eta(d z)
  int exponent;   // r in eta(d z)^r, nonzero
};

// Finite product of eta(d_i z)^{r_i} with distinct dilations, written in the
// compact d1^r1 d2^r2 ... notation.
class EtaQuotient {
 public:
  explicit EtaQuotient(std::vector<EtaFactor> factors);

  const std::vector<EtaFactor>& factors() const { return factors_; }

  Rational weight() const;  // (sum r_i) / 2

  // (sum d_i r_i) / 24. Throws std::domain_error when fractional or
  // negative, naming the quotient.
  int vanishing_order() const;

  std::string notation() const;  // e.g. "1^-2 2^11 4^-3 8^2"

  friend bool operator==(const EtaQuotient&, const EtaQuotient&) = default;

 private:
  std::vector<EtaFactor> factors_;
};

// The unit factor prod_{n>=1} (1 - q^{dn}) expanded two independent ways:
// term-by-term truncated product, and the sparse pentagonal-number sum.
QSeries euler_product_series(int dilation, int prec);
QSeries pentagonal_series(int dilation, int prec);

// q^e * prod_i U(d_i)^{r_i} with e the vanishing order. The default path
// expands each unit factor by the pentagonal-number sum; the _by_product
// variant multiplies the truncated Euler products directly. Both must agree
// coefficient-for-coefficient; keeping both alive is the standing
// cross-check on the least table-checkable ingredient.
QSeries eta_quotient_series(const EtaQuotient& quotient, int prec);
QSeries eta_quotient_series_by_product(const EtaQuotient& quotient, int prec);

// The weight-4 level-12 cusp element built as a difference of two quotients.
QSeries difference_form_f412(int prec);

// sigma_{power; chi, psi}(n) = sum_{d | n} psi(d) chi(n/d) d^power.
Integer twisted_sigma(int power, const DirichletCharacter& chi,
                      const DirichletCharacter& psi, long n);

// E_{k,chi,psi} data: chi modulates the quotient n/d, psi the divisor d.
struct EisensteinSpec {
  int weight;
  DirichletCharacter chi;
  DirichletCharacter psi;

  // chi(-1) psi(-1) == (-1)^k; the space is zero otherwise.
  bool parity_admissible() const;
};

// Constant term: 0 when chi has modulus > 1, else -B_{k,psi} / 2k.
Rational eisenstein_constant_term(const EisensteinSpec& spec);

// c0 + sum_{n>=1} sigma_{k-1;chi,psi}(n) q^n. Throws std::domain_error on a
// parity-inadmissible spec.
QSeries eisenstein_series(const EisensteinSpec& spec, int prec);

// E_4 = 1 - (2k/B_k) sum sigma_3(n) q^n, the multiplier computed exactly.
QSeries classical_e4(int prec);

// Named expansion recipes: every eta quotient, Eisenstein series, twist and
// residue restriction the bases are assembled from, addressable by the
// conventional labels ("f_{4,8}", "E_{4,1,chi8}", ...).
struct NamedForm {
  enum class Kind { Theta, ClassicalE4, Eisenstein, Eta, EtaDifference, Twist, Restrict };

  std::string name;
  Kind kind = Kind::Eta;
  std::vector<EtaQuotient> quotients;            // Eta: one; EtaDifference: minuend, subtrahend
  std::optional<EisensteinSpec> eisenstein;      // Eisenstein
  std::string base;                              // Twist / Restrict operand
  std::optional<DirichletCharacter> twist_character;
  int residue = 0;
  int residue_modulus = 0;
  bool cusp_type = true;                         // vanishing constant term

  QSeries expand(int prec) const;
};

std::string character_token(const DirichletCharacter& chi);  // "1", "chi8", "chi-4", ...

class FormRegistry {
 public:
  FormRegistry();

  const std::vector<NamedForm>& forms() const { return forms_; }
  const NamedForm* find(std::string_view name) const;
  std::vector<std::string> suggest(std::string_view name, std::size_t limit = 5) const;

 private:
  std::vector<NamedForm> forms_;
  std::map<std::string, std::size_t> index_;
};

// Built once, validated on construction (registered quotients must have
// weight 4 and an integral positive vanishing order); read-only afterwards.
const FormRegistry& form_registry();

}  // namespace octoform

#include "octoform/characters.hpp"
#include "octoform/qseries.hpp"

#include <doctest.h>

#include <stdexcept>
#include <vector>

using namespace octoform;

namespace {

std::vector<DirichletCharacter> paper_characters() {
  return {characters::trivial(),     characters::chi4(),       characters::chi8(),
          characters::chi12(),       characters::chi24(),      characters::chi_minus3(),
          characters::chi_minus4(),  characters::chi_minus8()};
}

// Independent route to B_{k,psi}: k! times the t^k coefficient of
// sum_a psi(a) t e^{at} / (e^{ft} - 1), expanded as an exact power series.
Rational bernoulli_via_generating_series(int k, const DirichletCharacter& psi) {
  const int prec = k + 2;
  long f = psi.modulus();

  auto exponential = [&](long scale) {
    std::vector<Rational> c(static_cast<std::size_t>(prec));
    Rational factorial = 1;
    Rational power = 1;
    for (int n = 0; n < prec; ++n) {
      if (n > 0) {
        factorial *= n;
        power *= scale;
      }
      c[static_cast<std::size_t>(n)] = power / factorial;
    }
    return QSeries(std::move(c));
  };

  // (e^{ft} - 1) / t is a unit series
  QSeries eft = exponential(f);
  std::vector<Rational> unit(static_cast<std::size_t>(prec));
  for (int n = 0; n + 1 < prec; ++n) unit[static_cast<std::size_t>(n)] = eft.coefficient(n + 1);
  unit[static_cast<std::size_t>(prec - 1)] = 0;  // unused tail
  QSeries denominator(std::move(unit));

  QSeries total(prec);
  for (long a = 1; a <= f; ++a) {
    int value = psi(a);
    if (value == 0) continue;
    total = add(total, scale(Rational(value), exponential(a)));
  }
  QSeries series = mul(total, inverse(denominator));  // sum_a psi(a) e^{at} * t/(e^{ft}-1)

  Rational factorial = 1;
  for (int n = 2; n <= k; ++n) factorial *= n;
  return factorial * series.coefficient(k);
}

}  // namespace

TEST_CASE("kronecker symbol basic values") {
  CHECK(kronecker(8, 1) == 1);
  CHECK(kronecker(8, 2) == 0);
  CHECK(kronecker(8, 3) == -1);
  // (8/3) = (2/3)^3 and 2 is a quadratic non-residue mod 3
  bool two_is_square_mod_3 = false;
  for (int x = 0; x < 3; ++x)
    if ((x * x) % 3 == 2) two_is_square_mod_3 = true;
  CHECK_FALSE(two_is_square_mod_3);

  CHECK_THROWS_AS(kronecker(0, 5), std::domain_error);

  // extension rules: (m/0), (m/-1), (m/2)
  CHECK(kronecker(1, 0) == 1);
  CHECK(kronecker(-1, 0) == 1);
  CHECK(kronecker(8, 0) == 0);
  CHECK(kronecker(5, -1) == 1);
  CHECK(kronecker(-5, -1) == -1);
  CHECK(kronecker(7, 2) == 1);   // 7 = -1 mod 8
  CHECK(kronecker(3, 2) == -1);  // 3 mod 8
  CHECK(kronecker(6, 2) == 0);
}

TEST_CASE("character values") {
  CHECK(characters::chi_minus4()(3) == -1);
  CHECK(characters::chi4()(5) == 1);
  CHECK(characters::chi4()(6) == 0);
  CHECK(characters::trivial()(6) == 1);
  for (long n = 1; n <= 50; ++n) CHECK(characters::trivial()(n) == 1);
}

TEST_CASE("complete multiplicativity") {
  for (const auto& chi : paper_characters())
    for (long a = 1; a <= 200; ++a)
      for (long b = a; a * b <= 200; ++b)
        CHECK(chi(a * b) == chi(a) * chi(b));
}

TEST_CASE("periodicity with the modulus") {
  for (const auto& chi : paper_characters())
    for (long n = 1; n <= 500; ++n)
      CHECK(chi(n + chi.modulus()) == chi(n));
}

TEST_CASE("parity split") {
  CHECK(characters::chi_minus4()(-1) == -1);
  CHECK(characters::chi_minus3()(-1) == -1);
  CHECK(characters::chi_minus8()(-1) == -1);
  CHECK(characters::chi8()(-1) == 1);
  CHECK(characters::chi12()(-1) == 1);
  CHECK(characters::chi24()(-1) == 1);
  CHECK(characters::chi4()(-1) == 1);
  CHECK(characters::trivial()(-1) == 1);
  CHECK(characters::chi_minus4().is_even() == false);
  CHECK(characters::chi8().is_even() == true);
}

TEST_CASE("ordinary Bernoulli numbers") {
  CHECK(bernoulli_number(0) == Rational(1));
  CHECK(bernoulli_number(1) == Rational(-1, 2));
  CHECK(bernoulli_number(2) == Rational(1, 6));
  CHECK(bernoulli_number(3) == 0);
  CHECK(bernoulli_number(4) == Rational(-1, 30));
  CHECK(generalized_bernoulli(4, characters::trivial()) == Rational(-1, 30));
}

TEST_CASE("generalized Bernoulli numbers") {
  CHECK(generalized_bernoulli(4, characters::chi8()) == Rational(-44));

  // second, series-based route agrees for every character in play
  for (const auto& chi : paper_characters())
    CHECK(generalized_bernoulli(4, chi) == bernoulli_via_generating_series(4, chi));

  // parity: B_{4,psi} = 0 for the odd characters
  for (const auto& chi : {characters::chi_minus3(), characters::chi_minus4(),
                          characters::chi_minus8()})
    CHECK(generalized_bernoulli(4, chi) == 0);
}

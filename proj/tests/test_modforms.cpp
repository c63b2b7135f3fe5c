#include "octoform/modforms.hpp"

#include <doctest.h>

#include <numeric>
#include <random>
#include <stdexcept>

using namespace octoform;

TEST_CASE("theta series") {
  QSeries theta = theta_series(30);
  CHECK(theta.coefficient(0) == 1);
  CHECK(theta.coefficient(1) == 2);
  CHECK(theta.coefficient(3) == 0);
  CHECK(theta.coefficient(4) == 2);
  CHECK(theta.coefficient(9) == 2);
  CHECK(theta.coefficient(10) == 0);

  // theta^2 counts lattice points on x^2 + y^2 = n
  QSeries squared = mul(theta, theta);
  int solutions = 0;
  for (int x = -2; x <= 2; ++x)
    for (int y = -2; y <= 2; ++y)
      if (x * x + y * y == 1) ++solutions;
  CHECK(squared.coefficient(1) == solutions);
  CHECK(solutions == 4);
}

TEST_CASE("theta^8 counts are nonnegative integers") {
  QSeries eighth = pow(theta_series(40), 8);
  CHECK(eighth.coefficient(0) == 1);
  for (int n = 0; n < 40; ++n) {
    CHECK(is_integer(eighth.coefficient(n)));
    CHECK(eighth.coefficient(n) >= 0);
  }
}

TEST_CASE("eta quotient bookkeeping") {
  EtaQuotient f48({{2, 4}, {4, 4}});
  CHECK(f48.weight() == Rational(4));
  CHECK(f48.vanishing_order() == 1);
  CHECK(f48.notation() == "2^4 4^4");

  EtaQuotient fractional({{1, 1}, {2, 7}});
  CHECK_THROWS_AS((void)fractional.vanishing_order(), std::domain_error);

  CHECK_THROWS_AS(EtaQuotient({{2, 1}, {2, 3}}), std::domain_error);
  CHECK_THROWS_AS(EtaQuotient({}), std::domain_error);
}

TEST_CASE("eta expansions, small checks") {
  QSeries f48 = eta_quotient_series(EtaQuotient({{2, 4}, {4, 4}}), 10);
  CHECK(f48.coefficient(0) == 0);
  CHECK(f48.coefficient(1) == 1);

  QSeries f46 = eta_quotient_series(EtaQuotient({{1, 2}, {2, 2}, {3, 2}, {6, 2}}), 10);
  CHECK(f46.coefficient(0) == 0);
  CHECK(f46.coefficient(1) == 1);
}

TEST_CASE("dual expansion routes agree on every registered quotient") {
  const int prec = 64;
  for (const auto& form : form_registry().forms()) {
    for (const auto& quotient : form.quotients) {
      INFO(quotient.notation());
      CHECK(eta_quotient_series(quotient, prec) ==
            eta_quotient_series_by_product(quotient, prec));
    }
  }
}

TEST_CASE("registered quotients have weight 4 and positive order") {
  int seen = 0;
  for (const auto& form : form_registry().forms()) {
    for (const auto& quotient : form.quotients) {
      ++seen;
      long exponent_sum = 0;
      long weighted_sum = 0;
      for (const auto& factor : quotient.factors()) {
        exponent_sum += factor.exponent;
        weighted_sum += static_cast<long>(factor.dilation) * factor.exponent;
      }
      CHECK(exponent_sum == 8);
      CHECK(weighted_sum % 24 == 0);
      CHECK(weighted_sum >= 24);
    }
  }
  CHECK(seen >= 28);
}

TEST_CASE("difference form") {
  QSeries f412 = difference_form_f412(34);
  CHECK(f412.coefficient(0) == 0);
  // minuend has order 1 with unit lead, subtrahend order 2
  CHECK(f412.coefficient(1) == 1);
}

TEST_CASE("twisted divisor sums") {
  DirichletCharacter one = characters::trivial();
  DirichletCharacter chi8 = characters::chi8();
  CHECK(twisted_sigma(3, one, chi8, 1) == 1);
  CHECK(twisted_sigma(3, one, chi8, 3) == -26);
  CHECK(twisted_sigma(3, chi8, one, 2) == 8);

  // multiplicative on coprime arguments
  std::mt19937 rng(37);
  std::uniform_int_distribution<long> pick(1, 200);
  DirichletCharacter chi12 = characters::chi12();
  int checked = 0;
  while (checked < 60) {
    long a = pick(rng), b = pick(rng);
    if (std::gcd(a, b) != 1) continue;
    ++checked;
    CHECK(twisted_sigma(3, one, chi8, a * b) ==
          twisted_sigma(3, one, chi8, a) * twisted_sigma(3, one, chi8, b));
    CHECK(twisted_sigma(3, chi12, chi8, a * b) ==
          twisted_sigma(3, chi12, chi8, a) * twisted_sigma(3, chi12, chi8, b));
  }
}

TEST_CASE("Eisenstein series") {
  DirichletCharacter one = characters::trivial();
  DirichletCharacter chi8 = characters::chi8();

  QSeries e_1_chi8 = eisenstein_series({4, one, chi8}, 20);
  CHECK(e_1_chi8.coefficient(0) == Rational(11, 2));
  QSeries e_chi8_1 = eisenstein_series({4, chi8, one}, 20);
  CHECK(e_chi8_1.coefficient(0) == 0);

  for (long n = 1; n < 20; ++n)
    CHECK(e_1_chi8.coefficient(static_cast<int>(n)) == Rational(twisted_sigma(3, one, chi8, n)));

  // parity violation is rejected
  CHECK_THROWS_AS((void)eisenstein_series({4, one, characters::chi_minus4()}, 10),
                  std::domain_error);
}

TEST_CASE("E_{4,chi-4,chi-4} collapses to a twisted sigma_3") {
  DirichletCharacter chi_m4 = characters::chi_minus4();
  DirichletCharacter one = characters::trivial();
  QSeries series = eisenstein_series({4, chi_m4, chi_m4}, 21);
  CHECK(series.coefficient(0) == 0);
  for (long n = 1; n <= 20; ++n) {
    Integer plain_sigma3 = twisted_sigma(3, one, one, n);
    CHECK(series.coefficient(static_cast<int>(n)) == Rational(chi_m4(n) * plain_sigma3));
  }
}

TEST_CASE("classical E4") {
  QSeries e4 = classical_e4(10);
  CHECK(e4.coefficient(0) == 1);
  CHECK(e4.coefficient(1) == 240);
  CHECK(e4.coefficient(2) == 2160);  // 240 * (1 + 8)
  CHECK(dilate(e4, 3).coefficient(3) == 240);
}

TEST_CASE("eisenstein coefficients equal independent divisor sums") {
  DirichletCharacter one = characters::trivial();
  DirichletCharacter chi12 = characters::chi12();
  QSeries series = eisenstein_series({4, one, chi12}, 101);
  for (long n = 1; n <= 100; ++n) {
    Integer direct = 0;
    for (long d = 1; d <= n; ++d) {
      if (n % d != 0) continue;
      Integer cube = Integer(d) * d * d;
      direct += chi12(d) * one(n / d) * cube;
    }
    CHECK(series.coefficient(static_cast<int>(n)) == Rational(direct));
  }
}

TEST_CASE("registry lookup") {
  CHECK(form_registry().find("f_{4,8}") != nullptr);
  CHECK(form_registry().find("f_4,8") != nullptr);
  CHECK(form_registry().find("E_{4,1,chi8}") != nullptr);
  CHECK(form_registry().find("E_4,1,chi8") != nullptr);
  CHECK(form_registry().find("no such form") == nullptr);
  auto suggestions = form_registry().suggest("f_{4,8");
  CHECK(!suggestions.empty());

  QSeries f46 = form_registry().find("f_{4,6}")->expand(4);
  CHECK(f46.coefficient(0) == 0);
  CHECK(f46.coefficient(1) == 1);
}

#include "octoform/qseries.hpp"

#include <doctest.h>

#include <numeric>
#include <random>
#include <stdexcept>

using namespace octoform;

namespace {

QSeries random_series(std::mt19937& rng, int prec) {
  std::uniform_int_distribution<int> numerator(-9, 9);
  std::uniform_int_distribution<int> denominator(1, 6);
  std::vector<Rational> c(static_cast<std::size_t>(prec));
  for (auto& value : c) {
    value = Rational(numerator(rng), denominator(rng));
    value.canonicalize();
  }
  return QSeries(std::move(c));
}

QSeries random_unit_series(std::mt19937& rng, int prec) {
  QSeries f = random_series(rng, prec);
  std::vector<Rational> c(f.coefficients().begin(), f.coefficients().end());
  c[0] = 1;
  return QSeries(std::move(c));
}

QSeries from_ints(std::vector<int> values) {
  std::vector<Rational> c(values.size());
  for (std::size_t n = 0; n < values.size(); ++n) c[n] = values[n];
  return QSeries(std::move(c));
}

}  // namespace

TEST_CASE("basic arithmetic") {
  QSeries one_plus_q = from_ints({1, 1, 0, 0});
  QSeries square = mul(one_plus_q, one_plus_q);
  CHECK(square.coefficient(0) == 1);
  CHECK(square.coefficient(1) == 2);
  CHECK(square.coefficient(2) == 1);
  CHECK(square.coefficient(3) == 0);

  QSeries f = from_ints({3, -2, 5});
  CHECK(add(f, scale(Rational(-1), f)).is_zero());
}

TEST_CASE("precision follows the shorter operand") {
  QSeries f = from_ints({1, 2, 3, 4, 5});
  QSeries g = from_ints({1, 1});
  CHECK(add(f, g).precision() == 2);
  CHECK(mul(f, g).precision() == 2);
  CHECK_THROWS_AS((void)add(f, g).coefficient(2), std::out_of_range);
}

TEST_CASE("coefficient access is bounded") {
  QSeries f = from_ints({1, 2});
  CHECK(f.coefficient(1) == 2);
  CHECK_THROWS_AS((void)f.coefficient(2), std::out_of_range);
  CHECK_THROWS_AS((void)f.coefficient(-1), std::out_of_range);
  CHECK(QSeries(6).coefficient(5) == 0);
}

TEST_CASE("powers") {
  QSeries one_minus_q = from_ints({1, -1, 0, 0, 0, 0});

  QSeries geometric = pow(one_minus_q, -1);
  for (int n = 0; n < 6; ++n) CHECK(geometric.coefficient(n) == 1);

  CHECK(pow(one_minus_q, 0) == QSeries::one(6));
  CHECK(pow(one_minus_q, 4).coefficient(2) == 6);

  QSeries no_unit = from_ints({0, 1, 0});
  CHECK_THROWS_AS((void)pow(no_unit, -2), std::domain_error);
}

TEST_CASE("ring laws on random series") {
  std::mt19937 rng(20240811);
  for (int round = 0; round < 8; ++round) {
    QSeries f = random_series(rng, 64);
    QSeries g = random_series(rng, 64);
    QSeries h = random_series(rng, 64);
    CHECK(add(f, g) == add(g, f));
    CHECK(mul(f, g) == mul(g, f));
    CHECK(add(add(f, g), h) == add(f, add(g, h)));
    CHECK(mul(mul(f, g), h) == mul(f, mul(g, h)));
    CHECK(mul(f, add(g, h)) == add(mul(f, g), mul(f, h)));
  }
}

TEST_CASE("pow and inverse cancel") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> exponent(1, 6);
  for (int round = 0; round < 6; ++round) {
    QSeries f = random_unit_series(rng, 48);
    int e = exponent(rng);
    CHECK(mul(pow(f, e), pow(f, -e)) == QSeries::one(48));
  }
}

TEST_CASE("dilate") {
  QSeries f = from_ints({1, 1});
  QSeries d = dilate(f, 2);
  CHECK(d.precision() == 2);
  CHECK(d.coefficient(0) == 1);
  CHECK(d.coefficient(1) == 0);
  CHECK(dilate(f, 1) == f);

  std::mt19937 rng(11);
  QSeries g = random_series(rng, 60);
  QSeries h = random_series(rng, 60);
  CHECK(dilate(dilate(g, 2), 3) == dilate(g, 6));
  CHECK(dilate(mul(g, h), 4) == mul(dilate(g, 4), dilate(h, 4)));
}

TEST_CASE("twist") {
  DirichletCharacter chi4 = characters::chi4();
  DirichletCharacter chi_m4 = characters::chi_minus4();

  QSeries f = from_ints({0, 1, 1, 1});
  QSeries twisted = twist(f, chi_m4);
  CHECK(twisted.coefficient(0) == 0);
  CHECK(twisted.coefficient(1) == 1);
  CHECK(twisted.coefficient(2) == 0);
  CHECK(twisted.coefficient(3) == -1);

  QSeries g = from_ints({5, 2, 3, 4, 7});
  QSeries trivial_twist = twist(g, characters::trivial());
  CHECK(trivial_twist.coefficient(0) == 0);
  for (int n = 1; n < 5; ++n) CHECK(trivial_twist.coefficient(n) == g.coefficient(n));

  // chi^2 is the principal character: twisting twice projects away the
  // indices sharing a factor with the modulus, plus the constant term
  std::mt19937 rng(13);
  QSeries h = random_series(rng, 40);
  QSeries twice = twist(twist(h, chi4), chi4);
  for (int n = 0; n < 40; ++n) {
    if (n == 0 || std::gcd(static_cast<long>(n), chi4.modulus()) > 1)
      CHECK(twice.coefficient(n) == 0);
    else
      CHECK(twice.coefficient(n) == h.coefficient(n));
  }
}

TEST_CASE("residue restriction") {
  QSeries f = from_ints({1, 1, 1, 1});
  QSeries r = restrict_residue(f, 1, 4);
  CHECK(r.coefficient(0) == 0);
  CHECK(r.coefficient(1) == 1);
  CHECK(r.coefficient(2) == 0);
  CHECK(r.coefficient(3) == 0);

  // residue classes partition the index set
  std::mt19937 rng(17);
  QSeries g = random_series(rng, 50);
  QSeries parts = add(add(restrict_residue(g, 1, 4), restrict_residue(g, 3, 4)),
                      restrict_residue(g, 0, 2));
  CHECK(parts == g);

  CHECK_THROWS_AS((void)restrict_residue(f, 4, 4), std::domain_error);
}

TEST_CASE("integer series stay integral") {
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> value(-20, 20);
  std::vector<Rational> a(40), b(40);
  for (std::size_t n = 0; n < 40; ++n) {
    a[n] = value(rng);
    b[n] = value(rng);
  }
  QSeries f{std::move(a)};
  QSeries g{std::move(b)};
  for (const QSeries& result : {add(f, g), mul(f, g), dilate(f, 3)})
    for (int n = 0; n < result.precision(); ++n)
      CHECK(is_integer(result.coefficient(n)));
}

#include <doctest.h>

#include <random>

#include "qsv/errors.hpp"
#include "qsv/series.hpp"

using namespace qsv;

namespace {

/// Random truncated series with exponents on small denominators and Gaussian-rational coefficients.
QZSeries random_series(std::mt19937& rng, const Exponent& trunc, bool with_z, bool integral_exponents = false) {
  std::uniform_int_distribution<int> den(1, integral_exponents ? 1 : 3), num(0, 3 * 12), coeff(-5, 5), zexp(-2, 2),
      count(1, 8);
  SeriesBuilder b(trunc);
  const int n = count(rng);
  for (int k = 0; k < n; ++k) {
    const Exponent q = integral_exponents ? exponent(num(rng) / 3) : exponent(num(rng), den(rng) * 2);
    GaussianRational c(exponent(coeff(rng), 1 + (k % 3)), exponent(coeff(rng) % 2));
    b.add(c, q, with_z ? Exponent(zexp(rng)) : Exponent(0));
  }
  return std::move(b).build();
}

/// 1 plus higher terms, so it is invertible.
QZSeries random_unit(std::mt19937& rng, const Exponent& trunc) {
  QZSeries s = random_series(rng, trunc, false).truncated(trunc);
  SeriesBuilder b(trunc);
  b.add(1, 0);
  for (const auto& t : s.terms()) {
    if (t.q > 0) b.add(t.coeff, t.q);
  }
  return std::move(b).build();
}

bool same_to(const QZSeries& a, const QZSeries& b, const Exponent& order) { return equal_up_to(a, b, order).equal; }

}  // namespace

TEST_CASE("exponents print as exact fractions") {
  CHECK(exponent_to_string(exponent(6, 4)) == "3/2");
  CHECK(exponent_to_string(exponent(-2, 1)) == "-2");
  CHECK(GaussianRational(Rational(1, 2), Rational(-3, 4)).to_string() == "1/2-3/4i");
  CHECK(GaussianRational::parse("1/2-3/4i") == GaussianRational(Rational(1, 2), Rational(-3, 4)));
}

TEST_CASE("ring axioms hold on random truncated series") {
  std::mt19937 rng(20261019);
  const Exponent t = 8;
  for (int trial = 0; trial < 60; ++trial) {
    const bool z = trial % 2 == 1;
    QZSeries a = random_series(rng, t, z), b = random_series(rng, t, z), c = random_series(rng, t, z);
    CAPTURE(trial);
    CHECK(same_to(a + b, b + a, t));
    CHECK(same_to((a + b) + c, a + (b + c), t));
    CHECK(same_to(a * b, b * a, t));
    CHECK(same_to((a * b) * c, a * (b * c), t));
    CHECK(same_to(a * (b + c), a * b + a * c, t));
    CHECK(same_to(a - a, QZSeries::zero(t), t));
    CHECK(same_to(a * QZSeries::one(), a, t));
  }
}

TEST_CASE("inverse of a unit series") {
  std::mt19937 rng(7);
  const Exponent t = 10;
  for (int trial = 0; trial < 40; ++trial) {
    QZSeries u = random_unit(rng, t);
    QZSeries inv = invert_unit(u);
    CAPTURE(trial);
    CHECK(same_to(u * inv, QZSeries::one(), t));
    CHECK(same_to(invert_unit(inv), u, t));
  }
}

TEST_CASE("binomial division undoes multiplication") {
  std::mt19937 rng(11);
  const Exponent t = 12;
  for (int trial = 0; trial < 30; ++trial) {
    QZSeries a = random_series(rng, t, trial % 2 == 0);
    QZSeries back = a.mul_binomial(GaussianRational(Rational(-2, 3)), exponent(1, 2)).div_binomial(
        GaussianRational(Rational(-2, 3)), exponent(1, 2));
    CHECK(same_to(back, a, t));
  }
}

TEST_CASE("substitution is a ring homomorphism") {
  std::mt19937 rng(3);
  const Exponent t = 8;
  for (int trial = 0; trial < 30; ++trial) {
    // A sign other than 1 needs integral exponents for sign^e to be defined.
    QZSeries a = random_series(rng, t, false, true), b = random_series(rng, t, false, true);
    for (Unit sign : {Unit::one(), Unit::minus_one(), Unit::i()}) {
      for (const Exponent& power : {exponent(1), exponent(2), exponent(3, 2)}) {
        if (sign != Unit::one() && power.get_den() != 1) continue;
        QZSeries lhs = substitute_q(a * b, sign, power);
        QZSeries rhs = substitute_q(a, sign, power) * substitute_q(b, sign, power);
        CHECK(same_to(lhs, rhs, t * power));
        CHECK(same_to(substitute_q(a + b, sign, power), substitute_q(a, sign, power) + substitute_q(b, sign, power),
                      t * power));
      }
    }
  }
}

TEST_CASE("a signed substitution at a fractional exponent is refused") {
  QZSeries a = QZSeries::monomial(1, exponent(1, 2)) + QZSeries::zero(4);
  CHECK_THROWS_AS(substitute_q(a, Unit::minus_one(), 1), IllDefinedRootOfUnityPower);
}

TEST_CASE("substitution by q^2 then q^{1/2} is the identity") {
  std::mt19937 rng(5);
  QZSeries a = random_series(rng, 6, true);
  CHECK(identical(substitute_q(substitute_q(a, Unit::one(), 2), Unit::one(), exponent(1, 2)), a));
}

TEST_CASE("truncation is monotone") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    QZSeries a = random_series(rng, 10, trial % 2 == 0);
    for (int t = 1; t <= 10; ++t) {
      QZSeries at = a.truncated(t);
      REQUIRE(at.trunc());
      CHECK(*at.trunc() == t);
      CHECK(same_to(at, a, t));
      for (const auto& term : at.terms()) CHECK(term.q < t);
    }
  }
}

TEST_CASE("product truncation follows the lowest exponents") {
  QZSeries a = QZSeries::monomial(1, -1) + QZSeries::zero(5);
  QZSeries b = QZSeries::monomial(1, 2) + QZSeries::zero(5);
  QZSeries p = a * b;
  REQUIRE(p.trunc());
  CHECK(*p.trunc() == 4);
  CHECK(p.coefficient(1) == GaussianRational(1));
}

TEST_CASE("equal_up_to reports the first difference") {
  QZSeries a = QZSeries::monomial(1, 0) + QZSeries::monomial(2, 3) + QZSeries::zero(10);
  QZSeries b = QZSeries::monomial(1, 0) + QZSeries::monomial(2, 3) + QZSeries::monomial(1, 5) + QZSeries::zero(10);
  CHECK(equal_up_to(a, b, 5).equal);
  Comparison c = equal_up_to(a, b, 10);
  REQUIRE_FALSE(c.equal);
  REQUIRE(c.first_difference);
  CHECK(c.first_difference->q == 5);
  CHECK(c.first_difference->lhs == GaussianRational(0));
  CHECK(c.first_difference->rhs == GaussianRational(1));
}

TEST_CASE("comparing beyond the known truncation is an error") {
  QZSeries a = QZSeries::zero(3);
  CHECK_THROWS_AS(equal_up_to(a, a, 4), InsufficientTruncation);
}

TEST_CASE("integrality") {
  CHECK((QZSeries::monomial(3, 1) + QZSeries::zero(4)).is_integral());
  CHECK_FALSE(QZSeries::monomial(GaussianRational(Rational(1, 2)), 1).is_integral());
  CHECK_FALSE(QZSeries::monomial(GaussianRational::i(), 1).is_integral());
}

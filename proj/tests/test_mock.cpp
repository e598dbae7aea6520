#include <doctest.h>

#include "oracles.hpp"
#include "qsv/appell.hpp"
#include "qsv/errors.hpp"
#include "qsv/mock_theta.hpp"

using namespace qsv;

namespace {

/// sum_n q^{n^2} / (-q; q)_n^2.
oracle::Dense f3_oracle(int n) {
  oracle::Dense sum(n, 0);
  for (int k = 0; k * k < n; ++k) {
    oracle::Dense term(n, 0);
    term[k * k] = 1;
    for (int i = 1; i <= k; ++i) {
      oracle::div_binomial(term, 1, i);
      oracle::div_binomial(term, 1, i);
    }
    for (int i = 0; i < n; ++i) sum[i] += term[i];
  }
  return sum;
}

/// sum_{n>=1} q^{n^2} / (q; q^2)_n.
oracle::Dense psi3_oracle(int n) {
  oracle::Dense sum(n, 0);
  for (int k = 1; k * k < n; ++k) {
    oracle::Dense term(n, 0);
    term[k * k] = 1;
    for (int i = 0; i < k; ++i) oracle::div_binomial(term, -1, 2 * i + 1);
    for (int i = 0; i < n; ++i) sum[i] += term[i];
  }
  return sum;
}

/// sum_{n>=0} q^{2n(n+1)} / (q; q^2)_{n+1}^2.
oracle::Dense omega3_oracle(int n) {
  oracle::Dense sum(n, 0);
  for (int k = 0; 2 * k * (k + 1) < n; ++k) {
    oracle::Dense term(n, 0);
    term[2 * k * (k + 1)] = 1;
    for (int i = 0; i <= k; ++i) {
      oracle::div_binomial(term, -1, 2 * i + 1);
      oracle::div_binomial(term, -1, 2 * i + 1);
    }
    for (int i = 0; i < n; ++i) sum[i] += term[i];
  }
  return sum;
}

}  // namespace

TEST_CASE("f3 opens 1 + q - 2q^2 + 3q^3") {
  QZSeries f = mock_theta(MockName::f3, MockForm::eulerian, 4);
  CHECK(oracle::dense(f, 4) == oracle::Dense{1, 1, -2, 3});
}

TEST_CASE("Eulerian forms match direct q-hypergeometric sums") {
  const int n = 100;
  CHECK(oracle::dense(mock_theta(MockName::f3, MockForm::eulerian, n), n) == f3_oracle(n));
  CHECK(oracle::dense(mock_theta(MockName::psi3, MockForm::eulerian, n), n) == psi3_oracle(n));
  CHECK(oracle::dense(mock_theta(MockName::omega3, MockForm::eulerian, n), n) == omega3_oracle(n));
}

TEST_CASE("Eulerian and Appell forms agree") {
  const Exponent t = 100;
  for (MockName name : all_mock_names()) {
    if (!has_form(name, MockForm::appell) || !has_form(name, MockForm::eulerian)) continue;
    CAPTURE(to_string(name));
    CHECK(equal_up_to(mock_theta(name, MockForm::eulerian, t), mock_theta(name, MockForm::appell, t), t).equal);
  }
}

TEST_CASE("mock names parse and round-trip") {
  for (MockName name : all_mock_names()) CHECK(parse_mock_name(to_string(name)) == name);
  CHECK_THROWS_AS(parse_mock_name("f7"), UnknownName);
}

TEST_CASE("classical third-order relations pass") {
  for (const auto& r : classical_third_order_suite(120)) {
    CAPTURE(r.identity);
    CAPTURE(r.specialization);
    CHECK(r.status == Status::pass);
  }
}

TEST_CASE("Appell sum and j times m agree") {
  const Exponent t = 60;
  const ThetaArg x(-1, exponent(1, 3)), z(1, exponent(1, 2));
  QZSeries jm = appell_j_product({x, z, 1}, t);
  QZSeries m = appell({x, z, 1}, t);
  CHECK(equal_up_to(jm, jacobi_theta(z, 1, t) * m, t - 1).equal);
}

TEST_CASE("Appell function at a pole is reported") {
  // x z = q makes a denominator vanish.
  const ThetaArg x(1, exponent(1, 2)), z(1, exponent(1, 2));
  CHECK_THROWS_AS(appell({x, z, 1}, 20), Error);
}

TEST_CASE("m-splitting for n = 2 passes") {
  for (const auto& r : msplit_m2(80)) {
    CAPTURE(r.specialization);
    CHECK(r.status == Status::pass);
  }
}

#include <doctest.h>

#include "oracles.hpp"
#include "qsv/errors.hpp"
#include "qsv/hecke.hpp"

using namespace qsv;

namespace {

/// (q)^3 C via box enumeration of the two Hecke sums.
oracle::Dense hecke_difference_oracle(const StringFnId& id, int n) {
  const long p = id.p, pp = id.pprime, m = id.m, l = id.ell;
  auto first = oracle::hecke_box(1, pp, 2 * p * pp, 1, 1 + (m + l) / 2, -1, p * (pp + l + 1), n, n + 40);
  auto second = oracle::hecke_box(1, pp, 2 * p * pp, 1, (m - l) / 2, -1, p * (pp - l - 1), n, n + 40);
  oracle::Dense d(n, 0);
  for (auto [e, c] : first) {
    REQUIRE(e >= 0);
    d[e] += c;
  }
  for (auto [e, c] : second) {
    REQUIRE(e >= 0);
    d[e] -= c;
  }
  return d;
}

oracle::Dense divide_by_q3(oracle::Dense d) {
  for (int k = 1; k < static_cast<int>(d.size()); ++k) {
    for (int rep = 0; rep < 3; ++rep) oracle::div_binomial(d, -1, k);
  }
  return d;
}

const std::vector<StringFnId> kSample = {
    {1, 3, 0, 0}, {1, 4, 1, 1}, {2, 5, 0, 0}, {2, 5, 1, 1}, {2, 5, 0, 2}, {3, 7, 2, 2},
    {3, 8, 1, 1}, {3, 8, 3, 1}, {3, 8, 0, 2}, {5, 11, 1, 3}, {5, 12, 1, 1}, {5, 12, 3, 5},
};

}  // namespace

TEST_CASE("hecke_sum matches box enumeration") {
  const int n = 80;
  struct Case {
    long a, b, c;
    int sx;
    long ex;
    int sy;
    long ey;
  };
  for (const Case& k : {Case{1, 2, 1, 1, 1, 1, 1}, Case{1, 3, 1, -1, 2, 1, 1}, Case{1, 5, 12, 1, 2, -1, 20},
                        Case{2, 3, 2, -1, 1, -1, 2}}) {
    HeckeParams prm{k.a, k.b, k.c, ThetaArg(k.sx, k.ex), ThetaArg(k.sy, k.ey)};
    QZSeries lib = hecke_sum(prm, n);
    auto box = oracle::hecke_box(k.a, k.b, k.c, k.sx, k.ex, k.sy, k.ey, n, n + 40);
    CAPTURE(k.a);
    CAPTURE(k.b);
    CAPTURE(k.c);
    CHECK(lib.size() == box.size());
    for (auto [e, c] : box) CHECK(lib.coefficient(static_cast<long>(e)) == GaussianRational(static_cast<long>(c)));
  }
}

TEST_CASE("string functions match brute-force Hecke box sums") {
  const int n = 60;
  for (const auto& id : kSample) {
    CAPTURE(id.to_string());
    oracle::Dense diff = hecke_difference_oracle(id, n);
    CHECK(oracle::dense(string_hecke_difference(id, n), n) == diff);
    QZSeries c = string_coeff(id, true, n);
    CHECK(c.is_integral());
    CHECK(oracle::dense(c, n) == divide_by_q3(diff));
  }
}

TEST_CASE("level-one string function is 1/(q)_inf") {
  const int n = 120;
  CHECK(oracle::dense(string_coeff({1, 3, 0, 0}, true, n), n) == oracle::partitions(n));
  CHECK(s_lambda({1, 3, 0, 0}) == exponent(-1, 24));
  QZSeries raw = string_coeff({1, 3, 0, 0}, false, 10);
  REQUIRE(raw.valuation());
  CHECK(*raw.valuation() == exponent(-1, 24));
}

TEST_CASE("compact integer-level form agrees with the admissible form") {
  const Exponent t = 60;
  for (auto [m, l] : {std::pair{0L, 0L}, {2L, 0L}, {1L, 1L}}) {
    CHECK(equal_up_to(string_coeff_compact(1, m, l, t), string_coeff({1, 3, m, l}, true, t), t).equal);
  }
  CHECK(equal_up_to(string_coeff_compact(2, 1, 1, t), string_coeff({1, 4, 1, 1}, true, t), t).equal);
}

TEST_CASE("level key and (p, p') key name the same function") {
  StringFnId id = StringFnId::from_level(Rational(1, 2), 1, 1);
  CHECK(id == StringFnId{2, 5, 1, 1});
  CHECK(id.level() == Rational(1, 2));
}

TEST_CASE("invalid string function ids name the violated invariant") {
  auto message = [](const StringFnId& id) {
    try {
      id.validate();
    } catch (const InvalidArgument& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(message({2, 4, 0, 0}).find("coprime") != std::string::npos);
  CHECK(message({2, 3, 0, 0}).find("level") != std::string::npos);
  CHECK(message({2, 5, 1, 0}).find("even") != std::string::npos);
  CHECK(message({2, 5, 0, 4}).find("ell") != std::string::npos);
  CHECK(message({2, 5, 0, 0}).empty());
}

TEST_CASE("character Fourier coefficients are string functions") {
  const Exponent t = 30;
  QZSeries chi = character(1, 3, 0, t);
  CHECK(equal_up_to(chi.z_coefficient(0), string_coeff({1, 3, 0, 0}, false, t), t - 2).equal);
  // C_{2,0} q^{m^2/4N} z^{-m/2} with N = 1, m = 2.
  CHECK(equal_up_to(chi.z_coefficient(-1), string_coeff({1, 3, 2, 0}, false, t - 1).times_monomial(1, 1),
                    t - 2)
            .equal);
}

TEST_CASE("Weyl-Kac numerator equals character times denominator") {
  const Exponent t = 25;
  for (auto [p, pp, l] : {std::tuple{1L, 3L, 0L}, {2L, 5L, 1L}, {3L, 8L, 2L}}) {
    QZSeries lhs = character(p, pp, l, t + 5) * weyl_kac_denominator(t + 5);
    CHECK(equal_up_to(lhs, weyl_kac_numerator(p, pp, l, t), t - 1).equal);
  }
}

TEST_CASE("integer-level symmetries pass") {
  for (long level : {1L, 2L, 3L}) {
    for (const auto& r : integer_level_symmetries(level, 60)) {
      CAPTURE(r.identity);
      CAPTURE(r.specialization);
      CHECK(r.status == Status::pass);
    }
  }
}

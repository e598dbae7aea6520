#include "qsv/mock_theta.hpp"

#include <functional>
#include <map>

#include "qsv/appell.hpp"
#include "qsv/errors.hpp"

namespace qsv {

namespace {

/// The factor (1 - c q^k).
struct Factor {
  int c;
  long k;
};

struct Step {
  std::vector<Factor> num;
  std::vector<Factor> den;
};

/// Eulerian sum of sign(n) q^{e(n)} R_n with R_n = R_{n-1} * step(n), R_{n0-1} = 1.
/// Requires e(n) increasing, and every factor with k >= 1.
QZSeries eulerian_sum(const Exponent& trunc, long n0, const std::function<Exponent(long)>& e,
                      const std::function<int(long)>& sign, const std::function<Step(long)>& step) {
  QZSeries acc = QZSeries::zero(trunc);
  QZSeries r = QZSeries::one().truncated(trunc);
  for (long n = n0;; ++n) {
    Exponent en = e(n);
    if (en >= trunc) break;
    Step st = step(n);
    const Exponent room = trunc - en;
    r = r.truncated(room);
    for (const auto& f : st.num) r = r.mul_binomial(f.c, f.k);
    for (const auto& f : st.den) r = r.div_binomial(f.c, f.k);
    acc = add(acc, r.times_monomial(sign(n), en).truncated(trunc));
  }
  return acc;
}

int alt(long n) { return n % 2 == 0 ? 1 : -1; }
int plus(long) { return 1; }

Exponent sq(long n) { return Exponent(n * n); }

QZSeries eulerian(MockName n, const Exponent& t) {
  switch (n) {
    case MockName::A2:
      return eulerian_sum(t, 0, [](long k) { return Exponent(k + 1); }, plus, [](long k) {
        Step s{{}, {{1, 2 * k + 1}}};
        if (k > 0) s.num.push_back({-1, 2 * k});
        return s;
      });
    case MockName::mu2:
      return eulerian_sum(t, 0, sq, alt, [](long k) {
        if (k == 0) return Step{};
        return Step{{{1, 2 * k - 1}}, {{-1, 2 * k}, {-1, 2 * k}}};
      });
    case MockName::f3:
      return eulerian_sum(t, 0, sq, plus, [](long k) {
        if (k == 0) return Step{};
        return Step{{}, {{-1, k}, {-1, k}}};
      });
    case MockName::omega3:
      return eulerian_sum(t, 0, [](long k) { return Exponent(2 * k * (k + 1)); }, plus,
                          [](long k) { return Step{{}, {{1, 2 * k + 1}, {1, 2 * k + 1}}}; });
    case MockName::psi3:
      return eulerian_sum(t, 1, sq, plus, [](long k) { return Step{{}, {{1, 2 * k - 1}}}; });
    case MockName::chi3:
      return eulerian_sum(t, 0, sq, plus, [](long k) {
        if (k == 0) return Step{};
        return Step{{{-1, k}}, {{-1, 3 * k}}};
      });
    case MockName::phi10:
      return eulerian_sum(t, 0, [](long k) { return Exponent(k * (k + 1) / 2); }, plus,
                          [](long k) { return Step{{}, {{1, 2 * k + 1}}}; });
    case MockName::psi10:
      return eulerian_sum(t, 0, [](long k) { return Exponent((k + 1) * (k + 2) / 2); }, plus,
                          [](long k) { return Step{{}, {{1, 2 * k + 1}}}; });
    case MockName::X10:
      return eulerian_sum(t, 0, sq, alt, [](long k) {
        if (k == 0) return Step{};
        return Step{{}, {{-1, 2 * k - 1}, {-1, 2 * k}}};
      });
    case MockName::chi10:
      return eulerian_sum(t, 0, [](long k) { return sq(k + 1); }, alt, [](long k) {
        if (k == 0) return Step{{}, {{-1, 1}}};
        return Step{{}, {{-1, 2 * k}, {-1, 2 * k + 1}}};
      });
    case MockName::f0:
      return eulerian_sum(t, 0, sq, plus, [](long k) {
        if (k == 0) return Step{};
        return Step{{}, {{-1, k}}};
      });
    case MockName::f1:
      return eulerian_sum(t, 0, [](long k) { return Exponent(k * (k + 1)); }, plus, [](long k) {
        if (k == 0) return Step{};
        return Step{{}, {{-1, k}}};
      });
  }
  throw UnknownName("unknown mock theta function");
}

const std::map<std::string, MockName>& name_table() {
  static const std::map<std::string, MockName> table = {
      {"A2", MockName::A2},       {"mu2", MockName::mu2},     {"f3", MockName::f3},
      {"omega3", MockName::omega3}, {"psi3", MockName::psi3}, {"chi3", MockName::chi3},
      {"phi10", MockName::phi10}, {"psi10", MockName::psi10}, {"X10", MockName::X10},
      {"chi10", MockName::chi10}, {"f0", MockName::f0},       {"f1", MockName::f1},
  };
  return table;
}

using ex::J;

Expr m(const ThetaArg& x, const ThetaArg& z, const ThetaBase& b) { return ex::m(x, z, b); }

ThetaArg qp(const Exponent& e) { return ThetaArg(1, e); }
ThetaArg mq(const Exponent& e) { return ThetaArg(-1, e); }

}  // namespace

MockName parse_mock_name(const std::string& name) {
  auto it = name_table().find(name);
  if (it == name_table().end()) throw UnknownName("unknown mock theta function '" + name + "'");
  return it->second;
}

std::string to_string(MockName n) {
  for (const auto& [k, v] : name_table()) {
    if (v == n) return k;
  }
  return "?";
}

std::vector<MockName> all_mock_names() {
  return {MockName::A2,    MockName::mu2,   MockName::f3,  MockName::omega3, MockName::psi3, MockName::chi3,
          MockName::phi10, MockName::psi10, MockName::X10, MockName::chi10,  MockName::f0,   MockName::f1};
}

bool has_form(MockName n, MockForm form) {
  if (form == MockForm::eulerian) return true;
  return n != MockName::phi10 && n != MockName::psi10 && n != MockName::X10 && n != MockName::chi10;
}

QZSeries mock_theta(MockName n, MockForm form, const Exponent& trunc) { return ex::mock(n, form).eval(trunc); }

QZSeries g3(long a, long b, const Exponent& trunc) {
  if (a <= 0 || a >= b) throw InvalidArgument("g3 needs 0 < a < b");
  const Exponent inner = trunc + a;
  QZSeries sum = eulerian_sum(inner, 0, [b](long n) { return Exponent(b * n * n); }, plus, [a, b](long n) {
    if (n == 0) return Step{{}, {{1, a}}};
    return Step{{}, {{1, a + b * n}, {1, b * n - a}}};
  });
  return sub(sum, QZSeries::one()).times_monomial(1, -a).truncated(trunc);
}

namespace ex {

Expr mock(MockName n, MockForm form) {
  if (!has_form(n, form)) throw FormUnavailable(to_string(n) + " has no Appell form");
  if (form == MockForm::eulerian) {
    return Expr::leaf(to_string(n) + "(q)", [n](const Exponent& t) { return eulerian(n, t); });
  }
  const ThetaBase b3(3), b4(4), b6(6);
  switch (n) {
    case MockName::A2:
      return -m(qp(1), qp(2), b4);
    case MockName::mu2:
      return 2 * m(mq(1), mq(0), b4) + 2 * m(mq(1), qp(1), b4);
    case MockName::f3:
      return 2 * m(mq(1), qp(1), b3) + 2 * m(mq(1), qp(2), b3);
    case MockName::omega3:
      return -(qpow(-1) * m(qp(1), qp(2), b6)) - qpow(-1) * m(qp(1), qp(4), b6);
    case MockName::psi3:
      return -m(qp(1), mq(1), ThetaBase(3, Unit::minus_one())) + qpow(1) * J(12).pow(3) / (J(4) * J(3, 12));
    case MockName::chi3:
      return m(mq(1), qp(1), b3) + J(3, 6).pow(2) / J(1);
    case MockName::f0:
      return J(5, 10) * J(2, 5) / J(1) - mono(2, 2) * g3(2, 10);
    case MockName::f1:
      return J(5, 10) * J(1, 5) / J(1) - mono(2, 3) * g3(4, 10);
    default:
      break;
  }
  throw FormUnavailable(to_string(n) + " has no Appell form");
}

Expr mock_alt(MockName n) {
  switch (n) {
    case MockName::f3:
      return 4 * m(mq(1), qp(1), ThetaBase(3)) + J(3, 6).pow(2) / J(1);
    case MockName::omega3:
      return mono(-2, -1) * m(qp(1), qp(2), ThetaBase(6)) + J(6).pow(3) / (J(2) * J(3, 6));
    default:
      throw FormUnavailable(to_string(n) + " has a single Appell form");
  }
}

Expr g3(long a, long b) {
  return Expr::leaf("g3(q^" + std::to_string(a) + ";q^" + std::to_string(b) + ")",
                    [a, b](const Exponent& t) { return qsv::g3(a, b, t); });
}

}  // namespace ex

std::vector<IdentityInstance> classical_third_order_instances() {
  using ex::mock;
  const Expr f3 = mock(MockName::f3);
  const Expr chi3 = mock(MockName::chi3);
  const Expr psi3_neg = mock(MockName::psi3).substitute_q(Unit::minus_one(), 1);
  const ThetaBase b12(12);
  const Expr pair1 = m(mq(5), qp(6), b12) - qpow(-1) * m(mq(1), qp(6), b12);
  const Expr pair2 = -(qpow(-2) * m(mq(-1), qp(6), b12)) + m(mq(7), qp(6), b12);
  const Expr theta_chi = J(3) * J(4).pow(3) / (J(2).pow(2) * J(12));
  const Expr quarter = Expr::constant(GaussianRational(Rational(1, 4)));
  const Expr f3_part = quarter * f3 - quarter * J(1).pow(3) / J(2).pow(2);
  const Expr one = Expr::constant(1);
  return {
      {"mockIdentity-f(q)psi(q)", "", f3 + 4 * psi3_neg, J(1).pow(3) / J(2).pow(2)},
      {"mockIdentity-chi(q)f(q)", "", 4 * chi3 - f3, 3 * J(3).pow(4) / (J(1) * J(6).pow(2))},
      {"mockIdentity-chi(q)psi(q)", "", chi3 + psi3_neg, theta_chi},
      {"altAppellForm3rd-chi", "", pair1, chi3 - theta_chi},
      {"altAppellForm3rd-psi", "", pair1, -psi3_neg},
      {"alternateAppellFormsLvl23FirstTwoPairs", "first", pair1, -psi3_neg},
      {"alternateAppellFormsLvl23FirstTwoPairs", "second", pair2, one - (chi3 - theta_chi)},
      {"alternateAppellFormsLvl23FirstTwoPairsAlt", "first", pair1, f3_part},
      {"alternateAppellFormsLvl23FirstTwoPairsAlt", "second", pair2, one - f3_part},
      {"alternat3rdAppellFormsLvl23-proof", "m(-q,q;q^3) split", m(mq(1), qp(1), ThetaBase(3)),
       pair1 - qpow(1) * J(3) * J(12).pow(3) / (J(4) * J(6).pow(2))},
  };
}

std::vector<IdentityResult> classical_third_order_suite(const Exponent& trunc) {
  std::vector<IdentityResult> out;
  for (const auto& inst : classical_third_order_instances()) out.push_back(check_instance(inst, trunc));
  return out;
}

}  // namespace qsv

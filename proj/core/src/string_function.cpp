#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <tuple>

#include "qsv/errors.hpp"
#include "qsv/hecke.hpp"

namespace qsv {

namespace {

long binom2(long n) { return n * (n - 1) / 2; }

/// 1/(q)_inf^3, shared by every string function.
QZSeries inverse_q3(const Exponent& t) {
  return memoized("1/(q)_inf^3", [](const Exponent& tt) { return invert_unit(J(1, tt).pow(3)); }, t);
}

/// Divides a series by (q)_inf^3 keeping truncation at least `t`.
QZSeries divide_by_q3(const QZSeries& a, const Exponent& t) {
  Exponent low = a.empty() ? *a.trunc() : *a.valuation();
  Exponent need = sgn(low) < 0 ? Exponent(t - low) : t;
  return mul(a, inverse_q3(need)).truncated(t);
}

std::string ccal_key(const StringFnId& id) { return "Ccal" + id.to_string(); }

struct EvaluationLog {
  std::mutex mutex;
  std::map<std::tuple<long, long, long, long>, Exponent> orders;
};

EvaluationLog& evaluation_log() {
  static EvaluationLog log;
  return log;
}

void record_evaluation(const StringFnId& id, const Exponent& trunc) {
  auto& log = evaluation_log();
  std::lock_guard lock(log.mutex);
  auto [it, inserted] = log.orders.try_emplace({id.p, id.pprime, id.m, id.ell}, trunc);
  if (!inserted && it->second < trunc) it->second = trunc;
}

/// sum_{i=a}^{b} with the convention that b < a means minus the sum over b+1..a-1.
template <typename F>
Expr convention_sum(long a, long b, F&& term) {
  Expr out;
  if (b >= a) {
    for (long i = a; i <= b; ++i) out = out + term(i);
  } else {
    for (long i = b + 1; i <= a - 1; ++i) out = out - term(i);
  }
  return out;
}

Expr jneg(const Exponent& a, const Exponent& base) { return ex::j(ThetaArg(-1, a), ThetaBase(base)); }

}  // namespace

StringFnId StringFnId::from_level(const Rational& level, long m, long ell) {
  Rational ratio = level + 2;
  if (sgn(ratio) <= 0) throw InvalidArgument("level must exceed -2");
  StringFnId id;
  id.pprime = ratio.get_num().get_si();
  id.p = ratio.get_den().get_si();
  id.m = m;
  id.ell = ell;
  return id;
}

Rational StringFnId::level() const {
  Rational r(pprime);
  r /= p;
  return r - 2;
}

void StringFnId::validate() const {
  if (p < 1) throw InvalidArgument("p must be at least 1");
  if (pprime < 2) throw InvalidArgument("p' must be at least 2");
  if (std::gcd(p, pprime) != 1) throw InvalidArgument("p and p' must be coprime");
  if (pprime <= 2 * p) throw InvalidArgument("level p'/p - 2 must be positive");
  if ((m + ell) % 2 != 0) throw InvalidArgument("m + ell must be even");
  if (ell < 0 || ell > pprime - 2) throw InvalidArgument("ell must lie in [0, p'-2]");
}

std::string StringFnId::to_string() const {
  std::ostringstream os;
  os << "^{(" << p << "," << pprime << ")}_{" << m << "," << ell << "}";
  return os.str();
}

Exponent s_lambda(const StringFnId& id) {
  Exponent l1 = Exponent(id.ell + 1) * (id.ell + 1) * id.p / (4 * id.pprime);
  Exponent mm = Exponent(id.m) * id.m * id.p / (4 * (id.pprime - 2 * id.p));
  return exponent(-1, 8) + l1 - mm;
}

QZSeries string_hecke_difference(const StringFnId& id, const Exponent& trunc) {
  id.validate();
  record_evaluation(id, trunc);
  const long p = id.p, pp = id.pprime, m = id.m, l = id.ell;
  HeckeParams first{1, pp, 2 * p * pp, ThetaArg(1, 1 + (m + l) / 2), ThetaArg(-1, p * (pp + l + 1))};
  HeckeParams second{1, pp, 2 * p * pp, ThetaArg(1, (m - l) / 2), ThetaArg(-1, p * (pp - l - 1))};
  return sub(hecke_sum(first, trunc), hecke_sum(second, trunc));
}

QZSeries string_coeff(const StringFnId& id, bool normalized, const Exponent& trunc) {
  id.validate();
  if (!normalized) {
    Exponent s = s_lambda(id);
    return string_coeff(id, true, trunc - s).times_monomial(1, s);
  }
  return memoized(ccal_key(id), [id](const Exponent& t) {
    QZSeries c = divide_by_q3(string_hecke_difference(id, t), t);
    if (!c.is_integral()) throw IntegralityViolation("string function " + id.to_string() + " is not integral");
    return c;
  }, trunc);
}

std::vector<std::pair<StringFnId, Exponent>> evaluated_string_functions() {
  auto& log = evaluation_log();
  std::lock_guard lock(log.mutex);
  std::vector<std::pair<StringFnId, Exponent>> out;
  for (const auto& [key, order] : log.orders) {
    auto [p, pp, m, l] = key;
    out.push_back({StringFnId{p, pp, m, l}, order});
  }
  return out;
}

QZSeries string_coeff_compact(long level, long m, long ell, const Exponent& trunc) {
  if (level < 1) throw InvalidArgument("compact form needs a positive integer level");
  if ((m + ell) % 2 != 0) throw InvalidArgument("m + ell must be even");
  HeckeParams prm{1, 1 + level, 1, ThetaArg(1, 1 + (m + ell) / 2), ThetaArg(1, 1 - (m - ell) / 2)};
  return divide_by_q3(hecke_sum(prm, trunc), trunc);
}

std::vector<IdentityInstance> integer_level_symmetry_instances(long level) {
  if (level < 1) throw InvalidArgument("integer level must be positive");
  const long pp = level + 2;
  auto C = [&](long m, long l) { return ex::string_fn(StringFnId{1, pp, m, l}); };
  std::vector<IdentityInstance> checks;
  for (long l = 0; l <= level; ++l) {
    for (long m = l % 2; m < 2 * level; m += 2) {
      std::string at = "N=" + std::to_string(level) + ",m=" + std::to_string(m) + ",l=" + std::to_string(l);
      checks.push_back({"C(m)=C(-m)", at, C(m, l), C(-m, l)});
      checks.push_back({"C(m,l)=C(N-m,N-l)", at, C(m, l), C(level - m, level - l)});
      checks.push_back({"C(m)=C(m+2N)", at, C(m, l), C(m + 2 * level, l)});
      long mm = m, ll = l;
      Expr compact = Expr::leaf("Ccompact(" + at + ")", [level, mm, ll](const Exponent& t) {
        return string_coeff_compact(level, mm, ll, t);
      });
      checks.push_back({"compact-form", at, ex::string_fn(StringFnId{1, pp, m, l}, true), compact});
    }
    // Theta expansion of the character, cleared by the Weyl-Kac theta denominator.
    Expr expansion;
    for (long m = l % 2; m < 2 * level; m += 2) expansion = expansion + C(m, l) * ex::big_theta(m, level, 1);
    long ll = l;
    Expr numer = Expr::leaf("WKtheta-num(1," + std::to_string(pp) + "," + std::to_string(l) + ")",
                            [pp, ll](const Exponent& t) { return weyl_kac_theta_numerator(1, pp, ll, t); });
    Expr denom = Expr::leaf("WKtheta-den", [](const Exponent& t) { return weyl_kac_theta_denominator(t); });
    checks.push_back({"theta-expansion", "N=" + std::to_string(level) + ",l=" + std::to_string(l), expansion * denom,
                      numer});
  }
  return checks;
}

std::vector<IdentityResult> integer_level_symmetries(long level, const Exponent& trunc) {
  std::vector<IdentityResult> out;
  for (const auto& c : integer_level_symmetry_instances(level)) out.push_back(check_instance(c, trunc));
  return out;
}

QZSeries quasi_periodic_shift(long p, long j, long s, long r, long t, const Exponent& trunc) {
  return ex::quasi_periodic_shift(p, j, s, r, t).eval(trunc);
}

QZSeries cross_spin_residual(long p, long j, long i, long r, const Exponent& trunc) {
  return ex::cross_spin_residual(p, j, i, r).eval(trunc);
}

namespace ex {

Expr string_fn(const StringFnId& id, bool normalized) {
  id.validate();
  if (normalized) {
    return Expr::leaf(ccal_key(id), [id](const Exponent& t) { return string_coeff(id, true, t); });
  }
  return Expr::leaf("C" + id.to_string(), [id](const Exponent& t) { return string_coeff(id, false, t); });
}

Expr string_fn_q3(const StringFnId& id) {
  id.validate();
  return Expr::leaf("(q)^3Ccal" + id.to_string(), [id](const Exponent& t) { return string_hecke_difference(id, t); });
}

Expr quasi_periodic_shift(long p, long j, long s, long r, long t) {
  if (p < 1 || j < 1 || s < 0 || s >= j) throw InvalidArgument("quasi-periodic shift needs p, j >= 1 and 0 <= s < j");
  const long pp = 2 * p + j;
  const Exponent base = 2 * p * pp;
  Exponent lead = exponent(-1, 8) + Exponent(p) * (2 * r + 2) * (2 * r + 2) / (4 * pp) + binom2(p + 1) -
                  p * (r + 1 - s) - Exponent(p) * (2 * s + 1) * (2 * s + 1) / (4 * j);
  std::vector<Expr> per_m;
  for (long m = 1; m <= p - 1; ++m) {
    per_m.push_back(mono(m % 2 == 0 ? 1 : -1, binom2(m + 1) + m * (r - p)) *
                    (jneg(m * pp + p * (2 * r + 2), base) -
                     qpow(m * pp - m * (2 * r + 2)) * jneg(-m * pp + p * (2 * r + 2), base)));
  }
  Expr total = convention_sum(1, t, [&](long i) {
    Expr inner;
    for (long m = 1; m <= p - 1; ++m) {
      inner = inner + (qpow(m * (j * i + s - j + 1)) - qpow(-m * (j * i + s))) * per_m[m - 1];
    }
    return qpow(-2 * p * j * binom2(i) - p * (2 * s + 1) * i) * inner;
  });
  return mono(p % 2 == 0 ? 1 : -1, lead) * total;
}

Expr cross_spin_residual(long p, long j, long i, long r) {
  if (p < 1 || j < 1) throw InvalidArgument("cross-spin residual needs p, j >= 1");
  const long pp = 2 * p + j;
  const Exponent base = 2 * p * pp;
  Expr sum;
  for (long m = 1; m <= p - 1; ++m) {
    sum = sum + mono(m % 2 == 0 ? 1 : -1, binom2(m + 1) - m * (i + p + r)) *
                    (jneg(m * pp - 2 * p * r, base) - qpow(2 * r * (m - p)) * jneg(m * pp + 2 * p * r, base));
  }
  return mono(p % 2 == 0 ? 1 : -1, binom2(p) + p * (i + r)) * sum;
}

}  // namespace ex

}  // namespace qsv

#pragma once

#include <string>
#include <vector>

#include "qsv/expr.hpp"
#include "qsv/series.hpp"

namespace qsv {

/// The monomial coeff * q^qpow * z^zpow.
struct ThetaArg {
  Unit coeff;
  Exponent qpow;
  Exponent zpow;

  ThetaArg() = default;
  ThetaArg(Unit c, Exponent q, Exponent z = 0) : coeff(c), qpow(std::move(q)), zpow(std::move(z)) {}
  /// sign * q^q * z^z with sign in {+1, -1}.
  ThetaArg(int sign, Exponent q, Exponent z = 0) : coeff(Unit::sign(sign)), qpow(std::move(q)), zpow(std::move(z)) {}

  ThetaArg operator*(const ThetaArg& o) const { return {coeff * o.coeff, qpow + o.qpow, zpow + o.zpow}; }
  ThetaArg inverse() const { return {coeff.inverse(), -qpow, -zpow}; }
  ThetaArg pow(long n) const { return {coeff.pow(n), qpow * n, zpow * n}; }
  bool has_z() const { return zpow != 0; }
  bool operator==(const ThetaArg& o) const { return coeff == o.coeff && qpow == o.qpow && zpow == o.zpow; }
  QZSeries series() const { return QZSeries::monomial(coeff.value(), qpow, zpow); }
  Expr expr() const { return Expr::monomial(coeff.value(), qpow, zpow); }
  std::string to_string() const;
};

/// The nome sign * q^power of a theta function; sign is +1 or -1.
struct ThetaBase {
  Exponent power;
  Unit sign = Unit::one();

  ThetaBase(long p) : power(p) {}  // NOLINT(google-explicit-constructor)
  ThetaBase(Exponent p, Unit s = Unit::one()) : power(std::move(p)), sign(s) {}  // NOLINT
  std::string to_string() const;
};

/// j(x; B) = sum_n (-1)^n B^{binom(n,2)} x^n over exactly the n whose term lies below `trunc`.
QZSeries jacobi_theta(const ThetaArg& x, const ThetaBase& base, const Exponent& trunc);
/// J_{a,b}, or Jbar_{a,b} = j(-q^a; q^b) when `overline` is set.
QZSeries J(const Exponent& a, const Exponent& b, bool overline, const Exponent& trunc);
/// J_a = J_{a,3a} = (q^a; q^a)_infinity.
QZSeries J(const Exponent& a, const Exponent& trunc);
/// q^{1/24} (q)_infinity.
QZSeries eta(const Exponent& trunc);
/// Theta_{n,m}(z; q^scale) = sum_{j in Z + n/2m} q^{scale m j^2} z^{-m j}.
QZSeries big_theta(long n, long m, const Exponent& scale, const Exponent& trunc);
/// (x; B)_infinity as a finite product; x must have positive q-order or be z-free with |x| < 1.
QZSeries pochhammer_infinite(const ThetaArg& x, const ThetaBase& base, const Exponent& trunc);
/// j(x;B) through the triple product (x)(B/x)(B); needs both x and B/x of positive q-order.
QZSeries jacobi_theta_product(const ThetaArg& x, const ThetaBase& base, const Exponent& trunc);

/// Expression builders used by the identity catalogue.
namespace ex {
Expr j(const ThetaArg& x, const ThetaBase& base);
Expr J(const Exponent& a, const Exponent& b);
Expr Jbar(const Exponent& a, const Exponent& b);
Expr J(const Exponent& a);
Expr eta();
Expr big_theta(long n, long m, const Exponent& scale);
}  // namespace ex

enum class Status { pass, fail, skipped };
std::string to_string(Status s);

/// One outcome of a grid-based identity check.
struct IdentityResult {
  std::string identity;
  std::string specialization;
  Status status = Status::pass;
  std::string detail;
};

/// An identity instance ready to evaluate.
struct IdentityInstance {
  std::string identity;
  std::string specialization;
  Expr lhs;
  Expr rhs;
};

/// Evaluates both sides and compares them up to `order`; evaluation failures become skips.
IdentityResult check_instance(const IdentityInstance& inst, const Exponent& order);

/// All classical theta identities instantiated over the monomial grid.
std::vector<IdentityInstance> theta_identity_instances();
/// The product-rearrangement list (J-bar and J_{a,b} in terms of J_n).
std::vector<IdentityInstance> product_rearrangement_instances();
std::vector<IdentityResult> theta_identity_suite(const Exponent& trunc);

}  // namespace qsv

#include "qsv/theta.hpp"

#include <cmath>
#include <sstream>

#include "qsv/errors.hpp"

namespace qsv {

namespace {

std::string monomial_text(const std::string& coeff, const Exponent& q, const Exponent& z) {
  std::ostringstream os;
  os << coeff;
  if (q != 0) os << "*q^" << exponent_to_string(q);
  if (z != 0) os << "*z^" << exponent_to_string(z);
  return os.str();
}

long floor_long(const Exponent& e) { return floor_exponent(e).get_num().get_si(); }

}  // namespace

std::string ThetaArg::to_string() const { return monomial_text(coeff.to_string(), qpow, zpow); }

std::string ThetaBase::to_string() const {
  std::string s = (sign == Unit::one() ? "" : "-") + std::string("q^") + exponent_to_string(power);
  return s;
}

std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skipped: return "skipped";
  }
  return "unknown";
}

QZSeries jacobi_theta(const ThetaArg& x, const ThetaBase& base, const Exponent& trunc) {
  if (sgn(base.power) <= 0) throw InvalidArgument("theta base must have positive q-power");
  if (base.sign != Unit::one() && base.sign != Unit::minus_one()) {
    throw InvalidArgument("theta base sign must be +1 or -1");
  }
  const Exponent& b = base.power;
  const Exponent& a = x.qpow;
  auto exponent_at = [&](long n) -> Exponent { return b * Exponent(n * (n - 1) / 2) + a * n; };
  auto coeff_at = [&](long n) {
    long pairs = n * (n - 1) / 2;
    return (Unit::minus_one().pow(n) * base.sign.pow(pairs) * x.coeff.pow(n)).value();
  };
  SeriesBuilder out(trunc);
  // The exponent is convex in n with its minimum at 1/2 - a/b.
  Exponent vertex = Exponent(1, 2) - a / b;
  long start = floor_long(vertex);
  for (long n = start;; ++n) {
    Exponent e = exponent_at(n);
    if (e < trunc) {
      out.add(coeff_at(n), e, x.zpow * n);
    } else if (Exponent(n) >= vertex) {
      break;
    }
  }
  for (long n = start - 1;; --n) {
    Exponent e = exponent_at(n);
    if (e >= trunc) break;
    out.add(coeff_at(n), e, x.zpow * n);
  }
  return std::move(out).build();
}

QZSeries J(const Exponent& a, const Exponent& b, bool overline, const Exponent& trunc) {
  return jacobi_theta(ThetaArg(overline ? -1 : 1, a), ThetaBase(b), trunc);
}

QZSeries J(const Exponent& a, const Exponent& trunc) { return J(a, 3 * a, false, trunc); }

QZSeries eta(const Exponent& trunc) {
  const Exponent shift(1, 24);
  return J(1, trunc - shift).times_monomial(1, shift);
}

QZSeries big_theta(long n, long m, const Exponent& scale, const Exponent& trunc) {
  if (m <= 0) throw InvalidArgument("big_theta needs m > 0");
  if (sgn(scale) <= 0) throw InvalidArgument("big_theta needs a positive scale");
  SeriesBuilder out(trunc);
  Exponent offset = Exponent(n) / Exponent(2 * m);
  if (sgn(trunc) <= 0) return std::move(out).build();
  double radius = std::sqrt(trunc.get_d() / (scale.get_d() * static_cast<double>(m)));
  long lo = static_cast<long>(std::floor(-radius - offset.get_d())) - 2;
  long hi = static_cast<long>(std::ceil(radius - offset.get_d())) + 2;
  for (long k = lo; k <= hi; ++k) {
    Exponent jj = Exponent(k) + offset;
    Exponent e = scale * m * jj * jj;
    if (e < trunc) out.add(1, e, -m * jj);
  }
  return std::move(out).build();
}

QZSeries pochhammer_infinite(const ThetaArg& x, const ThetaBase& base, const Exponent& trunc) {
  QZSeries out = QZSeries::one().truncated(trunc);
  ThetaArg u = x;
  const ThetaArg step(base.sign, base.power);
  while (true) {
    if (sgn(u.qpow) < 0) throw InvalidArgument("pochhammer factor with negative q-order");
    if (sgn(u.qpow) == 0) {
      if (u.has_z()) throw InvalidArgument("pochhammer factor with a bare z-power");
      out *= (GaussianRational(1) - u.coeff.value());
    } else {
      if (u.qpow >= trunc) break;
      out = out.mul_binomial(u.coeff.value(), u.qpow, u.zpow);
    }
    u = u * step;
  }
  return out;
}

QZSeries jacobi_theta_product(const ThetaArg& x, const ThetaBase& base, const Exponent& trunc) {
  const ThetaArg b(base.sign, base.power);
  return mul(mul(pochhammer_infinite(x, base, trunc), pochhammer_infinite(b * x.inverse(), base, trunc)),
             pochhammer_infinite(b, base, trunc));
}

namespace ex {

Expr j(const ThetaArg& x, const ThetaBase& base) {
  std::string key = "j(" + x.to_string() + ";" + base.to_string() + ")";
  return Expr::leaf(key, [x, base](const Exponent& t) { return jacobi_theta(x, base, t); });
}

Expr J(const Exponent& a, const Exponent& b) { return j(ThetaArg(1, a), ThetaBase(b)); }

Expr Jbar(const Exponent& a, const Exponent& b) { return j(ThetaArg(-1, a), ThetaBase(b)); }

Expr J(const Exponent& a) { return J(a, 3 * a); }

Expr eta() { return qpow(Exponent(1, 24)) * J(1); }

Expr big_theta(long n, long m, const Exponent& scale) {
  std::string key = "Theta_{" + std::to_string(n) + "," + std::to_string(m) + "}(z;q^" + exponent_to_string(scale) + ")";
  return Expr::leaf(key, [n, m, scale](const Exponent& t) { return qsv::big_theta(n, m, scale, t); });
}

}  // namespace ex

IdentityResult check_instance(const IdentityInstance& inst, const Exponent& order) {
  IdentityResult r{inst.identity, inst.specialization, Status::pass, ""};
  try {
    QZSeries l = inst.lhs.eval(order);
    QZSeries rr = inst.rhs.eval(order);
    Comparison c = equal_up_to(l, rr, order);
    if (!c.equal) {
      const auto& d = *c.first_difference;
      r.status = Status::fail;
      r.detail = "first difference at q^" + exponent_to_string(d.q) + " z^" + exponent_to_string(d.z) + ": " +
                 d.lhs.to_string() + " vs " + d.rhs.to_string();
    }
  } catch (const NotAUnit& e) {
    r.status = Status::skipped;
    r.detail = std::string("degenerate specialization: ") + e.what();
  } catch (const DegenerateSpecialization& e) {
    r.status = Status::skipped;
    r.detail = std::string("degenerate specialization: ") + e.what();
  } catch (const PoleAtSpecialization& e) {
    r.status = Status::skipped;
    r.detail = std::string("pole at specialization: ") + e.what();
  }
  return r;
}

std::vector<IdentityResult> theta_identity_suite(const Exponent& trunc) {
  std::vector<IdentityResult> out;
  for (const auto& inst : theta_identity_instances()) out.push_back(check_instance(inst, trunc));
  for (const auto& inst : product_rearrangement_instances()) out.push_back(check_instance(inst, trunc));
  return out;
}

}  // namespace qsv

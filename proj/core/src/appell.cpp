#include "qsv/appell.hpp"

#include <cmath>

#include "qsv/errors.hpp"

namespace qsv {

namespace {

long binom2(long n) { return n * (n - 1) / 2; }

ThetaArg base_arg(const ThetaBase& b) { return ThetaArg(b.sign, b.power); }

ThetaBase scaled(const ThetaBase& b, long k) { return ThetaBase(b.power * k, b.sign.pow(k)); }

/// (B; B)_inf^3 for the nome B.
Expr j1_cubed(const ThetaBase& b) { return ex::j(base_arg(b), scaled(b, 3)).pow(3); }

}  // namespace

std::string AppellArgs::to_string() const {
  return "m(" + x.to_string() + "," + z.to_string() + ";" + base.to_string() + ")";
}

QZSeries appell_j_product(const AppellArgs& args, const Exponent& trunc, long max_radius) {
  if (args.x.has_z()) throw InvalidArgument("Appell x must be z-free");
  if (args.base.sign != Unit::one() && args.base.sign != Unit::minus_one()) {
    throw InvalidArgument("Appell nome sign must be +1 or -1");
  }
  const Exponent& b = args.base.power;
  if (sgn(b) <= 0) throw InvalidArgument("Appell nome needs positive q-power");
  const Unit s = args.base.sign;
  const Exponent& a = args.x.qpow;
  const Exponent& c = args.z.qpow;
  const Exponent& w = args.z.zpow;

  auto order_n = [&](long r) -> Exponent { return b * binom2(r) + c * r; };
  auto order_e = [&](long r) -> Exponent { return b * (r - 1) + a + c; };
  // Lowest q-order contributed by index r; convex in r.
  auto lowest = [&](long r) -> Exponent {
    Exponent e = order_e(r);
    return sgn(e) < 0 ? Exponent(order_n(r) - e) : order_n(r);
  };

  SeriesBuilder out(trunc);
  auto emit = [&](long r) {
    const Unit num_c = Unit::minus_one().pow(r) * s.pow(binom2(r)) * args.z.coeff.pow(r);
    const Unit den_c = s.pow(r - 1) * args.x.coeff * args.z.coeff;
    const Exponent qn = order_n(r);
    const Exponent zn = w * r;
    const Exponent e = order_e(r);
    if (sgn(e) == 0) {
      if (w != 0) throw InvalidArgument("Appell denominator has no q-graded expansion at " + args.to_string());
      if (den_c == Unit::one()) throw PoleAtSpecialization("Appell denominator vanishes at " + args.to_string());
      GaussianRational coeff = num_c.value();
      coeff /= GaussianRational(1) - den_c.value();
      out.add(coeff, qn, zn);
      return;
    }
    if (sgn(e) > 0) {
      Unit u = num_c;
      for (long k = 0;; ++k) {
        Exponent q = qn + e * k;
        if (q >= trunc) break;
        out.add(u.value(), q, zn + w * k);
        u = u * den_c;
      }
    } else {
      Unit u = -(num_c * den_c.inverse());
      for (long k = 1;; ++k) {
        Exponent q = qn - e * k;
        if (q >= trunc) break;
        out.add(u.value(), q, zn - w * k);
        u = u * den_c.inverse();
      }
    }
  };

  Exponent vertex = Exponent(1, 2) - c / b;
  long start = floor_exponent(vertex).get_num().get_si();
  for (int dir : {1, -1}) {
    long r = dir == 1 ? start : start - 1;
    Exponent prev = lowest(r - dir);
    for (long steps = 0;; r += dir, ++steps) {
      if (steps > max_radius) throw NonTerminatingEnumeration("Appell sum did not close at " + args.to_string());
      Exponent cur = lowest(r);
      if (cur < trunc) {
        emit(r);
      } else if (cur >= prev) {
        break;
      }
      prev = cur;
    }
  }
  return std::move(out).build();
}

QZSeries appell(const AppellArgs& args, const Exponent& trunc) {
  try {
    return ex::appell(args).eval(trunc);
  } catch (const NotAUnit& e) {
    throw NonUnitPrefactor("1/j(" + args.z.to_string() + ";" + args.base.to_string() + ") is not available: " +
                           e.what());
  }
}

QZSeries changing_z_psi(const ThetaArg& x, const ThetaArg& z1, const ThetaArg& z0, const ThetaBase& base,
                        const Exponent& trunc) {
  try {
    return ex::changing_z_psi(x, z1, z0, base).eval(trunc);
  } catch (const NotAUnit& e) {
    throw DegenerateSpecialization(std::string("changing-z denominator vanishes: ") + e.what());
  }
}

namespace ex {

Expr appell_j_product(const AppellArgs& args) {
  return Expr::leaf("jm" + args.to_string(), [args](const Exponent& t) { return qsv::appell_j_product(args, t); });
}

Expr appell(const AppellArgs& args) { return appell_j_product(args) / j(args.z, args.base); }

Expr m(const ThetaArg& x, const ThetaArg& z, const ThetaBase& base) { return appell({x, z, base}); }

Expr jm(const ThetaArg& w, const ThetaArg& x, const ThetaArg& w2, const ThetaBase& base) {
  const ThetaArg B = base_arg(base);
  auto multiple_of_base = [&](const ThetaArg& ratio) -> bool {
    if (ratio.has_z()) return false;
    Exponent k = ratio.qpow / base.power;
    if (k.get_den() != 1) return false;
    return ratio.coeff == base.sign.pow(k.get_num().get_si());
  };
  if (multiple_of_base(w2 * w.inverse())) return appell_j_product({x, w, base});
  if (multiple_of_base(w2 * w)) return appell_j_product({x, B * w.inverse(), base});
  throw InvalidArgument("j(" + w.to_string() + ") does not match the Appell argument " + w2.to_string());
}

Expr changing_z_psi(const ThetaArg& x, const ThetaArg& z1, const ThetaArg& z0, const ThetaBase& base) {
  return z0.expr() * j1_cubed(base) * j(z1 * z0.inverse(), base) * j(x * z0 * z1, base) /
         (j(z0, base) * j(z1, base) * j(x * z0, base) * j(x * z1, base));
}

}  // namespace ex

std::vector<IdentityInstance> appell_property_instances() {
  const ThetaBase q1(1);
  const ThetaArg qq(1, 1);
  std::vector<ThetaArg> xs = {ThetaArg(1, Exponent(1, 2)), ThetaArg(-1, Exponent(1, 3)),
                              ThetaArg(Unit::i(), Exponent(1, 4)), ThetaArg(-1, Exponent(5, 4))};
  std::vector<ThetaArg> zs = {ThetaArg(1, Exponent(1, 3)), ThetaArg(1, Exponent(3, 4)),
                              ThetaArg(Unit::minus_i(), Exponent(1, 2)), ThetaArg(1, Exponent(-1, 4))};
  std::vector<IdentityInstance> out;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    for (std::size_t l = 0; l < zs.size(); ++l) {
      const ThetaArg& x = xs[k];
      const ThetaArg& z = zs[l];
      std::string at = "x=" + x.to_string() + ",z=" + z.to_string();
      out.push_back({"mxqz-fnq-z", at, ex::m(x, z, q1), ex::m(x, qq * z, q1)});
      out.push_back({"mxqz-flip", at, ex::m(x, z, q1), x.inverse().expr() * ex::m(x.inverse(), z.inverse(), q1)});
      out.push_back({"mxqz-fnq-x", at, ex::m(qq * x, z, q1), Expr::constant(1) - x.expr() * ex::m(x, z, q1)});
      out.push_back({"mxqz-flip-xz", at, ex::m(x, z, q1), ex::m(x, (x * z).inverse(), q1)});
      const ThetaArg& z0 = zs[(l + 1) % zs.size()];
      out.push_back({"changing-z", at + ",z0=" + z0.to_string(), ex::m(x, z, q1) - ex::m(x, z0, q1),
                     ex::changing_z_psi(x, z, z0, q1)});
      out.push_back({"appell-j-product", at, ex::appell_j_product({x, z, q1}), ex::j(z, q1) * ex::m(x, z, q1)});
    }
    // Formal z: compare j(z) m(x, z) through the bilateral sums.
    for (const auto& z : {ThetaArg(1, 0, 1), ThetaArg(-1, Exponent(1, 5), 1)}) {
      const ThetaArg& x = xs[k];
      std::string at = "x=" + x.to_string() + ",z=" + z.to_string();
      // j(qz) = -z^{-1} j(z), so j(z) m(x, qz) = -z j(qz) m(x, qz).
      out.push_back({"mxqz-fnq-z", at, ex::appell_j_product({x, z, q1}),
                     -z.expr() * ex::appell_j_product({x, qq * z, q1})});
      out.push_back({"mxqz-flip", at, ex::jm(z, x, z, q1),
                     -(x.inverse() * z).expr() * ex::jm(z.inverse(), x.inverse(), z.inverse(), q1)});
    }
  }
  return out;
}

IdentityInstance msplit_m2_instance(const ThetaArg& x, const ThetaArg& z, const ThetaArg& z1, long b) {
  const ThetaBase Q(b), Q2(2 * b), Q4(4 * b);
  const ThetaArg q1(1, b);
  const ThetaArg x2 = x.pow(2);
  const ThetaArg minus(-1, 0);
  Expr lhs = ex::m(x, z, Q);
  Expr split = ex::m(minus * q1 * x2, z1, Q4) - (q1.inverse() * x).expr() * ex::m(minus * q1.inverse() * x2, z1, Q4);
  Expr j2cubed = ex::j(ThetaArg(1, 2 * b), ThetaBase(6 * b)).pow(3);
  Expr bracket = ex::j(minus * q1 * x2 * z * z1, Q2) * ex::j(z.pow(2) * z1.inverse(), Q4) /
                     (ex::j(minus * q1 * x2 * z1, Q2) * ex::j(z, Q2)) -
                 (x * z).expr() * ex::j(minus * q1.pow(2) * x2 * z * z1, Q2) *
                     ex::j(q1.pow(2) * z.pow(2) * z1.inverse(), Q4) /
                     (ex::j(minus * q1 * x2 * z1, Q2) * ex::j(q1 * z, Q2));
  Expr rhs = split + z1.expr() * j2cubed / (ex::j(x * z, Q) * ex::j(z1, Q4)) * bracket;
  return {"msplit-m2",
          "x=" + x.to_string() + ",z=" + z.to_string() + ",z1=" + z1.to_string() + ",q->q^" + std::to_string(b), lhs,
          rhs};
}

std::vector<IdentityInstance> msplit_m2_instances() {
  return {
      msplit_m2_instance(ThetaArg(-1, 1), ThetaArg(1, 1), ThetaArg(1, 6), 3),
      msplit_m2_instance(ThetaArg(1, Exponent(1, 2)), ThetaArg(-1, Exponent(1, 3)), ThetaArg(1, Exponent(5, 4)), 1),
      msplit_m2_instance(ThetaArg(-1, Exponent(1, 3)), ThetaArg(1, Exponent(3, 4)), ThetaArg(-1, Exponent(1, 2)), 1),
      msplit_m2_instance(ThetaArg(Unit::i(), Exponent(1, 4)), ThetaArg(1, Exponent(1, 2)),
                         ThetaArg(Unit::minus_i(), Exponent(7, 4)), 1),
  };
}

std::vector<IdentityResult> msplit_m2(const Exponent& trunc) {
  std::vector<IdentityResult> out;
  for (const auto& i : msplit_m2_instances()) out.push_back(check_instance(i, trunc));
  return out;
}

}  // namespace qsv

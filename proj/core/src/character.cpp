#include <algorithm>

#include "qsv/errors.hpp"
#include "qsv/hecke.hpp"

namespace qsv {

namespace {

void check_admissible(long p, long pprime, long ell) { StringFnId{p, pprime, ell, ell}.validate(); }

std::string triple(long p, long pprime, long ell) {
  return "(" + std::to_string(p) + "," + std::to_string(pprime) + "," + std::to_string(ell) + ")";
}

/// The q-power multiplying sum_m Ccal_{m,ell} z^{-m/2} in the character.
Exponent character_shift(long p, long pprime, long ell) {
  return exponent(-1, 8) + Exponent(p) * (ell + 1) * (ell + 1) / (4 * pprime);
}

}  // namespace

QZSeries weyl_kac_numerator(long p, long pprime, long ell, const Exponent& trunc) {
  check_admissible(p, pprime, ell);
  const Exponent lead = Exponent(p) * (ell + 1) * (ell + 1) / (4 * pprime);
  const ThetaBase base(2 * p * pprime);
  const Exponent inner = trunc - lead;
  QZSeries a = jacobi_theta(ThetaArg(-1, p * (ell + 1) + p * pprime, -pprime), base, inner);
  QZSeries b = jacobi_theta(ThetaArg(-1, -p * (ell + 1) + p * pprime, -pprime), base, inner)
                   .times_monomial(1, 0, ell + 1);
  return sub(a, b).times_monomial(1, lead, exponent(-(ell + 1), 2));
}

QZSeries weyl_kac_denominator(const Exponent& trunc) {
  const Exponent lead = exponent(1, 8);
  return jacobi_theta(ThetaArg(1, 0, 1), ThetaBase(1), trunc - lead).times_monomial(1, lead, exponent(-1, 2));
}

QZSeries weyl_kac_theta_numerator(long p, long pprime, long ell, const Exponent& trunc) {
  return sub(big_theta(ell + 1, pprime, p, trunc), big_theta(-(ell + 1), pprime, p, trunc));
}

QZSeries weyl_kac_theta_denominator(const Exponent& trunc) {
  return sub(big_theta(1, 2, 1, trunc), big_theta(-1, 2, 1, trunc));
}

QZSeries character(long p, long pprime, long ell, const Exponent& trunc) {
  check_admissible(p, pprime, ell);
  const Exponent shift = character_shift(p, pprime, ell);
  const Exponent inner = trunc - shift;
  // Modes are collected outward from m = ell until a run of empty ones; the
  // clearing check below certifies that nothing was missed.
  const long run = std::max(2 * (pprime - 2 * p), 4L);
  SeriesBuilder out(inner);
  auto collect = [&](long m) {
    QZSeries c = string_coeff(StringFnId{p, pprime, m, ell}, true, inner);
    for (const auto& t : c.terms()) out.add(t.coeff, t.q, exponent(-m, 2));
    return !c.empty();
  };
  collect(ell);
  for (int dir : {1, -1}) {
    long empties = 0;
    for (long m = ell + 2 * dir; empties < run; m += 2 * dir) {
      empties = collect(m) ? 0 : empties + 1;
    }
  }
  QZSeries chi = std::move(out).build().times_monomial(1, shift);
  const Exponent check_order = trunc + exponent(1, 8);
  QZSeries cleared = mul(chi, weyl_kac_denominator(check_order - shift));
  QZSeries numer = weyl_kac_numerator(p, pprime, ell, check_order);
  if (!equal_up_to(cleared, numer, check_order).equal) {
    throw MRangeBoundFailure("character " + triple(p, pprime, ell) + " missed Fourier modes below order " +
                             exponent_to_string(trunc));
  }
  return chi;
}

QZSeries character_at(long p, long pprime, long ell, const ThetaArg& z0, const Exponent& trunc) {
  return ex::character_at(p, pprime, ell, z0).eval(trunc);
}

namespace ex {

Expr weyl_kac_numerator(long p, long pprime, long ell) {
  return Expr::leaf("WKnum" + triple(p, pprime, ell),
                    [=](const Exponent& t) { return qsv::weyl_kac_numerator(p, pprime, ell, t); });
}

Expr weyl_kac_denominator() {
  return Expr::leaf("WKden", [](const Exponent& t) { return qsv::weyl_kac_denominator(t); });
}

Expr character(long p, long pprime, long ell) {
  return Expr::leaf("chi" + triple(p, pprime, ell),
                    [=](const Exponent& t) { return qsv::character(p, pprime, ell, t); });
}

Expr character_at(long p, long pprime, long ell, const ThetaArg& z0) {
  check_admissible(p, pprime, ell);
  if (z0.has_z()) throw InvalidArgument("character_at needs a z-free point");
  const long eps = ell % 2;
  const ThetaBase base(2 * p * pprime);
  const ThetaArg w = z0.pow(-pprime);
  Expr bracket = j(ThetaArg(-1, p * (ell + 1) + p * pprime) * w, base) -
                 z0.pow(ell + 1).expr() * j(ThetaArg(-1, -p * (ell + 1) + p * pprime) * w, base);
  Exponent lead = character_shift(p, pprime, ell);
  return z0.pow((eps - ell) / 2).expr() * qpow(lead) * bracket / j(z0, ThetaBase(1));
}

}  // namespace ex

}  // namespace qsv

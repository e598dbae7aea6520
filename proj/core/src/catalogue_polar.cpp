#include "catalogue.hpp"

namespace qsv::catalogue {

namespace {

const std::vector<std::pair<long, long>> kGrid = {{2, 1}, {3, 1}, {3, 2}, {5, 1}, {5, 2}};

long binom2(long n) { return n * (n - 1) / 2; }

Exponent two_var_order(long p) { return p == 5 ? 40 : 60; }

/// j(z; q), the Weyl-Kac denominator up to a monomial.
Expr jz() { return ex::j(ThetaArg(1, 0, 1), 1); }

/// (q)^3 chi_ell j(z; q) = z^{1/2} q^{-1/8} (q)^3 times the Weyl-Kac numerator.
Expr cleared_character(long p, long pprime, long ell) {
  return J(1).pow(3) * mono(1, exponent(-1, 8), exponent(1, 2)) * ex::weyl_kac_numerator(p, pprime, ell);
}

/// j(w; B) m(x, w2; B).
Expr jmw(const ThetaArg& w, const ThetaArg& x, const ThetaArg& w2, long base) { return ex::jm(w, x, w2, base); }

/// j(-q^{mp'+pk}; q^{2pp'}) - q^{mp'-mk} j(-q^{-mp'+pk}; q^{2pp'}).
Expr theta_pair(long p, long pprime, long m, long k) {
  return jm(m * pprime + p * k, 2 * p * pprime) - qpow(m * pprime - m * k) * jm(-m * pprime + p * k, 2 * p * pprime);
}

std::vector<std::pair<std::string, std::string>> grid_params(long p, long j, long r) {
  return {{"p", str(p)}, {"j", str(j)}, {"r", str(r)}};
}

IdentityCheck two_variable(std::string id, std::string anchor, Expr lhs, Expr rhs, Exponent order, Expr normalizer,
                           std::vector<std::pair<std::string, std::string>> params, std::vector<std::string> tags,
                           std::string cleared = "(q)_inf^3 j(z;q)") {
  IdentityCheck c = make(std::move(id), std::move(anchor), std::move(lhs), std::move(rhs), std::move(order),
                         std::move(params), std::move(tags));
  c.normalizer = std::move(normalizer);
  c.cleared_by = std::move(cleared);
  return c;
}

/// The polar part of the odd-spin decomposition times (q)^3.
Expr odd_polar(long p, long j, long r) {
  const long pp = 2 * p + j;
  const long B = 2 * p * j;
  Expr total;
  for (long s = 0; s < j; ++s) {
    const ThetaArg w(-1, p * (j - 2 * s - 1), j);
    const ThetaArg w_flip(-1, p * (j + 2 * s + 1), -j);
    Expr inner;
    for (long m = 1; m <= p - 1; ++m) {
      Expr appell = qpow(m * (s + 1) - p * (2 * s + 1)) * jmw(w, ThetaArg(-1, j * m - p * (2 * s + 1)), w_flip, B) +
                    qpow(-m * s) * jmw(w, ThetaArg(-1, j * m + p * (2 * s + 1)), w, B);
      inner = inner + sign_pow(m) * qpow(binom2(m + 1) + m * (r - p)) * theta_pair(p, pp, m, 2 * r + 2) * appell;
    }
    total = total + qpow(binom2(p) - p * (r - s)) * mono(1, 0, exponent(-(2 * s + 1), 2)) * inner;
  }
  return sign_pow(p) * qpow(exponent(-1, 8) + exponent(p * (2 * r + 2) * (2 * r + 2), 4 * pp)) * total;
}

Expr odd_normalizer(long p, long pp, long r) {
  return mono(1, exponent(1, 8) - exponent(p * (2 * r + 2) * (2 * r + 2), 4 * pp), exponent(1, 2));
}

void add_odd_spin(Checks& out) {
  for (auto [p, j] : kGrid) {
    const long pp = 2 * p + j;
    for (long r = 0; 2 * r + 1 <= pp - 2; ++r) {
      Expr finite;
      for (long s = 0; s < j; ++s) {
        finite = finite + mono(1, exponent(p * (2 * s + 1) * (2 * s + 1), 4 * j), exponent(-(2 * s + 1), 2)) *
                              cq3_plain(p, pp, 2 * s + 1, 2 * r + 1) *
                              ex::j(ThetaArg(-1, p * (j - 2 * s - 1), j), 2 * p * j);
      }
      const std::string suffix = "p=" + str(p) + ",j=" + str(j) + ",r=" + str(r);
      out.push_back(two_variable("thm:generalPolarFiniteOddSpin:" + suffix, "theorem:generalPolarFiniteOddSpin",
                                 cleared_character(p, pp, 2 * r + 1), jz() * (finite + odd_polar(p, j, r)),
                                 two_var_order(p), odd_normalizer(p, pp, r), grid_params(p, j, r),
                                 {"polar", "new"}));
    }
  }
}

void add_odd_spin_1p(Checks& out) {
  for (long p : {2L, 3L, 5L}) {
    const long pp = 2 * p + 1;
    const ThetaArg mz(-1, 0, 1);
    for (long r = 0; 2 * r + 1 <= pp - 2; ++r) {
      Expr inner;
      for (long m = 1; m <= p - 1; ++m) {
        Expr appell = qpow(m - p) * jmw(mz, ThetaArg(-1, m - p), ThetaArg(-1, 2 * p, -1), 2 * p) +
                      jmw(mz, ThetaArg(-1, m + p), mz, 2 * p);
        inner = inner + sign_pow(m) * qpow(binom2(m + 1) + m * (r - p)) * theta_pair(p, pp, m, 2 * r + 2) * appell;
      }
      Expr polar = sign_pow(p) * qpow(exponent(-1, 8) + exponent(p * (2 * r + 2) * (2 * r + 2), 4 * pp)) *
                   qpow(binom2(p) - p * r) * mono(1, 0, exponent(-1, 2)) * inner;
      Expr finite = mono(1, exponent(p, 4), exponent(-1, 2)) * cq3_plain(p, pp, 1, 2 * r + 1) * ex::j(mz, 2 * p);
      out.push_back(two_variable("cor:generalPolarFiniteOddSpin1p:p=" + str(p) + ",r=" + str(r),
                                 "corollary:generalPolarFiniteOddSpin1p", cleared_character(p, pp, 2 * r + 1),
                                 jz() * (finite + polar), two_var_order(p), odd_normalizer(p, pp, r),
                                 grid_params(p, 1, r), {"polar", "new"}));
    }
  }
}

void add_even_spin(Checks& out) {
  for (auto [p, j] : kGrid) {
    const long pp = 2 * p + j;
    const long B = 2 * p * j;
    for (long r = 0; 2 * r <= pp - 2; ++r) {
      Expr finite;
      Expr polar;
      for (long s = 0; s < j; ++s) {
        const ThetaArg w(-1, p * (j - 2 * s), j);
        const ThetaArg w_flip(-1, p * (j + 2 * s), -j);
        finite = finite + mono(1, exponent(p * s * s, j), -s) * cq3_plain(p, pp, 2 * s, 2 * r) * ex::j(w, B);
        Expr inner;
        for (long m = 1; m <= p - 1; ++m) {
          Expr appell = qpow(m * s - 2 * p * s) * jmw(w, ThetaArg(-1, j * m - 2 * p * s), w_flip, B) +
                        qpow(-m * s) * jmw(w, ThetaArg(-1, j * m + 2 * p * s), w, B);
          inner = inner + sign_pow(m) * qpow(binom2(m + 1) + m * (r - p)) * theta_pair(p, pp, m, 2 * r + 1) * appell;
        }
        polar = polar + qpow(binom2(p) - p * (r - s)) * mono(1, 0, -s) * inner;
      }
      polar = sign_pow(p) * qpow(exponent(-1, 8) + exponent(p * (2 * r + 1) * (2 * r + 1), 4 * pp)) * polar;
      Expr normalizer = qpow(exponent(1, 8) - exponent(p * (2 * r + 1) * (2 * r + 1), 4 * pp));
      out.push_back(two_variable("thm:generalPolarFiniteEvenSpin:p=" + str(p) + ",j=" + str(j) + ",r=" + str(r),
                                 "theorem:generalPolarFiniteEvenSpin", cleared_character(p, pp, 2 * r),
                                 jz() * (finite + polar), two_var_order(p), normalizer, grid_params(p, j, r),
                                 {"polar"}));
    }
  }
}

/// sum_t q^{pjt^2+p(2s+1)t} z^{-jt} sum_{i=1}^{t} q^{-pji(i-1)-p(2s+1)i} (q^{m(ji+s-j+1)} - q^{-m(ji+s)}),
/// with the convention sum_{i=1}^{t} = -sum_{i=t+1}^{0} for t < 0.
QZSeries double_sum(long p, long j, long s, long m, const Exponent& trunc) {
  SeriesBuilder out(trunc);
  auto term_exp = [&](long t, long i) { return p * j * t * t + p * (2 * s + 1) * t - p * j * i * (i - 1) - p * (2 * s + 1) * i; };
  for (int dir : {1, -1}) {
    for (long t = dir == 1 ? 1 : -1;; t += dir) {
      const long lo = dir == 1 ? 1 : t + 1;
      const long hi = dir == 1 ? t : 0;
      const long sign = dir == 1 ? 1 : -1;
      bool any = false;
      for (long i = lo; i <= hi; ++i) {
        const long e = term_exp(t, i);
        const Exponent a = e + m * (j * i + s - j + 1);
        const Exponent b = e - m * (j * i + s);
        if (a < trunc) {
          out.add(sign, a, -j * t);
          any = true;
        }
        if (b < trunc) {
          out.add(-sign, b, -j * t);
          any = true;
        }
      }
      // Both endpoint rows grow monotonically in |t| since m < p.
      if (!any) break;
    }
  }
  return std::move(out).build();
}

Expr double_sum_expr(long p, long j, long s, long m) {
  return Expr::leaf("S(" + str(p) + "," + str(j) + "," + str(s) + "," + str(m) + ")",
                    [=](const Exponent& t) { return double_sum(p, j, s, m, t); });
}

void add_pre_appell(Checks& out) {
  for (auto [p, j] : kGrid) {
    const long pp = 2 * p + j;
    for (long r = 0; 2 * r + 1 <= pp - 2; ++r) {
      Expr finite;
      Expr polar;
      for (long s = 0; s < j; ++s) {
        finite = finite + mono(1, exponent(p * (2 * s + 1) * (2 * s + 1), 4 * j), exponent(-(2 * s + 1), 2)) *
                              cq3_plain(p, pp, 2 * s + 1, 2 * r + 1) *
                              ex::j(ThetaArg(-1, p * (2 * s + 1 + j), -j), 2 * p * j);
        Expr inner;
        for (long m = 1; m <= p - 1; ++m) {
          inner = inner + sign_pow(m) * qpow(binom2(m + 1) + m * (r - p)) * theta_pair(p, pp, m, 2 * r + 2) *
                              double_sum_expr(p, j, s, m);
        }
        polar = polar + qpow(binom2(p + 1) - p * (r + 1 - s)) * mono(1, 0, exponent(-(2 * s + 1), 2)) * inner;
      }
      polar = sign_pow(p) * qpow(exponent(-1, 8) + exponent(p * (2 * r + 2) * (2 * r + 2), 4 * pp)) * polar;
      out.push_back(two_variable("prop:polarFinitePreAppell:p=" + str(p) + ",j=" + str(j) + ",r=" + str(r),
                                 "proposition:polarFinitePreAppell", cleared_character(p, pp, 2 * r + 1),
                                 jz() * (finite + polar), two_var_order(p), odd_normalizer(p, pp, r),
                                 grid_params(p, j, r), {"polar"}));
    }
  }
}

void add_init_sum(Checks& out) {
  for (auto [p, j] : kGrid) {
    const long B = 2 * p * j;
    for (long s = 0; s < j; ++s) {
      const ThetaArg w(-1, p * (j - 2 * s - 1), j);
      for (long m = 1; m <= p - 1; ++m) {
        Expr rhs = -(qpow(-m * (j - s - 1)) * jmw(w, ThetaArg(-1, -j * m + p * (2 * s + 1)), w, B)) +
                   qpow(-m * s) * jmw(w, ThetaArg(-1, j * m + p * (2 * s + 1)), w, B);
        IdentityCheck c = make("prop:initSumOver_i_tPreAppellFinal:p=" + str(p) + ",j=" + str(j) + ",s=" + str(s) +
                                   ",m=" + str(m),
                               "proposition:initSumOver_i_tPreAppellFinal", double_sum_expr(p, j, s, m), rhs,
                               two_var_order(p), {{"p", str(p)}, {"j", str(j)}, {"s", str(s)}, {"m", str(m)}},
                               {"polar"});
        out.push_back(std::move(c));
      }
    }
  }
}

void add_polar_23(Checks& out) {
  const ThetaArg w1(-1, 3, 2);
  const ThetaArg w3(-1, -3, 2);
  const ThetaArg w3b(-1, 9, 2);
  auto jm1 = [&](long x) { return jmw(w1, ThetaArg(-1, x), w1, 12); };
  auto jm3 = [&](long x) { return jmw(w3, ThetaArg(-1, x), w3b, 12); };
  for (long r = 0; r <= 2; ++r) {
    const Expr a = jj16_other(r);
    const Expr b = jj16(r);
    Expr finite = mono(1, 0, exponent(-1, 2)) * cq3(3, 8, 1, 2 * r + 1) * ex::j(w1, 12) +
                  mono(1, 0, exponent(-3, 2)) * cq3(3, 8, 3, 2 * r + 1) * ex::j(w3, 12);
    Expr polar1 = -(qpow(1 - 2 * r) * a * (-(qpow(-1) * jm1(1)) + jm1(5))) +
                  qpow(-r) * b * (-(qpow(-2) * jm1(-1)) + jm1(7));
    Expr polar3 = -(qpow(4 - 2 * r) * a * (-jm3(7) + qpow(-1) * jm3(11))) +
                  qpow(3 - r) * b * (-jm3(5) + qpow(-2) * jm3(13));
    Expr rhs = jz() * (finite - mono(1, 0, exponent(-1, 2)) * polar1 - mono(1, 0, exponent(-3, 2)) * polar3);
    Expr lhs = qpow(exponent(1, 8) - exponent(3 * (r + 1) * (r + 1), 8)) * cleared_character(3, 8, 2 * r + 1);
    out.push_back(two_variable("prop:polarFinite23OddSpin:r=" + str(r), "proposition:polarFinite23OddSpin", lhs, rhs,
                               60, mono(1, 0, exponent(1, 2)), {{"r", str(r)}}, {"polar"}));
  }
}

void add_limit_lemmas(Checks& out) {
  const ThetaArg one_arg(1, 0);
  const ThetaArg base_arg(1, 12);
  auto lim = [&](long x) { return jmw(one_arg, ThetaArg(-1, x), base_arg, 12); };
  const Expr value = qpow(-1) * J(1).pow(2) * J(4) * J(6).pow(2) / (J(2).pow(2) * J(3));
  const std::vector<std::string> tags = {"polar", "limit"};
  const std::string m1 = "lemma:polarFinite23m1AppellVanish";
  const std::string m3 = "lemma:polarFinite23m3AppellVanish";
  out.push_back(make(m1 + ":display=1", m1, -lim(7) + qpow(-1) * lim(11), -value, 200, {{"z", "iq^{3/2}"}}, tags));
  out.push_back(make(m1 + ":display=2", m1, -lim(5) + qpow(-2) * lim(13), -value, 200, {{"z", "iq^{3/2}"}}, tags));
  out.push_back(make(m3 + ":display=1", m3, -(qpow(-1) * lim(1)) + lim(5), value, 200, {{"z", "iq^{-3/2}"}}, tags));
  out.push_back(make(m3 + ":display=2", m3, -(qpow(-2) * lim(-1)) + lim(7), value, 200, {{"z", "iq^{-3/2}"}}, tags));
}

}  // namespace

void add_polar(Checks& out) {
  add_odd_spin(out);
  add_odd_spin_1p(out);
  add_even_spin(out);
  add_pre_appell(out);
  add_init_sum(out);
  add_polar_23(out);
  add_limit_lemmas(out);
}

}  // namespace qsv::catalogue

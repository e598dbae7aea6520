#include "catalogue.hpp"

namespace qsv::catalogue {

namespace {

const std::vector<std::string> kNew = {"string", "new"};
const std::vector<std::string> kPrior = {"string"};
const std::vector<std::string> kProof = {"string", "proof-chain"};

Expr one() { return Expr::constant(1); }
Expr J13() { return J(1).pow(3); }

std::vector<std::pair<std::string, std::string>> rp(long r) { return {{"r", str(r)}}; }

/// j(-q^a; q^base) - q^b j(-q^c; q^base).
Expr pair(long a, long b, long c, long base) { return jm(a, base) - qpow(b) * jm(c, base); }

void add_level_half(Checks& out) {
  const Expr a2 = mock_at(MockName::A2, -1, 1);
  const Expr mu2 = ex::mock(MockName::mu2);
  const ThetaBase neg5(5, Unit::minus_one());
  const Expr eta_quot = J(1).pow(4) * J(4) / J(2).pow(4);
  const Expr cube_quot = J13() / (J(2) * J(4));
  for (long r = 0; r <= 1; ++r) {
    const long s = sign_pow(r);
    out.push_back(make("cor:pP25m0:r=" + str(r) + ":A-form", "equation:mockThetaConj2502r-2ndA", cq3(2, 5, 0, 2 * r),
                       s * eta_quot * jq(4 * r + 12, 20) - 2 * qpow(-r) * jq(1 + 2 * r, 5) * a2, 200, rp(r), kPrior));
    out.push_back(make("cor:pP25m0:r=" + str(r) + ":mu-form", "equation:mockThetaConj2502r-2ndmu",
                       cq3(2, 5, 0, 2 * r),
                       s * qpow(-r) * half() * cube_quot * ex::j(ThetaArg(-1, 1 + 2 * r), neg5) +
                           qpow(-r) * half() * jq(1 + 2 * r, 5) * mu2,
                       200, rp(r), kPrior));
    const std::string anchor = "corollary:newMockThetaIdentitiespP25m1ell2rPlus1";
    out.push_back(make("cor:pP25m1:r=" + str(r) + ":A-form", anchor, cq3(2, 5, 1, 2 * r + 1),
                       s * qpow(1 - 2 * r) * eta_quot * jq(4 * r + 4, 20) +
                           qpow(-r) * jq(2 + 2 * r, 5) * (one() + 2 * a2),
                       200, rp(r), kNew));
    out.push_back(make("cor:pP25m1:r=" + str(r) + ":mu-form", anchor, cq3(2, 5, 1, 2 * r + 1),
                       s * qpow(-r) * half() * cube_quot * ex::j(ThetaArg(1, 2 * r + 2), neg5) +
                           qpow(-r) * jq(2 + 2 * r, 5) * (one() - half() * mu2),
                       200, rp(r), kNew));
  }
}

void add_level_third(Checks& out) {
  const Expr w = mock_at(MockName::omega3, -1, 1);
  const Expr f = mock_at(MockName::f3, 1, 2);
  const Expr jneg1 = ex::j(ThetaArg(-1, 0), 1);
  for (long r = 0; r <= 2; ++r) {
    const long s = sign_pow(r);
    Expr m0 = s * qpow(-r) * J13() / J(2) * jm(1 + 2 * r, 14) * jq(16 + 4 * r, 28) / (jneg1 * J(28)) -
              qpow(2 - 2 * r) * jq(6 - 2 * r, 14) * jq(26 - 4 * r, 28) / J(28) * w +
              qpow(-r) * half() * jq(1 + 2 * r, 14) * jq(16 + 4 * r, 28) / J(28) * f;
    out.push_back(make("thm:pP37m0ell2r:r=" + str(r), "theorem:newMockThetaIdentitiespP37m0ell2r",
                       cq3(3, 7, 0, 2 * r), m0, 200, rp(r), kPrior));
    Expr m1 = s * qpow(1 - 2 * r) * J13() / J(2) * jm(5 - 2 * r, 14) * jq(24 - 4 * r, 28) / (jneg1 * J(28)) +
              qpow(-r) * jq(2 + 2 * r, 14) * jq(18 + 4 * r, 28) / J(28) * (one() - qpow(1) * w) -
              qpow(1 - 2 * r) * jq(9 + 2 * r, 14) * jq(4 + 4 * r, 28) / J(28) * (one() - half() * f);
    out.push_back(make("cor:pP37m1ell2rPlus1:r=" + str(r), "corollary:newMockThetaIdentitiespP37m1ell2rPlus1",
                       cq3(3, 7, 1, 2 * r + 1), m1, 200, rp(r), kNew));
  }
}

void add_level_two_thirds_even(Checks& out) {
  const Expr w = mock_at(MockName::omega3, -1, 2);
  const Expr f = mock_at(MockName::f3, 1, 4);
  for (long r = 0; r <= 3; ++r) {
    const long s = sign_pow((r + 1) / 2);
    const Expr a = jq(7 - 2 * r, 16) * jq(30 - 4 * r, 32) / J(32);
    const Expr b = jq(1 + 2 * r, 16) * jq(18 + 4 * r, 32) / J(32);
    Expr m0 = s * qpow(-r) * half() * J(1).pow(2) * J(2) / (J(4).pow(2) * J(8)) * jm(7 - 2 * r, 16) *
                  jq(1 + 2 * r, 8) -
              qpow(3 - 2 * r) * a * w + qpow(-r) * b * half() * f;
    out.push_back(make("thm:pP38m0ell2r:r=" + str(r), "theorem:newMockThetaIdentitiespP38m0ell2r",
                       cq3(3, 8, 0, 2 * r), m0, 200, rp(r), kPrior));
    Expr m2 = s * qpow(3 - 2 * r) * half() * J(1).pow(2) * J(2) / (J(4).pow(2) * J(32)) * jq(2 + 4 * r, 32) *
                  jq(7 - 2 * r, 16) -
              qpow(3 - 2 * r) * a * (one() - half() * f) + qpow(1 - r) * b * (one() - qpow(2) * w);
    out.push_back(make("thm:pP38m2ell2r:r=" + str(r), "theorem:newMockThetaIdentitiespP38m2ell2r",
                       cq3(3, 8, 2, 2 * r), m2, 200, rp(r), kPrior));
  }
}

Expr theta38(long r) {
  const Expr t = J(3) * J(4).pow(2) / (J(2) * J(12));
  if (r == 0) return t * jm(6, 16);
  if (r == 1) return 3 * J(3) * J(12).pow(3) / J(6).pow(2);
  return qpow(-2) * t * jm(2, 16);
}

Expr psi38(long r) {
  if (r == 0) return quarter() * J(1).pow(2) * J(2) / J(4);
  if (r == 1) return -(half() * qpow(-1) * J13() * J(4) / J(2).pow(2));
  return quarter() * qpow(-3) * J(1).pow(2) * J(2) / J(4);
}

void add_level_two_thirds_odd(Checks& out) {
  const Expr psi = mock_at(MockName::psi3, -1, 1);
  const Expr chi = ex::mock(MockName::chi3);
  const Expr f = ex::mock(MockName::f3);
  for (long r = 0; r <= 2; ++r) {
    const Expr a = jj16_other(r);
    const Expr b = jj16(r);
    out.push_back(make("thm:pP38m1ell2rPlus1:r=" + str(r), "theorem:newMockThetaIdentitiespP38m1ell2rPlus1",
                       cq3(3, 8, 1, 2 * r + 1),
                       theta38(r) - qpow(1 - 2 * r) * a * (-psi) + qpow(-r) * b * (one() - chi), 200, rp(r), kNew));
    out.push_back(make("cor:pP38m3ell2rPlus1:r=" + str(r), "corollary:newMockThetaIdentitiespP38m3ell2rPlus1",
                       cq3(3, 8, 3, 2 * r + 1),
                       qpow(6 - 3 * r) * theta38(2 - r) -
                           qpow(3 - 2 * r) * a * (one() - qpow(1) * (one() - chi)) +
                           qpow(3 - r) * b * (qpow(-2) + psi),
                       200, rp(r), kNew));
    out.push_back(make("thm:pP38m1ell2rPlus1Alt:r=" + str(r), "theorem:newMockThetaIdentitiespP38m1ell2rPlus1Alt",
                       cq3(3, 8, 1, 2 * r + 1),
                       psi38(r) - qpow(1 - 2 * r) * a * quarter() * f + qpow(-r) * b * (one() - quarter() * f), 200,
                       rp(r), kNew));
    out.push_back(make("cor:pP38m3ell2rPlus1Alt:r=" + str(r),
                       "corollary:newMockThetaIdentitiespP38m3ell2rPlus1Alt", cq3(3, 8, 3, 2 * r + 1),
                       qpow(6 - 3 * r) * psi38(2 - r) + qpow(1 - r) * b * (one() - quarter() * qpow(2) * f) -
                           qpow(3 - 2 * r) * a * (one() - qpow(1) * (one() - quarter() * f)),
                       200, rp(r), kNew));
  }
}

void add_level_fifth(Checks& out) {
  const Expr phi = qpow(1) * mock_at(MockName::phi10, -1, 1);
  const Expr chi = mock_at(MockName::chi10, 1, 2);
  const Expr psi = mock_at(MockName::psi10, -1, 1);
  const Expr X = mock_at(MockName::X10, 1, 2);
  for (long r = 0; r <= 4; ++r) {
    Expr m0 = -(qpow(r * r - 3 * r + 1) * J(1, 2) * jq(4 + 8 * r, 22)) -
              qpow(6 - 4 * r) * pair(16 + 10 * r, 4 + 8 * r, 6 - 10 * r, 110) * phi +
              qpow(3 - 3 * r) * pair(27 + 10 * r, 3 + 6 * r, 17 - 10 * r, 110) * chi -
              qpow(1 - 2 * r) * pair(38 + 10 * r, 2 + 4 * r, 28 - 10 * r, 110) * (-psi) +
              qpow(-r) * pair(49 + 10 * r, 1 + 2 * r, 39 - 10 * r, 110) * X;
    out.push_back(make("thm:pP511m0ell2r:r=" + str(r), "theorem:newMockThetaIdentitiespP511m0ell2r",
                       cq3(5, 11, 0, 2 * r), m0, 40, rp(r), kPrior));
    Expr m1 = qpow((r - 1) * (r - 1)) * J(1, 2) * jq(8 * (r + 1), 22) -
              qpow(6 - 4 * r) * pair(21 + 10 * r, 8 + 8 * r, 1 - 10 * r, 110) * (one() - X) +
              qpow(3 - 3 * r) * pair(32 + 10 * r, 6 + 6 * r, 12 - 10 * r, 110) * (one() + psi) -
              qpow(1 - 2 * r) * pair(43 + 10 * r, 4 + 4 * r, 23 - 10 * r, 110) * (one() - chi) +
              qpow(-r) * pair(54 + 10 * r, 2 + 2 * r, 34 - 10 * r, 110) * (one() - phi);
    out.push_back(make("cor:pP511m1ell2rPlus1:r=" + str(r), "corollary:newMockThetaIdentitiespP511m1ell2rPlus1",
                       cq3(5, 11, 1, 2 * r + 1), m1, 40, rp(r), kNew));
  }
}

Expr theta512(long r) {
  if (r == 1) return -(half() * qpow(-1) * J(1, 2) * J(1));
  if (r == 3) return -(half() * qpow(-6) * J(1, 2) * J(1));
  return Expr();
}

void add_level_two_fifths(Checks& out) {
  const Expr phi2 = qpow(2) * mock_at(MockName::phi10, -1, 2);
  const Expr chi4 = mock_at(MockName::chi10, 1, 4);
  const Expr psi2 = mock_at(MockName::psi10, -1, 2);
  const Expr X4 = mock_at(MockName::X10, 1, 4);
  for (long r = 0; r <= 5; ++r) {
    const Expr p1 = pair(17 + 10 * r, 4 + 8 * r, 7 - 10 * r, 120);
    const Expr p2 = pair(29 + 10 * r, 3 + 6 * r, 19 - 10 * r, 120);
    const Expr p3 = pair(41 + 10 * r, 2 + 4 * r, 31 - 10 * r, 120);
    const Expr p4 = pair(53 + 10 * r, 1 + 2 * r, 43 - 10 * r, 120);
    const Expr lead = jq(2 + 4 * r, 12) * J(1) / J(4);
    Expr m0 = -(qpow(exponent(r * r - 5 * r, 2) + 1) * lead * jm(1 + 2 * r, 8)) - qpow(6 - 4 * r) * p1 * phi2 +
              qpow(3 - 3 * r) * p2 * chi4 - qpow(1 - 2 * r) * p3 * (-psi2) + qpow(-r) * p4 * X4;
    out.push_back(make("thm:pP512m0ell2r:r=" + str(r), "theorem:newMockThetaIdentitiespP512m0ell2r",
                       cq3(5, 12, 0, 2 * r), m0, 40, rp(r), kPrior));
    Expr m2 = qpow(exponent(r * r - 3 * r, 2) + 3) * lead * jm(5 + 2 * r, 8) -
              qpow(10 - 4 * r) * p1 * (one() - X4) + qpow(6 - 3 * r) * p2 * (one() + psi2) -
              qpow(3 - 2 * r) * p3 * (one() - chi4) + qpow(1 - r) * p4 * (one() - phi2);
    out.push_back(make("thm:pP512m2ell2r:r=" + str(r), "theorem:newMockThetaIdentitiespP512m2ell2r",
                       cq3(5, 12, 2, 2 * r), m2, 40, rp(r), kPrior));
  }
  const Expr chi = ex::mock(MockName::chi10);
  const Expr X = ex::mock(MockName::X10);
  for (long r = 0; r <= 4; ++r) {
    const Expr p1 = pair(22 + 10 * r, 8 + 8 * r, 2 - 10 * r, 120);
    const Expr p2 = pair(34 + 10 * r, 6 + 6 * r, 14 - 10 * r, 120);
    const Expr p3 = pair(46 + 10 * r, 4 + 4 * r, 26 - 10 * r, 120);
    const Expr p4 = pair(58 + 10 * r, 2 + 2 * r, 38 - 10 * r, 120);
    Expr m1 = theta512(r) - qpow(6 - 4 * r) * p1 * half() * chi + qpow(3 - 3 * r) * p2 * half() * X -
              qpow(1 - 2 * r) * p3 * (one() - half() * X) + qpow(-r) * p4 * (one() - half() * chi);
    out.push_back(make("thm:pP512m1ell2rPlus1:r=" + str(r), "theorem:newMockThetaIdentitiespP512m1ell2rPlus1",
                       cq3(5, 12, 1, 2 * r + 1), m1, 40, rp(r), kNew));
    Expr m3 = qpow(15 - 5 * r) * theta512(4 - r) - qpow(11 - 4 * r) * p1 * (qpow(-1) - one() + half() * chi) +
              qpow(8 - 3 * r) * p2 * (qpow(-2) - one() + half() * X) -
              qpow(6 - 2 * r) * p3 * (qpow(-3) - half() * X) + qpow(5 - r) * p4 * (qpow(-4) - half() * chi);
    out.push_back(make("cor:pP512m3ell2rPlus1:r=" + str(r), "corollary:newMockThetaIdentitiespP512m3ell2rPlus1",
                       cq3(5, 12, 3, 2 * r + 1), m3, 40, rp(r), kNew));
  }
}

void add_kac_peterson(Checks& out) {
  const Expr eta = ex::eta();
  auto eta_at = [&](long k) { return eta.substitute_q(Unit::one(), k); };
  const std::vector<std::string> tags = {"string", "kac-peterson"};
  out.push_back(make("kp:C1:0,0", "Kac-Peterson C^1_{0,0}", ex::string_fn({1, 3, 0, 0}), one() / eta, 200, {}, tags));
  out.push_back(make("kp:C2:1,1", "Kac-Peterson C^2_{1,1}", ex::string_fn({1, 4, 1, 1}), eta_at(2) / eta.pow(2), 200,
                     {}, tags));
  out.push_back(make("kp:C3:1,1", "Kac-Peterson C^3_{1,1}", ex::string_fn({1, 5, 1, 1}),
                     qpow(exponent(3, 40)) * J(6, 15) / eta.pow(2), 200, {}, tags));
  out.push_back(make("kp:C4:2,0", "Kac-Peterson C^4_{2,0}", ex::string_fn({1, 6, 2, 0}),
                     eta_at(12).pow(2) / (eta.pow(2) * eta_at(6)), 200, {}, tags));
}

void add_integer_level(Checks& out) {
  for (long level : {1L, 2L}) {
    long k = 0;
    for (const auto& inst : integer_level_symmetry_instances(level)) {
      out.push_back(make("intlevel:N=" + str(level) + ":" + inst.identity + ":" + inst.specialization + "#" + str(++k),
                         "eq:inglevelperiod", inst.lhs, inst.rhs, 200, {{"N", str(level)}}, {"string"}));
    }
  }
}

void add_quasi_periodicity(Checks& out) {
  for (auto [p, j] : std::vector<std::pair<long, long>>{{2, 1}, {3, 2}, {5, 2}}) {
    const long pp = 2 * p + j;
    for (long s = 0; s < j; ++s) {
      for (long r = 0; 2 * r + 1 <= pp - 2; ++r) {
        for (long t = -3; t <= 3; ++t) {
          if (t == 0) continue;
          Expr lhs = ex::string_fn({p, pp, 2 * j * t + 2 * s + 1, 2 * r + 1}) - ex::string_fn({p, pp, 2 * s + 1, 2 * r + 1});
          out.push_back(make("thm:generalQuasiPeriodicityOddSpin:p=" + str(p) + ",j=" + str(j) + ",s=" + str(s) +
                                 ",r=" + str(r) + ",t=" + str(t),
                             "theorem:generalQuasiPeriodicityOddSpin", lhs,
                             ex::quasi_periodic_shift(p, j, s, r, t) / J13(), p == 5 ? 80 : 200,
                             {{"p", str(p)}, {"j", str(j)}, {"s", str(s)}, {"r", str(r)}, {"t", str(t)}},
                             {"string", "quasi-periodicity"}));
        }
      }
    }
  }
}

void add_cross_spin(Checks& out) {
  for (auto [p, j] : std::vector<std::pair<long, long>>{{2, 1}, {3, 1}, {3, 2}, {5, 1}, {5, 2}}) {
    const long pp = 2 * p + j;
    for (long i = 0; i <= 2; ++i) {
      for (long r = 1; 2 * r - 1 <= pp - 2; ++r) {
        const long other = 2 * p - 2 * r + j - 1;
        if (other < 0 || other > pp - 2) continue;
        Expr lhs = cq3(p, pp, 2 * i - 1, 2 * r - 1) -
                   sign_pow(p + 1) * qpow(p * (i - r) + p * (p - 1) / 2) * cq3(p, pp, 2 * i - 1 - j, other);
        out.push_back(make("thm:crossSpin-j-Odd:p=" + str(p) + ",j=" + str(j) + ",i=" + str(i) + ",r=" + str(r),
                           "theorem:crossSpin-j-Odd", lhs, ex::cross_spin_residual(p, j, i, r), p == 5 ? 40 : 200,
                           {{"p", str(p)}, {"j", str(j)}, {"i", str(i)}, {"r", str(r)}}, {"string", "cross-spin"}));
      }
    }
  }
}

void add_proof_chain(Checks& out) {
  for (long r = 0; r <= 1; ++r) {
    out.push_back(make("eq:master25crossSpin:r=" + str(r), "equation:master25crossSpin", cq3(2, 5, 1, 2 * r + 1),
                       -(qpow(1 - 2 * r) * cq3(2, 5, 0, 2 * (1 - r))) + qpow(-r) * jq(2 * r + 2, 5), 200, rp(r),
                       kProof));
  }
  for (long r = 0; r <= 2; ++r) {
    out.push_back(make("eq:crossSpin23master:r=" + str(r), "equation:crossSpin23master",
                       cq3(3, 8, 3, 2 * r + 1) - qpow(6 - 3 * r) * cq3(3, 8, 1, 2 * (2 - r) + 1),
                       -(qpow(3 - 2 * r) * jq(10 + 2 * r, 16) * jq(4 + 4 * r, 32) / J(32)) + qpow(1 - r) * jj16(r),
                       200, rp(r), kProof));
  }
  // Level 1/2 at the specializations z = -q and z = -q^2.
  for (long k : {1L, 2L}) {
    const ThetaArg z0(-1, k);
    const ThetaArg z0m5 = z0.pow(-5);
    for (long r = 0; r <= 1; ++r) {
      Expr theta = J13() * z0.pow(-r).expr() *
                   (ex::j(ThetaArg(-1, 4 * r + 14) * z0m5, 20) -
                    z0.pow(2 * r + 2).expr() * ex::j(ThetaArg(-1, 6 - 4 * r) * z0m5, 20)) /
                   (ex::j(z0, 1) * ex::j(ThetaArg(-1, 0) * z0, 4));
      Expr appell = qpow(-1) * ex::m(ThetaArg(-1, -1), ThetaArg(-1, 4) * z0.inverse(), 4) +
                    ex::m(ThetaArg(-1, 3), ThetaArg(-1, 0) * z0, 4);
      out.push_back(make("eq:generalMockThetaConjLevel12:z=-q^" + str(k) + ",r=" + str(r),
                         "equation:generalMockThetaConjLevel12", cq3(2, 5, 1, 2 * r + 1),
                         theta + qpow(-r) * jq(2 + 2 * r, 5) * appell, 200, {{"z", "-q^" + str(k)}, {"r", str(r)}},
                         kProof));
    }
  }
  const ThetaArg z37(-1, 2);
  const Expr jneg1 = ex::j(ThetaArg(-1, 0), 1);
  for (long r = 0; r <= 2; ++r) {
    const Expr chi = ex::character_at(3, 7, 2 * r + 1, z37);
    Expr rhs = J13() / J(2) * qpow(exponent(1, 8) - exponent(3 * (r + 1) * (r + 1), 7)) * chi -
               qpow(1 - 2 * r) * jq(5 - 2 * r, 14) * jq(24 - 4 * r, 28) / J(28) *
                   (one() - half() * mock_at(MockName::f3, 1, 2)) +
               qpow(-r) * jq(2 + 2 * r, 14) * jq(18 + 4 * r, 28) / J(28) *
                   (one() - qpow(1) * mock_at(MockName::omega3, -1, 1));
    out.push_back(make("eq:fourierFinal37:r=" + str(r), "equation:fourierFinal37", cq3(3, 7, 1, 2 * r + 1), rhs, 200,
                       rp(r), kProof));
    Expr wk = z37.pow(-r).expr() * qpow(exponent(7, 8) + exponent(3 * (r + 1) * (r + 1), 7)) * jm(5 - 2 * r, 14) *
              jq(24 - 4 * r, 28) / (jneg1 * J(28));
    out.push_back(make("eq:weylKacFinal37:r=" + str(r), "equation:weylKacFinal37", chi, wk, 200, rp(r), kProof));
  }
  for (long r = 0; r <= 2; ++r) {
    const ThetaArg up(Unit::i(), exponent(3, 2));
    const ThetaArg down(Unit::i(), exponent(-3, 2));
    const Expr common = qpow(exponent(-1, 8) + exponent(3 * (r + 1) * (r + 1), 8)) *
                        ex::j(ThetaArg(-1, 3).pow(r + 1), 12) / J(2, 4);
    out.push_back(make("prop:weylKac23ell2rzVal:z=iq^{3/2},r=" + str(r), "proposition:weylKac23ell2rzVal",
                       ex::character_at(3, 8, 2 * r + 1, up),
                       mono(Unit::minus_i().value(), exponent(1, 2)) * up.pow(-r).expr() * common, 200, rp(r),
                       {"string"}));
    out.push_back(make("prop:weylKac23ell2rzVal:z=iq^{-3/2},r=" + str(r), "proposition:weylKac23ell2rzVal",
                       ex::character_at(3, 8, 2 * r + 1, down),
                       -(sign_pow(r) * qpow(-3 * r - 1) * down.pow(-r).expr() * common), 200, rp(r), {"string"}));
  }
}

}  // namespace

void add_string(Checks& out) {
  add_kac_peterson(out);
  add_integer_level(out);
  add_level_half(out);
  add_level_third(out);
  add_level_two_thirds_even(out);
  add_level_two_thirds_odd(out);
  add_level_fifth(out);
  add_level_two_fifths(out);
  add_quasi_periodicity(out);
  add_cross_spin(out);
  add_proof_chain(out);
}

}  // namespace qsv::catalogue

#include <map>

#include "catalogue.hpp"

namespace qsv::catalogue {

namespace {

const std::map<std::string, std::string>& instance_anchors() {
  static const std::map<std::string, std::string> anchors = {
      {"j-elliptic", "equation:j-elliptic"},
      {"j-flip", "equation:j-flip"},
      {"j-dissection", "equation:1.10"},
      {"j-negative-nome", "equation:1.11"},
      {"j-roots-of-unity", "equation:1.12"},
      {"jsplit", "equation:jsplit"},
      {"jsplit-m2", "equation:jsplit-m2"},
      {"quintuple", "equation:quintuple"},
      {"theta-product-H1", "equation:H1Thm1.1"},
      {"triple-product", "equation:JTPid"},
      {"weierstrass", "equation:Weierstrauss"},
      {"rearrangement", "product rearrangements"},
      {"mxqz-fnq-z", "equation:mxqz-fnq-z"},
      {"mxqz-flip", "equation:mxqz-flip"},
      {"mxqz-fnq-x", "equation:mxqz-fnq-x"},
      {"mxqz-flip-xz", "corollary:mxqz-flip-xz"},
      {"changing-z", "theorem:changing-z-theorem"},
      {"appell-j-product", "equation:m-def"},
      {"msplit-m2", "corollary:msplit-m2"},
      {"mockIdentity-f(q)psi(q)", "equation:mockIdentity-f(q)psi(q)"},
      {"mockIdentity-chi(q)f(q)", "equation:mockIdentity-chi(q)f(q)"},
      {"mockIdentity-chi(q)psi(q)", "equation:mockIdentity-chi(q)psi(q)"},
      {"altAppellForm3rd-chi", "equation:altAppellForm3rd-chi"},
      {"altAppellForm3rd-psi", "equation:altAppellForm3rd-psi"},
      {"alternateAppellFormsLvl23FirstTwoPairs", "proposition:alternateAppellFormsLvl23FirstTwoPairs"},
      {"alternateAppellFormsLvl23FirstTwoPairsAlt", "proposition:alternateAppellFormsLvl23FirstTwoPairsAlt"},
      {"alternat3rdAppellFormsLvl23-proof", "proposition:alternat3rdAppellFormsLvl23"},
  };
  return anchors;
}

/// Whether an instance involves z, probed at a low order.
bool is_two_variable(const IdentityInstance& inst) {
  try {
    return !inst.lhs.eval(1).is_one_variable() || !inst.rhs.eval(1).is_one_variable();
  } catch (const std::exception&) {
    return false;
  }
}

void add_instances(Checks& out, const std::string& prefix, const std::vector<IdentityInstance>& insts,
                   const std::vector<std::string>& tags = {}) {
  std::map<std::string, int> seen;
  for (const auto& inst : insts) {
    std::string id = prefix + inst.identity;
    if (!inst.specialization.empty()) id += ":" + inst.specialization;
    if (int n = seen[id]++; n > 0) id += "#" + str(n + 1);
    auto it = instance_anchors().find(inst.identity);
    std::string anchor = it == instance_anchors().end() ? inst.identity : it->second;
    std::vector<std::string> t = tags;
    if (inst.identity.find("-proof") != std::string::npos) t.push_back("proof-chain");
    out.push_back(make(id, anchor, inst.lhs, inst.rhs, is_two_variable(inst) ? 60 : 200, {}, t));
  }
}

void add_mock_forms(Checks& out) {
  const std::map<MockName, std::string> anchors = {
      {MockName::A2, "equation:2nd-A(q)"},       {MockName::mu2, "equation:2nd-mu(q)"},
      {MockName::f3, "equation:3rd-f(q)"},       {MockName::omega3, "equation:3rd-omega(q)"},
      {MockName::psi3, "equation:3rd-psi(q)"},   {MockName::chi3, "equation:3rd-chi(q)"},
      {MockName::f0, "mock theta conjectures f_0"}, {MockName::f1, "mock theta conjectures f_1"},
  };
  for (const auto& [name, anchor] : anchors) {
    out.push_back(make("mock:" + to_string(name) + ":dual-form", anchor, ex::mock(name, MockForm::eulerian),
                       ex::mock(name, MockForm::appell), 200, {{"name", to_string(name)}}, {"mock"}));
  }
  for (MockName name : {MockName::f3, MockName::omega3}) {
    out.push_back(make("mock:" + to_string(name) + ":alt-form", anchors.at(name), ex::mock(name),
                       ex::mock_alt(name), 200, {{"name", to_string(name)}}, {"mock"}));
  }
}

/// The theta side shared by both master propositions.
Expr master_lead(long r) {
  const Expr iq32 = ThetaArg(Unit::i(), Exponent(3, 2)).pow(-r).expr();
  return mono(Unit::minus_i().value(), Exponent(1, 2)) * iq32 * J(1).pow(3) *
         ex::j(ThetaArg(-1, 3).pow(r + 1), 12) / (J(2, 4) * J(6, 12));
}

void add_master_theta(Checks& out) {
  const Expr quot = J(1).pow(2) * J(4) * J(12) / (J(2).pow(2) * J(3));
  const Expr theta38 = J(3) * J(4).pow(2) / (J(2) * J(12));
  for (long r = 0; r <= 2; ++r) {
    Expr f = master_lead(r) + qpow(-r) * jj16(r) * J(3) * J(4).pow(3) / (J(2).pow(2) * J(12)) +
             mono(Unit::minus_i().value(), Exponent(-5, 2)) * quot *
                 (-(qpow(3 - r) * jq(2 + 2 * r, 8) / J(8) * jq(1 - r, 4)));
    Expr value = r == 0   ? jm(6, 16) * theta38
                 : r == 1 ? 3 * J(3) * J(12).pow(3) / J(6).pow(2)
                          : qpow(-2) * jm(2, 16) * theta38;
    out.push_back(make("prop:masterThetaIdentitypP38m1ell2rPlus1:r=" + str(r),
                       "proposition:masterThetaIdentitypP38m1ell2rPlus1", f, value, 200, {{"r", str(r)}}));

    Expr falt = master_lead(r) + quarter() * J(1).pow(3) / J(2).pow(2) * qpow(-r) * jq(2 + 2 * r, 8) / J(8) *
                                     jm(1 - r, 4) +
                ThetaArg(Unit::i(), Exponent(3, 2)).inverse().expr() * qpow(2) * quot *
                    (-(qpow(-r) * jq(2 + 2 * r, 8) / J(8) * jq(1 - r, 4)));
    const Expr base = J(1).pow(2) * J(2) / J(4);
    Expr valt = r == 0   ? quarter() * base
                : r == 1 ? c(GaussianRational(Rational(-1, 2))) * qpow(-1) * J(1).pow(3) * J(4) / J(2).pow(2)
                         : quarter() * qpow(-3) * base;
    out.push_back(make("prop:masterThetaIdentitypP38m1ell2rPlus1Alt:r=" + str(r),
                       "proposition:masterThetaIdentitypP38m1ell2rPlus1Alt", falt, valt, 200, {{"r", str(r)}}));
  }
}

void add_unusual(Checks& out) {
  const Expr a = J(3) * J(4).pow(4) / (J(2).pow(2) * J(12));
  const Expr b = qpow(1) * J(3) * J(12).pow(3) / J(6).pow(2);
  out.push_back(make("lemma:unusualThetaIdentity1", "lemma:unusualThetaIdentity1", a - J(1).pow(3) / J(2, 4), 3 * b,
                     200));
  const Expr target = J(1) * J(4).pow(2) * J(6).pow(7) / (J(2).pow(3) * J(3).pow(2) * J(12).pow(3));
  out.push_back(make("lemma:unusualThetaIdentity1:idLHS", "equation:idLHS", a - b, target, 200, {}, {"proof-chain"}));
  out.push_back(make("lemma:unusualThetaIdentity1:idRHS", "equation:idRHS", 2 * b + J(1).pow(3) * J(4) / J(2).pow(2),
                     target, 200, {}, {"proof-chain"}));
  for (long r = 0; r <= 2; ++r) {
    const Expr first = qpow(1 - 2 * r) * jj16_other(r);
    const Expr second = qpow(-r) * jj16(r);
    const Expr common = qpow(-r) * jq(2 + 2 * r, 8) / J(8);
    out.push_back(make("lemma:unusualThetaIdentity2:r=" + str(r) + ":minus", "lemma:unusualThetaIdentity2",
                       first - second, -(common * jq(1 - r, 4)), 200, {{"r", str(r)}, {"sign", "-"}}));
    out.push_back(make("lemma:unusualThetaIdentity2:r=" + str(r) + ":plus", "lemma:unusualThetaIdentity2",
                       first + second, common * jm(1 - r, 4), 200, {{"r", str(r)}, {"sign", "+"}}));
  }
}

}  // namespace

void add_classical(Checks& out) {
  add_instances(out, "theta:", theta_identity_instances(), {"theta"});
  add_instances(out, "theta:", product_rearrangement_instances(), {"theta"});
  add_instances(out, "appell:", appell_property_instances(), {"appell"});
  add_instances(out, "cor:", msplit_m2_instances(), {"appell"});
  add_mock_forms(out);
  add_instances(out, "prop:", classical_third_order_instances(), {"mock"});
  add_master_theta(out);
  add_unusual(out);
}

}  // namespace qsv::catalogue

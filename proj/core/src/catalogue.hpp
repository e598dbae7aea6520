#pragma once

#include <string>
#include <vector>

#include "qsv/appell.hpp"
#include "qsv/hecke.hpp"
#include "qsv/mock_theta.hpp"
#include "qsv/registry.hpp"

namespace qsv::catalogue {

using Checks = std::vector<IdentityCheck>;

void add_classical(Checks& out);
void add_string(Checks& out);
void add_polar(Checks& out);

inline std::string str(long v) { return std::to_string(v); }

/// j(q^a; q^b).
inline Expr jq(const Exponent& a, const Exponent& b) { return ex::j(ThetaArg(1, a), ThetaBase(b)); }
/// j(-q^a; q^b).
inline Expr jm(const Exponent& a, const Exponent& b) { return ex::j(ThetaArg(-1, a), ThetaBase(b)); }
inline Expr J(const Exponent& a) { return ex::J(a); }
inline Expr J(const Exponent& a, const Exponent& b) { return ex::J(a, b); }
inline Expr c(const GaussianRational& v) { return Expr::constant(v); }
inline Expr half() { return c(GaussianRational(Rational(1, 2))); }
inline Expr quarter() { return c(GaussianRational(Rational(1, 4))); }
/// The constant n/d.
inline Expr cr(long n, long d) { return c(GaussianRational(exponent(n, d))); }
inline int sign_pow(long n) { return n % 2 == 0 ? 1 : -1; }

/// The theta pair j(q^{2+2r};q^16) j(q^{20+4r};q^32) / J_32 of the (3,8) odd-spin family.
inline Expr jj16(long r) { return jq(2 + 2 * r, 16) * jq(20 + 4 * r, 32) / J(32); }
/// Its partner j(q^{6-2r};q^16) j(q^{28-4r};q^32) / J_32.
inline Expr jj16_other(long r) { return jq(6 - 2 * r, 16) * jq(28 - 4 * r, 32) / J(32); }

/// (q)_inf^3 times the normalized string function at (p, p').
inline Expr cq3(long p, long pprime, long m, long ell) { return ex::string_fn_q3(StringFnId{p, pprime, m, ell}); }
/// (q)_inf^3 times the non-normalized string function C.
inline Expr cq3_plain(long p, long pprime, long m, long ell) {
  StringFnId id{p, pprime, m, ell};
  return qpow(s_lambda(id)) * ex::string_fn_q3(id);
}

/// f(sign q^power) for a mock theta function f.
inline Expr mock_at(MockName n, int sign, long power) {
  return ex::mock(n).substitute_q(Unit::sign(sign), power);
}

inline IdentityCheck make(std::string id, std::string anchor, Expr lhs, Expr rhs, Exponent order,
                          std::vector<std::pair<std::string, std::string>> params = {},
                          std::vector<std::string> tags = {}) {
  IdentityCheck c;
  c.id = std::move(id);
  c.anchor = std::move(anchor);
  c.lhs = std::move(lhs);
  c.rhs = std::move(rhs);
  c.default_order = std::move(order);
  c.params = std::move(params);
  c.tags = std::move(tags);
  return c;
}

}  // namespace qsv::catalogue

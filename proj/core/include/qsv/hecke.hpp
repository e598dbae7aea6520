#pragma once

#include <string>
#include <vector>

#include "qsv/expr.hpp"
#include "qsv/theta.hpp"

namespace qsv {

/// Parameters of f_{a,b,c}(x, y; q) with z-free monomial arguments.
struct HeckeParams {
  long a = 1;
  long b = 1;
  long c = 1;
  ThetaArg x;
  ThetaArg y;
};

/// (sum_{r,s>=0} - sum_{r,s<0}) (-1)^{r+s} x^r y^s q^{a binom(r,2) + b r s + c binom(s,2)}.
QZSeries hecke_sum(const HeckeParams& params, const Exponent& trunc, long max_radius = 1000000);

/// Selects the string function with quantum number m and spin ell at
/// admissible level p'/p - 2.
struct StringFnId {
  long p = 1;
  long pprime = 3;
  long m = 0;
  long ell = 0;

  /// The same string function keyed by its level N instead of (p, p').
  static StringFnId from_level(const Rational& level, long m, long ell);
  Rational level() const;
  /// Throws InvalidArgument naming the first violated invariant.
  void validate() const;
  std::string to_string() const;
  bool operator==(const StringFnId&) const = default;
};

/// s_lambda = -1/8 + (ell+1)^2 / (4(N+2)) - m^2 / (4N).
Exponent s_lambda(const StringFnId& id);
/// (q)_inf^3 times the normalized string function, as a difference of two Hecke sums.
QZSeries string_hecke_difference(const StringFnId& id, const Exponent& trunc);
/// Normalized (integral) string function, or C = q^{s_lambda} times it.
QZSeries string_coeff(const StringFnId& id, bool normalized, const Exponent& trunc);
/// Every string function evaluated in this process with the largest truncation requested.
std::vector<std::pair<StringFnId, Exponent>> evaluated_string_functions();
/// Integer-level compact form f_{1,1+N,1}(q^{1+(m+l)/2}, q^{1-(m-l)/2}; q) / (q)^3.
QZSeries string_coeff_compact(long level, long m, long ell, const Exponent& trunc);

std::vector<IdentityInstance> integer_level_symmetry_instances(long level);
std::vector<IdentityResult> integer_level_symmetries(long level, const Exponent& trunc);

/// Theta correction equal to (q)^3 C_{2jt+2s+1,2r+1} - (q)^3 C_{2s+1,2r+1} at (p, 2p+j).
QZSeries quasi_periodic_shift(long p, long j, long s, long r, long t, const Exponent& trunc);

/// z^{-(l+1)/2} q^{p(l+1)^2/(4p')} [j(-q^{p(l+1)+pp'} z^{-p'}; q^{2pp'}) - z^{l+1} j(-q^{-p(l+1)+pp'} z^{-p'}; q^{2pp'})].
QZSeries weyl_kac_numerator(long p, long pprime, long ell, const Exponent& trunc);
/// z^{-1/2} q^{1/8} j(z; q).
QZSeries weyl_kac_denominator(const Exponent& trunc);
/// sum over sigma of sigma Theta_{sigma(l+1),p'}(z; q^p).
QZSeries weyl_kac_theta_numerator(long p, long pprime, long ell, const Exponent& trunc);
/// sum over sigma of sigma Theta_{sigma,2}(z; q).
QZSeries weyl_kac_theta_denominator(const Exponent& trunc);

/// chi_ell as sum over m of C_{m,ell} q^{m^2/4N} z^{-m/2}, certified against the Weyl-Kac quotient.
QZSeries character(long p, long pprime, long ell, const Exponent& trunc);
/// z0^{e/2} chi_ell(z0) with e = ell mod 2, through the Weyl-Kac quotient.
QZSeries character_at(long p, long pprime, long ell, const ThetaArg& z0, const Exponent& trunc);

/// The theta side of the cross-spin identity at (p, 2p+j).
QZSeries cross_spin_residual(long p, long j, long i, long r, const Exponent& trunc);

namespace ex {
/// Normalized string function when `normalized`, else C.
Expr string_fn(const StringFnId& id, bool normalized = false);
/// (q)^3 times the normalized string function.
Expr string_fn_q3(const StringFnId& id);
Expr weyl_kac_numerator(long p, long pprime, long ell);
Expr weyl_kac_denominator();
Expr character_at(long p, long pprime, long ell, const ThetaArg& z0);
Expr character(long p, long pprime, long ell);
Expr quasi_periodic_shift(long p, long j, long s, long r, long t);
Expr cross_spin_residual(long p, long j, long i, long r);
}  // namespace ex

}  // namespace qsv

#pragma once

#include <string>
#include <vector>

#include "qsv/expr.hpp"
#include "qsv/theta.hpp"

namespace qsv {

/// Arguments of the Appell function m(x, z; B).
struct AppellArgs {
  ThetaArg x;
  ThetaArg z;
  ThetaBase base = ThetaBase(1);

  std::string to_string() const;
};

/// j(z; B) m(x, z; B) as the bilateral sum, defined even where j(z; B) vanishes.
QZSeries appell_j_product(const AppellArgs& args, const Exponent& trunc, long max_radius = 1000000);
/// m(x, z; B); throws NonUnitPrefactor when j(z; B) cannot be inverted.
QZSeries appell(const AppellArgs& args, const Exponent& trunc);
/// Psi(x, z1, z0; B) from the changing-z property.
QZSeries changing_z_psi(const ThetaArg& x, const ThetaArg& z1, const ThetaArg& z0, const ThetaBase& base,
                        const Exponent& trunc);

namespace ex {
Expr appell_j_product(const AppellArgs& args);
Expr appell(const AppellArgs& args);
/// m(x, z; B) with B = sign * q^b.
Expr m(const ThetaArg& x, const ThetaArg& z, const ThetaBase& base);
/// j(w; B) m(x, w2; B) for w2 = B^k w or w2 = B^k / w, rewritten as a bilateral sum.
Expr jm(const ThetaArg& w, const ThetaArg& x, const ThetaArg& w2, const ThetaBase& base);
Expr changing_z_psi(const ThetaArg& x, const ThetaArg& z1, const ThetaArg& z0, const ThetaBase& base);
}  // namespace ex

/// Appell functional equations and the changing-z property on a monomial grid.
std::vector<IdentityInstance> appell_property_instances();
/// The n = 2 splitting of m(x, z; q^b) into base q^{4b} Appell functions.
IdentityInstance msplit_m2_instance(const ThetaArg& x, const ThetaArg& z, const ThetaArg& z1, long b);
std::vector<IdentityInstance> msplit_m2_instances();
std::vector<IdentityResult> msplit_m2(const Exponent& trunc);

}  // namespace qsv

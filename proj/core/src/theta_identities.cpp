#include <string>
#include <vector>

#include "qsv/theta.hpp"

namespace qsv {

namespace {

/// Eight z-free grid points with exponent denominators at most 4.
std::vector<ThetaArg> scalar_grid() {
  return {
      ThetaArg(1, Exponent(1, 2)),          ThetaArg(-1, Exponent(1, 3)),
      ThetaArg(1, Exponent(3, 4)),          ThetaArg(-1, Exponent(5, 4)),
      ThetaArg(Unit::i(), Exponent(1, 4)),  ThetaArg(1, Exponent(-1, 2)),
      ThetaArg(-1, Exponent(2, 3)),         ThetaArg(Unit::minus_i(), Exponent(3, 2)),
  };
}

/// Grid points that carry the formal variable z.
std::vector<ThetaArg> z_grid() { return {ThetaArg(1, 0, 1), ThetaArg(-1, Exponent(1, 2), 1)}; }

std::vector<ThetaArg> full_grid() {
  auto g = scalar_grid();
  for (const auto& x : z_grid()) g.push_back(x);
  return g;
}

Expr jq(const ThetaArg& x, const Exponent& b = 1) { return ex::j(x, ThetaBase(b)); }

ThetaArg q_to(const Exponent& e) { return ThetaArg(1, e); }

long binom2(long n) { return n * (n - 1) / 2; }

void add_elliptic(std::vector<IdentityInstance>& out) {
  for (const auto& x : full_grid()) {
    for (long n : {-2L, -1L, 1L, 2L}) {
      Expr rhs = mono(n % 2 == 0 ? 1 : -1, -binom2(n)) * x.pow(-n).expr() * jq(x);
      out.push_back({"j-elliptic", "x=" + x.to_string() + ",n=" + std::to_string(n), jq(q_to(n) * x), rhs});
    }
  }
}

void add_flip(std::vector<IdentityInstance>& out) {
  for (const auto& x : full_grid()) {
    out.push_back({"j-flip", "x=" + x.to_string() + ":q/x", jq(x), jq(q_to(1) * x.inverse())});
    out.push_back({"j-flip", "x=" + x.to_string() + ":-x*j(1/x)", jq(x), -(x.expr() * jq(x.inverse()))});
  }
}

void add_dissections(std::vector<IdentityInstance>& out) {
  for (const auto& x : full_grid()) {
    for (long n : {1L, 2L, 3L}) {
      Expr prod = ex::J(1);
      for (long k = 0; k < n; ++k) prod = prod * jq(q_to(k) * x, n);
      out.push_back({"j-dissection", "x=" + x.to_string() + ",n=" + std::to_string(n), jq(x),
                     prod / ex::J(n).pow(static_cast<unsigned>(n))});
    }
    out.push_back({"j-negative-nome", "x=" + x.to_string(), ex::j(x, ThetaBase(1, Unit::minus_one())),
                   jq(x, 2) * jq(ThetaArg(-1, 1) * x, 2) / ex::J(1, 4)});
    // Only the roots of unity inside Q(i) are available. The thetas on the
    // right have nome q; with nome q^n the identity fails already for n = 2.
    for (long n : {1L, 2L, 4L}) {
      Unit zeta = n == 1 ? Unit::one() : (n == 2 ? Unit::minus_one() : Unit::i());
      Expr prod = ex::J(n);
      for (long k = 0; k < n; ++k) prod = prod * jq(ThetaArg(zeta.pow(k), 0) * x);
      out.push_back({"j-roots-of-unity", "x=" + x.to_string() + ",n=" + std::to_string(n), jq(x.pow(n), n),
                     prod / ex::J(1).pow(static_cast<unsigned>(n))});
    }
  }
}

void add_splits(std::vector<IdentityInstance>& out) {
  for (const auto& x : full_grid()) {
    for (long m : {2L, 3L}) {
      Expr rhs;
      for (long k = 0; k < m; ++k) {
        ThetaArg arg = ThetaArg(m % 2 == 1 ? 1 : -1, binom2(m) + m * k) * x.pow(m);
        rhs = rhs + mono(k % 2 == 0 ? 1 : -1, binom2(k)) * x.pow(k).expr() * jq(arg, m * m);
      }
      out.push_back({"jsplit", "x=" + x.to_string() + ",m=" + std::to_string(m), jq(x), rhs});
    }
    out.push_back({"jsplit-m2", "z=" + x.to_string(), jq(x),
                   jq(ThetaArg(-1, 1) * x.pow(2), 4) - x.expr() * jq(ThetaArg(-1, 3) * x.pow(2), 4)});
  }
}

void add_quintuple(std::vector<IdentityInstance>& out) {
  auto lhs_of = [](const ThetaArg& x) {
    return jq(q_to(1) * x.pow(3), 3) + x.expr() * jq(q_to(2) * x.pow(3), 3);
  };
  for (const auto& x : full_grid()) {
    out.push_back({"quintuple", "x=" + x.to_string() + ":middle", lhs_of(x),
                   jq(ThetaArg(-1, 0) * x) * jq(q_to(1) * x.pow(2), 2) / ex::J(2)});
  }
  for (const auto& x : scalar_grid()) {
    out.push_back({"quintuple", "x=" + x.to_string() + ":right", lhs_of(x), ex::J(1) * jq(x.pow(2)) / jq(x)});
  }
  out.push_back({"quintuple", "x=q", lhs_of(q_to(1)), jq(ThetaArg(-1, 1)) * jq(q_to(3), 2) / ex::J(2)});
}

void add_two_theta_products(std::vector<IdentityInstance>& out) {
  auto grid = full_grid();
  auto scalars = scalar_grid();
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const ThetaArg& x = grid[k];
    const ThetaArg& y = scalars[(k + 3) % scalars.size()];
    Expr rhs = jq(ThetaArg(-1, 0) * x * y, 2) * jq(ThetaArg(-1, 1) * x.inverse() * y, 2) -
               x.expr() * jq(ThetaArg(-1, 1) * x * y, 2) * jq(ThetaArg(-1, 0) * x.inverse() * y, 2);
    out.push_back({"theta-product-H1", "x=" + x.to_string() + ",y=" + y.to_string(), jq(x) * jq(y), rhs});
  }
}

Expr four(const ThetaArg& a, const ThetaArg& b, const ThetaArg& c, const ThetaArg& d) {
  return jq(a) * jq(b) * jq(c) * jq(d);
}

void add_weierstrass(std::vector<IdentityInstance>& out) {
  auto g = scalar_grid();
  std::vector<std::vector<ThetaArg>> quads;
  for (std::size_t k = 0; k < g.size(); ++k) {
    quads.push_back({g[k], g[(k + 1) % g.size()], g[(k + 3) % g.size()], g[(k + 6) % g.size()]});
  }
  quads.push_back({ThetaArg(Unit::minus_i(), 1), ThetaArg(Unit::minus_i(), 2), ThetaArg(Unit::i(), 1),
                   ThetaArg(Unit::i(), 0)});
  quads.push_back({ThetaArg(1, 0, 1), g[0], g[2], g[5]});
  for (const auto& v : quads) {
    const ThetaArg &a = v[0], &b = v[1], &c = v[2], &d = v[3];
    Expr lhs = four(a * c, a * c.inverse(), b * d, b * d.inverse());
    Expr rhs = four(a * d, a * d.inverse(), b * c, b * c.inverse()) +
               (b * c.inverse()).expr() * four(a * b, a * b.inverse(), c * d, c * d.inverse());
    out.push_back({"weierstrass",
                   "a=" + a.to_string() + ",b=" + b.to_string() + ",c=" + c.to_string() + ",d=" + d.to_string(), lhs,
                   rhs});
  }
}

void add_triple_product(std::vector<IdentityInstance>& out) {
  for (const auto& x : full_grid()) {
    if (sgn(x.qpow) <= 0 || x.qpow >= 1) continue;
    ThetaArg xx = x;
    Expr prod = Expr::leaf("jtp-product(" + x.to_string() + ";q^1)",
                           [xx](const Exponent& t) { return jacobi_theta_product(xx, ThetaBase(1), t); });
    out.push_back({"triple-product", "x=" + x.to_string(), jq(x), prod});
  }
}

}  // namespace

std::vector<IdentityInstance> theta_identity_instances() {
  std::vector<IdentityInstance> out;
  add_elliptic(out);
  add_flip(out);
  add_dissections(out);
  add_splits(out);
  add_quintuple(out);
  add_two_theta_products(out);
  add_weierstrass(out);
  add_triple_product(out);
  return out;
}

std::vector<IdentityInstance> product_rearrangement_instances() {
  using ex::J;
  using ex::Jbar;
  return {
      {"rearrangement", "Jbar_{0,1}=2Jbar_{1,4}", Jbar(0, 1), 2 * Jbar(1, 4)},
      {"rearrangement", "Jbar_{0,1}=2J_2^2/J_1", Jbar(0, 1), 2 * J(2).pow(2) / J(1)},
      {"rearrangement", "Jbar_{1,2}=J_2^5/(J_1^2J_4^2)", Jbar(1, 2), J(2).pow(5) / (J(1).pow(2) * J(4).pow(2))},
      {"rearrangement", "J_{1,2}=J_1^2/J_2", J(1, 2), J(1).pow(2) / J(2)},
      {"rearrangement", "Jbar_{1,3}=J_2J_3^2/(J_1J_6)", Jbar(1, 3), J(2) * J(3).pow(2) / (J(1) * J(6))},
      {"rearrangement", "J_{1,4}=J_1J_4/J_2", J(1, 4), J(1) * J(4) / J(2)},
      {"rearrangement", "J_{1,6}=J_1J_6^2/(J_2J_3)", J(1, 6), J(1) * J(6).pow(2) / (J(2) * J(3))},
      {"rearrangement", "Jbar_{1,6}=J_2^2J_3J_12/(J_1J_4J_6)", Jbar(1, 6),
       J(2).pow(2) * J(3) * J(12) / (J(1) * J(4) * J(6))},
  };
}

}  // namespace qsv

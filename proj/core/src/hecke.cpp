#include <cmath>
#include <functional>
#include <numeric>

#include "qsv/errors.hpp"
#include "qsv/hecke.hpp"

namespace qsv {

namespace {

using i128 = __int128;

long den_long(const Exponent& e) { return e.get_den().get_si(); }

i128 scaled_int(const Exponent& e, long d) {
  Exponent v = e * d;
  if (v.get_den() != 1 || !v.get_num().fits_slong_p()) throw InvalidArgument("Hecke exponent outside the integer grid");
  return v.get_num().get_si();
}

Exponent from_scaled(i128 v, long d) {
  Exponent e{mpz_class(static_cast<long>(v)), mpz_class(d)};
  e.canonicalize();
  return e;
}

long floor_double(double v) { return static_cast<long>(std::floor(v)); }

/// One quadrant: exponent(u, v) = base(u) + lin(u) * v + cc * v(v + shift) for v >= vmin.
struct Quadrant {
  // 2D * exponent as a function of the outer index u and inner index v.
  std::function<i128(long, long)> value;
  // Real minimizer of the inner quadratic for a fixed u.
  std::function<double(long)> inner_vertex;
  // Outer index beyond which the u-only part is increasing.
  double outer_vertex;
  long umin;
  long vmin;
};

template <typename Emit>
void enumerate_quadrant(const Quadrant& qd, i128 limit, long max_radius, Emit&& emit) {
  for (long u = qd.umin;; ++u) {
    if (u - qd.umin > max_radius) {
      throw NonTerminatingEnumeration("Hecke enumeration did not close within radius " + std::to_string(max_radius));
    }
    double sv = qd.inner_vertex(u);
    long v0 = std::max(qd.vmin, floor_double(sv));
    // The inner quadratic is convex, so its minimum over v >= vmin sits at v0 or v0 + 1.
    i128 vmin_value = std::min(qd.value(u, v0), qd.value(u, v0 + 1));
    for (long v = v0;; ++v) {
      i128 e = qd.value(u, v);
      if (e < limit) {
        emit(u, v, e);
      } else if (static_cast<double>(v) >= sv) {
        break;
      }
      if (v - v0 > max_radius) throw NonTerminatingEnumeration("inner Hecke enumeration did not close");
    }
    for (long v = v0 - 1; v >= qd.vmin; --v) {
      i128 e = qd.value(u, v);
      if (e >= limit) break;
      emit(u, v, e);
    }
    if (static_cast<double>(u) >= qd.outer_vertex && vmin_value >= limit) break;
  }
}

}  // namespace

QZSeries hecke_sum(const HeckeParams& params, const Exponent& trunc, long max_radius) {
  if (params.a <= 0 || params.b <= 0 || params.c <= 0) throw InvalidArgument("Hecke sum needs positive a, b, c");
  if (params.x.has_z() || params.y.has_z()) throw InvalidArgument("Hecke sum arguments must be z-free");
  const long a = params.a;
  const long b = params.b;
  const long c = params.c;
  long d = std::lcm(std::lcm(den_long(params.x.qpow), den_long(params.y.qpow)), den_long(trunc));
  const i128 ax = scaled_int(params.x.qpow, d);
  const i128 ay = scaled_int(params.y.qpow, d);
  const i128 limit = scaled_int(trunc, 2 * d);
  const double axd = params.x.qpow.get_d();
  const double ayd = params.y.qpow.get_d();
  const Unit cx = params.x.coeff;
  const Unit cy = params.y.coeff;

  SeriesBuilder out(trunc);

  Quadrant pos;
  pos.value = [=](long r, long s) -> i128 {
    return i128(d) * (i128(a) * r * (r - 1) + 2 * i128(b) * r * s + i128(c) * s * (s - 1)) + 2 * ax * r + 2 * ay * s;
  };
  pos.inner_vertex = [=](long r) { return 0.5 - (static_cast<double>(b) * r + ayd) / static_cast<double>(c); };
  pos.outer_vertex = 0.5 - axd / static_cast<double>(a);
  pos.umin = 0;
  pos.vmin = 0;
  enumerate_quadrant(pos, limit, max_radius, [&](long r, long s, i128 e) {
    Unit u = Unit::minus_one().pow(r + s) * cx.pow(r) * cy.pow(s);
    out.add(u.value(), from_scaled(e, 2 * d));
  });

  Quadrant neg;
  neg.value = [=](long rr, long ss) -> i128 {
    return i128(d) * (i128(a) * rr * (rr + 1) + 2 * i128(b) * rr * ss + i128(c) * ss * (ss + 1)) - 2 * ax * rr -
           2 * ay * ss;
  };
  neg.inner_vertex = [=](long rr) { return (ayd - static_cast<double>(b) * rr) / static_cast<double>(c) - 0.5; };
  neg.outer_vertex = axd / static_cast<double>(a) - 0.5;
  neg.umin = 1;
  neg.vmin = 1;
  enumerate_quadrant(neg, limit, max_radius, [&](long rr, long ss, i128 e) {
    Unit u = -(Unit::minus_one().pow(rr + ss) * cx.pow(-rr) * cy.pow(-ss));
    out.add(u.value(), from_scaled(e, 2 * d));
  });

  return std::move(out).build();
}

}  // namespace qsv

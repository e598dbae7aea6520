#pragma once

// Naive dense integer power series built straight from the definitions.
// They share no code with the library and serve as independent oracles.

#include <cstdint>
#include <map>
#include <vector>

#include "qsv/series.hpp"

namespace oracle {

using Dense = std::vector<long long>;  // coefficient of q^n at index n, n < size

inline Dense one(int n) {
  Dense d(n, 0);
  d[0] = 1;
  return d;
}

inline Dense mul(const Dense& a, const Dense& b) {
  Dense out(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j < a.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

/// Multiplies in place by (1 + c q^e).
inline void mul_binomial(Dense& a, long long c, int e) {
  for (int i = static_cast<int>(a.size()) - 1; i >= e; --i) a[i] += c * a[i - e];
}

/// Divides in place by (1 + c q^e), e > 0.
inline void div_binomial(Dense& a, long long c, int e) {
  for (std::size_t i = e; i < a.size(); ++i) a[i] -= c * a[i - e];
}

/// prod_{k>=0} (1 - q^{a + b k}), a > 0.
inline Dense pochhammer(int a, int b, int n) {
  Dense d = one(n);
  for (int e = a; e < n; e += b) mul_binomial(d, -1, e);
  return d;
}

/// Partition numbers by counting parts of each size, not via the pentagonal theorem.
inline Dense partitions(int n) {
  Dense d = one(n);
  for (int part = 1; part < n; ++part) {
    for (int k = part; k < n; ++k) d[k] += d[k - part];
  }
  return d;
}

/// j(q^a; q^b) for 0 < a < b as the triple product.
inline Dense theta(int a, int b, int n) {
  return mul(mul(pochhammer(a, b, n), pochhammer(b - a, b, n)), pochhammer(b, b, n));
}

/// Signed Hecke box sum f_{a,b,c}(sx q^ex, sy q^ey; q) below q^n, integer exponents only.
inline std::map<long long, long long> hecke_box(long a, long b, long c, int sx, long ex, int sy, long ey, long n,
                                                long radius) {
  std::map<long long, long long> out;
  auto binom2 = [](long k) { return k * (k - 1) / 2; };
  for (long r = -radius; r <= radius; ++r) {
    for (long s = -radius; s <= radius; ++s) {
      const bool upper = r >= 0 && s >= 0;
      const bool lower = r < 0 && s < 0;
      if (!upper && !lower) continue;
      long long e = a * binom2(r) + b * r * s + c * binom2(s) + r * ex + s * ey;
      if (e >= n) continue;
      long long sign = ((r + s) % 2 == 0) ? 1 : -1;
      if (sx < 0 && r % 2 != 0) sign = -sign;
      if (sy < 0 && s % 2 != 0) sign = -sign;
      out[e] += upper ? sign : -sign;
    }
  }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

/// Coefficients of an integer-exponent one-variable library series, q^0 .. q^{n-1}.
inline Dense dense(const qsv::QZSeries& s, int n) {
  Dense d(n, 0);
  for (const auto& t : s.terms()) {
    if (t.q < 0 || t.q >= n) continue;
    d[t.q.get_num().get_si()] = t.coeff.re().get_num().get_si();
  }
  return d;
}

}  // namespace oracle

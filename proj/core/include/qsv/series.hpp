#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qsv/gaussian_rational.hpp"

namespace qsv {

using Exponent = Rational;

/// A power of i. Coefficients of theta arguments are restricted to these.
class Unit {
 public:
  constexpr Unit() = default;
  static constexpr Unit one() { return Unit(0); }
  static constexpr Unit i() { return Unit(1); }
  static constexpr Unit minus_one() { return Unit(2); }
  static constexpr Unit minus_i() { return Unit(3); }
  static constexpr Unit sign(int s) { return s < 0 ? minus_one() : one(); }

  constexpr int exponent_of_i() const { return k_; }
  /// Smallest n > 0 with u^n = 1.
  constexpr int order() const { return k_ == 0 ? 1 : (k_ == 2 ? 2 : 4); }

  constexpr Unit operator*(Unit o) const { return Unit(k_ + o.k_); }
  constexpr Unit operator-() const { return Unit(k_ + 2); }
  constexpr Unit inverse() const { return Unit(-k_); }
  constexpr Unit pow(long long n) const { return Unit(static_cast<int>((k_ * (n % 4)) % 4)); }
  constexpr bool operator==(const Unit&) const = default;

  GaussianRational value() const;
  std::string to_string() const;

 private:
  constexpr explicit Unit(int k) : k_(((k % 4) + 4) % 4) {}
  int k_ = 0;
};

/// Sparse truncated Laurent series in q and z with rational exponents and
/// Gaussian-rational coefficients.
///
/// A series is either exact (a finite Laurent polynomial, no truncation) or
/// carries a q-truncation order `trunc`: every coefficient with q-exponent
/// below `trunc` is known, and nothing at or above it is stored. Exponents are
/// held internally as integers over cached common denominators.
class QZSeries {
 public:
  struct Term {
    Exponent q;
    Exponent z;
    GaussianRational coeff;
  };

  /// The exact zero polynomial.
  QZSeries() = default;

  static QZSeries zero(const Exponent& trunc);
  static QZSeries monomial(const GaussianRational& c, const Exponent& q = 0, const Exponent& z = 0);
  static QZSeries one() { return monomial(1); }
  static QZSeries from_terms(const std::vector<Term>& terms, const std::optional<Exponent>& trunc);

  bool is_exact() const { return exact_; }
  /// Truncation order; empty for exact polynomials.
  std::optional<Exponent> trunc() const;
  /// Lowest q-exponent present, if any term is stored.
  std::optional<Exponent> valuation() const;

  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  std::vector<Term> terms() const;
  GaussianRational coefficient(const Exponent& q, const Exponent& z = 0) const;
  /// Coefficient of z^w as a one-variable series with the same truncation.
  QZSeries z_coefficient(const Exponent& w) const;

  bool is_one_variable() const;
  /// Every coefficient real with denominator one.
  bool is_integral() const;

  /// Drops terms at or above `t` and lowers the truncation to `t` if needed.
  QZSeries truncated(const Exponent& t) const;
  /// Multiplies by c q^dq z^dz.
  QZSeries times_monomial(const GaussianRational& c, const Exponent& dq, const Exponent& dz = 0) const;
  QZSeries operator-() const;
  QZSeries& operator*=(const GaussianRational& c);

  /// Multiplies by (1 - c q^e z^w).
  QZSeries mul_binomial(const GaussianRational& c, const Exponent& e, const Exponent& w = 0) const;
  /// Divides by (1 - c q^e z^w) for e > 0. Exact inputs need a truncation `cap`.
  QZSeries div_binomial(const GaussianRational& c, const Exponent& e, const Exponent& w = 0,
                        const std::optional<Exponent>& cap = std::nullopt) const;

  QZSeries pow(unsigned n) const;

  /// Same terms and same truncation.
  friend bool identical(const QZSeries& a, const QZSeries& b);

  std::string to_string(std::size_t max_terms = 12) const;

  friend QZSeries add(const QZSeries& a, const QZSeries& b);
  friend QZSeries mul(const QZSeries& a, const QZSeries& b);
  friend QZSeries invert_unit(const QZSeries& a, const std::optional<Exponent>& cap);
  friend QZSeries substitute_q(const QZSeries& a, Unit sign, const Exponent& power);
  friend class SeriesBuilder;
  friend struct SeriesAccess;

 private:
  struct Entry {
    std::int64_t q;
    std::int64_t z;
    GaussianRational c;
  };

  void rescale(std::int64_t qden, std::int64_t zden);
  void reduce_denominators();
  /// ceil(trunc * qden); only meaningful for inexact series.
  std::int64_t scaled_trunc(std::int64_t qden) const;

  std::int64_t qden_ = 1;
  std::int64_t zden_ = 1;
  std::vector<Entry> entries_;  // sorted by (q, z), no zero coefficients
  bool exact_ = true;
  Exponent trunc_;
};

QZSeries add(const QZSeries& a, const QZSeries& b);
QZSeries sub(const QZSeries& a, const QZSeries& b);
QZSeries mul(const QZSeries& a, const QZSeries& b);
/// a^{-1}. For exact polynomials `cap` fixes the truncation of the result.
QZSeries invert_unit(const QZSeries& a, const std::optional<Exponent>& cap = std::nullopt);
/// q -> sign * q^power.
QZSeries substitute_q(const QZSeries& a, Unit sign, const Exponent& power);

inline QZSeries operator+(const QZSeries& a, const QZSeries& b) { return add(a, b); }
inline QZSeries operator-(const QZSeries& a, const QZSeries& b) { return sub(a, b); }
inline QZSeries operator*(const QZSeries& a, const QZSeries& b) { return mul(a, b); }
inline QZSeries operator*(QZSeries a, const GaussianRational& c) { return a *= c; }
inline QZSeries operator*(const GaussianRational& c, QZSeries a) { return a *= c; }

struct FirstDifference {
  Exponent q;
  Exponent z;
  GaussianRational lhs;
  GaussianRational rhs;
};

struct Comparison {
  bool equal = true;
  std::optional<FirstDifference> first_difference;
};

/// Compares all coefficients with q-exponent below `order`.
Comparison equal_up_to(const QZSeries& a, const QZSeries& b, const Exponent& order);

/// Accumulates terms in any order and produces a normalized series.
class SeriesBuilder {
 public:
  explicit SeriesBuilder(std::optional<Exponent> trunc) : trunc_(std::move(trunc)) {}
  void add(const GaussianRational& c, const Exponent& q, const Exponent& z = 0);
  QZSeries build() &&;

 private:
  std::optional<Exponent> trunc_;
  std::vector<QZSeries::Term> pending_;
};

Exponent exponent(long num, long den = 1);
std::string exponent_to_string(const Exponent& e);
Exponent floor_exponent(const Exponent& e);
Exponent ceil_exponent(const Exponent& e);

}  // namespace qsv

#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>

#include "qsv/series.hpp"

namespace qsv {

/// Lazily evaluated series expression.
///
/// Evaluation at order T returns a series whose truncation is at least T.
/// Products and quotients request extra precision from their operands using
/// valuation lower bounds, so negative-order factors are handled without
/// manual guard bookkeeping. Leaf results are memoized process-wide.
class Expr {
 public:
  struct Node;
  using Generator = std::function<QZSeries(const Exponent& trunc)>;

  /// The zero expression.
  Expr();

  static Expr constant(const GaussianRational& c);
  static Expr monomial(const GaussianRational& c, const Exponent& q, const Exponent& z = 0);
  /// A named generator; `key` must determine the series uniquely.
  static Expr leaf(std::string key, Generator gen);

  QZSeries eval(const Exponent& trunc) const;
  /// A lower bound on the q-valuation, or nothing when the expression is zero.
  std::optional<Exponent> valuation_bound() const;
  /// Exact q-valuation found by probing; throws NotAUnit if none is found.
  Exponent exact_valuation() const;

  Expr pow(unsigned n) const;
  Expr substitute_q(Unit sign, const Exponent& power) const;

  std::string describe() const;

  friend Expr operator+(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a, const Expr& b);
  friend Expr operator*(const Expr& a, const Expr& b);
  friend Expr operator/(const Expr& a, const Expr& b);
  Expr operator-() const;

 private:
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

Expr operator*(const GaussianRational& c, const Expr& e);

/// c q^a z^b as an expression.
inline Expr mono(const GaussianRational& c, const Exponent& q, const Exponent& z = 0) {
  return Expr::monomial(c, q, z);
}
inline Expr qpow(const Exponent& q) { return Expr::monomial(1, q); }

/// Process-wide memo of leaf series; safe for concurrent use.
/// Returns gen(t), reusing any cached result for `key` computed to order >= t.
QZSeries memoized(const std::string& key, const Expr::Generator& gen, const Exponent& t);
void clear_series_cache();
std::size_t series_cache_size();

}  // namespace qsv

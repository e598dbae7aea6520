#include "qsv/expr.hpp"

#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <unordered_map>
#include <vector>

#include "qsv/errors.hpp"

namespace qsv {

struct Expr::Node {
  enum class Kind { zero, monomial, leaf, sum, product, quotient, subst };

  Kind kind = Kind::zero;
  GaussianRational c;
  Exponent q;
  Exponent z;
  std::string key;
  Generator gen;
  std::vector<std::shared_ptr<const Node>> kids;
  Unit sign;
  Exponent power;

  mutable std::mutex memo_mutex;
  mutable bool bound_known = false;
  mutable std::optional<Exponent> bound;
  mutable std::optional<Exponent> exact;
};

namespace {

using NodePtr = std::shared_ptr<const Expr::Node>;
using Kind = Expr::Node::Kind;

// Probe order for leaf valuations.
const Exponent kProbeOrder = 1;
// Denominators that vanish this far past their valuation bound are treated as zero.
const Exponent kProbeLimit = 512;

class SeriesCache {
 public:
  QZSeries get(const std::string& key, const Expr::Generator& gen, const Exponent& t) {
    {
      std::shared_lock lock(mutex_);
      auto it = map_.find(key);
      if (it != map_.end() && (!it->second.trunc() || *it->second.trunc() >= t)) return it->second.truncated(t);
    }
    QZSeries s = gen(t);
    if (auto st = s.trunc(); st && *st < t) {
      throw InsufficientTruncation("generator '" + key + "' returned truncation " + exponent_to_string(*st) +
                                   " below requested " + exponent_to_string(t));
    }
    {
      std::unique_lock lock(mutex_);
      auto [it, inserted] = map_.try_emplace(key, s);
      if (!inserted) {
        auto old = it->second.trunc();
        auto cur = s.trunc();
        if (old && (!cur || *cur > *old)) it->second = s;
      }
    }
    return s.truncated(t);
  }

  void clear() {
    std::unique_lock lock(mutex_);
    map_.clear();
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return map_.size();
  }

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::string, QZSeries> map_;
};

SeriesCache& cache() {
  static SeriesCache instance;
  return instance;
}

QZSeries eval_node(const NodePtr& n, const Exponent& t);
std::optional<Exponent> bound_of(const NodePtr& n);

Exponent exact_valuation_of(const NodePtr& n) {
  {
    std::lock_guard lock(n->memo_mutex);
    if (n->exact) return *n->exact;
  }
  auto lb = bound_of(n);
  if (!lb) throw NotAUnit("expression is identically zero");
  Exponent step = 1;
  Exponent t = *lb + step;
  while (true) {
    QZSeries s = eval_node(n, t);
    if (!s.empty()) {
      Exponent v = *s.valuation();
      std::lock_guard lock(n->memo_mutex);
      n->exact = v;
      return v;
    }
    if (t - *lb > kProbeLimit) throw NotAUnit("expression vanishes to order " + exponent_to_string(t));
    step *= 2;
    t = *lb + step;
  }
}

std::optional<Exponent> compute_bound(const NodePtr& n) {
  switch (n->kind) {
    case Kind::zero:
      return std::nullopt;
    case Kind::monomial:
      return n->q;
    case Kind::leaf: {
      QZSeries s = cache().get(n->key, n->gen, kProbeOrder);
      if (s.empty()) return s.trunc() ? std::optional<Exponent>(*s.trunc()) : std::nullopt;
      return s.valuation();
    }
    case Kind::sum: {
      std::optional<Exponent> out;
      for (const auto& k : n->kids) {
        auto b = bound_of(k);
        if (b && (!out || *b < *out)) out = b;
      }
      return out;
    }
    case Kind::product: {
      auto a = bound_of(n->kids[0]);
      auto b = bound_of(n->kids[1]);
      if (!a || !b) return std::nullopt;
      return *a + *b;
    }
    case Kind::quotient: {
      auto a = bound_of(n->kids[0]);
      if (!a) return std::nullopt;
      return *a - exact_valuation_of(n->kids[1]);
    }
    case Kind::subst: {
      auto a = bound_of(n->kids[0]);
      if (!a) return std::nullopt;
      return *a * n->power;
    }
  }
  return std::nullopt;
}

std::optional<Exponent> bound_of(const NodePtr& n) {
  {
    std::lock_guard lock(n->memo_mutex);
    if (n->bound_known) return n->bound;
  }
  auto b = compute_bound(n);
  std::lock_guard lock(n->memo_mutex);
  n->bound_known = true;
  n->bound = b;
  return b;
}

QZSeries eval_raw(const NodePtr& n, const Exponent& t) {
  switch (n->kind) {
    case Kind::zero:
      return QZSeries::zero(t);
    case Kind::monomial:
      return QZSeries::monomial(n->c, n->q, n->z);
    case Kind::leaf:
      return cache().get(n->key, n->gen, t);
    case Kind::sum: {
      QZSeries out = QZSeries::zero(t);
      for (const auto& k : n->kids) out = add(out, eval_node(k, t));
      return out;
    }
    case Kind::product: {
      auto va = bound_of(n->kids[0]);
      auto vb = bound_of(n->kids[1]);
      if (!va || !vb) return QZSeries::zero(t);
      QZSeries a = eval_node(n->kids[0], t - *vb);
      if (a.empty() && a.trunc()) return QZSeries::zero(t);
      QZSeries b = eval_node(n->kids[1], t - *va);
      if (b.empty() && b.trunc()) return QZSeries::zero(t);
      return mul(a, b);
    }
    case Kind::quotient: {
      auto va = bound_of(n->kids[0]);
      if (!va) return QZSeries::zero(t);
      Exponent vb = exact_valuation_of(n->kids[1]);
      QZSeries a = eval_node(n->kids[0], t + vb);
      if (a.empty() && a.trunc()) return QZSeries::zero(t);
      QZSeries b = eval_node(n->kids[1], t + 2 * vb - *va);
      return mul(a, invert_unit(b, t - *va));
    }
    case Kind::subst:
      return substitute_q(eval_node(n->kids[0], t / n->power), n->sign, n->power);
  }
  return QZSeries::zero(t);
}

QZSeries eval_node(const NodePtr& n, const Exponent& t) {
  QZSeries s = eval_raw(n, t);
  if (auto st = s.trunc(); st && *st < t) {
    throw InsufficientTruncation("evaluation reached only order " + exponent_to_string(*st) + " of " +
                                 exponent_to_string(t));
  }
  return s.truncated(t);
}

std::shared_ptr<Expr::Node> make(Kind k) {
  auto n = std::make_shared<Expr::Node>();
  n->kind = k;
  return n;
}

void describe_node(const NodePtr& n, std::ostream& os) {
  switch (n->kind) {
    case Kind::zero:
      os << "0";
      return;
    case Kind::monomial:
      os << "(" << n->c << ")";
      if (n->q != 0) os << "*q^(" << exponent_to_string(n->q) << ")";
      if (n->z != 0) os << "*z^(" << exponent_to_string(n->z) << ")";
      return;
    case Kind::leaf:
      os << n->key;
      return;
    case Kind::sum:
      os << "(";
      for (std::size_t k = 0; k < n->kids.size(); ++k) {
        if (k) os << " + ";
        describe_node(n->kids[k], os);
      }
      os << ")";
      return;
    case Kind::product:
      describe_node(n->kids[0], os);
      os << "*";
      describe_node(n->kids[1], os);
      return;
    case Kind::quotient:
      describe_node(n->kids[0], os);
      os << "/(";
      describe_node(n->kids[1], os);
      os << ")";
      return;
    case Kind::subst:
      os << "[";
      describe_node(n->kids[0], os);
      os << "](q->" << n->sign.to_string() << "*q^" << exponent_to_string(n->power) << ")";
      return;
  }
}

}  // namespace

Expr::Expr() : node_(make(Kind::zero)) {}

Expr Expr::constant(const GaussianRational& c) { return monomial(c, 0, 0); }

Expr Expr::monomial(const GaussianRational& c, const Exponent& q, const Exponent& z) {
  if (c.is_zero()) return Expr();
  auto n = make(Kind::monomial);
  n->c = c;
  n->q = q;
  n->z = z;
  return Expr(n);
}

Expr Expr::leaf(std::string key, Generator gen) {
  auto n = make(Kind::leaf);
  n->key = std::move(key);
  n->gen = std::move(gen);
  return Expr(n);
}

QZSeries Expr::eval(const Exponent& trunc) const { return eval_node(node_, trunc); }

std::optional<Exponent> Expr::valuation_bound() const { return bound_of(node_); }

Exponent Expr::exact_valuation() const { return exact_valuation_of(node_); }

Expr Expr::pow(unsigned n) const {
  Expr result = constant(1);
  Expr base = *this;
  bool first = true;
  while (n > 0) {
    if (n & 1U) {
      result = first ? base : result * base;
      first = false;
    }
    n >>= 1U;
    if (n > 0) base = base * base;
  }
  return result;
}

Expr Expr::substitute_q(Unit sign, const Exponent& power) const {
  if (sgn(power) <= 0) throw InvalidArgument("substitute_q needs a positive power");
  auto n = make(Kind::subst);
  n->kids.push_back(node_);
  n->sign = sign;
  n->power = power;
  return Expr(n);
}

std::string Expr::describe() const {
  std::ostringstream os;
  describe_node(node_, os);
  return os.str();
}

Expr operator+(const Expr& a, const Expr& b) {
  if (a.node_->kind == Kind::zero) return b;
  if (b.node_->kind == Kind::zero) return a;
  auto n = make(Kind::sum);
  for (const auto* e : {&a, &b}) {
    if (e->node_->kind == Kind::sum) {
      n->kids.insert(n->kids.end(), e->node_->kids.begin(), e->node_->kids.end());
    } else {
      n->kids.push_back(e->node_);
    }
  }
  return Expr(n);
}

Expr Expr::operator-() const { return Expr::constant(-1) * *this; }

Expr operator-(const Expr& a, const Expr& b) { return a + (-b); }

Expr operator*(const Expr& a, const Expr& b) {
  if (a.node_->kind == Kind::zero || b.node_->kind == Kind::zero) return Expr();
  if (a.node_->kind == Kind::monomial && b.node_->kind == Kind::monomial) {
    return Expr::monomial(a.node_->c * b.node_->c, a.node_->q + b.node_->q, a.node_->z + b.node_->z);
  }
  auto n = make(Kind::product);
  n->kids = {a.node_, b.node_};
  return Expr(n);
}

Expr operator/(const Expr& a, const Expr& b) {
  if (b.node_->kind == Kind::zero) throw NotAUnit("division by the zero expression");
  if (b.node_->kind == Kind::monomial) {
    return a * Expr::monomial(b.node_->c.inverse(), -b.node_->q, -b.node_->z);
  }
  if (a.node_->kind == Kind::zero) return Expr();
  auto n = make(Kind::quotient);
  n->kids = {a.node_, b.node_};
  return Expr(n);
}

Expr operator*(const GaussianRational& c, const Expr& e) { return Expr::constant(c) * e; }

QZSeries memoized(const std::string& key, const Expr::Generator& gen, const Exponent& t) {
  return cache().get(key, gen, t);
}

void clear_series_cache() { cache().clear(); }

std::size_t series_cache_size() { return cache().size(); }

}  // namespace qsv

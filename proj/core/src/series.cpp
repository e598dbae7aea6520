#include "qsv/series.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <tuple>

#include "qsv/errors.hpp"

namespace qsv {

namespace {

std::int64_t to_i64(const mpz_class& v) {
  if (!v.fits_slong_p()) throw Error("exponent does not fit the internal integer grid");
  return v.get_si();
}

std::int64_t checked_lcm(std::int64_t a, std::int64_t b) {
  std::int64_t g = std::gcd(a, b);
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a / g, b, &out)) throw Error("exponent denominator overflow");
  return out;
}

std::int64_t den_of(const Exponent& e) { return to_i64(e.get_den()); }

/// e * den, which must be integral.
std::int64_t scale(const Exponent& e, std::int64_t den) {
  mpz_class n = e.get_num() * den;
  mpz_class q;
  mpz_class r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), e.get_den().get_mpz_t());
  if (r != 0) throw Error("exponent is not on the series grid");
  return to_i64(q);
}

std::int64_t scale_ceil(const Exponent& e, std::int64_t den) {
  mpz_class n = e.get_num() * den;
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), n.get_mpz_t(), e.get_den().get_mpz_t());
  return to_i64(q);
}

Exponent unscale(std::int64_t v, std::int64_t den) {
  Exponent r{mpz_class(static_cast<long>(v)), mpz_class(static_cast<long>(den))};
  r.canonicalize();
  return r;
}

/// Accumulator for one q-slice of a two-variable product.
using Slice = std::vector<std::pair<std::int64_t, GaussianRational>>;

void slice_add(Slice& s, std::int64_t z, const GaussianRational& a, const GaussianRational& b) {
  for (auto& [zz, c] : s) {
    if (zz == z) {
      c.add_product(a, b);
      return;
    }
  }
  s.emplace_back(z, a * b);
}


}  // namespace

Exponent exponent(long num, long den) {
  Exponent r(num);
  if (den != 1) r /= Exponent(den);
  return r;
}

std::string exponent_to_string(const Exponent& e) { return rational_to_string(e); }

Exponent floor_exponent(const Exponent& e) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), e.get_num().get_mpz_t(), e.get_den().get_mpz_t());
  return Exponent(q);
}

Exponent ceil_exponent(const Exponent& e) {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), e.get_num().get_mpz_t(), e.get_den().get_mpz_t());
  return Exponent(q);
}

GaussianRational Unit::value() const {
  switch (k_) {
    case 0: return 1;
    case 1: return GaussianRational::i();
    case 2: return -1;
    default: return -GaussianRational::i();
  }
}

std::string Unit::to_string() const {
  static const char* names[] = {"1", "i", "-1", "-i"};
  return names[k_];
}

QZSeries QZSeries::zero(const Exponent& trunc) {
  QZSeries s;
  s.exact_ = false;
  s.trunc_ = trunc;
  return s;
}

QZSeries QZSeries::monomial(const GaussianRational& c, const Exponent& q, const Exponent& z) {
  QZSeries s;
  if (c.is_zero()) return s;
  s.qden_ = den_of(q);
  s.zden_ = den_of(z);
  s.entries_.push_back({scale(q, s.qden_), scale(z, s.zden_), c});
  return s;
}

QZSeries QZSeries::from_terms(const std::vector<Term>& terms, const std::optional<Exponent>& trunc) {
  SeriesBuilder b(trunc);
  for (const auto& t : terms) b.add(t.coeff, t.q, t.z);
  return std::move(b).build();
}

std::optional<Exponent> QZSeries::trunc() const {
  if (exact_) return std::nullopt;
  return trunc_;
}

std::optional<Exponent> QZSeries::valuation() const {
  if (entries_.empty()) return std::nullopt;
  return unscale(entries_.front().q, qden_);
}

std::vector<QZSeries::Term> QZSeries::terms() const {
  std::vector<Term> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back({unscale(e.q, qden_), unscale(e.z, zden_), e.c});
  return out;
}

GaussianRational QZSeries::coefficient(const Exponent& q, const Exponent& z) const {
  if (!exact_ && q >= trunc_) {
    throw InsufficientTruncation("coefficient of q^" + exponent_to_string(q) +
                                 " requested beyond truncation " + exponent_to_string(trunc_));
  }
  Exponent sq = q * qden_;
  Exponent sz = z * zden_;
  if (sq.get_den() != 1 || sz.get_den() != 1) return 0;
  std::int64_t kq = to_i64(sq.get_num());
  std::int64_t kz = to_i64(sz.get_num());
  auto it = std::lower_bound(entries_.begin(), entries_.end(), std::make_pair(kq, kz),
                             [](const Entry& e, const std::pair<std::int64_t, std::int64_t>& k) {
                               return std::tie(e.q, e.z) < std::tie(k.first, k.second);
                             });
  if (it != entries_.end() && it->q == kq && it->z == kz) return it->c;
  return 0;
}

QZSeries QZSeries::z_coefficient(const Exponent& w) const {
  QZSeries out;
  out.exact_ = exact_;
  out.trunc_ = trunc_;
  out.qden_ = qden_;
  Exponent sw = w * zden_;
  if (sw.get_den() != 1) return out;
  std::int64_t kw = to_i64(sw.get_num());
  for (const auto& e : entries_) {
    if (e.z == kw) out.entries_.push_back({e.q, 0, e.c});
  }
  out.reduce_denominators();
  return out;
}

bool QZSeries::is_one_variable() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Entry& e) { return e.z == 0; });
}

bool QZSeries::is_integral() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Entry& e) { return e.c.is_integer(); });
}

std::int64_t QZSeries::scaled_trunc(std::int64_t qden) const { return scale_ceil(trunc_, qden); }

void QZSeries::rescale(std::int64_t qden, std::int64_t zden) {
  if (qden == qden_ && zden == zden_) return;
  std::int64_t fq = qden / qden_;
  std::int64_t fz = zden / zden_;
  for (auto& e : entries_) {
    e.q *= fq;
    e.z *= fz;
  }
  qden_ = qden;
  zden_ = zden;
}

void QZSeries::reduce_denominators() {
  std::int64_t gq = qden_;
  std::int64_t gz = zden_;
  for (const auto& e : entries_) {
    gq = std::gcd(gq, e.q);
    gz = std::gcd(gz, e.z);
    if (gq == 1 && gz == 1) return;
  }
  if (gq <= 0) gq = qden_;
  if (gz <= 0) gz = zden_;
  for (auto& e : entries_) {
    e.q /= gq;
    e.z /= gz;
  }
  qden_ /= gq;
  zden_ /= gz;
}

QZSeries QZSeries::truncated(const Exponent& t) const {
  QZSeries out = *this;
  if (!out.exact_ && out.trunc_ <= t) return out;
  out.exact_ = false;
  out.trunc_ = t;
  std::int64_t ts = out.scaled_trunc(qden_);
  auto cut = std::find_if(out.entries_.begin(), out.entries_.end(), [ts](const Entry& e) { return e.q >= ts; });
  out.entries_.erase(cut, out.entries_.end());
  out.reduce_denominators();
  return out;
}

QZSeries QZSeries::times_monomial(const GaussianRational& c, const Exponent& dq, const Exponent& dz) const {
  if (c.is_zero()) return exact_ ? QZSeries() : zero(trunc_ + dq);
  QZSeries out = *this;
  std::int64_t qd = checked_lcm(qden_, den_of(dq));
  std::int64_t zd = checked_lcm(zden_, den_of(dz));
  out.rescale(qd, zd);
  std::int64_t sq = scale(dq, qd);
  std::int64_t sz = scale(dz, zd);
  bool unit_coeff = c == GaussianRational(1);
  for (auto& e : out.entries_) {
    e.q += sq;
    e.z += sz;
    if (!unit_coeff) e.c *= c;
  }
  if (!out.exact_) out.trunc_ += dq;
  out.reduce_denominators();
  return out;
}

QZSeries QZSeries::operator-() const {
  QZSeries out = *this;
  for (auto& e : out.entries_) e.c = -e.c;
  return out;
}

QZSeries& QZSeries::operator*=(const GaussianRational& c) {
  if (c.is_zero()) {
    entries_.clear();
    qden_ = zden_ = 1;
    return *this;
  }
  for (auto& e : entries_) e.c *= c;
  return *this;
}

QZSeries QZSeries::mul_binomial(const GaussianRational& c, const Exponent& e, const Exponent& w) const {
  return add(*this, times_monomial(-c, e, w));
}

QZSeries QZSeries::div_binomial(const GaussianRational& c, const Exponent& e, const Exponent& w,
                                const std::optional<Exponent>& cap) const {
  if (sgn(e) <= 0) throw InvalidArgument("div_binomial needs a positive q-exponent");
  Exponent t;
  if (exact_) {
    if (!cap) throw InvalidArgument("dividing an exact polynomial needs a truncation cap");
    t = *cap;
  } else {
    t = cap ? std::min(*cap, trunc_) : trunc_;
  }
  QZSeries a = *this;
  a.rescale(checked_lcm(qden_, den_of(e)), checked_lcm(zden_, den_of(w)));
  QZSeries out = zero(t);
  out.qden_ = a.qden_;
  out.zden_ = a.zden_;
  if (a.entries_.empty()) return out;
  std::int64_t ts = scale_ceil(t, a.qden_);
  std::int64_t q0 = a.entries_.front().q;
  if (ts <= q0) return out;
  std::int64_t se = scale(e, a.qden_);
  std::int64_t sw = scale(w, a.zden_);
  std::size_t n = static_cast<std::size_t>(ts - q0);
  if (a.is_one_variable() && sw == 0) {
    std::vector<GaussianRational> b(n);
    for (const auto& en : a.entries_) {
      if (en.q >= ts) break;
      b[static_cast<std::size_t>(en.q - q0)] = en.c;
    }
    bool unit = c == GaussianRational(1);
    for (std::size_t x = static_cast<std::size_t>(se); x < n; ++x) {
      const auto& prev = b[x - static_cast<std::size_t>(se)];
      if (prev.is_zero()) continue;
      if (unit) {
        b[x] += prev;
      } else {
        b[x].add_product(c, prev);
      }
    }
    for (std::size_t x = 0; x < n; ++x) {
      if (!b[x].is_zero()) out.entries_.push_back({q0 + static_cast<std::int64_t>(x), 0, std::move(b[x])});
    }
  } else {
    std::vector<Slice> b(n);
    for (const auto& en : a.entries_) {
      if (en.q >= ts) break;
      b[static_cast<std::size_t>(en.q - q0)].emplace_back(en.z, en.c);
    }
    for (std::size_t x = static_cast<std::size_t>(se); x < n; ++x) {
      const Slice& prev = b[x - static_cast<std::size_t>(se)];
      for (const auto& [z, v] : prev) {
        if (!v.is_zero()) slice_add(b[x], z + sw, c, v);
      }
    }
    for (std::size_t x = 0; x < n; ++x) {
      std::sort(b[x].begin(), b[x].end(), [](const auto& l, const auto& r) { return l.first < r.first; });
      for (auto& [z, v] : b[x]) {
        if (!v.is_zero()) out.entries_.push_back({q0 + static_cast<std::int64_t>(x), z, std::move(v)});
      }
    }
  }
  out.reduce_denominators();
  return out;
}

QZSeries QZSeries::pow(unsigned n) const {
  QZSeries result = one();
  QZSeries base = *this;
  while (n > 0) {
    if (n & 1U) result = mul(result, base);
    n >>= 1U;
    if (n > 0) base = mul(base, base);
  }
  return result;
}

bool identical(const QZSeries& a, const QZSeries& b) {
  if (a.exact_ != b.exact_) return false;
  if (!a.exact_ && a.trunc_ != b.trunc_) return false;
  if (a.entries_.size() != b.entries_.size()) return false;
  auto ta = a.terms();
  auto tb = b.terms();
  for (std::size_t k = 0; k < ta.size(); ++k) {
    if (ta[k].q != tb[k].q || ta[k].z != tb[k].z || ta[k].coeff != tb[k].coeff) return false;
  }
  return true;
}

std::string QZSeries::to_string(std::size_t max_terms) const {
  std::ostringstream os;
  std::size_t shown = 0;
  for (const auto& t : terms()) {
    if (shown == max_terms) {
      os << " + ...";
      break;
    }
    if (shown > 0) os << " + ";
    os << "(" << t.coeff << ")";
    if (t.q != 0) os << "*q^" << exponent_to_string(t.q);
    if (t.z != 0) os << "*z^" << exponent_to_string(t.z);
    ++shown;
  }
  if (shown == 0) os << "0";
  if (!exact_) os << " + O(q^" << exponent_to_string(trunc_) << ")";
  return os.str();
}

QZSeries add(const QZSeries& a, const QZSeries& b) {
  QZSeries out;
  if (a.exact_ && b.exact_) {
    out.exact_ = true;
  } else {
    out.exact_ = false;
    if (a.exact_) {
      out.trunc_ = b.trunc_;
    } else if (b.exact_) {
      out.trunc_ = a.trunc_;
    } else {
      out.trunc_ = std::min(a.trunc_, b.trunc_);
    }
  }
  std::int64_t qd = checked_lcm(a.qden_, b.qden_);
  std::int64_t zd = checked_lcm(a.zden_, b.zden_);
  out.qden_ = qd;
  out.zden_ = zd;
  std::int64_t fqa = qd / a.qden_;
  std::int64_t fza = zd / a.zden_;
  std::int64_t fqb = qd / b.qden_;
  std::int64_t fzb = zd / b.zden_;
  bool bounded = !out.exact_;
  std::int64_t ts = bounded ? out.scaled_trunc(qd) : 0;
  out.entries_.reserve(a.entries_.size() + b.entries_.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.entries_.size() || j < b.entries_.size()) {
    bool take_a;
    bool take_b;
    std::int64_t q;
    std::int64_t z;
    if (i < a.entries_.size() && j < b.entries_.size()) {
      std::int64_t qa = a.entries_[i].q * fqa;
      std::int64_t za = a.entries_[i].z * fza;
      std::int64_t qb = b.entries_[j].q * fqb;
      std::int64_t zb = b.entries_[j].z * fzb;
      if (std::tie(qa, za) < std::tie(qb, zb)) {
        take_a = true, take_b = false, q = qa, z = za;
      } else if (std::tie(qb, zb) < std::tie(qa, za)) {
        take_a = false, take_b = true, q = qb, z = zb;
      } else {
        take_a = take_b = true, q = qa, z = za;
      }
    } else if (i < a.entries_.size()) {
      take_a = true, take_b = false, q = a.entries_[i].q * fqa, z = a.entries_[i].z * fza;
    } else {
      take_a = false, take_b = true, q = b.entries_[j].q * fqb, z = b.entries_[j].z * fzb;
    }
    if (bounded && q >= ts) {
      // Both inputs are sorted, so nothing further can land below the truncation.
      if (take_a) ++i;
      if (take_b) ++j;
      if ((i >= a.entries_.size() || a.entries_[i].q * fqa >= ts) &&
          (j >= b.entries_.size() || b.entries_[j].q * fqb >= ts)) {
        break;
      }
      continue;
    }
    if (take_a && take_b) {
      GaussianRational c = a.entries_[i].c + b.entries_[j].c;
      if (!c.is_zero()) out.entries_.push_back({q, z, std::move(c)});
      ++i, ++j;
    } else if (take_a) {
      out.entries_.push_back({q, z, a.entries_[i].c});
      ++i;
    } else {
      out.entries_.push_back({q, z, b.entries_[j].c});
      ++j;
    }
  }
  out.reduce_denominators();
  return out;
}

QZSeries sub(const QZSeries& a, const QZSeries& b) { return add(a, -b); }

QZSeries mul(const QZSeries& a, const QZSeries& b) {
  if ((a.exact_ && a.entries_.empty()) || (b.exact_ && b.entries_.empty())) return QZSeries();
  QZSeries out;
  if (a.exact_ && b.exact_) {
    out.exact_ = true;
  } else {
    // Lower bounds on the true order of each factor.
    Exponent la = a.entries_.empty() ? a.trunc_ : *a.valuation();
    Exponent lb = b.entries_.empty() ? b.trunc_ : *b.valuation();
    out.exact_ = false;
    if (a.exact_) {
      out.trunc_ = b.trunc_ + la;
    } else if (b.exact_) {
      out.trunc_ = a.trunc_ + lb;
    } else {
      out.trunc_ = std::min(a.trunc_ + lb, b.trunc_ + la);
    }
  }
  if (a.entries_.empty() || b.entries_.empty()) return out;
  std::int64_t qd = checked_lcm(a.qden_, b.qden_);
  std::int64_t zd = checked_lcm(a.zden_, b.zden_);
  QZSeries x = a;
  QZSeries y = b;
  x.rescale(qd, zd);
  y.rescale(qd, zd);
  out.qden_ = qd;
  out.zden_ = zd;
  std::int64_t qmin = x.entries_.front().q + y.entries_.front().q;
  std::int64_t qmax;
  if (out.exact_) {
    qmax = x.entries_.back().q + y.entries_.back().q + 1;
  } else {
    qmax = out.scaled_trunc(qd);
  }
  if (qmax <= qmin) return out;
  std::size_t n = static_cast<std::size_t>(qmax - qmin);
  std::int64_t ymin = y.entries_.front().q;
  if (x.is_one_variable() && y.is_one_variable()) {
    std::vector<GaussianRational> acc(n);
    for (const auto& ex : x.entries_) {
      if (ex.q + ymin >= qmax) break;
      for (const auto& ey : y.entries_) {
        std::int64_t q = ex.q + ey.q;
        if (q >= qmax) break;
        acc[static_cast<std::size_t>(q - qmin)].add_product(ex.c, ey.c);
      }
    }
    for (std::size_t k = 0; k < n; ++k) {
      if (!acc[k].is_zero()) out.entries_.push_back({qmin + static_cast<std::int64_t>(k), 0, std::move(acc[k])});
    }
  } else {
    std::vector<Slice> acc(n);
    for (const auto& ex : x.entries_) {
      if (ex.q + ymin >= qmax) break;
      for (const auto& ey : y.entries_) {
        std::int64_t q = ex.q + ey.q;
        if (q >= qmax) break;
        slice_add(acc[static_cast<std::size_t>(q - qmin)], ex.z + ey.z, ex.c, ey.c);
      }
    }
    for (std::size_t k = 0; k < n; ++k) {
      std::sort(acc[k].begin(), acc[k].end(), [](const auto& l, const auto& r) { return l.first < r.first; });
      for (auto& [z, v] : acc[k]) {
        if (!v.is_zero()) out.entries_.push_back({qmin + static_cast<std::int64_t>(k), z, std::move(v)});
      }
    }
  }
  out.reduce_denominators();
  return out;
}

QZSeries invert_unit(const QZSeries& a, const std::optional<Exponent>& cap) {
  if (a.entries_.empty()) throw NotAUnit("cannot invert a series with no known terms");
  if (a.entries_.size() > 1 && a.entries_[1].q == a.entries_[0].q) {
    throw NotAUnit("lowest q-slice has more than one z-term");
  }
  const auto& lead = a.entries_.front();
  Exponent alpha = unscale(lead.q, a.qden_);
  Exponent beta = unscale(lead.z, a.zden_);
  Exponent t;
  if (a.exact_) {
    if (!cap) {
      if (a.entries_.size() == 1) return QZSeries::monomial(lead.c.inverse(), -alpha, -beta);
      throw InvalidArgument("inverting an exact polynomial needs a truncation cap");
    }
    t = *cap;
  } else {
    t = a.trunc_ - 2 * alpha;
    if (cap && *cap < t) t = *cap;
  }
  GaussianRational c0inv = lead.c.inverse();
  QZSeries out = QZSeries::zero(t);
  std::int64_t qd = a.qden_;
  std::int64_t zd = a.zden_;
  out.qden_ = qd;
  out.zden_ = zd;
  // Relative precision of b = 1/(1 + U).
  std::int64_t rs = scale_ceil(t + alpha, qd);
  if (rs <= 0) {
    out.reduce_denominators();
    return out;
  }
  bool unit_lead = lead.c == GaussianRational(1);
  struct Rel {
    std::int64_t q;
    std::int64_t z;
    GaussianRational c;
  };
  std::vector<Rel> u;
  for (std::size_t k = 1; k < a.entries_.size(); ++k) {
    const auto& e = a.entries_[k];
    std::int64_t dq = e.q - lead.q;
    if (dq >= rs) break;
    u.push_back({dq, e.z - lead.z, unit_lead ? e.c : e.c * c0inv});
  }
  std::size_t n = static_cast<std::size_t>(rs);
  if (a.is_one_variable()) {
    std::vector<GaussianRational> b(n);
    b[0] = 1;
    for (std::size_t x = 1; x < n; ++x) {
      GaussianRational acc;
      for (const auto& term : u) {
        if (static_cast<std::size_t>(term.q) > x) break;
        const auto& prev = b[x - static_cast<std::size_t>(term.q)];
        if (!prev.is_zero()) acc.add_product(term.c, prev);
      }
      b[x] = -acc;
    }
    for (std::size_t x = 0; x < n; ++x) {
      if (b[x].is_zero()) continue;
      GaussianRational c = unit_lead ? std::move(b[x]) : b[x] * c0inv;
      out.entries_.push_back({static_cast<std::int64_t>(x) - lead.q, 0, std::move(c)});
    }
  } else {
    std::vector<Slice> b(n);
    b[0].emplace_back(0, GaussianRational(1));
    for (std::size_t x = 1; x < n; ++x) {
      Slice acc;
      for (const auto& term : u) {
        if (static_cast<std::size_t>(term.q) > x) break;
        for (const auto& [z, v] : b[x - static_cast<std::size_t>(term.q)]) slice_add(acc, z + term.z, term.c, v);
      }
      for (auto& [z, v] : acc) {
        if (!v.is_zero()) b[x].emplace_back(z, -v);
      }
    }
    for (std::size_t x = 0; x < n; ++x) {
      std::sort(b[x].begin(), b[x].end(), [](const auto& l, const auto& r) { return l.first < r.first; });
      for (auto& [z, v] : b[x]) {
        GaussianRational c = unit_lead ? std::move(v) : v * c0inv;
        out.entries_.push_back({static_cast<std::int64_t>(x) - lead.q, z - lead.z, std::move(c)});
      }
    }
  }
  out.reduce_denominators();
  return out;
}

QZSeries substitute_q(const QZSeries& a, Unit sign, const Exponent& power) {
  if (sgn(power) <= 0) throw InvalidArgument("substitute_q needs a positive power");
  std::optional<Exponent> t;
  if (!a.exact_) t = a.trunc_ * power;
  SeriesBuilder b(t);
  for (const auto& e : a.entries_) {
    GaussianRational c = e.c;
    if (sign != Unit::one()) {
      if (e.q % a.qden_ != 0) {
        throw IllDefinedRootOfUnityPower("(" + sign.to_string() + ")^(" +
                                         exponent_to_string(unscale(e.q, a.qden_)) + ") is ambiguous");
      }
      c *= sign.pow(e.q / a.qden_).value();
    }
    b.add(c, unscale(e.q, a.qden_) * power, unscale(e.z, a.zden_));
  }
  return std::move(b).build();
}

Comparison equal_up_to(const QZSeries& a, const QZSeries& b, const Exponent& order) {
  for (const QZSeries* s : {&a, &b}) {
    if (auto t = s->trunc(); t && order > *t) {
      throw InsufficientTruncation("comparison at order " + exponent_to_string(order) +
                                   " exceeds truncation " + exponent_to_string(*t));
    }
  }
  Comparison out;
  auto ta = a.truncated(order).terms();
  auto tb = b.truncated(order).terms();
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < ta.size() || j < tb.size()) {
    bool has_a = i < ta.size();
    bool has_b = j < tb.size();
    if (has_a && has_b && ta[i].q == tb[j].q && ta[i].z == tb[j].z) {
      if (ta[i].coeff != tb[j].coeff) {
        out.equal = false;
        out.first_difference = FirstDifference{ta[i].q, ta[i].z, ta[i].coeff, tb[j].coeff};
        return out;
      }
      ++i, ++j;
      continue;
    }
    bool a_first = has_a && (!has_b || std::tie(ta[i].q, ta[i].z) < std::tie(tb[j].q, tb[j].z));
    out.equal = false;
    if (a_first) {
      out.first_difference = FirstDifference{ta[i].q, ta[i].z, ta[i].coeff, GaussianRational()};
    } else {
      out.first_difference = FirstDifference{tb[j].q, tb[j].z, GaussianRational(), tb[j].coeff};
    }
    return out;
  }
  return out;
}

void SeriesBuilder::add(const GaussianRational& c, const Exponent& q, const Exponent& z) {
  if (c.is_zero()) return;
  if (trunc_ && q >= *trunc_) return;
  pending_.push_back({q, z, c});
}

QZSeries SeriesBuilder::build() && {
  QZSeries out;
  if (trunc_) {
    out.exact_ = false;
    out.trunc_ = *trunc_;
  }
  std::int64_t qd = 1;
  std::int64_t zd = 1;
  for (const auto& t : pending_) {
    qd = checked_lcm(qd, den_of(t.q));
    zd = checked_lcm(zd, den_of(t.z));
  }
  out.qden_ = qd;
  out.zden_ = zd;
  std::vector<QZSeries::Entry> raw;
  raw.reserve(pending_.size());
  for (auto& t : pending_) raw.push_back({scale(t.q, qd), scale(t.z, zd), std::move(t.coeff)});
  std::sort(raw.begin(), raw.end(), [](const auto& l, const auto& r) { return std::tie(l.q, l.z) < std::tie(r.q, r.z); });
  for (auto& e : raw) {
    if (!out.entries_.empty() && out.entries_.back().q == e.q && out.entries_.back().z == e.z) {
      out.entries_.back().c += e.c;
      if (out.entries_.back().c.is_zero()) out.entries_.pop_back();
    } else {
      out.entries_.push_back(std::move(e));
    }
  }
  pending_.clear();
  out.reduce_denominators();
  return out;
}

}  // namespace qsv

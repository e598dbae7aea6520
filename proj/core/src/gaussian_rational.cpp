#include "qsv/gaussian_rational.hpp"

#include <ostream>

#include "qsv/errors.hpp"

namespace qsv {

GaussianRational GaussianRational::inverse() const {
  if (is_zero()) throw InvalidArgument("division by zero in Q(i)");
  if (is_real()) return GaussianRational(Rational(1) / re_);
  Rational norm = re_ * re_ + im_ * im_;
  return {re_ / norm, -im_ / norm};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  if (sgn(o.im_) != 0) im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  if (sgn(o.im_) != 0) im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (is_real() && o.is_real()) {
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_real()) {
    if (sgn(o.re_) == 0) throw InvalidArgument("division by zero in Q(i)");
    re_ /= o.re_;
    if (sgn(im_) != 0) im_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

void GaussianRational::add_product(const GaussianRational& a, const GaussianRational& b) {
  if (a.is_real() && b.is_real()) {
    if (a.re_.get_den() == 1 && b.re_.get_den() == 1 && re_.get_den() == 1) {
      mpz_addmul(re_.get_num_mpz_t(), a.re_.get_num_mpz_t(), b.re_.get_num_mpz_t());
      return;
    }
    thread_local Rational tmp;
    mpq_mul(tmp.get_mpq_t(), a.re_.get_mpq_t(), b.re_.get_mpq_t());
    re_ += tmp;
    return;
  }
  *this += a * b;
}

std::string rational_to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string GaussianRational::to_string() const {
  if (is_real()) return rational_to_string(re_);
  std::string imag;
  if (im_ == 1) {
    imag = "i";
  } else if (im_ == -1) {
    imag = "-i";
  } else {
    imag = rational_to_string(im_) + "i";
  }
  if (sgn(re_) == 0) return imag;
  std::string out = rational_to_string(re_);
  if (sgn(im_) > 0) out += "+";
  return out + imag;
}

namespace {

Rational parse_rational(std::string_view s) {
  if (s.empty() || s == "+") return Rational(1);
  if (s == "-") return Rational(-1);
  std::string str(s);
  if (!str.empty() && str.front() == '+') str.erase(0, 1);
  Rational r;
  if (r.set_str(str, 10) != 0) throw InvalidArgument("malformed rational '" + std::string(s) + "'");
  r.canonicalize();
  return r;
}

}  // namespace

GaussianRational GaussianRational::parse(std::string_view text) {
  if (text.empty()) throw InvalidArgument("empty coefficient");
  if (text.back() != 'i') return GaussianRational(parse_rational(text));
  std::string_view body = text.substr(0, text.size() - 1);
  // The split point is the last sign that is not the leading character.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if (body[k] == '+' || body[k] == '-') {
      split = k;
      break;
    }
  }
  if (split == std::string_view::npos) return {Rational(0), parse_rational(body)};
  return {parse_rational(body.substr(0, split)), parse_rational(body.substr(split))};
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& c) { return os << c.to_string(); }

}  // namespace qsv

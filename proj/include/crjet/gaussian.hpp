#pragma once

#include <concepts>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "crjet/error.hpp"
#include "crjet/rational.hpp"

namespace crjet {

/// Exact element re + im*i of the Gaussian rationals Q(i).
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  template <std::integral I>
  GaussianRational(I re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  GaussianRational conj() const { return {re_, -im_}; }

  /// |x|^2 = x * conj(x).
  Rational norm() const { return re_ * re_ + im_ * im_; }

  GaussianRational inverse() const {
    if (is_zero()) throw ArithmeticError("inverse of zero");
    const Rational n = norm();
    return {re_ / n, -im_ / n};
  }

  GaussianRational operator-() const { return {-re_, -im_}; }

  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    if (!o.im_.is_zero()) im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    if (!o.im_.is_zero()) im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    if (im_.is_zero() && o.im_.is_zero()) {
      re_ *= o.re_;
      return *this;
    }
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o) { return *this *= o.inverse(); }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// Canonical text form "(re)+(im)i", e.g. "(-3/4)+(1/2)i".
  std::string str() const { return "(" + re_.str() + ")+(" + im_.str() + ")i"; }

  /// Accepts the canonical form or a bare rational.
  static GaussianRational parse(std::string_view text) {
    std::string s(text);
    s.erase(0, s.find_first_not_of(" \t\n\r"));
    s.erase(s.find_last_not_of(" \t\n\r") + 1);
    if (s.empty()) throw ParseError("empty Gaussian rational");
    if (s.front() != '(') return GaussianRational(Rational::parse(s));
    const auto close = s.find(')');
    if (close == std::string::npos || s.size() < close + 5 || s.compare(close + 1, 2, "+(") != 0 ||
        s.compare(s.size() - 2, 2, ")i") != 0)
      throw ParseError("invalid Gaussian rational '" + s + "'");
    const std::string re = s.substr(1, close - 1);
    const std::string im = s.substr(close + 3, s.size() - close - 5);
    return {Rational::parse(re), Rational::parse(im)};
  }

  friend std::ostream& operator<<(std::ostream& os, const GaussianRational& x) { return os << x.str(); }

 private:
  Rational re_;
  Rational im_;
};

inline bool is_zero(const GaussianRational& x) { return x.is_zero(); }
inline GaussianRational inverse(const GaussianRational& x) { return x.inverse(); }
inline GaussianRational conj(const GaussianRational& x) { return x.conj(); }

}  // namespace crjet

#pragma once

// Gaussian rationals Q(i): exact complex coordinates for projective geometry
// and Hodge filtrations.

#include <string>
#include <string_view>

#include "twk/numbers.hpp"

namespace twk {

class GaussianRational {
 public:
  GaussianRational() = default;
  template <std::integral I>
  GaussianRational(I n) : re_(n) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re, Rational im = Rational(0)) : re_(std::move(re)), im_(std::move(im)) {}  // NOLINT

  static GaussianRational i() { return {Rational(0), Rational(1)}; }
  /// Accepts `re`, `re+im*i`, `re-im*i`, `im*i`, `i`, `-i` with rational literals.
  static GaussianRational parse(std::string_view text);

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }
  GaussianRational conj() const { return {re_, -im_}; }
  /// |z|^2
  Rational norm() const { return re_ * re_ + im_ * im_; }
  std::string str() const;

  GaussianRational operator-() const { return {-re_, -im_}; }
  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    Rational r = re_ * o.re_ - im_ * o.im_;
    im_ = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o) {
    const Rational n = o.norm();
    if (n.is_zero()) throw DomainError("division by zero");
    *this *= o.conj();
    re_ /= n;
    im_ /= n;
    return *this;
  }
  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend bool operator==(const GaussianRational&, const GaussianRational&) = default;

 private:
  Rational re_;
  Rational im_;
};

}  // namespace twk

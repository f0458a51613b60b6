#pragma once

#include <span>
#include <string>
#include <string_view>

#include "longknot/rational.hpp"

namespace longknot {

/// a + b·i with exact rational parts.
class GaussianRational {
 public:
  static constexpr std::string_view kDomainName = "gaussian";
  static constexpr int kCharacteristic = 0;

  GaussianRational() = default;
  GaussianRational(std::int64_t re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  /// Accepts a rational, `(a+bi)`, `(a-bi)`, `bi` or `i`.
  static GaussianRational parse(std::string_view text);

  const Rational& re() const noexcept { return re_; }
  const Rational& im() const noexcept { return im_; }
  bool is_zero() const noexcept { return re_.is_zero() && im_.is_zero(); }
  bool is_one() const noexcept { return re_.is_one() && im_.is_zero(); }
  bool is_real() const noexcept { return im_.is_zero(); }
  std::string to_string() const;

  GaussianRational conj() const { return {re_, -im_}; }
  /// a² + b².
  Rational norm() const { return re_ * re_ + im_ * im_; }
  GaussianRational inverse() const;

  GaussianRational operator-() const { return {-re_, -im_}; }
  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re_ + b.re_, a.im_ + b.im_};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re_ - b.re_, a.im_ - b.im_};
  }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    if (a.im_.is_zero()) return {a.re_ * b.re_, a.re_ * b.im_};
    if (b.im_.is_zero()) return {a.re_ * b.re_, a.im_ * b.re_};
    return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
  }
  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    if (b.im_.is_zero()) {
      Rational inv = b.re_.inverse();
      return {a.re_ * inv, a.im_ * inv};
    }
    return a * b.inverse();
  }
  GaussianRational& operator+=(const GaussianRational& b) { return *this = *this + b; }
  GaussianRational& operator-=(const GaussianRational& b) { return *this = *this - b; }
  GaussianRational& operator*=(const GaussianRational& b) { return *this = *this * b; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) noexcept {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// Gaussian-integer gcd of the numerators over the lcm of all
  /// denominators, normalized into the first quadrant.
  static GaussianRational content(std::span<const GaussianRational> coeffs);
  /// The unit in {1, i, -1, -i} that moves this value into the half-open
  /// first quadrant (positive real part, non-negative imaginary part).
  GaussianRational content_unit_normalizer() const;
  bool is_content_unit() const;

 private:
  Rational re_;
  Rational im_;
};

/// gcd in Z[i]; both arguments must have integer parts.
GaussianRational gaussian_integer_gcd(GaussianRational a, GaussianRational b);

}  // namespace longknot

#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "longknot/integer.hpp"

namespace longknot {

/// Exact rational in lowest terms with a positive denominator.
class Rational {
 public:
  static constexpr std::string_view kDomainName = "rational";
  static constexpr int kCharacteristic = 0;

  Rational() = default;
  Rational(std::int64_t v) : num_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(Integer v) : num_(std::move(v)) {}  // NOLINT(google-explicit-constructor)
  Rational(Integer num, Integer den);

  /// Accepts `n` or `n/d`.
  static Rational parse(std::string_view text);

  const Integer& num() const noexcept { return num_; }
  const Integer& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_one() const noexcept { return num_.is_one() && den_.is_one(); }
  bool is_integer() const noexcept { return den_.is_one(); }
  int sign() const noexcept { return num_.sign(); }
  std::string to_string() const;

  Rational operator-() const { return Rational(-num_, den_, Canonical{}); }
  Rational inverse() const;

  friend Rational operator+(const Rational& a, const Rational& b) {
    if (a.den_.is_one() && b.den_.is_one()) return Rational(a.num_ + b.num_);
    return add_slow(a, b);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    if (a.den_.is_one() && b.den_.is_one()) return Rational(a.num_ - b.num_);
    return add_slow(a, -b);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    if (a.den_.is_one() && b.den_.is_one()) return Rational(a.num_ * b.num_);
    return mul_slow(a, b);
  }
  friend Rational operator/(const Rational& a, const Rational& b) { return a * b.inverse(); }
  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }

  friend bool operator==(const Rational& a, const Rational& b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ <=> b.num_ * a.den_;
  }

  /// gcd of numerators over lcm of denominators; zero for an all-zero span.
  static Rational content(std::span<const Rational> coeffs);
  /// The unit (±1) that makes this value positive.
  Rational content_unit_normalizer() const { return sign() < 0 ? Rational(-1) : Rational(1); }
  bool is_content_unit() const { return den_.is_one() && num_.abs().is_one(); }

 private:
  struct Canonical {};
  Rational(Integer num, Integer den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}
  static Rational add_slow(const Rational& a, const Rational& b);
  static Rational mul_slow(const Rational& a, const Rational& b);

  Integer num_{0};
  Integer den_{1};
};

}  // namespace longknot

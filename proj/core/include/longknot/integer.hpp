#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace longknot {

/// Arbitrary precision integer.
///
/// Values that fit in an int64 are kept inline and use checked machine
/// arithmetic; anything larger is promoted to a GMP integer. Results that
/// shrink back into range are demoted again, so two equal values always
/// share a representation.
class Integer {
 public:
  Integer() noexcept = default;
  Integer(std::int64_t v) noexcept : small_(v) {}  // NOLINT(google-explicit-constructor)
  explicit Integer(const mpz_class& v) { assign(v); }

  Integer(const Integer& other) : small_(other.small_) {
    if (other.big_) big_ = std::make_unique<mpz_class>(*other.big_);
  }
  Integer(Integer&&) noexcept = default;
  Integer& operator=(const Integer& other) {
    if (this != &other) {
      small_ = other.small_;
      big_ = other.big_ ? std::make_unique<mpz_class>(*other.big_) : nullptr;
    }
    return *this;
  }
  Integer& operator=(Integer&&) noexcept = default;
  ~Integer() = default;

  /// Parses an optionally signed decimal literal.
  static Integer parse(std::string_view text);

  bool is_small() const noexcept { return !big_; }
  bool is_zero() const noexcept { return !big_ && small_ == 0; }
  bool is_one() const noexcept { return !big_ && small_ == 1; }
  int sign() const noexcept {
    if (big_) return sgn(*big_);
    return (small_ > 0) - (small_ < 0);
  }
  std::int64_t small_value() const noexcept { return small_; }
  mpz_class to_mpz() const { return big_ ? *big_ : mpz_class(static_cast<long>(small_)); }
  std::string to_string() const;

  Integer operator-() const;
  Integer abs() const { return sign() < 0 ? -*this : *this; }

  friend Integer operator+(const Integer& a, const Integer& b) {
    std::int64_t r;
    if (!a.big_ && !b.big_ && !__builtin_add_overflow(a.small_, b.small_, &r)) return r;
    return add_slow(a, b);
  }
  friend Integer operator-(const Integer& a, const Integer& b) {
    std::int64_t r;
    if (!a.big_ && !b.big_ && !__builtin_sub_overflow(a.small_, b.small_, &r)) return r;
    return sub_slow(a, b);
  }
  friend Integer operator*(const Integer& a, const Integer& b) {
    std::int64_t r;
    if (!a.big_ && !b.big_ && !__builtin_mul_overflow(a.small_, b.small_, &r)) return r;
    return mul_slow(a, b);
  }
  Integer& operator+=(const Integer& b) { return *this = *this + b; }
  Integer& operator-=(const Integer& b) { return *this = *this - b; }
  Integer& operator*=(const Integer& b) { return *this = *this * b; }

  /// Quotient of an exact division; the caller guarantees b | a.
  static Integer divexact(const Integer& a, const Integer& b);
  /// Truncating quotient and remainder.
  static void divmod_trunc(const Integer& a, const Integer& b, Integer& q, Integer& r);
  /// Nearest integer to a/b, ties rounded toward +infinity.
  static Integer div_round(const Integer& a, const Integer& b);
  static Integer gcd(const Integer& a, const Integer& b);
  static Integer lcm(const Integer& a, const Integer& b);

  friend bool operator==(const Integer& a, const Integer& b) noexcept {
    if (!a.big_ && !b.big_) return a.small_ == b.small_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;  // normalized: a big value never fits in int64
  }
  friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) noexcept;

 private:
  void assign(const mpz_class& v);
  static Integer add_slow(const Integer& a, const Integer& b);
  static Integer sub_slow(const Integer& a, const Integer& b);
  static Integer mul_slow(const Integer& a, const Integer& b);

  std::int64_t small_ = 0;
  std::unique_ptr<mpz_class> big_;
};

}  // namespace longknot

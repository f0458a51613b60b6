#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "longknot/errors.hpp"

namespace longknot {

/// Element of the two-element field. Addition is XOR.
class GF2 {
 public:
  static constexpr std::string_view kDomainName = "gf2";
  static constexpr int kCharacteristic = 2;

  constexpr GF2() = default;
  constexpr GF2(std::int64_t v) : bit_((v % 2) != 0) {}  // NOLINT(google-explicit-constructor)

  /// Any integer literal, reduced mod 2.
  static GF2 parse(std::string_view text) {
    if (text.empty()) throw ParseError("empty gf2 coefficient");
    char last = text.back();
    if (last < '0' || last > '9') throw ParseError("bad gf2 coefficient '" + std::string(text) + "'");
    for (char c : text.substr(text.front() == '-' || text.front() == '+' ? 1 : 0)) {
      if (c < '0' || c > '9') throw ParseError("bad gf2 coefficient '" + std::string(text) + "'");
    }
    return GF2((last - '0') % 2);
  }

  constexpr bool is_zero() const noexcept { return !bit_; }
  constexpr bool is_one() const noexcept { return bit_; }
  std::string to_string() const { return bit_ ? "1" : "0"; }

  constexpr GF2 inverse() const {
    if (!bit_) throw DivisionError("inverse of zero");
    return *this;
  }
  constexpr GF2 operator-() const { return *this; }
  friend constexpr GF2 operator+(GF2 a, GF2 b) { return bit(a.bit_ != b.bit_); }
  friend constexpr GF2 operator-(GF2 a, GF2 b) { return bit(a.bit_ != b.bit_); }
  friend constexpr GF2 operator*(GF2 a, GF2 b) { return bit(a.bit_ && b.bit_); }
  friend constexpr GF2 operator/(GF2 a, GF2 b) { return a * b.inverse(); }
  GF2& operator+=(GF2 b) { return *this = *this + b; }
  GF2& operator-=(GF2 b) { return *this = *this - b; }
  GF2& operator*=(GF2 b) { return *this = *this * b; }
  friend constexpr bool operator==(GF2 a, GF2 b) noexcept { return a.bit_ == b.bit_; }

  static GF2 content(std::span<const GF2> coeffs) {
    for (GF2 c : coeffs) {
      if (c.bit_) return GF2(1);
    }
    return GF2(0);
  }
  GF2 content_unit_normalizer() const { return GF2(1); }
  bool is_content_unit() const { return bit_; }

 private:
  static constexpr GF2 bit(bool b) {
    GF2 g;
    g.bit_ = b;
    return g;
  }
  bool bit_ = false;
};

}  // namespace longknot

#pragma once

#include <concepts>
#include <span>
#include <string>
#include <string_view>

#include "longknot/gaussian.hpp"
#include "longknot/gf2.hpp"
#include "longknot/rational.hpp"

namespace longknot {

/// An exact field usable as the coefficient domain of a Laurent polynomial.
///
/// Besides field arithmetic a domain supplies the pieces needed for the
/// integer-content unit group: `content` (gcd of a coefficient list over the
/// ring of integers of the domain) and `content_unit_normalizer` (the unit
/// that moves a value to its canonical associate).
template <class K>
concept Coefficient = std::regular<K> && requires(const K& a, const K& b, std::span<const K> s,
                                                   std::string_view text) {
  { a + b } -> std::same_as<K>;
  { a - b } -> std::same_as<K>;
  { a * b } -> std::same_as<K>;
  { a / b } -> std::same_as<K>;
  { -a } -> std::same_as<K>;
  { a.inverse() } -> std::same_as<K>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.is_one() } -> std::convertible_to<bool>;
  { a.to_string() } -> std::same_as<std::string>;
  { K::parse(text) } -> std::same_as<K>;
  { K::content(s) } -> std::same_as<K>;
  { a.content_unit_normalizer() } -> std::same_as<K>;
  { a.is_content_unit() } -> std::convertible_to<bool>;
  { K::kDomainName } -> std::convertible_to<std::string_view>;
  { K::kCharacteristic } -> std::convertible_to<int>;
};

/// True when the value prints as a negative real number, so a leading
/// minus can be pulled out of it when rendering a sum.
inline bool is_negative_real(const Rational& c) { return c.sign() < 0; }
inline bool is_negative_real(const GaussianRational& c) { return c.is_real() && c.re().sign() < 0; }
inline bool is_negative_real(const GF2&) { return false; }

/// Lies in the ring of integers of the domain (Z, Z[i], or GF(2) itself).
inline bool is_integral(const Rational& c) { return c.is_integer(); }
inline bool is_integral(const GaussianRational& c) { return c.re().is_integer() && c.im().is_integer(); }
inline bool is_integral(const GF2&) { return true; }

/// The runtime tag for a coefficient domain, as used in switch files.
enum class CoefficientDomain { rational, gaussian, gf2 };

CoefficientDomain parse_coefficient_domain(std::string_view name);
std::string_view to_string(CoefficientDomain d);

}  // namespace longknot

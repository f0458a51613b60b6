#include "longknot/rational.hpp"

#include "longknot/errors.hpp"

namespace longknot {

Rational::Rational(Integer num, Integer den) {
  if (den.is_zero()) throw DivisionError("rational with zero denominator");
  if (den.sign() < 0) {
    num = -num;
    den = -den;
  }
  Integer g = Integer::gcd(num, den);
  if (!g.is_one()) {
    num = Integer::divexact(num, g);
    den = Integer::divexact(den, g);
  }
  num_ = std::move(num);
  den_ = std::move(den);
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(Integer::parse(text));
  return Rational(Integer::parse(text.substr(0, slash)), Integer::parse(text.substr(slash + 1)));
}

std::string Rational::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return num_.to_string() + "/" + den_.to_string();
}

Rational Rational::inverse() const {
  if (is_zero()) throw DivisionError("inverse of zero");
  if (num_.sign() < 0) return Rational(-den_, -num_, Canonical{});
  return Rational(den_, num_, Canonical{});
}

Rational Rational::add_slow(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational Rational::mul_slow(const Rational& a, const Rational& b) {
  // cross-cancel first so the products stay small
  Integer g1 = Integer::gcd(a.num_, b.den_);
  Integer g2 = Integer::gcd(b.num_, a.den_);
  if (g1.is_zero()) g1 = 1;
  if (g2.is_zero()) g2 = 1;
  Integer n = Integer::divexact(a.num_, g1) * Integer::divexact(b.num_, g2);
  Integer d = Integer::divexact(a.den_, g2) * Integer::divexact(b.den_, g1);
  if (n.is_zero()) return Rational();
  return Rational(std::move(n), std::move(d), Canonical{});
}

Rational Rational::content(std::span<const Rational> coeffs) {
  Integer g = 0;
  Integer l = 1;
  for (const auto& c : coeffs) {
    if (c.is_zero()) continue;
    g = Integer::gcd(g, c.num_);
    l = Integer::lcm(l, c.den_);
  }
  if (g.is_zero()) return Rational();
  return Rational(g, l);
}

}  // namespace longknot

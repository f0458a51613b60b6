#include "longknot/gaussian.hpp"

#include "longknot/errors.hpp"

namespace longknot {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

// "b i" part without the trailing i: "", "+", "-" mean ±1
Rational parse_imag_factor(std::string_view s) {
  s = trim(s);
  if (s.empty() || s == "+") return Rational(1);
  if (s == "-") return Rational(-1);
  return Rational::parse(s);
}

}  // namespace

GaussianRational GaussianRational::parse(std::string_view text) {
  std::string_view s = trim(text);
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = trim(s.substr(1, s.size() - 2));
  if (s.empty()) throw ParseError("empty gaussian coefficient");
  if (s.back() != 'i') return GaussianRational(Rational::parse(s));
  s.remove_suffix(1);
  // split at the last sign that is not leading and not part of an exponent
  std::size_t split = std::string_view::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if (s[k] == '+' || s[k] == '-') {
      split = k;
      break;
    }
  }
  if (split == std::string_view::npos) return {Rational(0), parse_imag_factor(s)};
  return {Rational::parse(trim(s.substr(0, split))), parse_imag_factor(s.substr(split))};
}

std::string GaussianRational::to_string() const {
  if (im_.is_zero()) return re_.to_string();
  std::string im = im_.to_string();
  if (im_.sign() > 0) im = "+" + im;
  return "(" + re_.to_string() + im + "i)";
}

GaussianRational GaussianRational::inverse() const {
  if (is_zero()) throw DivisionError("inverse of zero");
  Rational n = norm().inverse();
  return {re_ * n, -(im_ * n)};
}

GaussianRational GaussianRational::content_unit_normalizer() const {
  int r = re_.sign();
  int m = im_.sign();
  if (r > 0 && m >= 0) return 1;
  if (r <= 0 && m > 0) return {Rational(0), Rational(-1)};
  if (r < 0 && m <= 0) return -1;
  if (r >= 0 && m < 0) return i();
  return 1;
}

bool GaussianRational::is_content_unit() const {
  if (!re_.is_integer() || !im_.is_integer()) return false;
  return (re_.is_zero() && im_.num().abs().is_one()) || (im_.is_zero() && re_.num().abs().is_one());
}

GaussianRational gaussian_integer_gcd(GaussianRational a, GaussianRational b) {
  if (!a.re().is_integer() || !a.im().is_integer() || !b.re().is_integer() || !b.im().is_integer()) {
    throw DivisionError("gaussian gcd needs gaussian integers");
  }
  while (!b.is_zero()) {
    // nearest lattice point to a/b
    GaussianRational num = a * b.conj();
    Integer n = b.norm().num();
    GaussianRational q(Rational(Integer::div_round(num.re().num(), n)),
                       Rational(Integer::div_round(num.im().num(), n)));
    GaussianRational r = a - q * b;
    a = std::move(b);
    b = std::move(r);
  }
  return a * a.content_unit_normalizer();
}

GaussianRational GaussianRational::content(std::span<const GaussianRational> coeffs) {
  Integer l = 1;
  for (const auto& c : coeffs) {
    l = Integer::lcm(l, c.re_.den());
    l = Integer::lcm(l, c.im_.den());
  }
  GaussianRational g;
  const GaussianRational scale{Rational(l)};
  for (const auto& c : coeffs) {
    if (c.is_zero()) continue;
    g = gaussian_integer_gcd(g, c * scale);
    if (g.is_one()) break;
  }
  if (g.is_zero()) return g;
  return g / scale;
}

}  // namespace longknot

#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "longknot/laurent.hpp"
#include "longknot/laurent_io.hpp"

namespace longknot {

/// Which elements count as units when comparing polynomials.
///
/// `field`: any nonzero coefficient times a monomial.
/// `gaussian_integer_content`: only ±1, ±i (±1 over the rationals) times a
/// monomial, so integer content such as a factor 2 is significant.
enum class UnitMode { field, gaussian_integer_content };

std::string_view to_string(UnitMode m);
/// Accepts `field`, `content` and `gaussian-integer-content`.
UnitMode parse_unit_mode(std::string_view text);

/// Canonical representative of an associate class, plus the unit that was
/// stripped: `original = unit * monomial(shift) * content * primitive`.
template <Coefficient K>
struct UnitNormalForm {
  LaurentPoly<K> primitive;
  K content;
  K unit;
  Exponents shift{};
  UnitMode mode = UnitMode::field;

  bool is_zero() const { return primitive.is_zero(); }
  bool is_one() const { return primitive.is_one() && content.is_one(); }
  /// The chosen representative of the associate class.
  LaurentPoly<K> representative() const { return primitive.scaled(content); }
  LaurentPoly<K> original() const { return representative().scaled(unit).shifted(shift); }
  std::string to_string() const { return render(representative()); }

  /// Associate-class equality: the unit and shift are ignored.
  friend bool operator==(const UnitNormalForm& a, const UnitNormalForm& b) {
    return a.mode == b.mode && a.primitive == b.primitive && a.content == b.content;
  }
};

template <Coefficient K>
UnitNormalForm<K> canonicalize(const LaurentPoly<K>& p, UnitMode mode = UnitMode::field) {
  UnitNormalForm<K> f{LaurentPoly<K>(p.vars()), K(1), K(1), Exponents{}, mode};
  if (p.is_zero()) {
    f.content = K();
    return f;
  }
  f.shift = p.min_exponents();
  LaurentPoly<K> q = p.shifted(sub_exponents(Exponents{}, f.shift));
  if (mode == UnitMode::field) {
    f.unit = q.leading_coefficient();
    f.primitive = q.scaled(f.unit.inverse());
    return f;
  }
  std::vector<K> coeffs;
  coeffs.reserve(q.size());
  for (const auto& t : q.terms()) coeffs.push_back(t.coeff);
  f.content = K::content(coeffs);
  LaurentPoly<K> r = q.scaled(f.content.inverse());
  K u = r.leading_coefficient().content_unit_normalizer();
  f.primitive = r.scaled(u);
  f.unit = u.inverse();
  return f;
}

/// Associates under `mode`.
template <Coefficient K>
bool associates(const LaurentPoly<K>& a, const LaurentPoly<K>& b, UnitMode mode = UnitMode::field) {
  return canonicalize(a, mode) == canonicalize(b, mode);
}

/// d divides p in the Laurent ring. Over `gaussian_integer_content` the
/// quotient must also have integral coefficients. Zero divides only zero.
template <Coefficient K>
bool laurent_divides(const LaurentPoly<K>& d, const LaurentPoly<K>& p, UnitMode mode = UnitMode::field) {
  if (d.is_zero()) return p.is_zero();
  auto q = p.exact_quotient(d);
  if (!q) return false;
  if (mode == UnitMode::field) return true;
  for (const auto& t : q->terms()) {
    if (!is_integral(t.coeff)) return false;
  }
  return true;
}

namespace detail {

// Dense univariate polynomials, index = exponent, no trailing zeros.
template <Coefficient K>
using Dense = std::vector<K>;

template <Coefficient K>
void trim(Dense<K>& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

template <Coefficient K>
Dense<K> dense_remainder(Dense<K> a, const Dense<K>& b) {
  const K inv = b.back().inverse();
  while (a.size() >= b.size()) {
    K c = a.back() * inv;
    std::size_t off = a.size() - b.size();
    for (std::size_t k = 0; k < b.size(); ++k) a[off + k] -= c * b[k];
    a.pop_back();  // the leading coefficient cancels exactly
    trim(a);
  }
  return a;
}

template <Coefficient K>
Dense<K> dense_monic(Dense<K> a) {
  const K inv = a.back().inverse();
  for (auto& c : a) c = c * inv;
  return a;
}

template <Coefficient K>
Dense<K> dense_gcd(Dense<K> a, Dense<K> b) {
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    Dense<K> r = dense_remainder(std::move(a), b);
    a = std::move(b);
    b = std::move(r);
    if (!b.empty()) b = dense_monic(std::move(b));
  }
  return a.empty() ? a : dense_monic(std::move(a));
}

}  // namespace detail

/// gcd of a list of Laurent polynomials, canonicalized under `mode`.
///
/// Inputs must be effectively univariate: after removing monomial factors
/// at most one variable may still vary across the whole list. The result
/// divides every input; gcd(p, 0) = canonical(p); an all-zero list gives 0.
template <Coefficient K>
LaurentPoly<K> laurent_gcd(std::span<const LaurentPoly<K>> ps, UnitMode mode = UnitMode::field) {
  Variables vars = ps.empty() ? Variables{} : ps.front().vars();
  std::vector<LaurentPoly<K>> nonzero;
  Variables varying;
  for (const auto& p : ps) {
    if (p.vars() != vars) throw VariableSetError("gcd over mixed variable sets");
    if (p.is_zero()) continue;
    LaurentPoly<K> q = p.shifted(sub_exponents(Exponents{}, p.min_exponents()));
    for (Var v : q.varying_variables().list()) varying = varying.with(v);
    nonzero.push_back(std::move(q));
  }
  if (nonzero.empty()) return LaurentPoly<K>(vars);
  if (varying.size() > 1) {
    throw UnsupportedGcdError("gcd of genuinely multivariate polynomials (varying in " + varying.to_string() +
                              ") is not supported");
  }

  // content layer (Gauss's lemma): gcd = gcd(contents) * gcd(primitive parts)
  K content(1);
  if (mode == UnitMode::gaussian_integer_content) {
    std::vector<K> contents;
    for (const auto& q : nonzero) contents.push_back(canonicalize(q, mode).content);
    content = K::content(contents);
  }

  LaurentPoly<K> g = LaurentPoly<K>::one(vars);
  if (!varying.empty()) {
    const int v = static_cast<int>(varying.list().front());
    auto to_dense = [v](const LaurentPoly<K>& p) {
      detail::Dense<K> d;
      for (const auto& t : p.terms()) {
        auto e = static_cast<std::size_t>(t.exponents[v]);
        if (d.size() <= e) d.resize(e + 1);
        d[e] = t.coeff;
      }
      return d;
    };
    detail::Dense<K> acc = to_dense(nonzero.front());
    acc = detail::dense_monic(std::move(acc));
    for (std::size_t k = 1; k < nonzero.size() && acc.size() > 1; ++k) {
      acc = detail::dense_gcd(std::move(acc), to_dense(nonzero[k]));
    }
    std::vector<typename LaurentPoly<K>::Term> terms;
    for (std::size_t e = 0; e < acc.size(); ++e) {
      if (acc[e].is_zero()) continue;
      Exponents ex{};
      ex[v] = static_cast<std::int32_t>(e);
      terms.push_back({ex, acc[e]});
    }
    g = LaurentPoly<K>::from_terms(vars, std::move(terms));
  }
  auto f = canonicalize(g, mode);
  // in content mode f.content is a unit here; replace it by the content gcd
  return f.primitive.scaled(content);
}

template <Coefficient K>
LaurentPoly<K> laurent_gcd(std::initializer_list<LaurentPoly<K>> ps, UnitMode mode = UnitMode::field) {
  return laurent_gcd<K>(std::span<const LaurentPoly<K>>(ps.begin(), ps.size()), mode);
}

}  // namespace longknot

#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "longknot/coefficient.hpp"
#include "longknot/errors.hpp"

namespace longknot {

/// The variables a Laurent polynomial may use, in term-order priority.
enum class Var : std::uint8_t { t = 0, q = 1, x = 2, y = 3, a = 4 };

inline constexpr int kMaxVars = 5;
inline constexpr std::array<char, kMaxVars> kVarNames = {'t', 'q', 'x', 'y', 'a'};

std::optional<Var> var_from_name(std::string_view name);

/// A subset of {t, q, x, y, a}.
class Variables {
 public:
  constexpr Variables() = default;
  constexpr Variables(std::initializer_list<Var> vars) {
    for (Var v : vars) mask_ |= bit(v);
  }
  static Variables parse(const std::vector<std::string>& names);

  constexpr Variables with(Var v) const noexcept {
    Variables r = *this;
    r.mask_ |= bit(v);
    return r;
  }
  constexpr bool contains(Var v) const noexcept { return (mask_ & bit(v)) != 0; }
  constexpr bool contains_index(int i) const noexcept { return (mask_ >> i) & 1U; }
  constexpr int size() const noexcept { return __builtin_popcount(mask_); }
  constexpr bool empty() const noexcept { return mask_ == 0; }
  constexpr std::uint8_t mask() const noexcept { return mask_; }
  std::vector<Var> list() const;
  std::vector<std::string> names() const;
  std::string to_string() const;

  friend constexpr bool operator==(Variables, Variables) noexcept = default;

 private:
  static constexpr std::uint8_t bit(Var v) { return static_cast<std::uint8_t>(1U << static_cast<int>(v)); }
  std::uint8_t mask_ = 0;
};

/// Exponent vector indexed by `Var`; slots outside the variable set stay 0.
using Exponents = std::array<std::int32_t, kMaxVars>;

inline std::int64_t total_degree(const Exponents& e) {
  std::int64_t s = 0;
  for (auto v : e) s += v;
  return s;
}

/// Graded-lexicographic order with t > q > x > y > a.
inline std::strong_ordering graded_lex(const Exponents& a, const Exponents& b) {
  if (auto c = total_degree(a) <=> total_degree(b); c != 0) return c;
  for (int i = 0; i < kMaxVars; ++i) {
    if (auto c = a[i] <=> b[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

inline std::int32_t checked_exponent(std::int64_t v) {
  if (v > std::numeric_limits<std::int32_t>::max() || v < std::numeric_limits<std::int32_t>::min()) {
    throw OverflowError("exponent overflow");
  }
  return static_cast<std::int32_t>(v);
}

inline Exponents add_exponents(const Exponents& a, const Exponents& b) {
  Exponents r{};
  for (int i = 0; i < kMaxVars; ++i) r[i] = checked_exponent(std::int64_t{a[i]} + b[i]);
  return r;
}

inline Exponents sub_exponents(const Exponents& a, const Exponents& b) {
  Exponents r{};
  for (int i = 0; i < kMaxVars; ++i) r[i] = checked_exponent(std::int64_t{a[i]} - b[i]);
  return r;
}

/// Multivariate Laurent polynomial with exact coefficients.
///
/// Terms are kept sorted in decreasing graded-lex order with no zero
/// coefficients, so structural equality is mathematical equality.
template <Coefficient K>
class LaurentPoly {
 public:
  using coefficient_type = K;

  struct Term {
    Exponents exponents{};
    K coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  LaurentPoly() = default;
  explicit LaurentPoly(Variables vars) : vars_(vars) {}

  static LaurentPoly constant(Variables vars, K c) {
    LaurentPoly p(vars);
    if (!c.is_zero()) p.terms_.push_back({Exponents{}, std::move(c)});
    return p;
  }
  static LaurentPoly one(Variables vars) { return constant(vars, K(1)); }
  static LaurentPoly monomial(Variables vars, const Exponents& e, K c = K(1)) {
    check_support(vars, e);
    LaurentPoly p(vars);
    if (!c.is_zero()) p.terms_.push_back({e, std::move(c)});
    return p;
  }
  static LaurentPoly variable(Variables vars, Var v, std::int32_t power = 1) {
    Exponents e{};
    e[static_cast<int>(v)] = power;
    return monomial(vars, e);
  }
  /// Builds from arbitrary terms: combines duplicates and drops zeros.
  static LaurentPoly from_terms(Variables vars, std::vector<Term> terms) {
    for (const auto& t : terms) check_support(vars, t.exponents);
    LaurentPoly p(vars);
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
  }

  Variables vars() const noexcept { return vars_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].exponents == Exponents{});
  }
  bool is_one() const noexcept { return is_constant() && !terms_.empty() && terms_[0].coeff.is_one(); }
  /// A single nonzero term, i.e. a unit of the Laurent ring over a field.
  bool is_monomial() const noexcept { return terms_.size() == 1; }
  const Term& leading_term() const { return terms_.front(); }
  const K& leading_coefficient() const { return terms_.front().coeff; }

  /// The coefficient of the constant monomial.
  K constant_coefficient() const {
    for (const auto& t : terms_) {
      if (t.exponents == Exponents{}) return t.coeff;
    }
    return K();
  }
  K coefficient(const Exponents& e) const {
    for (const auto& t : terms_) {
      if (t.exponents == e) return t.coeff;
    }
    return K();
  }

  /// Componentwise minimum exponent; zero vector for the zero polynomial.
  Exponents min_exponents() const {
    if (terms_.empty()) return Exponents{};
    Exponents m = terms_[0].exponents;
    for (const auto& t : terms_) {
      for (int i = 0; i < kMaxVars; ++i) m[i] = std::min(m[i], t.exponents[i]);
    }
    return m;
  }
  Exponents max_exponents() const {
    if (terms_.empty()) return Exponents{};
    Exponents m = terms_[0].exponents;
    for (const auto& t : terms_) {
      for (int i = 0; i < kMaxVars; ++i) m[i] = std::max(m[i], t.exponents[i]);
    }
    return m;
  }

  /// Variables whose exponent actually varies between terms.
  Variables varying_variables() const {
    Exponents lo = min_exponents();
    Exponents hi = max_exponents();
    Variables out;
    for (int i = 0; i < kMaxVars; ++i) {
      if (lo[i] != hi[i]) out = out.with(static_cast<Var>(i));
    }
    return out;
  }

  /// Multiplies by the monomial with exponent vector `shift`.
  LaurentPoly shifted(const Exponents& shift) const {
    check_support(vars_, shift);
    LaurentPoly p(vars_);
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_) p.terms_.push_back({add_exponents(t.exponents, shift), t.coeff});
    return p;  // a uniform shift keeps graded-lex order
  }

  LaurentPoly scaled(const K& c) const {
    if (c.is_zero()) return LaurentPoly(vars_);
    LaurentPoly p(vars_);
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
      K v = t.coeff * c;
      if (!v.is_zero()) p.terms_.push_back({t.exponents, std::move(v)});
    }
    return p;
  }

  /// Applies `f` to every coefficient (for example complex conjugation).
  template <class F>
  LaurentPoly map_coefficients(F&& f) const {
    std::vector<Term> ts;
    ts.reserve(terms_.size());
    for (const auto& t : terms_) ts.push_back({t.exponents, f(t.coeff)});
    return from_terms(vars_, std::move(ts));
  }

  LaurentPoly operator-() const {
    LaurentPoly p(vars_);
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_) p.terms_.push_back({t.exponents, -t.coeff});
    return p;
  }

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) { return merge(a, b, false); }
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return merge(a, b, true); }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    require_same_vars(a, b);
    if (a.is_zero() || b.is_zero()) return LaurentPoly(a.vars_);
    if (a.terms_.size() == 1) return b.times_term(a.terms_[0]);
    if (b.terms_.size() == 1) return a.times_term(b.terms_[0]);
    if (auto v = a.single_varying_index(b)) return dense_product(a, b, *v);
    return sparse_product(a, b);
  }
  LaurentPoly& operator+=(const LaurentPoly& b) { return *this = *this + b; }
  LaurentPoly& operator-=(const LaurentPoly& b) { return *this = *this - b; }
  LaurentPoly& operator*=(const LaurentPoly& b) { return *this = *this * b; }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

  /// Quotient p / d when d divides p exactly in the Laurent ring.
  std::optional<LaurentPoly> exact_quotient(const LaurentPoly& d) const {
    require_same_vars(*this, d);
    if (d.is_zero()) throw DivisionError("division by the zero polynomial");
    if (is_zero()) return LaurentPoly(vars_);
    if (d.terms_.size() == 1) {
      const auto& dt = d.terms_[0];
      K inv = dt.coeff.inverse();
      Exponents neg{};
      for (int i = 0; i < kMaxVars; ++i) neg[i] = checked_exponent(-std::int64_t{dt.exponents[i]});
      return shifted(neg).scaled(inv);
    }
    if (auto v = single_varying_index(d)) return dense_quotient(*this, d, *v);
    return sparse_quotient(*this, d);
  }

  /// Like `exact_quotient` but a remainder is a hard error.
  LaurentPoly divide_exact(const LaurentPoly& d) const {
    auto q = exact_quotient(d);
    if (!q) throw DivisionError("polynomial division is not exact");
    return *std::move(q);
  }

 private:
  static void check_support(Variables vars, const Exponents& e) {
    for (int i = 0; i < kMaxVars; ++i) {
      if (e[i] != 0 && !vars.contains_index(i)) {
        throw VariableSetError(std::string("exponent on variable '") + kVarNames[i] +
                               "' outside variable set " + vars.to_string());
      }
    }
  }
  static void require_same_vars(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.vars_ != b.vars_) {
      throw VariableSetError("variable sets differ: " + a.vars_.to_string() + " vs " + b.vars_.to_string());
    }
  }

  void normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& x, const Term& y) { return graded_lex(x.exponents, y.exponents) > 0; });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!out.empty() && out.back().exponents == t.exponents) {
        out.back().coeff += t.coeff;
      } else {
        out.push_back(std::move(t));
      }
    }
    std::erase_if(out, [](const Term& t) { return t.coeff.is_zero(); });
    terms_ = std::move(out);
  }

  static LaurentPoly merge(const LaurentPoly& a, const LaurentPoly& b, bool subtract) {
    require_same_vars(a, b);
    LaurentPoly p(a.vars_);
    p.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      std::strong_ordering c = std::strong_ordering::greater;
      if (i == a.terms_.size()) {
        c = std::strong_ordering::less;
      } else if (j < b.terms_.size()) {
        c = graded_lex(a.terms_[i].exponents, b.terms_[j].exponents);
      }
      if (c > 0) {
        p.terms_.push_back(a.terms_[i++]);
      } else if (c < 0) {
        const auto& t = b.terms_[j++];
        p.terms_.push_back({t.exponents, subtract ? -t.coeff : t.coeff});
      } else {
        K v = subtract ? a.terms_[i].coeff - b.terms_[j].coeff : a.terms_[i].coeff + b.terms_[j].coeff;
        if (!v.is_zero()) p.terms_.push_back({a.terms_[i].exponents, std::move(v)});
        ++i;
        ++j;
      }
    }
    return p;
  }

  LaurentPoly times_term(const Term& m) const {
    LaurentPoly p(vars_);
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
      K v = t.coeff * m.coeff;
      if (!v.is_zero()) p.terms_.push_back({add_exponents(t.exponents, m.exponents), std::move(v)});
    }
    return p;
  }

  /// -1 when all terms share one exponent vector, the slot index when
  /// exactly one slot varies, nullopt otherwise.
  static std::optional<int> varying_slot(const LaurentPoly& p) {
    int found = -1;
    const Exponents& ref = p.terms_[0].exponents;
    for (const auto& t : p.terms_) {
      for (int i = 0; i < kMaxVars; ++i) {
        if (t.exponents[i] == ref[i] || i == found) continue;
        if (found >= 0) return std::nullopt;
        found = i;
      }
    }
    return found;
  }

  /// If both operands vary in at most one common slot, returns it; the
  /// dense univariate kernels apply then.
  std::optional<int> single_varying_index(const LaurentPoly& other) const {
    auto sa = varying_slot(*this);
    auto sb = varying_slot(other);
    if (!sa || !sb) return std::nullopt;
    if (*sa < 0) return std::max(*sb, 0);
    if (*sb < 0 || *sa == *sb) return *sa;
    return std::nullopt;
  }

  static LaurentPoly dense_product(const LaurentPoly& a, const LaurentPoly& b, int v) {
    // terms are sorted, so within one varying slot the extremes sit at the ends
    const std::int64_t alo = a.terms_.back().exponents[v];
    const std::int64_t ahi = a.terms_.front().exponents[v];
    const std::int64_t blo = b.terms_.back().exponents[v];
    const std::int64_t bhi = b.terms_.front().exponents[v];
    const std::int64_t lo = alo + blo;
    const std::int64_t span = (ahi + bhi) - lo + 1;
    if (span > 64 + 4 * static_cast<std::int64_t>(a.size() * b.size())) return sparse_product(a, b);
    std::vector<K> acc(static_cast<std::size_t>(span));
    for (const auto& x : a.terms_) {
      for (const auto& y : b.terms_) {
        acc[static_cast<std::size_t>(std::int64_t{x.exponents[v]} + y.exponents[v] - lo)] += x.coeff * y.coeff;
      }
    }
    Exponents base = add_exponents(a.terms_[0].exponents, b.terms_[0].exponents);
    LaurentPoly p(a.vars_);
    for (std::int64_t k = span - 1; k >= 0; --k) {
      if (acc[static_cast<std::size_t>(k)].is_zero()) continue;
      Exponents e = base;
      e[v] = checked_exponent(lo + k);
      p.terms_.push_back({e, std::move(acc[static_cast<std::size_t>(k)])});
    }
    return p;
  }

  static LaurentPoly sparse_product(const LaurentPoly& a, const LaurentPoly& b) {
    std::vector<Term> ts;
    ts.reserve(a.size() * b.size());
    for (const auto& x : a.terms_) {
      for (const auto& y : b.terms_) ts.push_back({add_exponents(x.exponents, y.exponents), x.coeff * y.coeff});
    }
    LaurentPoly p(a.vars_);
    p.terms_ = std::move(ts);
    p.normalize();
    return p;
  }

  static std::optional<LaurentPoly> dense_quotient(const LaurentPoly& p, const LaurentPoly& d, int v) {
    const std::int64_t plo = p.terms_.back().exponents[v];
    const std::int64_t phi = p.terms_.front().exponents[v];
    const std::int64_t dlo = d.terms_.back().exponents[v];
    const std::int64_t dhi = d.terms_.front().exponents[v];
    // the fixed (non-varying) part of the exponent vectors
    Exponents qbase = sub_exponents(p.terms_[0].exponents, d.terms_[0].exponents);
    const std::int64_t qlo = plo - dlo;
    const std::int64_t qhi = phi - dhi;
    if (qhi < qlo) return std::nullopt;
    const std::int64_t span = phi - plo + 1;
    if (span > 64 + 8 * static_cast<std::int64_t>(p.size() + d.size())) return sparse_quotient(p, d);
    std::vector<K> rem(static_cast<std::size_t>(span));
    for (const auto& t : p.terms_) rem[static_cast<std::size_t>(t.exponents[v] - plo)] = t.coeff;
    std::vector<std::pair<std::int64_t, const K*>> dterms;
    dterms.reserve(d.size());
    for (const auto& t : d.terms_) dterms.emplace_back(t.exponents[v], &t.coeff);
    const K lead_inv = d.terms_[0].coeff.inverse();
    LaurentPoly q(p.vars_);
    for (std::int64_t qe = qhi; qe >= qlo; --qe) {
      K& top = rem[static_cast<std::size_t>(qe + dhi - plo)];
      if (top.is_zero()) continue;
      K c = top * lead_inv;
      for (const auto& [de, dc] : dterms) rem[static_cast<std::size_t>(qe + de - plo)] -= c * *dc;
      Exponents e = qbase;
      e[v] = checked_exponent(qe);
      q.terms_.push_back({e, std::move(c)});
    }
    for (const auto& r : rem) {
      if (!r.is_zero()) return std::nullopt;
    }
    return q;
  }

  static std::optional<LaurentPoly> sparse_quotient(const LaurentPoly& p, const LaurentPoly& d) {
    // Shift both into the polynomial ring with every minimum exponent zero;
    // exact Laurent divisibility then equals polynomial divisibility.
    Exponents pmin = p.min_exponents();
    Exponents dmin = d.min_exponents();
    Exponents zero{};
    LaurentPoly pp = p.shifted(sub_exponents(zero, pmin));
    LaurentPoly dd = d.shifted(sub_exponents(zero, dmin));
    auto greater = [](const Exponents& x, const Exponents& y) { return graded_lex(x, y) > 0; };
    std::map<Exponents, K, decltype(greater)> rem(greater);
    for (const auto& t : pp.terms_) rem.emplace(t.exponents, t.coeff);
    const Term& lead = dd.terms_[0];
    const K lead_inv = lead.coeff.inverse();
    std::vector<Term> q;
    while (!rem.empty()) {
      auto it = rem.begin();
      Exponents e = sub_exponents(it->first, lead.exponents);
      for (auto x : e) {
        if (x < 0) return std::nullopt;
      }
      K c = it->second * lead_inv;
      for (const auto& t : dd.terms_) {
        Exponents te = add_exponents(t.exponents, e);
        K delta = c * t.coeff;
        auto [pos, inserted] = rem.try_emplace(te, -delta);
        if (!inserted) {
          pos->second -= delta;
          if (pos->second.is_zero()) rem.erase(pos);
        }
      }
      q.push_back({e, std::move(c)});
    }
    Exponents back = sub_exponents(pmin, dmin);
    return from_terms(p.vars_, std::move(q)).shifted(back);
  }

  Variables vars_;
  std::vector<Term> terms_;

  template <Coefficient>
  friend class LaurentPoly;
};

extern template class LaurentPoly<Rational>;
extern template class LaurentPoly<GaussianRational>;
extern template class LaurentPoly<GF2>;

}  // namespace longknot

#pragma once

// Helpers shared by the test programs, including oracles that avoid the
// library's polynomial determinant and gcd code paths.

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "longknot/invariants.hpp"
#include "longknot/quaternion.hpp"

namespace lk_test {

using namespace longknot;

inline constexpr Variables kT{Var::t};
inline constexpr Variables kQ{Var::q};
inline constexpr Variables kX{Var::x};

template <Coefficient K>
LaurentPoly<K> poly(std::string_view text, Variables vars = kT) {
  return parse_laurent<K>(text, vars);
}

inline LaurentPoly<GaussianRational> gpoly(std::string_view text) { return poly<GaussianRational>(text); }
inline LaurentPoly<Rational> rpoly(std::string_view text, Variables vars = kT) { return poly<Rational>(text, vars); }

template <Coefficient K>
bool same_class(const UnitNormalForm<K>& got, std::string_view expected, Variables vars,
                UnitMode mode = UnitMode::field) {
  return got == canonicalize(poly<K>(expected, vars), mode);
}

/// Horner-free evaluation: Σ c·v^e with v^(-e) = (v⁻¹)^e, one variable.
template <Coefficient K>
K evaluate(const LaurentPoly<K>& p, const K& v) {
  K acc(0);
  const K inv = v.inverse();
  for (const auto& term : p.terms()) {
    K m = term.coeff;
    for (int s = 0; s < kMaxVars; ++s) {
      const std::int32_t e = term.exponents[s];
      const K& base = e < 0 ? inv : v;
      for (std::int32_t k = 0; k < (e < 0 ? -e : e); ++k) m = m * base;
    }
    acc = acc + m;
  }
  return acc;
}

/// Determinant over a field by plain Gaussian elimination with row swaps.
template <class K>
K field_det(std::vector<std::vector<K>> a) {
  const std::size_t n = a.size();
  K det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c].is_zero()) ++piv;
    if (piv == n) return K(0);
    if (piv != c) {
      std::swap(a[piv], a[c]);
      det = -det;
    }
    det = det * a[c][c];
    const K inv = a[c][c].inverse();
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a[r][c].is_zero()) continue;
      const K f = a[r][c] * inv;
      for (std::size_t k = c; k < n; ++k) a[r][k] = a[r][k] - f * a[c][k];
    }
  }
  return det;
}

/// det(m) evaluated at `v` through elimination on the evaluated entries.
template <Coefficient K>
K det_at(const Matrix<K>& m, const K& v) {
  std::vector<std::vector<K>> a(m.rows(), std::vector<K>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = evaluate(m(i, j), v);
  }
  return field_det(std::move(a));
}

/// Leibniz formula over all permutations; only for small n.
template <Coefficient K>
LaurentPoly<K> leibniz_det(const Matrix<K>& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  LaurentPoly<K> sum(m.vars());
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    }
    LaurentPoly<K> term = LaurentPoly<K>::one(m.vars());
    for (std::size_t i = 0; i < n && !term.is_zero(); ++i) term = term * m(i, perm[i]);
    sum = (inversions % 2) ? sum - term : sum + term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum;
}

template <Coefficient K>
K random_coeff(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> small(-3, 3);
  if constexpr (std::is_same_v<K, GaussianRational>) {
    return GaussianRational(Rational(small(rng)), Rational(small(rng)));
  } else {
    return K(small(rng));
  }
}

/// Sparse random Laurent polynomial in one variable with exponents in [-2, 2].
template <Coefficient K>
LaurentPoly<K> random_poly(std::mt19937_64& rng, Variables vars, int terms = 3) {
  const Var v = vars.list().front();
  std::uniform_int_distribution<int> exp(-2, 2);
  LaurentPoly<K> p(vars);
  for (int k = 0; k < terms; ++k) {
    p = p + LaurentPoly<K>::variable(vars, v, exp(rng)).scaled(random_coeff<K>(rng));
  }
  return p;
}

template <Coefficient K>
Matrix<K> random_matrix(std::mt19937_64& rng, std::size_t n, Variables vars, double density = 0.7) {
  std::bernoulli_distribution fill(density);
  Matrix<K> m(n, n, vars);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (fill(rng)) m(i, j) = random_poly<K>(rng, vars, 2);
    }
  }
  return m;
}

/// The entry-by-entry symbols of a presentation matrix.
inline std::vector<std::vector<std::string>> symbols(const PresentationMatrix& p) {
  std::vector<std::vector<std::string>> out(p.rows(), std::vector<std::string>(p.cols()));
  for (std::size_t r = 0; r < p.rows(); ++r) {
    for (std::size_t c = 0; c < p.cols(); ++c) out[r][c] = p(r, c).to_string();
  }
  return out;
}

inline const std::vector<std::vector<std::string>> kFlyRelations = {
    {"-1", "B", "0", "A", "0"},
    {"0", "D", "-1", "C", "0"},
    {"0", "A", "0", "B", "-1"},
    {"0", "C", "-1", "D", "0"},
};

inline std::vector<std::vector<std::string>> fly_with(std::vector<std::string> extra) {
  auto m = kFlyRelations;
  if (!extra.empty()) m.push_back(std::move(extra));
  return m;
}

}  // namespace lk_test

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "longknot/laurent.hpp"
#include "longknot/laurent_io.hpp"

namespace longknot {

/// Dense row-major matrix over a Laurent polynomial ring. Every entry
/// shares the matrix's variable set.
template <Coefficient K>
class Matrix {
 public:
  using Coeff = K;
  using Poly = LaurentPoly<K>;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, Variables vars)
      : rows_(rows), cols_(cols), vars_(vars), entries_(rows * cols, Poly(vars)) {}

  static Matrix identity(std::size_t n, Variables vars) {
    Matrix m(n, n, vars);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Poly::one(vars);
    return m;
  }
  static Matrix from_rows(Variables vars, const std::vector<std::vector<Poly>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r ? rows.front().size() : 0;
    Matrix m(r, c, vars);
    for (std::size_t i = 0; i < r; ++i) {
      if (rows[i].size() != c) throw DimensionError("ragged matrix rows");
      for (std::size_t j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  Variables vars() const noexcept { return vars_; }

  const Poly& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  Poly& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, Poly p) {
    if (p.vars() != vars_) throw VariableSetError("matrix entry over " + p.vars().to_string());
    entries_[i * cols_ + j] = std::move(p);
  }

  bool is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Poly& p) { return p.is_zero(); });
  }
  bool is_identity() const { return is_square() && *this == identity(rows_, vars_); }

  Matrix transpose() const {
    Matrix t(cols_, rows_, vars_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    }
    return t;
  }

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw DimensionError("block out of range");
    Matrix b(nr, nc, vars_);
    for (std::size_t i = 0; i < nr; ++i) {
      for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    }
    return b;
  }
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw DimensionError("block out of range");
    if (b.vars_ != vars_) throw VariableSetError("block over a different variable set");
    for (std::size_t i = 0; i < b.rows_; ++i) {
      for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
    }
  }

  /// Keeps the listed rows and columns, in the given order.
  Matrix select(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
    Matrix s(rows.size(), cols.size(), vars_);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (std::size_t j = 0; j < cols.size(); ++j) s(i, j) = (*this)(rows[i], cols[j]);
    }
    return s;
  }

  Matrix swap_rows(std::size_t a, std::size_t b) const {
    Matrix m = *this;
    for (std::size_t j = 0; j < cols_; ++j) std::swap(m(a, j), m(b, j));
    return m;
  }

  Matrix scaled(const Poly& s) const {
    Matrix m = *this;
    for (auto& e : m.entries_) e = e * s;
    return m;
  }

  /// Applies `f` to every entry.
  template <class F>
  Matrix map(F&& f) const {
    Matrix m = *this;
    for (auto& e : m.entries_) e = f(e);
    return m;
  }

  Matrix operator-() const {
    Matrix m = *this;
    for (auto& e : m.entries_) e = -e;
    return m;
  }
  friend Matrix operator+(const Matrix& a, const Matrix& b) { return zip(a, b, false); }
  friend Matrix operator-(const Matrix& a, const Matrix& b) { return zip(a, b, true); }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) {
      throw DimensionError("cannot multiply " + a.shape() + " by " + b.shape());
    }
    if (a.vars_ != b.vars_) throw VariableSetError("matrices over different variable sets");
    Matrix m(a.rows_, b.cols_, a.vars_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Poly& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const Poly& bkj = b(k, j);
          if (!bkj.is_zero()) m(i, j) += aik * bkj;
        }
      }
    }
    return m;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.vars_ == b.vars_ && a.entries_ == b.entries_;
  }

  std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

 private:
  static Matrix zip(const Matrix& a, const Matrix& b, bool subtract) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
      throw DimensionError("shape mismatch " + a.shape() + " vs " + b.shape());
    }
    Matrix m = a;
    for (std::size_t k = 0; k < m.entries_.size(); ++k) {
      m.entries_[k] = subtract ? a.entries_[k] - b.entries_[k] : a.entries_[k] + b.entries_[k];
    }
    return m;
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Variables vars_;
  std::vector<Poly> entries_;
};

/// Debug rendering in aligned columns.
template <Coefficient K>
std::string render(const Matrix<K>& m) {
  std::vector<std::string> cells;
  std::vector<std::size_t> width(m.cols(), 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      cells.push_back(render(m(i, j)));
      width[j] = std::max(width[j], cells.back().size());
    }
  }
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out += "[ ";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const std::string& c = cells[i * m.cols() + j];
      out += std::string(width[j] - c.size(), ' ') + c + (j + 1 < m.cols() ? "  " : " ");
    }
    out += "]\n";
  }
  return out;
}

enum class DetAlgorithm { bareiss, cofactor };

namespace detail {

/// Fraction-free Bareiss elimination. Each row is first shifted by a
/// monomial so every entry is an honest polynomial; the shifts are restored
/// at the end. Exact division by the previous pivot is guaranteed by
/// Sylvester's identity.
template <Coefficient K>
LaurentPoly<K> det_bareiss(const Matrix<K>& m) {
  using Poly = LaurentPoly<K>;
  const std::size_t n = m.rows();
  const Variables vars = m.vars();
  if (n == 0) return Poly::one(vars);

  std::vector<std::vector<Poly>> a(n, std::vector<Poly>(n));
  Exponents total{};
  for (std::size_t i = 0; i < n; ++i) {
    std::optional<Exponents> lo;
    for (std::size_t j = 0; j < n; ++j) {
      const Poly& e = m(i, j);
      if (e.is_zero()) continue;
      Exponents emin = e.min_exponents();
      if (!lo) {
        lo = emin;
      } else {
        for (int v = 0; v < kMaxVars; ++v) (*lo)[v] = std::min((*lo)[v], emin[v]);
      }
    }
    if (!lo) return Poly(vars);  // zero row
    Exponents neg = sub_exponents(Exponents{}, *lo);
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j).shifted(neg);
    total = add_exponents(total, *lo);
  }

  // Complete pivoting: prefer entries with few terms (monomials first), then
  // the lowest Markowitz count, which keeps sparse presentation matrices sparse.
  std::vector<std::size_t> col(n);
  for (std::size_t j = 0; j < n; ++j) col[j] = j;
  bool negate = false;
  Poly prev = Poly::one(vars);
  std::vector<std::size_t> row_nnz(n);
  std::vector<std::size_t> col_nnz(n);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::fill(row_nnz.begin(), row_nnz.end(), 0);
    std::fill(col_nnz.begin(), col_nnz.end(), 0);
    for (std::size_t r = k; r < n; ++r) {
      for (std::size_t c = k; c < n; ++c) {
        if (!a[r][col[c]].is_zero()) {
          ++row_nnz[r];
          ++col_nnz[c];
        }
      }
    }
    std::size_t pr = n;
    std::size_t pc = n;
    std::pair<std::size_t, std::size_t> best{};
    for (std::size_t r = k; r < n; ++r) {
      for (std::size_t c = k; c < n; ++c) {
        const Poly& e = a[r][col[c]];
        if (e.is_zero()) continue;
        std::pair<std::size_t, std::size_t> score{e.size(), (row_nnz[r] - 1) * (col_nnz[c] - 1)};
        if (pr == n || score < best) {
          best = score;
          pr = r;
          pc = c;
        }
      }
    }
    if (pr == n) return Poly(vars);
    if (pr != k) {
      std::swap(a[pr], a[k]);
      negate = !negate;
    }
    if (pc != k) {
      std::swap(col[pc], col[k]);
      negate = !negate;
    }
    const std::size_t ck = col[k];
    const Poly& akk = a[k][ck];
    const bool same_scale = akk == prev;
    for (std::size_t i = k + 1; i < n; ++i) {
      const Poly& aik = a[i][ck];
      for (std::size_t jj = k + 1; jj < n; ++jj) {
        const std::size_t j = col[jj];
        Poly& aij = a[i][j];
        const Poly& akj = a[k][j];
        if (aik.is_zero() || akj.is_zero()) {
          if (aij.is_zero() || same_scale) continue;
          aij = akk * aij;
        } else {
          aij = akk * aij - aik * akj;
        }
        if (!prev.is_one() && !aij.is_zero()) aij = aij.divide_exact(prev);
      }
      a[i][ck] = Poly(vars);
    }
    prev = a[k][ck];
  }
  Poly d = a[n - 1][col[n - 1]];
  if (negate) d = -d;
  return d.shifted(total);
}

/// Laplace expansion along rows with memoization over column subsets.
template <Coefficient K>
LaurentPoly<K> det_cofactor(const Matrix<K>& m) {
  using Poly = LaurentPoly<K>;
  const std::size_t n = m.rows();
  if (n > 24) throw DimensionError("cofactor determinant limited to 24x24, got " + m.shape());
  std::unordered_map<std::uint32_t, Poly> memo;
  auto rec = [&](auto& self, std::uint32_t mask) -> Poly {
    const std::size_t used = n - static_cast<std::size_t>(__builtin_popcount(mask));
    if (used == n) return Poly::one(m.vars());
    if (auto it = memo.find(mask); it != memo.end()) return it->second;
    Poly sum(m.vars());
    int parity = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (!(mask & (1U << j))) continue;
      const Poly& e = m(used, j);
      if (!e.is_zero()) {
        Poly minor = self(self, mask & ~(1U << j));
        if (!minor.is_zero()) {
          Poly term = e * minor;
          sum = parity ? sum - term : sum + term;
        }
      }
      parity ^= 1;
    }
    memo.emplace(mask, sum);
    return sum;
  };
  const std::uint32_t full = n == 32 ? ~0U : ((1U << n) - 1U);
  return rec(rec, full);
}

}  // namespace detail

/// Exact determinant. Both algorithms return the identical polynomial.
template <Coefficient K>
LaurentPoly<K> determinant(const Matrix<K>& m, DetAlgorithm alg = DetAlgorithm::bareiss) {
  if (!m.is_square()) throw DimensionError("determinant of non-square " + m.shape() + " matrix");
  return alg == DetAlgorithm::bareiss ? detail::det_bareiss(m) : detail::det_cofactor(m);
}

/// Transposed cofactor matrix: m · adj(m) = det(m) · I.
template <Coefficient K>
Matrix<K> adjugate(const Matrix<K>& m) {
  if (!m.is_square()) throw DimensionError("adjugate of non-square " + m.shape() + " matrix");
  using Poly = LaurentPoly<K>;
  const std::size_t n = m.rows();
  Matrix<K> adj(n, n, m.vars());
  if (n == 1) {
    adj(0, 0) = Poly::one(m.vars());
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<std::size_t> rs;
      std::vector<std::size_t> cs;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != i) rs.push_back(k);
        if (k != j) cs.push_back(k);
      }
      Poly c = determinant(m.select(rs, cs));
      adj(j, i) = ((i + j) % 2) ? -c : c;
    }
  }
  return adj;
}

/// Inverse over the Laurent ring, or nullopt when the determinant is not a
/// unit (a single nonzero term).
template <Coefficient K>
std::optional<Matrix<K>> inverse(const Matrix<K>& m) {
  if (!m.is_square()) throw DimensionError("inverse of non-square " + m.shape() + " matrix");
  LaurentPoly<K> det = determinant(m);
  if (!det.is_monomial()) return std::nullopt;
  return adjugate(m).map([&](const LaurentPoly<K>& e) { return e.divide_exact(det); });
}

extern template class Matrix<Rational>;
extern template class Matrix<GaussianRational>;
extern template class Matrix<GF2>;

}  // namespace longknot

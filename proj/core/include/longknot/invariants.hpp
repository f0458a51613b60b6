#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "longknot/diagram.hpp"
#include "longknot/matrix.hpp"
#include "longknot/normal_form.hpp"
#include "longknot/switch.hpp"

namespace longknot {

/// M: n relations on n+1 semi-arcs. The square variants append one
/// relation: x₀ = xₙ (Mhat), x₀ = 0 (Mo), xₙ = 0 (Mn).
enum class Variant { M, Mhat, Mo, Mn };

inline constexpr std::array<Variant, 4> kVariants{Variant::M, Variant::Mhat, Variant::Mo, Variant::Mn};

std::string_view to_string(Variant v);
Variant parse_variant(std::string_view text);

/// Integer combination c₀I + c₁A + c₂B + c₃C + c₄D of switch blocks.
struct BlockEntry {
  std::array<std::int32_t, 5> coeff{};

  static BlockEntry identity(std::int32_t c = 1) { return {{c, 0, 0, 0, 0}}; }
  static BlockEntry a() { return {{0, 1, 0, 0, 0}}; }
  static BlockEntry b() { return {{0, 0, 1, 0, 0}}; }
  static BlockEntry c() { return {{0, 0, 0, 1, 0}}; }
  static BlockEntry d() { return {{0, 0, 0, 0, 1}}; }

  bool is_zero() const { return coeff == std::array<std::int32_t, 5>{}; }
  BlockEntry& operator+=(const BlockEntry& o) {
    for (std::size_t k = 0; k < 5; ++k) coeff[k] += o.coeff[k];
    return *this;
  }
  /// `-1`, `A`, `D-1`, `0`, ...
  std::string to_string() const;

  friend bool operator==(const BlockEntry&, const BlockEntry&) = default;
  friend auto operator<=>(const BlockEntry&, const BlockEntry&) = default;
};

/// Block presentation matrix over the switch algebra: rows are relations,
/// columns are semi-arcs x₀ … xₙ. Independent of the switch until expanded.
class PresentationMatrix {
 public:
  PresentationMatrix(Variant variant, std::size_t rows, std::size_t cols, std::string code, KnotKind kind)
      : variant_(variant), rows_(rows), cols_(cols), grid_(rows * cols), code_(std::move(code)), kind_(kind) {}

  Variant variant() const noexcept { return variant_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const std::string& diagram_code() const noexcept { return code_; }
  KnotKind kind() const noexcept { return kind_; }

  const BlockEntry& operator()(std::size_t r, std::size_t c) const { return grid_[r * cols_ + c]; }
  BlockEntry& operator()(std::size_t r, std::size_t c) { return grid_[r * cols_ + c]; }

  /// The Λ-matrix of the selected block rows and columns under `s`.
  template <Coefficient K>
  Matrix<K> expand(const Switch<K>& s, const std::vector<std::size_t>& rows,
                   const std::vector<std::size_t>& cols) const;
  template <Coefficient K>
  Matrix<K> expand(const Switch<K>& s) const;

  /// Rows of block symbols separated by spaces.
  std::string render() const;

  /// True when the submatrix on `rows` × `cols` has a block row or block
  /// column with only zero symbols, so its determinant vanishes.
  bool has_zero_line(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;

  /// How many block submatrices codimension `r` enumerates.
  std::size_t minor_count(std::size_t r) const;

  friend bool operator==(const PresentationMatrix& a, const PresentationMatrix& b) {
    return a.variant_ == b.variant_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.grid_ == b.grid_;
  }

 private:
  Variant variant_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<BlockEntry> grid_;
  std::string code_;
  KnotKind kind_;
};

/// Crossing relations in order of first appearance, two rows per crossing.
/// Positive crossing, x_i incoming over, x_j incoming under:
///   x_{j+1} = A x_i + B x_j,  x_{i+1} = C x_i + D x_j.
/// Negative crossing, x_i incoming under, x_j incoming over:
///   x_i = A x_{j+1} + B x_{i+1},  x_j = C x_{j+1} + D x_{i+1}.
/// A flat crossing is read as positive with the first role as over.
PresentationMatrix build_presentation(const LongDiagram& d, Variant variant);

/// The cyclic presentation of the closed diagram: n relations on the n
/// semi-arcs left after identifying xₙ with x₀.
PresentationMatrix closed_presentation(const LongDiagram& d);

/// Flat diagrams need a flat (involutory) switch.
void check_compatible(const LongDiagram& d, KnotKind switch_kind);

template <Coefficient K>
PresentationMatrix build_presentation(const LongDiagram& d, const Switch<K>& s, Variant variant) {
  check_compatible(d, s.kind());
  return build_presentation(d, variant);
}

/// Every k-element subset of {0, …, n−1} in lexicographic order; stops early
/// when `f` returns false. Returns false if stopped.
template <class F>
bool for_each_subset(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return true;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (!f(static_cast<const std::vector<std::size_t>&>(idx))) return false;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return true;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/// Statistics of one codim_det call.
struct CodimStats {
  std::size_t determinants = 0;
  /// Σ (scalar size)³ over the determinants taken; a machine-independent
  /// proxy for running time.
  std::size_t work = 0;
  bool short_circuited = false;
  bool exhausted = false;
};

namespace detail {

// gcd of the minors of `full` that keep `keep` groups of `group` consecutive
// rows and columns; the group is a block (d) or a single scalar line (1).
template <Coefficient K, class Skip>
std::optional<UnitNormalForm<K>> gcd_of_minors(const Matrix<K>& full, std::size_t group, std::size_t keep,
                                               UnitMode mode, std::size_t work_limit, DetAlgorithm alg,
                                               CodimStats* stats, Skip&& skip) {
  const Variables vars = full.vars();
  CodimStats local;
  LaurentPoly<K> g(vars);
  bool have = false;
  const std::size_t size = keep * group;
  std::vector<std::size_t> srows(size);
  std::vector<std::size_t> scols(size);
  for_each_subset(full.rows() / group, keep, [&](const std::vector<std::size_t>& rows) {
    for (std::size_t k = 0; k < keep; ++k) {
      for (std::size_t e = 0; e < group; ++e) srows[k * group + e] = rows[k] * group + e;
    }
    return for_each_subset(full.cols() / group, keep, [&](const std::vector<std::size_t>& cols) {
      if (skip(rows, cols)) return true;
      if (work_limit && local.work > work_limit) {
        local.exhausted = true;
        return false;
      }
      for (std::size_t k = 0; k < keep; ++k) {
        for (std::size_t e = 0; e < group; ++e) scols[k * group + e] = cols[k] * group + e;
      }
      LaurentPoly<K> det = determinant(full.select(srows, scols), alg);
      ++local.determinants;
      local.work += size * size * size;
      if (det.is_zero()) return true;
      if (!have) {
        g = canonicalize(det, mode).representative();
        have = true;
      } else {
        g = laurent_gcd<K>({g, det}, mode);
      }
      if (canonicalize(g, mode).is_one()) {
        local.short_circuited = true;
        return false;
      }
      return true;
    });
  });
  if (stats) *stats = local;
  if (local.exhausted) return std::nullopt;
  return canonicalize(g, mode);
}

}  // namespace detail

/// gcd of the determinants of all codimension-r block submatrices, chosen
/// at block level before expansion: drop r block rows and r (square) or
/// r+1 (M) block columns. When nothing is left the value is 1.
///
/// Gives up and returns nullopt once `work_limit` (if nonzero) is exceeded.
template <Coefficient K>
std::optional<UnitNormalForm<K>> codim_det_limited(const PresentationMatrix& p, const Switch<K>& s, std::size_t r,
                                                   UnitMode mode, std::size_t work_limit,
                                                   DetAlgorithm alg = DetAlgorithm::bareiss,
                                                   CodimStats* stats = nullptr) {
  if (p.rows() <= r) return canonicalize(LaurentPoly<K>::one(s.vars()), mode);
  return detail::gcd_of_minors<K>(p.expand(s), s.dim(), p.rows() - r, mode, work_limit, alg, stats,
                                  [&](const auto& rows, const auto& cols) { return p.has_zero_line(rows, cols); });
}

/// The Λ-level analogue: minors chosen among scalar rows and columns after
/// expansion, dropping r·d rows (and r·d or r·d + d columns). This is the
/// Fitting-ideal invariant of the represented module; it serves as a
/// reference when block-level values disagree across equivalent diagrams.
template <Coefficient K>
std::optional<UnitNormalForm<K>> scalar_codim_det(const PresentationMatrix& p, const Switch<K>& s, std::size_t r,
                                                  UnitMode mode, std::size_t work_limit = 0,
                                                  CodimStats* stats = nullptr) {
  if (p.rows() <= r) return canonicalize(LaurentPoly<K>::one(s.vars()), mode);
  const std::size_t d = s.dim();
  return detail::gcd_of_minors<K>(p.expand(s), 1, (p.rows() - r) * d, mode, work_limit, DetAlgorithm::bareiss,
                                  stats, [](const auto&, const auto&) { return false; });
}

template <Coefficient K>
UnitNormalForm<K> codim_det(const PresentationMatrix& p, const Switch<K>& s, std::size_t r, UnitMode mode,
                            DetAlgorithm alg = DetAlgorithm::bareiss, CodimStats* stats = nullptr) {
  return *codim_det_limited(p, s, r, mode, 0, alg, stats);
}

template <Coefficient K>
struct InvariantProfile {
  std::string diagram_code;
  std::string switch_name;
  UnitMode mode = UnitMode::field;
  std::size_t r_max = 0;
  std::map<std::pair<Variant, std::size_t>, UnitNormalForm<K>> values;

  const UnitNormalForm<K>& at(Variant v, std::size_t r) const { return values.at({v, r}); }

  /// Canonical equality of every entry.
  bool same_values(const InvariantProfile& o) const { return mode == o.mode && values == o.values; }
};

template <Coefficient K>
InvariantProfile<K> invariant_profile(const LongDiagram& d, const Switch<K>& s, std::size_t r_max,
                                      std::optional<UnitMode> mode = std::nullopt,
                                      DetAlgorithm alg = DetAlgorithm::bareiss) {
  InvariantProfile<K> prof;
  prof.diagram_code = d.code();
  prof.switch_name = s.name();
  prof.mode = mode.value_or(s.unit_mode());
  prof.r_max = r_max;
  for (Variant v : kVariants) {
    const PresentationMatrix p = build_presentation(d, s, v);
    for (std::size_t r = 0; r <= r_max; ++r) prof.values.emplace(std::pair{v, r}, codim_det(p, s, r, prof.mode, alg));
  }
  return prof;
}

/// Like `invariant_profile`, but codimensions are raised one at a time and
/// the profile stops at the last codimension whose four values fit into
/// `work_limit` (codimension 0 is always computed). `r_max` of the result
/// records how far it got.
template <Coefficient K>
InvariantProfile<K> bounded_profile(const LongDiagram& d, const Switch<K>& s, std::size_t r_max,
                                    std::size_t work_limit, std::optional<UnitMode> mode = std::nullopt) {
  InvariantProfile<K> prof;
  prof.diagram_code = d.code();
  prof.switch_name = s.name();
  prof.mode = mode.value_or(s.unit_mode());
  std::vector<PresentationMatrix> mats;
  for (Variant v : kVariants) mats.push_back(build_presentation(d, s, v));
  for (std::size_t r = 0; r <= r_max; ++r) {
    std::size_t spent = 0;
    std::map<std::pair<Variant, std::size_t>, UnitNormalForm<K>> layer;
    for (std::size_t k = 0; k < mats.size(); ++k) {
      const std::size_t left = r == 0 || work_limit == 0 ? 0 : (spent < work_limit ? work_limit - spent : 1);
      CodimStats st;
      auto v = codim_det_limited(mats[k], s, r, prof.mode, left, DetAlgorithm::bareiss, &st);
      spent += st.work;
      if (!v) return prof;
      layer.emplace(std::pair{kVariants[k], r}, std::move(*v));
    }
    prof.values.merge(layer);
    prof.r_max = r;
  }
  return prof;
}

/// Outcome of the divisibility checks p | ǒp and p | ňp per codimension,
/// plus the structural identity between Mhat and the closed-knot
/// presentation.
struct DivisibilityReport {
  struct Row {
    std::size_t r = 0;
    bool divides_o = false;
    bool divides_n = false;
    /// Mhat value equals the value of the folded closed presentation.
    /// Informational: block-level values can differ between the two
    /// presentations of the same module.
    std::optional<bool> closure_value_matches;
  };
  std::vector<Row> rows;
  bool closure_structural = false;

  bool ok() const {
    if (!closure_structural) return false;
    for (const auto& r : rows) {
      if (!r.divides_o || !r.divides_n) return false;
    }
    return true;
  }
};

/// Mhat with the xₙ column folded into x₀ and the x₀ = xₙ row dropped.
PresentationMatrix fold_closure(const PresentationMatrix& mhat);

/// The same checks reusing the values of `prof` (its r_max bounds the rows).
template <Coefficient K>
DivisibilityReport check_divisibility(const LongDiagram& d, const Switch<K>& s, const InvariantProfile<K>& prof) {
  if (d.kind() != KnotKind::virtual_knot) throw KindError("divisibility check needs a virtual diagram");
  DivisibilityReport rep;
  rep.closure_structural = fold_closure(build_presentation(d, s, Variant::Mhat)) == closed_presentation(d);
  for (std::size_t r = 0; r <= prof.r_max; ++r) {
    const auto p = prof.at(Variant::M, r).representative();
    const auto o = prof.at(Variant::Mo, r).representative();
    const auto n = prof.at(Variant::Mn, r).representative();
    rep.rows.push_back({r, laurent_divides(p, o, prof.mode), laurent_divides(p, n, prof.mode), std::nullopt});
  }
  return rep;
}

template <Coefficient K>
DivisibilityReport check_divisibility(const LongDiagram& d, const Switch<K>& s, std::size_t r_max,
                                     std::optional<UnitMode> mode = std::nullopt) {
  if (d.kind() != KnotKind::virtual_knot) throw KindError("divisibility check needs a virtual diagram");
  const UnitMode m = mode.value_or(s.unit_mode());
  DivisibilityReport rep;
  const PresentationMatrix mhat = build_presentation(d, s, Variant::Mhat);
  const PresentationMatrix closed = closed_presentation(d);
  rep.closure_structural = fold_closure(mhat) == closed;
  const PresentationMatrix pm = build_presentation(d, s, Variant::M);
  const PresentationMatrix po = build_presentation(d, s, Variant::Mo);
  const PresentationMatrix pn = build_presentation(d, s, Variant::Mn);
  for (std::size_t r = 0; r <= r_max; ++r) {
    const auto p = codim_det(pm, s, r, m).representative();
    const auto o = codim_det(po, s, r, m).representative();
    const auto n = codim_det(pn, s, r, m).representative();
    const auto h = codim_det(mhat, s, r, m);
    const auto q = codim_det(closed, s, r, m);
    rep.rows.push_back({r, laurent_divides(p, o, m), laurent_divides(p, n, m), h == q});
  }
  return rep;
}

template <Coefficient K>
struct ProductReport {
  UnitNormalForm<K> o_product;
  UnitNormalForm<K> o_left;
  UnitNormalForm<K> o_right;
  UnitNormalForm<K> n_product;
  UnitNormalForm<K> n_left;
  UnitNormalForm<K> n_right;
  bool o_holds = false;
  bool n_holds = false;

  bool ok() const { return o_holds && n_holds; }
};

/// ǒp⁽⁰⁾ and ňp⁽⁰⁾ are multiplicative under concatenation.
template <Coefficient K>
ProductReport<K> check_product_formula(const LongDiagram& k1, const LongDiagram& k2, const Switch<K>& s,
                                       std::optional<UnitMode> mode = std::nullopt) {
  const UnitMode m = mode.value_or(s.unit_mode());
  const LongDiagram prod = concat(k1, k2);
  auto value = [&](const LongDiagram& d, Variant v) { return codim_det(build_presentation(d, s, v), s, 0, m); };
  ProductReport<K> rep;
  rep.o_product = value(prod, Variant::Mo);
  rep.o_left = value(k1, Variant::Mo);
  rep.o_right = value(k2, Variant::Mo);
  rep.n_product = value(prod, Variant::Mn);
  rep.n_left = value(k1, Variant::Mn);
  rep.n_right = value(k2, Variant::Mn);
  rep.o_holds = rep.o_product == canonicalize(rep.o_left.representative() * rep.o_right.representative(), m);
  rep.n_holds = rep.n_product == canonicalize(rep.n_left.representative() * rep.n_right.representative(), m);
  return rep;
}

template <Coefficient K>
Matrix<K> PresentationMatrix::expand(const Switch<K>& s, const std::vector<std::size_t>& rows,
                                     const std::vector<std::size_t>& cols) const {
  const std::size_t d = s.dim();
  const Variables vars = s.vars();
  const std::array<const Matrix<K>*, 5> parts{nullptr, &s.a(), &s.b(), &s.c(), &s.d()};
  std::map<BlockEntry, Matrix<K>> cache;
  Matrix<K> out(rows.size() * d, cols.size() * d, vars);
  for (std::size_t bi = 0; bi < rows.size(); ++bi) {
    for (std::size_t bj = 0; bj < cols.size(); ++bj) {
      const BlockEntry& e = (*this)(rows[bi], cols[bj]);
      if (e.is_zero()) continue;
      auto it = cache.find(e);
      if (it == cache.end()) {
        Matrix<K> m = Matrix<K>::identity(d, vars).scaled(LaurentPoly<K>::constant(vars, K(e.coeff[0])));
        for (std::size_t k = 1; k < 5; ++k) {
          if (e.coeff[k] != 0) m = m + parts[k]->scaled(LaurentPoly<K>::constant(vars, K(e.coeff[k])));
        }
        it = cache.emplace(e, std::move(m)).first;
      }
      out.set_block(bi * d, bj * d, it->second);
    }
  }
  return out;
}

template <Coefficient K>
Matrix<K> PresentationMatrix::expand(const Switch<K>& s) const {
  std::vector<std::size_t> rs(rows_);
  std::vector<std::size_t> cs(cols_);
  for (std::size_t k = 0; k < rows_; ++k) rs[k] = k;
  for (std::size_t k = 0; k < cols_; ++k) cs[k] = k;
  return expand(s, rs, cs);
}

}  // namespace longknot

#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "longknot/matrix.hpp"
#include "longknot/normal_form.hpp"
#include "longknot/quaternion.hpp"

namespace longknot {

enum class KnotKind { virtual_knot, flat };

std::string_view to_string(KnotKind k);
KnotKind parse_knot_kind(std::string_view text);

/// One named check of a switch validation.
struct SwitchCheck {
  std::string name;
  bool passed = false;
  /// Failing this check makes the switch invalid; otherwise informational.
  bool required = true;
};

/// A represented switch S = [[A, B], [C, D]] with d×d blocks over Λ.
///
/// Instances built through `make_switch` or `complete_switch` have passed
/// every axiom: A, B, I−A and S invertible, the Yang–Baxter equation as a
/// 3d×3d block identity, and S² = I for flat switches.
template <Coefficient K>
class Switch {
 public:
  using Mat = Matrix<K>;

  Switch(std::string name, KnotKind kind, UnitMode mode, Mat a, Mat b, Mat c, Mat d)
      : name_(std::move(name)),
        kind_(kind),
        mode_(mode),
        a_(std::move(a)),
        b_(std::move(b)),
        c_(std::move(c)),
        d_(std::move(d)) {}

  const std::string& name() const noexcept { return name_; }
  KnotKind kind() const noexcept { return kind_; }
  UnitMode unit_mode() const noexcept { return mode_; }
  std::size_t dim() const noexcept { return a_.rows(); }
  Variables vars() const noexcept { return a_.vars(); }
  const Mat& a() const noexcept { return a_; }
  const Mat& b() const noexcept { return b_; }
  const Mat& c() const noexcept { return c_; }
  const Mat& d() const noexcept { return d_; }

  Switch with_unit_mode(UnitMode m) const {
    Switch s = *this;
    s.mode_ = m;
    return s;
  }

  /// The 2d×2d matrix [[A, B], [C, D]].
  Mat matrix() const {
    const std::size_t n = dim();
    Mat s(2 * n, 2 * n, vars());
    s.set_block(0, 0, a_);
    s.set_block(0, n, b_);
    s.set_block(n, 0, c_);
    s.set_block(n, n, d_);
    return s;
  }

  friend bool operator==(const Switch& x, const Switch& y) {
    return x.kind_ == y.kind_ && x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
  }

 private:
  std::string name_;
  KnotKind kind_;
  UnitMode mode_;
  Mat a_;
  Mat b_;
  Mat c_;
  Mat d_;
};

using AnySwitch = std::variant<Switch<Rational>, Switch<GaussianRational>, Switch<GF2>>;

/// S₁₂ = [[A,B,0],[C,D,0],[0,0,I]] and S₂₃ = [[I,0,0],[0,A,B],[0,C,D]].
template <Coefficient K>
std::pair<Matrix<K>, Matrix<K>> yang_baxter_factors(const Switch<K>& s) {
  const std::size_t n = s.dim();
  const Variables v = s.vars();
  Matrix<K> s12(3 * n, 3 * n, v);
  Matrix<K> s23(3 * n, 3 * n, v);
  s12.set_block(0, 0, s.matrix());
  s12.set_block(2 * n, 2 * n, Matrix<K>::identity(n, v));
  s23.set_block(0, 0, Matrix<K>::identity(n, v));
  s23.set_block(n, n, s.matrix());
  return {std::move(s12), std::move(s23)};
}

template <Coefficient K>
bool satisfies_yang_baxter(const Switch<K>& s) {
  auto [s12, s23] = yang_baxter_factors(s);
  return s12 * s23 * s12 == s23 * s12 * s23;
}

/// Both sides of A⁻¹B⁻¹AB − B⁻¹AB = BA⁻¹B⁻¹A − A multiplied by det(A)det(B),
/// so the identity can be tested inside Λ even when A⁻¹ needs fractions.
template <Coefficient K>
std::pair<Matrix<K>, Matrix<K>> algebra_relation_sides(const Matrix<K>& a, const Matrix<K>& b) {
  const LaurentPoly<K> da = determinant(a);
  const LaurentPoly<K> db = determinant(b);
  const Matrix<K> aa = adjugate(a);
  const Matrix<K> ab = adjugate(b);
  Matrix<K> lhs = aa * ab * a * b - (ab * a * b).scaled(da);
  Matrix<K> rhs = b * aa * ab * a - a.scaled(da * db);
  return {std::move(lhs), std::move(rhs)};
}

/// C = A⁻¹B⁻¹A(I−A) and D = I − A⁻¹B⁻¹AB; nullopt when A or B is singular
/// or the blocks are not Laurent polynomial matrices.
template <Coefficient K>
std::optional<std::pair<Matrix<K>, Matrix<K>>> completion_blocks(const Matrix<K>& a, const Matrix<K>& b) {
  const LaurentPoly<K> den = determinant(a) * determinant(b);
  if (den.is_zero()) return std::nullopt;
  const Matrix<K> id = Matrix<K>::identity(a.rows(), a.vars());
  const Matrix<K> head = adjugate(a) * adjugate(b) * a;
  const Matrix<K> c_num = head * (id - a);
  const Matrix<K> d_num = id.scaled(den) - head * b;
  Matrix<K> c(a.rows(), a.rows(), a.vars());
  Matrix<K> d(a.rows(), a.rows(), a.vars());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.rows(); ++j) {
      auto x = c_num(i, j).exact_quotient(den);
      auto y = d_num(i, j).exact_quotient(den);
      if (!x || !y) return std::nullopt;
      c(i, j) = std::move(*x);
      d(i, j) = std::move(*y);
    }
  }
  return std::make_pair(std::move(c), std::move(d));
}

/// Runs every axiom check and the informational identities. Invertibility
/// means a nonzero determinant, i.e. invertible over the fraction field;
/// the `*-unit` entries record whether the inverse stays inside Λ.
template <Coefficient K>
std::vector<SwitchCheck> switch_checks(const Switch<K>& s) {
  std::vector<SwitchCheck> out;
  const auto& a = s.a();
  const auto& b = s.b();
  const std::size_t n = a.rows();
  const bool square = a.is_square() && b.rows() == n && b.cols() == n && s.c().rows() == n && s.c().cols() == n &&
                      s.d().rows() == n && s.d().cols() == n && a.cols() == n;
  out.push_back({"square-blocks", square, true});
  if (!square) return out;
  const Matrix<K> id = Matrix<K>::identity(n, a.vars());
  auto det_check = [&](const std::string& name, const Matrix<K>& m) {
    const LaurentPoly<K> det = determinant(m);
    out.push_back({name + "-invertible", !det.is_zero(), true});
    out.push_back({name + "-unit", det.is_monomial(), false});
  };
  det_check("A", a);
  det_check("B", b);
  det_check("I-A", id - a);
  det_check("S", s.matrix());
  out.push_back({"yang-baxter", satisfies_yang_baxter(s), true});
  const bool involutory = (s.matrix() * s.matrix()).is_identity();
  out.push_back({"involutory", involutory, s.kind() == KnotKind::flat});
  auto sides = algebra_relation_sides(a, b);
  out.push_back({"algebra-relation", sides.first == sides.second, false});
  auto cd = completion_blocks(a, b);
  out.push_back({"completion-consistent", cd && cd->first == s.c() && cd->second == s.d(), false});
  return out;
}

/// Throws InvalidSwitchError naming the first required check that fails.
template <Coefficient K>
void validate_switch(const Switch<K>& s) {
  for (const auto& c : switch_checks(s)) {
    if (c.required && !c.passed) throw InvalidSwitchError(c.name, "switch '" + s.name() + "'");
  }
}

template <Coefficient K>
Switch<K> make_switch(std::string name, KnotKind kind, UnitMode mode, Matrix<K> a, Matrix<K> b, Matrix<K> c,
                      Matrix<K> d) {
  Switch<K> s(std::move(name), kind, mode, std::move(a), std::move(b), std::move(c), std::move(d));
  validate_switch(s);
  return s;
}

/// Builds the switch whose first row is (A, B), deriving C and D.
template <Coefficient K>
Switch<K> complete_switch(const Matrix<K>& a, const Matrix<K>& b, std::string name = "completed",
                          KnotKind kind = KnotKind::virtual_knot, UnitMode mode = UnitMode::field) {
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows()) {
    throw DimensionError("A and B must be square of equal size");
  }
  const Matrix<K> id = Matrix<K>::identity(a.rows(), a.vars());
  if (determinant(a).is_zero()) throw PreconditionError("A is not invertible");
  if (determinant(b).is_zero()) throw PreconditionError("B is not invertible");
  if (determinant(id - a).is_zero()) throw PreconditionError("I - A is not invertible");
  auto cd = completion_blocks(a, b);
  if (!cd) throw PreconditionError("completion of (A, B) leaves the Laurent polynomial ring");
  return make_switch(std::move(name), kind, mode, a, b, std::move(cd->first), std::move(cd->second));
}

/// Which of S = S†, S² = I, SS† = I hold.
///
/// The conjugate is evaluated in two readings: S† = [[D, C], [B, A]], under
/// which the Alexander specialization (2, ±1; ∓1, 0) is dagger-unitary, and
/// the literal [[D, C], [C, A]] (`*_displayed`).
struct SymmetryReport {
  bool self_dagger = false;
  bool involutory = false;
  bool dagger_unitary = false;
  bool self_dagger_displayed = false;
  bool dagger_unitary_displayed = false;

  /// Names of the identities that hold in the primary reading.
  std::vector<std::string> names() const {
    std::vector<std::string> n;
    if (self_dagger) n.emplace_back("self-dagger");
    if (involutory) n.emplace_back("involutory");
    if (dagger_unitary) n.emplace_back("dagger-unitary");
    return n;
  }
};

template <Coefficient K>
SymmetryReport classify_symmetry(const Switch<K>& s) {
  const std::size_t n = s.dim();
  auto dagger = [&](const Matrix<K>& lower_left) {
    Matrix<K> m(2 * n, 2 * n, s.vars());
    m.set_block(0, 0, s.d());
    m.set_block(0, n, s.c());
    m.set_block(n, 0, lower_left);
    m.set_block(n, n, s.a());
    return m;
  };
  const Matrix<K> sm = s.matrix();
  const Matrix<K> dag = dagger(s.b());
  const Matrix<K> dag_displayed = dagger(s.c());
  SymmetryReport r;
  r.self_dagger = sm == dag;
  r.involutory = (sm * sm).is_identity();
  r.dagger_unitary = (sm * dag).is_identity();
  r.self_dagger_displayed = sm == dag_displayed;
  r.dagger_unitary_displayed = (sm * dag_displayed).is_identity();
  return r;
}

/// Names accepted by `builtin_switch`.
std::vector<std::string> builtin_switch_names();

/// budapest | weyl-q | flat-weyl | alexander-spec.
AnySwitch builtin_switch(std::string_view name);

/// Parses the structured switch document (JSON). With `validate` false the
/// axioms are not checked; that exists for negative-control experiments.
AnySwitch parse_switch(std::string_view text, bool validate = true);
AnySwitch load_switch(const std::string& path, bool validate = true);
/// Serializes in `matrix` entry form.
std::string dump_switch(const AnySwitch& s);

const std::string& switch_name(const AnySwitch& s);
KnotKind switch_kind(const AnySwitch& s);
AnySwitch with_unit_mode(const AnySwitch& s, UnitMode mode);

}  // namespace longknot

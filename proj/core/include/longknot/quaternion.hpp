#pragma once

#include <array>

#include "longknot/laurent.hpp"
#include "longknot/matrix.hpp"

namespace longknot {

/// α₁ + α₂i + α₃j + α₄k with real (rational) Laurent components. The Laurent
/// variables are central: they commute with i, j, k.
class Quaternion {
 public:
  using Poly = LaurentPoly<Rational>;

  Quaternion() = default;
  explicit Quaternion(Variables vars) : c_{Poly(vars), Poly(vars), Poly(vars), Poly(vars)} {}
  Quaternion(Poly a1, Poly a2, Poly a3, Poly a4);

  static Quaternion scalar(const Poly& p);
  static Quaternion one(Variables vars) { return scalar(Poly::one(vars)); }
  static Quaternion i(Variables vars);
  static Quaternion j(Variables vars);
  static Quaternion k(Variables vars);

  Variables vars() const { return c_[0].vars(); }
  /// Component along 1, i, j, k for index 0..3.
  const Poly& operator[](std::size_t n) const { return c_[n]; }

  Quaternion conj() const;
  /// α₁² + α₂² + α₃² + α₄²; equals the determinant of the standard image.
  Poly norm() const;
  /// Scales every component by a central Laurent polynomial.
  Quaternion scaled(const Poly& p) const;

  Quaternion operator-() const;
  friend Quaternion operator+(const Quaternion& a, const Quaternion& b);
  friend Quaternion operator-(const Quaternion& a, const Quaternion& b);
  friend Quaternion operator*(const Quaternion& a, const Quaternion& b);
  friend bool operator==(const Quaternion& a, const Quaternion& b) = default;

 private:
  std::array<Poly, 4> c_;
};

/// Lifts a rational Laurent polynomial into the Gaussian-rational ring.
LaurentPoly<GaussianRational> to_gaussian(const LaurentPoly<Rational>& p);

/// The standard 2×2 complex representation
/// (α₁+α₂i+α₃j+α₄k) ↦ [[α₁+α₂i, α₃+α₄i], [−α₃+α₄i, α₁−α₂i]].
/// It is a ring homomorphism.
Matrix<GaussianRational> quat_to_matrix(const Quaternion& q);

}  // namespace longknot

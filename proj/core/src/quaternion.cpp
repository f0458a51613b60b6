#include "longknot/quaternion.hpp"

namespace longknot {

Quaternion::Quaternion(Poly a1, Poly a2, Poly a3, Poly a4)
    : c_{std::move(a1), std::move(a2), std::move(a3), std::move(a4)} {
  const Variables v = c_[0].vars();
  for (const auto& p : c_) {
    if (p.vars() != v) throw VariableSetError("quaternion components over different variable sets");
  }
}

Quaternion Quaternion::scalar(const Poly& p) {
  Poly z(p.vars());
  return {p, z, z, z};
}

Quaternion Quaternion::i(Variables vars) {
  Poly z(vars);
  return {z, Poly::one(vars), z, z};
}

Quaternion Quaternion::j(Variables vars) {
  Poly z(vars);
  return {z, z, Poly::one(vars), z};
}

Quaternion Quaternion::k(Variables vars) {
  Poly z(vars);
  return {z, z, z, Poly::one(vars)};
}

Quaternion Quaternion::conj() const { return {c_[0], -c_[1], -c_[2], -c_[3]}; }

Quaternion::Poly Quaternion::norm() const {
  return c_[0] * c_[0] + c_[1] * c_[1] + c_[2] * c_[2] + c_[3] * c_[3];
}

Quaternion Quaternion::scaled(const Poly& p) const {
  return {c_[0] * p, c_[1] * p, c_[2] * p, c_[3] * p};
}

Quaternion Quaternion::operator-() const { return {-c_[0], -c_[1], -c_[2], -c_[3]}; }

Quaternion operator+(const Quaternion& a, const Quaternion& b) {
  return {a.c_[0] + b.c_[0], a.c_[1] + b.c_[1], a.c_[2] + b.c_[2], a.c_[3] + b.c_[3]};
}

Quaternion operator-(const Quaternion& a, const Quaternion& b) {
  return {a.c_[0] - b.c_[0], a.c_[1] - b.c_[1], a.c_[2] - b.c_[2], a.c_[3] - b.c_[3]};
}

Quaternion operator*(const Quaternion& a, const Quaternion& b) {
  const auto& [a1, a2, a3, a4] = a.c_;
  const auto& [b1, b2, b3, b4] = b.c_;
  return {a1 * b1 - a2 * b2 - a3 * b3 - a4 * b4,  //
          a1 * b2 + a2 * b1 + a3 * b4 - a4 * b3,  //
          a1 * b3 - a2 * b4 + a3 * b1 + a4 * b2,  //
          a1 * b4 + a2 * b3 - a3 * b2 + a4 * b1};
}

LaurentPoly<GaussianRational> to_gaussian(const LaurentPoly<Rational>& p) {
  std::vector<LaurentPoly<GaussianRational>::Term> ts;
  ts.reserve(p.size());
  for (const auto& t : p.terms()) ts.push_back({t.exponents, GaussianRational(t.coeff)});
  return LaurentPoly<GaussianRational>::from_terms(p.vars(), std::move(ts));
}

Matrix<GaussianRational> quat_to_matrix(const Quaternion& q) {
  using G = LaurentPoly<GaussianRational>;
  const Variables vars = q.vars();
  const G i = G::constant(vars, GaussianRational::i());
  const G a1 = to_gaussian(q[0]);
  const G a2 = to_gaussian(q[1]);
  const G a3 = to_gaussian(q[2]);
  const G a4 = to_gaussian(q[3]);
  Matrix<GaussianRational> m(2, 2, vars);
  m(0, 0) = a1 + i * a2;
  m(0, 1) = a3 + i * a4;
  m(1, 0) = -a3 + i * a4;
  m(1, 1) = a1 - i * a2;
  return m;
}

}  // namespace longknot

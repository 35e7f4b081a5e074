#include "legcirc/symplectic.hpp"

#include "legcirc/error.hpp"

namespace legcirc {

const Mat4& omega_matrix() {
  static const Mat4 omega = Mat4::from_rows({{{0, 0, 0, 1}, {0, 0, -1, 0}, {0, 1, 0, 0}, {-1, 0, 0, 0}}});
  return omega;
}

const Mat4& j_matrix() {
  static const Mat4 j = Mat4::from_rows({{{0, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}}});
  return j;
}

Rational symplectic_product(const Vec4& u, const Vec4& v) {
  return u[0] * v[3] - u[1] * v[2] + u[2] * v[1] - u[3] * v[0];
}

Vec4 apply_j(const Vec4& v) { return j_matrix() * v; }

std::pair<ComplexQ, ComplexQ> complex_coordinates(const Vec4& v) {
  if (is_zero(v)) throw Error(ErrorCode::ZeroVector, "complex coordinates of the zero vector");
  return {ComplexQ(v[0], -v[1]), ComplexQ(v[2], v[3])};
}

bool is_lagrangian(const Vec4& u, const Vec4& v) {
  return sgn(symplectic_product(u, v)) == 0 && rank_of({u, v}) == 2;
}

bool is_symplectic(const Mat4& m) { return m.transpose() * omega_matrix() * m == omega_matrix(); }

bool is_anti_symplectic(const Mat4& m) {
  return m.transpose() * omega_matrix() * m == Rational(-1) * omega_matrix();
}

SymplecticMatrix::SymplecticMatrix(const Mat4& m) : m_(m) {
  if (!is_symplectic(m)) throw Error(ErrorCode::NotSymplectic, "matrix is not symplectic: " + to_string(m));
}

SymplecticMatrix SymplecticMatrix::inverse() const {
  // M⁻¹ = −Ω Mᵀ Ω for symplectic M.
  return SymplecticMatrix(Rational(-1) * omega_matrix() * m_.transpose() * omega_matrix(), Trusted{});
}

SymplecticMatrix operator*(const SymplecticMatrix& x, const SymplecticMatrix& y) {
  return SymplecticMatrix(x.m_ * y.m_, SymplecticMatrix::Trusted{});
}

Vec4 operator*(const SymplecticMatrix& m, const Vec4& v) { return m.matrix() * v; }

Lagrangian::Lagrangian(const Vec4& u, const Vec4& v) : u_(u), v_(v) {
  if (rank_of({u, v}) != 2) throw Error(ErrorCode::NotLagrangian, "spanning vectors are dependent");
  if (sgn(symplectic_product(u, v)) != 0)
    throw Error(ErrorCode::NotLagrangian, "spanning vectors are not ω-orthogonal");
}

bool Lagrangian::contains(const Vec4& x) const { return rank_of({u_, v_, x}) == 2; }

Matrix Lagrangian::canonical() const {
  Matrix m = Matrix::from_rows({u_, v_});
  m.rref();
  return m;
}

Lagrangian Lagrangian::transformed(const Mat4& m) const { return Lagrangian(m * u_, m * v_); }

bool operator==(const Lagrangian& a, const Lagrangian& b) { return a.canonical() == b.canonical(); }

bool lagrangians_transverse(const Lagrangian& l1, const Lagrangian& l2) {
  return sgn(det4(l1.u(), l1.v(), l2.u(), l2.v())) != 0;
}

Mat4 transversal_reflection(const Lagrangian& l1, const Lagrangian& l2) {
  if (!lagrangians_transverse(l1, l2))
    throw Error(ErrorCode::NotTransverse, "reflection needs transverse Lagrangians");
  const Mat4 b = Mat4::from_columns(l1.u(), l1.v(), l2.u(), l2.v());
  return b * Mat4::diag(1, 1, -1, -1) * b.inverse();
}

Mat2 maslov_form(const Lagrangian& l1, const Lagrangian& l2, const Lagrangian& l3) {
  if (!lagrangians_transverse(l1, l2) || !lagrangians_transverse(l2, l3) || !lagrangians_transverse(l1, l3))
    throw Error(ErrorCode::NotTransverse, "Maslov form needs pairwise transverse Lagrangians");
  const Mat4 sigma = transversal_reflection(l1, l3);
  const Vec4 p[2] = {l2.u(), l2.v()};
  Mat2 g;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) g(i, j) = symplectic_product(p[i], sigma * p[j]);
  return g;
}

int signature_index(const Mat2& form) {
  const int d = sgn(form.det());
  if (d == 0) throw Error(ErrorCode::Degenerate, "degenerate Maslov form");
  if (d < 0) return 0;
  return sgn(form.trace()) > 0 ? 1 : -1;
}

int maslov_index(const Lagrangian& l1, const Lagrangian& l2, const Lagrangian& l3) {
  return signature_index(maslov_form(l1, l2, l3));
}

}  // namespace legcirc

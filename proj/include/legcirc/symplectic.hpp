#pragma once

#include "legcirc/linalg.hpp"

#include <utility>

namespace legcirc {

// Gram matrix of ω in the standard basis; ω(u,v) = uᵀΩv.
const Mat4& omega_matrix();
// Compatible complex structure; J² = −I and JᵀΩJ = −Ω.
const Mat4& j_matrix();

Rational symplectic_product(const Vec4& u, const Vec4& v);
Vec4 apply_j(const Vec4& v);

// Coordinates in the complex basis (e₁, e₃) on which J acts as i:
// z₁ = v₁ − i v₂, z₂ = v₃ + i v₄.
std::pair<ComplexQ, ComplexQ> complex_coordinates(const Vec4& v);

bool is_lagrangian(const Vec4& u, const Vec4& v);
bool is_symplectic(const Mat4& m);
bool is_anti_symplectic(const Mat4& m);

class SymplecticMatrix {
 public:
  SymplecticMatrix() : m_(Mat4::identity()) {}
  // Throws Error(NotSymplectic) unless MᵀΩM = Ω.
  explicit SymplecticMatrix(const Mat4& m);

  const Mat4& matrix() const { return m_; }
  SymplecticMatrix inverse() const;

  friend SymplecticMatrix operator*(const SymplecticMatrix& x, const SymplecticMatrix& y);
  friend bool operator==(const SymplecticMatrix& x, const SymplecticMatrix& y) { return x.m_ == y.m_; }

 private:
  struct Trusted {};
  SymplecticMatrix(const Mat4& m, Trusted) : m_(m) {}
  Mat4 m_;
};

Vec4 operator*(const SymplecticMatrix& m, const Vec4& v);

class Lagrangian {
 public:
  // Throws Error(NotLagrangian) if u, v are dependent or ω(u,v) ≠ 0.
  Lagrangian(const Vec4& u, const Vec4& v);

  const Vec4& u() const { return u_; }
  const Vec4& v() const { return v_; }
  bool contains(const Vec4& x) const;
  // Reduced row echelon form of the 2x4 span matrix.
  Matrix canonical() const;
  Lagrangian transformed(const Mat4& m) const;

  // Equality of spans, independent of the stored basis.
  friend bool operator==(const Lagrangian& a, const Lagrangian& b);

 private:
  Vec4 u_;
  Vec4 v_;
};

bool lagrangians_transverse(const Lagrangian& l1, const Lagrangian& l2);

// Identity on l1, minus identity on l2. Throws Error(NotTransverse).
Mat4 transversal_reflection(const Lagrangian& l1, const Lagrangian& l2);

// Gram matrix of (x,y) ↦ ω(x, σ_{l1,l3} y) on the stored basis of l2.
Mat2 maslov_form(const Lagrangian& l1, const Lagrangian& l2, const Lagrangian& l3);

// Half the signature of a symmetric 2x2 form via det/trace signs.
// Throws Error(Degenerate) when det = 0.
int signature_index(const Mat2& form);

// In {−1, 0, +1}. Throws Error(NotTransverse) for non-transverse pairs.
int maslov_index(const Lagrangian& l1, const Lagrangian& l2, const Lagrangian& l3);

}  // namespace legcirc

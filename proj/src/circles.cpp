#include "legcirc/circles.hpp"

#include "legcirc/error.hpp"

namespace legcirc {

CoorientedCircle lagrangian_to_circle(const Lagrangian& l) {
  const Vec4& u = l.u();
  const Vec4& v = l.v();
  const Rational det = u[0] * v[1] - v[0] * u[1];
  if (sgn(det) == 0) return CoorientedCircle{CoorientedCircle::Kind::LineOrInfinity, 0, 0, 0, l};
  // Right-multiply the span matrix by the inverse of its top block.
  const Rational i00 = v[1] / det, i01 = -v[0] / det, i10 = -u[1] / det, i11 = u[0] / det;
  const Rational p = u[2] * i00 + v[2] * i10;
  const Rational q = u[3] * i00 + v[3] * i10;
  const Rational r = u[2] * i01 + v[2] * i11;
  return CoorientedCircle{CoorientedCircle::Kind::Circle, p, (r + q) / 2, (r - q) / 2, l};
}

Lagrangian circle_to_lagrangian(const Rational& a, const Rational& b, const Rational& c) {
  return Lagrangian(Vec4{1, 0, a, b - c}, Vec4{0, 1, b + c, -a});
}

ContactElement contact_element(const Vec4& v) {
  const auto [z1, z2] = complex_coordinates(v);
  ContactElement e;
  if (!z1.is_zero()) {
    e.base = z2 / z1;
    const ComplexQ w = z1.conj();
    e.direction = ComplexQ(0, -1) * w * w;
  } else {
    e.at_infinity = true;
    const ComplexQ w = z2.conj();
    e.direction = ComplexQ(0, 1) * w * w;
  }
  return e;
}

bool incident(const Vec4& p, const Vec4& q) { return sgn(symplectic_product(p, q)) == 0; }

SymplecticMatrix radial_translation_matrix(const Rational& r) {
  Mat4 m = Mat4::identity();
  m(2, 1) = r;
  m(3, 0) = -r;
  return SymplecticMatrix(m);
}

SymplecticMatrix mobius_embed(const MobiusMatrix& mm) {
  if (!(mm.det() == ComplexQ(1))) throw Error(ErrorCode::InvalidInput, "Möbius matrix must have determinant 1");
  const ComplexQ &a = mm.a, &b = mm.b, &c = mm.c, &d = mm.d;
  Mat4 m;
  const Rational rows[4][4] = {
      {a.re, a.im, b.re, -b.im},
      {-a.im, a.re, -b.im, -b.re},
      {c.re, c.im, d.re, -d.im},
      {c.im, -c.re, d.im, d.re},
  };
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m(i, j) = rows[i][j];
  return SymplecticMatrix(m);
}

std::optional<ComplexQ> mobius_chart_action(const MobiusMatrix& m, const ComplexQ& w) {
  const ComplexQ den = m.a + m.b * w;
  if (den.is_zero()) return std::nullopt;
  return (m.c + m.d * w) / den;
}

int maslov_of_circles(const CoorientedCircle& c1, const CoorientedCircle& c2, const CoorientedCircle& c3) {
  return maslov_index(c1.lagrangian, c2.lagrangian, c3.lagrangian);
}

}  // namespace legcirc

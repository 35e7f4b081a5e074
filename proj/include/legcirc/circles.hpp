#pragma once

#include "legcirc/symplectic.hpp"

#include <array>
#include <optional>

namespace legcirc {

// Chart image of a Lagrangian. In the affine patch it is the circle of
// radius |c| about a + bi (c > 0 co-oriented inward, c = 0 a point);
// otherwise the circle passes through ∞ and only the Lagrangian is kept.
struct CoorientedCircle {
  enum class Kind { Circle, LineOrInfinity };

  Kind kind;
  Rational a, b, c;
  Lagrangian lagrangian;

  bool is_circle() const { return kind == Kind::Circle; }
  bool is_point() const { return is_circle() && sgn(c) == 0; }
};

// Base point in the w = z₂/z₁ chart (or ∞) and co-normal direction into the
// chosen halfspace, up to positive scale. At ∞ the direction is given in
// the chart ζ = z₁/z₂.
struct ContactElement {
  bool at_infinity = false;
  ComplexQ base;
  ComplexQ direction;
};

struct MobiusMatrix {
  ComplexQ a, b, c, d;

  ComplexQ det() const { return a * d - b * c; }
  static MobiusMatrix identity() { return {ComplexQ(1), ComplexQ(0), ComplexQ(0), ComplexQ(1)}; }
  friend MobiusMatrix operator*(const MobiusMatrix& x, const MobiusMatrix& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
};

CoorientedCircle lagrangian_to_circle(const Lagrangian& l);
// L(a,b,c), columns (1, 0, a, b−c) and (0, 1, b+c, −a).
Lagrangian circle_to_lagrangian(const Rational& a, const Rational& b, const Rational& c);

ContactElement contact_element(const Vec4& v);

bool incident(const Vec4& p, const Vec4& q);

// Maps L(a,b,c) to L(a,b,c+r).
SymplecticMatrix radial_translation_matrix(const Rational& r);

// Throws Error(InvalidInput) unless det M = 1.
SymplecticMatrix mobius_embed(const MobiusMatrix& m);

// Chart action of embed(M) on base points: w ↦ (c + d w)/(a + b w).
// Empty when the image is ∞.
std::optional<ComplexQ> mobius_chart_action(const MobiusMatrix& m, const ComplexQ& w);

// Throws Error(NotTransverse) for a tangent pair.
int maslov_of_circles(const CoorientedCircle& c1, const CoorientedCircle& c2, const CoorientedCircle& c3);

}  // namespace legcirc

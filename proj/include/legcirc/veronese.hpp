#pragma once

#include "legcirc/circles.hpp"
#include "legcirc/flags.hpp"

#include <complex>
#include <vector>

namespace legcirc {

// γ(t) = (1, t, t², t³/3); ω(γ, γ′) vanishes identically.
Vec4 veronese_point(const Rational& t);
Vec4 veronese_tangent(const Rational& t);
OrientedFlag veronese_flag(const Rational& t);
CoorientedCircle osculating_circle(const Rational& t);

// Chart image z₂/z₁ of γ(t) in floating point, for any real t.
std::complex<double> projected_veronese(double t);

// 𝓒 of the curve flags at strictly increasing ts (k ≥ 3); the last flag is
// negated whenever that is what makes the tuple positive.
LegendrianPolygon circumscribe_polygon(const std::vector<Rational>& ts);

}  // namespace legcirc

#include <doctest.h>

#include "helpers.hpp"
#include "legcirc/error.hpp"
#include "legcirc/veronese.hpp"

#include <cmath>

using namespace legcirc;
using testutil::e;

TEST_CASE("Veronese curve is Legendrian") {
  CHECK(veronese_point(0) == e(1));
  CHECK(veronese_point(1) == Vec4{1, 1, 1, frac(1, 3)});
  CHECK(veronese_tangent(0) == e(2));
  // ω(γ, γ′) is a cubic in t; vanishing at 5 points makes it identically 0.
  for (long n = -20; n <= 20; ++n) {
    const Rational t = frac(n, 7);
    CHECK(symplectic_product(veronese_point(t), veronese_tangent(t)) == 0);
    // γ′ is the exact derivative: compare with a symmetric difference.
    const Rational h = frac(1, 1000);
    const Vec4 diff = (1 / (2 * h)) * (veronese_point(t + h) - veronese_point(t - h));
    const Vec4 err = diff - veronese_tangent(t);
    CHECK(err[0] == 0);
    CHECK(err[1] == 0);
    CHECK(err[2] == 0);
    CHECK(err[3] == h * h / 3);
  }
  CHECK(veronese_flag(0) == standard_flag());
}

TEST_CASE("osculating circles") {
  const CoorientedCircle c0 = osculating_circle(0);
  CHECK(c0.is_point());
  CHECK(c0.a == 0);
  CHECK(c0.b == 0);
  // Order-3 contact at t = 1 via the power of a point.
  const CoorientedCircle c = osculating_circle(1);
  REQUIRE(c.is_circle());
  const auto power = [&](double h) {
    const std::complex<double> w = projected_veronese(1 + h);
    const double dx = w.real() - to_double(c.a), dy = w.imag() - to_double(c.b);
    const double r = to_double(c.c);
    return std::abs(dx * dx + dy * dy - r * r);
  };
  const double ratio = power(1e-2) / power(1e-3);
  CHECK(ratio > 500);
  CHECK(ratio < 2000);
  // The projected curve passes through each base point.
  for (long n = -6; n <= 6; ++n) {
    const Rational t = frac(n, 3);
    const ContactElement ce = contact_element(veronese_point(t));
    const std::complex<double> w = projected_veronese(to_double(t));
    CHECK(std::abs(to_double(ce.base.re) - w.real()) < 1e-12);
    CHECK(std::abs(to_double(ce.base.im) - w.imag()) < 1e-12);
  }
}

TEST_CASE("constant Maslov sign along the curve") {
  std::vector<Rational> ts;
  for (long n = -4; n <= 4; ++n) ts.push_back(frac(n, 2));
  int sign = 0;
  for (std::size_t i = 0; i < ts.size(); ++i)
    for (std::size_t j = i + 1; j < ts.size(); ++j)
      for (std::size_t k = j + 1; k < ts.size(); ++k) {
        const int m = maslov_index(veronese_flag(ts[i]).plane(), veronese_flag(ts[j]).plane(),
                                   veronese_flag(ts[k]).plane());
        if (sign == 0) sign = m;
        CHECK(m == sign);
      }
  CHECK(sign == 1);
}

TEST_CASE("curve flags are positive") {
  CHECK(triple_positive(veronese_flag(-1), veronese_flag(0), veronese_flag(1)));
  CHECK(tuple_positive({veronese_flag(-2), veronese_flag(-1), veronese_flag(frac(1, 2)), veronese_flag(3)}));
}

TEST_CASE("circumscribed polygons") {
  const LegendrianPolygon hex = circumscribe_polygon({-1, 0, 1});
  CHECK(hex.size() == 6);
  CHECK(transversality_class(hex) == Transversality::PositiveTransverse);
  CHECK(has_decreasing_curvature(hex));
  std::vector<Rational> ts;
  for (long n = 0; n < 10; ++n) ts.push_back(frac(2 * n - 9, 3));
  const LegendrianPolygon p = circumscribe_polygon(ts);
  CHECK(p.size() == 20);
  CHECK(is_transverse(p));
  CHECK(has_decreasing_curvature(p));
  CHECK_THROWS_AS(circumscribe_polygon({0, 0, 1}), Error);
  CHECK_THROWS_AS(circumscribe_polygon({0, 1}), Error);
}

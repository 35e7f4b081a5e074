#include "legcirc/veronese.hpp"

#include "legcirc/error.hpp"

namespace legcirc {

Vec4 veronese_point(const Rational& t) { return Vec4{1, t, t * t, t * t * t / 3}; }

Vec4 veronese_tangent(const Rational& t) { return Vec4{0, 1, 2 * t, t * t}; }

OrientedFlag veronese_flag(const Rational& t) { return OrientedFlag(veronese_point(t), veronese_tangent(t)); }

CoorientedCircle osculating_circle(const Rational& t) {
  return lagrangian_to_circle(Lagrangian(veronese_point(t), veronese_tangent(t)));
}

std::complex<double> projected_veronese(double t) {
  const std::complex<double> z1(1.0, -t);
  const std::complex<double> z2(t * t, t * t * t / 3.0);
  return z2 / z1;
}

LegendrianPolygon circumscribe_polygon(const std::vector<Rational>& ts) {
  if (ts.size() < 3) throw Error(ErrorCode::InvalidInput, "need at least 3 parameters");
  for (std::size_t i = 1; i < ts.size(); ++i)
    if (!(ts[i - 1] < ts[i])) throw Error(ErrorCode::InvalidInput, "parameters must be strictly increasing");
  FlagTuple flags;
  for (const auto& t : ts) flags.push_back(veronese_flag(t));
  if (!tuple_positive(flags, true)) {
    // Try the sign flips that keep cyclic order; take the first positive one.
    bool found = false;
    for (std::size_t cut = 0; cut < flags.size() && !found; ++cut) {
      FlagTuple alt = flags;
      for (std::size_t i = cut; i < alt.size(); ++i) alt[i] = alt[i].negated();
      if (tuple_positive(alt, true)) {
        flags = alt;
        found = true;
      }
    }
    if (!found) throw Error(ErrorCode::Degenerate, "curve flags do not form a positive tuple");
  }
  return flags_to_polygon(flags);
}

}  // namespace legcirc

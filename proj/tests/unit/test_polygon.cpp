#include <doctest.h>

#include "helpers.hpp"
#include "legcirc/error.hpp"
#include "legcirc/polygon.hpp"

using namespace legcirc;
using testutil::e;

namespace {

LegendrianPolygon quad(int eps, int s4, int s3) {
  return LegendrianPolygon({e(1), e(2), Rational(s4) * e(4), Rational(s3) * e(3)}, eps);
}

LegendrianPolygon octagon() {
  return LegendrianPolygon({make_vec(1, 0, 0, 0), make_vec(1, 1, 0, 0), make_vec(1, 1, 1, 1), make_vec(4, 2, -1, 1),
                            make_vec(4, 8, -4, 1), make_vec(0, 1, 1, 3), make_vec(0, 0, 0, 1), make_vec(0, 0, -1, 0)},
                           -1);
}

// φ(t,s) = ω((1−t)u₁ + t u₂, (1−s)v₁ + s v₂) sampled on a 100×100 grid
// over the closed square; no sign change means non-incident.
bool grid_oracle(const Vec4& u1, const Vec4& u2, const Vec4& v1, const Vec4& v2, int steps = 100) {
  const double w11 = to_double(symplectic_product(u1, v1)), w12 = to_double(symplectic_product(u1, v2));
  const double w21 = to_double(symplectic_product(u2, v1)), w22 = to_double(symplectic_product(u2, v2));
  bool pos = false, neg = false;
  for (int i = 0; i < steps; ++i)
    for (int j = 0; j < steps; ++j) {
      const double t = i / double(steps - 1), s = j / double(steps - 1);
      const double phi = (1 - t) * (1 - s) * w11 + (1 - t) * s * w12 + t * (1 - s) * w21 + t * s * w22;
      pos |= phi > 0;
      neg |= phi < 0;
    }
  return !(pos && neg);
}

}  // namespace

TEST_CASE("construction and validation") {
  CHECK_NOTHROW(quad(-1, 1, -1));
  CHECK_NOTHROW(octagon());
  CHECK_THROWS_AS(LegendrianPolygon({e(1), e(2), e(3)}, -1), Error);
  // ω(e₂, e₃) ≠ 0.
  CHECK_THROWS_AS(LegendrianPolygon({e(1), e(2), e(3), e(4)}, -1), Error);
  CHECK_THROWS_AS(LegendrianPolygon({e(1), e(2), e(4), Vec4{0, 0, 0, 0}}, -1), Error);
  // Two adjacent segments on one line.
  CHECK_THROWS_AS(LegendrianPolygon({e(1), e(2), e(1) + e(2), e(3), e(2)}, -1), Error);
}

TEST_CASE("segment lemma") {
  CHECK(segment_pair_nonincident(e(1), e(2), e(4), -e(3)));
  // Mixed products (1, 1, −1, 1).
  CHECK_FALSE(segment_pair_nonincident(e(1), e(2), e(4) + e(3), e(4) - e(3) + e(3) + e(3)));
  CHECK_THROWS_AS(segment_pair_nonincident(e(1), e(2), e(1), e(2)), Error);
  CHECK_THROWS_AS(segment_pair_nonincident(e(1), e(4), e(2), e(3)), Error);
}

TEST_CASE("segment lemma agrees with the grid oracle") {
  Rng rng(21);
  int done = 0;
  while (done < 200) {
    const Vec4 u1 = rng.vec(-3, 3), v1 = rng.vec(-3, 3);
    const Vec4 x = rng.vec(-3, 3), y = rng.vec(-3, 3);
    const Vec4 u2 = symplectic_product(u1, x) * y - symplectic_product(u1, y) * x;
    const Vec4 w = rng.vec(-3, 3), z = rng.vec(-3, 3);
    const Vec4 v2 = symplectic_product(v1, w) * z - symplectic_product(v1, z) * w;
    if (is_zero(u1) || is_zero(u2) || is_zero(v1) || is_zero(v2)) continue;
    bool all_zero = true;
    for (const Vec4* a : {&u1, &u2})
      for (const Vec4* b : {&v1, &v2}) all_zero &= sgn(symplectic_product(*a, *b)) == 0;
    if (all_zero) continue;
    CHECK(segment_pair_nonincident(u1, u2, v1, v2) == grid_oracle(u1, u2, v1, v2));
    ++done;
  }
}

TEST_CASE("quadrilateral classification") {
  int transverse = 0;
  for (int eps : {1, -1})
    for (int s4 : {1, -1})
      for (int s3 : {1, -1}) {
        const LegendrianPolygon p = quad(eps, s4, s3);
        const Transversality t = transversality_class(p);
        CHECK(t == transversality_class_exhaustive(p));
        if (t != Transversality::NotTransverse) {
          ++transverse;
          CHECK(eps == -1);
          CHECK(s4 == -s3);
        }
      }
  CHECK(transverse == 2);
  CHECK(transversality_class(quad(-1, 1, -1)) == Transversality::PositiveTransverse);
  CHECK(transversality_class(quad(1, 1, -1)) == Transversality::NotTransverse);
  CHECK(is_generic(quad(-1, 1, -1)));
  CHECK(homotopy_class(quad(-1, 1, -1)) == HomotopyClass::Generator);
  CHECK(homotopy_class(quad(1, 1, -1)) == HomotopyClass::Contractible);
}

TEST_CASE("genericity") {
  // Legendrian hexagon with ω(v₁, v₄) = 0.
  const LegendrianPolygon p({e(1), e(2), e(1) + e(4), e(3), e(4), e(2) + e(3)}, -1);
  CHECK(symplectic_product(p.vertex(0), p.vertex(3)) == 0);
  CHECK_FALSE(is_generic(p));
  CHECK(transversality_class(p) == Transversality::NotTransverse);
  CHECK(is_generic(LegendrianPolygon({e(1), e(2), -e(4), -e(3)}, -1)));
}

TEST_CASE("octagon") {
  const LegendrianPolygon p = octagon();
  CHECK(transversality_class(p) == Transversality::PositiveTransverse);
  CHECK(transversality_class_exhaustive(p) == Transversality::PositiveTransverse);
  // Edges 2 and 7 meet at [0:0:1:1].
  CHECK_FALSE(is_generic(p));
  CHECK(det4(p.vertex(1), p.vertex(2), p.vertex(6), p.vertex(7)) == 0);
  CHECK(edge_lagrangian(p, 2).contains(make_vec(0, 0, 1, 1)));
  CHECK(edge_lagrangian(p, 7).contains(make_vec(0, 0, 1, 1)));
  for (std::size_t k = 1; k <= 8; ++k) CHECK(is_lagrangian(edge_lagrangian(p, k).u(), edge_lagrangian(p, k).v()));
  CHECK_FALSE(has_decreasing_curvature(p));
}

TEST_CASE("edge Lagrangians") {
  const LegendrianPolygon q = quad(-1, 1, -1);
  CHECK(edge_lagrangian(q, 1) == Lagrangian(e(1), e(2)));
  CHECK(edge_lagrangian(q, 4) == Lagrangian(-e(3), e(1)));
  CHECK_THROWS_AS(edge_lagrangian(q, 5), Error);
}

TEST_CASE("sign criterion agrees with the exhaustive segment check") {
  Rng rng(99);
  int transverse = 0;
  for (int i = 0; i < 500; ++i) {
    const std::size_t n = 4 + (i % 4);
    const LegendrianPolygon p = (i % 3 == 0) ? sample_transverse_polygon(n, rng)
                                             : sample_legendrian_polygon(n, (i % 2) ? -1 : 1, rng);
    const Transversality t = transversality_class(p);
    CHECK(t == transversality_class_exhaustive(p));
    transverse += t != Transversality::NotTransverse;
  }
  CHECK(transverse > 100);
}

TEST_CASE("invariance under the group and rescaling") {
  Rng rng(4);
  for (int i = 0; i < 30; ++i) {
    const LegendrianPolygon p = sample_transverse_polygon(6, rng);
    const SymplecticMatrix m(testutil::random_symplectic(rng));
    const LegendrianPolygon q = apply_symplectic(p, m);
    CHECK(transversality_class(q) == transversality_class(p));
    CHECK(has_decreasing_curvature(q) == has_decreasing_curvature(p));
    std::vector<Vec4> scaled = p.vertices();
    for (auto& v : scaled) v = rng.rational(1, 5, 4) * v;
    const LegendrianPolygon r(scaled, -1);
    CHECK(transversality_class(r) == transversality_class(p));
    std::vector<Vec4> negated = p.vertices();
    for (auto& v : negated) v = -v;
    CHECK(transversality_class(LegendrianPolygon(negated, -1)) == transversality_class(p));
  }
}

TEST_CASE("reversal swaps the transversality sign") {
  Rng rng(8);
  for (int i = 0; i < 20; ++i) {
    const LegendrianPolygon p = sample_transverse_polygon(6, rng);
    const Transversality t = transversality_class(p);
    const Transversality r = transversality_class(reversed(p));
    CHECK(t != r);
    CHECK(r != Transversality::NotTransverse);
  }
}

TEST_CASE("hexagon dichotomy") {
  Rng rng(12);
  for (int i = 0; i < 30; ++i) {
    const LegendrianPolygon p = sample_transverse_polygon(6, rng);
    const auto triples = edge_triples(p);
    REQUIRE(triples.size() == 2);
    REQUIRE(triples[0].index);
    REQUIRE(triples[1].index);
    CHECK(*triples[0].index == *triples[1].index);
    CHECK(*triples[0].index != 0);
    if (*triples[0].index == 1) CHECK_FALSE(has_decreasing_curvature(reversed(p)));
  }
}

TEST_CASE("incidence witness") {
  const LegendrianPolygon p({e(1), e(2), -e(4), -e(3)}, -1);
  CHECK(transversality_class(p) == Transversality::NotTransverse);
  const auto w = find_incidence_witness(p);
  REQUIRE(w);
  CHECK(sgn(symplectic_product(w->p, w->q)) == 0);
  CHECK(rank_of({w->p, w->q}) == 2);
  CHECK_FALSE(find_incidence_witness(quad(-1, 1, -1)));
}

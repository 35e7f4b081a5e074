#include <doctest.h>

#include "helpers.hpp"
#include "legcirc/error.hpp"
#include "legcirc/flags.hpp"

using namespace legcirc;
using testutil::e;

namespace {

LegendrianPolygon octagon() {
  return LegendrianPolygon({make_vec(1, 0, 0, 0), make_vec(1, 1, 0, 0), make_vec(1, 1, 1, 1), make_vec(4, 2, -1, 1),
                            make_vec(4, 8, -4, 1), make_vec(0, 1, 1, 3), make_vec(0, 0, 0, 1), make_vec(0, 0, -1, 0)},
                           -1);
}

bool polygons_equal_up_to_scaling(const LegendrianPolygon& a, const LegendrianPolygon& b) {
  if (a.size() != b.size() || a.closing_sign() != b.closing_sign()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!same_ray(a.vertices()[i], b.vertices()[i])) return false;
  return true;
}

}  // namespace

TEST_CASE("standard and opposite flags") {
  CHECK(complete_flag(standard_flag()) == Mat4::identity());
  const Mat4 opp = complete_flag(opposite_flag());
  CHECK(opp.column(0) == e(4));
  CHECK(opp.column(1) == -e(3));
  // The completion of F∞ is the opposite basis (e₄, −e₃, e₂, −e₁).
  CHECK(opp.column(2) == e(2));
  CHECK(opp.column(3) == -e(1));
  CHECK(sgn(symplectic_product(opp.column(1), opp.column(2))) < 0);
  CHECK(is_symplectic(opp));
  // Replacing f₂ by f₂ + λf₁ keeps the flag and the F⁽³⁾ orientation.
  const OrientedFlag f(e(1), e(2) + Rational(5) * e(1));
  CHECK(f == standard_flag());
  const Mat4 b = complete_flag(f);
  CHECK(sgn(det4(b.column(0), b.column(1), b.column(2), e(4))) > 0);
}

TEST_CASE("flag equality") {
  CHECK(OrientedFlag(Rational(2) * e(1), Rational(3) * e(2)) == standard_flag());
  CHECK_FALSE(OrientedFlag(-e(1), e(2)) == standard_flag());
  CHECK_FALSE(OrientedFlag(e(1), -e(2)) == standard_flag());
  CHECK_THROWS_AS(OrientedFlag(e(1), e(4)), Error);
}

TEST_CASE("pair normalization") {
  const SymplecticMatrix m = normalize_pair(standard_flag(), opposite_flag());
  CHECK(standard_flag().transformed(m.matrix()) == standard_flag());
  CHECK(opposite_flag().transformed(m.matrix()) == opposite_flag());
  CHECK_THROWS_AS(normalize_pair(standard_flag(), standard_flag()), Error);
  CHECK(classify_pair(standard_flag(), standard_flag()) == PairRelation::NotTransverse);
  CHECK(classify_pair(standard_flag(), opposite_flag().negated()) == PairRelation::WrongOrientation);
  CHECK(classify_pair(standard_flag(), OrientedFlag(e(4), e(3))) == PairRelation::WrongOrientation);
  Rng rng(17);
  for (int i = 0; i < 100; ++i) {
    const Mat4 g = testutil::random_symplectic(rng);
    const OrientedFlag f = standard_flag().transformed(g), h = opposite_flag().transformed(g);
    const Mat4 n = normalize_pair(f, h).matrix();
    CHECK(f.transformed(n) == standard_flag());
    CHECK(h.transformed(n) == opposite_flag());
    // n∘g stabilizes (F₀, F∞): a positive diagonal matrix.
    const Mat4 d = n * g;
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) {
        const bool ok = r == c ? sgn(d(r, c)) > 0 : sgn(d(r, c)) == 0;
        CHECK(ok);
      }
  }
}

TEST_CASE("positive semigroup") {
  CHECK(in_positive_semigroup({3, 1, 1, 3}));
  CHECK_FALSE(in_positive_semigroup({1, 1, 1, 1}));
  CHECK_FALSE(in_positive_semigroup({2, 1, 1, 1}));
  const Mat4 u = unipotent_matrix({3, 1, 1, 3});
  CHECK(u(3, 1) == 8);
  CHECK(is_symplectic(u));
  CHECK(unipotent_params(u) == UnipotentParams{3, 1, 1, 3});
  CHECK_FALSE(unipotent_params(Mat4::diag(1, 2, 1, 1)));
  CHECK(semigroup_inverse_identity_check({3, 1, 1, 3}));
  CHECK_THROWS_AS(semigroup_inverse_identity_check({0, 0, 0, 0}), Error);
  Rng rng(2);
  for (int i = 0; i < 100; ++i) {
    const UnipotentParams p = sample_semigroup_element(rng), q = sample_semigroup_element(rng);
    REQUIRE(in_positive_semigroup(p));
    CHECK(semigroup_inverse_identity_check(p));
    const auto pq = unipotent_params(unipotent_matrix(p) * unipotent_matrix(q));
    REQUIRE(pq);
    CHECK(in_positive_semigroup(*pq));
  }
}

TEST_CASE("triple positivity") {
  const FlagTuple t = parametrize_positive_triple(1, 1);
  CHECK(t[1].f1() == make_vec(1, 3, 1, 1));
  CHECK(t[1].f2() == make_vec(0, 1, 1, 2));
  CHECK(triple_positive(t[0], t[1], t[2]));
  CHECK_FALSE(triple_positive(t[2], t[1], t[0]));
  CHECK(triple_positive(t[1], t[2], t[0].negated()));
  const auto u = extract_unipotent(t[0], t[1], t[2]);
  REQUIRE(u);
  // a = x + y + 1/y, b = y, c = 1, d = 1 at x = y = 1.
  CHECK(*u == UnipotentParams{3, 1, 1, 1});
  CHECK_THROWS_AS(parametrize_positive_triple(0, 1), Error);
}

TEST_CASE("triple positivity is invariant") {
  Rng rng(31);
  for (int i = 0; i < 40; ++i) {
    const FlagTuple t = sample_positive_tuple(3, rng.next());
    const Mat4 g = testutil::random_symplectic(rng);
    CHECK(triple_positive(t[0].transformed(g), t[1].transformed(g), t[2].transformed(g)));
    // Positive diagonal stabilizer changes the normalization, not the verdict.
    const Rational l = rng.rational(1, 5, 3), m = rng.rational(1, 5, 3);
    const Mat4 d = Mat4::diag(l, m, 1 / m, 1 / l);
    CHECK(is_symplectic(d));
    CHECK(triple_positive(t[0].transformed(d), t[1].transformed(d), t[2].transformed(d)));
    CHECK_FALSE(triple_positive(t[2], t[1], t[0]));
  }
}

TEST_CASE("distinct parameters give distinct orbits") {
  const auto u1 = extract_unipotent(standard_flag(), parametrize_positive_triple(1, 2)[1], opposite_flag());
  const auto u2 = extract_unipotent(standard_flag(), parametrize_positive_triple(2, 1)[1], opposite_flag());
  REQUIRE(u1);
  REQUIRE(u2);
  CHECK_FALSE(*u1 == *u2);
}

TEST_CASE("oriented intersection") {
  CHECK(oriented_intersection(e(1), e(2), e(2), e(3), e(4)) == e(2));
  CHECK(oriented_intersection(e(2), e(1), e(2), e(3), e(4)) == -e(2));
  CHECK(oriented_intersection(e(1), e(2), e(3), e(2), e(4)) == -e(2));
  CHECK_THROWS_AS(oriented_intersection(e(1), e(2), e(1), e(2), e(3)), Error);
  Rng rng(6);
  for (int i = 0; i < 30; ++i) {
    const Vec4 u1 = rng.vec(-3, 3), u2 = rng.vec(-3, 3), w1 = rng.vec(-3, 3), w2 = rng.vec(-3, 3),
               w3 = rng.vec(-3, 3);
    Vec4 x;
    try {
      x = oriented_intersection(u1, u2, w1, w2, w3);
    } catch (const Error&) {
      continue;
    }
    // Positive rebases of U and W keep the answer.
    const Vec4 y = oriented_intersection(u1 + Rational(2) * u2, u2, w1, w2 - w1, Rational(3) * w3);
    CHECK(same_ray(x, y));
    CHECK(same_ray(-x, oriented_intersection(u2, u1, w1, w2, w3)));
    CHECK(same_ray(-x, oriented_intersection(u1, u2, w2, w1, w3)));
  }
}

TEST_CASE("the parametrized triple maps to the listed hexagon") {
  const Rational x = 2, y = 3;
  const LegendrianPolygon p = flags_to_polygon(parametrize_positive_triple(x, y));
  const Vec4 expected[6] = {e(1), Vec4{y, 1, 0, 0}, Vec4{1, x + y + 1 / y, y, 1}, Vec4{0, 1, 1, x + 1 / y}, e(4),
                            -e(3)};
  for (int i = 0; i < 6; ++i) CHECK(same_ray(p.vertices()[i], expected[i]));
  CHECK(transversality_class(p) == Transversality::PositiveTransverse);
  CHECK(has_decreasing_curvature(p));
}

TEST_CASE("round trips and positivity transfer") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const std::size_t k = 3 + seed % 6;
    const FlagTuple t = sample_positive_tuple(k, seed);
    REQUIRE(t.size() == k);
    CHECK(tuple_positive(t));
    CHECK(tuple_positive(t, true));
    const LegendrianPolygon p = flags_to_polygon(t);
    CHECK(transversality_class(p) == Transversality::PositiveTransverse);
    CHECK(has_decreasing_curvature(p));
    const FlagTuple back = polygon_to_flags(p);
    REQUIRE(back.size() == k);
    for (std::size_t i = 0; i < k; ++i) CHECK(back[i] == t[i]);
    CHECK(polygons_equal_up_to_scaling(flags_to_polygon(back), p));
    FlagTuple neg;
    for (const auto& f : t) neg.push_back(f.negated());
    CHECK(tuple_positive(neg));
  }
}

TEST_CASE("fast path agrees with the definition") {
  Rng rng(44);
  int positives = 0;
  for (int i = 0; i < 60; ++i) {
    FlagTuple t = sample_positive_tuple(4 + i % 3, rng.next());
    if (i % 2) {
      // Perturb one interior flag.
      const std::size_t j = 1 + rng.integer(0, static_cast<long>(t.size()) - 3);
      const Mat4 g = testutil::random_symplectic(rng);
      t[j] = t[j].transformed(g);
    }
    const bool full = tuple_positive(t);
    CHECK(full == tuple_positive(t, true));
    positives += full;
  }
  CHECK(positives >= 30);
}

TEST_CASE("positive quadruple factorization") {
  Rng rng(3);
  const UnipotentParams p1 = sample_semigroup_element(rng), p2 = sample_semigroup_element(rng);
  const Mat4 u1 = unipotent_matrix(p1), u12 = u1 * unipotent_matrix(p2);
  const OrientedFlag f1 = standard_flag().transformed(u1), f2 = standard_flag().transformed(u12);
  CHECK(tuple_positive({standard_flag(), f1, f2, opposite_flag()}));
  const auto got1 = extract_unipotent(standard_flag(), f1, opposite_flag());
  const auto got12 = extract_unipotent(standard_flag(), f2, opposite_flag());
  REQUIRE(got1);
  REQUIRE(got12);
  CHECK(*got1 == p1);
  const auto got2 = unipotent_params(unipotent_matrix(*got1).inverse() * unipotent_matrix(*got12));
  REQUIRE(got2);
  CHECK(*got2 == p2);
}

TEST_CASE("Maslov form of positive triples") {
  for (std::uint64_t seed = 100; seed < 130; ++seed) {
    const FlagTuple t = sample_positive_tuple(3, seed);
    const auto u = extract_unipotent(t[0], t[1], t[2]);
    REQUIRE(u);
    const Mat2 g = maslov_form(t[0].plane(), t[1].plane(), t[2].plane());
    // t[1].plane() is stored as (u e₁, u e₂).
    const Mat2 expected{{2 * (u->a * u->b - u->c), 2 * u->b, 2 * u->b, 2 * u->d}};
    CHECK(g == expected);
    CHECK(sgn(g.det()) > 0);
    CHECK(sgn(g.trace()) > 0);
    CHECK(maslov_index(t[0].plane(), t[1].plane(), t[2].plane()) == 1);
  }
}

TEST_CASE("octagon flags are not positive") {
  const FlagTuple t = polygon_to_flags(octagon());
  CHECK(t.size() == 4);
  CHECK_FALSE(tuple_positive(t));
  CHECK_FALSE(tuple_positive(t, true));
}

TEST_CASE("polygon to flags preconditions") {
  CHECK_THROWS_AS(polygon_to_flags(LegendrianPolygon({e(1), e(2), e(4), -e(3)}, 1)), Error);
  Rng rng(9);
  CHECK_THROWS_AS(polygon_to_flags(sample_transverse_polygon(5, rng)), Error);
  // Rescaling vertices by positive scalars gives the same flags.
  const LegendrianPolygon p = flags_to_polygon(sample_positive_tuple(4, 5));
  std::vector<Vec4> scaled = p.vertices();
  for (auto& v : scaled) v = rng.rational(1, 7, 5) * v;
  const FlagTuple a = polygon_to_flags(p), b = polygon_to_flags(LegendrianPolygon(scaled, -1));
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
}

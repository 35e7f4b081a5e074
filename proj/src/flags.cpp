#include "legcirc/flags.hpp"

#include "legcirc/error.hpp"

namespace legcirc {

namespace {

// Row vector r with ω(a, x) = r·x.
Vec4 omega_row(const Vec4& a) { return Vec4{-a[3], a[2], -a[1], a[0]}; }

// (α, β) with x = α a + β b; empty if x is not in span(a, b).
std::optional<std::pair<Rational, Rational>> plane_coords(const Vec4& a, const Vec4& b, const Vec4& x) {
  const auto kernel = Matrix::from_columns({a, b, -x}).null_space();
  for (const auto& k : kernel)
    if (sgn(k[2]) != 0) return std::make_pair(k[0] / k[2], k[1] / k[2]);
  return std::nullopt;
}

struct PairBasis {
  PairRelation relation;
  Mat4 basis;  // columns e₁..e₄ when oriented-transverse
};

PairBasis adapted_pair_basis(const OrientedFlag& f, const OrientedFlag& g) {
  const Rational w11 = symplectic_product(f.f1(), g.f1());
  if (sgn(w11) == 0 || sgn(det4(f.f1(), f.f2(), g.f1(), g.f2())) == 0)
    return {PairRelation::NotTransverse, Mat4()};
  if (sgn(w11) < 0) return {PairRelation::WrongOrientation, Mat4()};
  const Vec4 e1 = f.f1();
  const Vec4 e4 = (1 / w11) * g.f1();
  Vec4 e2 = f.f2() - (symplectic_product(f.f2(), e4) / symplectic_product(e1, e4)) * e1;
  const Vec4 h = g.f2() - (symplectic_product(e1, g.f2()) / w11) * g.f1();
  const Rational t = symplectic_product(e2, h);
  if (sgn(t) == 0) return {PairRelation::NotTransverse, Mat4()};
  if (sgn(t) < 0) return {PairRelation::WrongOrientation, Mat4()};
  e2 = (1 / t) * e2;
  return {PairRelation::OrientedTransverse, Mat4::from_columns(e1, e2, -h, e4)};
}

}  // namespace

OrientedFlag::OrientedFlag(const Vec4& f1, const Vec4& f2) : f1_(f1), f2_(f2) {
  if (!is_lagrangian(f1, f2)) throw Error(ErrorCode::NotLagrangian, "flag plane is not Lagrangian");
}

bool operator==(const OrientedFlag& a, const OrientedFlag& b) {
  if (!same_ray(a.f1_, b.f1_)) return false;
  const auto c = plane_coords(a.f1_, a.f2_, b.f2_);
  return c && sgn(c->second) > 0;
}

OrientedFlag standard_flag() { return OrientedFlag(basis_vector(1), basis_vector(2)); }

OrientedFlag opposite_flag() { return OrientedFlag(basis_vector(4), -basis_vector(3)); }

Mat4 complete_flag(const OrientedFlag& f) {
  const Vec4& f1 = f.f1();
  const Vec4& f2 = f.f2();
  Matrix row(1, 4);
  const Vec4 r1 = omega_row(f1);
  for (int c = 0; c < 4; ++c) row(0, c) = r1[c];
  Vec4 f3{0, 0, 0, 0};
  for (const auto& k : row.null_space()) {
    const Vec4 w{k[0], k[1], k[2], k[3]};
    if (rank_of({f1, f2, w}) == 3) {
      f3 = (-1 / symplectic_product(f2, w)) * w;
      break;
    }
  }
  // f₄: ω(f₁,x) = 1, ω(f₂,x) = 0, ω(f₃,x) = 0.
  Matrix sys(3, 5);
  const Vec4 rows[3] = {omega_row(f1), omega_row(f2), omega_row(f3)};
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 4; ++c) sys(r, c) = rows[r][c];
  sys(0, 4) = -1;
  Vec4 f4{0, 0, 0, 0};
  for (const auto& k : sys.null_space())
    if (sgn(k[4]) != 0) {
      f4 = Vec4{k[0] / k[4], k[1] / k[4], k[2] / k[4], k[3] / k[4]};
      break;
    }
  const Mat4 b = Mat4::from_columns(f1, f2, f3, f4);
  if (!is_symplectic(b)) throw Error(ErrorCode::Degenerate, "flag completion failed");
  return b;
}

std::array<Vec4, 3> flag_hyperplane(const OrientedFlag& f) {
  const Mat4 b = complete_flag(f);
  return {b.column(0), b.column(1), b.column(2)};
}

const char* to_string(PairRelation r) {
  switch (r) {
    case PairRelation::OrientedTransverse: return "oriented-transverse";
    case PairRelation::WrongOrientation: return "transverse, wrong orientation";
    case PairRelation::NotTransverse: return "not transverse";
  }
  return "?";
}

PairRelation classify_pair(const OrientedFlag& f, const OrientedFlag& g) {
  return adapted_pair_basis(f, g).relation;
}

bool flags_transverse(const OrientedFlag& f, const OrientedFlag& g) {
  return sgn(symplectic_product(f.f1(), g.f1())) != 0 && sgn(det4(f.f1(), f.f2(), g.f1(), g.f2())) != 0;
}

SymplecticMatrix normalize_pair(const OrientedFlag& f, const OrientedFlag& g) {
  const PairBasis pb = adapted_pair_basis(f, g);
  if (pb.relation == PairRelation::NotTransverse)
    throw Error(ErrorCode::NotOrientedTransverse, "flags are not transverse");
  if (pb.relation == PairRelation::WrongOrientation)
    throw Error(ErrorCode::NotOrientedTransverse, "flags are transverse but not compatibly oriented");
  return SymplecticMatrix(pb.basis.inverse());
}

Mat4 unipotent_matrix(const UnipotentParams& p) {
  Mat4 m = Mat4::identity();
  m(1, 0) = p.a;
  m(2, 0) = p.b;
  m(2, 1) = p.d;
  m(3, 0) = p.c;
  m(3, 1) = p.a * p.d - p.b;
  m(3, 2) = p.a;
  return m;
}

std::optional<UnipotentParams> unipotent_params(const Mat4& m) {
  UnipotentParams p{m(1, 0), m(2, 0), m(3, 0), m(2, 1)};
  if (unipotent_matrix(p) == m) return p;
  return std::nullopt;
}

bool in_positive_semigroup(const UnipotentParams& p) {
  return sgn(p.a) > 0 && sgn(p.b) > 0 && sgn(p.c) > 0 && sgn(p.a * p.d - p.b) > 0 &&
         sgn(-p.b * p.b + p.a * p.b * p.d - p.c * p.d) > 0;
}

std::optional<UnipotentParams> extract_unipotent(const OrientedFlag& f1, const OrientedFlag& f2,
                                                 const OrientedFlag& f3) {
  const PairBasis pb = adapted_pair_basis(f1, f3);
  if (pb.relation != PairRelation::OrientedTransverse) return std::nullopt;
  const Mat4 m = pb.basis.inverse();
  Vec4 x = m * f2.f1();
  const Vec4 y = m * f2.f2();
  if (sgn(x[0]) <= 0) return std::nullopt;
  x = (1 / x[0]) * x;
  Vec4 w = y - y[0] * x;
  if (sgn(w[1]) <= 0) return std::nullopt;
  w = (1 / w[1]) * w;
  UnipotentParams p{x[1], x[2], x[3], w[2]};
  if (w[3] != p.a * p.d - p.b) return std::nullopt;
  return p;
}

bool triple_positive(const OrientedFlag& f1, const OrientedFlag& f2, const OrientedFlag& f3) {
  const auto p = extract_unipotent(f1, f2, f3);
  return p && in_positive_semigroup(*p);
}

bool tuple_positive(const FlagTuple& t, bool fast_path) {
  const std::size_t n = t.size();
  if (n < 3) throw Error(ErrorCode::InvalidInput, "positivity needs at least 3 flags");
  if (fast_path) {
    for (std::size_t i = 0; i + 2 < n; ++i)
      for (std::size_t j = i + 2; j < n; ++j)
        if (!triple_positive(t[i], t[i + 1], t[j])) return false;
    return true;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        if (!triple_positive(t[i], t[j], t[k])) return false;
  return true;
}

FlagTuple polygon_to_flags(const LegendrianPolygon& p) {
  if (p.size() % 2 != 0) throw Error(ErrorCode::InvalidPolygon, "flags need an even number of vertices");
  if (p.closing_sign() > 0) throw Error(ErrorCode::InvalidPolygon, "flags need a non-contractible polygon");
  FlagTuple out;
  for (std::size_t j = 0; j < p.size(); j += 2) out.emplace_back(p.vertices()[j], p.vertices()[j + 1]);
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t j = i + 1; j < out.size(); ++j)
      if (!flags_transverse(out[i], out[j]))
        throw Error(ErrorCode::NotTransverse,
                    "flags " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " are not transverse");
  return out;
}

Vec4 oriented_intersection(const Vec4& u1, const Vec4& u2, const Vec4& w1, const Vec4& w2, const Vec4& w3) {
  const auto kernel = Matrix::from_columns({u1, u2, -w1, -w2, -w3}).null_space();
  if (kernel.size() != 1) throw Error(ErrorCode::NotTransverse, "intersection is not a line");
  const auto& k = kernel[0];
  const Rational &alpha = k[0], &beta = k[1];
  const Vec4 x = alpha * u1 + beta * u2;
  if (is_zero(x)) throw Error(ErrorCode::NotTransverse, "intersection is not a line");
  const Vec4 u = beta * u1 - alpha * u2;
  const Vec4 ws[3] = {w1, w2, w3};
  // (x, w_i, w_j) has orientation sign(γ_k)·sign of the permutation (k,i,j).
  int pick = 0;
  while (sgn(k[2 + pick]) == 0) ++pick;
  const int i = pick == 0 ? 1 : 0;
  const int j = pick == 2 ? 1 : 2;
  const int orient = sgn(k[2 + pick]) * (pick == 1 ? -1 : 1);
  return orient * sgn(det4(u, x, ws[i], ws[j])) > 0 ? x : -x;
}

LegendrianPolygon flags_to_polygon(const FlagTuple& t) {
  const std::size_t k = t.size();
  if (k < 2) throw Error(ErrorCode::InvalidInput, "need at least 2 flags");
  std::vector<Vec4> v;
  for (std::size_t i = 0; i < k; ++i) {
    const OrientedFlag next = i + 1 < k ? t[i + 1] : t[0].negated();
    const auto h = flag_hyperplane(next);
    v.push_back(t[i].f1());
    v.push_back(oriented_intersection(t[i].f1(), t[i].f2(), h[0], h[1], h[2]));
  }
  return LegendrianPolygon(std::move(v), -1);
}

UnipotentParams sample_semigroup_element(Rng& rng) {
  const Rational a = rng.rational(1, 6, 3);
  const Rational d = rng.rational(1, 6, 3);
  const Rational b = a * d * rng.unit_open(16);
  const Rational c = b * (a * d - b) / d * rng.unit_open(16);
  return UnipotentParams{a, b, c, d};
}

FlagTuple sample_positive_tuple(std::size_t k, std::uint64_t seed) {
  if (k < 3) throw Error(ErrorCode::InvalidInput, "positive tuples need k >= 3");
  Rng rng(seed);
  FlagTuple out{standard_flag()};
  Mat4 acc = Mat4::identity();
  for (std::size_t i = 0; i + 2 < k; ++i) {
    acc = acc * unipotent_matrix(sample_semigroup_element(rng));
    out.push_back(standard_flag().transformed(acc));
  }
  out.push_back(opposite_flag());
  return out;
}

FlagTuple parametrize_positive_triple(const Rational& x, const Rational& y) {
  if (sgn(x) <= 0 || sgn(y) <= 0) throw Error(ErrorCode::InvalidInput, "parameters must be positive");
  const Vec4 f1{1, x + y + 1 / y, y, 1};
  const Vec4 f2{0, 1, 1, x + 1 / y};
  return {standard_flag(), OrientedFlag(f1, f2), opposite_flag()};
}

bool semigroup_inverse_identity_check(const UnipotentParams& p) {
  if (!in_positive_semigroup(p)) throw Error(ErrorCode::InvalidInput, "element is not in the positive semigroup");
  const Mat4 k = Mat4::diag(1, -1, 1, -1);
  const auto q = unipotent_params(k * unipotent_matrix(p).inverse() * k);
  return q && in_positive_semigroup(*q);
}

}  // namespace legcirc

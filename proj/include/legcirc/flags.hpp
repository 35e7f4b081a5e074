#pragma once

#include "legcirc/polygon.hpp"
#include "legcirc/symplectic.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace legcirc {

// F⁽¹⁾ = span(f₁) oriented by f₁, F⁽²⁾ = span(f₁,f₂) oriented by (f₁,f₂).
// F⁽³⁾ = F⁽¹⁾^⊥ is derived: a basis (f₁,f₂,f₃) of it is oriented when
// ω(f₂,f₃) < 0, the sign ω takes on (e₂,e₃).
class OrientedFlag {
 public:
  // Throws Error(NotLagrangian) unless f₁, f₂ are independent and ω(f₁,f₂) = 0.
  OrientedFlag(const Vec4& f1, const Vec4& f2);

  const Vec4& f1() const { return f1_; }
  const Vec4& f2() const { return f2_; }
  Lagrangian plane() const { return Lagrangian(f1_, f2_); }
  OrientedFlag negated() const { return OrientedFlag(-f1_, -f2_); }
  OrientedFlag transformed(const Mat4& m) const { return OrientedFlag(m * f1_, m * f2_); }

  // Same oriented line and same oriented plane.
  friend bool operator==(const OrientedFlag& a, const OrientedFlag& b);

 private:
  Vec4 f1_;
  Vec4 f2_;
};

using FlagTuple = std::vector<OrientedFlag>;

// F₀ = F_E for the standard basis, F∞ = F_Ê for Ê = (e₄, −e₃, e₂, −e₁).
OrientedFlag standard_flag();
OrientedFlag opposite_flag();

// Symplectic basis (f₁,f₂,f₃,f₄) adapted to F: its first three columns are
// an oriented basis of F⁽³⁾ and its Gram matrix is Ω, so it maps F₀ to F.
Mat4 complete_flag(const OrientedFlag& f);

enum class PairRelation { OrientedTransverse, WrongOrientation, NotTransverse };
const char* to_string(PairRelation r);

PairRelation classify_pair(const OrientedFlag& f, const OrientedFlag& g);
bool flags_transverse(const OrientedFlag& f, const OrientedFlag& g);

// M with M·F = F₀ and M·G = F∞. Throws Error(NotOrientedTransverse).
SymplecticMatrix normalize_pair(const OrientedFlag& f, const OrientedFlag& g);

struct UnipotentParams {
  Rational a, b, c, d;
  friend bool operator==(const UnipotentParams& x, const UnipotentParams& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }
};

// Rows 1; a 1; b d 1; c ad−b a 1.
Mat4 unipotent_matrix(const UnipotentParams& p);
// Inverse of unipotent_matrix; empty if m is not of that form.
std::optional<UnipotentParams> unipotent_params(const Mat4& m);

bool in_positive_semigroup(const UnipotentParams& p);

// Normalizes (F₁,F₃) to (F₀,F∞) and writes F₂ as u·F₀; empty when the pair
// is not oriented-transverse or F₂ is not of that form.
std::optional<UnipotentParams> extract_unipotent(const OrientedFlag& f1, const OrientedFlag& f2,
                                                 const OrientedFlag& f3);

bool triple_positive(const OrientedFlag& f1, const OrientedFlag& f2, const OrientedFlag& f3);

// Every ordered sub-triple positive; with fast_path only (Fᵢ,Fᵢ₊₁,Fⱼ).
bool tuple_positive(const FlagTuple& t, bool fast_path = false);

// Fⱼ = (v₂ⱼ₋₁ ⊂ span(v₂ⱼ₋₁, v₂ⱼ)). Throws Error(InvalidPolygon) for odd n
// or ε = +1 and Error(NotTransverse) if two flags fail to be transverse.
FlagTuple polygon_to_flags(const LegendrianPolygon& p);

// Generator of U ∩ W oriented by the basis-extension rule: x is positive
// when (u, x) is oriented in U, (x, w₂, w₃) is oriented in W and
// (u, x, w₂, w₃) is oriented in V. Throws Error(NotTransverse).
Vec4 oriented_intersection(const Vec4& u1, const Vec4& u2, const Vec4& w1, const Vec4& w2, const Vec4& w3);

// Oriented basis of F⁽³⁾.
std::array<Vec4, 3> flag_hyperplane(const OrientedFlag& f);

// P₋(F₁⁽¹⁾, F₁⁽²⁾∩F₂⁽³⁾, …, F_k⁽¹⁾, F_k⁽²⁾∩(−F₁)⁽³⁾).
LegendrianPolygon flags_to_polygon(const FlagTuple& t);

// (F₀, u₁F₀, u₁u₂F₀, …, F∞) with random uᵢ in the positive semigroup.
FlagTuple sample_positive_tuple(std::size_t k, std::uint64_t seed);
UnipotentParams sample_semigroup_element(Rng& rng);

// (F₀, F(x,y), F∞) for x, y > 0.
FlagTuple parametrize_positive_triple(const Rational& x, const Rational& y);

// u⁻¹ = K u′ K with u′ positive, K = diag(1,−1,1,−1). Throws
// Error(InvalidInput) if p is outside the semigroup.
bool semigroup_inverse_identity_check(const UnipotentParams& p);

}  // namespace legcirc

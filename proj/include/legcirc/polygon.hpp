#pragma once

#include "legcirc/random.hpp"
#include "legcirc/symplectic.hpp"

#include <optional>
#include <vector>

namespace legcirc {

enum class Transversality { NotTransverse, PositiveTransverse, NegativeTransverse };
enum class HomotopyClass { Contractible, Generator };

const char* to_string(Transversality t);
const char* to_string(HomotopyClass h);

// Closed polygon v₁ … vₙ whose last segment runs from vₙ to ε·v₁.
class LegendrianPolygon {
 public:
  // Throws Error(InvalidPolygon) for n < 4, a non-Legendrian segment or a
  // degenerate segment/corner, Error(ZeroVector) for a zero vertex.
  LegendrianPolygon(std::vector<Vec4> vertices, int closing_sign);

  std::size_t size() const { return vertices_.size(); }
  int closing_sign() const { return sign_; }
  const std::vector<Vec4>& vertices() const { return vertices_; }
  // 0-based; indices ≥ n wrap around and pick up the closing sign.
  Vec4 vertex(std::size_t k) const;

 private:
  std::vector<Vec4> vertices_;
  int sign_;
};

// Cyclic adjacency for vertex or edge indices (0-based).
bool cyclically_adjacent(std::size_t i, std::size_t j, std::size_t n);

// Segments [u₁,u₂] and [v₁,v₂] are non-incident at interior points iff the
// four cross products share a weak sign. Throws Error(InvalidInput) when a
// segment is not Legendrian and Error(Degenerate) when all products vanish.
bool segment_pair_nonincident(const Vec4& u1, const Vec4& u2, const Vec4& v1, const Vec4& v2);

bool is_generic(const LegendrianPolygon& p);

// Sign criterion on the vertex products.
Transversality transversality_class(const LegendrianPolygon& p);
// Same verdict from the segment lemma applied to every pair of edges that
// share no vertex, the closing edge using ε·v₁.
Transversality transversality_class_exhaustive(const LegendrianPolygon& p);

inline bool is_transverse(const LegendrianPolygon& p) {
  return transversality_class(p) != Transversality::NotTransverse;
}

// span(v_k, v_{k+1}), k 1-based.
Lagrangian edge_lagrangian(const LegendrianPolygon& p, std::size_t k);

struct EdgeTriple {
  std::size_t i, j, k;       // 1-based edge numbers, i < j < k
  std::optional<int> index;  // empty when two of the edges are not transverse
};

// Maslov indices of all cyclically ordered triples of pairwise
// non-adjacent edges.
std::vector<EdgeTriple> edge_triples(const LegendrianPolygon& p);

// Throws Error(NotTransverse) for non-transverse polygons.
bool has_decreasing_curvature(const LegendrianPolygon& p);

HomotopyClass homotopy_class(const LegendrianPolygon& p);
LegendrianPolygon apply_symplectic(const LegendrianPolygon& p, const SymplecticMatrix& m);
LegendrianPolygon reversed(const LegendrianPolygon& p);

// Incident pair p on edge i, q on edge j (edges sharing no vertex).
struct IncidenceWitness {
  std::size_t edge_i, edge_j;  // 1-based
  Rational t, s;               // p = (1−t)a₁ + t a₂, q = (1−s)b₁ + s b₂
  Vec4 p, q;
};

// Searches a rational grid of t and solves for s exactly.
std::optional<IncidenceWitness> find_incidence_witness(const LegendrianPolygon& p, long grid = 64);

// Random Legendrian polygon with entries drawn from small integers.
LegendrianPolygon sample_legendrian_polygon(std::size_t n, int closing_sign, Rng& rng);

// Rejection sampler: Legendrian chain, vertex signs chosen so all
// non-adjacent products share a sign, accepted if generic. ε = −1.
LegendrianPolygon sample_transverse_polygon(std::size_t n, Rng& rng, int max_tries = 100000);

}  // namespace legcirc

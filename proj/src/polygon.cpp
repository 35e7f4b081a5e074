#include "legcirc/polygon.hpp"

#include "legcirc/error.hpp"

#include <algorithm>
#include <cstdlib>

namespace legcirc {

const char* to_string(Transversality t) {
  switch (t) {
    case Transversality::NotTransverse: return "not transverse";
    case Transversality::PositiveTransverse: return "positive-transverse";
    case Transversality::NegativeTransverse: return "negative-transverse";
  }
  return "?";
}

const char* to_string(HomotopyClass h) {
  return h == HomotopyClass::Contractible ? "contractible" : "generator";
}

LegendrianPolygon::LegendrianPolygon(std::vector<Vec4> vertices, int closing_sign)
    : vertices_(std::move(vertices)), sign_(closing_sign) {
  if (sign_ != 1 && sign_ != -1) throw Error(ErrorCode::InvalidInput, "closing sign must be +1 or -1");
  const std::size_t n = vertices_.size();
  if (n < 4) throw Error(ErrorCode::InvalidPolygon, "a Legendrian polygon needs at least 4 vertices");
  for (std::size_t k = 0; k < n; ++k)
    if (is_zero(vertices_[k])) throw Error(ErrorCode::ZeroVector, "vertex " + std::to_string(k + 1) + " is zero");
  for (std::size_t k = 0; k < n; ++k) {
    const Vec4 a = vertex(k), b = vertex(k + 1), c = vertex(k + 2);
    const std::string at = "segment " + std::to_string(k + 1);
    if (sgn(symplectic_product(a, b)) != 0) throw Error(ErrorCode::InvalidPolygon, at + " is not Legendrian");
    if (rank_of({a, b}) != 2) throw Error(ErrorCode::InvalidPolygon, at + " is degenerate");
    if (rank_of({a, b, c}) != 3)
      throw Error(ErrorCode::InvalidPolygon, at + " and the next segment lie on one projective line");
  }
}

Vec4 LegendrianPolygon::vertex(std::size_t k) const {
  const std::size_t n = vertices_.size();
  const Vec4& v = vertices_[k % n];
  return ((k / n) % 2 == 1 && sign_ < 0) ? -v : v;
}

bool cyclically_adjacent(std::size_t i, std::size_t j, std::size_t n) {
  const std::size_t d = (i + n - j) % n;
  return d == 1 || d == n - 1;
}

bool segment_pair_nonincident(const Vec4& u1, const Vec4& u2, const Vec4& v1, const Vec4& v2) {
  if (sgn(symplectic_product(u1, u2)) != 0 || sgn(symplectic_product(v1, v2)) != 0)
    throw Error(ErrorCode::InvalidInput, "segment is not Legendrian");
  const int s[4] = {sgn(symplectic_product(u1, v1)), sgn(symplectic_product(u1, v2)),
                    sgn(symplectic_product(u2, v1)), sgn(symplectic_product(u2, v2))};
  bool pos = false, neg = false;
  for (int x : s) {
    pos |= x > 0;
    neg |= x < 0;
  }
  if (!pos && !neg) throw Error(ErrorCode::Degenerate, "all four cross products vanish");
  return !(pos && neg);
}

bool is_generic(const LegendrianPolygon& p) {
  const std::size_t n = p.size();
  const auto& v = p.vertices();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (cyclically_adjacent(i, j, n)) continue;
      if (sgn(symplectic_product(v[i], v[j])) == 0) return false;
      if (sgn(det4(v[i], v[(i + 1) % n], v[j], v[(j + 1) % n])) == 0) return false;
    }
  return true;
}

Transversality transversality_class(const LegendrianPolygon& p) {
  if (p.closing_sign() > 0) return Transversality::NotTransverse;
  const std::size_t n = p.size();
  const auto& v = p.vertices();
  int common = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 2; j < n; ++j) {
      if (cyclically_adjacent(i, j, n)) continue;
      const int s = sgn(symplectic_product(v[i], v[j]));
      if (s == 0 || (common != 0 && s != common)) return Transversality::NotTransverse;
      common = s;
    }
  return common > 0 ? Transversality::PositiveTransverse : Transversality::NegativeTransverse;
}

Transversality transversality_class_exhaustive(const LegendrianPolygon& p) {
  const std::size_t n = p.size();
  int common = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (cyclically_adjacent(i, j, n)) continue;
      const std::size_t ends_i[2] = {i, i + 1}, ends_j[2] = {j, j + 1};
      for (std::size_t x : ends_i)
        for (std::size_t y : ends_j) {
          const int s = sgn(symplectic_product(p.vertex(x), p.vertex(y)));
          if (s == 0 && !cyclically_adjacent(x % n, y % n, n)) return Transversality::NotTransverse;
        }
      if (!segment_pair_nonincident(p.vertex(i), p.vertex(i + 1), p.vertex(j), p.vertex(j + 1)))
        return Transversality::NotTransverse;
      if (common == 0) {
        for (std::size_t x : ends_i)
          for (std::size_t y : ends_j)
            if (common == 0) common = sgn(symplectic_product(p.vertex(x), p.vertex(y)));
      }
    }
  return common > 0 ? Transversality::PositiveTransverse : Transversality::NegativeTransverse;
}

Lagrangian edge_lagrangian(const LegendrianPolygon& p, std::size_t k) {
  if (k < 1 || k > p.size()) throw Error(ErrorCode::InvalidInput, "edge index out of range");
  return Lagrangian(p.vertex(k - 1), p.vertex(k));
}

std::vector<EdgeTriple> edge_triples(const LegendrianPolygon& p) {
  const std::size_t n = p.size();
  std::vector<Lagrangian> edges;
  for (std::size_t k = 1; k <= n; ++k) edges.push_back(edge_lagrangian(p, k));
  std::vector<EdgeTriple> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 2; j < n; ++j)
      for (std::size_t k = j + 2; k < n; ++k) {
        if (cyclically_adjacent(i, k, n)) continue;
        EdgeTriple t{i + 1, j + 1, k + 1, std::nullopt};
        if (lagrangians_transverse(edges[i], edges[j]) && lagrangians_transverse(edges[j], edges[k]) &&
            lagrangians_transverse(edges[i], edges[k]))
          t.index = maslov_index(edges[i], edges[j], edges[k]);
        out.push_back(t);
      }
  return out;
}

bool has_decreasing_curvature(const LegendrianPolygon& p) {
  if (!is_transverse(p)) throw Error(ErrorCode::NotTransverse, "decreasing curvature needs a transverse polygon");
  for (const auto& t : edge_triples(p))
    if (!t.index || *t.index != 1) return false;
  return true;
}

HomotopyClass homotopy_class(const LegendrianPolygon& p) {
  return p.closing_sign() > 0 ? HomotopyClass::Contractible : HomotopyClass::Generator;
}

LegendrianPolygon apply_symplectic(const LegendrianPolygon& p, const SymplecticMatrix& m) {
  std::vector<Vec4> out;
  out.reserve(p.size());
  for (const auto& v : p.vertices()) out.push_back(m * v);
  return LegendrianPolygon(std::move(out), p.closing_sign());
}

LegendrianPolygon reversed(const LegendrianPolygon& p) {
  std::vector<Vec4> out(p.vertices().rbegin(), p.vertices().rend());
  return LegendrianPolygon(std::move(out), p.closing_sign());
}

std::optional<IncidenceWitness> find_incidence_witness(const LegendrianPolygon& p, long grid) {
  const std::size_t n = p.size();
  // Central parameters first so the witness sits away from the vertices.
  std::vector<long> order;
  for (long m = 1; m < grid; ++m) order.push_back(m);
  std::stable_sort(order.begin(), order.end(),
                   [grid](long a, long b) { return std::labs(2 * a - grid) < std::labs(2 * b - grid); });
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (cyclically_adjacent(i, j, n)) continue;
      const Vec4 a1 = p.vertex(i), a2 = p.vertex(i + 1), b1 = p.vertex(j), b2 = p.vertex(j + 1);
      for (long m : order) {
        const Rational t = frac(m, grid);
        const Vec4 x = (1 - t) * a1 + t * a2;
        const Rational a = symplectic_product(x, b1);
        const Rational b = symplectic_product(x, b2 - b1);
        Rational s;
        if (sgn(b) != 0) {
          s = -a / b;
        } else if (sgn(a) == 0) {
          s = frac(1, 2);
        } else {
          continue;
        }
        if (sgn(s) <= 0 || s >= 1) continue;
        const Vec4 y = (1 - s) * b1 + s * b2;
        if (rank_of({x, y}) != 2) continue;
        return IncidenceWitness{i + 1, j + 1, t, s, x, y};
      }
    }
  return std::nullopt;
}

namespace {

// Random vector ω-orthogonal to v, integral when v is.
Vec4 random_orthogonal(const Vec4& v, Rng& rng) {
  for (;;) {
    const Vec4 w = rng.vec(-3, 3), x = rng.vec(-3, 3);
    const Vec4 r = symplectic_product(v, x) * w - symplectic_product(v, w) * x;
    if (!is_zero(r)) return r;
  }
}

std::vector<Vec4> random_chain(std::size_t n, Rng& rng) {
  for (;;) {
    std::vector<Vec4> v{rng.vec(-3, 3)};
    if (is_zero(v[0])) continue;
    for (std::size_t k = 1; k + 1 < n; ++k) v.push_back(random_orthogonal(v.back(), rng));
    // Last vertex: kernel of x ↦ (ω(v_{n-1},x), ω(v_1,x)).
    Matrix sys(2, 4);
    const Vec4 rows[2] = {v.back(), v.front()};
    for (int r = 0; r < 2; ++r) {
      const Vec4& a = rows[r];
      const Vec4 coeffs{-a[3], a[2], -a[1], a[0]};  // ω(a,x) = Σ coeffs·x
      for (int c = 0; c < 4; ++c) sys(r, c) = coeffs[c];
    }
    const auto kernel = sys.null_space();
    if (kernel.size() != 2) continue;
    Vec4 last{0, 0, 0, 0};
    for (const auto& k : kernel) {
      const long c = rng.integer(-3, 3);
      for (int i = 0; i < 4; ++i) last[i] += c * k[i];
    }
    if (is_zero(last)) continue;
    v.push_back(last);
    return v;
  }
}

}  // namespace

LegendrianPolygon sample_legendrian_polygon(std::size_t n, int closing_sign, Rng& rng) {
  if (n < 4) throw Error(ErrorCode::InvalidInput, "polygons need n >= 4");
  for (;;) {
    try {
      return LegendrianPolygon(random_chain(n, rng), closing_sign);
    } catch (const Error&) {
    }
  }
}

LegendrianPolygon sample_transverse_polygon(std::size_t n, Rng& rng, int max_tries) {
  if (n < 4) throw Error(ErrorCode::InvalidInput, "polygons need n >= 4");
  for (int attempt = 0; attempt < max_tries; ++attempt) {
    std::vector<Vec4> v = random_chain(n, rng);
    const int target = rng.coin() ? 1 : -1;
    // Vertex signs s with s_i s_j sign ω(v_i,v_j) = target on every
    // non-adjacent pair: 2-colouring of the non-adjacency graph.
    std::vector<int> s(n, 0);
    bool ok = true;
    for (std::size_t root = 0; root < n && ok; ++root) {
      if (s[root] != 0) continue;
      s[root] = rng.coin() ? 1 : -1;
      std::vector<std::size_t> stack{root};
      while (!stack.empty() && ok) {
        const std::size_t i = stack.back();
        stack.pop_back();
        for (std::size_t j = 0; j < n; ++j) {
          if (j == i || cyclically_adjacent(i, j, n) || s[j] != 0) continue;
          const int w = sgn(symplectic_product(v[std::min(i, j)], v[std::max(i, j)]));
          if (w == 0) {
            ok = false;
            break;
          }
          s[j] = s[i] * w * target;
          stack.push_back(j);
        }
      }
    }
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = i + 2; j < n && ok; ++j) {
        if (cyclically_adjacent(i, j, n)) continue;
        ok = s[i] * s[j] * sgn(symplectic_product(v[i], v[j])) == target;
      }
    if (!ok) continue;
    for (std::size_t i = 0; i < n; ++i)
      if (s[i] < 0) v[i] = -v[i];
    try {
      LegendrianPolygon p(std::move(v), -1);
      if (is_generic(p)) return p;
    } catch (const Error&) {
    }
  }
  throw Error(ErrorCode::Degenerate, "no transverse polygon found within the attempt budget");
}

}  // namespace legcirc

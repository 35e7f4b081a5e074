#pragma once

#include "legcirc/linalg.hpp"
#include "legcirc/random.hpp"
#include "legcirc/symplectic.hpp"

namespace testutil {

using namespace legcirc;

inline Vec4 e(int i) { return basis_vector(i); }

inline Vec4 q4(const char* a, const char* b, const char* c, const char* d) {
  return Vec4{parse_rational(a), parse_rational(b), parse_rational(c), parse_rational(d)};
}

// Symplectic matrix built from random elementary symplectic shears, so it
// is independent of the library's own group constructions.
inline Mat4 random_symplectic(Rng& rng) {
  Mat4 m = Mat4::identity();
  const Mat4& omega = omega_matrix();
  for (int step = 0; step < 4; ++step) {
    // Transvection x ↦ x + λ ω(v, x) v.
    const Vec4 v = rng.vec(-2, 2);
    const Rational lambda = rng.rational(-2, 2, 2);
    Mat4 t = Mat4::identity();
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        Rational row = 0;  // ω(v, e_j) = Σ_k v_k Ω_kj
        for (int k = 0; k < 4; ++k) row += v[k] * omega(k, j);
        t(i, j) += lambda * v[i] * row;
      }
    m = t * m;
  }
  return m;
}

}  // namespace testutil

#pragma once

#include "legcirc/linalg.hpp"

#include <cstdint>
#include <random>

namespace legcirc {

// Seeded generator with draws defined by plain modular reduction of the
// raw mt19937_64 stream, so sequences are identical on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }
  // Uniform-ish integer in [lo, hi].
  long integer(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(gen_() % span);
  }
  bool coin() { return (gen_() & 1u) != 0; }
  // p/q with p in [lo, hi], q in [1, max_den].
  Rational rational(long lo, long hi, long max_den) {
    const long n = integer(lo, hi);
    return frac(n, integer(1, max_den));
  }
  // Strictly inside (0, 1) with denominator `steps`.
  Rational unit_open(long steps) { return frac(integer(1, steps - 1), steps); }
  Vec4 vec(long lo, long hi) {
    return Vec4{Rational(integer(lo, hi)), Rational(integer(lo, hi)), Rational(integer(lo, hi)),
                Rational(integer(lo, hi))};
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace legcirc

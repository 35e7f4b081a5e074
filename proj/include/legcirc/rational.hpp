#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace legcirc {

// Exact scalar field for everything in V. mpq_class values are kept canonical
// (reduced, positive denominator) by every constructor used in this library.
using Rational = mpq_class;

// Accepts "p", "p/q" and "-p/q" with optional surrounding whitespace.
Rational parse_rational(std::string_view text);

// Canonical text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

inline int sign(const Rational& q) { return sgn(q); }

// n/d in canonical form. mpq_class(n, d) does not reduce, and GMP
// arithmetic assumes reduced operands.
inline Rational frac(long n, long d) {
  Rational q(n, d);
  q.canonicalize();
  return q;
}

double to_double(const Rational& q);

// Rational complex number re + i·im.
struct ComplexQ {
  Rational re;
  Rational im;

  ComplexQ() = default;
  ComplexQ(Rational r, Rational i = 0) : re(std::move(r)), im(std::move(i)) {}
  ComplexQ(long r, long i) : re(r), im(i) {}

  static ComplexQ i_unit() { return ComplexQ(0, 1); }

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  ComplexQ conj() const { return ComplexQ(re, -im); }
  Rational norm2() const { return re * re + im * im; }

  friend bool operator==(const ComplexQ& a, const ComplexQ& b) {
    return a.re == b.re && a.im == b.im;
  }
};

ComplexQ operator+(const ComplexQ& a, const ComplexQ& b);
ComplexQ operator-(const ComplexQ& a, const ComplexQ& b);
ComplexQ operator-(const ComplexQ& a);
ComplexQ operator*(const ComplexQ& a, const ComplexQ& b);
ComplexQ operator*(const Rational& s, const ComplexQ& a);
// Throws Error(Degenerate) on division by zero.
ComplexQ operator/(const ComplexQ& a, const ComplexQ& b);

std::string to_string(const ComplexQ& z);

}  // namespace legcirc

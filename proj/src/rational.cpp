#include "legcirc/rational.hpp"

#include "legcirc/error.hpp"

#include <cctype>

namespace legcirc {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return "invalid input";
    case ErrorCode::ZeroVector: return "zero vector";
    case ErrorCode::NotLagrangian: return "not Lagrangian";
    case ErrorCode::NotTransverse: return "not transverse";
    case ErrorCode::NotSymplectic: return "not symplectic";
    case ErrorCode::InvalidPolygon: return "invalid polygon";
    case ErrorCode::Degenerate: return "degenerate";
    case ErrorCode::NotOrientedTransverse: return "not oriented-transverse";
    case ErrorCode::Parse: return "parse error";
    case ErrorCode::Io: return "i/o error";
    case ErrorCode::Unrepresentable: return "unrepresentable";
  }
  return "unknown";
}

namespace {

bool is_integer_literal(std::string_view s, bool allow_sign) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view s = trim(text);
  const auto slash = s.find('/');
  const std::string_view num = slash == std::string_view::npos ? s : s.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : s.substr(slash + 1);
  if (!is_integer_literal(num, true) || !is_integer_literal(den, false)) {
    throw Error(ErrorCode::Parse, "malformed rational literal '" + std::string(text) + "'");
  }
  // mpz_class rejects a leading '+', strip it.
  const std::string num_str(num.front() == '+' ? num.substr(1) : num);
  mpz_class n(num_str, 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) {
    throw Error(ErrorCode::Parse, "zero denominator in '" + std::string(text) + "'");
  }
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

double to_double(const Rational& q) { return q.get_d(); }

ComplexQ operator+(const ComplexQ& a, const ComplexQ& b) {
  return ComplexQ(a.re + b.re, a.im + b.im);
}

ComplexQ operator-(const ComplexQ& a, const ComplexQ& b) {
  return ComplexQ(a.re - b.re, a.im - b.im);
}

ComplexQ operator-(const ComplexQ& a) { return ComplexQ(-a.re, -a.im); }

ComplexQ operator*(const ComplexQ& a, const ComplexQ& b) {
  return ComplexQ(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
}

ComplexQ operator*(const Rational& s, const ComplexQ& a) {
  return ComplexQ(s * a.re, s * a.im);
}

ComplexQ operator/(const ComplexQ& a, const ComplexQ& b) {
  const Rational n = b.norm2();
  if (sgn(n) == 0) throw Error(ErrorCode::Degenerate, "complex division by zero");
  const ComplexQ p = a * b.conj();
  return ComplexQ(p.re / n, p.im / n);
}

std::string to_string(const ComplexQ& z) {
  return "(" + to_string(z.re) + ", " + to_string(z.im) + ")";
}

}  // namespace legcirc

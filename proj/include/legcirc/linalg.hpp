#pragma once

#include "legcirc/rational.hpp"

#include <array>
#include <cstddef>
#include <string>
#include <vector>

namespace legcirc {

using Vec4 = std::array<Rational, 4>;

Vec4 make_vec(long a, long b, long c, long d);
Vec4 basis_vector(int i);  // e_1..e_4, 1-based

Vec4 operator+(const Vec4& a, const Vec4& b);
Vec4 operator-(const Vec4& a, const Vec4& b);
Vec4 operator-(const Vec4& a);
Vec4 operator*(const Rational& s, const Vec4& a);
bool is_zero(const Vec4& v);
std::string to_string(const Vec4& v);

// True iff b = s·a for some s > 0.
bool same_ray(const Vec4& a, const Vec4& b);
// True iff a and b are parallel (either sign).
bool parallel(const Vec4& a, const Vec4& b);

struct Mat2 {
  std::array<Rational, 4> a;  // row-major

  Rational& operator()(int i, int j) { return a[2 * i + j]; }
  const Rational& operator()(int i, int j) const { return a[2 * i + j]; }

  Rational det() const { return a[0] * a[3] - a[1] * a[2]; }
  Rational trace() const { return a[0] + a[3]; }
  bool symmetric() const { return a[1] == a[2]; }

  friend bool operator==(const Mat2& x, const Mat2& y) { return x.a == y.a; }
};

struct Mat4 {
  std::array<Rational, 16> a;  // row-major

  Mat4();
  static Mat4 identity();
  static Mat4 diag(const Rational& d1, const Rational& d2, const Rational& d3, const Rational& d4);
  static Mat4 from_rows(const std::array<std::array<long, 4>, 4>& rows);
  static Mat4 from_columns(const Vec4& c1, const Vec4& c2, const Vec4& c3, const Vec4& c4);

  Rational& operator()(int i, int j) { return a[4 * i + j]; }
  const Rational& operator()(int i, int j) const { return a[4 * i + j]; }

  Vec4 column(int j) const;
  Mat4 transpose() const;
  Rational det() const;
  // Throws Error(Degenerate) when singular.
  Mat4 inverse() const;

  friend bool operator==(const Mat4& x, const Mat4& y) { return x.a == y.a; }
};

Mat4 operator*(const Mat4& x, const Mat4& y);
Vec4 operator*(const Mat4& m, const Vec4& v);
Mat4 operator*(const Rational& s, const Mat4& m);
Mat4 operator+(const Mat4& x, const Mat4& y);
Mat4 operator-(const Mat4& x, const Mat4& y);
std::string to_string(const Mat4& m);

Rational det4(const Vec4& c1, const Vec4& c2, const Vec4& c3, const Vec4& c4);

// Dense rational matrix for the small rank and kernel computations that do
// not fit the fixed 4x4 shape.
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols);
  // Columns are the given vectors.
  static Matrix from_columns(const std::vector<Vec4>& cols);
  // Rows are the given vectors.
  static Matrix from_rows(const std::vector<Vec4>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  // Reduced row echelon form, in place; returns pivot columns.
  std::vector<std::size_t> rref();
  std::size_t rank() const;
  // Basis of {x : A x = 0}, one vector per free column.
  std::vector<std::vector<Rational>> null_space() const;

  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> a_;
};

std::size_t rank_of(const std::vector<Vec4>& vectors);

}  // namespace legcirc

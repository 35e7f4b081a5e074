#include "legcirc/linalg.hpp"

#include "legcirc/error.hpp"

#include <utility>

namespace legcirc {

Vec4 make_vec(long a, long b, long c, long d) {
  return Vec4{Rational(a), Rational(b), Rational(c), Rational(d)};
}

Vec4 basis_vector(int i) {
  if (i < 1 || i > 4) throw Error(ErrorCode::InvalidInput, "basis index out of range");
  Vec4 v{0, 0, 0, 0};
  v[i - 1] = 1;
  return v;
}

Vec4 operator+(const Vec4& a, const Vec4& b) {
  return Vec4{a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]};
}

Vec4 operator-(const Vec4& a, const Vec4& b) {
  return Vec4{a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]};
}

Vec4 operator-(const Vec4& a) { return Vec4{-a[0], -a[1], -a[2], -a[3]}; }

Vec4 operator*(const Rational& s, const Vec4& a) {
  return Vec4{s * a[0], s * a[1], s * a[2], s * a[3]};
}

bool is_zero(const Vec4& v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

std::string to_string(const Vec4& v) {
  return "(" + to_string(v[0]) + ", " + to_string(v[1]) + ", " + to_string(v[2]) + ", " +
         to_string(v[3]) + ")";
}

namespace {

// s with b = s·a, or 0 if none.
Rational ratio(const Vec4& a, const Vec4& b) {
  if (is_zero(a) || is_zero(b)) return 0;
  int k = 0;
  while (sgn(a[k]) == 0) ++k;
  const Rational s = b[k] / a[k];
  for (int i = 0; i < 4; ++i)
    if (b[i] != s * a[i]) return 0;
  return s;
}

}  // namespace

bool same_ray(const Vec4& a, const Vec4& b) { return sgn(ratio(a, b)) > 0; }

bool parallel(const Vec4& a, const Vec4& b) { return sgn(ratio(a, b)) != 0; }

Mat4::Mat4() {
  for (auto& x : a) x = 0;
}

Mat4 Mat4::identity() { return diag(1, 1, 1, 1); }

Mat4 Mat4::diag(const Rational& d1, const Rational& d2, const Rational& d3, const Rational& d4) {
  Mat4 m;
  m(0, 0) = d1;
  m(1, 1) = d2;
  m(2, 2) = d3;
  m(3, 3) = d4;
  return m;
}

Mat4 Mat4::from_rows(const std::array<std::array<long, 4>, 4>& rows) {
  Mat4 m;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m(i, j) = rows[i][j];
  return m;
}

Mat4 Mat4::from_columns(const Vec4& c1, const Vec4& c2, const Vec4& c3, const Vec4& c4) {
  Mat4 m;
  const Vec4* cs[4] = {&c1, &c2, &c3, &c4};
  for (int j = 0; j < 4; ++j)
    for (int i = 0; i < 4; ++i) m(i, j) = (*cs[j])[i];
  return m;
}

Vec4 Mat4::column(int j) const { return Vec4{(*this)(0, j), (*this)(1, j), (*this)(2, j), (*this)(3, j)}; }

Mat4 Mat4::transpose() const {
  Mat4 t;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) t(i, j) = (*this)(j, i);
  return t;
}

Rational Mat4::det() const {
  Mat4 m = *this;
  Rational d = 1;
  for (int c = 0; c < 4; ++c) {
    int p = c;
    while (p < 4 && sgn(m(p, c)) == 0) ++p;
    if (p == 4) return 0;
    if (p != c) {
      for (int j = 0; j < 4; ++j) std::swap(m(p, j), m(c, j));
      d = -d;
    }
    d *= m(c, c);
    for (int r = c + 1; r < 4; ++r) {
      if (sgn(m(r, c)) == 0) continue;
      const Rational f = m(r, c) / m(c, c);
      for (int j = c; j < 4; ++j) m(r, j) -= f * m(c, j);
    }
  }
  return d;
}

Mat4 Mat4::inverse() const {
  Mat4 m = *this;
  Mat4 inv = identity();
  for (int c = 0; c < 4; ++c) {
    int p = c;
    while (p < 4 && sgn(m(p, c)) == 0) ++p;
    if (p == 4) throw Error(ErrorCode::Degenerate, "singular 4x4 matrix");
    if (p != c) {
      for (int j = 0; j < 4; ++j) {
        std::swap(m(p, j), m(c, j));
        std::swap(inv(p, j), inv(c, j));
      }
    }
    const Rational piv = m(c, c);
    for (int j = 0; j < 4; ++j) {
      m(c, j) /= piv;
      inv(c, j) /= piv;
    }
    for (int r = 0; r < 4; ++r) {
      if (r == c || sgn(m(r, c)) == 0) continue;
      const Rational f = m(r, c);
      for (int j = 0; j < 4; ++j) {
        m(r, j) -= f * m(c, j);
        inv(r, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

Mat4 operator*(const Mat4& x, const Mat4& y) {
  Mat4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      Rational s = 0;
      for (int k = 0; k < 4; ++k) s += x(i, k) * y(k, j);
      r(i, j) = s;
    }
  return r;
}

Vec4 operator*(const Mat4& m, const Vec4& v) {
  Vec4 r;
  for (int i = 0; i < 4; ++i) {
    Rational s = 0;
    for (int k = 0; k < 4; ++k) s += m(i, k) * v[k];
    r[i] = s;
  }
  return r;
}

Mat4 operator*(const Rational& s, const Mat4& m) {
  Mat4 r;
  for (int i = 0; i < 16; ++i) r.a[i] = s * m.a[i];
  return r;
}

Mat4 operator+(const Mat4& x, const Mat4& y) {
  Mat4 r;
  for (int i = 0; i < 16; ++i) r.a[i] = x.a[i] + y.a[i];
  return r;
}

Mat4 operator-(const Mat4& x, const Mat4& y) {
  Mat4 r;
  for (int i = 0; i < 16; ++i) r.a[i] = x.a[i] - y.a[i];
  return r;
}

std::string to_string(const Mat4& m) {
  std::string s = "[";
  for (int i = 0; i < 4; ++i) {
    s += i ? "; " : "";
    for (int j = 0; j < 4; ++j) s += (j ? " " : "") + to_string(m(i, j));
  }
  return s + "]";
}

Rational det4(const Vec4& c1, const Vec4& c2, const Vec4& c3, const Vec4& c4) {
  return Mat4::from_columns(c1, c2, c3, c4).det();
}

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, 0) {}

Matrix Matrix::from_columns(const std::vector<Vec4>& cols) {
  Matrix m(4, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < 4; ++i) m(i, j) = cols[j][i];
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec4>& rows) {
  Matrix m(rows.size(), 4);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < 4; ++j) m(i, j) = rows[i][j];
  return m;
}

std::vector<std::size_t> Matrix::rref() {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t p = r;
    while (p < rows_ && sgn((*this)(p, c)) == 0) ++p;
    if (p == rows_) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(p, j), (*this)(r, j));
    const Rational piv = (*this)(r, c);
    for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) /= piv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r || sgn((*this)(i, c)) == 0) continue;
      const Rational f = (*this)(i, c);
      for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) -= f * (*this)(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t Matrix::rank() const {
  Matrix m = *this;
  return m.rref().size();
}

std::vector<std::vector<Rational>> Matrix::null_space() const {
  Matrix m = *this;
  const auto pivots = m.rref();
  std::vector<bool> is_pivot(cols_, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> x(cols_, 0);
    x[f] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = -m(k, f);
    basis.push_back(std::move(x));
  }
  return basis;
}

std::size_t rank_of(const std::vector<Vec4>& vectors) {
  if (vectors.empty()) return 0;
  return Matrix::from_columns(vectors).rank();
}

}  // namespace legcirc

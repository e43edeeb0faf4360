/*
   Copyright 2026 The u2split Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "u2split/matrix.hpp"

#include <sstream>

namespace u2split {

Vec zero_vec(const Field& f, std::size_t n) { return Vec(n, f.zero()); }

Vec unit_vec(const Field& f, std::size_t n, std::size_t i) {
  Vec v(n, f.zero());
  v[i] = f.one();
  return v;
}

bool is_zero_vec(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Scalar dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) fail(ErrorCode::DimensionMismatch, "dot");
  if (a.empty()) fail(ErrorCode::DimensionMismatch, "dot of empty vectors has no field");
  Scalar s = a[0] * b[0];
  for (std::size_t i = 1; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Vec add(const Vec& a, const Vec& b) {
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vec scale(const Vec& a, const Scalar& c) {
  Vec r = a;
  for (auto& x : r) x *= c;
  return r;
}

Matrix::Matrix(Field f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), a_(rows * cols, f.zero()) {}

Matrix Matrix::identity(Field f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
  return m;
}

Matrix Matrix::from_ints(Field f, std::initializer_list<std::initializer_list<long long>> rows) {
  std::size_t nr = rows.size(), nc = nr ? rows.begin()->size() : 0;
  Matrix m(f, nr, nc);
  std::size_t i = 0;
  for (const auto& r : rows) {
    if (r.size() != nc) fail(ErrorCode::DimensionMismatch, "ragged matrix literal");
    std::size_t j = 0;
    for (long long v : r) m(i, j++) = f.from_int(v);
    ++i;
  }
  return m;
}

Matrix Matrix::from_columns(Field f, std::size_t rows, const std::vector<Vec>& cols) {
  Matrix m(f, rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) m.set_column(j, cols[j]);
  return m;
}

Matrix Matrix::diag(Field f, const std::vector<Scalar>& d) {
  Matrix m(f, d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

Matrix Matrix::block_diag(const Matrix& a, const Matrix& b) {
  if (a.field_ != b.field_) fail(ErrorCode::FieldMismatch, "block_diag");
  Matrix m(a.field_, a.rows_ + b.rows_, a.cols_ + b.cols_);
  m.set_block(0, 0, a);
  m.set_block(a.rows_, a.cols_, b);
  return m;
}

Matrix Matrix::hstack(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_) fail(ErrorCode::DimensionMismatch, "hstack");
  Matrix m(a.field_, a.rows_, a.cols_ + b.cols_);
  m.set_block(0, 0, a);
  m.set_block(0, a.cols_, b);
  return m;
}

Matrix Matrix::vstack(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.cols_) fail(ErrorCode::DimensionMismatch, "vstack");
  Matrix m(a.field_, a.rows_ + b.rows_, a.cols_);
  m.set_block(0, 0, a);
  m.set_block(a.rows_, 0, b);
  return m;
}

Vec Matrix::column(std::size_t j) const {
  Vec v;
  v.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
  return v;
}

Vec Matrix::row(std::size_t i) const {
  return Vec(a_.begin() + static_cast<long>(i * cols_), a_.begin() + static_cast<long>((i + 1) * cols_));
}

void Matrix::set_column(std::size_t j, const Vec& v) {
  if (v.size() != rows_) fail(ErrorCode::DimensionMismatch, "set_column");
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

std::vector<Vec> Matrix::columns() const {
  std::vector<Vec> c;
  for (std::size_t j = 0; j < cols_; ++j) c.push_back(column(j));
  return c;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) fail(ErrorCode::DimensionMismatch, "block");
  Matrix m(field_, nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) m(i, j) = (*this)(r0 + i, c0 + j);
  return m;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
  if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) fail(ErrorCode::DimensionMismatch, "set_block");
  for (std::size_t i = 0; i < b.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

Matrix Matrix::scaled(const Scalar& c) const {
  Matrix m = *this;
  for (auto& x : m.a_) x *= c;
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

bool Matrix::is_identity() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((i == j) ? !(*this)(i, j).is_one() : !(*this)(i, j).is_zero()) return false;
  return true;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) fail(ErrorCode::DimensionMismatch, "matrix add");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) fail(ErrorCode::DimensionMismatch, "matrix sub");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) fail(ErrorCode::DimensionMismatch, "matrix mul");
  if (a.field_ != b.field_) fail(ErrorCode::FieldMismatch, "matrix mul");
  Matrix c(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += x * b(k, j);
    }
  return c;
}

Vec operator*(const Matrix& a, const Vec& x) {
  if (a.cols_ != x.size()) fail(ErrorCode::DimensionMismatch, "matrix-vector mul");
  Vec y(a.rows_, a.field_.zero());
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) y[i] += a(i, k) * x[k];
  return y;
}

bool operator==(const Matrix& a, const Matrix& b) {
  if (a.field_ != b.field_ || a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  for (std::size_t i = 0; i < a.a_.size(); ++i)
    if (a.a_[i] != b.a_[i]) return false;
  return true;
}

std::string Matrix::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).str();
    os << "]";
  }
  os << "]";
  return os.str();
}

Matrix pow(const Matrix& a, unsigned e) {
  Matrix r = Matrix::identity(a.field(), a.rows()), b = a;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

Rref rref(const Matrix& a) {
  Matrix r = a;
  std::vector<std::size_t> piv;
  std::size_t row = 0;
  for (std::size_t col = 0; col < r.cols() && row < r.rows(); ++col) {
    std::size_t sel = row;
    while (sel < r.rows() && r(sel, col).is_zero()) ++sel;
    if (sel == r.rows()) continue;
    if (sel != row)
      for (std::size_t j = 0; j < r.cols(); ++j) std::swap(r(sel, j), r(row, j));
    Scalar inv = r(row, col).inv();
    for (std::size_t j = col; j < r.cols(); ++j) r(row, j) *= inv;
    for (std::size_t i = 0; i < r.rows(); ++i) {
      if (i == row || r(i, col).is_zero()) continue;
      Scalar c = r(i, col);
      for (std::size_t j = col; j < r.cols(); ++j) r(i, j) -= c * r(row, j);
    }
    piv.push_back(col);
    ++row;
  }
  return {std::move(r), std::move(piv)};
}

std::size_t rank(const Matrix& a) { return rref(a).pivots.size(); }

bool is_invertible(const Matrix& a) { return a.is_square() && rank(a) == a.rows(); }

Matrix inverse(const Matrix& a) {
  if (!a.is_square()) fail(ErrorCode::NonSquare, "inverse");
  std::size_t n = a.rows();
  Rref r = rref(Matrix::hstack(a, Matrix::identity(a.field(), n)));
  if (r.pivots.size() < n || (n > 0 && r.pivots[n - 1] != n - 1)) fail(ErrorCode::NotInvertible, "singular matrix");
  return r.r.block(0, n, n, n);
}

Scalar det(const Matrix& a) {
  if (!a.is_square()) fail(ErrorCode::NonSquare, "det");
  Matrix m = a;
  std::size_t n = m.rows();
  Scalar d = a.field().one();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c).is_zero()) ++p;
    if (p == n) return a.field().zero();
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      d = -d;
    }
    d *= m(c, c);
    Scalar inv = m(c, c).inv();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c).is_zero()) continue;
      Scalar f = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return d;
}

Matrix nullspace(const Matrix& a) {
  Rref r = rref(a);
  std::size_t n = a.cols();
  std::vector<bool> is_piv(n, false);
  for (auto p : r.pivots) is_piv[p] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_piv[free]) continue;
    Vec v = zero_vec(a.field(), n);
    v[free] = a.field().one();
    for (std::size_t k = 0; k < r.pivots.size(); ++k) v[r.pivots[k]] = -r.r(k, free);
    basis.push_back(std::move(v));
  }
  return Matrix::from_columns(a.field(), n, basis);
}

std::optional<Vec> solve(const Matrix& a, const Vec& b) {
  if (b.size() != a.rows()) fail(ErrorCode::DimensionMismatch, "solve");
  Matrix aug(a.field(), a.rows(), a.cols() + 1);
  aug.set_block(0, 0, a);
  aug.set_column(a.cols(), b);
  Rref r = rref(aug);
  if (!r.pivots.empty() && r.pivots.back() == a.cols()) return std::nullopt;
  Vec x = zero_vec(a.field(), a.cols());
  for (std::size_t k = 0; k < r.pivots.size(); ++k) x[r.pivots[k]] = r.r(k, a.cols());
  return x;
}

Scalar bilinear(const Vec& x, const Matrix& g, const Vec& y) { return dot(x, g * y); }

Matrix poly_eval(const Poly& f, const Matrix& a) {
  Matrix r(a.field(), a.rows(), a.cols());
  Matrix id = Matrix::identity(a.field(), a.rows());
  for (int i = f.degree(); i >= 0; --i) r = r * a + id.scaled(f.coeff(static_cast<std::size_t>(i)));
  return r;
}

Vec poly_apply(const Poly& f, const Matrix& a, const Vec& x) {
  Vec r = zero_vec(a.field(), x.size());
  for (int i = f.degree(); i >= 0; --i) r = add(a * r, scale(x, f.coeff(static_cast<std::size_t>(i))));
  return r;
}

Matrix companion(const Poly& p) {
  if (!p.is_monic() || p.degree() < 1) fail(ErrorCode::BadParameters, "companion needs monic positive degree");
  std::size_t n = static_cast<std::size_t>(p.degree());
  Matrix c(p.field(), n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) c(i + 1, i) = p.field().one();
  for (std::size_t i = 0; i < n; ++i) c(i, n - 1) = -p.coeff(i);
  return c;
}

Poly char_poly(const Matrix& a) {
  if (!a.is_square()) fail(ErrorCode::NonSquare, "char_poly");
  const Field& f = a.field();
  std::size_t n = a.rows();
  Matrix h = a;
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t p = j + 1;
    while (p < n && h(p, j).is_zero()) ++p;
    if (p == n) continue;
    if (p != j + 1) {
      for (std::size_t k = 0; k < n; ++k) std::swap(h(p, k), h(j + 1, k));
      for (std::size_t k = 0; k < n; ++k) std::swap(h(k, p), h(k, j + 1));
    }
    Scalar inv = h(j + 1, j).inv();
    for (std::size_t i = j + 2; i < n; ++i) {
      if (h(i, j).is_zero()) continue;
      Scalar c = h(i, j) * inv;
      for (std::size_t k = 0; k < n; ++k) h(i, k) -= c * h(j + 1, k);
      for (std::size_t k = 0; k < n; ++k) h(k, j + 1) += c * h(k, i);
    }
  }
  // p_k = (t - h_kk) p_{k-1} - sum_{i<k} h_{ik} (prod_{j=i+1..k} h_{j,j-1}) p_{i-1}
  std::vector<Poly> ps{Poly::constant(f, f.one())};
  for (std::size_t k = 0; k < n; ++k) {
    Poly pk = Poly::linear(f, h(k, k)) * ps[k];
    Scalar prod = f.one();
    for (std::size_t i = k; i-- > 0;) {
      prod *= h(i + 1, i);
      pk -= ps[i].scaled(h(i, k) * prod);
    }
    ps.push_back(pk);
  }
  return ps[n];
}

}  // namespace u2split

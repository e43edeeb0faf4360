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

#ifndef U2SPLIT_MATRIX_HPP
#define U2SPLIT_MATRIX_HPP

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "u2split/field.hpp"
#include "u2split/poly.hpp"

namespace u2split {

using Vec = std::vector<Scalar>;

Vec zero_vec(const Field& f, std::size_t n);
Vec unit_vec(const Field& f, std::size_t n, std::size_t i);
bool is_zero_vec(const Vec& v);
Scalar dot(const Vec& a, const Vec& b);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Vec& a, const Scalar& c);

/// Dense row-major matrix over a Field.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(Field f, std::size_t rows, std::size_t cols);
  static Matrix identity(Field f, std::size_t n);
  static Matrix from_ints(Field f, std::initializer_list<std::initializer_list<long long>> rows);
  static Matrix from_columns(Field f, std::size_t rows, const std::vector<Vec>& cols);
  static Matrix diag(Field f, const std::vector<Scalar>& d);
  static Matrix block_diag(const Matrix& a, const Matrix& b);
  static Matrix hstack(const Matrix& a, const Matrix& b);
  static Matrix vstack(const Matrix& a, const Matrix& b);

  const Field& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  Vec column(std::size_t j) const;
  Vec row(std::size_t i) const;
  void set_column(std::size_t j, const Vec& v);
  std::vector<Vec> columns() const;

  Matrix transpose() const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b);
  Matrix scaled(const Scalar& c) const;

  bool is_zero() const;
  bool is_identity() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vec operator*(const Matrix& a, const Vec& x);
  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }
  Matrix operator-() const { return scaled(-field_.one()); }

  std::string str() const;

 private:
  Field field_;
  std::size_t rows_, cols_;
  std::vector<Scalar> a_;
};

Matrix pow(const Matrix& a, unsigned e);
/// Throws NotInvertible.
Matrix inverse(const Matrix& a);
Scalar det(const Matrix& a);
std::size_t rank(const Matrix& a);
bool is_invertible(const Matrix& a);

struct Rref {
  Matrix r;
  std::vector<std::size_t> pivots;
};
Rref rref(const Matrix& a);

/// Basis of {x : a x = 0} as columns.
Matrix nullspace(const Matrix& a);
/// Some x with a x = b, if any.
std::optional<Vec> solve(const Matrix& a, const Vec& b);

/// x^T g y
Scalar bilinear(const Vec& x, const Matrix& g, const Vec& y);

/// f(a)
Matrix poly_eval(const Poly& f, const Matrix& a);
/// f(a) x, by Horner on vectors.
Vec poly_apply(const Poly& f, const Matrix& a, const Vec& x);
/// Companion matrix of a monic polynomial: e_i -> e_{i+1}, e_n -> -sum c_j e_{j+1}.
Matrix companion(const Poly& p);
/// Characteristic polynomial det(tI - a) via Hessenberg reduction.
Poly char_poly(const Matrix& a);

}  // namespace u2split

#endif

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

#ifndef U2SPLIT_LINAL_HPP
#define U2SPLIT_LINAL_HPP

#include <map>
#include <utility>
#include <vector>

#include "u2split/matrix.hpp"

namespace u2split {

/// A subspace of F^n kept as the reduced row echelon form of a spanning
/// set of row vectors, so that equality is syntactic.
class Subspace {
 public:
  Subspace(Field f, std::size_t ambient);
  static Subspace span(const Matrix& columns);
  static Subspace span(Field f, std::size_t ambient, const std::vector<Vec>& vectors);
  static Subspace full(Field f, std::size_t ambient);

  const Field& field() const noexcept { return rows_.field(); }
  std::size_t ambient() const noexcept { return rows_.cols(); }
  std::size_t dim() const noexcept { return rows_.rows(); }
  /// Canonical basis as columns (ambient x dim).
  Matrix basis() const { return rows_.transpose(); }
  std::vector<Vec> vectors() const;

  bool contains(const Vec& v) const;
  bool contains(const Subspace& w) const;
  Subspace operator+(const Subspace& o) const;
  Subspace intersect(const Subspace& o) const;
  bool stable_under(const Matrix& a) const;
  /// a(W)
  Subspace mapped(const Matrix& a) const;

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.rows_ == b.rows_; }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  explicit Subspace(Matrix canonical_rows) : rows_(std::move(canonical_rows)) {}
  static Subspace from_rows(const Matrix& rows);
  Matrix rows_;
};

Subspace kernel(const Matrix& a);
Subspace image(const Matrix& a);
/// {x : b(w, x) = 0 for all w in W}, with b(x,y) = x^T g y.
Subspace orthogonal(const Subspace& w, const Matrix& g);

/// Complement representatives of W inside U with coordinate extraction.
class Quotient {
 public:
  Quotient(const Subspace& u, const Subspace& w);
  std::size_t dim() const noexcept { return reps_.cols(); }
  /// ambient x dim, chosen greedily from the canonical basis of U.
  const Matrix& reps() const noexcept { return reps_; }
  const Subspace& top() const noexcept { return u_; }
  const Subspace& bottom() const noexcept { return w_; }
  /// Coordinates of the class of x (x must lie in U).
  Vec coords(const Vec& x) const;
  /// Induced endomorphism; NotStable unless a maps U into U and W into W.
  Matrix induced_map(const Matrix& a) const;
  /// reps^T g reps
  Matrix induced_form(const Matrix& g) const;

 private:
  Subspace u_, w_;
  Matrix reps_;
  Matrix left_inverse_;  // (dim + dim W) x ambient, inverse on U
};

/// Monic nonconstant invariant factors d_1 | ... | d_a of tI - a.
std::vector<Poly> invariant_factors(const Matrix& a);

/// Rational canonical data: generators g_i with annihilators d_i and the
/// basis (g_1, a g_1, ..., g_2, ...) in which a is block companion.
struct CyclicDecomposition {
  std::vector<Poly> factors;
  std::vector<Vec> generators;
  Matrix basis;
};
CyclicDecomposition cyclic_decomposition(const Matrix& a);

/// Block-diagonal companion matrix of the given monic polynomials.
Matrix rational_canonical(const Field& f, const std::vector<Poly>& factors);

struct JordanKeyLess {
  bool operator()(const std::pair<Poly, int>& a, const std::pair<Poly, int>& b) const {
    if (a.first != b.first) return poly_less(a.first, b.first);
    return a.second < b.second;
  }
};
/// (p, r) -> n_{p,r}
using JordanData = std::map<std::pair<Poly, int>, int, JordanKeyLess>;

JordanData jordan_from_factors(const std::vector<Poly>& inv_factors);
JordanData jordan_numbers(const Matrix& a);
int jordan_count(const JordanData& j, const Poly& p, int r);
/// Irreducible polynomials occurring as keys, canonical order.
std::vector<Poly> jordan_primes(const JordanData& j);
/// Largest r with n_{p,r} > 0, or 0.
int jordan_max_size(const JordanData& j, const Poly& p);
JordanData jordan_sum(const JordanData& a, const JordanData& b);
std::size_t jordan_dimension(const JordanData& j);

/// Cell counts for the eigenvalue c from the rank sequence of a - c:
/// result[r] = number of cells of size r.
std::map<int, int> eigen_cells(const Matrix& a, const Scalar& c);

/// Ker f(a)^0, ..., Ker f(a)^kmax.
std::vector<Subspace> poly_kernel_chain(const Matrix& a, const Poly& f, int kmax);

struct FittingSplit {
  Subspace co, nil;
};
FittingSplit fitting_split(const Matrix& a);

/// Invertible g with g a g^{-1} = b; NotSimilar otherwise.
Matrix similarity_transform(const Matrix& a, const Matrix& b);

}  // namespace u2split

#endif

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

#ifndef U2SPLIT_FORMS_HPP
#define U2SPLIT_FORMS_HPP

#include <optional>
#include <utility>
#include <vector>

#include "u2split/linal.hpp"
#include "u2split/tower.hpp"

namespace u2split {

enum class FormKind { symmetric, skewsymmetric };

const char* kind_name(FormKind k);

/// A bilinear form b(x,y) = x^T G y, symmetric or alternating.
class BilForm {
 public:
  /// KindMismatch if gram violates the declared symmetry.
  BilForm(Matrix gram, FormKind kind);
  static BilForm symmetric(Matrix gram) { return BilForm(std::move(gram), FormKind::symmetric); }
  static BilForm skew(Matrix gram) { return BilForm(std::move(gram), FormKind::skewsymmetric); }
  static BilForm zero(Field f, FormKind kind = FormKind::symmetric) { return BilForm(Matrix(f, 0, 0), kind); }

  const Matrix& gram() const noexcept { return gram_; }
  FormKind kind() const noexcept { return kind_; }
  std::size_t dim() const noexcept { return gram_.rows(); }
  const Field& field() const noexcept { return gram_.field(); }

  Scalar operator()(const Vec& x, const Vec& y) const { return bilinear(x, gram_, y); }
  BilForm scaled(const Scalar& c) const { return BilForm(gram_.scaled(c), kind_); }
  BilForm operator-() const { return scaled(-field().one()); }
  /// Restriction to the span of the columns of basis.
  BilForm restricted(const Matrix& basis) const { return BilForm(basis.transpose() * gram_ * basis, kind_); }

 private:
  Matrix gram_;
  FormKind kind_;
};

BilForm orthogonal_sum(const BilForm& a, const BilForm& b);

struct FormCheck {
  bool regular;
  Subspace radical;
};
FormCheck validate_form(const BilForm& f);
bool is_regular(const BilForm& f);

/// u* = G^{-1} u^T G.
Matrix adjoint(const Matrix& u, const BilForm& f);

/// basis^T G basis = diag(values); works for degenerate forms too.
struct Diagonalization {
  Matrix basis;
  std::vector<Scalar> values;
};
Diagonalization diagonalize(const BilForm& f);

struct WittDecomposition {
  int index = 0;
  std::vector<std::pair<Vec, Vec>> hyperbolic;  // b(e,f) = 1, b(e,e) = b(f,f) = 0
  Matrix anisotropic_basis;
  BilForm anisotropic;
};
WittDecomposition witt_decompose(const BilForm& f);
int witt_index(const BilForm& f);
/// The closed form via rank and discriminant.
int witt_index_closed_form(const BilForm& f);

/// (Gram of) an isotropic nonzero vector, if any (regular symmetric forms over F_p).
std::optional<Vec> isotropic_vector(const BilForm& f);

Scalar discriminant(const BilForm& f);

/// Same rank and discriminant class. With witness, P^T G_g P = G_f.
bool form_equivalent(const BilForm& f, const BilForm& g, Matrix* witness = nullptr);
bool is_hyperbolic(const BilForm& f);
/// nu(B') + nu(B' + B) >= rk B'
bool witt_simplifies(const BilForm& b, const BilForm& b_prime);
/// Anisotropic part, canonicalized to diag(1,..,1,d) form of rank <= 2.
BilForm anisotropic_part(const BilForm& f);
/// Basis C with C^T G C = diag(1,...,1,d), d in {1, least non-residue}.
Matrix canonical_basis(const BilForm& f);
/// Diagonal square-class representatives (1 or the least non-residue).
std::vector<Scalar> square_class_tuple(const BilForm& f);

enum class HermFlavor { hermitian, skew_hermitian };
const char* flavor_name(HermFlavor f);

/// (Skew-)hermitian form over L with Gram entries in L.
class HermForm {
 public:
  HermForm(TowerPtr tower, std::size_t n, std::vector<Poly> gram, HermFlavor flavor);
  const TowerPtr& tower() const noexcept { return tower_; }
  std::size_t dim() const noexcept { return n_; }
  HermFlavor flavor() const noexcept { return flavor_; }
  const Poly& entry(std::size_t i, std::size_t j) const { return gram_[i * n_ + j]; }
  const std::vector<Poly>& gram() const noexcept { return gram_; }

 private:
  TowerPtr tower_;
  std::size_t n_;
  std::vector<Poly> gram_;
  HermFlavor flavor_;
};

/// Rank of the Gram over L.
std::size_t herm_rank(const HermForm& h);
bool herm_is_regular(const HermForm& h);
/// Over a finite field: regular and of even rank.
bool herm_is_hyperbolic(const HermForm& h);
/// The hermitian form eta * h for a skew-hermitian h (identity otherwise).
HermForm herm_normalized(const HermForm& h);

}  // namespace u2split

#endif

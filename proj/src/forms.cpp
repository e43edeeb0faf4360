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

#include "u2split/forms.hpp"

#include "u2split/error.hpp"

namespace u2split {

const char* kind_name(FormKind k) { return k == FormKind::symmetric ? "symmetric" : "skewsymmetric"; }

const char* flavor_name(HermFlavor f) { return f == HermFlavor::hermitian ? "hermitian" : "skew_hermitian"; }

BilForm::BilForm(Matrix gram, FormKind kind) : gram_(std::move(gram)), kind_(kind) {
  if (!gram_.is_square()) fail(ErrorCode::DimensionMismatch, "gram matrix must be square");
  const std::size_t n = gram_.rows();
  for (std::size_t i = 0; i < n; ++i) {
    if (kind_ == FormKind::skewsymmetric && !gram_(i, i).is_zero())
      fail(ErrorCode::KindMismatch, "skewsymmetric gram has a nonzero diagonal entry");
    for (std::size_t j = i + 1; j < n; ++j) {
      bool ok = kind_ == FormKind::symmetric ? gram_(i, j) == gram_(j, i) : gram_(i, j) == -gram_(j, i);
      if (!ok) fail(ErrorCode::KindMismatch, std::string("gram is not ") + kind_name(kind_));
    }
  }
}

BilForm orthogonal_sum(const BilForm& a, const BilForm& b) {
  if (a.kind() != b.kind()) fail(ErrorCode::KindMismatch, "orthogonal sum of forms of different kinds");
  if (a.field() != b.field()) fail(ErrorCode::FieldMismatch, "orthogonal sum over different fields");
  return BilForm(Matrix::block_diag(a.gram(), b.gram()), a.kind());
}

FormCheck validate_form(const BilForm& f) {
  Subspace rad = kernel(f.gram());
  return {rad.dim() == 0, rad};
}

bool is_regular(const BilForm& f) { return is_invertible(f.gram()); }

Matrix adjoint(const Matrix& u, const BilForm& f) {
  if (u.rows() != f.dim() || u.cols() != f.dim()) fail(ErrorCode::DimensionMismatch, "adjoint: size mismatch");
  if (!is_regular(f)) fail(ErrorCode::DegenerateForm, "adjoint needs a regular form");
  return inverse(f.gram()) * u.transpose() * f.gram();
}

namespace {

void require_symmetric(const BilForm& f) {
  if (f.kind() != FormKind::symmetric) fail(ErrorCode::WrongKind, "operation needs a symmetric form");
}

void require_finite_regular_symmetric(const BilForm& f) {
  require_symmetric(f);
  if (!f.field().is_prime()) fail(ErrorCode::UnsupportedField, "Witt theory is implemented over F_p only");
  if (!is_regular(f)) fail(ErrorCode::DegenerateForm, "form is degenerate");
}

// Columns of w whose span is the b-orthogonal of the columns of x inside span(w).
Matrix complement_in(const Matrix& g, const Matrix& w, const Matrix& x) {
  Matrix c = nullspace(x.transpose() * g * w);
  return w * c;
}

// Some (x, y) with a x^2 + b y^2 = c, a, b, c nonzero in F_p.
std::pair<Scalar, Scalar> solve_conic(const Field& f, const Scalar& a, const Scalar& b, const Scalar& c) {
  for (std::uint32_t i = 0; i < f.modulus(); ++i) {
    Scalar x = f.from_int(i);
    Scalar rem = (c - a * x * x) / b;
    if (f.is_square(rem)) return {x, f.sqrt(rem)};
  }
  fail(ErrorCode::VerificationFailed, "conic without points");
}

Matrix symplectic_basis(const BilForm& f) {
  const Field& F = f.field();
  const Matrix& g = f.gram();
  std::size_t n = f.dim();
  Matrix w = Matrix::identity(F, n);
  std::vector<Vec> es, fs;
  while (w.cols() > 0) {
    Vec e = w.column(0);
    std::optional<Vec> partner;
    for (std::size_t j = 1; j < w.cols() && !partner; ++j) {
      Scalar v = bilinear(e, g, w.column(j));
      if (!v.is_zero()) partner = scale(w.column(j), v.inv());
    }
    if (!partner) fail(ErrorCode::DegenerateForm, "alternating form is degenerate");
    es.push_back(e);
    fs.push_back(*partner);
    w = complement_in(g, w, Matrix::from_columns(F, n, {e, *partner}));
  }
  std::vector<Vec> cols = es;
  cols.insert(cols.end(), fs.begin(), fs.end());
  return Matrix::from_columns(F, n, cols);
}

}  // namespace

Diagonalization diagonalize(const BilForm& f) {
  require_symmetric(f);
  const Field& F = f.field();
  const Matrix& g = f.gram();
  const std::size_t n = f.dim();
  Matrix w = Matrix::identity(F, n);
  std::vector<Vec> cols;
  std::vector<Scalar> values;
  while (w.cols() > 0) {
    std::optional<Vec> pick;
    for (std::size_t j = 0; j < w.cols() && !pick; ++j) {
      Vec c = w.column(j);
      if (!bilinear(c, g, c).is_zero()) pick = c;
    }
    for (std::size_t i = 0; i < w.cols() && !pick; ++i)
      for (std::size_t j = i + 1; j < w.cols() && !pick; ++j)
        if (!bilinear(w.column(i), g, w.column(j)).is_zero()) pick = add(w.column(i), w.column(j));
    if (!pick) {
      for (std::size_t j = 0; j < w.cols(); ++j) {
        cols.push_back(w.column(j));
        values.push_back(F.zero());
      }
      break;
    }
    cols.push_back(*pick);
    values.push_back(bilinear(*pick, g, *pick));
    w = complement_in(g, w, Matrix::from_columns(F, n, {*pick}));
  }
  return {Matrix::from_columns(F, n, cols), values};
}

Scalar discriminant(const BilForm& f) { return det(f.gram()); }

std::optional<Vec> isotropic_vector(const BilForm& f) {
  require_finite_regular_symmetric(f);
  const Field& F = f.field();
  Diagonalization d = diagonalize(f);
  const auto& a = d.values;
  const std::size_t n = f.dim();
  Vec z = zero_vec(F, n);
  if (n >= 3) {
    auto [x, y] = solve_conic(F, a[0], a[1], -a[2]);
    z[0] = x;
    z[1] = y;
    z[2] = F.one();
  } else if (n == 2 && F.is_square(-a[1] / a[0])) {
    z[0] = F.sqrt(-a[1] / a[0]);
    z[1] = F.one();
  } else {
    return std::nullopt;
  }
  return d.basis * z;
}

WittDecomposition witt_decompose(const BilForm& f) {
  require_finite_regular_symmetric(f);
  const Field& F = f.field();
  const Matrix& g = f.gram();
  const std::size_t n = f.dim();
  WittDecomposition out{0, {}, Matrix(F, n, 0), BilForm::zero(F)};
  Matrix w = Matrix::identity(F, n);
  for (;;) {
    BilForm cur = f.restricted(w);
    std::optional<Vec> iso = cur.dim() ? isotropic_vector(cur) : std::nullopt;
    if (!iso) {
      out.anisotropic_basis = w;
      out.anisotropic = cur;
      break;
    }
    Vec x = w * *iso;
    Vec y;
    for (std::size_t j = 0; j < w.cols(); ++j) {
      Scalar v = bilinear(x, g, w.column(j));
      if (!v.is_zero()) {
        y = scale(w.column(j), v.inv());
        break;
      }
    }
    y = sub(y, scale(x, bilinear(y, g, y) / F.from_int(2)));
    out.hyperbolic.emplace_back(x, y);
    ++out.index;
    w = complement_in(g, w, Matrix::from_columns(F, n, {x, y}));
  }
  return out;
}

int witt_index(const BilForm& f) { return witt_decompose(f).index; }

int witt_index_closed_form(const BilForm& f) {
  require_finite_regular_symmetric(f);
  const int r = static_cast<int>(f.dim());
  if (r % 2) return (r - 1) / 2;
  Scalar s = discriminant(f);
  if ((r / 2) % 2) s = -s;
  return f.field().is_square(s) ? r / 2 : r / 2 - 1;
}

Matrix canonical_basis(const BilForm& f) {
  if (f.kind() == FormKind::skewsymmetric) return symplectic_basis(f);
  require_finite_regular_symmetric(f);
  const Field& F = f.field();
  const std::size_t n = f.dim();
  Diagonalization d = diagonalize(f);
  if (n == 0) return d.basis;
  std::vector<Vec> cols = d.basis.columns();
  // Fold entries pairwise: (c, a) -> (1, c a).
  Vec cur = cols[0];
  Scalar c = d.values[0];
  for (std::size_t i = 1; i < n; ++i) {
    const Scalar& a = d.values[i];
    auto [x, y] = solve_conic(F, c, a, F.one());
    Vec v = add(scale(cur, x), scale(cols[i], y));
    Vec w = sub(scale(cols[i], c * x), scale(cur, a * y));
    cols[i - 1] = v;
    cur = w;
    c = c * a;
  }
  Scalar target = F.is_square(c) ? F.one() : F.nonresidue();
  cols[n - 1] = scale(cur, F.sqrt(target / c));
  return Matrix::from_columns(F, n, cols);
}

bool form_equivalent(const BilForm& f, const BilForm& g, Matrix* witness) {
  if (f.kind() != g.kind()) return false;
  if (f.field() != g.field()) fail(ErrorCode::FieldMismatch, "forms over different fields");
  if (f.kind() == FormKind::symmetric) {
    require_finite_regular_symmetric(f);
    require_finite_regular_symmetric(g);
  } else if (!is_regular(f) || !is_regular(g)) {
    fail(ErrorCode::DegenerateForm, "form is degenerate");
  }
  if (f.dim() != g.dim()) return false;
  if (f.kind() == FormKind::symmetric && f.dim() > 0 &&
      f.field().is_square(discriminant(f)) != f.field().is_square(discriminant(g)))
    return false;
  if (witness) {
    Matrix p = canonical_basis(g) * inverse(canonical_basis(f));
    if (p.transpose() * g.gram() * p != f.gram())
      fail(ErrorCode::VerificationFailed, "equivalence witness failed to verify");
    *witness = p;
  }
  return true;
}

bool is_hyperbolic(const BilForm& f) {
  require_finite_regular_symmetric(f);
  return f.dim() % 2 == 0 && witt_index(f) == static_cast<int>(f.dim() / 2);
}

bool witt_simplifies(const BilForm& b, const BilForm& b_prime) {
  return witt_index(b_prime) + witt_index(orthogonal_sum(b_prime, b)) >= static_cast<int>(b_prime.dim());
}

BilForm anisotropic_part(const BilForm& f) {
  BilForm a = witt_decompose(f).anisotropic;
  if (a.dim() == 0) return a;
  return a.restricted(canonical_basis(a));
}

std::vector<Scalar> square_class_tuple(const BilForm& f) {
  require_symmetric(f);
  const Field& F = f.field();
  std::vector<Scalar> out;
  for (const Scalar& v : diagonalize(f).values) {
    if (v.is_zero()) out.push_back(v);
    else out.push_back(F.is_square(v) ? F.one() : F.nonresidue());
  }
  return out;
}

HermForm::HermForm(TowerPtr tower, std::size_t n, std::vector<Poly> gram, HermFlavor flavor)
    : tower_(std::move(tower)), n_(n), gram_(std::move(gram)), flavor_(flavor) {
  if (gram_.size() != n_ * n_) fail(ErrorCode::DimensionMismatch, "hermitian gram has wrong size");
  for (auto& e : gram_) e = tower_->reduce(e);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i; j < n_; ++j) {
      Poly c = tower_->conj(entry(i, j));
      if (flavor_ == HermFlavor::skew_hermitian) c = c.scaled(-tower_->field().one());
      if (entry(j, i) != c) fail(ErrorCode::KindMismatch, std::string("gram is not ") + flavor_name(flavor_));
    }
}

std::size_t herm_rank(const HermForm& h) {
  const Tower& L = *h.tower();
  const std::size_t n = h.dim();
  std::vector<Poly> a = h.gram();
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < n; ++col) {
    std::size_t piv = r;
    while (piv < n && a[piv * n + col].degree() < 0) ++piv;
    if (piv == n) continue;
    for (std::size_t k = 0; k < n; ++k) std::swap(a[r * n + k], a[piv * n + k]);
    Poly inv = L.inv(a[r * n + col]);
    for (std::size_t i = r + 1; i < n; ++i) {
      if (a[i * n + col].degree() < 0) continue;
      Poly q = L.mul(a[i * n + col], inv);
      for (std::size_t k = col; k < n; ++k) a[i * n + k] = L.reduce(a[i * n + k] - L.mul(q, a[r * n + k]));
    }
    ++r;
  }
  return r;
}

bool herm_is_regular(const HermForm& h) { return herm_rank(h) == h.dim(); }

HermForm herm_normalized(const HermForm& h) {
  if (h.flavor() == HermFlavor::hermitian) return h;
  std::vector<Poly> g;
  for (const Poly& e : h.gram()) g.push_back(h.tower()->mul(h.tower()->eta(), e));
  return HermForm(h.tower(), h.dim(), g, HermFlavor::hermitian);
}

bool herm_is_hyperbolic(const HermForm& h) {
  if (!h.tower()->field().is_prime()) fail(ErrorCode::UnsupportedField, "hermitian classification needs F_p");
  HermForm n = herm_normalized(h);
  if (!herm_is_regular(n)) fail(ErrorCode::DegenerateForm, "hermitian form is degenerate");
  return n.dim() % 2 == 0;
}

}  // namespace u2split

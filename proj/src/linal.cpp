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

#include "u2split/linal.hpp"

#include <algorithm>

namespace u2split {

// ---------------------------------------------------------------- Subspace

Subspace::Subspace(Field f, std::size_t ambient) : rows_(f, 0, ambient) {}

Subspace Subspace::from_rows(const Matrix& rows) {
  Rref r = rref(rows);
  return Subspace(r.r.block(0, 0, r.pivots.size(), rows.cols()));
}

Subspace Subspace::span(const Matrix& columns) { return from_rows(columns.transpose()); }

Subspace Subspace::span(Field f, std::size_t ambient, const std::vector<Vec>& vectors) {
  Matrix rows(f, vectors.size(), ambient);
  for (std::size_t i = 0; i < vectors.size(); ++i)
    for (std::size_t j = 0; j < ambient; ++j) rows(i, j) = vectors[i][j];
  return from_rows(rows);
}

Subspace Subspace::full(Field f, std::size_t ambient) { return Subspace(Matrix::identity(f, ambient)); }

std::vector<Vec> Subspace::vectors() const {
  std::vector<Vec> v;
  for (std::size_t i = 0; i < rows_.rows(); ++i) v.push_back(rows_.row(i));
  return v;
}

bool Subspace::contains(const Vec& v) const {
  if (v.size() != ambient()) fail(ErrorCode::DimensionMismatch, "Subspace::contains");
  Vec x = v;
  for (std::size_t k = 0; k < rows_.rows(); ++k) {
    std::size_t p = 0;
    while (rows_(k, p).is_zero()) ++p;
    if (x[p].is_zero()) continue;
    Scalar c = x[p];
    for (std::size_t j = p; j < ambient(); ++j) x[j] -= c * rows_(k, j);
  }
  return is_zero_vec(x);
}

bool Subspace::contains(const Subspace& w) const {
  for (std::size_t i = 0; i < w.rows_.rows(); ++i)
    if (!contains(w.rows_.row(i))) return false;
  return true;
}

Subspace Subspace::operator+(const Subspace& o) const { return from_rows(Matrix::vstack(rows_, o.rows_)); }

Subspace Subspace::intersect(const Subspace& o) const {
  // x = A c = B d  <=>  [A | -B] (c, d) = 0
  Matrix a = basis(), b = o.basis();
  if (a.cols() == 0 || b.cols() == 0) return Subspace(field(), ambient());
  Matrix ns = nullspace(Matrix::hstack(a, -b));
  std::vector<Vec> vs;
  for (std::size_t j = 0; j < ns.cols(); ++j) vs.push_back(a * ns.block(0, j, a.cols(), 1).column(0));
  return span(field(), ambient(), vs);
}

bool Subspace::stable_under(const Matrix& a) const {
  for (std::size_t i = 0; i < rows_.rows(); ++i)
    if (!contains(a * rows_.row(i))) return false;
  return true;
}

Subspace Subspace::mapped(const Matrix& a) const {
  std::vector<Vec> vs;
  for (std::size_t i = 0; i < rows_.rows(); ++i) vs.push_back(a * rows_.row(i));
  return span(field(), a.rows(), vs);
}

Subspace kernel(const Matrix& a) { return Subspace::span(nullspace(a)); }
Subspace image(const Matrix& a) { return Subspace::span(a); }

Subspace orthogonal(const Subspace& w, const Matrix& g) {
  if (w.dim() == 0) return Subspace::full(w.field(), w.ambient());
  return kernel(w.basis().transpose() * g);
}

// ---------------------------------------------------------------- Quotient

Quotient::Quotient(const Subspace& u, const Subspace& w) : u_(u), w_(w), reps_(u.field(), u.ambient(), 0), left_inverse_(u.field(), 0, u.ambient()) {
  if (!u.contains(w)) fail(ErrorCode::NotStable, "quotient: W is not contained in U");
  const Field& f = u.field();
  std::size_t n = u.ambient();
  std::vector<Vec> reps;
  Subspace acc = w;
  for (const Vec& v : u.vectors()) {
    if (acc.contains(v)) continue;
    reps.push_back(v);
    acc = acc + Subspace::span(f, n, {v});
  }
  reps_ = Matrix::from_columns(f, n, reps);
  Matrix m = Matrix::hstack(reps_, w.basis());
  std::size_t k = m.cols();
  if (k == 0) return;
  Rref r = rref(m.transpose());
  Matrix sel(f, k, n), ms(f, k, k);
  for (std::size_t i = 0; i < k; ++i) {
    sel(i, r.pivots[i]) = f.one();
    for (std::size_t j = 0; j < k; ++j) ms(i, j) = m(r.pivots[i], j);
  }
  left_inverse_ = inverse(ms) * sel;
}

Vec Quotient::coords(const Vec& x) const {
  if (!u_.contains(x)) fail(ErrorCode::NotStable, "quotient: vector outside U");
  if (left_inverse_.rows() == 0) return {};
  Vec c = left_inverse_ * x;
  c.resize(dim());
  return c;
}

Matrix Quotient::induced_map(const Matrix& a) const {
  if (!u_.stable_under(a) || !w_.stable_under(a)) fail(ErrorCode::NotStable, "induced map");
  Matrix m(u_.field(), dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j) {
    Vec c = coords(a * reps_.column(j));
    for (std::size_t i = 0; i < dim(); ++i) m(i, j) = c[i];
  }
  return m;
}

Matrix Quotient::induced_form(const Matrix& g) const { return reps_.transpose() * g * reps_; }

// ---------------------------------------------------------------- Smith form

namespace {

using PolyMatrix = std::vector<std::vector<Poly>>;

struct SmithData {
  std::vector<Poly> diag;
  PolyMatrix uinv;  // tI - A = Uinv * D * V^{-1}
};

SmithData smith_char(const Matrix& a) {
  if (!a.is_square()) fail(ErrorCode::NonSquare, "invariant factors");
  const Field& f = a.field();
  std::size_t n = a.rows();
  PolyMatrix m(n, std::vector<Poly>(n, Poly(f)));
  PolyMatrix uinv(n, std::vector<Poly>(n, Poly(f)));
  for (std::size_t i = 0; i < n; ++i) {
    uinv[i][i] = Poly::constant(f, f.one());
    for (std::size_t j = 0; j < n; ++j) m[i][j] = Poly::constant(f, -a(i, j));
    m[i][i] += Poly::monomial(f, 1);
  }
  auto swap_rows = [&](std::size_t i, std::size_t j) {
    std::swap(m[i], m[j]);
    for (std::size_t r = 0; r < n; ++r) std::swap(uinv[r][i], uinv[r][j]);
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    for (std::size_t r = 0; r < n; ++r) std::swap(m[r][i], m[r][j]);
  };
  // row_i -= q row_k
  auto row_sub = [&](std::size_t i, std::size_t k, const Poly& q) {
    for (std::size_t j = 0; j < n; ++j)
      if (!m[k][j].is_zero()) m[i][j] -= q * m[k][j];
    for (std::size_t r = 0; r < n; ++r)
      if (!uinv[r][i].is_zero()) uinv[r][k] += q * uinv[r][i];
  };
  for (std::size_t k = 0; k < n; ++k) {
    for (;;) {
      std::size_t bi = n, bj = n;
      for (std::size_t i = k; i < n; ++i)
        for (std::size_t j = k; j < n; ++j)
          if (!m[i][j].is_zero() && (bi == n || m[i][j].degree() < m[bi][bj].degree())) {
            bi = i;
            bj = j;
          }
      if (bi == n) break;
      if (bi != k) swap_rows(bi, k);
      if (bj != k) swap_cols(bj, k);
      bool clean = true;
      for (std::size_t i = k + 1; i < n; ++i) {
        if (m[i][k].is_zero()) continue;
        DivMod qr = divmod(m[i][k], m[k][k]);
        row_sub(i, k, qr.quot);
        if (!qr.rem.is_zero()) clean = false;
      }
      for (std::size_t j = k + 1; j < n; ++j) {
        if (m[k][j].is_zero()) continue;
        DivMod qr = divmod(m[k][j], m[k][k]);
        for (std::size_t r = 0; r < n; ++r)
          if (!m[r][k].is_zero()) m[r][j] -= qr.quot * m[r][k];
        if (!qr.rem.is_zero()) clean = false;
      }
      if (!clean) continue;
      std::size_t bad = n;
      for (std::size_t i = k + 1; i < n && bad == n; ++i)
        for (std::size_t j = k + 1; j < n; ++j)
          if (!(m[i][j] % m[k][k]).is_zero()) {
            bad = i;
            break;
          }
      if (bad == n) break;
      // row_k += row_bad
      row_sub(k, bad, Poly::constant(f, -f.one()));
    }
  }
  SmithData out;
  out.diag.resize(n, Poly(f));
  for (std::size_t k = 0; k < n; ++k) {
    Scalar c = m[k][k].lead();
    out.diag[k] = m[k][k].monic();
    for (std::size_t r = 0; r < n; ++r) uinv[r][k] = uinv[r][k].scaled(c);
  }
  out.uinv = std::move(uinv);
  return out;
}

}  // namespace

std::vector<Poly> invariant_factors(const Matrix& a) {
  std::vector<Poly> out;
  for (auto& d : smith_char(a).diag)
    if (d.degree() > 0) out.push_back(std::move(d));
  return out;
}

Matrix rational_canonical(const Field& f, const std::vector<Poly>& factors) {
  std::size_t n = 0;
  for (const auto& d : factors) n += static_cast<std::size_t>(d.degree());
  Matrix c(f, n, n);
  std::size_t off = 0;
  for (const auto& d : factors) {
    c.set_block(off, off, companion(d));
    off += static_cast<std::size_t>(d.degree());
  }
  return c;
}

CyclicDecomposition cyclic_decomposition(const Matrix& a) {
  const Field& f = a.field();
  std::size_t n = a.rows();
  SmithData s = smith_char(a);
  CyclicDecomposition out{{}, {}, Matrix(f, n, 0)};
  std::vector<Vec> cols;
  for (std::size_t i = 0; i < n; ++i) {
    if (s.diag[i].degree() <= 0) continue;
    Vec g = zero_vec(f, n);
    for (std::size_t j = 0; j < n; ++j)
      if (!s.uinv[j][i].is_zero()) g = add(g, poly_apply(s.uinv[j][i], a, unit_vec(f, n, j)));
    out.factors.push_back(s.diag[i]);
    out.generators.push_back(g);
    Vec v = g;
    for (int k = 0; k < s.diag[i].degree(); ++k) {
      cols.push_back(v);
      v = a * v;
    }
  }
  out.basis = Matrix::from_columns(f, n, cols);
  if (n > 0 && (!is_invertible(out.basis) || a * out.basis != out.basis * rational_canonical(f, out.factors)))
    fail(ErrorCode::VerificationFailed, "cyclic decomposition did not reproduce the rational canonical form");
  return out;
}

// ---------------------------------------------------------------- Jordan

JordanData jordan_from_factors(const std::vector<Poly>& inv_factors) {
  JordanData j;
  for (const auto& d : inv_factors)
    for (const auto& fac : factorize(d)) ++j[{fac.p, fac.mult}];
  return j;
}

JordanData jordan_numbers(const Matrix& a) { return jordan_from_factors(invariant_factors(a)); }

int jordan_count(const JordanData& j, const Poly& p, int r) {
  auto it = j.find({p, r});
  return it == j.end() ? 0 : it->second;
}

std::vector<Poly> jordan_primes(const JordanData& j) {
  std::vector<Poly> out;
  for (const auto& [key, n] : j)
    if (out.empty() || out.back() != key.first) out.push_back(key.first);
  return out;
}

int jordan_max_size(const JordanData& j, const Poly& p) {
  int best = 0;
  for (const auto& [key, n] : j)
    if (key.first == p && n > 0) best = std::max(best, key.second);
  return best;
}

JordanData jordan_sum(const JordanData& a, const JordanData& b) {
  JordanData r = a;
  for (const auto& [k, n] : b) r[k] += n;
  return r;
}

std::size_t jordan_dimension(const JordanData& j) {
  std::size_t d = 0;
  for (const auto& [k, n] : j) d += static_cast<std::size_t>(n * k.second * k.first.degree());
  return d;
}

std::map<int, int> eigen_cells(const Matrix& a, const Scalar& c) {
  std::size_t n = a.rows();
  Matrix b = a - Matrix::identity(a.field(), n).scaled(c);
  std::vector<std::size_t> rk{n};
  Matrix pw = Matrix::identity(a.field(), n);
  for (std::size_t k = 1; k <= n + 1; ++k) {
    pw = pw * b;
    rk.push_back(rank(pw));
    if (rk[k] == rk[k - 1]) {
      rk.push_back(rk[k]);
      break;
    }
  }
  std::map<int, int> cells;
  for (std::size_t k = 1; k + 1 < rk.size(); ++k) {
    long cnt = static_cast<long>(rk[k - 1] - rk[k]) - static_cast<long>(rk[k] - rk[k + 1]);
    if (cnt > 0) cells[static_cast<int>(k)] = static_cast<int>(cnt);
  }
  return cells;
}

std::vector<Subspace> poly_kernel_chain(const Matrix& a, const Poly& f, int kmax) {
  Matrix fa = poly_eval(f, a), pw = Matrix::identity(a.field(), a.rows());
  std::vector<Subspace> chain;
  for (int k = 0; k <= kmax; ++k) {
    chain.push_back(kernel(pw));
    pw = pw * fa;
  }
  return chain;
}

FittingSplit fitting_split(const Matrix& a) {
  std::size_t n = a.rows();
  Matrix nn = pow(a - Matrix::identity(a.field(), n), static_cast<unsigned>(n));
  return {image(nn), kernel(nn)};
}

Matrix similarity_transform(const Matrix& a, const Matrix& b) {
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows()) fail(ErrorCode::NotSimilar, "shape mismatch");
  CyclicDecomposition ca = cyclic_decomposition(a), cb = cyclic_decomposition(b);
  if (ca.factors != cb.factors) fail(ErrorCode::NotSimilar, "invariant factors differ");
  if (a.rows() == 0) return a;
  Matrix g = cb.basis * inverse(ca.basis);
  if (g * a != b * g) fail(ErrorCode::VerificationFailed, "similarity transform check");
  return g;
}

}  // namespace u2split

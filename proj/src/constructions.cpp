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

#include <algorithm>
#include <string>

#include "u2split/factor.hpp"

namespace u2split {

bool is_u2(const Matrix& m) {
  if (!m.is_square()) return false;
  Matrix a = m - Matrix::identity(m.field(), m.rows());
  return (a * a).is_zero();
}

Matrix product(const U2Factorization& f) {
  if (f.factors.empty()) fail(ErrorCode::BadParameters, "empty factorization");
  Matrix p = f.factors.front();
  for (std::size_t i = 1; i < f.factors.size(); ++i) p = p * f.factors[i];
  return p;
}

U2Factorization conjugated(const U2Factorization& f, const Matrix& g) {
  Matrix gi = inverse(g);
  U2Factorization out;
  for (const auto& m : f.factors) out.factors.push_back(g * m * gi);
  return out;
}

U2Factorization block_sum(const U2Factorization& a, const U2Factorization& b) {
  if (a.factors.empty()) return b;
  if (b.factors.empty()) return a;
  std::size_t len = std::max(a.factors.size(), b.factors.size());
  std::size_t na = a.factors[0].rows(), nb = b.factors[0].rows();
  const Field& f = a.factors[0].field();
  U2Factorization out;
  for (std::size_t i = 0; i < len; ++i) {
    Matrix x = i < a.factors.size() ? a.factors[i] : Matrix::identity(f, na);
    Matrix y = i < b.factors.size() ? b.factors[i] : Matrix::identity(f, nb);
    out.factors.push_back(Matrix::block_diag(x, y));
  }
  return out;
}

Matrix hyperbolic_gram(const Field& f, std::size_t n, int eps) {
  Matrix g(f, 2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    g(i, n + i) = f.from_int(eps);
    g(n + i, i) = f.one();
  }
  return g;
}

Matrix hyperbolic_map(const Matrix& v) {
  if (!v.is_square()) fail(ErrorCode::DimensionMismatch, "h(v) needs a square matrix");
  return Matrix::block_diag(v, inverse(v).transpose());
}

Isopair hyperbolic_ext(const Matrix& v, int eps) {
  Matrix h = hyperbolic_map(v);
  BilForm b(hyperbolic_gram(v.field(), v.rows(), eps), kind_for_eps(eps));
  return Isopair(eps, std::move(b), std::move(h));
}

BoxedProduct boxed_product(const BilForm& B, const BilForm& C, int eps) {
  FormKind want = eps == 1 ? FormKind::skewsymmetric : FormKind::symmetric;
  if (B.kind() != want || C.kind() != want)
    fail(ErrorCode::KindMismatch, "boxed product needs " + std::string(kind_name(want)) + " forms");
  if (B.dim() != C.dim() || B.field() != C.field())
    fail(ErrorCode::DimensionMismatch, "B and C must live on the same space");
  if (!is_regular(B)) fail(ErrorCode::DegenerateForm, "B must be regular");
  const Field& f = B.field();
  std::size_t n = B.dim();
  Matrix vc(f, 2 * n, 2 * n), wb(f, 2 * n, 2 * n);
  vc.set_block(n, 0, C.gram());
  wb.set_block(0, n, inverse(B.gram()));
  Matrix id = Matrix::identity(f, 2 * n);
  U2Factorization fac{{id + vc, id + wb}};
  Matrix u = product(fac);
  BilForm h(hyperbolic_gram(f, n, eps), kind_for_eps(eps));
  return {Isopair(eps, std::move(h), std::move(u)), std::move(fac)};
}

TwistedModel twisted_model(const Field& f, int k, const Scalar& scale) {
  if (k < 1) fail(ErrorCode::BadParameters, "twisted model needs k >= 1");
  if (!f.is_prime()) fail(ErrorCode::UnsupportedField, "twisted model is built over F_p");
  if (scale.is_zero()) fail(ErrorCode::BadParameters, "scale must be nonzero");
  std::size_t m = 2 * static_cast<std::size_t>(k);
  // e_i -> index i-1, f_i -> index m+i-1 (1-based i)
  auto e = [](std::size_t i) { return i - 1; };
  auto fi = [m](std::size_t i) { return m + i - 1; };
  Matrix a1(f, 2 * m, 2 * m), a2(f, 2 * m, 2 * m);
  Scalar one = f.one(), mone = -f.one();
  for (std::size_t i = 1; i <= static_cast<std::size_t>(k); ++i) {
    a1(e(2 * i - 1), e(2 * i)) = one;
    a1(fi(2 * i), fi(2 * i - 1)) = mone;
  }
  for (std::size_t i = 1; i < static_cast<std::size_t>(k); ++i) {
    a2(e(2 * i), e(2 * i + 1)) = one;
    a2(fi(2 * i + 1), fi(2 * i)) = mone;
  }
  a2(e(m), fi(1)) = one;
  a2(e(1), fi(m)) = mone;
  Matrix id = Matrix::identity(f, 2 * m);
  U2Factorization fac{{id + a1, id + a2}};
  Matrix g = hyperbolic_gram(f, m, 1).scaled(scale);
  Isopair p(1, BilForm(std::move(g), FormKind::symmetric), product(fac));
  return {std::move(p), std::move(fac)};
}

Matrix u_adapted(const Matrix& v, const Poly& p) {
  CyclicDecomposition cd = cyclic_decomposition(v);
  if (cd.factors.size() != 1) fail(ErrorCode::NotCyclic, "u_adapted needs a cyclic endomorphism");
  const Poly& q = cd.factors[0];
  std::size_t n = v.rows();
  if (p.degree() != static_cast<int>(n) || !p.is_monic())
    fail(ErrorCode::BadParameters, "p must be monic of degree " + std::to_string(n));
  if (p.coeff(0) != q.coeff(0)) fail(ErrorCode::DeterminantMismatch, "p(0) must equal q(0)");
  Matrix local = companion(q) * inverse(companion(p));
  Matrix u1 = cd.basis * local * inverse(cd.basis);
  if (!is_u2(u1)) fail(ErrorCode::VerificationFailed, "u_adapted: u1 is not U_2");
  auto rest = invariant_factors(inverse(u1) * v);
  if (rest.size() != 1 || rest[0] != p) fail(ErrorCode::VerificationFailed, "u_adapted: wrong minimal polynomial");
  return u1;
}

}  // namespace u2split

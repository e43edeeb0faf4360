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

#include <string>

#include "u2split/factor.hpp"

namespace u2split {

namespace {

bool is_minus_one(const Poly& p) { return p.degree() == 1 && p.coeff(0).is_one(); }
bool is_plus_one(const Poly& p) { return p.degree() == 1 && p.coeff(0) == -p.field().one(); }

// a1 sends e_{2i} to e_{2i-1}, a2 sends e_{2i+1} to e_{2i} (1-based).
U2Factorization shift_model(const Field& f, std::size_t r) {
  Matrix a1(f, r, r), a2(f, r, r);
  for (std::size_t j = 2; j <= r; ++j) {
    Matrix& a = j % 2 == 0 ? a1 : a2;
    a(j - 2, j - 1) = f.one();
  }
  Matrix id = Matrix::identity(f, r);
  return {{id + a1, id + a2}};
}

// (I + [[0, A0], [0, 0]])(I + [[0, 0], [I, 0]]) with A0 + 2I = companion(m).
U2Factorization block_model(const Poly& m) {
  const Field& f = m.field();
  std::size_t n = static_cast<std::size_t>(m.degree());
  Matrix a0 = companion(m) - Matrix::identity(f, n).scaled(f.from_int(2));
  Matrix x(f, 2 * n, 2 * n), y(f, 2 * n, 2 * n);
  x.set_block(0, n, a0);
  y.set_block(n, 0, Matrix::identity(f, n));
  Matrix id = Matrix::identity(f, 2 * n);
  return {{id + x, id + y}};
}

}  // namespace

Verdict gl_decide(const Matrix& a) {
  if (!is_invertible(a)) fail(ErrorCode::NotInvertible, "gl_decide needs an invertible matrix");
  Verdict v;
  JordanData j = jordan_numbers(a);
  bool similar = true, odd_minus = false;
  for (const auto& [key, n] : j) {
    const Poly& p = key.first;
    if (jordan_count(j, reciprocal(p), key.second) != n) similar = false;
    if (is_minus_one(p) && key.second % 2 == 1 && n > 0) odd_minus = true;
  }
  if (!similar) v.details.push_back("not similar to its inverse");
  if (odd_minus) v.details.push_back("Jordan cell of odd size for the eigenvalue -1");
  v.splittable = similar && !odd_minus;
  if (!v.splittable) v.failed.push_back("(ii)");
  return v;
}

U2Factorization gl_factor(const Matrix& a) {
  if (!gl_decide(a).splittable) fail(ErrorCode::NotSplittable, "matrix is not a product of two U_2 elements");
  const Field& f = a.field();
  JordanData j = jordan_numbers(a);
  U2Factorization model;
  for (const auto& [key, n] : j) {
    const Poly& p = key.first;
    int r = key.second;
    for (int c = 0; c < n; ++c) {
      if (is_plus_one(p)) {
        model = block_sum(model, shift_model(f, static_cast<std::size_t>(r)));
      } else if (is_minus_one(p)) {
        model = block_sum(model, block_model(pow(Poly::from_ints(f, {2, 1}), static_cast<unsigned>(r / 2))));
      } else if (reciprocal(p) == p) {
        model = block_sum(model, block_model(pow(r_inverse(p), static_cast<unsigned>(r))));
      } else if (poly_less(p, reciprocal(p))) {
        // one cell of p^r together with one of p#^r
        model = block_sum(model, block_model(pow(r_inverse(p * reciprocal(p)), static_cast<unsigned>(r))));
      }
    }
  }
  if (model.factors.empty()) return {{a, Matrix::identity(f, a.rows())}};
  Matrix g = similarity_transform(product(model), a);
  U2Factorization out = conjugated(model, g);
  VerificationReport rep = verify_factorization(a, out);
  if (!rep.ok()) fail(ErrorCode::VerificationFailed, "gl_factor produced an invalid factorization");
  return out;
}

VerificationReport verify_factorization(const Matrix& u, const U2Factorization& f, const Isopair* pair) {
  VerificationReport rep;
  auto note = [&](bool& flag, const std::string& msg) {
    flag = false;
    rep.messages.push_back(msg);
  };
  if (f.factors.empty()) {
    note(rep.product, "no factors");
    return rep;
  }
  const Field& fld = u.field();
  std::size_t n = u.rows();
  for (std::size_t i = 0; i < f.factors.size(); ++i) {
    const Matrix& m = f.factors[i];
    if (m.rows() != n || m.cols() != n || m.field() != fld) {
      note(rep.product, "factor " + std::to_string(i) + " has the wrong shape");
      return rep;
    }
    if (!is_u2(m)) note(rep.square_zero, "factor " + std::to_string(i) + ": (f - I)^2 != 0");
    if (pair && m.transpose() * pair->gram() * m != pair->gram())
      note(rep.isometries, "factor " + std::to_string(i) + " is not an isometry");
  }
  if (product(f) != u) note(rep.product, "product of factors differs from u");
  if (!rep.ok() || !is_invertible(u)) return rep;

  // Diagnostics for the last two factors against the residual they multiply to.
  std::size_t k = f.factors.size();
  if (k < 2) return rep;
  const Matrix& u1 = f.factors[k - 2];
  const Matrix& u2 = f.factors[k - 1];
  Matrix w = u1 * u2;
  Matrix id = Matrix::identity(fld, n);
  Matrix d = w - id;
  Matrix u1i = inverse(u1), u2i = inverse(u2);
  if (u1 * d != d * u2) note(rep.commutation, "u1 (u - I) != (u - I) u2");
  if (u1i * d != d * u2i) note(rep.commutation, "u1^{-1} (u - I) != (u - I) u2^{-1}");
  Matrix s = w + inverse(w);
  if (u1 * s != s * u1 || u2 * s != s * u2) note(rep.commutation, "factors do not commute with u + u^{-1}");
  Matrix dk = id;
  for (std::size_t e = 1; e <= n; ++e) {
    dk = dk * d;
    Subspace ker = kernel(dk), im = image(dk);
    for (const Matrix* m : {&u1, &u2})
      if (!ker.stable_under(*m) || !im.stable_under(*m)) {
        note(rep.stabilization, "Ker/Im (u - I)^" + std::to_string(e) + " not stable");
        return rep;
      }
  }
  return rep;
}

}  // namespace u2split

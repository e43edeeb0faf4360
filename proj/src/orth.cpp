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

namespace {

int unit_eta(const Poly& p) {
  if (p.degree() != 1) return 0;
  if (p.coeff(0) == -p.field().one()) return 1;
  if (p.coeff(0).is_one()) return -1;
  return 0;
}

void add_unit(FactoredModel& m, const Isopair& pair, const U2Factorization& fac) {
  m.pair = orth_sum(m.pair, pair);
  m.factors = block_sum(m.factors, fac);
  m.blocks.push_back(pair.dim());
}

void add_hyperbolic(FactoredModel& m, const Matrix& v) {
  U2Factorization g = gl_factor(v);
  U2Factorization h;
  for (const auto& x : g.factors) h.factors.push_back(hyperbolic_map(x));
  add_unit(m, hyperbolic_ext(v, 1), h);
}

// B with one hyperbolic plane split off.
BilForm drop_plane(const BilForm& b) {
  WittDecomposition wd = witt_decompose(b);
  std::vector<Vec> keep;
  for (std::size_t i = 1; i < wd.hyperbolic.size(); ++i) {
    keep.push_back(wd.hyperbolic[i].first);
    keep.push_back(wd.hyperbolic[i].second);
  }
  for (const auto& v : wd.anisotropic_basis.columns()) keep.push_back(v);
  if (keep.empty()) return BilForm::zero(b.field());
  return b.restricted(Matrix::from_columns(b.field(), b.dim(), keep));
}

BilForm sign(int k, const BilForm& b) { return k % 2 ? -b : b; }

// (-1)^k B_k Witt-simplifies the sum over i > k of (-1)^i B_i.
std::vector<int> witt_failures(const std::vector<BilForm>& B) {
  std::vector<int> out;
  const Field& f = B.front().field();
  for (std::size_t k = 0; k < B.size(); ++k) {
    BilForm tail = BilForm::zero(f);
    for (std::size_t i = k + 1; i < B.size(); ++i) tail = orthogonal_sum(tail, sign(static_cast<int>(i), B[i]));
    if (!witt_simplifies(sign(static_cast<int>(k), B[k]), tail)) out.push_back(static_cast<int>(k));
  }
  return out;
}

std::vector<BilForm> odd_unipotent_invariants(const WallData& w) {
  int top = jordan_max_size(w.jordan, Poly::linear(w.field, w.field.one()));
  std::vector<BilForm> B;
  for (int r = 1; r <= std::max(top, 1); r += 2) B.push_back(w.quad_at(1, r));
  return B;
}

}  // namespace

Verdict orth_decide(const Isopair& p) {
  if (p.eps() != 1) fail(ErrorCode::EpsMismatch, "expected a 1-isopair");
  if (!p.field().is_prime()) fail(ErrorCode::UnsupportedField, "orthogonal decision is implemented over F_p");
  Verdict v;
  WallData w = wall_data(p);
  auto flag = [&](const std::string& label, const std::string& why) {
    if (v.failed.empty() || v.failed.back() != label) v.failed.push_back(label);
    v.details.push_back(label + " " + why);
  };
  for (const auto& [key, n] : w.jordan)
    if (unit_eta(key.first) == -1 && key.second % 2 == 1 && n > 0)
      flag("(i)", "Jordan cell of size " + std::to_string(key.second) + " for the eigenvalue -1");
  for (const auto& [key, n] : w.jordan)
    if (unit_eta(key.first) != 1 && n % 2)
      flag("(ii)", "n_{" + key.first.str() + "," + std::to_string(key.second) + "} = " + std::to_string(n) + " is odd");
  for (const auto& [key, h] : w.herm)
    if (!herm_is_hyperbolic(h))
      flag("(iii)", "Hermitian invariant at (" + key.first.str() + ", " + std::to_string(key.second) + ") is not hyperbolic");
  for (int k : witt_failures(odd_unipotent_invariants(w)))
    flag("(iv)", "(-1)^" + std::to_string(k) + " B_" + std::to_string(k) + " does not Witt-simplify the tail");
  v.splittable = v.failed.empty();
  return v;
}

FactoredModel orth_model(const Isopair& p) {
  if (!orth_decide(p).splittable) fail(ErrorCode::NotSplittable, "not a product of two U_2 isometries");
  const Field& f = p.field();
  WallData w = wall_data(p);
  FactoredModel m{Isopair::zero(f, 1), {}, {}};
  for (const auto& [key, n] : w.jordan) {
    const Poly& q = key.first;
    unsigned r = static_cast<unsigned>(key.second);
    int eta = unit_eta(q);
    if (eta == 1 && r % 2 == 1) continue;
    if (eta != 0 || reciprocal(q) == q) {
      for (int c = 0; c < n / 2; ++c) add_hyperbolic(m, companion(pow(q, r)));
    } else if (poly_less(q, reciprocal(q))) {
      for (int c = 0; c < n / 2; ++c) add_hyperbolic(m, companion(pow(q * reciprocal(q), r)));
    }
  }

  std::vector<BilForm> B = odd_unipotent_invariants(w);
  for (int l = static_cast<int>(B.size()) - 1; l >= 1;) {
    std::size_t i = static_cast<std::size_t>(l);
    if (B[i].dim() == 0) {
      --l;
      continue;
    }
    if (witt_index(B[i]) >= 1) {
      add_hyperbolic(m, companion(pow(Poly::linear(f, f.one()), static_cast<unsigned>(2 * l + 1))));
      B[i] = drop_plane(B[i]);
      continue;
    }
    TwistedModel base = twisted_model(f, l, f.one());
    Scalar beta = quad_wall(base.pair, 1, 2 * l - 1).gram()(0, 0);
    for (const auto& alpha : diagonalize(B[i]).values) {
      TwistedModel tw = twisted_model(f, l, alpha / beta);
      add_unit(m, tw.pair, tw.factors);
    }
    long rest = static_cast<long>(B[i - 1].dim()) - static_cast<long>(B[i].dim());
    if (rest < 0) fail(ErrorCode::NotSplittable, "B_{l-1} is too small to contain B_l");
    std::vector<Scalar> diag(static_cast<std::size_t>(rest), f.one());
    Scalar ratio = discriminant(B[i - 1]) / discriminant(B[i]);
    if (rest > 0) diag.back() = ratio;
    BilForm phi = BilForm::symmetric(Matrix::diag(f, diag));
    if (!form_equivalent(orthogonal_sum(B[i], phi), B[i - 1]))
      fail(ErrorCode::NotSplittable, "B_l is not a subform of B_{l-1}");
    B[i - 1] = phi;
    B[i] = BilForm::zero(f);
    --l;
  }
  if (B[0].dim() > 0) {
    Matrix id = Matrix::identity(f, B[0].dim());
    add_unit(m, Isopair(1, B[0], id), {{id, id}});
  }
  if (m.pair.dim() != p.dim()) fail(ErrorCode::VerificationFailed, "orthogonal model has the wrong dimension");
  return m;
}

U2Factorization orth_factor2(const Isopair& p, const TransportOptions& opt) {
  if (!orth_decide(p).splittable) fail(ErrorCode::NotSplittable, "not a product of two U_2 isometries");
  Matrix id = Matrix::identity(p.field(), p.dim());
  if (is_u2(p.u())) return {{p.u(), id}};
  return transport_factorization(orth_model(p), p, opt);
}

}  // namespace u2split

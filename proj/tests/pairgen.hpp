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

#ifndef U2SPLIT_TEST_PAIRGEN_HPP
#define U2SPLIT_TEST_PAIRGEN_HPP

#include <random>
#include <vector>

#include "helpers.hpp"
#include "u2split/isopair.hpp"
#include "u2split/tower.hpp"

namespace testutil {

/// Monic irreducible palindromials of the given even degree.
inline std::vector<Poly> palindromials(const Field& f, int deg) {
  std::vector<Poly> out;
  for_each_monic(f, deg, [&](const Poly& p) {
    if (p.coeff(0).is_one() && reciprocal(p) == p && is_irreducible(p)) out.push_back(p);
  });
  return out;
}

/// Monic irreducibles p of the given degree with p != p#.
inline std::vector<Poly> unpaired_irreducibles(const Field& f, int deg) {
  std::vector<Poly> out;
  for_each_monic(f, deg, [&](const Poly& p) {
    if (!p.coeff(0).is_zero() && reciprocal(p) != p && is_irreducible(p)) out.push_back(p);
  });
  return out;
}

/// A nonzero value for a Hermitian (eps = 1) or skew-Hermitian (eps = -1) form over L.
inline Poly rand_herm_value(const Tower& t, int eps, std::mt19937_64& rng) {
  for (;;) {
    Poly k = rand_poly(t.field(), t.d() - 1, rng);
    if (k.is_zero()) continue;
    Poly a = t.psi_inv(k);
    return eps == 1 ? a : t.mul(t.eta(), a);
  }
}

/// x -> q x: (G, u) becomes (q^{-T} G q^{-1}, q u q^{-1}).
inline Isopair transported(const Isopair& p, const Matrix& q) {
  Matrix qi = inverse(q);
  return Isopair(p.eps(), BilForm(qi.transpose() * p.gram() * qi, p.b().kind()), q * p.u() * qi);
}

inline Isopair rand_transport(const Isopair& p, std::mt19937_64& rng) {
  return transported(p, rand_invertible(p.field(), p.dim(), rng));
}

/// Random totally isotropic subspace (columns) of dimension at most k.
inline Matrix rand_isotropic(const Matrix& g, std::size_t k, std::mt19937_64& rng) {
  const Field& f = g.field();
  std::vector<Vec> chosen;
  for (int attempt = 0; attempt < 400 && chosen.size() < k; ++attempt) {
    Vec v(g.rows());
    for (auto& x : v) x = rand_scalar(f, rng);
    if (!bilinear(v, g, v).is_zero()) continue;
    bool ok = true;
    for (const auto& c : chosen) ok = ok && bilinear(c, g, v).is_zero();
    if (!ok) continue;
    std::vector<Vec> trial = chosen;
    trial.push_back(v);
    if (rank(Matrix::from_columns(f, g.rows(), trial)) == trial.size()) chosen = std::move(trial);
  }
  return Matrix::from_columns(f, g.rows(), chosen);
}

/// Random U_2 isometry I + X K X^T G with X totally isotropic and K^T = -eps K
/// nonzero whenever the form allows it.
inline Matrix rand_u2_isometry(const Matrix& g, int eps, std::mt19937_64& rng) {
  const Field& f = g.field();
  std::size_t n = g.rows();
  std::size_t want = (eps == 1 ? 2 : 1) + rng() % (n / 2 + 1);
  Matrix x = rand_isotropic(g, want, rng);
  std::size_t k = x.cols();
  Matrix id = Matrix::identity(f, n);
  if (k == 0 || (eps == 1 && k < 2)) return id;
  Matrix kk(f, k, k);
  while (kk.is_zero())
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i; j < k; ++j) {
        if (i == j && eps == 1) continue;
        kk(i, j) = rand_scalar(f, rng);
        kk(j, i) = eps == 1 ? -kk(i, j) : kk(i, j);
      }
  return id + x * kk * x.transpose() * g;
}

struct PairGen {
  Field f;
  int eps;
  bool unipotent = false;  // only blocks with eigenvalue 1
  bool allow_minus = true;  // blocks at eigenvalue -1

  /// A random indecomposable model block of dimension <= room, if any fits.
  std::optional<Isopair> block(std::size_t room, std::mt19937_64& rng) const {
    for (int attempt = 0; attempt < 40; ++attempt) {
      int kind = unipotent ? static_cast<int>(rng() % 2) : static_cast<int>(rng() % 4);
      int r = 1 + static_cast<int>(rng() % 4);
      BlockDescriptor d{BlockShape::unipotent_cyclic, Poly(f), r, 1};
      ModelValue val;
      std::size_t dim = 0;
      if (kind < 2) {
        d.eta = (!unipotent && allow_minus && rng() % 2) ? -1 : 1;
        bool cyc = quad_admissible(eps, r);
        if (kind == 0 && !cyc) continue;
        if (kind == 1 && cyc) continue;
        d.shape = cyc ? BlockShape::unipotent_cyclic : BlockShape::unipotent_twin;
        dim = cyc ? r : 2 * r;
        if (cyc) val.quad = rand_unit(f, rng);
      } else if (kind == 2) {
        auto ps = palindromials(f, 2);
        if (ps.empty()) continue;
        d.shape = BlockShape::palindromial_cyclic;
        d.p = ps[rng() % ps.size()];
        dim = 2 * r;
        Tower t(d.p);
        val.herm = rand_herm_value(t, eps, rng);
      } else {
        auto ps = unpaired_irreducibles(f, 1);
        if (ps.empty()) ps = unpaired_irreducibles(f, 2);
        d.shape = BlockShape::reciprocal_pair;
        d.p = ps[rng() % ps.size()];
        dim = 2 * static_cast<std::size_t>(d.p.degree()) * r;
      }
      if (dim > room) continue;
      return model_isopair(f, eps, d, val);
    }
    return std::nullopt;
  }

  /// Orthogonal sum of random blocks, dimension in [1, maxdim], randomly transported.
  Isopair operator()(std::size_t maxdim, std::mt19937_64& rng) const {
    for (;;) {
      Isopair acc = Isopair::zero(f, eps);
      std::size_t target = 1 + rng() % maxdim;
      for (int tries = 0; tries < 8 && acc.dim() < target; ++tries) {
        auto b = block(target - acc.dim(), rng);
        if (b) acc = orth_sum(acc, *b);
      }
      if (acc.dim() == 0) continue;
      return rand_transport(acc, rng);
    }
  }
};

}  // namespace testutil

#endif

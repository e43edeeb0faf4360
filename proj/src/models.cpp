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

#include <random>
#include <string>

#include "u2split/factor.hpp"
#include "u2split/isopair.hpp"

namespace u2split {

namespace {

Poly t_minus(const Field& f, int c) { return Poly::linear(f, f.from_int(c)); }

bool self_reciprocal(const Poly& p) { return p.coeff(0) != p.field().zero() && reciprocal(p).monic() == p; }

Isopair scaled_pair(const Isopair& p, const Scalar& c) {
  return Isopair(p.eps(), p.b().scaled(c), p.u());
}

}  // namespace

const char* shape_name(BlockShape s) {
  switch (s) {
    case BlockShape::palindromial_cyclic: return "palindromial_cyclic";
    case BlockShape::reciprocal_pair: return "reciprocal_pair";
    case BlockShape::unipotent_cyclic: return "unipotent_cyclic";
    case BlockShape::unipotent_twin: return "unipotent_twin";
  }
  return "?";
}

SymPairModel model_sym_pair(const Poly& m, int r, const Poly& alpha) {
  const Field& f = m.field();
  if (r < 1) fail(ErrorCode::BadParameters, "r must be >= 1");
  if (!m.is_monic() || m.degree() < 1 || !is_irreducible(m))
    fail(ErrorCode::BadParameters, "m must be monic irreducible");
  if ((alpha % m).is_zero()) fail(ErrorCode::BadParameters, "alpha must be nonzero mod m");
  Poly mr = pow(m, static_cast<unsigned>(r));
  Poly low = pow(m, static_cast<unsigned>(r - 1));
  std::size_t n = static_cast<std::size_t>(mr.degree());
  // l(g) = e_m(alpha * top m-adic digit of g)
  auto ell = [&](const Poly& g) {
    Poly top = (g % mr) / low;
    return ((alpha * top) % m).coeff(0);
  };
  Matrix gb(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) gb(i, j) = ell(Poly::monomial(f, i + j));
  Matrix u0 = companion(mr);
  Matrix gc = gb * (u0 - Matrix::identity(f, n).scaled(f.from_int(2)));
  SymPairModel out{BilForm(gb, FormKind::symmetric), BilForm(gc, FormKind::symmetric), u0};
  if (!is_regular(out.B)) fail(ErrorCode::VerificationFailed, "model_sym_pair: B is degenerate");
  if (inverse(gb) * gc + Matrix::identity(f, n).scaled(f.from_int(2)) != u0)
    fail(ErrorCode::VerificationFailed, "model_sym_pair: u0 mismatch");
  return out;
}

Isopair cyclic_module_model(const Poly& q, int eps, std::uint64_t seed) {
  const Field& f = q.field();
  if (!f.is_prime()) fail(ErrorCode::UnsupportedField, "cyclic models are built over F_p");
  if (eps != 1 && eps != -1) fail(ErrorCode::BadParameters, "eps must be 1 or -1");
  if (!q.is_monic() || q.degree() < 1 || !self_reciprocal(q))
    fail(ErrorCode::BadParameters, "q must be monic and self-reciprocal");
  std::size_t n = static_cast<std::size_t>(q.degree());
  Poly tinv = xgcd(Poly::monomial(f, 1), q).s % q;
  auto coords = [&](const Poly& g) {
    Vec c = zero_vec(f, n);
    Poly red = g % q;
    for (int i = 0; i <= red.degree(); ++i) c[static_cast<std::size_t>(i)] = red.coeff(static_cast<std::size_t>(i));
    return c;
  };
  std::vector<Poly> sig;  // sigma(t^i)
  for (std::size_t i = 0; i < n; ++i) sig.push_back(powmod(tinv, i, q));
  Matrix s(f, n, n);
  for (std::size_t i = 0; i < n; ++i) s.set_column(i, coords(sig[i]));
  Matrix u = companion(q);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long long> dist(0, static_cast<long long>(f.modulus()) - 1);
  for (int attempt = 0; attempt < 256; ++attempt) {
    Vec l = zero_vec(f, n);
    for (auto& x : l) x = f.from_int(dist(rng));
    // l_s = l + eps l o sigma, as a row vector
    Vec ls = add(l, scale(s.transpose() * l, f.from_int(eps)));
    Matrix g(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) g(i, j) = dot(ls, coords(sig[i] * Poly::monomial(f, j)));
    if (!is_invertible(g)) continue;
    Isopair p(eps, BilForm(g, kind_for_eps(eps)), u);
    require_valid(p);
    return p;
  }
  fail(ErrorCode::VerificationFailed, "cyclic model: no regular form found");
}

Isopair rescale_herm(const Isopair& p, const Tower& tower, const Poly& lambda) {
  if (!tower.is_selfadjoint(lambda)) fail(ErrorCode::BadParameters, "lambda must be selfadjoint");
  Matrix v = p.u() + inverse(p.u());
  Matrix k = poly_eval(tower.psi(lambda), v);
  if (!is_invertible(k)) fail(ErrorCode::BadParameters, "k(v) is singular on this pair");
  Isopair out(p.eps(), BilForm(p.gram() * k, kind_for_eps(p.eps())), p.u());
  require_valid(out);
  return out;
}

Isopair model_isopair(const Field& f, int eps, const BlockDescriptor& block, const ModelValue& value) {
  if (eps != 1 && eps != -1) fail(ErrorCode::BadParameters, "eps must be 1 or -1");
  if (block.r < 1) fail(ErrorCode::BadParameters, "r must be >= 1");
  if (!f.is_prime()) fail(ErrorCode::UnsupportedField, "models are built over F_p");
  unsigned r = static_cast<unsigned>(block.r);
  std::optional<Isopair> out;
  Poly charpoly(f);
  switch (block.shape) {
    case BlockShape::unipotent_twin:
    case BlockShape::unipotent_cyclic: {
      if (block.eta != 1 && block.eta != -1) fail(ErrorCode::BadParameters, "eta must be 1 or -1");
      bool cyclic = block.shape == BlockShape::unipotent_cyclic;
      if (quad_admissible(eps, block.r) != cyclic)
        fail(ErrorCode::InadmissibleShape, std::string(shape_name(block.shape)) + " with r = " +
                                               std::to_string(block.r) + " for eps = " + std::to_string(eps));
      Poly q = pow(t_minus(f, block.eta), r);
      if (!cyclic) {
        out = hyperbolic_ext(companion(q), eps);
        charpoly = q * q;
        break;
      }
      charpoly = q;
      if (eps == 1) {
        out = cyclic_module_model(q, 1);
      } else {
        SymPairModel sp = model_sym_pair(t_minus(f, 2 * block.eta), block.r / 2, Poly::constant(f, f.one()));
        out = boxed_product(sp.B, sp.C, -1).pair;
      }
      if (value.quad) {
        if (value.quad->is_zero()) fail(ErrorCode::BadParameters, "quadratic value must be nonzero");
        Scalar beta = quad_wall(*out, block.eta, block.r).gram()(0, 0);
        out = scaled_pair(*out, *value.quad / beta);
      }
      break;
    }
    case BlockShape::reciprocal_pair: {
      if (!is_irreducible(block.p) || !block.p.is_monic() || self_reciprocal(block.p) || block.p.coeff(0).is_zero())
        fail(ErrorCode::InadmissibleShape, "reciprocal pairs need an irreducible p with p != p#");
      Poly q = pow(block.p, r);
      out = hyperbolic_ext(companion(q), eps);
      charpoly = q * pow(reciprocal(block.p).monic(), r);
      break;
    }
    case BlockShape::palindromial_cyclic: {
      if (block.p.degree() < 2 || !is_irreducible(block.p) || !self_reciprocal(block.p))
        fail(ErrorCode::InadmissibleShape, "palindromial blocks need an irreducible palindromial of degree >= 2");
      charpoly = pow(block.p, r);
      if (eps == 1) {
        out = cyclic_module_model(charpoly, 1);
      } else {
        SymPairModel sp = model_sym_pair(r_inverse(block.p), block.r, Poly::constant(f, f.one()));
        out = boxed_product(sp.B, sp.C, -1).pair;
      }
      if (value.herm) {
        Tower tower(block.p);
        Poly beta = herm_wall(*out, block.p, block.r).entry(0, 0);
        Poly alpha = tower.reduce(*value.herm);
        if (alpha.is_zero()) fail(ErrorCode::BadParameters, "Hermitian value must be nonzero");
        Poly lambda = tower.mul(alpha, tower.inv(beta));
        if (!tower.is_selfadjoint(lambda))
          fail(ErrorCode::BadParameters, "value has the wrong symmetry for this flavor");
        out = rescale_herm(*out, tower, lambda);
      }
      break;
    }
  }
  require_valid(*out);
  auto inv = invariant_factors(out->u());
  if (inv.size() != (block.shape == BlockShape::unipotent_twin ? 2u : 1u))
    fail(ErrorCode::VerificationFailed, "model has the wrong number of cells");
  if (char_poly(out->u()) != charpoly) fail(ErrorCode::VerificationFailed, "model has the wrong characteristic polynomial");
  return *out;
}

}  // namespace u2split

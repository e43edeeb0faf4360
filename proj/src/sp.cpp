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

void require_eps(const Isopair& p, int eps) {
  if (p.eps() != eps) fail(ErrorCode::EpsMismatch, "expected a " + std::to_string(eps) + "-isopair");
}

int unit_eta(const Poly& p) {
  if (p.degree() != 1) return 0;
  if (p.coeff(0) == -p.field().one()) return 1;
  if (p.coeff(0).is_one()) return -1;
  return 0;
}

U2Factorization hyperbolic_factors(const Matrix& v) {
  U2Factorization g = gl_factor(v);
  U2Factorization out;
  for (const auto& m : g.factors) out.factors.push_back(hyperbolic_map(m));
  return out;
}

void add_unit(FactoredModel& m, const Isopair& pair, const U2Factorization& fac) {
  m.pair = orth_sum(m.pair, pair);
  m.factors = block_sum(m.factors, fac);
  m.blocks.push_back(pair.dim());
}

// Cyclic (t - eta)^r block, r even, whose quadratic invariant is <alpha>.
void add_cyclic_unipotent(FactoredModel& m, const Field& f, int eta, int r, const Scalar& alpha) {
  SymPairModel sp = model_sym_pair(Poly::linear(f, f.from_int(2 * eta)), r / 2, Poly::constant(f, f.one()));
  BoxedProduct bp = boxed_product(sp.B, sp.C, -1);
  Scalar beta = quad_wall(bp.pair, eta, r).gram()(0, 0);
  Isopair scaled(-1, bp.pair.b().scaled(alpha / beta), bp.pair.u());
  add_unit(m, scaled, bp.factors);
}

void add_boxed(FactoredModel& m, const Poly& mm, int r) {
  SymPairModel sp = model_sym_pair(mm, r, Poly::constant(mm.field(), mm.field().one()));
  BoxedProduct bp = boxed_product(sp.B, sp.C, -1);
  add_unit(m, bp.pair, bp.factors);
}

// Two cells (t + 1)^r, r odd, as three factors.
void add_minus_twin(FactoredModel& m, const Field& f, int r, const TransportOptions& opt) {
  if (r == 1) {
    Isopair base = hyperbolic_ext(Matrix::from_ints(f, {{-1}}), -1);
    Matrix u1 = Matrix::from_ints(f, {{1, 1}, {0, 1}});
    Isopair rest(-1, base.b(), inverse(u1) * base.u());
    U2Factorization tail = sp_factor2(rest, opt);
    add_unit(m, base, {{u1, tail.factors[0], tail.factors[1]}});
    return;
  }
  Matrix v = companion(pow(Poly::from_ints(f, {1, 1}), static_cast<unsigned>(r)));
  Poly p = Poly::monomial(f, static_cast<std::size_t>(r)) + Poly::from_ints(f, {1, r % 2 ? -1 : 1});
  Matrix u1 = u_adapted(v, p);
  Isopair base = hyperbolic_ext(v, -1);
  Isopair rest(-1, base.b(), hyperbolic_map(inverse(u1) * v));
  U2Factorization tail = sp_factor2(rest, opt);
  add_unit(m, base, {{hyperbolic_map(u1), tail.factors[0], tail.factors[1]}});
}

FactoredModel sp_model_impl(const Isopair& p, int nfactors, const TransportOptions& opt) {
  require_eps(p, -1);
  const Field& f = p.field();
  if (!f.is_prime()) fail(ErrorCode::UnsupportedField, "symplectic synthesis needs F_p");
  WallData w = wall_data(p);
  FactoredModel m{Isopair::zero(f, -1), {}, {}};
  for (const auto& [key, n] : w.jordan) {
    const Poly& q = key.first;
    int r = key.second;
    int eta = unit_eta(q);
    if (eta != 0 && r % 2 == 1) {
      for (int c = 0; c < n / 2; ++c) {
        if (eta == 1) {
          Matrix j = companion(pow(q, static_cast<unsigned>(r)));
          add_unit(m, hyperbolic_ext(j, -1), hyperbolic_factors(j));
        } else {
          if (nfactors < 3) fail(ErrorCode::NotSplittable, "odd Jordan cell for the eigenvalue -1");
          add_minus_twin(m, f, r, opt);
        }
      }
    } else if (eta != 0) {
      Diagonalization d = diagonalize(w.quad_at(eta, r));
      for (const auto& alpha : d.values) add_cyclic_unipotent(m, f, eta, r, alpha);
    } else if (reciprocal(q) == q) {
      for (int c = 0; c < n; ++c) add_boxed(m, r_inverse(q), r);
    } else if (poly_less(q, reciprocal(q))) {
      for (int c = 0; c < n; ++c) add_boxed(m, r_inverse(q * reciprocal(q)), r);
    }
  }
  if (m.pair.dim() != p.dim()) fail(ErrorCode::VerificationFailed, "symplectic model has the wrong dimension");
  return m;
}

}  // namespace

Verdict sp_decide(const Isopair& p) {
  require_eps(p, -1);
  Verdict v;
  JordanData j = jordan_numbers(p.u());
  Poly tp1 = Poly::from_ints(p.field(), {1, 1});
  for (const auto& [key, n] : j)
    if (key.first == tp1 && key.second % 2 == 1 && n > 0)
      v.details.push_back("Jordan cell of size " + std::to_string(key.second) + " for the eigenvalue -1");
  v.splittable = v.details.empty();
  if (!v.splittable) v.failed.push_back("(iii)");
  return v;
}

FactoredModel sp_model(const Isopair& p, int nfactors) { return sp_model_impl(p, nfactors, TransportOptions{}); }

U2Factorization sp_factor2(const Isopair& p, const TransportOptions& opt) {
  require_eps(p, -1);
  if (!sp_decide(p).splittable) fail(ErrorCode::NotSplittable, "not a product of two U_2 isometries");
  Matrix id = Matrix::identity(p.field(), p.dim());
  if (is_u2(p.u())) return {{p.u(), id}};
  return transport_factorization(sp_model_impl(p, 2, opt), p, opt);
}

U2Factorization sp_factor3(const Isopair& p, const TransportOptions& opt) {
  require_eps(p, -1);
  if (sp_decide(p).splittable) {
    U2Factorization two = sp_factor2(p, opt);
    two.factors.push_back(Matrix::identity(p.field(), p.dim()));
    return two;
  }
  return transport_factorization(sp_model_impl(p, 3, opt), p, opt);
}

}  // namespace u2split

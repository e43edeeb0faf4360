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

#include "u2split/tower.hpp"

namespace u2split {

Tower::Tower(const Poly& p) : p_(p), m_(p.field()), t_inv_(p.field()), eta_(p.field()), s_(p.field()), s_powers_(p.field(), 0, 0), psi_solve_(p.field(), 0, 0) {
  const Field& f = p.field();
  if (f.is_rational()) fail(ErrorCode::UnsupportedField, "towers are built over prime fields");
  if (p.degree() < 1 || !p.is_monic()) fail(ErrorCode::NotPalindromial, p.str());
  if (p == Poly::from_ints(f, {-1, 1}) || p == Poly::from_ints(f, {1, 1})) fail(ErrorCode::DegenerateModulus, p.str());
  if (p.coeff(0).is_zero() || !is_palindromial(p)) fail(ErrorCode::NotPalindromial, p.str());
  if (p.degree() % 2 != 0) fail(ErrorCode::NotIrreducible, p.str() + " (palindromial of odd degree has root -1)");
  if (!is_irreducible(p)) fail(ErrorCode::NotIrreducible, p.str());
  m_ = r_inverse(p);
  Poly t = Poly::monomial(f, 1);
  XGcd x = xgcd(t, p_);
  t_inv_ = x.s % p_;
  s_ = reduce(t + t_inv_);
  eta_ = reduce(t - t_inv_);
  std::size_t dd = static_cast<std::size_t>(d()), n = 2 * dd;
  s_powers_ = Matrix(f, n, dd);
  Poly pw = one();
  for (std::size_t j = 0; j < dd; ++j) {
    s_powers_.set_column(j, coords(pw));
    pw = mul(pw, s_);
  }
  // Left inverse through an invertible d x d row selection.
  Rref r = rref(s_powers_.transpose());
  Matrix sel(f, dd, n), ms(f, dd, dd);
  for (std::size_t i = 0; i < dd; ++i) {
    sel(i, r.pivots[i]) = f.one();
    for (std::size_t j = 0; j < dd; ++j) ms(i, j) = s_powers_(r.pivots[i], j);
  }
  psi_solve_ = inverse(ms) * sel;
}

TowerPtr make_tower(const Poly& p) { return std::make_shared<const Tower>(p); }

Poly Tower::from_laurent(const LaurentPoly& q) const {
  Poly r(field());
  Poly pos = one(), neg = one();
  for (int e = 0; e < q.low; ++e) pos = mul(pos, t());
  for (int e = q.low; e < 0; ++e) neg = mul(neg, t_inv_);
  Poly base = q.low >= 0 ? pos : neg;
  for (const auto& c : q.c) {
    r += base.scaled(c);
    base = mul(base, t());
  }
  return reduce(r);
}

Poly Tower::inv(const Poly& a) const {
  Poly ar = reduce(a);
  if (ar.is_zero()) fail(ErrorCode::DivisionByZero, "inverse of zero in L");
  XGcd x = xgcd(ar, p_);
  return x.s % p_;
}

Poly Tower::conj(const Poly& a) const {
  Poly ar = reduce(a);
  Poly r(field());
  for (int i = ar.degree(); i >= 0; --i) r = mul(r, t_inv_) + Poly::constant(field(), ar.coeff(static_cast<std::size_t>(i)));
  return reduce(r);
}

Poly Tower::psi(const Poly& a) const {
  if (!is_selfadjoint(a)) fail(ErrorCode::BadParameters, "psi of a non-selfadjoint element");
  Vec c = psi_solve_ * coords(a);
  return Poly(field(), c);
}

Poly Tower::psi_inv(const Poly& k) const {
  Poly kr = k % m_;
  Vec c = zero_vec(field(), static_cast<std::size_t>(d()));
  for (std::size_t j = 0; j < c.size(); ++j) c[j] = kr.coeff(j);
  return from_coords(s_powers_ * c);
}

Scalar Tower::f_p(const Poly& a) const { return e_m(psi(reduce(a) + conj(a))); }

Vec Tower::coords(const Poly& a) const {
  Poly ar = reduce(a);
  Vec c = zero_vec(field(), static_cast<std::size_t>(p_.degree()));
  for (std::size_t j = 0; j < c.size(); ++j) c[j] = ar.coeff(j);
  return c;
}

Poly Tower::from_coords(const Vec& c) const { return reduce(Poly(field(), c)); }

}  // namespace u2split

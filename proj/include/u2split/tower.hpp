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

#ifndef U2SPLIT_TOWER_HPP
#define U2SPLIT_TOWER_HPP

#include <memory>
#include <vector>

#include "u2split/matrix.hpp"
#include "u2split/poly.hpp"

namespace u2split {

/// L = F[t]/(p) for an irreducible palindromial p != t +- 1, with the
/// involution t -> 1/t and its fixed field K = F[s]/(m), s = t + 1/t.
/// Elements of L are residues (polynomials of degree < 2d).
class Tower {
 public:
  explicit Tower(const Poly& p);

  const Field& field() const noexcept { return p_.field(); }
  const Poly& p() const noexcept { return p_; }
  const Poly& m() const noexcept { return m_; }
  /// deg m; [L:F] = 2d.
  int d() const noexcept { return m_.degree(); }

  Poly reduce(const Poly& x) const { return x % p_; }
  Poly from_laurent(const LaurentPoly& q) const;
  Poly one() const { return Poly::constant(field(), field().one()); }
  Poly t() const { return reduce(Poly::monomial(field(), 1)); }
  const Poly& t_inv() const noexcept { return t_inv_; }
  /// The class of t - 1/t.
  const Poly& eta() const noexcept { return eta_; }

  Poly add(const Poly& a, const Poly& b) const { return a + b; }
  Poly mul(const Poly& a, const Poly& b) const { return (a * b) % p_; }
  Poly inv(const Poly& a) const;
  /// a(1/t)
  Poly conj(const Poly& a) const;
  bool is_selfadjoint(const Poly& a) const { return conj(a) == reduce(a); }

  /// psi: a selfadjoint element as a residue mod m (coordinates in s^j).
  Poly psi(const Poly& a) const;
  /// Inverse of psi: k(s) as an element of L.
  Poly psi_inv(const Poly& k) const;
  /// Constant coordinate of a residue mod m.
  Scalar e_m(const Poly& k) const { return (k % m_).coeff(0); }
  /// f_p(a) = e_m(psi(a + conj(a)))
  Scalar f_p(const Poly& a) const;

  /// Coordinates in the F-basis 1, t, ..., t^{2d-1}.
  Vec coords(const Poly& a) const;
  Poly from_coords(const Vec& c) const;

 private:
  Poly p_, m_, t_inv_, eta_, s_;
  Matrix s_powers_;   // 2d x d, columns s^j mod p
  Matrix psi_solve_;  // d x 2d left inverse of s_powers_
};

using TowerPtr = std::shared_ptr<const Tower>;
TowerPtr make_tower(const Poly& p);

}  // namespace u2split

#endif

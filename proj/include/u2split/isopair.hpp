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

#ifndef U2SPLIT_ISOPAIR_HPP
#define U2SPLIT_ISOPAIR_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "u2split/forms.hpp"
#include "u2split/linal.hpp"

namespace u2split {

/// A regular form b (symmetric for eps = 1, alternating for eps = -1)
/// together with a b-isometry u.
class Isopair {
 public:
  /// Checks shapes only; see validate_isopair for the full invariants.
  Isopair(int eps, BilForm b, Matrix u);

  int eps() const noexcept { return eps_; }
  const BilForm& b() const noexcept { return b_; }
  const Matrix& gram() const noexcept { return b_.gram(); }
  const Matrix& u() const noexcept { return u_; }
  std::size_t dim() const noexcept { return u_.rows(); }
  const Field& field() const noexcept { return u_.field(); }

  static Isopair zero(const Field& f, int eps);

 private:
  int eps_;
  BilForm b_;
  Matrix u_;
};

FormKind kind_for_eps(int eps);

/// Violated invariants; empty when valid.
std::vector<std::string> validate_isopair(const Isopair& p);
/// InvalidIsopair listing the violations.
void require_valid(const Isopair& p);

Isopair orth_sum(const Isopair& a, const Isopair& b);

/// Pair induced on W / (W cap W^perp). NotStable unless u W = W.
Isopair induced(const Isopair& p, const Subspace& w);

/// The quadratic Wall invariant (b,u)_{t-eta,r}; ParityMismatch when r has
/// the wrong parity for eps.
BilForm quad_wall(const Isopair& p, int eta, int r);
bool quad_admissible(int eps, int r);

/// The Hermitian (eps = 1) or skew-Hermitian (eps = -1) Wall invariant at (p, r).
HermForm herm_wall(const Isopair& p, const Poly& pal, int r);
/// H(x, y) for x, y in Ker m(v)^r, defined by b(x, m(v)^{r-1} lambda(u) y) = f_p(lambda H(x, y)).
Poly herm_value(const Isopair& p, const Tower& tower, int r, const Vec& x, const Vec& y);

struct WallData {
  int eps = 1;
  Field field;
  JordanData jordan;
  std::map<std::pair<int, int>, BilForm> quad;                 // (eta, r)
  std::map<std::pair<Poly, int>, HermForm, JordanKeyLess> herm;  // (p, r)

  /// Zero-dimensional for absent or inadmissible keys.
  BilForm quad_at(int eta, int r) const;
};
WallData wall_data(const Isopair& p);

/// Wall's criterion over F_p.
bool isometric(const Isopair& a, const Isopair& b);

bool is_unipotent(const Matrix& u);
/// Induced on Im(u - 1).
Isopair descent(const Isopair& p);
/// Induced on Ker(u - 1) + Im(u - 1).
Isopair twisted_descent(const Isopair& p);
/// Induced on Ker(u - 1)^k.
Isopair folding(const Isopair& p, int k);

/// B, C symmetric with u0 = companion(m^r) = 2I + G_B^{-1} G_C, and the
/// generator e_1 satisfying B(e_1, q m^{r-1}(u0) e_1) = e_m(alpha q).
struct SymPairModel {
  BilForm B, C;
  Matrix u0;
};
SymPairModel model_sym_pair(const Poly& m, int r, const Poly& alpha);

enum class BlockShape { palindromial_cyclic, reciprocal_pair, unipotent_cyclic, unipotent_twin };
const char* shape_name(BlockShape s);

/// One indecomposable shape. p is the irreducible factor for the first two
/// shapes; eta selects t - eta for the last two.
struct BlockDescriptor {
  BlockShape shape;
  Poly p;
  int r = 1;
  int eta = 1;
};

/// Prescribed value: a scalar for quadratic blocks, an element of L for
/// Hermitian ones. Absent values leave the model's own value.
struct ModelValue {
  std::optional<Scalar> quad;
  std::optional<Poly> herm;
};

/// InadmissibleShape for parities the classification excludes.
Isopair model_isopair(const Field& f, int eps, const BlockDescriptor& block, const ModelValue& value = {});

/// Cyclic model on F[t]/(q) with u = companion(q) and b(f, g) = l(f(1/t) g)
/// for a (eps-)symmetrized linear form l. q must be self-reciprocal.
Isopair cyclic_module_model(const Poly& q, int eps, std::uint64_t seed = 1);

/// Replaces b by b(., k(v) .) so every Hermitian value at p is multiplied
/// by the selfadjoint lambda = psi^{-1}(k).
Isopair rescale_herm(const Isopair& p, const Tower& tower, const Poly& lambda);

}  // namespace u2split

#endif

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

#ifndef U2SPLIT_FACTOR_HPP
#define U2SPLIT_FACTOR_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "u2split/error.hpp"
#include "u2split/isopair.hpp"

namespace u2split {

/// factors[0] * factors[1] (* factors[2]) = u, each factor I + a with a^2 = 0.
struct U2Factorization {
  std::vector<Matrix> factors;
};

bool is_u2(const Matrix& m);
Matrix product(const U2Factorization& f);
/// g f g^{-1} for every factor.
U2Factorization conjugated(const U2Factorization& f, const Matrix& g);
/// Blockwise direct sum; shorter lists are padded with identities.
U2Factorization block_sum(const U2Factorization& a, const U2Factorization& b);

struct Verdict {
  bool splittable = false;
  std::vector<std::string> failed;  // theorem condition labels, e.g. "(iii)"
  std::vector<std::string> details;
  std::optional<U2Factorization> witness;
};

struct TransportOptions {
  std::uint64_t budget = 1000000;  // candidate vectors examined
  std::uint64_t seed = 0x7a11ce5eedULL;
};

/// Raised when the budgeted search gives up; carries the model that is
/// isometric to the input (by matching invariants) and its factorization.
class TransportFailure : public Error {
 public:
  TransportFailure(std::string msg, Isopair model, U2Factorization model_factors, std::uint64_t tried)
      : Error(ErrorCode::TransportBudgetExceeded, std::move(msg)),
        model_(std::move(model)),
        model_factors_(std::move(model_factors)),
        tried_(tried) {}
  const Isopair& model() const noexcept { return model_; }
  const U2Factorization& model_factors() const noexcept { return model_factors_; }
  std::uint64_t candidates_tried() const noexcept { return tried_; }

 private:
  Isopair model_;
  U2Factorization model_factors_;
  std::uint64_t tried_;
};

// General linear group.
Verdict gl_decide(const Matrix& a);
U2Factorization gl_factor(const Matrix& a);

// Constructions.
/// Gram of H^eps on V x V*: [[0, eps I], [I, 0]] in (x, phi) coordinates.
Matrix hyperbolic_gram(const Field& f, std::size_t n, int eps);
/// h(v) = diag(v, v^{-T}).
Matrix hyperbolic_map(const Matrix& v);
Isopair hyperbolic_ext(const Matrix& v, int eps);

struct BoxedProduct {
  Isopair pair;
  U2Factorization factors;  // (I + v_C)(I + w_B)
};
/// B, C symmetric for eps = -1 and alternating for eps = 1; B regular.
BoxedProduct boxed_product(const BilForm& B, const BilForm& C, int eps);

struct TwistedModel {
  Isopair pair;
  U2Factorization factors;
};
/// Unipotent 4k-dimensional 1-isopair with cells 2k+1 and 2k-1 on scale * [[0, I], [I, 0]].
TwistedModel twisted_model(const Field& f, int k, const Scalar& scale);

/// U_2 matrix u1 with u1^{-1} v cyclic of minimal polynomial p; v cyclic, p(0) = q(0).
Matrix u_adapted(const Matrix& v, const Poly& p);

// Symplectic groups.
Verdict sp_decide(const Isopair& p);
U2Factorization sp_factor2(const Isopair& p, const TransportOptions& opt = {});
U2Factorization sp_factor3(const Isopair& p, const TransportOptions& opt = {});

// Orthogonal groups.
Verdict orth_decide(const Isopair& p);
U2Factorization orth_factor2(const Isopair& p, const TransportOptions& opt = {});

/// A model isopair assembled from indecomposable blocks, with a factorization.
struct FactoredModel {
  Isopair pair;
  U2Factorization factors;
  std::vector<std::size_t> blocks;  // block dimensions, in order
};
FactoredModel sp_model(const Isopair& p, int nfactors);
FactoredModel orth_model(const Isopair& p);

struct VerificationReport {
  bool square_zero = true;
  bool isometries = true;
  bool product = true;
  bool commutation = true;
  bool stabilization = true;
  std::vector<std::string> messages;
  bool ok() const { return square_zero && isometries && product && commutation && stabilization; }
};
/// With pair == nullptr only the general linear checks apply.
VerificationReport verify_factorization(const Matrix& u, const U2Factorization& f, const Isopair* pair = nullptr);

// Transport.
/// g with g from.u = to.u g and g^T to.G g = from.G. Source blocks (dims,
/// consecutive coordinates, each stable under u and regular) guide the search.
Matrix isometry_find(const Isopair& from, const Isopair& to, const TransportOptions& opt = {},
                     const std::vector<std::size_t>& blocks = {});
/// Calls fn on every isometry from -> to until it returns false. Returns the count visited.
std::uint64_t enumerate_isometries(const Isopair& from, const Isopair& to,
                                   const std::function<bool(const Matrix&)>& fn,
                                   const std::vector<std::size_t>& blocks = {});

/// Moves a model factorization onto p; TransportFailure on budget exhaustion.
U2Factorization transport_factorization(const FactoredModel& model, const Isopair& p, const TransportOptions& opt);

}  // namespace u2split

#endif

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

#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "pairgen.hpp"
#include "u2split/error.hpp"
#include "u2split/factor.hpp"
#include "u2split/isopair.hpp"

using namespace u2split;
using namespace testutil;

namespace {

Matrix M(const Field& f, std::initializer_list<std::initializer_list<long long>> r) { return Matrix::from_ints(f, r); }

Poly P(const Field& f, std::initializer_list<long long> c) { return Poly::from_ints(f, c); }

bool equiv(const BilForm& a, const BilForm& b) { return a.dim() == b.dim() && form_equivalent(a, b); }

BilForm quad(const Isopair& p, int r) { return quad_wall(p, 1, r); }

}  // namespace

TEST_CASE("isopair validation") {
  Field f = Field::prime(5);
  Isopair ok(1, BilForm::symmetric(M(f, {{1, 0}, {0, 1}})), M(f, {{0, 1}, {1, 0}}));
  CHECK(validate_isopair(ok).empty());
  Isopair bad(1, BilForm::symmetric(M(f, {{1, 0}, {0, 2}})), M(f, {{0, 1}, {1, 0}}));
  CHECK_FALSE(validate_isopair(bad).empty());
  CHECK_THROWS_AS(require_valid(bad), Error);
  CHECK_FALSE(validate_isopair(Isopair(-1, BilForm::symmetric(M(f, {{1, 0}, {0, 1}})), Matrix::identity(f, 2))).empty());
  Isopair degenerate(1, BilForm::symmetric(M(f, {{0}})), M(f, {{1}}));
  CHECK_FALSE(validate_isopair(degenerate).empty());
}

TEST_CASE("quadratic invariants: identity and -I") {
  Field f = Field::prime(5);
  BilForm b = BilForm::symmetric(M(f, {{1, 2, 0}, {2, 3, 0}, {0, 0, 4}}));
  Isopair p(1, b, Matrix::identity(f, 3));
  CHECK(equiv(quad(p, 1), b));
  CHECK(quad(p, 3).dim() == 0);
  CHECK_THROWS_AS(quad_wall(p, 1, 2), Error);

  Isopair s(-1, BilForm::skew(M(f, {{0, 1}, {-1, 0}})), -Matrix::identity(f, 2));
  WallData w = wall_data(s);
  CHECK(w.quad.empty());
  CHECK(w.quad_at(-1, 2).dim() == 0);
  CHECK(w.quad_at(1, 1).dim() == 0);
}

TEST_CASE("wall data of hyperbolic extensions") {
  Field f = Field::prime(3);
  Isopair h = hyperbolic_ext(jordan_block(f, 2, f.one()), 1);
  WallData w = wall_data(h);
  CHECK(w.jordan.size() == 1);
  CHECK(jordan_count(w.jordan, P(f, {-1, 1}), 2) == 2);
  CHECK(w.quad_at(1, 1).dim() == 0);
  CHECK(w.quad_at(1, 3).dim() == 0);

  // Hermitian invariants of H_eps(v) are hyperbolic.
  Poly p = P(f, {1, 0, 1});
  for (int eps : {1, -1}) {
    Matrix v = Matrix::block_diag(companion(p), companion(pow(p, 2)));
    Isopair hv = hyperbolic_ext(v, eps);
    for (int r : {1, 2}) {
      HermForm hf = herm_wall(hv, p, r);
      CHECK(herm_rank(hf) == 2);
      CHECK(herm_is_hyperbolic(hf));
    }
  }
}

TEST_CASE("rank identities on random pairs") {
  std::mt19937_64 rng(11);
  for (std::uint32_t q : {3u, 5u})
    for (int eps : {1, -1}) {
      PairGen gen{Field::prime(q), eps};
      for (int it = 0; it < 25; ++it) {
        Isopair p = gen(6, rng);
        REQUIRE(validate_isopair(p).empty());
        WallData w = wall_data(p);
        for (const auto& [key, form] : w.quad) {
          Poly lin = Poly::linear(p.field(), p.field().from_int(key.first));
          CHECK(static_cast<int>(rank(form.gram())) == jordan_count(w.jordan, lin, key.second));
          CHECK(is_regular(form));
        }
        for (const auto& [key, form] : w.herm) {
          CHECK(herm_rank(form) == jordan_count(w.jordan, key.first, key.second));
          CHECK(form.flavor() == (eps == 1 ? HermFlavor::hermitian : HermFlavor::skew_hermitian));
        }
      }
    }
}

TEST_CASE("sum rule for Wall data") {
  std::mt19937_64 rng(12);
  Field f = Field::prime(5);
  PairGen gen{f, 1};
  for (int it = 0; it < 15; ++it) {
    Isopair a = gen(3, rng), b = gen(3, rng);
    WallData wa = wall_data(a), wb = wall_data(b), ws = wall_data(orth_sum(a, b));
    CHECK(ws.jordan == jordan_sum(wa.jordan, wb.jordan));
    for (int eta : {1, -1})
      for (int r : {1, 3, 5}) {
        BilForm expect = orthogonal_sum(wa.quad_at(eta, r), wb.quad_at(eta, r));
        CHECK(equiv(ws.quad_at(eta, r), expect));
      }
  }
}

TEST_CASE("isometry test") {
  Field f = Field::prime(5);
  Isopair a(1, BilForm::symmetric(M(f, {{1, 0}, {0, 1}})), -Matrix::identity(f, 2));
  Isopair b(1, BilForm::symmetric(M(f, {{1, 0}, {0, 2}})), -Matrix::identity(f, 2));
  CHECK(isometric(a, a));
  CHECK_FALSE(isometric(a, b));

  std::mt19937_64 rng(13);
  for (std::uint32_t q : {3u, 5u})
    for (int eps : {1, -1}) {
      PairGen gen{Field::prime(q), eps};
      for (int it = 0; it < 20; ++it) {
        Isopair p = gen(6, rng);
        Isopair moved = rand_transport(p, rng);
        CHECK(isometric(p, moved));
        Matrix h = rand_isometry(p.gram(), eps == 1, rng);
        Isopair conj(eps, p.b(), h * p.u() * inverse(h));
        CHECK(isometric(p, conj));
      }
    }
}

TEST_CASE("non-isometric pairs with equal Jordan data") {
  Field f = Field::prime(3);
  BlockDescriptor d{BlockShape::unipotent_cyclic, Poly(f), 3, 1};
  Isopair a = model_isopair(f, 1, d, {f.one(), std::nullopt});
  Isopair b = model_isopair(f, 1, d, {f.from_int(2), std::nullopt});
  CHECK(wall_data(a).jordan == wall_data(b).jordan);
  CHECK_FALSE(isometric(a, b));
}

TEST_CASE("descent, twisted descent and folding: examples") {
  Field f = Field::prime(3);
  Isopair id(1, BilForm::symmetric(M(f, {{1, 0}, {0, 2}})), Matrix::identity(f, 2));
  CHECK(descent(id).dim() == 0);
  Isopair td = twisted_descent(id);
  CHECK(td.dim() == 2);
  CHECK(isometric(td, id));
  CHECK(isometric(folding(id, 1), id));

  BlockDescriptor d{BlockShape::unipotent_cyclic, Poly(f), 3, 1};
  Isopair c3 = model_isopair(f, 1, d, {f.from_int(2), std::nullopt});
  Isopair dd = descent(c3);
  CHECK(dd.dim() == 1);
  CHECK(equiv(quad(dd, 1), -quad(c3, 3)));
  CHECK(isometric(folding(c3, 3), c3));

  Isopair minus(1, id.b(), -Matrix::identity(f, 2));
  CHECK_THROWS_AS(descent(minus), Error);
}

TEST_CASE("descent relations on random unipotent pairs") {
  std::mt19937_64 rng(14);
  for (std::uint32_t q : {3u, 5u}) {
    PairGen gen{Field::prime(q), 1, true};
    for (int it = 0; it < 30; ++it) {
      Isopair p = gen(7, rng);
      Isopair d = descent(p);
      Isopair td = twisted_descent(p);
      for (int r = 1; r <= 7; r += 2) {
        CHECK(equiv(quad(d, r), -quad(p, r + 2)));
        if (r >= 3) CHECK(equiv(quad(td, r), -quad(p, r + 2)));
      }
      CHECK(equiv(quad(td, 1), orthogonal_sum(quad(p, 1), -quad(p, 3))));
      for (int k = 1; k <= 6; ++k) {
        Isopair fo = folding(p, k);
        for (int r = 1; r <= 9; r += 2) {
          if (r < k) {
            Scalar sign = p.field().from_int((k + r) % 2 == 0 ? 1 : -1);
            CHECK(equiv(quad(fo, r), orthogonal_sum(quad(p, r), quad(p, 2 * k - r).scaled(sign))));
          } else if (r == k) {
            CHECK(equiv(quad(fo, r), quad(p, r)));
          } else {
            CHECK(quad(fo, r).dim() == 0);
          }
        }
      }
    }
  }
}

TEST_CASE("Witt type of unipotent pairs") {
  std::mt19937_64 rng(15);
  for (std::uint32_t q : {3u, 5u}) {
    PairGen gen{Field::prime(q), 1, true};
    for (int it = 0; it < 100; ++it) {
      Isopair p = gen(6, rng);
      BilForm acc = BilForm::zero(p.field(), FormKind::symmetric);
      for (int l = 0; 2 * l + 1 <= 7; ++l) {
        BilForm ql = quad(p, 2 * l + 1);
        acc = orthogonal_sum(acc, l % 2 ? -ql : ql);
      }
      CHECK(equiv(anisotropic_part(p.b()), anisotropic_part(acc)));
    }
  }
}

TEST_CASE("model_sym_pair") {
  Field f = Field::prime(5);
  SymPairModel a = model_sym_pair(P(f, {-2, 1}), 1, P(f, {1}));
  CHECK(a.B.gram() == M(f, {{1}}));
  CHECK(a.C.gram() == M(f, {{0}}));
  CHECK(a.u0 == M(f, {{2}}));

  Field f3 = Field::prime(3);
  SymPairModel b = model_sym_pair(P(f3, {0, 1}), 1, P(f3, {1}));
  CHECK(inverse(b.B.gram()) * b.C.gram() == M(f3, {{-2}}));

  // r = 2: B(e1, q m(u0) e1) = e_m(alpha q) for every q of degree < 1.
  Poly m = P(f, {-2, 1});
  for (long long al = 1; al < 5; ++al) {
    SymPairModel c = model_sym_pair(m, 2, P(f, {al}));
    CHECK(c.u0 == companion(pow(m, 2)));
    Vec e1 = unit_vec(f, 2, 0);
    for (long long qq = 0; qq < 5; ++qq) {
      Vec y = poly_apply(P(f, {qq}) * m, c.u0, e1);
      CHECK(c.B(e1, y) == f.from_int(al * qq));
    }
  }
  CHECK_THROWS_AS(model_sym_pair(m, 1, m), Error);
}

TEST_CASE("model isopairs: shapes and values") {
  std::mt19937_64 rng(16);
  for (std::uint32_t q : {3u, 5u}) {
    Field f = Field::prime(q);
    for (int eps : {1, -1}) {
      for (int eta : {1, -1})
        for (int r = 1; r <= 4; ++r) {
          bool cyc = quad_admissible(eps, r);
          BlockDescriptor d{cyc ? BlockShape::unipotent_cyclic : BlockShape::unipotent_twin, Poly(f), r, eta};
          if (cyc) {
            Scalar alpha = rand_unit(f, rng);
            Isopair p = model_isopair(f, eps, d, {alpha, std::nullopt});
            BilForm w = quad_wall(p, eta, r);
            REQUIRE(w.dim() == 1);
            CHECK(w.gram()(0, 0) == alpha);
            CHECK(static_cast<int>(p.dim()) == r);
          } else {
            Isopair p = model_isopair(f, eps, d);
            CHECK(jordan_count(wall_data(p).jordan, Poly::linear(f, f.from_int(eta)), r) == 2);
          }
          BlockDescriptor wrong = d;
          wrong.shape = cyc ? BlockShape::unipotent_twin : BlockShape::unipotent_cyclic;
          CHECK_THROWS_AS(model_isopair(f, eps, wrong), Error);
        }
      for (const Poly& pal : palindromials(f, 2))
        for (int r = 1; r <= 2; ++r) {
          Tower t(pal);
          Poly alpha = rand_herm_value(t, eps, rng);
          Isopair p = model_isopair(f, eps, {BlockShape::palindromial_cyclic, pal, r, 1}, {std::nullopt, alpha});
          HermForm h = herm_wall(p, pal, r);
          REQUIRE(h.dim() == 1);
          CHECK(h.entry(0, 0) == alpha);
        }
    }
    for (const Poly& p1 : unpaired_irreducibles(f, q == 3 ? 2 : 1)) {
      Isopair p = model_isopair(f, -1, {BlockShape::reciprocal_pair, p1, 2, 1});
      CHECK(jordan_count(wall_data(p).jordan, p1, 2) == 1);
      CHECK(jordan_count(wall_data(p).jordan, reciprocal(p1), 2) == 1);
    }
  }
  Field f = Field::prime(3);
  CHECK_THROWS_AS(model_isopair(f, 1, {BlockShape::reciprocal_pair, P(f, {1, 0, 1}), 1, 1}), Error);
}

TEST_CASE("boxed model represents beta") {
  // The rank-1 skew-Hermitian invariant of the boxed product of the
  // symmetric pair model takes the value (1-t)(1+t)^{-1} alpha(t + 1/t) at (e_1, 0).
  std::mt19937_64 rng(17);
  Field f = Field::prime(3);
  for (Poly p : {P(f, {1, 0, 1}), P(f, {1, 1, 1, 1, 1})}) {
    Tower tower(p);
    Poly m = r_inverse(p);
    for (int r = 1; r <= 2; ++r)
      for (int it = 0; it < 6; ++it) {
        Poly alpha = rand_poly(f, 3, rng);
        if ((alpha % m).is_zero()) continue;
        SymPairModel sp = model_sym_pair(m, r, alpha);
        BoxedProduct bp = boxed_product(sp.B, sp.C, -1);
        std::size_t n = sp.B.dim();
        Vec x = unit_vec(f, 2 * n, 0);
        Poly got = herm_value(bp.pair, tower, r, x, x);
        Poly one_minus = tower.reduce(P(f, {1, -1}));
        Poly one_plus = tower.reduce(P(f, {1, 1}));
        Poly s = tower.add(tower.t(), tower.t_inv());
        Poly alpha_s = tower.reduce(compose(alpha, s));
        Poly beta = tower.mul(tower.mul(one_minus, tower.inv(one_plus)), alpha_s);
        CHECK(got == beta);
        CHECK(herm_rank(herm_wall(bp.pair, p, r)) == 1);
      }
  }
}

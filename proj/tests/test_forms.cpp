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

#include <functional>
#include <random>

#include "helpers.hpp"
#include "u2split/error.hpp"
#include "u2split/forms.hpp"

using namespace u2split;

namespace {

Matrix M(const Field& f, std::initializer_list<std::initializer_list<long long>> r) { return Matrix::from_ints(f, r); }

BilForm diagform(const Field& f, const std::vector<long long>& d) {
  std::vector<Scalar> s;
  for (long long x : d) s.push_back(f.from_int(x));
  return BilForm::symmetric(Matrix::diag(f, s));
}

// Every vector of F_p^n, by index.
Vec vec_from_code(const Field& f, std::size_t n, std::size_t code) {
  Vec v;
  for (std::size_t i = 0; i < n; ++i) {
    v.push_back(f.from_int(static_cast<long long>(code % f.modulus())));
    code /= f.modulus();
  }
  return v;
}

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

// Largest dimension of a totally isotropic subspace, by exhaustive search (dim <= 4).
int brute_witt_index(const BilForm& f) {
  const std::size_t n = f.dim();
  std::vector<Vec> iso;
  for (std::size_t c = 1; c < ipow(f.field().modulus(), n); ++c) {
    Vec v = vec_from_code(f.field(), n, c);
    if (f(v, v).is_zero()) iso.push_back(v);
  }
  if (iso.empty()) return 0;
  for (std::size_t i = 0; i < iso.size(); ++i)
    for (std::size_t j = i + 1; j < iso.size(); ++j)
      if (f(iso[i], iso[j]).is_zero() && rank(Matrix::from_columns(f.field(), n, {iso[i], iso[j]})) == 2) return 2;
  return 1;
}

// Some X with X^T G_b X = G_a, by exhaustive search.
bool brute_subform(const BilForm& a, const BilForm& b) {
  const Field& f = a.field();
  const std::size_t rows = b.dim(), cols = a.dim();
  if (cols == 0) return true;
  const std::size_t total = ipow(f.modulus(), rows * cols);
  for (std::size_t c = 0; c < total; ++c) {
    Vec e = vec_from_code(f, rows * cols, c);
    Matrix x(f, rows, cols);
    for (std::size_t i = 0; i < rows * cols; ++i) x(i / cols, i % cols) = e[i];
    if (x.transpose() * b.gram() * x == a.gram()) return true;
  }
  return false;
}

void check_decomposition(const BilForm& f) {
  WittDecomposition w = witt_decompose(f);
  CHECK(w.index == witt_index_closed_form(f));
  CHECK(2 * w.index + static_cast<int>(w.anisotropic.dim()) == static_cast<int>(f.dim()));
  CHECK(w.anisotropic.dim() <= 2);
  if (w.anisotropic.dim() > 0) CHECK_FALSE(isotropic_vector(w.anisotropic).has_value());
  std::vector<Vec> cols;
  for (auto& [e, g] : w.hyperbolic) {
    cols.push_back(e);
    cols.push_back(g);
  }
  for (auto& c : w.anisotropic_basis.columns()) cols.push_back(c);
  const Field& F = f.field();
  Matrix p = Matrix::from_columns(F, f.dim(), cols);
  Matrix expect = w.anisotropic.gram();
  for (int i = 0; i < w.index; ++i) expect = Matrix::block_diag(M(F, {{0, 1}, {1, 0}}), expect);
  CHECK(p.transpose() * f.gram() * p == expect);
  Matrix wit;
  CHECK(form_equivalent(BilForm::symmetric(expect), f, &wit));
  CHECK(wit.transpose() * f.gram() * wit == expect);
}

}  // namespace

TEST_CASE("validate_form examples") {
  Field f = Field::prime(3);
  CHECK(validate_form(diagform(f, {1, 1})).regular);
  CHECK(validate_form(BilForm::skew(M(f, {{0, 1}, {-1, 0}}))).regular);
  FormCheck d = validate_form(diagform(f, {1, 0}));
  CHECK_FALSE(d.regular);
  CHECK(d.radical == Subspace::span(f, 2, {unit_vec(f, 2, 1)}));
  CHECK_THROWS_AS(BilForm::symmetric(M(f, {{0, 1}, {2, 0}})), Error);
  CHECK_THROWS_AS(BilForm::skew(M(f, {{1, 1}, {-1, 0}})), Error);
}

TEST_CASE("adjoint examples and properties") {
  Field f5 = Field::prime(5);
  BilForm plane = BilForm::skew(M(f5, {{0, 1}, {-1, 0}}));
  CHECK(adjoint(Matrix::identity(f5, 2), plane).is_identity());
  CHECK(adjoint(M(f5, {{2, 0}, {0, 1}}), plane) == M(f5, {{1, 0}, {0, 2}}));
  CHECK_THROWS_AS(adjoint(Matrix::identity(f5, 2), diagform(f5, {1, 0})), Error);
  std::mt19937_64 rng(7);
  for (int it = 0; it < 30; ++it) {
    for (bool sym : {true, false}) {
      std::size_t n = sym ? 1 + rng() % 4 : 2 * (1 + rng() % 2);
      Matrix g = sym ? testutil::regular_symmetric(f5, n, rng) : testutil::regular_skew(f5, n, rng);
      BilForm b(g, sym ? FormKind::symmetric : FormKind::skewsymmetric);
      Matrix u = testutil::rand_matrix(f5, n, n, rng), v = testutil::rand_matrix(f5, n, n, rng);
      CHECK(adjoint(u * v, b) == adjoint(v, b) * adjoint(u, b));
      Vec x = testutil::rand_matrix(f5, n, 1, rng).column(0), y = testutil::rand_matrix(f5, n, 1, rng).column(0);
      CHECK(b(adjoint(u, b) * x, y) == b(x, u * y));
      Matrix iso = testutil::rand_isometry(g, sym, rng);
      CHECK(iso.transpose() * g * iso == g);
      CHECK(adjoint(iso, b) == inverse(iso));
    }
  }
}

TEST_CASE("diagonalize handles degenerate forms") {
  Field f = Field::prime(7);
  std::mt19937_64 rng(3);
  for (int it = 0; it < 40; ++it) {
    std::size_t n = 1 + rng() % 5;
    Matrix g = testutil::symmetric_random(f, n, rng);
    Diagonalization d = diagonalize(BilForm::symmetric(g));
    CHECK(is_invertible(d.basis));
    CHECK(d.basis.transpose() * g * d.basis == Matrix::diag(f, d.values));
  }
  Field q = Field::rationals();
  Matrix g = M(q, {{0, 1}, {1, 0}});
  Diagonalization d = diagonalize(BilForm::symmetric(g));
  CHECK(d.basis.transpose() * g * d.basis == Matrix::diag(q, d.values));
}

TEST_CASE("Witt index examples") {
  Field f5 = Field::prime(5), f3 = Field::prime(3);
  CHECK(witt_index(diagform(f5, {1, -1})) == 1);
  CHECK(witt_index(diagform(f5, {1, 1})) == 1);
  CHECK(witt_index(diagform(f3, {1, 1})) == 0);
  CHECK(witt_index(BilForm::zero(f3)) == 0);
  CHECK_THROWS_AS(witt_index(diagform(f3, {1, 0})), Error);
  CHECK_THROWS_AS(witt_index(BilForm::skew(M(f3, {{0, 1}, {-1, 0}}))), Error);
  CHECK_THROWS_AS(witt_index(diagform(Field::rationals(), {1, 1})), Error);
}

TEST_CASE("constructive Witt index agrees with the closed form on all diagonal forms") {
  for (unsigned p : {3u, 5u, 7u}) {
    Field f = Field::prime(p);
    long long z = f.nonresidue().residue();
    for (std::size_t n = 0; n <= 6; ++n)
      for (std::size_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<long long> d;
        for (std::size_t i = 0; i < n; ++i) d.push_back(mask >> i & 1 ? z : 1);
        BilForm b = diagform(f, d);
        CHECK(witt_index(b) == witt_index_closed_form(b));
      }
  }
}

TEST_CASE("Witt index agrees with exhaustive isotropic search") {
  for (unsigned p : {3u, 5u}) {
    Field f = Field::prime(p);
    std::mt19937_64 rng(p);
    for (int it = 0; it < 40; ++it) {
      std::size_t n = 1 + rng() % (p == 3 ? 4 : 3);
      BilForm b = BilForm::symmetric(testutil::regular_symmetric(f, n, rng));
      CHECK(witt_index(b) == brute_witt_index(b));
    }
  }
}

TEST_CASE("Witt decomposition reconstructs the form") {
  for (unsigned p : {3u, 5u, 7u, 11u}) {
    Field f = Field::prime(p);
    std::mt19937_64 rng(100 + p);
    for (int it = 0; it < 25; ++it) check_decomposition(BilForm::symmetric(testutil::regular_symmetric(f, 1 + rng() % 6, rng)));
  }
}

TEST_CASE("form equivalence") {
  Field f5 = Field::prime(5);
  CHECK(form_equivalent(diagform(f5, {1, 1}), diagform(f5, {2, 2})));
  CHECK_FALSE(form_equivalent(diagform(f5, {1}), diagform(f5, {2})));
  CHECK_FALSE(form_equivalent(diagform(f5, {1}), diagform(f5, {1, 1})));
  Matrix w;
  BilForm a = diagform(f5, {1, 2, 3});
  CHECK(form_equivalent(a, a, &w));
  CHECK(w.transpose() * a.gram() * w == a.gram());
  std::mt19937_64 rng(11);
  for (unsigned p : {3u, 7u, 13u}) {
    Field f = Field::prime(p);
    for (int it = 0; it < 25; ++it) {
      std::size_t n = 1 + rng() % 5;
      Matrix g = testutil::regular_symmetric(f, n, rng);
      Matrix c = testutil::rand_invertible(f, n, rng);
      BilForm x = BilForm::symmetric(g), y = BilForm::symmetric(c.transpose() * g * c);
      Matrix wit;
      REQUIRE(form_equivalent(y, x, &wit));
      CHECK(wit.transpose() * g * wit == y.gram());
      BilForm other = BilForm::symmetric(testutil::regular_symmetric(f, n, rng));
      CHECK(form_equivalent(x, other) == (f.is_square(det(g)) == f.is_square(det(other.gram()))));
      Matrix s = testutil::regular_skew(f, 2 * (1 + n % 2), rng);
      Matrix t = testutil::regular_skew(f, s.rows(), rng);
      REQUIRE(form_equivalent(BilForm::skew(s), BilForm::skew(t), &wit));
      CHECK(wit.transpose() * t * wit == s);
    }
  }
}

TEST_CASE("canonical basis and square classes") {
  Field f = Field::prime(7);
  std::mt19937_64 rng(5);
  for (int it = 0; it < 20; ++it) {
    std::size_t n = 1 + rng() % 5;
    BilForm b = BilForm::symmetric(testutil::regular_symmetric(f, n, rng));
    Matrix c = canonical_basis(b);
    Matrix d = c.transpose() * b.gram() * c;
    for (std::size_t i = 0; i + 1 < n; ++i) CHECK(d(i, i).is_one());
    CHECK(f.is_square(d(n - 1, n - 1)) == f.is_square(det(b.gram())));
    Scalar prod = f.one();
    for (auto& s : square_class_tuple(b)) prod *= s;
    CHECK(f.is_square(prod) == f.is_square(det(b.gram())));
  }
  BilForm a = anisotropic_part(diagform(Field::prime(3), {1, 1}));
  CHECK(a.gram() == M(Field::prime(3), {{1, 0}, {0, 1}}));
}

TEST_CASE("hyperbolicity") {
  Field f3 = Field::prime(3), f5 = Field::prime(5);
  CHECK(is_hyperbolic(diagform(f5, {1, -1})));
  CHECK(is_hyperbolic(BilForm::zero(f5)));
  CHECK_FALSE(is_hyperbolic(diagform(f3, {1, 1})));
  CHECK_FALSE(is_hyperbolic(diagform(f3, {1})));
}

TEST_CASE("Witt-simplifies examples") {
  Field f3 = Field::prime(3), f5 = Field::prime(5);
  CHECK(witt_simplifies(diagform(f5, {2, 3}), BilForm::zero(f5)));
  CHECK(witt_simplifies(diagform(f3, {1}), diagform(f3, {-1})));
  CHECK_FALSE(witt_simplifies(diagform(f5, {1}), diagform(f5, {2})));
}

TEST_CASE("Witt-simplifies matches the subform characterization over F_3") {
  Field f = Field::prime(3);
  std::vector<std::vector<long long>> forms;
  for (std::size_t n = 0; n <= 3; ++n)
    for (std::size_t mask = 0; mask < (1u << n); ++mask) {
      std::vector<long long> d;
      for (std::size_t i = 0; i < n; ++i) d.push_back(mask >> i & 1 ? 2 : 1);
      forms.push_back(d);
    }
  for (auto& db : forms)
    for (auto& dp : forms) {
      BilForm b = diagform(f, db), bp = diagform(f, dp);
      bool expect = brute_subform(anisotropic_part(bp), -b);
      CHECK(witt_simplifies(b, bp) == expect);
    }
}

TEST_CASE("hermitian forms") {
  Field f = Field::prime(3);
  TowerPtr L = make_tower(Poly::from_ints(f, {1, 0, 1}));
  Poly one = L->one(), zero(f);
  HermForm id2(L, 2, {one, zero, zero, one}, HermFlavor::hermitian);
  CHECK(herm_is_hyperbolic(id2));
  // Exhaustive isotropic vectors in L^2 for the identity form.
  int iso = 0;
  for (std::size_t c = 1; c < 81; ++c) {
    Vec v = vec_from_code(f, 4, c);
    Poly x = L->from_coords({v[0], v[1]}), y = L->from_coords({v[2], v[3]});
    Poly h = L->reduce(L->mul(x, L->conj(x)) + L->mul(y, L->conj(y)));
    if (h.degree() < 0) ++iso;
  }
  CHECK(iso > 0);
  CHECK_FALSE(herm_is_hyperbolic(HermForm(L, 1, {one}, HermFlavor::hermitian)));
  CHECK(herm_is_hyperbolic(HermForm(L, 0, {}, HermFlavor::hermitian)));
  HermForm sk(L, 1, {L->eta()}, HermFlavor::skew_hermitian);
  CHECK(herm_normalized(sk).flavor() == HermFlavor::hermitian);
  CHECK_FALSE(herm_is_hyperbolic(sk));
  CHECK_THROWS_AS(HermForm(L, 1, {L->eta()}, HermFlavor::hermitian), Error);
  CHECK_THROWS_AS(herm_is_hyperbolic(HermForm(L, 2, {one, one, one, one}, HermFlavor::hermitian)), Error);
}

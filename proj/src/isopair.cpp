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

#include "u2split/isopair.hpp"

#include <sstream>

#include "u2split/error.hpp"

namespace u2split {

FormKind kind_for_eps(int eps) { return eps == 1 ? FormKind::symmetric : FormKind::skewsymmetric; }

Isopair::Isopair(int eps, BilForm b, Matrix u) : eps_(eps), b_(std::move(b)), u_(std::move(u)) {
  if (eps_ != 1 && eps_ != -1) fail(ErrorCode::BadParameters, "eps must be +1 or -1");
  if (!u_.is_square() || u_.rows() != b_.dim()) fail(ErrorCode::DimensionMismatch, "u and gram sizes differ");
  if (u_.field() != b_.field()) fail(ErrorCode::FieldMismatch, "u and gram over different fields");
}

Isopair Isopair::zero(const Field& f, int eps) { return Isopair(eps, BilForm::zero(f, kind_for_eps(eps)), Matrix(f, 0, 0)); }

std::vector<std::string> validate_isopair(const Isopair& p) {
  std::vector<std::string> out;
  if (p.b().kind() != kind_for_eps(p.eps())) out.push_back("form kind does not match eps");
  if (!is_regular(p.b())) out.push_back("form is degenerate");
  if (!is_invertible(p.u())) out.push_back("u is not invertible");
  if (p.u().transpose() * p.gram() * p.u() != p.gram()) out.push_back("u is not a b-isometry");
  if (p.eps() == -1 && p.dim() % 2) out.push_back("symplectic space of odd dimension");
  return out;
}

void require_valid(const Isopair& p) {
  auto v = validate_isopair(p);
  if (v.empty()) return;
  std::ostringstream os;
  os << "invalid isopair:";
  for (auto& s : v) os << ' ' << s << ';';
  fail(ErrorCode::InvalidIsopair, os.str());
}

Isopair orth_sum(const Isopair& a, const Isopair& b) {
  if (a.eps() != b.eps()) fail(ErrorCode::EpsMismatch, "orthogonal sum of isopairs with different eps");
  return Isopair(a.eps(), orthogonal_sum(a.b(), b.b()), Matrix::block_diag(a.u(), b.u()));
}

Isopair induced(const Isopair& p, const Subspace& w) {
  if (!w.stable_under(p.u())) fail(ErrorCode::NotStable, "subspace is not stable under u");
  Subspace rad = w.intersect(orthogonal(w, p.gram()));
  Quotient q(w, rad);
  Isopair out(p.eps(), BilForm(q.induced_form(p.gram()), p.b().kind()), q.induced_map(p.u()));
  require_valid(out);
  return out;
}

bool quad_admissible(int eps, int r) { return r >= 1 && (eps == 1 ? r % 2 == 1 : r % 2 == 0); }

namespace {

// Ker f(a)^r / (Ker f(a)^{r-1} + (Im f(a) cap Ker f(a)^r))
Quotient wall_quotient(const Matrix& fa, int r) {
  Matrix pr = pow(fa, static_cast<unsigned>(r));
  Matrix pr1 = pow(fa, static_cast<unsigned>(r - 1));
  Subspace kr = kernel(pr), kr1 = kernel(pr1);
  Subspace bottom = kr1 + image(fa).intersect(kr);
  return Quotient(kr, bottom);
}

Matrix inv_plus(const Matrix& u) { return u + inverse(u); }

}  // namespace

BilForm quad_wall(const Isopair& p, int eta, int r) {
  if (eta != 1 && eta != -1) fail(ErrorCode::BadParameters, "eta must be +1 or -1");
  if (!quad_admissible(p.eps(), r)) fail(ErrorCode::ParityMismatch, "quadratic invariant not defined for this parity");
  const Field& f = p.field();
  const std::size_t n = p.dim();
  Matrix id = Matrix::identity(f, n);
  Matrix ueta = p.u() - id.scaled(f.from_int(eta));
  Matrix vshift = inv_plus(p.u()) - id.scaled(f.from_int(2 * eta));
  int k = p.eps() == 1 ? (r - 1) / 2 : (r - 2) / 2;
  Matrix t = pow(vshift, static_cast<unsigned>(k));
  if (p.eps() == -1) t = (p.u() - inverse(p.u())) * t;
  Quotient q = wall_quotient(ueta, r);
  BilForm out = BilForm::symmetric(q.reps().transpose() * p.gram() * t * q.reps());
  if (!is_regular(out)) fail(ErrorCode::VerificationFailed, "quadratic Wall invariant came out degenerate");
  return out;
}

namespace {

void require_wall_modulus(const Poly& pal) {
  const Field& f = pal.field();
  if (!pal.is_monic() || pal.degree() < 2 || !is_palindromial(pal) || !is_irreducible(pal) ||
      pal == Poly::linear(f, f.one()) || pal == Poly::linear(f, -f.one()))
    fail(ErrorCode::BadModulus, "Hermitian invariants need an irreducible palindromial other than t +- 1");
}

// Gram of the F-bilinear map (x, y) -> f_p(t^{j+k}) used to recover H from its traces.
Matrix trace_matrix(const Tower& L) {
  const std::size_t n = 2 * L.d();
  const Field& f = L.field();
  Matrix t(f, n, n);
  Poly tp = L.one();
  std::vector<Scalar> vals;
  for (std::size_t k = 0; k < 2 * n; ++k) {
    vals.push_back(L.f_p(tp));
    tp = L.mul(tp, L.t());
  }
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) t(j, k) = vals[j + k];
  return t;
}

Poly solve_herm_entry(const Tower& L, const Matrix& trace, const Vec& rhs) {
  auto h = solve(trace, rhs);
  if (!h) fail(ErrorCode::VerificationFailed, "trace system is singular");
  return L.from_coords(*h);
}

}  // namespace

Poly herm_value(const Isopair& p, const Tower& L, int r, const Vec& x, const Vec& y) {
  Matrix mv = poly_eval(L.m(), inv_plus(p.u()));
  Matrix w = p.gram() * pow(mv, static_cast<unsigned>(r - 1));
  Vec rhs;
  Vec yl = y;
  for (int l = 0; l < 2 * L.d(); ++l) {
    rhs.push_back(bilinear(x, w, yl));
    yl = p.u() * yl;
  }
  return solve_herm_entry(L, trace_matrix(L), rhs);
}

HermForm herm_wall(const Isopair& p, const Poly& pal, int r) {
  require_wall_modulus(pal);
  if (r < 1) fail(ErrorCode::BadParameters, "r must be positive");
  TowerPtr L = make_tower(pal);
  const HermFlavor flavor = p.eps() == 1 ? HermFlavor::hermitian : HermFlavor::skew_hermitian;
  Matrix mv = poly_eval(L->m(), inv_plus(p.u()));
  Quotient q = wall_quotient(mv, r);
  const Field& f = p.field();
  const std::size_t deg = 2 * L->d();
  Matrix ubar = q.induced_map(p.u());
  Matrix gbar = q.induced_form(p.gram() * pow(mv, static_cast<unsigned>(r - 1)));
  // Greedy L-basis of the quotient: x, ubar x, ..., ubar^{2d-1} x span an L-line.
  std::vector<Vec> basis;
  Subspace spanned(f, q.dim());
  for (std::size_t i = 0; i < q.dim() && spanned.dim() < q.dim(); ++i) {
    Vec x = unit_vec(f, q.dim(), i);
    if (spanned.contains(x)) continue;
    std::vector<Vec> line;
    Vec y = x;
    for (std::size_t l = 0; l < deg; ++l) {
      line.push_back(y);
      y = ubar * y;
    }
    spanned = spanned + Subspace::span(f, q.dim(), line);
    basis.push_back(x);
  }
  if (basis.size() * deg != q.dim()) fail(ErrorCode::VerificationFailed, "quotient is not an L-vector space");
  Matrix trace = trace_matrix(*L);
  const std::size_t k = basis.size();
  std::vector<Poly> gram;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      Vec rhs;
      Vec yl = basis[j];
      for (std::size_t l = 0; l < deg; ++l) {
        rhs.push_back(bilinear(basis[i], gbar, yl));
        yl = ubar * yl;
      }
      gram.push_back(solve_herm_entry(*L, trace, rhs));
    }
  return HermForm(L, k, gram, flavor);
}

BilForm WallData::quad_at(int eta, int r) const {
  auto it = quad.find({eta, r});
  if (it == quad.end()) return BilForm::zero(field);
  return it->second;
}

WallData wall_data(const Isopair& p) {
  require_valid(p);
  const Field& f = p.field();
  WallData w;
  w.eps = p.eps();
  w.field = f;
  w.jordan = jordan_numbers(p.u());
  for (int eta : {1, -1}) {
    Poly lin = Poly::linear(f, f.from_int(eta));
    int top = jordan_max_size(w.jordan, lin);
    for (int r = 1; r <= top; ++r) {
      if (!quad_admissible(p.eps(), r)) continue;
      BilForm q = quad_wall(p, eta, r);
      if (static_cast<int>(q.dim()) != jordan_count(w.jordan, lin, r))
        fail(ErrorCode::VerificationFailed, "quadratic invariant rank differs from the Jordan number");
      w.quad.emplace(std::make_pair(eta, r), q);
    }
  }
  for (const Poly& pr : jordan_primes(w.jordan)) {
    if (pr.degree() < 2 || !is_palindromial(pr)) continue;
    int top = jordan_max_size(w.jordan, pr);
    for (int r = 1; r <= top; ++r) {
      HermForm h = herm_wall(p, pr, r);
      if (static_cast<int>(h.dim()) != jordan_count(w.jordan, pr, r))
        fail(ErrorCode::VerificationFailed, "Hermitian invariant rank differs from the Jordan number");
      w.herm.emplace(std::make_pair(pr, r), h);
    }
  }
  return w;
}

bool isometric(const Isopair& a, const Isopair& b) {
  if (!a.field().is_prime()) fail(ErrorCode::UnsupportedField, "isometry test needs F_p");
  if (a.eps() != b.eps() || a.dim() != b.dim() || a.field() != b.field()) return false;
  WallData wa = wall_data(a), wb = wall_data(b);
  if (wa.jordan != wb.jordan) return false;
  for (auto& [key, form] : wa.quad)
    if (!form_equivalent(form, wb.quad_at(key.first, key.second))) return false;
  for (auto& [key, form] : wb.quad)
    if (!form_equivalent(form, wa.quad_at(key.first, key.second))) return false;
  return true;
}

bool is_unipotent(const Matrix& u) {
  Matrix n = u - Matrix::identity(u.field(), u.rows());
  return pow(n, static_cast<unsigned>(u.rows())).is_zero();
}

namespace {
Matrix unipotent_part(const Isopair& p) {
  if (!is_unipotent(p.u())) fail(ErrorCode::NotUnipotent, "u - 1 is not nilpotent");
  return p.u() - Matrix::identity(p.field(), p.dim());
}
}  // namespace

Isopair descent(const Isopair& p) { return induced(p, image(unipotent_part(p))); }

Isopair twisted_descent(const Isopair& p) {
  Matrix n = unipotent_part(p);
  return induced(p, kernel(n) + image(n));
}

Isopair folding(const Isopair& p, int k) {
  if (k < 1) fail(ErrorCode::BadParameters, "folding needs k >= 1");
  Matrix n = unipotent_part(p);
  return induced(p, kernel(pow(n, static_cast<unsigned>(k))));
}

}  // namespace u2split

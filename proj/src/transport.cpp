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

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <string>

#include "u2split/factor.hpp"

namespace u2split {

namespace {

using U = std::uint32_t;
using IVec = std::vector<U>;

struct ModP {
  U p;
  U add(U a, U b) const { return static_cast<U>((static_cast<std::uint64_t>(a) + b) % p); }
  U sub(U a, U b) const { return a >= b ? a - b : a + p - b; }
  U mul(U a, U b) const { return static_cast<U>(static_cast<std::uint64_t>(a) * b % p); }
  U inv(U a) const {
    U r = 1, e = p - 2, b = a;
    while (e) {
      if (e & 1) r = mul(r, b);
      b = mul(b, b);
      e >>= 1;
    }
    return r;
  }
};

// Row-major n x n.
struct IMat {
  std::size_t n = 0;
  IVec a;
  U operator()(std::size_t i, std::size_t j) const { return a[i * n + j]; }
};

IMat to_imat(const Matrix& m) {
  IMat out{m.rows(), IVec(m.rows() * m.cols())};
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.a[i * m.cols() + j] = m(i, j).residue();
  return out;
}


IVec apply(const ModP& f, const IMat& m, const IVec& x) {
  IVec y(m.n, 0);
  for (std::size_t i = 0; i < m.n; ++i) {
    std::uint64_t acc = 0;
    for (std::size_t j = 0; j < m.n; ++j) acc += static_cast<std::uint64_t>(m.a[i * m.n + j]) * x[j];
    y[i] = static_cast<U>(acc % f.p);
  }
  return y;
}

// x^T m
IVec row_apply(const ModP& f, const IVec& x, const IMat& m) {
  IVec y(m.n, 0);
  for (std::size_t j = 0; j < m.n; ++j) {
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < m.n; ++i) acc += static_cast<std::uint64_t>(x[i]) * m.a[i * m.n + j];
    y[j] = static_cast<U>(acc % f.p);
  }
  return y;
}

U idot(const ModP& f, const IVec& a, const IVec& b) {
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += static_cast<std::uint64_t>(a[i]) * b[i];
  return static_cast<U>(acc % f.p);
}

// Affine solution set {y0 + N z} of rows . y = rhs.
struct Affine {
  IVec y0;
  std::vector<IVec> basis;
};

std::optional<Affine> solve_affine(const ModP& f, std::size_t n, std::vector<IVec> rows, IVec rhs) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    std::swap(rhs[piv], rhs[r]);
    U iv = f.inv(rows[r][c]);
    for (auto& x : rows[r]) x = f.mul(x, iv);
    rhs[r] = f.mul(rhs[r], iv);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      U m = rows[i][c];
      for (std::size_t k = 0; k < n; ++k) rows[i][k] = f.sub(rows[i][k], f.mul(m, rows[r][k]));
      rhs[i] = f.sub(rhs[i], f.mul(m, rhs[r]));
    }
    pivots.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows.size(); ++i)
    if (rhs[i] != 0) return std::nullopt;
  Affine out;
  out.y0.assign(n, 0);
  for (std::size_t i = 0; i < r; ++i) out.y0[pivots[i]] = rhs[i];
  std::vector<bool> is_piv(n, false);
  for (auto c : pivots) is_piv[c] = true;
  for (std::size_t c = 0; c < n; ++c) {
    if (is_piv[c]) continue;
    IVec v(n, 0);
    v[c] = 1;
    for (std::size_t i = 0; i < r; ++i) v[pivots[i]] = f.sub(0, rows[i][c]);
    out.basis.push_back(std::move(v));
  }
  return out;
}

struct Generator {
  std::size_t unit;
  std::size_t deg;
  IMat annihilator;  // d(u') on the target
  Vec x;             // source generator
  // src_self[k] = G(x, u^k x), k = 0..deg-1
  IVec src_self;
};

struct Search {
  ModP f;
  std::size_t n;
  IMat g2, u2, u2inv;  // target
  std::vector<Generator> gens;
  // src_cross[j][i][k + deg_i - 1] = G(x_i, u^k x_j) for earlier i in the same unit
  std::vector<std::vector<IVec>> src_cross;
  std::vector<std::size_t> unit_first;  // first generator index of each generator's unit
  std::uint64_t budget, tried = 0;
  std::mt19937_64 rng;
  bool exhausted = false;

  std::vector<IVec> images;                // y_j
  std::vector<std::vector<IVec>> orbit;    // u'^k y_j
  std::function<bool(const std::vector<std::vector<IVec>>&)> on_leaf;

  std::vector<IVec> powers(const IVec& y, std::size_t count) const {
    std::vector<IVec> out{y};
    for (std::size_t k = 1; k < count; ++k) out.push_back(apply(f, u2, out.back()));
    return out;
  }

  // Returns false to stop the whole search.
  bool place(std::size_t j) {
    if (j == gens.size()) return on_leaf(orbit);
    const Generator& gen = gens[j];
    std::vector<IVec> rows;
    IVec rhs;
    for (std::size_t i = 0; i < n; ++i) {
      rows.emplace_back(gen.annihilator.a.begin() + static_cast<std::ptrdiff_t>(i * n),
                        gen.annihilator.a.begin() + static_cast<std::ptrdiff_t>((i + 1) * n));
      rhs.push_back(0);
    }
    for (std::size_t i = 0; i < j; ++i) {
      bool same_unit = gens[i].unit == gen.unit;
      if (!same_unit) {
        for (const auto& z : orbit[i]) {
          rows.push_back(row_apply(f, z, g2));
          rhs.push_back(0);
        }
        continue;
      }
      // G'(y_i, u'^k y_j) for k = -(deg_i - 1) .. deg_j - 1
      const IVec& want = src_cross[j][i];
      std::size_t di = gens[i].deg;
      for (std::size_t a = 0; a < di; ++a) {  // k = -a: G'(u'^a y_i, y_j)
        rows.push_back(row_apply(f, orbit[i][a], g2));
        rhs.push_back(want[di - 1 - a]);
      }
      IVec row = row_apply(f, images[i], g2);
      for (std::size_t k = 1; k < gen.deg; ++k) {  // k > 0: (y_i^T G') u'^k
        row = row_apply(f, row, u2);
        rows.push_back(row);
        rhs.push_back(want[di - 1 + k]);
      }
    }
    auto aff = solve_affine(f, n, std::move(rows), std::move(rhs));
    if (!aff) return true;
    std::size_t e = aff->basis.size();
    // Candidate count q^e, saturating.
    std::uint64_t total = 1;
    bool huge = false;
    for (std::size_t i = 0; i < e; ++i) {
      if (total > (1ULL << 20) / f.p) {
        huge = true;
        break;
      }
      total *= f.p;
    }
    std::uint64_t stride = 1, offset = 0;
    if (!huge && total > 1) {
      do stride = 1 + rng() % (total - 1);
      while (std::gcd(stride, total) != 1);
      offset = rng() % total;
    }
    std::uint64_t count = huge ? budget : total;
    IVec z(e);
    for (std::uint64_t c = 0; c < count; ++c) {
      if (tried >= budget) {
        exhausted = true;
        return false;
      }
      ++tried;
      if (huge) {
        for (auto& x : z) x = static_cast<U>(rng() % f.p);
      } else {
        std::uint64_t code = (c * stride + offset) % total;
        for (auto& x : z) {
          x = static_cast<U>(code % f.p);
          code /= f.p;
        }
      }
      IVec y = aff->y0;
      for (std::size_t b = 0; b < e; ++b)
        if (z[b])
          for (std::size_t i = 0; i < n; ++i) y[i] = f.add(y[i], f.mul(z[b], aff->basis[b][i]));
      std::vector<IVec> orb = powers(y, gen.deg);
      IVec gy = row_apply(f, y, g2);
      bool ok = true;
      for (std::size_t k = 0; k < gen.deg && ok; ++k) ok = idot(f, gy, orb[k]) == gen.src_self[k];
      if (!ok) continue;
      images.push_back(y);
      orbit.push_back(std::move(orb));
      bool go_on = place(j + 1);
      images.pop_back();
      orbit.pop_back();
      if (!go_on) return false;
    }
    return true;
  }
};

struct Prepared {
  Search search;
  Matrix source_basis;  // columns u^a x_i in generator order
};

Prepared prepare(const Isopair& from, const Isopair& to, const std::vector<std::size_t>& blocks, std::uint64_t budget,
                 std::uint64_t seed) {
  if (from.eps() != to.eps()) fail(ErrorCode::EpsMismatch, "isopairs have different eps");
  if (from.dim() != to.dim()) fail(ErrorCode::NotIsometric, "dimensions differ");
  if (from.field() != to.field()) fail(ErrorCode::FieldMismatch, "isopairs over different fields");
  if (!from.field().is_prime()) fail(ErrorCode::UnsupportedField, "isometry search needs F_p");
  const Field& fld = from.field();
  std::size_t n = from.dim();
  std::vector<std::size_t> units = blocks.empty() ? std::vector<std::size_t>{n} : blocks;
  if (std::accumulate(units.begin(), units.end(), std::size_t{0}) != n)
    fail(ErrorCode::DimensionMismatch, "block sizes do not add up to the dimension");

  Prepared out{Search{ModP{fld.modulus()}, n, to_imat(to.gram()), to_imat(to.u()), to_imat(inverse(to.u())), {}, {}, {},
                      budget, 0, std::mt19937_64(seed), false, {}, {}, {}},
               Matrix(fld, n, 0)};
  Search& s = out.search;
  const Matrix& u = from.u();
  const Matrix& g = from.gram();
  std::size_t start = 0;
  std::vector<Vec> basis_cols;
  for (std::size_t ui = 0; ui < units.size(); ++ui) {
    std::size_t dim = units[ui];
    if (dim == 0) continue;
    Matrix ub = u.block(start, start, dim, dim);
    if (!u.block(start, 0, dim, start).is_zero() || !u.block(0, start, start, dim).is_zero())
      fail(ErrorCode::NotStable, "source block is not u-stable");
    CyclicDecomposition cd = cyclic_decomposition(ub);
    std::size_t first = s.gens.size();
    // largest annihilator first
    for (std::size_t c = cd.factors.size(); c-- > 0;) {
      Generator gen;
      gen.unit = ui;
      gen.deg = static_cast<std::size_t>(cd.factors[c].degree());
      gen.annihilator = to_imat(poly_eval(cd.factors[c], to.u()));
      gen.x = zero_vec(fld, n);
      for (std::size_t i = 0; i < dim; ++i) gen.x[start + i] = cd.generators[c][i];
      Vec y = gen.x;
      for (std::size_t k = 0; k < gen.deg; ++k) {
        gen.src_self.push_back(bilinear(gen.x, g, y).residue());
        basis_cols.push_back(y);
        y = u * y;
      }
      s.gens.push_back(std::move(gen));
      s.unit_first.push_back(first);
    }
    start += dim;
  }
  // cross values within units
  s.src_cross.resize(s.gens.size());
  Matrix uinv = inverse(u);
  for (std::size_t j = 0; j < s.gens.size(); ++j) {
    s.src_cross[j].resize(j);
    for (std::size_t i = s.unit_first[j]; i < j; ++i) {
      std::size_t di = s.gens[i].deg, dj = s.gens[j].deg;
      IVec want(di - 1 + dj);
      Vec xi = s.gens[i].x;
      for (std::size_t a = 0; a < di; ++a) {  // G(u^a x_i, x_j)
        want[di - 1 - a] = bilinear(xi, g, s.gens[j].x).residue();
        xi = u * xi;
      }
      Vec xj = u * s.gens[j].x;
      for (std::size_t k = 1; k < dj; ++k) {
        want[di - 1 + k] = bilinear(s.gens[i].x, g, xj).residue();
        xj = u * xj;
      }
      s.src_cross[j][i] = std::move(want);
    }
  }
  out.source_basis = Matrix::from_columns(fld, n, basis_cols);
  return out;
}

Matrix assemble(const Field& fld, std::size_t n, const std::vector<std::vector<IVec>>& orbit, const Matrix& src_inv) {
  std::vector<Vec> cols;
  for (const auto& orb : orbit)
    for (const auto& y : orb) {
      Vec v;
      for (U x : y) v.push_back(fld.from_int(x));
      cols.push_back(std::move(v));
    }
  return Matrix::from_columns(fld, n, cols) * src_inv;
}

bool is_isometry_between(const Isopair& from, const Isopair& to, const Matrix& g) {
  return g * from.u() == to.u() * g && g.transpose() * to.gram() * g == from.gram();
}

struct SearchResult {
  std::optional<Matrix> g;
  std::uint64_t tried = 0;
  bool exhausted = false;
};

SearchResult search_isometry(const Isopair& from, const Isopair& to, const TransportOptions& opt,
                             const std::vector<std::size_t>& blocks) {
  SearchResult res;
  if (from.gram() == to.gram() && from.u() == to.u()) {
    res.g = Matrix::identity(from.field(), from.dim());
    return res;
  }
  Prepared prep = prepare(from, to, blocks, opt.budget, opt.seed);
  Matrix src_inv = inverse(prep.source_basis);
  prep.search.on_leaf = [&](const std::vector<std::vector<IVec>>& orbit) {
    Matrix g = assemble(from.field(), from.dim(), orbit, src_inv);
    if (!is_isometry_between(from, to, g)) return true;
    res.g = std::move(g);
    return false;
  };
  prep.search.place(0);
  res.tried = prep.search.tried;
  res.exhausted = prep.search.exhausted;
  return res;
}

}  // namespace

Matrix isometry_find(const Isopair& from, const Isopair& to, const TransportOptions& opt,
                     const std::vector<std::size_t>& blocks) {
  if (from.dim() != to.dim() || from.eps() != to.eps() || !isometric(from, to))
    fail(ErrorCode::NotIsometric, "isopairs have different invariants");
  SearchResult res = search_isometry(from, to, opt, blocks);
  if (res.g) return *res.g;
  if (res.exhausted)
    fail(ErrorCode::TransportBudgetExceeded, "no isometry within " + std::to_string(res.tried) + " candidates");
  fail(ErrorCode::VerificationFailed, "exhaustive isometry search found nothing for isometric pairs");
}

std::uint64_t enumerate_isometries(const Isopair& from, const Isopair& to, const std::function<bool(const Matrix&)>& fn,
                                   const std::vector<std::size_t>& blocks) {
  Prepared prep = prepare(from, to, blocks, ~0ULL, 1);
  Matrix src_inv = inverse(prep.source_basis);
  std::uint64_t count = 0;
  prep.search.on_leaf = [&](const std::vector<std::vector<IVec>>& orbit) {
    Matrix g = assemble(from.field(), from.dim(), orbit, src_inv);
    if (!is_isometry_between(from, to, g)) fail(ErrorCode::VerificationFailed, "enumerated map is not an isometry");
    ++count;
    return fn(g);
  };
  prep.search.place(0);
  return count;
}

U2Factorization transport_factorization(const FactoredModel& model, const Isopair& p, const TransportOptions& opt) {
  if (!isometric(model.pair, p)) fail(ErrorCode::VerificationFailed, "model is not isometric to the input");
  SearchResult res = search_isometry(model.pair, p, opt, model.blocks);
  if (!res.g) {
    if (!res.exhausted) fail(ErrorCode::VerificationFailed, "exhaustive isometry search found nothing");
    throw TransportFailure("no isometry from the model within " + std::to_string(res.tried) + " candidates",
                           model.pair, model.factors, res.tried);
  }
  U2Factorization out = conjugated(model.factors, *res.g);
  VerificationReport rep = verify_factorization(p.u(), out, &p);
  if (!rep.ok()) fail(ErrorCode::VerificationFailed, "transported factorization failed verification");
  return out;
}

}  // namespace u2split

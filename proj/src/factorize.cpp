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
#include <random>

#include "u2split/poly.hpp"

namespace u2split {

namespace {

using Rng = std::mt19937_64;

// f(t) = g(t)^p: g has the coefficients of f at multiples of p.
Poly pth_root(const Poly& f) {
  const Field& F = f.field();
  std::size_t p = F.modulus();
  std::vector<Scalar> c;
  for (std::size_t i = 0; i < f.coeffs().size(); i += p) c.push_back(f.coeffs()[i]);
  return Poly(F, std::move(c));
}

void squarefree(const Poly& f, int scale, std::vector<Factor>& out) {
  if (f.degree() < 1) return;
  const Field& F = f.field();
  Poly c = gcd(f, f.derivative());
  Poly w = f / c;
  int i = 1;
  while (w.degree() > 0) {
    Poly y = gcd(w, c);
    Poly fac = w / y;
    if (fac.degree() > 0) out.push_back({fac.monic(), i * scale});
    w = y;
    c = c / y;
    ++i;
  }
  if (c.degree() > 0) squarefree(pth_root(c.monic()), scale * static_cast<int>(F.modulus()), out);
}

// Returns (product of all irreducible factors of degree d, d).
std::vector<std::pair<Poly, int>> distinct_degree(Poly f) {
  const Field& F = f.field();
  std::vector<std::pair<Poly, int>> out;
  Poly t = Poly::monomial(F, 1);
  Poly h = t % f;
  for (int d = 1; 2 * d <= f.degree(); ++d) {
    h = powmod(h, F.modulus(), f);
    Poly g = gcd(h - t, f);
    if (g.degree() > 0) {
      out.emplace_back(g, d);
      f = f / g;
      h = h % f;
    }
  }
  if (f.degree() > 0) out.emplace_back(f.monic(), f.degree());
  return out;
}

Poly random_poly(const Field& F, int deg_below, Rng& rng) {
  std::vector<Scalar> c;
  for (int i = 0; i < deg_below; ++i) c.push_back(F.from_int(static_cast<long long>(rng() % F.modulus())));
  return Poly(F, std::move(c));
}

// Cantor-Zassenhaus splitting of a product of degree-d irreducibles.
void equal_degree(const Poly& g, int d, Rng& rng, std::vector<Poly>& out) {
  if (g.degree() == d) {
    out.push_back(g.monic());
    return;
  }
  const Field& F = g.field();
  const std::uint64_t q = F.modulus();
  for (;;) {
    Poly a = random_poly(F, g.degree(), rng);
    if (a.degree() < 1) continue;
    // a^{(q^d-1)/2} = (a * a^q * ... * a^{q^{d-1}})^{(q-1)/2}
    Poly norm = a % g, frob = a % g;
    for (int i = 1; i < d; ++i) {
      frob = powmod(frob, q, g);
      norm = (norm * frob) % g;
    }
    Poly b = powmod(norm, (q - 1) / 2, g) - Poly::constant(F, F.one());
    Poly h = gcd(b, g);
    if (h.degree() > 0 && h.degree() < g.degree()) {
      equal_degree(h, d, rng, out);
      equal_degree(g / h, d, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<Factor> factorize(const Poly& f, std::uint64_t seed) {
  if (f.field().is_rational()) fail(ErrorCode::UnsupportedField, "factorization over Q");
  if (f.is_zero()) fail(ErrorCode::BadParameters, "factorization of zero");
  Rng rng(seed);
  std::vector<Factor> sqf;
  squarefree(f.monic(), 1, sqf);
  std::vector<Factor> out;
  for (const auto& [part, mult] : sqf) {
    for (const auto& [g, d] : distinct_degree(part)) {
      std::vector<Poly> irr;
      equal_degree(g, d, rng, irr);
      for (auto& p : irr) out.push_back({std::move(p), mult});
    }
  }
  std::sort(out.begin(), out.end(), [](const Factor& a, const Factor& b) { return poly_less(a.p, b.p); });
  // Squarefree parts are coprime, but merge defensively.
  std::vector<Factor> merged;
  for (auto& fac : out) {
    if (!merged.empty() && merged.back().p == fac.p)
      merged.back().mult += fac.mult;
    else
      merged.push_back(std::move(fac));
  }
  return merged;
}

bool is_irreducible(const Poly& f) {
  if (f.degree() < 1) return false;
  auto fs = factorize(f);
  return fs.size() == 1 && fs[0].mult == 1;
}

}  // namespace u2split

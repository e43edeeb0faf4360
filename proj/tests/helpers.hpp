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

#ifndef U2SPLIT_TEST_HELPERS_HPP
#define U2SPLIT_TEST_HELPERS_HPP

#include <random>
#include <vector>

#include "u2split/linal.hpp"
#include "u2split/matrix.hpp"
#include "u2split/poly.hpp"

namespace testutil {

using namespace u2split;

inline Scalar rand_scalar(const Field& f, std::mt19937_64& rng) {
  return f.from_int(static_cast<long long>(rng() % f.modulus()));
}

inline Scalar rand_unit(const Field& f, std::mt19937_64& rng) {
  return f.from_int(static_cast<long long>(1 + rng() % (f.modulus() - 1)));
}

inline Matrix rand_matrix(const Field& f, std::size_t r, std::size_t c, std::mt19937_64& rng) {
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rand_scalar(f, rng);
  return m;
}

inline Matrix rand_invertible(const Field& f, std::size_t n, std::mt19937_64& rng) {
  for (;;) {
    Matrix m = rand_matrix(f, n, n, rng);
    if (is_invertible(m)) return m;
  }
}

inline Poly rand_poly(const Field& f, int deg, std::mt19937_64& rng) {
  std::vector<Scalar> c;
  for (int i = 0; i <= deg; ++i) c.push_back(rand_scalar(f, rng));
  return Poly(f, c);
}

inline Poly rand_monic(const Field& f, int deg, std::mt19937_64& rng) {
  std::vector<Scalar> c;
  for (int i = 0; i < deg; ++i) c.push_back(rand_scalar(f, rng));
  c.push_back(f.one());
  return Poly(f, c);
}

/// Calls fn on every monic polynomial of the given degree.
template <class Fn>
void for_each_monic(const Field& f, int deg, Fn fn) {
  std::size_t q = f.modulus(), total = 1;
  for (int i = 0; i < deg; ++i) total *= q;
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<Scalar> c;
    std::size_t x = code;
    for (int i = 0; i < deg; ++i) {
      c.push_back(f.from_int(static_cast<long long>(x % q)));
      x /= q;
    }
    c.push_back(f.one());
    fn(Poly(f, c));
  }
}

/// Brute-force irreducibility: no monic divisor of degree 1..deg/2.
inline bool brute_irreducible(const Poly& p) {
  bool irr = p.degree() >= 1;
  for (int d = 1; irr && 2 * d <= p.degree(); ++d)
    for_each_monic(p.field(), d, [&](const Poly& g) {
      if ((p % g).is_zero()) irr = false;
    });
  return irr;
}

inline Matrix symmetric_random(const Field& f, std::size_t n, std::mt19937_64& rng) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = rand_scalar(f, rng);
  return m;
}

inline Matrix regular_symmetric(const Field& f, std::size_t n, std::mt19937_64& rng) {
  for (;;) {
    Matrix m = symmetric_random(f, n, rng);
    if (is_invertible(m)) return m;
  }
}

inline Matrix skew_random(const Field& f, std::size_t n, std::mt19937_64& rng) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      m(i, j) = rand_scalar(f, rng);
      m(j, i) = -m(i, j);
    }
  return m;
}

inline Matrix regular_skew(const Field& f, std::size_t n, std::mt19937_64& rng) {
  for (;;) {
    Matrix m = skew_random(f, n, rng);
    if (is_invertible(m)) return m;
  }
}

/// Upper unipotent Jordan block (1 on the diagonal and superdiagonal).
inline Matrix jordan_block(const Field& f, std::size_t n, const Scalar& lambda) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = lambda;
    if (i + 1 < n) m(i, i + 1) = f.one();
  }
  return m;
}

/// Random isometry of a regular form: a product of reflections (symmetric)
/// or transvections (alternating).
inline Matrix rand_isometry(const Matrix& g, bool symmetric, std::mt19937_64& rng, int steps = 6) {
  const Field& f = g.field();
  const std::size_t n = g.rows();
  Matrix u = Matrix::identity(f, n);
  for (int s = 0; s < steps; ++s) {
    Vec v(n);
    for (auto& x : v) x = rand_scalar(f, rng);
    Scalar q = bilinear(v, g, v);
    Matrix step = Matrix::identity(f, n);
    Vec gv = g.transpose() * v;  // gv^T x = b(v, x)
    if (symmetric) {
      if (q.is_zero()) continue;
      Scalar c = f.from_int(2) / q;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) step(i, j) -= c * v[i] * gv[j];
    } else {
      Scalar c = rand_scalar(f, rng);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) step(i, j) += c * v[i] * gv[j];
    }
    u = step * u;
  }
  return u;
}

}  // namespace testutil

#endif

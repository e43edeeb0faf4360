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

#ifndef U2SPLIT_POLY_HPP
#define U2SPLIT_POLY_HPP

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "u2split/field.hpp"

namespace u2split {

/// Dense univariate polynomial, coefficients lowest degree first.
class Poly {
 public:
  explicit Poly(Field f) : field_(f) {}
  Poly(Field f, std::vector<Scalar> coeffs);

  static Poly from_ints(Field f, std::initializer_list<long long> coeffs);
  static Poly constant(Field f, const Scalar& c);
  static Poly monomial(Field f, std::size_t degree);
  /// t - c
  static Poly linear(Field f, const Scalar& c);

  const Field& field() const noexcept { return field_; }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_one() const;
  bool is_monic() const;
  const std::vector<Scalar>& coeffs() const noexcept { return c_; }
  Scalar coeff(std::size_t i) const;
  Scalar lead() const;

  Poly monic() const;
  Scalar eval(const Scalar& x) const;
  Poly derivative() const;
  Poly scaled(const Scalar& c) const;
  /// Multiplication by t^k.
  Poly shifted(std::size_t k) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b);
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  std::string str() const;

 private:
  void trim();
  Field field_;
  std::vector<Scalar> c_;
};

struct DivMod {
  Poly quot;
  Poly rem;
};

DivMod divmod(const Poly& a, const Poly& b);
Poly operator/(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);
/// Monic gcd; gcd(0,0) = 0.
Poly gcd(const Poly& a, const Poly& b);

struct XGcd {
  Poly g, s, t;  // s*a + t*b = g, g monic
};
XGcd xgcd(const Poly& a, const Poly& b);

Poly pow(const Poly& a, unsigned e);
Poly powmod(const Poly& a, std::uint64_t e, const Poly& m);
/// f(g(t))
Poly compose(const Poly& f, const Poly& g);

/// Canonical order: degree, then coefficients from the constant term up.
bool poly_less(const Poly& a, const Poly& b);
struct PolyLess {
  bool operator()(const Poly& a, const Poly& b) const { return poly_less(a, b); }
};

/// p# = p(0)^{-1} t^d p(1/t).
Poly reciprocal(const Poly& p);
bool is_palindromial(const Poly& p);
/// R(m) = t^d m(t + 1/t).
Poly r_transform(const Poly& m);
/// The monic m with R(m) = q.
Poly r_inverse(const Poly& q);

struct Factor {
  Poly p;
  int mult;
};

constexpr std::uint64_t default_factor_seed = 0x5eed5eedULL;

/// Monic irreducible factors over F_p in canonical order.
std::vector<Factor> factorize(const Poly& f, std::uint64_t seed = default_factor_seed);
bool is_irreducible(const Poly& f);

/// Laurent polynomial sum_{i} c[i] t^{low+i}.
struct LaurentPoly {
  Field field;
  int low = 0;
  std::vector<Scalar> c;
};

struct LaurentSplit {
  Poly even;  // in s = t + 1/t
  Poly odd;
};

/// q = even(t + 1/t) + t * odd(t + 1/t).
LaurentSplit laurent_split(const LaurentPoly& q);
/// Expands even(t+1/t) + t*odd(t+1/t) back to a trimmed Laurent polynomial.
LaurentPoly laurent_join(const LaurentSplit& s);
/// Drops zero coefficients at both ends.
LaurentPoly laurent_trim(LaurentPoly q);

}  // namespace u2split

#endif

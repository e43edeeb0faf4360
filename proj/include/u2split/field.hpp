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

#ifndef U2SPLIT_FIELD_HPP
#define U2SPLIT_FIELD_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

#include "u2split/error.hpp"

namespace u2split {

class Scalar;

/// A prime field F_p (odd p, p < 2^31) or the rationals.
class Field {
 public:
  static constexpr std::uint64_t max_prime = (1ULL << 31);

  Field() = default;
  static Field prime(std::uint64_t p);
  static Field rationals() { return Field(); }

  bool is_prime() const noexcept { return p_ != 0; }
  bool is_rational() const noexcept { return p_ == 0; }
  std::uint32_t modulus() const noexcept { return p_; }
  std::uint32_t characteristic() const noexcept { return p_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long long v) const;
  Scalar from_mpz(const mpz_class& v) const;
  /// Parses "3", "-5", "-5/6". Over F_p the fraction is reduced mod p.
  Scalar parse(std::string_view text) const;

  /// Euler's criterion; prime fields only.
  bool is_square(const Scalar& a) const;
  /// Some x with x*x == a (Tonelli-Shanks); prime fields only.
  Scalar sqrt(const Scalar& a) const;
  /// The least quadratic non-residue.
  Scalar nonresidue() const;

  std::string name() const;

  friend bool operator==(const Field& a, const Field& b) noexcept { return a.p_ == b.p_; }
  friend bool operator!=(const Field& a, const Field& b) noexcept { return a.p_ != b.p_; }

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 0;
};

/// An element of F_p or Q. Residues live in [0,p); fractions are reduced
/// with positive denominator. A default-constructed Scalar is an unbound
/// placeholder and must be assigned before use.
class Scalar {
 public:
  Scalar() = default;

  Field field() const;
  bool bound() const noexcept { return p_ != 0 || std::holds_alternative<mpq_class>(v_); }
  bool is_rational() const noexcept { return std::holds_alternative<mpq_class>(v_); }
  bool is_zero() const;
  bool is_one() const;

  /// Residue in [0,p). Prime fields only.
  std::uint32_t residue() const;
  const mpq_class& rational() const;

  Scalar inv() const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  Scalar pow(std::uint64_t e) const;

  /// Canonical decimal text: residue for F_p, "n" or "n/d" for Q.
  std::string str() const;

 private:
  friend class Field;
  Scalar(std::uint32_t r, std::uint32_t p) : p_(p), v_(r) {}
  explicit Scalar(mpq_class q) : p_(0), v_(std::move(q)) { std::get<mpq_class>(v_).canonicalize(); }
  void check_same(const Scalar& o) const;

  std::uint32_t p_ = 0;
  std::variant<std::uint32_t, mpq_class> v_{std::uint32_t{0}};
};

std::ostream& operator<<(std::ostream& os, const Scalar& a);

/// Lexicographic helper used for canonical orderings: residues compare
/// numerically, rationals by value.
bool scalar_less(const Scalar& a, const Scalar& b);

}  // namespace u2split

#endif

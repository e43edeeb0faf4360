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

#include "u2split/field.hpp"

#include <cctype>
#include <ostream>

namespace u2split {

const char* error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::UnsupportedField: return "UnsupportedField";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ZeroConstantTerm: return "ZeroConstantTerm";
    case ErrorCode::NotPalindromial: return "NotPalindromial";
    case ErrorCode::OddDegree: return "OddDegree";
    case ErrorCode::NotIrreducible: return "NotIrreducible";
    case ErrorCode::DegenerateModulus: return "DegenerateModulus";
    case ErrorCode::NonSquare: return "NonSquare";
    case ErrorCode::NotSimilar: return "NotSimilar";
    case ErrorCode::NotStable: return "NotStable";
    case ErrorCode::KindMismatch: return "KindMismatch";
    case ErrorCode::DegenerateForm: return "DegenerateForm";
    case ErrorCode::WrongKind: return "WrongKind";
    case ErrorCode::ParityMismatch: return "ParityMismatch";
    case ErrorCode::BadModulus: return "BadModulus";
    case ErrorCode::EpsMismatch: return "EpsMismatch";
    case ErrorCode::NotUnipotent: return "NotUnipotent";
    case ErrorCode::BadParameters: return "BadParameters";
    case ErrorCode::InadmissibleShape: return "InadmissibleShape";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::NotSplittable: return "NotSplittable";
    case ErrorCode::NotCyclic: return "NotCyclic";
    case ErrorCode::DeterminantMismatch: return "DeterminantMismatch";
    case ErrorCode::NotIsometric: return "NotIsometric";
    case ErrorCode::TransportBudgetExceeded: return "TransportBudgetExceeded";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::InvalidIsopair: return "InvalidIsopair";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
  }
  return "Unknown";
}

namespace {

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint32_t mulmod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

std::uint32_t powmod(std::uint32_t a, std::uint64_t e, std::uint32_t p) {
  std::uint32_t r = 1 % p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint32_t reduce_mpz(const mpz_class& v, std::uint32_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p);
  return static_cast<std::uint32_t>(r.get_ui());
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (p < 3 || p >= max_prime || !is_prime_u64(p))
    fail(ErrorCode::UnsupportedField, "modulus must be an odd prime below 2^31, got " + std::to_string(p));
  return Field(static_cast<std::uint32_t>(p));
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long long v) const {
  if (is_rational()) return Scalar(mpq_class(mpz_class(static_cast<long>(v))));
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return Scalar(static_cast<std::uint32_t>(r), p_);
}

Scalar Field::from_mpz(const mpz_class& v) const {
  if (is_rational()) return Scalar(mpq_class(v));
  return Scalar(reduce_mpz(v, p_), p_);
}

Scalar Field::parse(std::string_view text) const {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  auto valid_int = [](const std::string& t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den)) fail(ErrorCode::ParseError, "bad field element '" + std::string(text) + "'");
  if (num[0] == '+') num.erase(0, 1);
  if (den[0] == '+') den.erase(0, 1);
  mpz_class n(num), d(den);
  if (d == 0) fail(ErrorCode::DivisionByZero, "zero denominator in '" + std::string(text) + "'");
  if (is_rational()) return Scalar(mpq_class(n, d));
  std::uint32_t dr = reduce_mpz(d, p_);
  if (dr == 0) fail(ErrorCode::DivisionByZero, "denominator vanishes mod p in '" + std::string(text) + "'");
  return Scalar(reduce_mpz(n, p_), p_) / Scalar(dr, p_);
}

bool Field::is_square(const Scalar& a) const {
  if (is_rational()) fail(ErrorCode::UnsupportedField, "square test over Q");
  if (a.field() != *this) fail(ErrorCode::FieldMismatch, "is_square");
  std::uint32_t r = a.residue();
  if (r == 0) return true;
  return powmod(r, (p_ - 1) / 2, p_) == 1;
}

Scalar Field::nonresidue() const {
  if (is_rational()) fail(ErrorCode::UnsupportedField, "non-residue over Q");
  for (std::uint32_t z = 2;; ++z)
    if (powmod(z, (p_ - 1) / 2, p_) == p_ - 1) return Scalar(z, p_);
}

Scalar Field::sqrt(const Scalar& a) const {
  if (!is_square(a)) fail(ErrorCode::NonSquare, a.str() + " is not a square mod " + std::to_string(p_));
  std::uint32_t n = a.residue();
  if (n == 0) return zero();
  // Tonelli-Shanks.
  std::uint32_t q = p_ - 1, s = 0;
  while ((q & 1) == 0) { q >>= 1; ++s; }
  std::uint32_t z = nonresidue().residue();
  std::uint32_t m = s, c = powmod(z, q, p_), t = powmod(n, q, p_), r = powmod(n, (q + 1) / 2, p_);
  while (t != 1) {
    std::uint32_t i = 0, tt = t;
    while (tt != 1) { tt = mulmod(tt, tt, p_); ++i; }
    std::uint32_t b = c;
    for (std::uint32_t j = 0; j + 1 < m - i; ++j) b = mulmod(b, b, p_);
    m = i;
    c = mulmod(b, b, p_);
    t = mulmod(t, c, p_);
    r = mulmod(r, b, p_);
  }
  return Scalar(r, p_);
}

std::string Field::name() const { return is_rational() ? "Q" : "F_" + std::to_string(p_); }

Field Scalar::field() const {
  if (is_rational()) return Field::rationals();
  if (p_ == 0) fail(ErrorCode::FieldMismatch, "unbound scalar");
  return Field::prime(p_);
}

void Scalar::check_same(const Scalar& o) const {
  if (p_ != o.p_ || v_.index() != o.v_.index() || (p_ == 0 && !is_rational()))
    fail(ErrorCode::FieldMismatch, "operands live in different fields");
}

bool Scalar::is_zero() const {
  if (is_rational()) return sgn(std::get<mpq_class>(v_)) == 0;
  return std::get<std::uint32_t>(v_) == 0;
}

bool Scalar::is_one() const {
  if (is_rational()) return std::get<mpq_class>(v_) == 1;
  return std::get<std::uint32_t>(v_) == 1;
}

std::uint32_t Scalar::residue() const {
  if (is_rational() || p_ == 0) fail(ErrorCode::UnsupportedField, "residue of a non-modular scalar");
  return std::get<std::uint32_t>(v_);
}

const mpq_class& Scalar::rational() const {
  if (!is_rational()) fail(ErrorCode::UnsupportedField, "rational value of a residue");
  return std::get<mpq_class>(v_);
}

Scalar Scalar::inv() const {
  if (is_zero()) fail(ErrorCode::DivisionByZero, "inverse of zero");
  if (is_rational()) return Scalar(mpq_class(1) / std::get<mpq_class>(v_));
  return Scalar(powmod(std::get<std::uint32_t>(v_), p_ - 2, p_), p_);
}

Scalar Scalar::operator-() const {
  if (is_rational()) return Scalar(mpq_class(-std::get<mpq_class>(v_)));
  std::uint32_t r = std::get<std::uint32_t>(v_);
  return Scalar(r == 0 ? 0 : p_ - r, p_);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same(o);
  if (p_ != 0) {
    std::uint32_t& a = std::get<std::uint32_t>(v_);
    std::uint64_t s = static_cast<std::uint64_t>(a) + std::get<std::uint32_t>(o.v_);
    a = static_cast<std::uint32_t>(s >= p_ ? s - p_ : s);
  } else {
    std::get<mpq_class>(v_) += std::get<mpq_class>(o.v_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same(o);
  if (p_ != 0) {
    std::uint32_t& a = std::get<std::uint32_t>(v_);
    std::uint32_t b = std::get<std::uint32_t>(o.v_);
    a = a >= b ? a - b : a + (p_ - b);
  } else {
    std::get<mpq_class>(v_) -= std::get<mpq_class>(o.v_);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same(o);
  if (p_ != 0) {
    std::uint32_t& a = std::get<std::uint32_t>(v_);
    a = mulmod(a, std::get<std::uint32_t>(o.v_), p_);
  } else {
    std::get<mpq_class>(v_) *= std::get<mpq_class>(o.v_);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  check_same(o);
  return *this *= o.inv();
}

bool operator==(const Scalar& a, const Scalar& b) {
  a.check_same(b);
  if (a.p_ != 0) return std::get<std::uint32_t>(a.v_) == std::get<std::uint32_t>(b.v_);
  return std::get<mpq_class>(a.v_) == std::get<mpq_class>(b.v_);
}

Scalar Scalar::pow(std::uint64_t e) const {
  if (p_ != 0) return Scalar(powmod(std::get<std::uint32_t>(v_), e, p_), p_);
  Scalar r = field().one(), b = *this;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

std::string Scalar::str() const {
  if (is_rational()) return std::get<mpq_class>(v_).get_str();
  if (p_ == 0) return "<unbound>";
  return std::to_string(std::get<std::uint32_t>(v_));
}

std::ostream& operator<<(std::ostream& os, const Scalar& a) { return os << a.str(); }

bool scalar_less(const Scalar& a, const Scalar& b) {
  if (a.is_rational()) return a.rational() < b.rational();
  return a.residue() < b.residue();
}

}  // namespace u2split

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

#include "u2split/poly.hpp"

#include <map>
#include <sstream>

namespace u2split {

Poly::Poly(Field f, std::vector<Scalar> coeffs) : field_(f), c_(std::move(coeffs)) {
  for (const auto& c : c_)
    if (c.field() != field_) fail(ErrorCode::FieldMismatch, "polynomial coefficient");
  trim();
}

Poly Poly::from_ints(Field f, std::initializer_list<long long> coeffs) {
  std::vector<Scalar> c;
  for (long long v : coeffs) c.push_back(f.from_int(v));
  return Poly(f, std::move(c));
}

Poly Poly::constant(Field f, const Scalar& c) { return Poly(f, {c}); }

Poly Poly::monomial(Field f, std::size_t degree) {
  std::vector<Scalar> c(degree + 1, f.zero());
  c[degree] = f.one();
  return Poly(f, std::move(c));
}

Poly Poly::linear(Field f, const Scalar& c) { return Poly(f, {-c, f.one()}); }

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

bool Poly::is_one() const { return c_.size() == 1 && c_[0].is_one(); }
bool Poly::is_monic() const { return !c_.empty() && c_.back().is_one(); }

Scalar Poly::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : field_.zero(); }

Scalar Poly::lead() const {
  if (c_.empty()) return field_.zero();
  return c_.back();
}

Poly Poly::monic() const {
  if (c_.empty()) return *this;
  return scaled(c_.back().inv());
}

Scalar Poly::eval(const Scalar& x) const {
  Scalar r = field_.zero();
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    r *= x;
    r += *it;
  }
  return r;
}

Poly Poly::derivative() const {
  std::vector<Scalar> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * field_.from_int(static_cast<long long>(i)));
  return Poly(field_, std::move(d));
}

Poly Poly::scaled(const Scalar& c) const {
  std::vector<Scalar> d = c_;
  for (auto& x : d) x *= c;
  return Poly(field_, std::move(d));
}

Poly Poly::shifted(std::size_t k) const {
  if (c_.empty()) return *this;
  std::vector<Scalar> d(k, field_.zero());
  d.insert(d.end(), c_.begin(), c_.end());
  return Poly(field_, std::move(d));
}

Poly Poly::operator-() const { return scaled(-field_.one()); }

Poly& Poly::operator+=(const Poly& o) {
  if (o.field_ != field_) fail(ErrorCode::FieldMismatch, "poly add");
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), field_.zero());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.field_ != field_) fail(ErrorCode::FieldMismatch, "poly sub");
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), field_.zero());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.field_ != b.field_) fail(ErrorCode::FieldMismatch, "poly mul");
  if (a.is_zero() || b.is_zero()) return Poly(a.field_);
  std::vector<Scalar> r(a.c_.size() + b.c_.size() - 1, a.field_.zero());
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return Poly(a.field_, std::move(r));
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

bool operator==(const Poly& a, const Poly& b) {
  if (a.field_ != b.field_) return false;
  if (a.c_.size() != b.c_.size()) return false;
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    if (a.c_[i] != b.c_[i]) return false;
  return true;
}

std::string Poly::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Scalar& c = c_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || !c.is_one()) os << c.str();
    if (i > 0 && !c.is_one()) os << "*";
    if (i >= 1) os << "t";
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

DivMod divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) fail(ErrorCode::DivisionByZero, "polynomial division by zero");
  const Field& f = a.field();
  if (a.degree() < b.degree()) return {Poly(f), a};
  std::vector<Scalar> r = a.coeffs();
  std::size_t db = static_cast<std::size_t>(b.degree());
  std::vector<Scalar> q(r.size() - db, f.zero());
  Scalar li = b.lead().inv();
  const auto& bc = b.coeffs();
  for (std::size_t k = r.size(); k-- > db;) {
    if (r[k].is_zero()) continue;
    Scalar c = r[k] * li;
    q[k - db] = c;
    for (std::size_t j = 0; j <= db; ++j) r[k - db + j] -= c * bc[j];
  }
  r.resize(db);
  return {Poly(f, std::move(q)), Poly(f, std::move(r))};
}

Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).quot; }
Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).rem; }

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

XGcd xgcd(const Poly& a, const Poly& b) {
  const Field& f = a.field();
  Poly r0 = a, r1 = b;
  Poly s0 = Poly::constant(f, f.one()), s1(f);
  Poly t0(f), t1 = Poly::constant(f, f.one());
  while (!r1.is_zero()) {
    DivMod qr = divmod(r0, r1);
    Poly s2 = s0 - qr.quot * s1, t2 = t0 - qr.quot * t1;
    r0 = std::move(r1);
    r1 = std::move(qr.rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Scalar li = r0.lead().inv();
  return {r0.scaled(li), s0.scaled(li), t0.scaled(li)};
}

Poly pow(const Poly& a, unsigned e) {
  Poly r = Poly::constant(a.field(), a.field().one()), b = a;
  while (e) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

Poly powmod(const Poly& a, std::uint64_t e, const Poly& m) {
  Poly r = Poly::constant(a.field(), a.field().one()) % m, b = a % m;
  while (e) {
    if (e & 1) r = (r * b) % m;
    e >>= 1;
    if (e) b = (b * b) % m;
  }
  return r;
}

Poly compose(const Poly& f, const Poly& g) {
  Poly r(f.field());
  for (int i = f.degree(); i >= 0; --i) r = r * g + Poly::constant(f.field(), f.coeff(static_cast<std::size_t>(i)));
  return r;
}

bool poly_less(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    const Scalar& x = a.coeffs()[i];
    const Scalar& y = b.coeffs()[i];
    if (x != y) return scalar_less(x, y);
  }
  return false;
}

Poly reciprocal(const Poly& p) {
  if (p.is_zero() || p.coeff(0).is_zero()) fail(ErrorCode::ZeroConstantTerm, "reciprocal of " + p.str());
  std::vector<Scalar> c(p.coeffs().rbegin(), p.coeffs().rend());
  return Poly(p.field(), std::move(c)).scaled(p.coeff(0).inv());
}

bool is_palindromial(const Poly& p) {
  if (p.is_zero() || p.coeff(0).is_zero()) fail(ErrorCode::ZeroConstantTerm, "palindromial test of " + p.str());
  return p.is_monic() && reciprocal(p) == p;
}

Poly r_transform(const Poly& m) {
  const Field& f = m.field();
  int d = m.degree();
  if (d < 1) fail(ErrorCode::BadParameters, "R-transform needs degree >= 1");
  Poly s2 = Poly::from_ints(f, {1, 0, 1});
  Poly r(f), pw = Poly::constant(f, f.one());
  for (int j = 0; j <= d; ++j) {
    r += pw.shifted(static_cast<std::size_t>(d - j)).scaled(m.coeff(static_cast<std::size_t>(j)));
    pw *= s2;
  }
  return r;
}

Poly r_inverse(const Poly& q) {
  const Field& f = q.field();
  if (q.degree() < 1 || !is_palindromial(q)) fail(ErrorCode::NotPalindromial, q.str());
  if (q.degree() % 2 != 0) fail(ErrorCode::OddDegree, q.str());
  std::size_t d = static_cast<std::size_t>(q.degree() / 2);
  std::vector<Poly> pw{Poly::constant(f, f.one())};
  Poly s2 = Poly::from_ints(f, {1, 0, 1});
  for (std::size_t j = 1; j <= d; ++j) pw.push_back(pw.back() * s2);
  std::vector<Scalar> m(d + 1, f.zero());
  Poly rem = q;
  for (std::size_t j = d + 1; j-- > 0;) {
    m[j] = rem.coeff(d + j);
    rem -= pw[j].shifted(d - j).scaled(m[j]);
  }
  if (!rem.is_zero()) fail(ErrorCode::NotPalindromial, q.str());
  return Poly(f, std::move(m));
}

LaurentPoly laurent_trim(LaurentPoly q) {
  std::size_t a = 0;
  while (a < q.c.size() && q.c[a].is_zero()) ++a;
  if (a == q.c.size()) return {q.field, 0, {}};
  std::size_t b = q.c.size();
  while (q.c[b - 1].is_zero()) --b;
  return {q.field, q.low + static_cast<int>(a), std::vector<Scalar>(q.c.begin() + static_cast<long>(a), q.c.begin() + static_cast<long>(b))};
}

namespace {

using LaurentMap = std::map<int, Scalar>;

// Accumulates c * t^shift * (t + 1/t)^n into acc.
void add_s_power(LaurentMap& acc, const Field& f, int n, int shift, const Scalar& c) {
  for (int k = 0; k <= n; ++k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    auto it = acc.try_emplace(n - 2 * k + shift, f.zero()).first;
    it->second += c * f.from_mpz(b);
    if (it->second.is_zero()) acc.erase(it);
  }
}

}  // namespace

LaurentSplit laurent_split(const LaurentPoly& q) {
  const Field& f = q.field;
  LaurentMap rem;
  for (std::size_t i = 0; i < q.c.size(); ++i)
    if (!q.c[i].is_zero()) rem.emplace(q.low + static_cast<int>(i), q.c[i]);
  std::map<int, Scalar> even, odd;
  auto bump = [&](std::map<int, Scalar>& m, int k, const Scalar& c) {
    auto it = m.try_emplace(k, f.zero()).first;
    it->second += c;
  };
  while (!rem.empty()) {
    int lo = rem.begin()->first, hi = rem.rbegin()->first;
    int n = std::max(hi, -lo);
    if (n == 0) {
      bump(even, 0, rem.begin()->second);
      break;
    }
    auto neg = rem.find(-n);
    if (neg != rem.end()) {
      Scalar c = neg->second;
      bump(even, n, c);
      add_s_power(rem, f, n, 0, -c);
    } else {
      Scalar c = rem.find(n)->second;
      bump(odd, n - 1, c);
      add_s_power(rem, f, n - 1, 1, -c);
    }
  }
  auto to_poly = [&](const std::map<int, Scalar>& m) {
    if (m.empty()) return Poly(f);
    std::vector<Scalar> c(static_cast<std::size_t>(m.rbegin()->first + 1), f.zero());
    for (const auto& [k, v] : m) c[static_cast<std::size_t>(k)] = v;
    return Poly(f, std::move(c));
  };
  return {to_poly(even), to_poly(odd)};
}

LaurentPoly laurent_join(const LaurentSplit& s) {
  const Field& f = s.even.field();
  LaurentMap acc;
  for (int k = 0; k <= s.even.degree(); ++k) add_s_power(acc, f, k, 0, s.even.coeff(static_cast<std::size_t>(k)));
  for (int k = 0; k <= s.odd.degree(); ++k) add_s_power(acc, f, k, 1, s.odd.coeff(static_cast<std::size_t>(k)));
  if (acc.empty()) return {f, 0, {}};
  int lo = acc.begin()->first, hi = acc.rbegin()->first;
  LaurentPoly r{f, lo, std::vector<Scalar>(static_cast<std::size_t>(hi - lo + 1), f.zero())};
  for (const auto& [e, v] : acc) r.c[static_cast<std::size_t>(e - lo)] = v;
  return laurent_trim(r);
}

}  // namespace u2split

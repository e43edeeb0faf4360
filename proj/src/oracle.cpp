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

#include "u2split/oracle.hpp"

#include <algorithm>
#include <limits>
#include <thread>
#include <unordered_set>

#include "u2split/factor.hpp"
#include "u2split/forms.hpp"
#include "u2split/isopair.hpp"
#include "u2split/kernels.hpp"

namespace u2split::oracle {

namespace {

constexpr std::uint64_t kSat = std::numeric_limits<std::uint64_t>::max();
constexpr std::size_t kBatch = 4096;
constexpr std::size_t kMaxCounterexamples = 16;

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kSat / a) return kSat;
  return a * b;
}

std::uint64_t sat_pow(std::uint64_t q, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e-- > 0) r = sat_mul(r, q);
  return r;
}

struct Ctx {
  std::uint32_t p;
  std::size_t n, n2;
  std::vector<std::uint64_t> weight;
};

Ctx context(const GroupSpec& g) {
  Ctx c{g.field.modulus(), g.n, g.n * g.n, {}};
  // Lane sums must stay below 2^22 before reduction, codes below 2^63.
  const std::uint64_t pm = c.p - 1;
  if (sat_mul(sat_mul(c.n2, c.n), sat_mul(pm, pm)) >= (1ULL << 22))
    fail(ErrorCode::BudgetExceeded, "field or dimension too large for the oracle kernels");
  if (sat_pow(c.p, c.n2) >= (1ULL << 63)) fail(ErrorCode::BudgetExceeded, "matrix codes exceed 63 bits");
  std::uint64_t w = 1;
  for (std::size_t e = 0; e < c.n2; ++e, w *= c.p) c.weight.push_back(w);
  return c;
}

void unpack(const Ctx& c, Code code, std::uint32_t* d) {
  for (std::size_t e = 0; e < c.n2; ++e, code /= c.p) d[e] = static_cast<std::uint32_t>(code % c.p);
}

// Membership structure: a bitmap over the code space when it is small.
class CodeSet {
 public:
  explicit CodeSet(std::uint64_t space) {
    if (space <= (1ULL << 28)) bits_.assign((space + 63) / 64, 0);
  }
  void insert(Code c) {
    if (!bits_.empty()) bits_[c >> 6] |= 1ULL << (c & 63);
    else hash_.insert(c);
  }
  void merge(const CodeSet& o) {
    for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] |= o.bits_[i];
    hash_.insert(o.hash_.begin(), o.hash_.end());
  }
  std::vector<Code> sorted() const {
    std::vector<Code> out;
    for (std::size_t i = 0; i < bits_.size(); ++i)
      for (std::uint64_t w = bits_[i]; w != 0; w &= w - 1) out.push_back(i * 64 + __builtin_ctzll(w));
    out.insert(out.end(), hash_.begin(), hash_.end());
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  std::vector<std::uint64_t> bits_;
  std::unordered_set<Code> hash_;
};

bool invertible_mod(std::vector<std::uint32_t> a, std::size_t n, std::uint32_t p) {
  auto inv = [p](std::uint64_t x) {
    std::uint64_t r = 1, e = p - 2;
    for (; e; e >>= 1, x = x * x % p)
      if (e & 1) r = r * x % p;
    return r;
  };
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv * n + col] == 0) ++piv;
    if (piv == n) return false;
    for (std::size_t j = 0; j < n; ++j) std::swap(a[col * n + j], a[piv * n + j]);
    const std::uint64_t s = inv(a[col * n + col]);
    for (std::size_t i = col + 1; i < n; ++i) {
      const std::uint64_t f = a[i * n + col] * s % p;
      if (f == 0) continue;
      for (std::size_t j = col; j < n; ++j)
        a[i * n + j] = static_cast<std::uint32_t>((a[i * n + j] + (p - f) * a[col * n + j]) % p);
    }
  }
  return true;
}

unsigned thread_count(const Limits& lim, std::size_t work) {
  unsigned t = lim.threads ? lim.threads : std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<std::size_t>(t, std::max<std::size_t>(work / 64, 1)));
}

// Parameter matrices whose span is the set of admissible a.
std::vector<std::vector<std::uint32_t>> parameter_basis(const GroupSpec& g) {
  std::vector<std::vector<std::uint32_t>> out;
  const std::size_t n = g.n;
  if (g.kind == GroupSpec::Kind::gl) {
    for (std::size_t e = 0; e < n * n; ++e) {
      std::vector<std::uint32_t> m(n * n, 0);
      m[e] = 1;
      out.push_back(std::move(m));
    }
    return out;
  }
  // a = G^{-1} S with S^T = -eps S.
  const Field& f = g.field;
  const Matrix gi = inverse(g.gram);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      if (i == j && g.eps == 1) continue;
      Matrix s(f, n, n);
      s(i, j) = f.one();
      if (i != j) s(j, i) = f.from_int(-g.eps);
      const Matrix a = gi * s;
      std::vector<std::uint32_t> m(n * n);
      for (std::size_t e = 0; e < n * n; ++e) m[e] = a(e / n, e % n).residue();
      out.push_back(std::move(m));
    }
  return out;
}

// L * R as a code set; R is laid out lane-wise per entry.
std::vector<Code> multiply(const Ctx& c, const std::vector<Code>& left, const std::vector<Code>& right,
                           const Limits& lim) {
  const std::size_t m = right.size();
  std::vector<std::uint32_t> soa(c.n2 * m);
  {
    std::vector<std::uint32_t> d(c.n2);
    for (std::size_t l = 0; l < m; ++l) {
      unpack(c, right[l], d.data());
      for (std::size_t e = 0; e < c.n2; ++e) soa[e * m + l] = d[e];
    }
  }
  const std::uint64_t space = sat_pow(c.p, c.n2);
  const unsigned nt = thread_count(lim, left.size());
  std::vector<CodeSet> parts(nt, CodeSet(space));
  auto work = [&](unsigned t) {
    const kernels::KernelTable& k = kernels::active();
    std::vector<std::uint32_t> acc(c.n2 * m), x(c.n2);
    std::vector<std::uint64_t> codes(m);
    for (std::size_t li = t; li < left.size(); li += nt) {
      unpack(c, left[li], x.data());
      std::fill(acc.begin(), acc.end(), 0);
      for (std::size_t i = 0; i < c.n; ++i)
        for (std::size_t kk = 0; kk < c.n; ++kk) {
          const std::uint32_t xi = x[i * c.n + kk];
          if (xi == 0) continue;
          for (std::size_t j = 0; j < c.n; ++j)
            k.madd(&acc[(i * c.n + j) * m], &soa[(kk * c.n + j) * m], xi, m);
        }
      k.reduce(acc.data(), acc.size(), c.p);
      std::fill(codes.begin(), codes.end(), 0);
      for (std::size_t e = 0; e < c.n2; ++e) k.encode(codes.data(), &acc[e * m], c.weight[e], m);
      for (Code code : codes) parts[t].insert(code);
    }
  };
  if (nt == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < nt; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  for (unsigned t = 1; t < nt; ++t) parts[0].merge(parts[t]);
  return parts[0].sorted();
}

void check_order(const GroupSpec& g, const Limits& lim) {
  const std::uint64_t order = group_order(g);
  if (order > lim.max_group)
    fail(ErrorCode::BudgetExceeded, g.name() + " has order " + (order == kSat ? std::string("> 2^64") : std::to_string(order)) +
                                        " above the ceiling " + std::to_string(lim.max_group));
}

}  // namespace

GroupSpec GroupSpec::gl(Field f, std::size_t n) {
  GroupSpec g;
  g.kind = Kind::gl;
  g.field = f;
  g.n = n;
  return g;
}

GroupSpec GroupSpec::isometry(int eps, Matrix gram) {
  GroupSpec g;
  g.kind = Kind::isometry;
  g.field = gram.field();
  g.n = gram.rows();
  g.eps = eps;
  g.gram = std::move(gram);
  return g;
}

std::string GroupSpec::name() const {
  std::string head = kind == Kind::gl ? "GL" : (eps == -1 ? "Sp" : "O");
  return head + std::to_string(n) + "(" + field.name() + ")";
}

void validate(const GroupSpec& g) {
  if (!g.field.is_prime()) fail(ErrorCode::UnsupportedField, "the oracle needs a prime field");
  if (g.n == 0) fail(ErrorCode::BadParameters, "dimension must be positive");
  if (g.kind == GroupSpec::Kind::gl) return;
  if (g.eps != 1 && g.eps != -1) fail(ErrorCode::BadParameters, "eps must be 1 or -1");
  if (g.gram.rows() != g.n || g.gram.cols() != g.n) fail(ErrorCode::DimensionMismatch, "gram must be n x n");
  if (g.gram.field() != g.field) fail(ErrorCode::FieldMismatch, "gram over another field");
  BilForm form(g.gram, kind_for_eps(g.eps));
  if (!is_invertible(g.gram)) fail(ErrorCode::DegenerateForm, "gram is singular");
}

std::uint64_t group_order(const GroupSpec& g) {
  validate(g);
  const std::uint64_t q = g.field.modulus();
  const std::size_t n = g.n;
  if (g.kind == GroupSpec::Kind::gl) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < n; ++i) {
      const std::uint64_t qn = sat_pow(q, n);
      r = qn == kSat ? kSat : sat_mul(r, qn - sat_pow(q, i));
    }
    return r;
  }
  const std::size_t m = n / 2;
  auto prod = [&](std::size_t top) {
    std::uint64_t r = 1;
    for (std::size_t i = 1; i <= top; ++i) {
      const std::uint64_t v = sat_pow(q, 2 * i);
      r = v == kSat ? kSat : sat_mul(r, v - 1);
    }
    return r;
  };
  if (g.eps == -1) return sat_mul(sat_pow(q, m * m), prod(m));
  if (n % 2 == 1) return sat_mul(2, sat_mul(sat_pow(q, m * m), prod(m)));
  // Plus type iff (-1)^m det is a square.
  Scalar disc = det(g.gram);
  if (m % 2 == 1) disc = -disc;
  const bool plus = g.field.is_square(disc);
  const std::uint64_t qm = sat_pow(q, m);
  const std::uint64_t mid = qm == kSat ? kSat : (plus ? qm - 1 : qm + 1);
  return sat_mul(2, sat_mul(sat_pow(q, m * (m - 1)), sat_mul(mid, prod(m - 1))));
}

Code encode(const Matrix& a) {
  const std::uint64_t p = a.field().modulus();
  if (p == 0) fail(ErrorCode::UnsupportedField, "codes need a prime field");
  Code c = 0, w = 1;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j, w *= p) c += a(i, j).residue() * w;
  return c;
}

Matrix decode(const GroupSpec& g, Code c) {
  Matrix a(g.field, g.n, g.n);
  const std::uint64_t p = g.field.modulus();
  for (std::size_t i = 0; i < g.n; ++i)
    for (std::size_t j = 0; j < g.n; ++j, c /= p) a(i, j) = g.field.from_int(static_cast<long long>(c % p));
  return a;
}

std::vector<Code> enumerate_group(const GroupSpec& g, const Limits& lim) {
  validate(g);
  const Ctx c = context(g);
  check_order(g, lim);
  std::vector<Code> out;
  if (g.kind == GroupSpec::Kind::gl) {
    const std::uint64_t space = sat_pow(c.p, c.n2);
    if (space > lim.max_params) fail(ErrorCode::BudgetExceeded, "parameter space above the ceiling");
    std::vector<std::uint32_t> d(c.n2);
    for (Code code = 0; code < space; ++code) {
      unpack(c, code, d.data());
      if (invertible_mod(d, c.n, c.p)) out.push_back(code);
    }
    return out;
  }
  const Isopair base(g.eps, BilForm(g.gram, kind_for_eps(g.eps)), Matrix::identity(g.field, g.n));
  enumerate_isometries(base, base, [&](const Matrix& m) {
    if (out.size() >= lim.max_group) fail(ErrorCode::BudgetExceeded, "group larger than the ceiling");
    out.push_back(encode(m));
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Code> u2_codes(const GroupSpec& g, const Limits& lim) {
  validate(g);
  const Ctx c = context(g);
  const auto basis = parameter_basis(g);
  const std::uint64_t space = sat_pow(c.p, basis.size());
  if (space > lim.max_params) fail(ErrorCode::BudgetExceeded, "parameter space above the ceiling");

  const kernels::KernelTable& k = kernels::active();
  const std::size_t np = basis.size();
  std::vector<std::uint32_t> s(np * kBatch), a(c.n2 * kBatch), sq(c.n2 * kBatch), mask(kBatch);
  std::vector<Code> out;
  for (std::uint64_t start = 0; start < space; start += kBatch) {
    const std::size_t len = static_cast<std::size_t>(std::min<std::uint64_t>(kBatch, space - start));
    for (std::size_t l = 0; l < len; ++l) {
      std::uint64_t v = start + l;
      for (std::size_t t = 0; t < np; ++t, v /= c.p) s[t * kBatch + l] = static_cast<std::uint32_t>(v % c.p);
    }
    std::fill(a.begin(), a.end(), 0);
    for (std::size_t t = 0; t < np; ++t)
      for (std::size_t e = 0; e < c.n2; ++e)
        if (basis[t][e] != 0) k.madd(&a[e * kBatch], &s[t * kBatch], basis[t][e], len);
    k.reduce(a.data(), a.size(), c.p);
    std::fill(sq.begin(), sq.end(), 0);
    for (std::size_t i = 0; i < c.n; ++i)
      for (std::size_t j = 0; j < c.n; ++j)
        for (std::size_t kk = 0; kk < c.n; ++kk)
          k.fma(&sq[(i * c.n + j) * kBatch], &a[(i * c.n + kk) * kBatch], &a[(kk * c.n + j) * kBatch], len);
    k.reduce(sq.data(), sq.size(), c.p);
    std::fill(mask.begin(), mask.end(), 0);
    for (std::size_t e = 0; e < c.n2; ++e) k.nonzero_or(mask.data(), &sq[e * kBatch], len);
    for (std::size_t l = 0; l < len; ++l) {
      if (mask[l]) continue;
      Code code = 0;
      for (std::size_t e = 0; e < c.n2; ++e) {
        const std::uint32_t diag = (e / c.n == e % c.n) ? 1 : 0;
        code += ((a[e * kBatch + l] + diag) % c.p) * c.weight[e];
      }
      out.push_back(code);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Matrix> enumerate_u2(const GroupSpec& g, const Limits& lim) {
  std::vector<Matrix> out;
  for (Code code : u2_codes(g, lim)) out.push_back(decode(g, code));
  return out;
}

std::vector<Code> product_set(const GroupSpec& g, int depth, const Limits& lim) {
  if (depth != 2 && depth != 3) fail(ErrorCode::BadParameters, "depth must be 2 or 3");
  validate(g);
  const Ctx c = context(g);
  check_order(g, lim);
  const std::vector<Code> u2 = u2_codes(g, lim);
  std::vector<Code> set = multiply(c, u2, u2, lim);
  if (depth == 3) set = multiply(c, set, u2, lim);
  return set;
}

const char* theorem_name(Theorem t) {
  switch (t) {
    case Theorem::botha: return "botha";
    case Theorem::symplectic2: return "symplectic2";
    case Theorem::symplectic3: return "symplectic3";
    case Theorem::orthogonal2: return "orthogonal2";
  }
  return "?";
}

Theorem parse_theorem(const std::string& s) {
  for (Theorem t : {Theorem::botha, Theorem::symplectic2, Theorem::symplectic3, Theorem::orthogonal2})
    if (s == theorem_name(t)) return t;
  fail(ErrorCode::BadParameters, "unknown theorem '" + s + "'");
}

TheoremReport theorem_check(const GroupSpec& g, Theorem t, const Limits& lim) {
  validate(g);
  const bool gl = g.kind == GroupSpec::Kind::gl;
  if ((t == Theorem::botha) != gl) fail(ErrorCode::BadParameters, "botha pairs with GL groups only");
  if ((t == Theorem::symplectic2 || t == Theorem::symplectic3) && g.eps != -1)
    fail(ErrorCode::BadParameters, "symplectic theorems need eps = -1");
  if (t == Theorem::orthogonal2 && g.eps != 1) fail(ErrorCode::BadParameters, "orthogonal2 needs eps = 1");

  TheoremReport r;
  r.group = g.name();
  r.theorem = theorem_name(t);
  r.depth = t == Theorem::symplectic3 ? 3 : 2;
  const std::vector<Code> group = enumerate_group(g, lim);
  const std::vector<Code> set = product_set(g, r.depth, lim);
  r.group_order = group.size();
  r.set_size = set.size();

  auto predicate = [&](const Matrix& u) {
    switch (t) {
      case Theorem::botha: return gl_decide(u).splittable;
      case Theorem::symplectic2: return sp_decide(Isopair(-1, BilForm::skew(g.gram), u)).splittable;
      case Theorem::symplectic3: return true;
      case Theorem::orthogonal2: return orth_decide(Isopair(1, BilForm::symmetric(g.gram), u)).splittable;
    }
    return false;
  };
  auto mismatch = [&](Code code) {
    ++r.mismatches;
    if (r.counterexamples.size() < kMaxCounterexamples) r.counterexamples.push_back(decode(g, code));
  };
  for (Code code : group) {
    const bool in_set = std::binary_search(set.begin(), set.end(), code);
    const bool pred = predicate(decode(g, code));
    r.predicate_size += pred;
    if (in_set != pred) mismatch(code);
  }
  // Products always stay in the group; anything else is a defect.
  for (Code code : set)
    if (!std::binary_search(group.begin(), group.end(), code)) mismatch(code);
  r.agree = r.mismatches == 0;
  return r;
}

}  // namespace u2split::oracle

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

#include <random>
#include <vector>

#include "u2split/kernels.hpp"

using namespace u2split::kernels;

namespace {

std::vector<std::uint32_t> rand_lanes(std::size_t len, std::uint32_t bound, std::mt19937_64& rng) {
  std::vector<std::uint32_t> v(len);
  for (auto& x : v) x = static_cast<std::uint32_t>(rng() % bound);
  return v;
}

}  // namespace

TEST_CASE("dispatch honours the mode") {
  set_mode(Mode::scalar);
  CHECK(std::string(active().name) == "scalar");
  set_mode(Mode::automatic);
  if (avx2_table()) CHECK(std::string(active().name) == "avx2");
  else CHECK(std::string(active().name) == "scalar");
}

TEST_CASE("avx2 kernels agree with the scalar reference") {
  const KernelTable* fast = avx2_table();
  if (!fast) {
    MESSAGE("AVX2 unavailable; only the scalar table is exercised");
    return;
  }
  const KernelTable& ref = scalar_table();
  std::mt19937_64 rng(11);
  for (std::size_t len : {0u, 1u, 7u, 8u, 9u, 31u, 100u, 1027u}) {
    for (std::uint32_t p : {3u, 5u, 7u, 251u, 65521u}) {
      auto x = rand_lanes(len, p, rng), y = rand_lanes(len, p, rng), acc = rand_lanes(len, 1000, rng);
      const std::uint32_t c = static_cast<std::uint32_t>(rng() % p);
      auto a1 = acc, a2 = acc;
      if (p < 4096) {
        ref.madd(a1.data(), x.data(), c, len);
        fast->madd(a2.data(), x.data(), c, len);
        CHECK(a1 == a2);
        ref.fma(a1.data(), x.data(), y.data(), len);
        fast->fma(a2.data(), x.data(), y.data(), len);
        CHECK(a1 == a2);
      }
      // Full admissible range for reduce, including the top values.
      auto r1 = rand_lanes(len, 1u << 22, rng);
      if (len > 0) r1[0] = (1u << 22) - 1;
      if (len > 1) r1[len - 1] = p * 1000;
      auto r2 = r1;
      ref.reduce(r1.data(), len, p);
      fast->reduce(r2.data(), len, p);
      CHECK(r1 == r2);

      std::vector<std::uint32_t> m1(len, 0), m2(len, 0);
      ref.nonzero_or(m1.data(), r1.data(), len);
      fast->nonzero_or(m2.data(), r1.data(), len);
      CHECK(m1 == m2);

      for (std::uint64_t w : {std::uint64_t{43046721}, std::uint64_t{30517578125}, std::uint64_t{0xfedcba9876543210}}) {
        std::vector<std::uint64_t> c1(len, 5), c2(len, 5);
        ref.encode(c1.data(), x.data(), w, len);
        fast->encode(c2.data(), x.data(), w, len);
        CHECK(c1 == c2);
      }
    }
  }
}

TEST_CASE("reduce is exact on every value below 2^22 for small primes") {
  for (const KernelTable* t : {&scalar_table(), avx2_table()}) {
    if (!t) continue;
    for (std::uint32_t p : {3u, 5u, 7u}) {
      std::vector<std::uint32_t> v(1u << 22);
      for (std::uint32_t i = 0; i < v.size(); ++i) v[i] = i;
      t->reduce(v.data(), v.size(), p);
      bool ok = true;
      for (std::uint32_t i = 0; i < v.size(); ++i) ok = ok && v[i] == i % p;
      CHECK_MESSAGE(ok, t->name << " p=" << p);
    }
  }
}

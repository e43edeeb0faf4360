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

#include <immintrin.h>

#include "u2split/kernels.hpp"

namespace u2split::kernels {

namespace {

void madd(std::uint32_t* acc, const std::uint32_t* x, std::uint32_t c, std::size_t len) {
  const __m256i vc = _mm256_set1_epi32(static_cast<int>(c));
  std::size_t i = 0;
  for (; i + 8 <= len; i += 8) {
    __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(acc + i));
    __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i));
    a = _mm256_add_epi32(a, _mm256_mullo_epi32(b, vc));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(acc + i), a);
  }
  for (; i < len; ++i) acc[i] += c * x[i];
}

void fma(std::uint32_t* acc, const std::uint32_t* x, const std::uint32_t* y, std::size_t len) {
  std::size_t i = 0;
  for (; i + 8 <= len; i += 8) {
    __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(acc + i));
    __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i));
    __m256i c = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y + i));
    a = _mm256_add_epi32(a, _mm256_mullo_epi32(b, c));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(acc + i), a);
  }
  for (; i < len; ++i) acc[i] += x[i] * y[i];
}

// Float quotient estimate, then one correction step each way.
void reduce(std::uint32_t* v, std::size_t len, std::uint32_t p) {
  const __m256 inv = _mm256_set1_ps(1.0f / static_cast<float>(p));
  const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
  const __m256i pm1 = _mm256_set1_epi32(static_cast<int>(p) - 1);
  const __m256i zero = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 8 <= len; i += 8) {
    __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v + i));
    __m256 q = _mm256_floor_ps(_mm256_mul_ps(_mm256_cvtepi32_ps(x), inv));
    __m256i r = _mm256_sub_epi32(x, _mm256_mullo_epi32(_mm256_cvttps_epi32(q), vp));
    r = _mm256_add_epi32(r, _mm256_and_si256(_mm256_cmpgt_epi32(zero, r), vp));
    r = _mm256_sub_epi32(r, _mm256_and_si256(_mm256_cmpgt_epi32(r, pm1), vp));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(v + i), r);
  }
  for (; i < len; ++i) v[i] %= p;
}

void nonzero_or(std::uint32_t* mask, const std::uint32_t* v, std::size_t len) {
  const __m256i zero = _mm256_setzero_si256();
  const __m256i one = _mm256_set1_epi32(1);
  std::size_t i = 0;
  for (; i + 8 <= len; i += 8) {
    __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v + i));
    __m256i m = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(mask + i));
    __m256i nz = _mm256_andnot_si256(_mm256_cmpeq_epi32(x, zero), one);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(mask + i), _mm256_or_si256(m, nz));
  }
  for (; i < len; ++i) mask[i] |= v[i] != 0;
}

void encode(std::uint64_t* codes, const std::uint32_t* v, std::uint64_t weight, std::size_t len) {
  // mul_epu32 only sees the low halves, so split the weight.
  const __m256i wlo = _mm256_set1_epi64x(static_cast<long long>(weight & 0xffffffffULL));
  const __m256i whi = _mm256_set1_epi64x(static_cast<long long>(weight >> 32));
  std::size_t i = 0;
  for (; i + 4 <= len; i += 4) {
    __m256i x = _mm256_cvtepu32_epi64(_mm_loadu_si128(reinterpret_cast<const __m128i*>(v + i)));
    __m256i c = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(codes + i));
    __m256i prod = _mm256_add_epi64(_mm256_mul_epu32(x, wlo), _mm256_slli_epi64(_mm256_mul_epu32(x, whi), 32));
    c = _mm256_add_epi64(c, prod);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(codes + i), c);
  }
  for (; i < len; ++i) codes[i] += v[i] * weight;
}

const KernelTable table{"avx2", madd, fma, reduce, nonzero_or, encode};

}  // namespace

const KernelTable* avx2_table() {
  static const bool ok = __builtin_cpu_supports("avx2");
  return ok ? &table : nullptr;
}

}  // namespace u2split::kernels

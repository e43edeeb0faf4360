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

#include <cstdlib>

#include "u2split/kernels.hpp"

namespace u2split::kernels {

namespace {

void madd(std::uint32_t* acc, const std::uint32_t* x, std::uint32_t c, std::size_t len) {
  for (std::size_t i = 0; i < len; ++i) acc[i] += c * x[i];
}

void fma(std::uint32_t* acc, const std::uint32_t* x, const std::uint32_t* y, std::size_t len) {
  for (std::size_t i = 0; i < len; ++i) acc[i] += x[i] * y[i];
}

void reduce(std::uint32_t* v, std::size_t len, std::uint32_t p) {
  for (std::size_t i = 0; i < len; ++i) v[i] %= p;
}

void nonzero_or(std::uint32_t* mask, const std::uint32_t* v, std::size_t len) {
  for (std::size_t i = 0; i < len; ++i) mask[i] |= v[i] != 0;
}

void encode(std::uint64_t* codes, const std::uint32_t* v, std::uint64_t weight, std::size_t len) {
  for (std::size_t i = 0; i < len; ++i) codes[i] += v[i] * weight;
}

const KernelTable table{"scalar", madd, fma, reduce, nonzero_or, encode};

Mode mode = Mode::automatic;

}  // namespace

const KernelTable& scalar_table() { return table; }

#ifndef U2SPLIT_HAVE_AVX2
const KernelTable* avx2_table() { return nullptr; }
#endif

void set_mode(Mode m) { mode = m; }

const KernelTable& active() {
  if (mode == Mode::scalar) return table;
  const KernelTable* fast = avx2_table();
  return fast ? *fast : table;
}

}  // namespace u2split::kernels

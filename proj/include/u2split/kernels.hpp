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

#ifndef U2SPLIT_KERNELS_HPP
#define U2SPLIT_KERNELS_HPP

#include <cstddef>
#include <cstdint>

namespace u2split::kernels {

/// Lane kernels over uint32 residues in structure-of-arrays layout.
/// Values fed to reduce must stay below 2^22.
struct KernelTable {
  const char* name;
  /// acc[i] += c * x[i]
  void (*madd)(std::uint32_t* acc, const std::uint32_t* x, std::uint32_t c, std::size_t len);
  /// acc[i] += x[i] * y[i]
  void (*fma)(std::uint32_t* acc, const std::uint32_t* x, const std::uint32_t* y, std::size_t len);
  /// v[i] %= p, p < 2^16
  void (*reduce)(std::uint32_t* v, std::size_t len, std::uint32_t p);
  /// mask[i] |= (v[i] != 0)
  void (*nonzero_or)(std::uint32_t* mask, const std::uint32_t* v, std::size_t len);
  /// codes[i] += v[i] * weight (mod 2^64)
  void (*encode)(std::uint64_t* codes, const std::uint32_t* v, std::uint64_t weight, std::size_t len);
};

enum class Mode { automatic, scalar, avx2 };

const KernelTable& scalar_table();
/// nullptr when AVX2 was not compiled in or the CPU lacks it.
const KernelTable* avx2_table();
/// The table chosen by the current mode.
const KernelTable& active();
/// Forces a table; Mode::avx2 falls back to scalar if unavailable.
void set_mode(Mode m);

}  // namespace u2split::kernels

#endif

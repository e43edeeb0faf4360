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

#ifndef U2SPLIT_ORACLE_HPP
#define U2SPLIT_ORACLE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "u2split/matrix.hpp"

namespace u2split::oracle {

/// Brute-force ground truth for small groups over prime fields.
struct Limits {
  std::uint64_t max_group = 1000000;
  std::uint64_t max_params = 100000000;
  unsigned threads = 0;  // 0: hardware concurrency
};

struct GroupSpec {
  enum class Kind { gl, isometry };
  Kind kind = Kind::gl;
  Field field;
  std::size_t n = 0;
  int eps = 0;  // isometry groups only
  Matrix gram;

  static GroupSpec gl(Field f, std::size_t n);
  /// eps = 1: O(gram), eps = -1: Sp(gram).
  static GroupSpec isometry(int eps, Matrix gram);

  /// "GL2(F3)", "Sp4(F3)", "O3(F3)"; the gram is reported separately.
  std::string name() const;
};

/// BadParameters / DegenerateForm / KindMismatch on malformed specs.
void validate(const GroupSpec& g);

/// Group order from the classical formulas; saturates at UINT64_MAX.
std::uint64_t group_order(const GroupSpec& g);

/// Entries packed as base-p digits, entry (i,j) at weight p^(i*n+j).
/// Sorting codes gives the canonical order of a set.
using Code = std::uint64_t;
Code encode(const Matrix& a);
Matrix decode(const GroupSpec& g, Code c);

/// Exact sorted element set of the group; BudgetExceeded above the ceilings.
std::vector<Code> enumerate_group(const GroupSpec& g, const Limits& lim = {});
/// U2 elements I + a, sorted by code.
std::vector<Matrix> enumerate_u2(const GroupSpec& g, const Limits& lim = {});
std::vector<Code> u2_codes(const GroupSpec& g, const Limits& lim = {});

/// {f1 f2} (depth 2) or {f1 f2 f3} (depth 3) over U2 elements, sorted.
std::vector<Code> product_set(const GroupSpec& g, int depth, const Limits& lim = {});

enum class Theorem { botha, symplectic2, symplectic3, orthogonal2 };
const char* theorem_name(Theorem t);
/// BadParameters for unknown names.
Theorem parse_theorem(const std::string& s);

struct TheoremReport {
  std::string group;
  std::string theorem;
  int depth = 2;
  std::uint64_t group_order = 0;
  std::uint64_t set_size = 0;
  std::uint64_t predicate_size = 0;
  bool agree = false;
  std::uint64_t mismatches = 0;
  std::vector<Matrix> counterexamples;  // first few mismatches
};

/// Compares the product set with the decision procedure on every element.
TheoremReport theorem_check(const GroupSpec& g, Theorem t, const Limits& lim = {});

}  // namespace u2split::oracle

#endif

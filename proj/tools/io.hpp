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

#ifndef U2SPLIT_TOOLS_IO_HPP
#define U2SPLIT_TOOLS_IO_HPP

#include <json.hpp>
#include <optional>
#include <string>

#include "u2split/factor.hpp"
#include "u2split/isopair.hpp"
#include "u2split/oracle.hpp"

namespace u2split::io {

using nlohmann::json;

inline constexpr const char* kSchema = "u2split/1";

/// Indented JSON with arrays of scalars kept on one line.
std::string dump(const json& j);

/// "F_3", "F3", "GF(3)", 3 or "Q".
Field parse_field(const json& j);
json field_json(const Field& f);

Scalar parse_scalar(const Field& f, const json& j);
/// Residues as integers over F_p; strings "n" or "n/d" over Q.
json scalar_json(const Scalar& s);
Matrix parse_matrix(const Field& f, const json& j);
json matrix_json(const Matrix& m);
/// Coefficients lowest degree first.
json poly_json(const Poly& p);

/// A problem file: field, u, and optionally eps and gram (gl mode).
struct Problem {
  Field field;
  Matrix u;
  std::optional<int> eps;
  std::optional<Matrix> gram;
  std::optional<U2Factorization> factors;

  /// ParseError when eps or gram is missing.
  Isopair isopair() const;
};

/// ParseError on malformed input, DimensionMismatch on inconsistent sizes.
Problem parse_problem(const json& j);
json isopair_json(const Isopair& p);

json wall_json(const WallData& w);
json verdict_json(const Verdict& v);
json factors_json(const U2Factorization& f);
json report_json(const VerificationReport& r);
json theorem_json(const oracle::TheoremReport& r, const oracle::GroupSpec& g);

/// Human-readable tables.
std::string wall_text(const WallData& w);
std::string verdict_text(const Verdict& v);
std::string theorem_text(const oracle::TheoremReport& r);

}  // namespace u2split::io

#endif

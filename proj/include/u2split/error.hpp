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

#ifndef U2SPLIT_ERROR_HPP
#define U2SPLIT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace u2split {

enum class ErrorCode {
  DivisionByZero,
  UnsupportedField,
  FieldMismatch,
  ParseError,
  ZeroConstantTerm,
  NotPalindromial,
  OddDegree,
  NotIrreducible,
  DegenerateModulus,
  NonSquare,
  NotSimilar,
  NotStable,
  KindMismatch,
  DegenerateForm,
  WrongKind,
  ParityMismatch,
  BadModulus,
  EpsMismatch,
  NotUnipotent,
  BadParameters,
  InadmissibleShape,
  NotInvertible,
  NotSplittable,
  NotCyclic,
  DeterminantMismatch,
  NotIsometric,
  TransportBudgetExceeded,
  BudgetExceeded,
  InvalidIsopair,
  DimensionMismatch,
  VerificationFailed,
};

const char* error_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace u2split

#endif

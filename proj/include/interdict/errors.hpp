// Copyright 2026 The interdict Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef INTERDICT_ERRORS_HPP_
#define INTERDICT_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace interdict {

enum class ErrorCode {
  kEmptyInstance,
  kNegativeEntry,
  kDimensionMismatch,
  kDeltaOutOfRange,
  kDimensionTooSmall,
  kModeMismatch,
  kInvalidHittingSet,
  kInstanceTooLarge,
  kNotSorted,
  kMissingDummy,
  kUnsortedItems,
  kDanglingCritical,
  kNotExtremePoint,
  kWrongDimension,
  kEpsilonOutOfRange,
  kBudgetViolation,
  kTauOutOfRange,
  kZeroResidual,
  kZeroWeightItem,
  kDanglingSubgroup,
  kAlphaOutOfRange,
  kRoundLimit,
  kSeparatorContradiction,
  kUnbounded,
  kParse,
  kUnknownSuite,
};

inline const char* error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kEmptyInstance: return "EmptyInstance";
    case ErrorCode::kNegativeEntry: return "NegativeEntry";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kDeltaOutOfRange: return "DeltaOutOfRange";
    case ErrorCode::kDimensionTooSmall: return "DimensionTooSmall";
    case ErrorCode::kModeMismatch: return "ModeMismatch";
    case ErrorCode::kInvalidHittingSet: return "InvalidHittingSet";
    case ErrorCode::kInstanceTooLarge: return "InstanceTooLarge";
    case ErrorCode::kNotSorted: return "NotSorted";
    case ErrorCode::kMissingDummy: return "MissingDummy";
    case ErrorCode::kUnsortedItems: return "UnsortedItems";
    case ErrorCode::kDanglingCritical: return "DanglingCritical";
    case ErrorCode::kNotExtremePoint: return "NotExtremePoint";
    case ErrorCode::kWrongDimension: return "WrongDimension";
    case ErrorCode::kEpsilonOutOfRange: return "EpsilonOutOfRange";
    case ErrorCode::kBudgetViolation: return "BudgetViolation";
    case ErrorCode::kTauOutOfRange: return "TauOutOfRange";
    case ErrorCode::kZeroResidual: return "ZeroResidual";
    case ErrorCode::kZeroWeightItem: return "ZeroWeightItem";
    case ErrorCode::kDanglingSubgroup: return "DanglingSubgroup";
    case ErrorCode::kAlphaOutOfRange: return "AlphaOutOfRange";
    case ErrorCode::kRoundLimit: return "RoundLimit";
    case ErrorCode::kSeparatorContradiction: return "SeparatorContradiction";
    case ErrorCode::kUnbounded: return "Unbounded";
    case ErrorCode::kParse: return "Parse";
    case ErrorCode::kUnknownSuite: return "UnknownSuite";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what),
        code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace interdict

#endif  // INTERDICT_ERRORS_HPP_

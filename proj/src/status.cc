// Copyright 2026 The Authors.
//
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

#include "fairsc/status.h"

namespace fairsc {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
      return "InvalidArgument";
    case ErrorCode::kSumNotOne:
      return "SumNotOne";
    case ErrorCode::kNegativeFraction:
      return "NegativeFraction";
    case ErrorCode::kPCapExceeded:
      return "PCapExceeded";
    case ErrorCode::kZeroFractionViolated:
      return "ZeroFractionViolated";
    case ErrorCode::kInsufficientColor:
      return "InsufficientColor";
    case ErrorCode::kNoProgress:
      return "NoProgress";
    case ErrorCode::kAllTuplesZeroCoverage:
      return "AllTuplesZeroCoverage";
    case ErrorCode::kDimensionMismatch:
      return "DimensionMismatch";
    case ErrorCode::kNumericalFailure:
      return "NumericalFailure";
    case ErrorCode::kResampleCapExceeded:
      return "ResampleCapExceeded";
    case ErrorCode::kAllTauInfeasible:
      return "AllTauInfeasible";
    case ErrorCode::kInfeasibleRequirement:
      return "InfeasibleRequirement";
    case ErrorCode::kBudgetExceeded:
      return "BudgetExceeded";
    case ErrorCode::kParseError:
      return "ParseError";
    case ErrorCode::kInvalidMatrix:
      return "InvalidMatrix";
    case ErrorCode::kIoError:
      return "IoError";
  }
  return "Unknown";
}

bool IsInputError(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
    case ErrorCode::kSumNotOne:
    case ErrorCode::kNegativeFraction:
    case ErrorCode::kPCapExceeded:
    case ErrorCode::kDimensionMismatch:
    case ErrorCode::kInfeasibleRequirement:
    case ErrorCode::kBudgetExceeded:
    case ErrorCode::kParseError:
    case ErrorCode::kInvalidMatrix:
    case ErrorCode::kIoError:
      return true;
    default:
      return false;
  }
}

}  // namespace fairsc

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

#ifndef FAIRSC_STATUS_H_
#define FAIRSC_STATUS_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace fairsc {

enum class ErrorCode {
  kInvalidArgument,
  kSumNotOne,
  kNegativeFraction,
  kPCapExceeded,
  kZeroFractionViolated,
  kInsufficientColor,
  kNoProgress,
  kAllTuplesZeroCoverage,
  kDimensionMismatch,
  kNumericalFailure,
  kResampleCapExceeded,
  kAllTauInfeasible,
  kInfeasibleRequirement,
  kBudgetExceeded,
  kParseError,
  kInvalidMatrix,
  kIoError,
};

std::string_view ErrorCodeName(ErrorCode code);

// True for errors caused by malformed or unsupported input, as opposed to an
// algorithm failing on a well-formed instance.
bool IsInputError(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace fairsc

#endif  // FAIRSC_STATUS_H_

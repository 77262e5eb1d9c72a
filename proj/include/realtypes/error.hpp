// Copyright 2026 The realtypes Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef REALTYPES_ERROR_HPP
#define REALTYPES_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace realtypes {

enum class ErrorCode {
  kInvalidSign,
  kInvalidShape,
  kMisplacedZero,
  kZeroInOddColumn,
  kEvenColumnWithoutZero,
  kSignChangeWithoutRoot,
  kDomainError,
  kEmptyFamily,
  kDimensionMismatch,
  kBudgetExceeded,
  kNotRealizable,
  kZeroPolynomial,
  kEndpointIsRoot,
  kNotSquarefree,
  kParseError,
};

std::string_view to_string(ErrorCode code) noexcept;

// All library failures are reported through this exception type; `code()`
// identifies the failure class, `what()` carries the location details.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace realtypes

#endif  // REALTYPES_ERROR_HPP

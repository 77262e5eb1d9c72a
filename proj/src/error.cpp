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


#include "realtypes/error.hpp"

namespace realtypes {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kInvalidSign: return "InvalidSign";
    case ErrorCode::kInvalidShape: return "InvalidShape";
    case ErrorCode::kMisplacedZero: return "MisplacedZero";
    case ErrorCode::kZeroInOddColumn: return "ZeroInOddColumn";
    case ErrorCode::kEvenColumnWithoutZero: return "EvenColumnWithoutZero";
    case ErrorCode::kSignChangeWithoutRoot: return "SignChangeWithoutRoot";
    case ErrorCode::kDomainError: return "DomainError";
    case ErrorCode::kEmptyFamily: return "EmptyFamily";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kNotRealizable: return "NotRealizable";
    case ErrorCode::kZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::kEndpointIsRoot: return "EndpointIsRoot";
    case ErrorCode::kNotSquarefree: return "NotSquarefree";
    case ErrorCode::kParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace realtypes

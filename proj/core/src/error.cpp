// Copyright 2026 The qworlds Authors
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

#include "qworlds/error.hpp"

namespace qworlds {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kSyntaxError: return "SyntaxError";
    case ErrorCode::kNotALattice: return "NotALattice";
    case ErrorCode::kNotOrtho: return "NotOrtho";
    case ErrorCode::kNotOrthomodular: return "NotOrthomodular";
    case ErrorCode::kSizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorCode::kElementNotInContext: return "ElementNotInContext";
    case ErrorCode::kMismatchedPresheaf: return "MismatchedPresheaf";
    case ErrorCode::kNotASubobject: return "NotASubobject";
    case ErrorCode::kNotALowerSet: return "NotLowerSet";
    case ErrorCode::kUnboundVariable: return "UnboundVariable";
    case ErrorCode::kUnboundedQuantifier: return "UnboundedQuantifier";
    case ErrorCode::kAlgebraMismatch: return "AlgebraMismatch";
    case ErrorCode::kLiteralParseError: return "LiteralParseError";
    case ErrorCode::kFormulaNotNegationFree: return "FormulaNotNegationFree";
    case ErrorCode::kFormulaNotDelta0: return "FormulaNotDelta0";
    case ErrorCode::kNotASpectralFamily: return "NotASpectralFamily";
    case ErrorCode::kNotRegular: return "NotRegular";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code) {}

}  // namespace qworlds

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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qworlds {

enum class ErrorCode {
  kSyntaxError,
  kNotALattice,
  kNotOrtho,
  kNotOrthomodular,
  kSizeLimitExceeded,
  kElementNotInContext,
  kMismatchedPresheaf,
  kNotASubobject,
  kNotALowerSet,
  kUnboundVariable,
  kUnboundedQuantifier,
  kAlgebraMismatch,
  kLiteralParseError,
  kFormulaNotNegationFree,
  kFormulaNotDelta0,
  kNotASpectralFamily,
  kNotRegular,
  kInvalidArgument,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries one of the codes above so the
// command-line front end can map it onto a stable exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace qworlds

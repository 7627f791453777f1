// Copyright 2026 The qassert Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qassert/errors.hpp"

namespace qassert {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::SyntaxError:
      return "SyntaxError";
    case ErrorCode::UnknownGate:
      return "UnknownGate";
    case ErrorCode::IndexOutOfRange:
      return "IndexOutOfRange";
    case ErrorCode::ArityMismatch:
      return "ArityMismatch";
    case ErrorCode::InvalidPosition:
      return "InvalidPosition";
    case ErrorCode::IllFormedResult:
      return "IllFormedResult";
    case ErrorCode::DimensionMismatch:
      return "DimensionMismatch";
    case ErrorCode::NotDiagonal:
      return "NotDiagonal";
    case ErrorCode::TooLarge:
      return "TooLarge";
    case ErrorCode::NotCoprime:
      return "NotCoprime";
    case ErrorCode::ExecutorFailure:
      return "ExecutorFailure";
    case ErrorCode::NotPsd:
      return "NotPsd";
    case ErrorCode::DegenerateExpected:
      return "DegenerateExpected";
    case ErrorCode::UnsupportedFunctional:
      return "UnsupportedFunctional";
    case ErrorCode::IncompatibleAssertion:
      return "IncompatibleAssertion";
    case ErrorCode::BudgetExceeded:
      return "BudgetExceeded";
    case ErrorCode::InvalidArgument:
      return "InvalidArgument";
    case ErrorCode::IoError:
      return "IoError";
  }
  return "UnknownError";
}

}  // namespace qassert

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

#ifndef QASSERT_ERRORS_HPP_
#define QASSERT_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace qassert {

enum class ErrorCode {
  SyntaxError,
  UnknownGate,
  IndexOutOfRange,
  ArityMismatch,
  InvalidPosition,
  IllFormedResult,
  DimensionMismatch,
  NotDiagonal,
  TooLarge,
  NotCoprime,
  ExecutorFailure,
  NotPsd,
  DegenerateExpected,
  UnsupportedFunctional,
  IncompatibleAssertion,
  BudgetExceeded,
  InvalidArgument,
  IoError,
};

const char* error_code_name(ErrorCode code);

// All library failures are reported through this exception type; callers
// dispatch on code() rather than on the message text.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " +
                           message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace qassert

#endif  // QASSERT_ERRORS_HPP_

// Copyright 2026 The blockest Authors
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

#ifndef BLOCKEST_ERROR_HPP
#define BLOCKEST_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace blockest {

enum class ErrorCode {
  kNotHermitian,
  kNotUnitary,
  kNormTooLarge,
  kDimensionMismatch,
  kLengthMismatch,
  kEmptySum,
  kNotNormalized,
  kOutOfRange,
  kInvalidProjector,
  kBadInterval,
  kRangeViolation,
  kGridOutOfRange,
  kPolyNotBounded,
  kInexactInput,
  kCostOverflow,
  kScaleTooSmall,
  kEmptyObservables,
  kCertificationFailed,
  kParseError,
  kValidationError,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries one of the codes above so that
// callers (and tests) can branch on the kind of failure rather than the text.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

}  // namespace blockest

#endif  // BLOCKEST_ERROR_HPP

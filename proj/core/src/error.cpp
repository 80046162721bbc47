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

#include "blockest/error.hpp"

namespace blockest {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotHermitian: return "NotHermitian";
    case ErrorCode::kNotUnitary: return "NotUnitary";
    case ErrorCode::kNormTooLarge: return "NormTooLarge";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kEmptySum: return "EmptySum";
    case ErrorCode::kNotNormalized: return "NotNormalized";
    case ErrorCode::kOutOfRange: return "OutOfRange";
    case ErrorCode::kInvalidProjector: return "InvalidProjector";
    case ErrorCode::kBadInterval: return "BadInterval";
    case ErrorCode::kRangeViolation: return "RangeViolation";
    case ErrorCode::kGridOutOfRange: return "GridOutOfRange";
    case ErrorCode::kPolyNotBounded: return "PolyNotBounded";
    case ErrorCode::kInexactInput: return "InexactInput";
    case ErrorCode::kCostOverflow: return "CostOverflow";
    case ErrorCode::kScaleTooSmall: return "ScaleTooSmall";
    case ErrorCode::kEmptyObservables: return "EmptyObservables";
    case ErrorCode::kCertificationFailed: return "CertificationFailed";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kValidationError: return "ValidationError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code) {}

void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace blockest

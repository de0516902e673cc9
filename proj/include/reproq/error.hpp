// Copyright 2026 The reproq Authors
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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace reproq {

inline constexpr std::string_view kVersion = "1.0.0";

enum class ErrorCode {
  kEmptySample,
  kInsufficientSample,
  kNonFiniteValue,
  kZeroDispersion,
  kBadProbability,
  kNonPositiveMean,
  kOutOfScale,
  kBadScale,
  kInvalidSet,
  kNotRepeatability,
  kUnknownCondition,
  kParse,
  kMissingColumn,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kEmptySample: return "EMPTY_SAMPLE";
    case ErrorCode::kInsufficientSample: return "INSUFFICIENT_SAMPLE";
    case ErrorCode::kNonFiniteValue: return "NONFINITE_VALUE";
    case ErrorCode::kZeroDispersion: return "ZERO_DISPERSION";
    case ErrorCode::kBadProbability: return "BAD_PROBABILITY";
    case ErrorCode::kNonPositiveMean: return "NONPOSITIVE_MEAN";
    case ErrorCode::kOutOfScale: return "OUT_OF_SCALE";
    case ErrorCode::kBadScale: return "BAD_SCALE";
    case ErrorCode::kInvalidSet: return "INVALID_SET";
    case ErrorCode::kNotRepeatability: return "NOT_REPEATABILITY";
    case ErrorCode::kUnknownCondition: return "UNKNOWN_CONDITION";
    case ErrorCode::kParse: return "PARSE_ERROR";
    case ErrorCode::kMissingColumn: return "MISSING_COLUMN";
  }
  return "UNKNOWN";
}

/// Exception carrying a machine-readable code. All library failures that are
/// not reported as data (violations, caveats) surface as this type.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace reproq

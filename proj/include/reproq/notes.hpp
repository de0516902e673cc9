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

#include <optional>
#include <string>
#include <string_view>

namespace reproq {

/// Tagged caveats attached to precision reports and assessment results.
enum class NoteCode {
  kSampleTooSmall,
  kZeroDispersion,
  kNegativeCiLower,
  kNonPositiveMean,
  kBaselineUnavailable,
  kBaselineNotConverged,
  kUnequalN,
  kSingletonGroup,
  kIndeterminateGroup,
  kIndeterminateConditions,
  kNoScoreableGroups,
};

enum class Severity { kWarning, kError };

constexpr std::string_view to_string(NoteCode code) {
  switch (code) {
    case NoteCode::kSampleTooSmall: return "SAMPLE_TOO_SMALL";
    case NoteCode::kZeroDispersion: return "ZERO_DISPERSION";
    case NoteCode::kNegativeCiLower: return "NEGATIVE_CI_LOWER";
    case NoteCode::kNonPositiveMean: return "NONPOSITIVE_MEAN";
    case NoteCode::kBaselineUnavailable: return "BASELINE_UNAVAILABLE";
    case NoteCode::kBaselineNotConverged: return "BASELINE_NOT_CONVERGED";
    case NoteCode::kUnequalN: return "UNEQUAL_N";
    case NoteCode::kSingletonGroup: return "SINGLETON_GROUP";
    case NoteCode::kIndeterminateGroup: return "INDETERMINATE_GROUP";
    case NoteCode::kIndeterminateConditions: return "INDETERMINATE_CONDITIONS";
    case NoteCode::kNoScoreableGroups: return "NO_SCOREABLE_GROUPS";
  }
  return "UNKNOWN";
}

inline std::optional<NoteCode> note_code_from_string(std::string_view text) {
  for (int i = 0; i <= static_cast<int>(NoteCode::kNoScoreableGroups); ++i) {
    const auto code = static_cast<NoteCode>(i);
    if (to_string(code) == text) return code;
  }
  return std::nullopt;
}

/// Error-level notes mean a score could not be produced at all.
constexpr Severity severity(NoteCode code) {
  switch (code) {
    case NoteCode::kNonPositiveMean:
    case NoteCode::kNoScoreableGroups:
      return Severity::kError;
    default:
      return Severity::kWarning;
  }
}

struct Note {
  NoteCode code;
  std::string detail;

  friend bool operator==(const Note&, const Note&) = default;
};

}  // namespace reproq

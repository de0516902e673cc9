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

// Measurements, conditions of measurement, and the repeatability versus
// reproducibility classification of a measurement set.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <initializer_list>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "reproq/error.hpp"
#include "reproq/text.hpp"

namespace reproq::model {

enum class ConditionGroup { kObject, kMethod, kProcedure };

constexpr std::string_view to_string(ConditionGroup group) {
  switch (group) {
    case ConditionGroup::kObject: return "object";
    case ConditionGroup::kMethod: return "method";
    case ConditionGroup::kProcedure: return "procedure";
  }
  return "object";
}

/// CSV column prefix letter: O, N or P.
constexpr char prefix_of(ConditionGroup group) {
  switch (group) {
    case ConditionGroup::kObject: return 'O';
    case ConditionGroup::kMethod: return 'N';
    case ConditionGroup::kProcedure: return 'P';
  }
  return 'O';
}

inline std::optional<ConditionGroup> group_from_string(std::string_view s) {
  const std::string n = text::normalize(s);
  if (n == "object" || n == "o") return ConditionGroup::kObject;
  if (n == "method" || n == "n") return ConditionGroup::kMethod;
  if (n == "procedure" || n == "p") return ConditionGroup::kProcedure;
  return std::nullopt;
}

struct QuantityValue {
  double magnitude = 0;
  std::string unit;

  friend bool operator==(const QuantityValue&, const QuantityValue&) = default;
};

/// A condition value that may be missing ("?") or recorded with doubt
/// ("JF?"). Only Known values ever compare equal.
class ConditionValue {
 public:
  enum class State { kKnown, kUnknown, kPartiallyKnown };

  ConditionValue() = default;

  static ConditionValue known(std::string value) {
    if (text::trim(value).empty()) {
      throw Error(ErrorCode::kParse, "known condition value must be non-empty");
    }
    return ConditionValue(State::kKnown, std::string(text::trim(value)));
  }
  static ConditionValue unknown() { return ConditionValue(State::kUnknown, ""); }
  static ConditionValue partially_known(std::string value) {
    return ConditionValue(State::kPartiallyKnown, std::string(text::trim(value)));
  }

  /// "" and "?" are Unknown; a trailing "?" marks PartiallyKnown.
  static ConditionValue parse(std::string_view raw) {
    const std::string_view t = text::trim(raw);
    if (t.empty() || t == "?") return unknown();
    if (t.back() == '?') return partially_known(std::string(t.substr(0, t.size() - 1)));
    return known(std::string(t));
  }

  State state() const noexcept { return state_; }
  bool is_known() const noexcept { return state_ == State::kKnown; }
  const std::string& value() const noexcept { return value_; }

  std::string display() const {
    switch (state_) {
      case State::kKnown: return value_;
      case State::kUnknown: return "?";
      case State::kPartiallyKnown: return value_ + "?";
    }
    return "?";
  }

  /// Grouping key: normalized text, with the doubt marker kept so that
  /// "0" and "0?" never share a key.
  std::string key() const {
    switch (state_) {
      case State::kKnown: return text::normalize(value_);
      case State::kUnknown: return "?";
      case State::kPartiallyKnown: return text::normalize(value_) + "?";
    }
    return "?";
  }

  /// Three-valued equality collapsed to bool: true only when both are Known
  /// and normalize to the same text.
  bool same_as(const ConditionValue& other) const {
    return is_known() && other.is_known() && key() == other.key();
  }

  friend bool operator==(const ConditionValue&, const ConditionValue&) = default;

 private:
  ConditionValue(State state, std::string value) : state_(state), value_(std::move(value)) {}

  State state_ = State::kUnknown;
  std::string value_;
};

struct Condition {
  std::string name;
  ConditionGroup group = ConditionGroup::kObject;
  ConditionValue value;

  friend bool operator==(const Condition&, const Condition&) = default;
};

class ConditionSet {
 public:
  ConditionSet() = default;
  ConditionSet(std::initializer_list<Condition> conditions) {
    for (const auto& c : conditions) add(c);
  }

  /// Throws INVALID_SET if (name, group) is already present.
  void add(Condition condition) {
    for (const auto& c : conditions_) {
      if (c.name == condition.name && c.group == condition.group) {
        throw Error(ErrorCode::kInvalidSet, "duplicate condition '" + condition.name + "'");
      }
    }
    conditions_.push_back(std::move(condition));
  }

  const Condition* find(std::string_view name) const {
    for (const auto& c : conditions_) {
      if (c.name == name) return &c;
    }
    return nullptr;
  }

  const std::vector<Condition>& conditions() const noexcept { return conditions_; }

  friend bool operator==(const ConditionSet&, const ConditionSet&) = default;

 private:
  std::vector<Condition> conditions_;
};

struct SchemaEntry {
  std::string name;
  ConditionGroup group = ConditionGroup::kObject;
  std::string description;

  friend bool operator==(const SchemaEntry&, const SchemaEntry&) = default;
};

struct ConditionSchema {
  std::string name;
  std::string version;
  std::vector<SchemaEntry> conditions;

  const SchemaEntry* find(std::string_view condition) const {
    for (const auto& e : conditions) {
      if (e.name == condition) return &e;
    }
    return nullptr;
  }

  /// Throws INVALID_SET on duplicate condition names.
  void check() const {
    std::set<std::string> seen;
    for (const auto& e : conditions) {
      if (e.name.empty()) throw Error(ErrorCode::kInvalidSet, "schema condition with empty name");
      if (!seen.insert(e.name).second) {
        throw Error(ErrorCode::kInvalidSet, "duplicate schema condition '" + e.name + "'");
      }
    }
  }

  friend bool operator==(const ConditionSchema&, const ConditionSchema&) = default;
};

/// YYYY or YYYY-MM-DD.
struct Date {
  int year = 0;
  std::optional<int> month;
  std::optional<int> day;

  std::string display() const {
    char buf[32];
    if (month && day) {
      std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", year, *month, *day);
    } else {
      std::snprintf(buf, sizeof(buf), "%04d", year);
    }
    return buf;
  }

  friend bool operator==(const Date&, const Date&) = default;
};

/// Parses "YYYY", "YYYY-MM-DD"; "?" or empty gives nullopt. Throws PARSE_ERROR
/// on anything else.
inline std::optional<Date> parse_date(std::string_view raw) {
  const std::string_view t = text::trim(raw);
  if (t.empty() || t == "?") return std::nullopt;
  const auto digits = [](std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  if (t.size() == 4 && digits(t)) return Date{std::stoi(std::string(t)), std::nullopt, std::nullopt};
  if (t.size() == 10 && t[4] == '-' && t[7] == '-' && digits(t.substr(0, 4)) && digits(t.substr(5, 2)) &&
      digits(t.substr(8, 2))) {
    const int month = std::stoi(std::string(t.substr(5, 2)));
    const int day = std::stoi(std::string(t.substr(8, 2)));
    if (month >= 1 && month <= 12 && day >= 1 && day <= 31) {
      return Date{std::stoi(std::string(t.substr(0, 4))), month, day};
    }
  }
  throw Error(ErrorCode::kParse, "bad date '" + std::string(t) + "' (expected YYYY, YYYY-MM-DD or ?)");
}

/// One measured quantity value with its identifying metadata. Date and team
/// are provenance: reported, never used for classification.
struct Measurement {
  std::string object_id;
  std::string measurand;
  QuantityValue value;
  std::optional<Date> date;
  ConditionValue team;
  ConditionSet conditions;
  std::string source;

  friend bool operator==(const Measurement&, const Measurement&) = default;
};

/// Original scale of a set produced by rescale_to_zero.
struct Rescaling {
  double scale_min = 0;
  double scale_max = 0;
  std::string original_unit;

  friend bool operator==(const Rescaling&, const Rescaling&) = default;
};

struct MeasurementSet {
  std::vector<Measurement> measurements;
  ConditionSchema schema;
  std::optional<Rescaling> rescaling;

  std::size_t size() const noexcept { return measurements.size(); }

  std::vector<double> values() const {
    std::vector<double> out;
    out.reserve(measurements.size());
    for (const auto& m : measurements) out.push_back(m.value.magnitude);
    return out;
  }

  friend bool operator==(const MeasurementSet&, const MeasurementSet&) = default;
};

enum class ViolationCode {
  kTooFewMeasurements,
  kMixedObject,
  kMixedMeasurand,
  kMixedUnit,
  kEmptyUnit,
  kNonFiniteValue,
  kUnknownCondition,
  kMissingCondition,
  kGroupMismatch,
};

constexpr std::string_view to_string(ViolationCode code) {
  switch (code) {
    case ViolationCode::kTooFewMeasurements: return "TOO_FEW_MEASUREMENTS";
    case ViolationCode::kMixedObject: return "MIXED_OBJECT";
    case ViolationCode::kMixedMeasurand: return "MIXED_MEASURAND";
    case ViolationCode::kMixedUnit: return "MIXED_UNIT";
    case ViolationCode::kEmptyUnit: return "EMPTY_UNIT";
    case ViolationCode::kNonFiniteValue: return "NONFINITE_VALUE";
    case ViolationCode::kUnknownCondition: return "UNKNOWN_CONDITION";
    case ViolationCode::kMissingCondition: return "MISSING_CONDITION";
    case ViolationCode::kGroupMismatch: return "GROUP_MISMATCH";
  }
  return "UNKNOWN";
}

struct Violation {
  ViolationCode code;
  std::optional<std::size_t> row;  // 0-based measurement index
  std::string message;

  friend bool operator==(const Violation&, const Violation&) = default;
};

/// Empty iff all measurements share object, measurand and unit, there are at
/// least two of them, and every condition conforms to the schema.
inline std::vector<Violation> validate_set(const MeasurementSet& set) {
  std::vector<Violation> out;
  if (set.size() < 2) {
    out.push_back({ViolationCode::kTooFewMeasurements, std::nullopt,
                   "assessment needs at least 2 measurements, got " + std::to_string(set.size())});
  }
  if (set.measurements.empty()) return out;

  const Measurement& first = set.measurements.front();
  for (std::size_t i = 0; i < set.size(); ++i) {
    const Measurement& m = set.measurements[i];
    if (text::normalize(m.object_id) != text::normalize(first.object_id)) {
      out.push_back({ViolationCode::kMixedObject, i,
                     "object '" + m.object_id + "' differs from '" + first.object_id + "'"});
    }
    if (text::normalize(m.measurand) != text::normalize(first.measurand)) {
      out.push_back({ViolationCode::kMixedMeasurand, i,
                     "measurand '" + m.measurand + "' differs from '" + first.measurand + "'"});
    }
    if (text::trim(m.value.unit).empty()) {
      out.push_back({ViolationCode::kEmptyUnit, i, "unit is empty"});
    } else if (text::normalize(m.value.unit) != text::normalize(first.value.unit)) {
      out.push_back({ViolationCode::kMixedUnit, i,
                     "unit '" + m.value.unit + "' differs from '" + first.value.unit + "'"});
    }
    if (!std::isfinite(m.value.magnitude)) {
      out.push_back({ViolationCode::kNonFiniteValue, i, "value is not finite"});
    }
    for (const auto& c : m.conditions.conditions()) {
      const SchemaEntry* entry = set.schema.find(c.name);
      if (entry == nullptr) {
        out.push_back({ViolationCode::kUnknownCondition, i,
                       "condition '" + c.name + "' is not in schema '" + set.schema.name + "'"});
      } else if (entry->group != c.group) {
        out.push_back({ViolationCode::kGroupMismatch, i,
                       "condition '" + c.name + "' is a " + std::string(to_string(entry->group)) +
                           " condition in the schema, recorded as " + std::string(to_string(c.group))});
      }
    }
    for (const auto& e : set.schema.conditions) {
      if (m.conditions.find(e.name) == nullptr) {
        out.push_back({ViolationCode::kMissingCondition, i, "condition '" + e.name + "' not recorded"});
      }
    }
  }
  return out;
}

enum class ConditionStatus { kAllSame, kDiffers, kIndeterminate };

constexpr std::string_view to_string(ConditionStatus status) {
  switch (status) {
    case ConditionStatus::kAllSame: return "all_same";
    case ConditionStatus::kDiffers: return "differs";
    case ConditionStatus::kIndeterminate: return "indeterminate";
  }
  return "indeterminate";
}

struct ConditionDiff {
  std::string name;
  ConditionGroup group = ConditionGroup::kObject;
  ConditionStatus status = ConditionStatus::kIndeterminate;

  friend bool operator==(const ConditionDiff&, const ConditionDiff&) = default;
};

/// Per schema condition, in schema order. Any Unknown, PartiallyKnown or
/// missing value makes the condition Indeterminate, even when the known
/// values already disagree.
inline std::vector<ConditionDiff> condition_diff(const MeasurementSet& set) {
  std::vector<ConditionDiff> out;
  out.reserve(set.schema.conditions.size());
  for (const auto& entry : set.schema.conditions) {
    bool any_unknown = false;
    std::set<std::string> keys;
    for (const auto& m : set.measurements) {
      const Condition* c = m.conditions.find(entry.name);
      if (c == nullptr || !c->value.is_known()) {
        any_unknown = true;
      } else {
        keys.insert(c->value.key());
      }
    }
    ConditionStatus status = ConditionStatus::kAllSame;
    if (any_unknown) {
      status = ConditionStatus::kIndeterminate;
    } else if (keys.size() > 1) {
      status = ConditionStatus::kDiffers;
    }
    out.push_back({entry.name, entry.group, status});
  }
  return out;
}

enum class Classification { kRepeatability, kReproducibility, kIndeterminate };

constexpr std::string_view to_string(Classification c) {
  switch (c) {
    case Classification::kRepeatability: return "repeatability";
    case Classification::kReproducibility: return "reproducibility";
    case Classification::kIndeterminate: return "indeterminate";
  }
  return "indeterminate";
}

inline Classification classify(const std::vector<ConditionDiff>& diff) {
  bool indeterminate = false;
  for (const auto& d : diff) {
    if (d.status == ConditionStatus::kDiffers) return Classification::kReproducibility;
    if (d.status == ConditionStatus::kIndeterminate) indeterminate = true;
  }
  return indeterminate ? Classification::kIndeterminate : Classification::kRepeatability;
}

inline Classification classify(const MeasurementSet& set) { return classify(condition_diff(set)); }

namespace detail {

inline std::string relabel_unit(const std::string& unit, double scale_min, double scale_max) {
  const std::string from = text::shortest(scale_min) + ".." + text::shortest(scale_max);
  const std::string to = "0.." + text::shortest(scale_max - scale_min);
  const auto pos = unit.find(from);
  if (pos != std::string::npos) {
    std::string out = unit;
    out.replace(pos, from.size(), to);
    return out;
  }
  return unit + " (" + to + ")";
}

}  // namespace detail

/// Shifts every value by -scale_min so the rating scale starts at 0, and
/// relabels the unit ("rating-1..7" becomes "rating-0..6"). Dispersion is
/// untouched; CV and CV* change because the mean does.
inline MeasurementSet rescale_to_zero(const MeasurementSet& set, double scale_min, double scale_max) {
  if (!std::isfinite(scale_min) || !std::isfinite(scale_max) || !(scale_min < scale_max)) {
    throw Error(ErrorCode::kBadScale, "scale minimum must be below the maximum");
  }
  MeasurementSet out = set;
  for (std::size_t i = 0; i < out.size(); ++i) {
    Measurement& m = out.measurements[i];
    const double v = m.value.magnitude;
    if (!(v >= scale_min && v <= scale_max)) {
      throw Error(ErrorCode::kOutOfScale, "row " + std::to_string(i + 1) + ": value " + text::shortest(v) +
                                              " outside scale " + text::shortest(scale_min) + ".." +
                                              text::shortest(scale_max));
    }
    m.value.magnitude = v - scale_min;
    m.value.unit = detail::relabel_unit(m.value.unit, scale_min, scale_max);
  }
  if (!out.rescaling) {
    out.rescaling = Rescaling{scale_min, scale_max,
                              set.measurements.empty() ? std::string() : set.measurements.front().value.unit};
  } else {
    out.rescaling->scale_min += scale_min;
    out.rescaling->scale_max = out.rescaling->scale_min + (scale_max - scale_min);
  }
  return out;
}

}  // namespace reproq::model

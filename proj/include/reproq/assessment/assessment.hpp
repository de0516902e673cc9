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

// 1-phase and 2-phase reproducibility assessment.
//
// 1-phase: score an existing set of measurements as a single R; no baseline.
// 2-phase: score a repeatability baseline R0, then one R per combination of
// varied condition values, and report CV*(R) - CV*(R0) as the effect of
// varying those conditions.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "reproq/error.hpp"
#include "reproq/model/measurement.hpp"
#include "reproq/notes.hpp"
#include "reproq/stats/precision.hpp"
#include "reproq/text.hpp"

namespace reproq::assessment {

using model::Classification;
using model::ConditionDiff;
using model::MeasurementSet;
using stats::PrecisionReport;

struct AssessmentConfig {
  double ci_level = 0.95;
  /// Conditions varied in the reproducibility phase. Empty means every
  /// condition that differs across the reproducibility set.
  std::vector<std::string> varied_condition_names;
  /// CV* (percent) the baseline should reach; exceeding it raises
  /// BASELINE_NOT_CONVERGED.
  std::optional<double> target_precision;
};

/// (condition name, displayed value) pairs identifying one group.
using Combination = std::vector<std::pair<std::string, std::string>>;

inline std::string describe(const Combination& combination) {
  if (combination.empty()) return "all measurements";
  std::string out;
  for (const auto& [name, value] : combination) {
    if (!out.empty()) out += ", ";
    out += name + "=" + value;
  }
  return out;
}

struct Group {
  Combination combination;
  MeasurementSet set;
  bool indeterminate = false;  // some grouping value is Unknown or PartiallyKnown
};

/// Grouping accepts schema condition names plus the provenance fields
/// `team` and `date`.
inline bool is_groupable(const model::ConditionSchema& schema, const std::string& name) {
  const std::string n = text::normalize(name);
  return schema.find(name) != nullptr || n == "team" || n == "date";
}

/// Partitions `set` by the tuple of values of the named conditions. Groups
/// come back ordered by normalized key, so the result does not depend on the
/// order of the input measurements.
inline std::vector<Group> group_by_varied_conditions(const MeasurementSet& set,
                                                     const std::vector<std::string>& names) {
  for (const auto& name : names) {
    if (!is_groupable(set.schema, name)) {
      throw Error(ErrorCode::kUnknownCondition, "'" + name + "' is not a condition of schema '" +
                                                    set.schema.name + "'");
    }
  }
  struct Slot {
    Combination combination;
    std::vector<std::string> display;
    bool indeterminate = false;
    MeasurementSet set;
  };
  std::map<std::vector<std::string>, Slot> slots;

  for (const auto& m : set.measurements) {
    std::vector<std::string> key;
    std::vector<std::string> display;
    bool indeterminate = false;
    for (const auto& name : names) {
      model::ConditionValue value;
      const std::string n = text::normalize(name);
      if (const auto* c = m.conditions.find(name)) {
        value = c->value;
      } else if (n == "team") {
        value = m.team;
      } else if (n == "date") {
        value = m.date ? model::ConditionValue::known(m.date->display()) : model::ConditionValue::unknown();
      } else {
        value = model::ConditionValue::unknown();
      }
      indeterminate = indeterminate || !value.is_known();
      key.push_back(value.key());
      display.push_back(value.display());
    }
    auto [it, inserted] = slots.try_emplace(key);
    Slot& slot = it->second;
    if (inserted) {
      slot.display = display;
      slot.indeterminate = indeterminate;
      slot.set.schema = set.schema;
      slot.set.rescaling = set.rescaling;
    } else {
      slot.display = std::min(slot.display, display);
    }
    slot.set.measurements.push_back(m);
  }

  std::vector<Group> out;
  out.reserve(slots.size());
  for (auto& [key, slot] : slots) {
    Group g;
    for (std::size_t i = 0; i < names.size(); ++i) g.combination.emplace_back(names[i], slot.display[i]);
    g.set = std::move(slot.set);
    g.indeterminate = slot.indeterminate;
    out.push_back(std::move(g));
  }
  return out;
}

enum class Mode { kOnePhase, kTwoPhase };

constexpr std::string_view to_string(Mode mode) {
  return mode == Mode::kOnePhase ? "one_phase" : "two_phase";
}

struct ScoredGroup {
  Combination combination;
  PrecisionReport report;

  friend bool operator==(const ScoredGroup&, const ScoredGroup&) = default;
};

struct EffectEstimate {
  Combination combination;
  std::optional<double> cv_star_difference;  // CV*(R) - CV*(R0), percentage points

  friend bool operator==(const EffectEstimate&, const EffectEstimate&) = default;
};

struct AssessmentResult {
  Mode mode = Mode::kOnePhase;
  std::string object_id;
  std::string measurand;
  std::string unit;
  std::string schema_name;
  std::string schema_version;
  Classification classification = Classification::kIndeterminate;
  std::vector<ConditionDiff> condition_diff;
  std::optional<PrecisionReport> r0;
  std::vector<ScoredGroup> r_scores;
  std::vector<EffectEstimate> effect_estimates;
  std::vector<Note> caveats;
  std::vector<std::string> sources;
  /// Most decimals seen in the input values; drives prose rounding.
  int value_decimals = 0;
  std::optional<model::Rescaling> rescaling;

  /// True when any caveat or report warning is error-level.
  bool has_errors() const {
    const auto err = [](const Note& n) { return severity(n.code) == Severity::kError; };
    if (std::any_of(caveats.begin(), caveats.end(), err)) return true;
    if (r0 && std::any_of(r0->warnings.begin(), r0->warnings.end(), err)) return true;
    for (const auto& g : r_scores) {
      if (std::any_of(g.report.warnings.begin(), g.report.warnings.end(), err)) return true;
    }
    return false;
  }

  friend bool operator==(const AssessmentResult&, const AssessmentResult&) = default;
};

namespace detail {

inline void require_valid(const MeasurementSet& set, const std::string& what) {
  const auto violations = model::validate_set(set);
  if (violations.empty()) return;
  std::string message = what + " is invalid:";
  for (const auto& v : violations) {
    message += " [" + std::string(model::to_string(v.code));
    if (v.row) message += " row " + std::to_string(*v.row + 1);
    message += "] " + v.message + ";";
  }
  message.pop_back();
  throw Error(ErrorCode::kInvalidSet, message);
}

inline void append_sources(const MeasurementSet& set, std::vector<std::string>& sources) {
  for (const auto& m : set.measurements) {
    if (!m.source.empty() && std::find(sources.begin(), sources.end(), m.source) == sources.end()) {
      sources.push_back(m.source);
    }
  }
}

inline int max_decimals(const MeasurementSet& set) {
  int d = 0;
  for (const auto& m : set.measurements) d = std::max(d, text::decimals_of(m.value.magnitude));
  return d;
}

inline PrecisionReport score(const MeasurementSet& set, double level) {
  return stats::precision_report(stats::Sample<double>(set.values()), level);
}

inline AssessmentResult skeleton(const MeasurementSet& set, Mode mode) {
  AssessmentResult r;
  r.mode = mode;
  const auto& first = set.measurements.front();
  r.object_id = first.object_id;
  r.measurand = first.measurand;
  r.unit = first.value.unit;
  r.schema_name = set.schema.name;
  r.schema_version = set.schema.version;
  r.condition_diff = model::condition_diff(set);
  r.classification = model::classify(r.condition_diff);
  r.rescaling = set.rescaling;
  return r;
}

inline void check_level(double level) {
  if (!(level > 0.0) || !(level < 1.0)) {
    throw Error(ErrorCode::kBadProbability, "confidence level must lie in (0, 1)");
  }
}

}  // namespace detail

/// Scores the whole set as one R. Throws INVALID_SET when validate_set finds
/// anything.
inline AssessmentResult assess_one_phase(const MeasurementSet& set, const AssessmentConfig& config = {}) {
  detail::check_level(config.ci_level);
  detail::require_valid(set, "measurement set");
  AssessmentResult r = detail::skeleton(set, Mode::kOnePhase);
  r.r_scores.push_back({{}, detail::score(set, config.ci_level)});
  r.caveats.push_back({Note{NoteCode::kBaselineUnavailable,
                            "1-phase assessment: no repeatability baseline was measured"}});
  if (r.classification == Classification::kIndeterminate) {
    r.caveats.push_back({NoteCode::kIndeterminateConditions,
                         "some condition values are unknown, so repeatability or reproducibility "
                         "conditions could not be established"});
  }
  detail::append_sources(set, r.sources);
  r.value_decimals = detail::max_decimals(set);
  return r;
}

/// Baseline R0 from the pooled repeat sets (all must share every condition
/// value), then one R per combination of varied condition values in
/// `repro_set`. Throws NOT_REPEATABILITY if the pooled baseline is not under
/// repeatability conditions and INVALID_SET if the sets disagree on object,
/// measurand or unit.
inline AssessmentResult assess_two_phase(const std::vector<MeasurementSet>& repeat_sets,
                                         const MeasurementSet& repro_set, const AssessmentConfig& config = {}) {
  detail::check_level(config.ci_level);
  if (repeat_sets.empty()) {
    throw Error(ErrorCode::kInvalidSet, "2-phase assessment needs at least one repeatability set");
  }
  MeasurementSet baseline;
  baseline.schema = repeat_sets.front().schema;
  baseline.rescaling = repeat_sets.front().rescaling;
  for (const auto& s : repeat_sets) {
    if (model::classify(s) != Classification::kRepeatability) {
      throw Error(ErrorCode::kNotRepeatability, "a repeat set has differing or unknown condition values");
    }
    baseline.measurements.insert(baseline.measurements.end(), s.measurements.begin(), s.measurements.end());
  }
  detail::require_valid(baseline, "repeatability set");
  if (model::classify(baseline) != Classification::kRepeatability) {
    throw Error(ErrorCode::kNotRepeatability, "repeat sets do not share the same condition values");
  }
  detail::require_valid(repro_set, "reproducibility set");
  const auto& b = baseline.measurements.front();
  const auto& p = repro_set.measurements.front();
  if (text::normalize(b.object_id) != text::normalize(p.object_id) ||
      text::normalize(b.measurand) != text::normalize(p.measurand) ||
      text::normalize(b.value.unit) != text::normalize(p.value.unit)) {
    throw Error(ErrorCode::kInvalidSet,
                "repeatability and reproducibility sets differ in object, measurand or unit");
  }

  AssessmentResult r = detail::skeleton(repro_set, Mode::kTwoPhase);
  r.r0 = detail::score(baseline, config.ci_level);

  std::vector<std::string> varied = config.varied_condition_names;
  if (varied.empty()) {
    for (const auto& d : r.condition_diff) {
      if (d.status == model::ConditionStatus::kDiffers) varied.push_back(d.name);
    }
  }

  for (auto& group : group_by_varied_conditions(repro_set, varied)) {
    if (group.indeterminate) {
      r.caveats.push_back({NoteCode::kIndeterminateGroup,
                           describe(group.combination) + " (" + std::to_string(group.set.size()) +
                               " measurements) has unknown condition values and is not scored"});
      continue;
    }
    if (group.set.size() < 2) {
      r.caveats.push_back({NoteCode::kSingletonGroup,
                           describe(group.combination) + " has a single measurement and is not scored"});
      continue;
    }
    PrecisionReport report = detail::score(group.set, config.ci_level);
    if (report.n != r.r0->n) {
      r.caveats.push_back({NoteCode::kUnequalN, describe(group.combination) + " has n = " +
                                                    std::to_string(report.n) + ", baseline has n = " +
                                                    std::to_string(r.r0->n)});
    }
    EffectEstimate effect{group.combination, std::nullopt};
    if (report.cv_star_percent && r.r0->cv_star_percent) {
      effect.cv_star_difference = *report.cv_star_percent - *r.r0->cv_star_percent;
    }
    r.effect_estimates.push_back(std::move(effect));
    r.r_scores.push_back({std::move(group.combination), std::move(report)});
  }
  if (r.r_scores.empty()) {
    r.caveats.push_back({NoteCode::kNoScoreableGroups, "no group has two or more fully known measurements"});
  }
  if (config.target_precision &&
      (!r.r0->cv_star_percent || *r.r0->cv_star_percent > *config.target_precision)) {
    std::string candidates;
    for (const auto& d : r.condition_diff) {
      if (d.status != model::ConditionStatus::kAllSame) {
        candidates += (candidates.empty() ? "" : ", ") + d.name;
      }
    }
    r.caveats.push_back({NoteCode::kBaselineNotConverged,
                         "baseline CV* exceeds target " + text::shortest(*config.target_precision) +
                             "; candidate conditions to control: " +
                             (candidates.empty() ? std::string("none identified") : candidates)});
  }
  if (r.classification == Classification::kIndeterminate) {
    r.caveats.push_back({NoteCode::kIndeterminateConditions,
                         "some condition values are unknown, so repeatability or reproducibility "
                         "conditions could not be established"});
  }
  detail::append_sources(baseline, r.sources);
  detail::append_sources(repro_set, r.sources);
  r.value_decimals = std::max(detail::max_decimals(baseline), detail::max_decimals(repro_set));
  return r;
}

}  // namespace reproq::assessment

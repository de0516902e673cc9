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

// Machine-readable assessment output. Field names are stable; new fields are
// only ever appended. Numbers are written at full precision and parse back
// to the identical doubles.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "reproq/assessment/assessment.hpp"
#include "reproq/error.hpp"
#include "reproq/notes.hpp"

namespace reproq::report {

inline constexpr int kFormatVersion = 1;

struct StructuredOptions {
  bool include_tool_version = false;
};

namespace detail {

using nlohmann::json;

inline json optional_number(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

inline json notes_to_json(const std::vector<Note>& notes) {
  json out = json::array();
  for (const auto& n : notes) {
    out.push_back({{"code", to_string(n.code)},
                   {"severity", severity(n.code) == Severity::kError ? "error" : "warning"},
                   {"detail", n.detail}});
  }
  return out;
}

inline json combination_to_json(const assessment::Combination& c) {
  json out = json::array();
  for (const auto& [name, value] : c) out.push_back({{"condition", name}, {"value", value}});
  return out;
}

inline json precision_to_json(const stats::PrecisionReport& r) {
  return {{"n", r.n},
          {"mean", r.mean},
          {"sample_stddev", r.sample_stddev},
          {"unbiased_stddev", r.unbiased_stddev},
          {"stderr_variance", r.stderr_variance},
          {"stderr_unbiased_stddev", r.stderr_unbiased_stddev},
          {"ci_level", r.ci_level},
          {"ci_low", r.ci_low},
          {"ci_high", r.ci_high},
          {"cv_percent", optional_number(r.cv_percent)},
          {"cv_star_percent", optional_number(r.cv_star_percent)},
          {"within_1sd_percent", r.within_1sd_percent},
          {"within_2sd_percent", r.within_2sd_percent},
          {"warnings", notes_to_json(r.warnings)}};
}

inline std::optional<double> optional_number_from(const json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<double>();
}

inline std::vector<Note> notes_from_json(const json& j) {
  std::vector<Note> out;
  for (const auto& n : j) {
    const auto code = note_code_from_string(n.at("code").get<std::string>());
    if (!code) throw Error(ErrorCode::kParse, "unknown note code " + n.at("code").dump());
    out.push_back({*code, n.at("detail").get<std::string>()});
  }
  return out;
}

inline assessment::Combination combination_from_json(const json& j) {
  assessment::Combination out;
  for (const auto& c : j) out.emplace_back(c.at("condition").get<std::string>(), c.at("value").get<std::string>());
  return out;
}

inline stats::PrecisionReport precision_from_json(const json& j) {
  stats::PrecisionReport r;
  r.n = j.at("n").get<std::size_t>();
  r.mean = j.at("mean").get<double>();
  r.sample_stddev = j.at("sample_stddev").get<double>();
  r.unbiased_stddev = j.at("unbiased_stddev").get<double>();
  r.stderr_variance = j.at("stderr_variance").get<double>();
  r.stderr_unbiased_stddev = j.at("stderr_unbiased_stddev").get<double>();
  r.ci_level = j.at("ci_level").get<double>();
  r.ci_low = j.at("ci_low").get<double>();
  r.ci_high = j.at("ci_high").get<double>();
  r.cv_percent = optional_number_from(j.at("cv_percent"));
  r.cv_star_percent = optional_number_from(j.at("cv_star_percent"));
  r.within_1sd_percent = j.at("within_1sd_percent").get<double>();
  r.within_2sd_percent = j.at("within_2sd_percent").get<double>();
  r.warnings = notes_from_json(j.at("warnings"));
  return r;
}

template <typename Enum, std::size_t N>
Enum enum_from(const std::string& text, const std::array<Enum, N>& values) {
  for (Enum v : values) {
    if (to_string(v) == text) return v;
  }
  throw Error(ErrorCode::kParse, "unrecognised value '" + text + "'");
}

}  // namespace detail

inline nlohmann::json render_structured(const assessment::AssessmentResult& result,
                                        const StructuredOptions& options = {}) {
  using detail::json;
  json diff = json::array();
  for (const auto& d : result.condition_diff) {
    diff.push_back({{"name", d.name}, {"group", model::to_string(d.group)}, {"status", model::to_string(d.status)}});
  }
  json r_scores = json::array();
  for (const auto& g : result.r_scores) {
    r_scores.push_back({{"combination", detail::combination_to_json(g.combination)},
                        {"report", detail::precision_to_json(g.report)}});
  }
  json effects = json::array();
  for (const auto& e : result.effect_estimates) {
    effects.push_back({{"combination", detail::combination_to_json(e.combination)},
                       {"cv_star_difference", detail::optional_number(e.cv_star_difference)}});
  }
  json doc = {
      {"format_version", kFormatVersion},
      {"mode", assessment::to_string(result.mode)},
      {"object_id", result.object_id},
      {"measurand", result.measurand},
      {"unit", result.unit},
      {"schema", {{"name", result.schema_name}, {"version", result.schema_version}}},
      {"classification", model::to_string(result.classification)},
      {"condition_diff", std::move(diff)},
      {"r0", result.r0 ? detail::precision_to_json(*result.r0) : json(nullptr)},
      {"r_scores", std::move(r_scores)},
      {"effect_estimates", std::move(effects)},
      {"caveats", detail::notes_to_json(result.caveats)},
      {"sources", result.sources},
      {"value_decimals", result.value_decimals},
      {"rescaling", result.rescaling ? json{{"scale_min", result.rescaling->scale_min},
                                            {"scale_max", result.rescaling->scale_max},
                                            {"original_unit", result.rescaling->original_unit}}
                                     : json(nullptr)},
  };
  if (options.include_tool_version) doc["tool_version"] = std::string(kVersion);
  return doc;
}

/// Inverse of render_structured. Throws PARSE_ERROR on malformed documents.
inline assessment::AssessmentResult parse_structured(const nlohmann::json& doc) {
  using assessment::Mode;
  using model::Classification;
  using model::ConditionGroup;
  using model::ConditionStatus;
  try {
    if (doc.at("format_version").get<int>() != kFormatVersion) {
      throw Error(ErrorCode::kParse, "unsupported format_version");
    }
    assessment::AssessmentResult r;
    r.mode = detail::enum_from(doc.at("mode").get<std::string>(),
                               std::array{Mode::kOnePhase, Mode::kTwoPhase});
    r.object_id = doc.at("object_id").get<std::string>();
    r.measurand = doc.at("measurand").get<std::string>();
    r.unit = doc.at("unit").get<std::string>();
    r.schema_name = doc.at("schema").at("name").get<std::string>();
    r.schema_version = doc.at("schema").at("version").get<std::string>();
    r.classification = detail::enum_from(
        doc.at("classification").get<std::string>(),
        std::array{Classification::kRepeatability, Classification::kReproducibility,
                   Classification::kIndeterminate});
    for (const auto& d : doc.at("condition_diff")) {
      model::ConditionDiff cd;
      cd.name = d.at("name").get<std::string>();
      cd.group = detail::enum_from(d.at("group").get<std::string>(),
                                   std::array{ConditionGroup::kObject, ConditionGroup::kMethod,
                                              ConditionGroup::kProcedure});
      cd.status = detail::enum_from(d.at("status").get<std::string>(),
                                    std::array{ConditionStatus::kAllSame, ConditionStatus::kDiffers,
                                               ConditionStatus::kIndeterminate});
      r.condition_diff.push_back(std::move(cd));
    }
    if (!doc.at("r0").is_null()) r.r0 = detail::precision_from_json(doc.at("r0"));
    for (const auto& g : doc.at("r_scores")) {
      r.r_scores.push_back({detail::combination_from_json(g.at("combination")),
                            detail::precision_from_json(g.at("report"))});
    }
    for (const auto& e : doc.at("effect_estimates")) {
      r.effect_estimates.push_back({detail::combination_from_json(e.at("combination")),
                                    detail::optional_number_from(e.at("cv_star_difference"))});
    }
    r.caveats = detail::notes_from_json(doc.at("caveats"));
    r.sources = doc.at("sources").get<std::vector<std::string>>();
    r.value_decimals = doc.at("value_decimals").get<int>();
    if (!doc.at("rescaling").is_null()) {
      const auto& s = doc.at("rescaling");
      r.rescaling = model::Rescaling{s.at("scale_min").get<double>(), s.at("scale_max").get<double>(),
                                     s.at("original_unit").get<std::string>()};
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("structured report: ") + e.what());
  }
}

}  // namespace reproq::report

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

// Prose rendering of assessment results.
//
// Rounding rules: CV* to 3 decimals; mean, standard deviation and interval
// bounds to the input's decimal places + 2, capped at 4; within-k
// percentages to at most 2 decimals with trailing zeros dropped.

#include <algorithm>
#include <array>
#include <cctype>
#include <string>
#include <vector>

#include "reproq/assessment/assessment.hpp"
#include "reproq/notes.hpp"
#include "reproq/text.hpp"

namespace reproq::report {

using assessment::AssessmentResult;
using stats::PrecisionReport;

inline int quantity_decimals(int value_decimals) { return std::min(value_decimals + 2, 4); }

inline std::string format_cv_star(double v) { return text::fixed(v, 3); }
inline std::string format_quantity(double v, int value_decimals) {
  return text::fixed(v, quantity_decimals(value_decimals));
}
inline std::string format_percent(double v) { return text::fixed_trimmed(v, 2); }
inline std::string format_effect(double v) {
  const std::string s = text::fixed(v, 3);
  return s.front() == '-' ? s : "+" + s;
}

namespace detail {

inline std::string count_words(std::size_t n) {
  static constexpr std::array<const char*, 13> kWords = {"zero", "one", "two",   "three", "four",
                                                         "five", "six", "seven", "eight", "nine",
                                                         "ten",  "eleven", "twelve"};
  return n < kWords.size() ? kWords[n] : std::to_string(n);
}

// "mass" -> "Mass"; mixed-case labels such as "wF1" are left alone.
inline std::string sentence_case(const std::string& s) {
  if (s.empty()) return s;
  const auto lower = [](char c) { return std::islower(static_cast<unsigned char>(c)) != 0; };
  if (lower(s[0]) && (s.size() == 1 || lower(s[1]) || s[1] == ' ')) {
    std::string out = s;
    out[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(out[0])));
    return out;
  }
  return s;
}

inline std::string join_citations(const std::vector<std::string>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += (i + 1 == items.size()) ? (items.size() > 2 ? ", and " : " and ") : ", ";
    out += items[i];
  }
  return out;
}

inline std::string within_sentence(const PrecisionReport& r) {
  if (r.within_1sd_percent >= 100.0) return "All measured values fall within one standard deviation.";
  if (r.within_2sd_percent >= 100.0) {
    return "All measured values fall within two standard deviations, " + format_percent(r.within_1sd_percent) +
           "% within one standard deviation.";
  }
  return format_percent(r.within_2sd_percent) + "% of measured values fall within two standard deviations, " +
         format_percent(r.within_1sd_percent) + "% within one standard deviation.";
}

inline std::string statistics_clause(const PrecisionReport& r, int value_decimals) {
  std::string out = "the unbiased coefficient of variation is ";
  out += r.cv_star_percent ? "**" + format_cv_star(*r.cv_star_percent) + "**" : "undefined (mean not positive)";
  out += ", for a mean of " + format_quantity(r.mean, value_decimals);
  out += ", unbiased sample standard deviation of " + format_quantity(r.unbiased_stddev, value_decimals);
  out += " with " + format_percent(r.ci_level * 100.0) + "% CI (" + format_quantity(r.ci_low, value_decimals) +
         ", " + format_quantity(r.ci_high, value_decimals) + ")";
  out += ", and sample size " + std::to_string(r.n) + ".";
  return out;
}

inline std::string note_sentence(const Note& note) {
  switch (note.code) {
    case NoteCode::kSampleTooSmall:
      return "With fewer than 3 measurements, CV* describes the variation in the sample but is a less "
             "reliable estimate of the population CV.";
    case NoteCode::kZeroDispersion:
      return "All measured values are identical, so CV* is 0 and the confidence interval is degenerate.";
    case NoteCode::kNegativeCiLower:
      return "The negative lower confidence bound is an artifact of the normal approximation at this "
             "sample size.";
    case NoteCode::kNonPositiveMean:
      return "The mean is not positive, so CV and CV* are undefined.";
    case NoteCode::kBaselineUnavailable:
      return "This is a 1-phase assessment; no baseline repeatability score was available.";
    case NoteCode::kIndeterminateConditions:
      return "Some condition values are unknown, so it could not be established whether conditions of "
             "measurement were the same or different.";
    default:
      return sentence_case(note.detail) + ".";
  }
}

inline void collect(std::vector<Note>& seen, const std::vector<Note>& notes) {
  for (const auto& n : notes) {
    const bool dup = std::any_of(seen.begin(), seen.end(), [&](const Note& s) {
      return s.code == n.code && (n.code < NoteCode::kBaselineUnavailable || s.detail == n.detail);
    });
    if (!dup) seen.push_back(n);
  }
}

inline std::string object_clause(const AssessmentResult& result, std::size_t n,
                                 const std::vector<std::string>& citations) {
  std::string out = "was assessed on the basis of " + count_words(n) + " measurements of " + result.object_id;
  if (!citations.empty()) out += " reported by " + join_citations(citations);
  if (result.rescaling) {
    out += ", rescaled to 0.." + text::shortest(result.rescaling->scale_max - result.rescaling->scale_min);
  }
  return out;
}

inline std::string schema_clause(const AssessmentResult& result) {
  if (result.schema_name == "inferred") return "as recorded in the dataset";
  return "as detailed in condition schema '" + result.schema_name + "' (version " + result.schema_version + ")";
}

}  // namespace detail

/// Report paragraph(s) with CV* fronted as the headline figure, followed by
/// a caveat list. `citations` defaults to the result's own sources.
inline std::string render_text(const AssessmentResult& result, const std::vector<std::string>& citations = {}) {
  using namespace detail;
  const std::vector<std::string>& cites = citations.empty() ? result.sources : citations;
  const std::string measurand = sentence_case(result.measurand);
  std::string out;
  std::vector<Note> notes;

  if (result.mode == assessment::Mode::kOnePhase) {
    const bool repeat = result.classification == model::Classification::kRepeatability;
    const std::string kind = repeat ? "repeatability" : "reproducibility";
    const PrecisionReport& r = result.r_scores.front().report;
    out += measurand + " measurement " + kind + " under " + kind + " conditions of measurement " +
           schema_clause(result) + ", " + object_clause(result, r.n, cites) + ": " +
           statistics_clause(r, result.value_decimals) + " " + within_sentence(r) + "\n";
    collect(notes, r.warnings);
  } else {
    const PrecisionReport& r0 = *result.r0;
    out += "Baseline: " + result.measurand + " measurement repeatability under repeatability conditions of "
           "measurement " + schema_clause(result) + ", " + object_clause(result, r0.n, cites) + ": " +
           statistics_clause(r0, result.value_decimals) + " " + within_sentence(r0) + "\n";
    collect(notes, r0.warnings);
    for (std::size_t i = 0; i < result.r_scores.size(); ++i) {
      const auto& g = result.r_scores[i];
      out += "\nVaried conditions " + assessment::describe(g.combination) + ": " + result.measurand +
             " measurement reproducibility was assessed on the basis of " + count_words(g.report.n) +
             " measurements: " + statistics_clause(g.report, result.value_decimals) + " " +
             within_sentence(g.report);
      const auto& effect = result.effect_estimates[i].cv_star_difference;
      out += effect ? " Estimated effect of the varied conditions on CV*: " + format_effect(*effect) + "."
                    : " The effect on CV* could not be estimated.";
      out += "\n";
      collect(notes, g.report.warnings);
    }
    if (result.r_scores.empty()) out += "\nNo reproducibility group could be scored.\n";
  }
  collect(notes, result.caveats);

  if (!notes.empty()) {
    out += "\nCaveats:\n";
    for (const auto& n : notes) {
      out += "- " + note_sentence(n) + " [" + std::string(to_string(n.code)) + "]\n";
    }
  }
  return out;
}

}  // namespace reproq::report

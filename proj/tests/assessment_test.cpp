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

#include "reproq/assessment/assessment.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "bundled_sets.hpp"
#include "gtest/gtest.h"

namespace reproq::assessment {
namespace {

using model::Classification;
using model::ConditionGroup;
using model::ConditionValue;
using model::Measurement;
using testing::subset;

bool has_caveat(const AssessmentResult& r, NoteCode code) {
  return std::any_of(r.caveats.begin(), r.caveats.end(), [&](const Note& n) { return n.code == code; });
}

int count_caveat(const AssessmentResult& r, NoteCode code) {
  return static_cast<int>(
      std::count_if(r.caveats.begin(), r.caveats.end(), [&](const Note& n) { return n.code == code; }));
}

// Measurements of one object under a single condition "Setup".
MeasurementSet make_set(const std::vector<double>& values, const std::vector<std::string>& setups) {
  MeasurementSet set;
  set.schema = {"synthetic", "1", {{"Setup", ConditionGroup::kProcedure, ""}}};
  for (std::size_t i = 0; i < values.size(); ++i) {
    Measurement m{"obj", "score", {values[i], "pts"}, std::nullopt, ConditionValue::unknown(), {}, ""};
    m.conditions.add({"Setup", ConditionGroup::kProcedure, ConditionValue::parse(setups[i])});
    set.measurements.push_back(std::move(m));
  }
  return set;
}

template <typename F>
void expect_error(F&& f, ErrorCode code) {
  try {
    f();
    FAIL() << "expected " << to_string(code);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

TEST(OnePhaseTest, Torc) {
  const auto r = assess_one_phase(testing::torc_set());
  EXPECT_EQ(r.mode, Mode::kOnePhase);
  EXPECT_FALSE(r.r0.has_value());
  ASSERT_EQ(r.r_scores.size(), 1u);
  EXPECT_NEAR(*r.r_scores[0].report.cv_star_percent, 2.61, 0.005);
  EXPECT_TRUE(r.effect_estimates.empty());
  EXPECT_EQ(r.classification, Classification::kIndeterminate);
  EXPECT_TRUE(has_caveat(r, NoteCode::kBaselineUnavailable));
  EXPECT_TRUE(has_caveat(r, NoteCode::kIndeterminateConditions));
  EXPECT_EQ(r.value_decimals, 2);
  EXPECT_EQ(r.sources.size(), 3u);
  EXPECT_FALSE(r.has_errors());
}

TEST(OnePhaseTest, Wf1) {
  const auto r = assess_one_phase(testing::wf1_set());
  EXPECT_NEAR(*r.r_scores[0].report.cv_star_percent, 3.818, 0.005);
  EXPECT_EQ(r.classification, Classification::kReproducibility);
  EXPECT_EQ(r.sources.size(), 5u);
  EXPECT_EQ(r.sources.front(), "Vajjala and Rama (2018)");
}

TEST(OnePhaseTest, IdenticalPairIsRepeatabilityWithZeroScore) {
  const auto r = assess_one_phase(make_set({3.5, 3.5}, {"a", "a"}));
  EXPECT_EQ(r.classification, Classification::kRepeatability);
  EXPECT_EQ(*r.r_scores[0].report.cv_star_percent, 0.0);
}

TEST(OnePhaseTest, RejectsInvalidSet) {
  auto set = testing::torc_set();
  set.measurements[2].measurand = "volume";
  expect_error([&] { assess_one_phase(set); }, ErrorCode::kInvalidSet);
  expect_error([&] { assess_one_phase(subset(testing::torc_set(), {0})); }, ErrorCode::kInvalidSet);
  AssessmentConfig bad;
  bad.ci_level = 1.2;
  expect_error([&] { assess_one_phase(testing::torc_set(), bad); }, ErrorCode::kBadProbability);
}

TEST(OnePhaseTest, NonPositiveMeanIsErrorLevel) {
  const auto r = assess_one_phase(make_set({-1.0, 1.0}, {"a", "a"}));
  EXPECT_TRUE(r.has_errors());
}

TEST(TwoPhaseTest, TorcScalesRecast) {
  const auto torc = testing::torc_set();
  AssessmentConfig config;
  config.varied_condition_names = {"Scales"};
  const auto r = assess_two_phase({subset(torc, {5, 6})}, subset(torc, {3, 4}), config);
  ASSERT_TRUE(r.r0.has_value());
  EXPECT_EQ(*r.r0->cv_star_percent, 0.0);
  ASSERT_EQ(r.r_scores.size(), 1u);
  EXPECT_EQ(r.r_scores[0].combination, (Combination{{"Scales", "SWS pocket scales"}}));
  EXPECT_NEAR(*r.r_scores[0].report.cv_star_percent, 0.11, 0.005);
  ASSERT_EQ(r.effect_estimates.size(), 1u);
  EXPECT_NEAR(*r.effect_estimates[0].cv_star_difference, 0.11, 0.005);
  EXPECT_FALSE(has_caveat(r, NoteCode::kUnequalN));
}

TEST(TwoPhaseTest, IdenticalPhasesGiveZeroEffect) {
  const auto set = make_set({10.0, 10.4, 9.7}, {"a", "a", "a"});
  const auto r = assess_two_phase({set}, set);
  ASSERT_EQ(r.effect_estimates.size(), 1u);
  EXPECT_EQ(*r.effect_estimates[0].cv_star_difference, 0.0);
}

TEST(TwoPhaseTest, SyntheticAgainstHandComputedCvStar) {
  // mean 10, s = 0.2, c4(3) = sqrt(pi)/2, CV* = (1 + 1/12) * 100 * s / c4 / mean.
  const double expected = (1.0 + 1.0 / 12.0) * 100.0 * (0.2 / (std::sqrt(std::numbers::pi) / 2.0)) / 10.0;
  const auto r = assess_two_phase({make_set({10.0, 10.0, 10.0}, {"a", "a", "a"})},
                                  make_set({10.0, 10.2, 9.8}, {"b", "b", "b"}));
  EXPECT_EQ(*r.r0->cv_star_percent, 0.0);
  ASSERT_EQ(r.r_scores.size(), 1u);
  EXPECT_NEAR(*r.r_scores[0].report.cv_star_percent, expected, 1e-12);
  EXPECT_NEAR(*r.effect_estimates[0].cv_star_difference, expected, 1e-12);
}

TEST(TwoPhaseTest, AutoSelectsDifferingConditions) {
  const auto r = assess_two_phase({make_set({5, 5.1}, {"a", "a"})}, make_set({5, 5.2, 6, 6.1}, {"a", "a", "b", "b"}));
  ASSERT_EQ(r.r_scores.size(), 2u);
  EXPECT_EQ(r.r_scores[0].combination, (Combination{{"Setup", "a"}}));
  EXPECT_EQ(r.r_scores[1].combination, (Combination{{"Setup", "b"}}));
}

TEST(TwoPhaseTest, RejectsNonRepeatabilityBaseline) {
  const auto torc = testing::torc_set();
  expect_error([&] { assess_two_phase({subset(torc, {3, 4, 5})}, torc); }, ErrorCode::kNotRepeatability);
  expect_error([&] { assess_two_phase({subset(torc, {0, 1})}, torc); }, ErrorCode::kNotRepeatability);
  // Each set alone is repeatability, pooled they are not.
  expect_error([&] { assess_two_phase({subset(torc, {3, 4}), subset(torc, {5, 6})}, torc); },
               ErrorCode::kNotRepeatability);
  expect_error([&] { assess_two_phase({}, torc); }, ErrorCode::kInvalidSet);
}

TEST(TwoPhaseTest, RejectsMismatchedMeasurand) {
  auto other = make_set({1, 2}, {"a", "a"});
  for (auto& m : other.measurements) m.measurand = "other";
  expect_error([&] { assess_two_phase({make_set({1, 1.1}, {"a", "a"})}, other); }, ErrorCode::kInvalidSet);
}

TEST(TwoPhaseTest, UnequalSampleSizeWarns) {
  const auto r = assess_two_phase({make_set({5, 5.1}, {"a", "a"})}, make_set({5, 5.2, 5.4}, {"b", "b", "b"}));
  EXPECT_TRUE(has_caveat(r, NoteCode::kUnequalN));
}

TEST(TwoPhaseTest, TargetPrecisionSignalsNotConverged) {
  AssessmentConfig config;
  config.target_precision = 0.5;
  const auto baseline = make_set({5, 5.5, 4.6}, {"a", "a", "a"});
  const auto repro = make_set({5, 5.2, 6}, {"b", "b", "?"});
  const auto r = assess_two_phase({baseline}, repro, config);
  ASSERT_TRUE(has_caveat(r, NoteCode::kBaselineNotConverged));
  const auto it = std::find_if(r.caveats.begin(), r.caveats.end(),
                               [](const Note& n) { return n.code == NoteCode::kBaselineNotConverged; });
  EXPECT_NE(it->detail.find("Setup"), std::string::npos);

  config.target_precision = 50.0;
  EXPECT_FALSE(has_caveat(assess_two_phase({baseline}, repro, config), NoteCode::kBaselineNotConverged));
}

TEST(TwoPhaseTest, Wf1ByTeamScoresOnlyMultiMemberGroups) {
  const auto wf1 = testing::wf1_set();
  AssessmentConfig config;
  config.varied_condition_names = {"team"};
  // Only the first row has every condition known; duplicate it as a stand-in baseline.
  const auto r = assess_two_phase({subset(wf1, {0, 0})}, wf1, config);
  ASSERT_EQ(r.r_scores.size(), 2u);
  EXPECT_EQ(r.r_scores[0].combination, (Combination{{"team", "B"}}));
  EXPECT_EQ(r.r_scores[1].combination, (Combination{{"team", "C&B"}}));
  EXPECT_EQ(count_caveat(r, NoteCode::kSingletonGroup), 3);
}

TEST(TwoPhaseTest, NoScoreableGroupsIsErrorLevel) {
  const auto r = assess_two_phase({make_set({5, 5.1}, {"a", "a"})}, make_set({5, 6}, {"b", "c"}));
  EXPECT_TRUE(r.r_scores.empty());
  EXPECT_TRUE(has_caveat(r, NoteCode::kNoScoreableGroups));
  EXPECT_TRUE(r.has_errors());
}

TEST(GroupByTest, TorcByScales) {
  const auto groups = group_by_varied_conditions(testing::torc_set(), {"Scales"});
  ASSERT_EQ(groups.size(), 3u);
  std::size_t flagged = 0;
  for (const auto& g : groups) {
    if (g.indeterminate) {
      EXPECT_EQ(g.set.size(), 3u);
      EXPECT_EQ(g.combination[0].second, "?");
      ++flagged;
    } else {
      EXPECT_EQ(g.set.size(), 2u);
    }
  }
  EXPECT_EQ(flagged, 1u);
}

TEST(GroupByTest, AllSameConditionGivesInput) {
  const auto wf1 = testing::wf1_set();
  const auto groups = group_by_varied_conditions(wf1, {"Method"});
  ASSERT_EQ(groups.size(), 1u);
  EXPECT_EQ(groups[0].set, wf1);
  EXPECT_FALSE(groups[0].indeterminate);
}

TEST(GroupByTest, Wf1ByTeamSizes) {
  const auto groups = group_by_varied_conditions(testing::wf1_set(), {"Team"});
  std::map<std::string, std::size_t> sizes;
  for (const auto& g : groups) sizes[g.combination[0].second] = g.set.size();
  EXPECT_EQ(sizes, (std::map<std::string, std::size_t>{
                       {"V&R", 1}, {"A et al.", 1}, {"B", 3}, {"C&B", 2}, {"H&C", 1}}));
}

TEST(GroupByTest, UnknownName) {
  expect_error([] { group_by_varied_conditions(testing::torc_set(), {"Humidity"}); },
               ErrorCode::kUnknownCondition);
}

class AssessmentPropertyTest : public ::testing::Test {
 protected:
  std::mt19937_64 rng_{4242};
};

TEST_F(AssessmentPropertyTest, OnePhaseEqualsBaselineOnRepeatabilitySets) {
  std::uniform_int_distribution<int> size(2, 12);
  std::uniform_real_distribution<double> value(0.5, 100.0);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = size(rng_);
    std::vector<double> values(n);
    for (auto& v : values) v = value(rng_);
    const auto set = make_set(values, std::vector<std::string>(n, "same"));
    ASSERT_EQ(model::classify(set), Classification::kRepeatability);
    const auto one = assess_one_phase(set);
    const auto two = assess_two_phase({set}, set);
    ASSERT_EQ(one.r_scores.front().report, *two.r0);
  }
}

TEST_F(AssessmentPropertyTest, GroupsPartitionTheInput) {
  std::uniform_int_distribution<int> size(1, 15);
  std::uniform_int_distribution<int> label(0, 4);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = size(rng_);
    std::vector<double> values;
    std::vector<std::string> setups;
    for (int i = 0; i < n; ++i) {
      values.push_back(i + 0.25);
      const int l = label(rng_);
      setups.push_back(l == 4 ? "?" : l == 3 ? "x?" : std::string(1, char('a' + l)));
    }
    const auto set = make_set(values, setups);
    std::vector<double> seen;
    for (const auto& g : group_by_varied_conditions(set, {"Setup"})) {
      ASSERT_FALSE(g.set.measurements.empty());
      for (const auto& m : g.set.measurements) {
        seen.push_back(m.value.magnitude);
        EXPECT_EQ(m.conditions.find("Setup")->value.display(), g.combination[0].second);
      }
    }
    std::sort(seen.begin(), seen.end());
    EXPECT_EQ(seen, values);  // disjoint and covering: each value is unique
  }
}

TEST_F(AssessmentPropertyTest, OrderIndependent) {
  auto torc = testing::torc_set();
  AssessmentConfig config;
  config.varied_condition_names = {"Scales"};
  const auto baseline = subset(torc, {5, 6});
  const auto a = assess_two_phase({baseline}, torc, config);
  for (int trial = 0; trial < 20; ++trial) {
    std::shuffle(torc.measurements.begin(), torc.measurements.end(), rng_);
    const auto b = assess_two_phase({baseline}, torc, config);
    EXPECT_EQ(b.r_scores, a.r_scores);
    EXPECT_EQ(b.effect_estimates, a.effect_estimates);
    EXPECT_EQ(b.condition_diff, a.condition_diff);
    EXPECT_EQ(assess_one_phase(torc).r_scores, assess_one_phase(testing::torc_set()).r_scores);
  }
}

}  // namespace
}  // namespace reproq::assessment

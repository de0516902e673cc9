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

#include "reproq/model/dataset_io.hpp"

#include <string>

#include "bundled_sets.hpp"
#include "gtest/gtest.h"
#include "reproq/datasets/bundled.hpp"

namespace reproq::model {
namespace {

template <typename F>
std::string expect_error(F&& f, ErrorCode code) {
  try {
    f();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
    return e.what();
  }
  ADD_FAILURE() << "expected " << to_string(code);
  return "";
}

constexpr const char* kHeader = "object_id,measurand,unit,value,date,team";

TEST(CsvTest, QuotingCommentsAndLineEndings) {
  const auto records = csv::parse(
      "# comment\r\na,\"b,c\",\"say \"\"hi\"\"\"\r\n\n# another\nx,\"multi\nline\",z");
  ASSERT_EQ(records.size(), 2u);
  EXPECT_EQ(records[0].fields, (std::vector<std::string>{"a", "b,c", "say \"hi\""}));
  EXPECT_EQ(records[0].line, 2u);
  EXPECT_EQ(records[1].fields, (std::vector<std::string>{"x", "multi\nline", "z"}));
  EXPECT_EQ(records[1].line, 5u);
}

TEST(CsvTest, UnterminatedQuote) {
  expect_error([] { csv::parse("a,\"bc\n"); }, ErrorCode::kParse);
}

TEST(ParseMeasurementsTest, Torc) {
  const auto set = testing::torc_set();
  ASSERT_EQ(set.size(), 7u);
  const auto& first = set.measurements[0];
  EXPECT_EQ(first.object_id, "torc 1991,0501.129");
  EXPECT_EQ(first.measurand, "mass");
  EXPECT_EQ(first.value.unit, "g");
  EXPECT_EQ(first.date->year, 1991);
  EXPECT_EQ(first.team.state(), ConditionValue::State::kUnknown);
  EXPECT_EQ(set.measurements[1].team.display(), "JF?");
  EXPECT_FALSE(set.measurements[1].date.has_value());
  EXPECT_EQ(set.measurements[1].conditions.find("Treatments")->value.state(),
            ConditionValue::State::kPartiallyKnown);
  EXPECT_EQ(set.measurements[3].conditions.find("Scales")->value.display(), "SWS pocket scales");
  EXPECT_EQ(set.measurements[3].conditions.find("Scales")->group, ConditionGroup::kMethod);
  EXPECT_EQ(set.values(), (std::vector<double>{92, 92, 87.2, 87.47, 87.37, 88.1, 88.1}));
  EXPECT_EQ(set.schema.name, "museum-mass");
}

TEST(ParseMeasurementsTest, Wf1KeepsQuotedCommaInCondition) {
  const auto set = testing::wf1_set();
  ASSERT_EQ(set.size(), 8u);
  EXPECT_EQ(set.measurements[0].conditions.find("Method")->value.display(), "wF1(o,t)");
  EXPECT_EQ(set.measurements[0].source, "Vajjala and Rama (2018)");
}

TEST(ParseMeasurementsTest, InfersSchemaWithoutOne) {
  const auto set = parse_measurements(datasets::kTorcCsv);
  EXPECT_EQ(set.schema.name, "inferred");
  ASSERT_EQ(set.schema.conditions.size(), 3u);
  EXPECT_EQ(set.schema.conditions[2].name, "Standard weight");
  EXPECT_EQ(set.schema.conditions[2].group, ConditionGroup::kProcedure);
  EXPECT_TRUE(validate_set(set).empty());
}

TEST(ParseMeasurementsTest, MissingValueColumn) {
  const std::string msg = expect_error(
      [] { parse_measurements("object_id,measurand,unit,date,team\nt,mass,g,2021,CM\n"); },
      ErrorCode::kMissingColumn);
  EXPECT_NE(msg.find("value"), std::string::npos);
}

TEST(ParseMeasurementsTest, NonNumericValueNamesRow) {
  const std::string msg = expect_error(
      [] { parse_measurements(std::string(kHeader) + "\nt,mass,g,1,2021,CM\nt,mass,g,abc,2021,CM\n"); },
      ErrorCode::kParse);
  EXPECT_NE(msg.find("row 2"), std::string::npos) << msg;
  EXPECT_NE(msg.find("abc"), std::string::npos);
}

TEST(ParseMeasurementsTest, OtherErrors) {
  expect_error([] { parse_measurements(std::string(kHeader) + ",Scales\n"); }, ErrorCode::kParse);
  expect_error([] { parse_measurements(std::string(kHeader) + ",X:Scales\n"); }, ErrorCode::kParse);
  expect_error([] { parse_measurements(std::string(kHeader) + ",N:S,P:S\n"); }, ErrorCode::kParse);
  expect_error([] { parse_measurements(std::string(kHeader) + "\nt,mass,g,1,2021\n"); }, ErrorCode::kParse);
  expect_error([] { parse_measurements(std::string(kHeader) + "\nt,mass,g,1,21st May,CM\n"); },
               ErrorCode::kParse);
  expect_error([] { parse_measurements(std::string(kHeader) + "\nt,mass,g,inf,2021,CM\n"); }, ErrorCode::kParse);
  expect_error([] { parse_measurements(""); }, ErrorCode::kParse);
}

TEST(ParseMeasurementsTest, EmptyCellIsUnknown) {
  const auto set = parse_measurements(std::string(kHeader) + ",O:Code\nt,s,u,1,,,\nt,s,u,2,2020,T,v1\n");
  EXPECT_FALSE(set.measurements[0].date.has_value());
  EXPECT_EQ(set.measurements[0].conditions.find("Code")->value.state(), ConditionValue::State::kUnknown);
}

TEST(SchemaTest, RoundTrip) {
  const auto schema = parse_schema(datasets::kWf1Schema);
  EXPECT_EQ(schema.conditions.size(), 8u);
  EXPECT_EQ(schema_from_json(schema_to_json(schema)), schema);
}

TEST(SchemaTest, Errors) {
  expect_error([] { parse_schema("{not json"); }, ErrorCode::kParse);
  expect_error([] { parse_schema(R"({"name":"x","conditions":[{"name":"a","group":"weird"}]})"); },
               ErrorCode::kParse);
  expect_error(
      [] {
        parse_schema(
            R"({"name":"x","conditions":[{"name":"a","group":"object"},{"name":"a","group":"method"}]})");
      },
      ErrorCode::kParse);
  expect_error([] { parse_schema(R"({"conditions":[]})"); }, ErrorCode::kParse);
}

int count_group(const ConditionSchema& s, ConditionGroup g) {
  int n = 0;
  for (const auto& e : s.conditions) n += e.group == g;
  return n;
}

TEST(SchemaTest, StarterSchemas) {
  const auto metric = parse_schema(datasets::kMetricStarterSchema);
  EXPECT_EQ(count_group(metric, ConditionGroup::kObject), 6);
  EXPECT_EQ(count_group(metric, ConditionGroup::kMethod), 5);
  EXPECT_EQ(count_group(metric, ConditionGroup::kProcedure), 3);
  const auto human = parse_schema(datasets::kHumanStarterSchema);
  EXPECT_EQ(count_group(human, ConditionGroup::kObject), 0);
  EXPECT_EQ(count_group(human, ConditionGroup::kMethod), 5);
  EXPECT_EQ(count_group(human, ConditionGroup::kProcedure), 6);
}

TEST(SchemaTest, SchemaDrivesValidation) {
  auto set = parse_measurements(datasets::kTorcCsv, parse_schema(datasets::kWf1Schema));
  const auto v = validate_set(set);
  EXPECT_FALSE(v.empty());
}

}  // namespace
}  // namespace reproq::model

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

// Dataset files: measurements as CSV, condition schemas as JSON.
//
// CSV dialect: comma separated, UTF-8, RFC 4180 quoting, lines starting with
// '#' before or between records are comments. The header must contain
// object_id, measurand, unit, value, date and team; `source` is optional.
// Condition columns are named O:<name>, N:<name> or P:<name>.

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "reproq/error.hpp"
#include "reproq/model/measurement.hpp"
#include "reproq/text.hpp"

namespace reproq::model {

namespace csv {

struct Record {
  std::size_t line = 0;  // 1-based line of the record's first character
  std::vector<std::string> fields;
};

/// Splits CSV text into records. Throws PARSE_ERROR on an unterminated quote.
inline std::vector<Record> parse(std::string_view input) {
  std::vector<Record> records;
  std::size_t i = 0;
  std::size_t line = 1;
  const std::size_t n = input.size();
  if (input.substr(0, 3) == "\xEF\xBB\xBF") i = 3;

  while (i < n) {
    // Comment and blank lines between records.
    if (input[i] == '#' || input[i] == '\n' || input[i] == '\r') {
      while (i < n && input[i] != '\n') ++i;
      if (i < n) ++i;
      ++line;
      continue;
    }
    Record record;
    record.line = line;
    std::string field;
    bool in_quotes = false;
    bool done = false;
    while (!done) {
      if (i >= n) {
        if (in_quotes) {
          throw Error(ErrorCode::kParse, "line " + std::to_string(record.line) + ": unterminated quoted field");
        }
        record.fields.push_back(std::move(field));
        done = true;
        break;
      }
      const char c = input[i];
      if (in_quotes) {
        if (c == '"') {
          if (i + 1 < n && input[i + 1] == '"') {
            field.push_back('"');
            i += 2;
          } else {
            in_quotes = false;
            ++i;
          }
        } else {
          if (c == '\n') ++line;
          field.push_back(c);
          ++i;
        }
      } else if (c == '"' && text::trim(field).empty()) {
        field.clear();
        in_quotes = true;
        ++i;
      } else if (c == ',') {
        record.fields.push_back(std::move(field));
        field.clear();
        ++i;
      } else if (c == '\r' || c == '\n') {
        record.fields.push_back(std::move(field));
        if (c == '\r' && i + 1 < n && input[i + 1] == '\n') ++i;
        ++i;
        ++line;
        done = true;
      } else {
        field.push_back(c);
        ++i;
      }
    }
    records.push_back(std::move(record));
  }
  return records;
}

}  // namespace csv

inline ConditionSchema schema_from_json(const nlohmann::json& doc) {
  try {
    ConditionSchema schema;
    schema.name = doc.at("name").get<std::string>();
    schema.version = doc.value("version", std::string("0"));
    for (const auto& c : doc.at("conditions")) {
      SchemaEntry entry;
      entry.name = c.at("name").get<std::string>();
      const auto group = group_from_string(c.at("group").get<std::string>());
      if (!group) {
        throw Error(ErrorCode::kParse, "condition '" + entry.name + "' has unknown group '" +
                                           c.at("group").get<std::string>() + "'");
      }
      entry.group = *group;
      entry.description = c.value("description", std::string());
      schema.conditions.push_back(std::move(entry));
    }
    schema.check();
    return schema;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("schema: ") + e.what());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kInvalidSet) throw Error(ErrorCode::kParse, e.what());
    throw;
  }
}

inline ConditionSchema parse_schema(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("schema: ") + e.what());
  }
  return schema_from_json(doc);
}

inline nlohmann::json schema_to_json(const ConditionSchema& schema) {
  nlohmann::json conditions = nlohmann::json::array();
  for (const auto& e : schema.conditions) {
    conditions.push_back({{"name", e.name}, {"group", to_string(e.group)}, {"description", e.description}});
  }
  return {{"name", schema.name}, {"version", schema.version}, {"conditions", std::move(conditions)}};
}

/// Parses a measurements CSV. Without a schema, one is inferred from the
/// condition columns (name "inferred", version "0").
///
/// Throws MISSING_COLUMN for absent required columns and PARSE_ERROR, with
/// the data row number, for malformed cells.
inline MeasurementSet parse_measurements(std::string_view csv_text,
                                         const std::optional<ConditionSchema>& schema = std::nullopt) {
  const std::vector<csv::Record> records = csv::parse(csv_text);
  if (records.empty()) throw Error(ErrorCode::kParse, "no header row");

  static constexpr std::array<std::string_view, 6> kRequired = {"object_id", "measurand", "unit",
                                                                "value",     "date",      "team"};
  const auto& header = records.front().fields;
  std::array<std::optional<std::size_t>, kRequired.size()> required_index;
  std::optional<std::size_t> source_index;
  struct ConditionColumn {
    std::size_t index;
    std::string name;
    ConditionGroup group;
  };
  std::vector<ConditionColumn> condition_columns;

  for (std::size_t c = 0; c < header.size(); ++c) {
    const std::string_view name = text::trim(header[c]);
    bool matched = false;
    for (std::size_t r = 0; r < kRequired.size(); ++r) {
      if (text::normalize(name) == kRequired[r]) {
        required_index[r] = c;
        matched = true;
      }
    }
    if (matched) continue;
    if (text::normalize(name) == "source") {
      source_index = c;
      continue;
    }
    if (name.size() > 2 && name[1] == ':') {
      const auto group = group_from_string(name.substr(0, 1));
      const std::string cond(text::trim(name.substr(2)));
      if (group && !cond.empty()) {
        for (const auto& existing : condition_columns) {
          if (existing.name == cond) {
            throw Error(ErrorCode::kParse, "duplicate condition column '" + cond + "'");
          }
        }
        condition_columns.push_back({c, cond, *group});
        continue;
      }
    }
    throw Error(ErrorCode::kParse, "column '" + std::string(name) +
                                       "' is neither a required column nor an O:/N:/P: condition");
  }
  for (std::size_t r = 0; r < kRequired.size(); ++r) {
    if (!required_index[r]) {
      throw Error(ErrorCode::kMissingColumn, "required column '" + std::string(kRequired[r]) + "' not found");
    }
  }

  MeasurementSet set;
  if (schema) {
    set.schema = *schema;
  } else {
    set.schema.name = "inferred";
    set.schema.version = "0";
    for (const auto& col : condition_columns) set.schema.conditions.push_back({col.name, col.group, ""});
  }

  for (std::size_t r = 1; r < records.size(); ++r) {
    const auto& fields = records[r].fields;
    const std::string where = "row " + std::to_string(r) + " (line " + std::to_string(records[r].line) + ")";
    if (fields.size() != header.size()) {
      throw Error(ErrorCode::kParse, where + ": expected " + std::to_string(header.size()) + " fields, got " +
                                         std::to_string(fields.size()));
    }
    const auto cell = [&](std::size_t k) { return std::string(text::trim(fields[*required_index[k]])); };
    Measurement m;
    m.object_id = cell(0);
    m.measurand = cell(1);
    m.value.unit = cell(2);
    if (!text::parse_double(fields[*required_index[3]], m.value.magnitude)) {
      throw Error(ErrorCode::kParse, where + ": value '" + cell(3) + "' is not a finite number");
    }
    try {
      m.date = parse_date(fields[*required_index[4]]);
    } catch (const Error& e) {
      throw Error(ErrorCode::kParse, where + ": " + e.what());
    }
    m.team = ConditionValue::parse(fields[*required_index[5]]);
    if (source_index) m.source = std::string(text::trim(fields[*source_index]));
    for (const auto& col : condition_columns) {
      m.conditions.add({col.name, col.group, ConditionValue::parse(fields[col.index])});
    }
    set.measurements.push_back(std::move(m));
  }
  return set;
}

}  // namespace reproq::model

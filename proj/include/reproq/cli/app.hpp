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

// Command-line front end. `run` takes the arguments after the program name
// and writes to the given streams, so the whole CLI is testable in-process.
//
// Exit codes: 0 success, 1 completed with error-level findings (validation
// violations, undefined scores), 2 usage or data errors.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#if __has_include("CLI11.hpp")
#include "CLI11.hpp"
#else
#include <CLI/CLI.hpp>
#endif
#include "reproq/assessment/assessment.hpp"
#include "reproq/datasets/bundled.hpp"
#include "reproq/error.hpp"
#include "reproq/model/dataset_io.hpp"
#include "reproq/model/measurement.hpp"
#include "reproq/report/structured_report.hpp"
#include "reproq/report/text_report.hpp"

namespace reproq::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFindings = 1;
inline constexpr int kExitUsage = 2;

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kParse, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline model::MeasurementSet load_dataset(const std::string& csv_path, const std::string& schema_path) {
  std::optional<model::ConditionSchema> schema;
  if (!schema_path.empty()) schema = model::parse_schema(read_file(schema_path));
  try {
    return model::parse_measurements(read_file(csv_path), schema);
  } catch (const Error& e) {
    throw Error(e.code(), csv_path + ": " + e.what());
  }
}

/// "1..7" -> {1, 7}.
inline std::pair<double, double> parse_scale(const std::string& range) {
  const auto pos = range.find("..");
  double lo = 0;
  double hi = 0;
  if (pos == std::string::npos || !text::parse_double(range.substr(0, pos), lo) ||
      !text::parse_double(range.substr(pos + 2), hi)) {
    throw Error(ErrorCode::kBadScale, "--rescale expects <min>..<max>, got '" + range + "'");
  }
  return {lo, hi};
}

struct ValidateOptions {
  std::string csv;
  std::string schema;
};

inline int cmd_validate(const ValidateOptions& opt, std::ostream& out) {
  const model::MeasurementSet set = load_dataset(opt.csv, opt.schema);
  const auto violations = model::validate_set(set);
  for (const auto& v : violations) {
    if (v.row) out << "row " << (*v.row + 1) << ": ";
    out << model::to_string(v.code) << ": " << v.message << "\n";
  }
  if (!violations.empty()) return kExitFindings;
  const auto& first = set.measurements.front();
  out << "OK: " << set.size() << " measurements of " << first.measurand << " (" << first.object_id
      << "), schema " << set.schema.name << " v" << set.schema.version << ", "
      << model::to_string(model::classify(set)) << " conditions\n";
  return kExitOk;
}

struct AssessOptions {
  std::string csv;
  std::string schema;
  std::string mode = "one";
  std::vector<std::string> baselines;
  double level = 0.95;
  std::vector<std::string> vary;
  std::string rescale;
  std::optional<double> target;
  std::string format = "text";
  bool tool_version = false;
};

inline int cmd_assess(const AssessOptions& opt, std::ostream& out) {
  model::MeasurementSet set = load_dataset(opt.csv, opt.schema);
  for (const auto& name : opt.vary) {
    if (!assessment::is_groupable(set.schema, name)) {
      throw Error(ErrorCode::kUnknownCondition,
                  "--vary: '" + name + "' is not a condition of schema '" + set.schema.name + "'");
    }
  }
  std::optional<std::pair<double, double>> scale;
  if (!opt.rescale.empty()) {
    scale = parse_scale(opt.rescale);
    set = model::rescale_to_zero(set, scale->first, scale->second);
  }

  assessment::AssessmentConfig config;
  config.ci_level = opt.level;
  config.varied_condition_names = opt.vary;
  config.target_precision = opt.target;

  assessment::AssessmentResult result;
  if (opt.mode == "one") {
    if (!opt.baselines.empty() || !opt.vary.empty()) {
      throw Error(ErrorCode::kInvalidSet, "--baseline and --vary require --mode two");
    }
    result = assessment::assess_one_phase(set, config);
  } else {
    if (opt.baselines.empty()) throw Error(ErrorCode::kInvalidSet, "--mode two needs at least one --baseline");
    std::vector<model::MeasurementSet> repeat_sets;
    for (const auto& path : opt.baselines) {
      model::MeasurementSet b = load_dataset(path, opt.schema);
      if (scale) b = model::rescale_to_zero(b, scale->first, scale->second);
      repeat_sets.push_back(std::move(b));
    }
    result = assessment::assess_two_phase(repeat_sets, set, config);
  }

  if (opt.format == "json") {
    out << report::render_structured(result, {opt.tool_version}).dump(2) << "\n";
  } else {
    out << report::render_text(result);
    if (opt.tool_version) out << "\nreproq " << kVersion << "\n";
  }
  return result.has_errors() ? kExitFindings : kExitOk;
}

struct ExamplesOptions {
  std::string name;
  std::string out_dir = ".";
};

inline int cmd_examples(const ExamplesOptions& opt, std::ostream& out, std::ostream& err) {
  const auto files = datasets::bundled_example(opt.name);
  if (!files) {
    err << "error: unknown example '" << opt.name << "'; available:";
    for (const auto& n : datasets::example_names()) err << " " << n;
    err << "\n";
    return kExitUsage;
  }
  const std::filesystem::path dir(opt.out_dir);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  for (const auto& f : *files) {
    const auto path = dir / f.filename;
    std::ofstream file(path, std::ios::binary);
    if (!file || !(file << f.content)) {
      err << "error: cannot write '" << path.string() << "'\n";
      return kExitUsage;
    }
    out << path.string() << "\n";
  }
  return kExitOk;
}

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Reproducibility assessment of repeated measurements", "reproq"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));

  ValidateOptions vopt;
  auto* validate = app.add_subcommand("validate", "Check a measurements CSV against its condition schema");
  validate->add_option("csv", vopt.csv, "Measurements CSV")->required();
  validate->add_option("--schema", vopt.schema, "Condition schema JSON (inferred from columns if omitted)");

  AssessOptions aopt;
  auto* assess = app.add_subcommand("assess", "Run a 1-phase or 2-phase reproducibility assessment");
  assess->add_option("csv", aopt.csv, "Measurements CSV (the reproducibility set in 2-phase mode)")->required();
  assess->add_option("--schema", aopt.schema, "Condition schema JSON");
  assess->add_option("--mode", aopt.mode, "Assessment procedure")
      ->check(CLI::IsMember({"one", "two"}))
      ->capture_default_str();
  assess->add_option("--baseline", aopt.baselines, "Repeatability-phase CSV (2-phase mode, repeatable)");
  assess->add_option("--level", aopt.level, "Confidence level for the s* interval")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  assess->add_option("--vary", aopt.vary, "Conditions varied in the reproducibility phase")->delimiter(',');
  assess->add_option("--rescale", aopt.rescale, "Shift a rating scale <min>..<max> to start at 0");
  assess->add_option("--target", aopt.target, "Target baseline CV* (percent) for 2-phase mode");
  assess->add_option("--format", aopt.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  assess->add_flag("--tool-version", aopt.tool_version, "Include the tool version in the output");

  ExamplesOptions eopt;
  auto* examples = app.add_subcommand("examples", "Write a bundled dataset and its schema to a directory");
  examples->add_option("name", eopt.name, "torc, wf1, human-eval or starter-schemas")->required();
  examples->add_option("--out", eopt.out_dir, "Output directory")->capture_default_str();

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*validate) return cmd_validate(vopt, out);
    if (*assess) return cmd_assess(aopt, out);
    if (*examples) return cmd_examples(eopt, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace reproq::cli

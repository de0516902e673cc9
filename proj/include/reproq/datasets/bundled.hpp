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

// Bundled datasets and starter condition schemas.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace reproq::datasets {

struct BundledFile {
  std::string filename;
  std::string_view content;
};

inline constexpr std::string_view kTorcCsv = R"data(# Seven weighings of the mass of torc 1991,0501.129 (British Museum).
# "?" marks an unknown value; a trailing "?" marks a value recorded with doubt.
object_id,measurand,unit,value,date,team,source,O:Treatments,N:Scales,P:Standard weight
"torc 1991,0501.129",mass,g,92,1991,?,British Museum collection database,0,?,?
"torc 1991,0501.129",mass,g,92.0,?,JF?,British Museum records,0?,?,?
"torc 1991,0501.129",mass,g,87.2,2012,JF,British Museum records,1,?,10g
"torc 1991,0501.129",mass,g,87.47,2021,CM,British Museum weighings 2021,1,SWS pocket scales,none
"torc 1991,0501.129",mass,g,87.37,2021,CM,British Museum weighings 2021,1,SWS pocket scales,none
"torc 1991,0501.129",mass,g,88.1,2021,CM,British Museum weighings 2021,1,CBD bench counting scales,none
"torc 1991,0501.129",mass,g,88.1,2021,CM,British Museum weighings 2021,1,CBD bench counting scales,none
)data";

inline constexpr std::string_view kTorcSchema = R"data({
  "name": "museum-mass",
  "version": "1",
  "conditions": [
    {"name": "Treatments", "group": "object", "description": "Conservation treatments applied to the object before weighing (0 = none, 1 = 1991 cleaning and acid immersion)"},
    {"name": "Scales", "group": "method", "description": "Weighing instrument used"},
    {"name": "Standard weight", "group": "procedure", "description": "Standard weight used to check calibration, if any"}
  ]
}
)data";

inline constexpr std::string_view kWf1Csv = R"data(# Eight weighted-F1 scores for the multPOS- essay grading classifier variant.
object_id,measurand,unit,value,date,team,source,O:Code,O:Seed,O:CT env,N:Method,N:Implem.,P:Procedure,P:Inputs,P:RT env
multPOS-,wF1,wF1,0.726,2018,V&R,Vajjala and Rama (2018),V&R,V&R 1 fixed,V&R,"wF1(o,t)",V&R,OTE,V&R,V&R
multPOS-,wF1,wF1,0.680,2020,A et al.,Arhiliuc et al. (2020),V&R,?,A et al. Win,"wF1(o,t)",V&R?,OTE,V&R,A et al. Win
multPOS-,wF1,wF1,0.680,2020,B,Bestgen (2020),V&R,V&R 1 fixed,B MacOS,"wF1(o,t)",?,OTE,V&R,B MacOS
multPOS-,wF1,wF1,0.722,2020,B,Bestgen (2020),V&R,V&R 1 fixed,B Docker,"wF1(o,t)",?,OTE,V&R,B Docker
multPOS-,wF1,wF1,0.728,2020,B,Bestgen (2020),V&R+s,B 10 avg,B Docker,"wF1(o,t)",?,OTE,B,B Docker
multPOS-,wF1,wF1,0.680,2019,C&B,Caines and Buttery (2020),V&R,V&R 1 fixed,C&B1,"wF1(o,t)",?,OTE,V&R,C&B1
multPOS-,wF1,wF1,0.732,2020,C&B,Caines and Buttery (2020),C&B,?,C&B2,"wF1(o,t)",?,OTE,C&B,C&B2
multPOS-,wF1,wF1,0.681,2020,H&C,Huber and Coltekin (2020),V&R,H&C 10 avg,H&C,"wF1(o,t)",?,OTE,H&C,H&C
)data";

inline constexpr std::string_view kWf1Schema = R"data({
  "name": "text-classifier-wf1",
  "version": "1",
  "conditions": [
    {"name": "Code", "group": "object", "description": "System code base (random seed handled separately)"},
    {"name": "Seed", "group": "object", "description": "Random seed regime"},
    {"name": "CT env", "group": "object", "description": "Compile-time environment"},
    {"name": "Method", "group": "method", "description": "Metric definition"},
    {"name": "Implem.", "group": "method", "description": "Metric implementation"},
    {"name": "Procedure", "group": "procedure", "description": "Evaluation procedure; OTE = outputs vs. targets evaluation"},
    {"name": "Inputs", "group": "procedure", "description": "Test set"},
    {"name": "RT env", "group": "procedure", "description": "Run-time environment"}
  ]
}
)data";

inline constexpr std::string_view kClarityCsv = R"data(# Mean Clarity ratings on a 1..7 scale from an original human evaluation and its reproduction.
# Reconstructed values: only the mean (4.969 on 0..6) and CV* (13.193 on 0..6) are reported for this
# pair. It is back-solved from them for n = 2; on the 0..6 scale it is {5.2978, 4.6402}.
object_id,measurand,unit,value,date,team,source,N:Measurand definition,N:Evaluation mode,N:Response elicitation,P:Evaluators,P:Evaluation interface
PASS report generator,Clarity,rating-1..7,6.2978,2017,vdL et al.,van der Lee et al. (2017),Clarity,absolute intrinsic subjective,7-point rating,original panel,original interface
PASS report generator,Clarity,rating-1..7,5.6402,2021,Mille et al.,Mille et al. (2021),Clarity,absolute intrinsic subjective,7-point rating,new panel,online interface
)data";

inline constexpr std::string_view kFluencyCsv = R"data(# Mean Fluency ratings on a 1..7 scale from an original human evaluation and its reproduction.
# Reconstructed values: only the mean (4.75 on 0..6) and CV* (16.372 on 0..6) are reported for this
# pair. It is back-solved from them for n = 2; on the 0..6 scale it is {5.14, 4.36}.
object_id,measurand,unit,value,date,team,source,N:Measurand definition,N:Evaluation mode,N:Response elicitation,P:Evaluators,P:Evaluation interface
PASS report generator,Fluency,rating-1..7,6.14,2017,vdL et al.,van der Lee et al. (2017),Fluency,absolute intrinsic subjective,7-point rating,original panel,original interface
PASS report generator,Fluency,rating-1..7,5.36,2021,Mille et al.,Mille et al. (2021),Fluency,absolute intrinsic subjective,7-point rating,new panel,online interface
)data";

inline constexpr std::string_view kHumanEvalSchema = R"data({
  "name": "human-eval-ratings",
  "version": "1",
  "conditions": [
    {"name": "Measurand definition", "group": "method", "description": "Name and definition of the quality criterion rated"},
    {"name": "Evaluation mode", "group": "method", "description": "Absolute/relative, intrinsic/extrinsic, objective/subjective"},
    {"name": "Response elicitation", "group": "method", "description": "How ratings were elicited"},
    {"name": "Evaluators", "group": "procedure", "description": "Evaluator panel"},
    {"name": "Evaluation interface", "group": "procedure", "description": "Interface shown to evaluators"}
  ]
}
)data";

inline constexpr std::string_view kMetricStarterSchema = R"data({
  "name": "metric-starter",
  "version": "1",
  "conditions": [
    {"name": "Dependencies", "group": "object", "description": "Specification of software dependencies"},
    {"name": "Training code", "group": "object", "description": "Code used to train the system"},
    {"name": "Pre-trained models", "group": "object", "description": "Released model weights"},
    {"name": "Run commands", "group": "object", "description": "Exact commands used to run code and produce results"},
    {"name": "Compile-time environment", "group": "object", "description": "Build environment"},
    {"name": "Run-time environment", "group": "object", "description": "Execution environment"},
    {"name": "Method dependencies", "group": "method", "description": "Dependencies of the metric implementation"},
    {"name": "Evaluation code", "group": "method", "description": "Implementation of the metric"},
    {"name": "Method run commands", "group": "method", "description": "Commands used to compute the metric"},
    {"name": "Method compile-time environment", "group": "method", "description": "Build environment of the metric code"},
    {"name": "Method run-time environment", "group": "method", "description": "Execution environment of the metric code"},
    {"name": "Test set", "group": "procedure", "description": "Test data the metric is computed on"},
    {"name": "Preparatory steps", "group": "procedure", "description": "Preprocessing applied before evaluation"},
    {"name": "Procedure code", "group": "procedure", "description": "Any other code used in applying the method"}
  ]
}
)data";

inline constexpr std::string_view kHumanStarterSchema = R"data({
  "name": "human-eval-starter",
  "version": "1",
  "conditions": [
    {"name": "Measurand definition", "group": "method", "description": "Name and definition of the quality criterion"},
    {"name": "Evaluation mode", "group": "method", "description": "Absolute/relative, intrinsic/extrinsic, objective/subjective"},
    {"name": "Response elicitation", "group": "method", "description": "Method of eliciting responses"},
    {"name": "Response aggregation", "group": "method", "description": "How raw responses are aggregated or processed"},
    {"name": "Method code", "group": "method", "description": "Any code used by the method"},
    {"name": "Test set or system set-up", "group": "procedure", "description": "Test set and preprocessing, or interactive system set-up"},
    {"name": "Response collection", "group": "procedure", "description": "How responses were collected"},
    {"name": "Quality assurance", "group": "procedure", "description": "Quality assurance code or methods"},
    {"name": "Evaluator instructions", "group": "procedure", "description": "Instructions given to evaluators"},
    {"name": "Evaluation interface", "group": "procedure", "description": "Interface used by evaluators"},
    {"name": "Procedure code", "group": "procedure", "description": "Any other code used"}
  ]
}
)data";

inline const std::vector<std::string>& example_names() {
  static const std::vector<std::string> kNames = {"torc", "wf1", "human-eval", "starter-schemas"};
  return kNames;
}

/// Files making up a bundled example, or nullopt for an unknown name.
inline std::optional<std::vector<BundledFile>> bundled_example(std::string_view name) {
  if (name == "torc") return std::vector<BundledFile>{{"torc.csv", kTorcCsv}, {"torc.schema.json", kTorcSchema}};
  if (name == "wf1") return std::vector<BundledFile>{{"wf1.csv", kWf1Csv}, {"wf1.schema.json", kWf1Schema}};
  if (name == "human-eval") {
    return std::vector<BundledFile>{{"clarity.csv", kClarityCsv},
                                    {"fluency.csv", kFluencyCsv},
                                    {"human-eval.schema.json", kHumanEvalSchema}};
  }
  if (name == "starter-schemas") {
    return std::vector<BundledFile>{{"metric-starter.schema.json", kMetricStarterSchema},
                                    {"human-eval-starter.schema.json", kHumanStarterSchema}};
  }
  return std::nullopt;
}

}  // namespace reproq::datasets

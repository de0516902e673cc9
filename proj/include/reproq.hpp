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

#include "reproq/assessment/assessment.hpp"
#include "reproq/datasets/bundled.hpp"
#include "reproq/error.hpp"
#include "reproq/model/dataset_io.hpp"
#include "reproq/model/measurement.hpp"
#include "reproq/notes.hpp"
#include "reproq/numeric/special_functions.hpp"
#include "reproq/report/structured_report.hpp"
#include "reproq/report/text_report.hpp"
#include "reproq/stats/precision.hpp"

// Copyright 2026 The procrecon Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// End-to-end model reconstruction:
//
//   parse model -> extract constraints -> select entities -> add tasks
//   -> reserve tasks -> build 0/1 program -> branch-and-bound
//   -> splice out dropped tasks -> serialize
//
// When the requirements name no objective and no constraint or retained
// task rule, the solver is bypassed and every task is kept.

#ifndef PROCRECON_PIPELINE_H_
#define PROCRECON_PIPELINE_H_

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"
#include "procrecon/bounded_simplex.h"
#include "procrecon/json_io.h"
#include "procrecon/req_extract.h"
#include "procrecon/restructure.h"

namespace procrecon {

struct ReconstructOptions {
  Dictionary dictionary = DefaultDictionary();
  AddedTaskProperties added_properties;
};

struct ObjectiveReport {
  std::string property;
  Direction direction = Direction::kMax;
  double value = 0;
};

struct ConstraintRowReport {
  std::string property;
  RowRelation relation = RowRelation::kLessEqual;
  double bound = 0;           // As stated in the requirements.
  double achieved_total = 0;  // Over every task of the output model.
};

struct ReconstructionReport {
  std::vector<std::string> kept;     // Optimizable tasks the solver kept.
  std::vector<std::string> dropped;  // Optimizable tasks it discarded.
  std::vector<std::string> added;
  std::vector<std::string> reserved;
  std::optional<ObjectiveReport> objective;
  std::vector<ConstraintRowReport> constraint_rows;
  std::string status;  // "optimal", "infeasible" or "skipped".
  int64_t nodes_explored = 0;
  std::optional<double> best_bound;
  std::vector<std::pair<std::string, double>> timings_ms;
  std::vector<std::string> warnings;
};

struct ReconstructionResult {
  // Absent when the selection program is infeasible.
  std::optional<std::string> model_text;
  ReconstructionReport report;
};

// Stage failures carry the stage name as a message prefix.
absl::StatusOr<ReconstructionResult> Reconstruct(
    std::string_view model_text, std::string_view requirements_text,
    const ReconstructOptions& options = {});

Json ReportToJson(const ReconstructionReport& report);

}  // namespace procrecon

#endif  // PROCRECON_PIPELINE_H_

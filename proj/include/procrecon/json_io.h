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

// JSON documents exchanged by the command-line tool. Keys are emitted in a
// fixed order so that output diffs are stable.

#ifndef PROCRECON_JSON_IO_H_
#define PROCRECON_JSON_IO_H_

#include <string_view>

#include "absl/status/statusor.h"
#include "json.hpp"
#include "procrecon/ilp_solver.h"
#include "procrecon/req_extract.h"

namespace procrecon {

using Json = nlohmann::ordered_json;

// {"esc": [..] | null, "aac": [{"entity", "task"}],
//  "arc": [{"property", "relation", "value"}],
//  "tfc": {"property", "direction"} | null,
//  "cc": [{"property", "relation", "value"}]}
Json ConstraintSetToJson(const ConstraintSet& constraints);

// {"direction": "max" | "min", "variables": [..],
//  "objective_coefficients": [..], "fixed_contribution": x,
//  "rows": [{"coefficients": [..], "relation": "<=" | ">=", "bound": x}],
//  "fixed": {"name": 0 | 1}}     ("fixed" is optional on input)
Json ProblemToJson(const IlpProblem& problem);
absl::StatusOr<IlpProblem> ProblemFromJson(std::string_view text);

// {"status", "objective_value" | null, "assignment": {"name": 0 | 1},
//  "fixed": {"name": 0 | 1},
//  "stats": {"nodes_explored", "best_bound" | null}}
Json SolutionToJson(const IlpProblem& problem, const Solution& solution);

std::string_view RowRelationSymbol(RowRelation relation);

}  // namespace procrecon

#endif  // PROCRECON_JSON_IO_H_

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

#include "procrecon/json_io.h"

#include <string>

#include "absl/status/status.h"
#include "fmt/format.h"
#include "fmt/ranges.h"

namespace procrecon {

std::string_view RowRelationSymbol(RowRelation relation) {
  return relation == RowRelation::kLessEqual ? "<=" : ">=";
}

namespace {

Json BoundToJson(const PropertyBound& bound) {
  Json out;
  out["property"] = bound.property;
  out["relation"] = RelationName(bound.relation);
  out["value"] = bound.value;
  return out;
}

absl::Status FieldError(std::string_view field, std::string_view what) {
  return absl::InvalidArgumentError(
      fmt::format("problem JSON: \"{}\" {}", field, what));
}

absl::StatusOr<std::vector<double>> NumberArray(const Json& value,
                                                std::string_view field) {
  if (!value.is_array()) return FieldError(field, "must be an array");
  std::vector<double> out;
  for (const Json& item : value) {
    if (!item.is_number()) return FieldError(field, "must hold numbers");
    out.push_back(item.get<double>());
  }
  return out;
}

absl::StatusOr<double> Number(const Json& object, std::string_view field) {
  auto it = object.find(field);
  if (it == object.end()) return FieldError(field, "is missing");
  if (!it->is_number()) return FieldError(field, "must be a number");
  return it->get<double>();
}

}  // namespace

Json ConstraintSetToJson(const ConstraintSet& constraints) {
  Json out;
  if (constraints.esc.has_value()) {
    out["esc"] = *constraints.esc;
  } else {
    out["esc"] = nullptr;
  }
  out["aac"] = Json::array();
  for (const AugmentedTask& added : constraints.aac) {
    out["aac"].push_back({{"entity", added.entity}, {"task", added.task}});
  }
  out["arc"] = Json::array();
  for (const PropertyBound& rule : constraints.arc) {
    out["arc"].push_back(BoundToJson(rule));
  }
  if (constraints.tfc.has_value()) {
    out["tfc"] = {{"property", constraints.tfc->property},
                  {"direction", DirectionName(constraints.tfc->direction)}};
  } else {
    out["tfc"] = nullptr;
  }
  out["cc"] = Json::array();
  for (const PropertyBound& row : constraints.cc) {
    out["cc"].push_back(BoundToJson(row));
  }
  return out;
}

Json ProblemToJson(const IlpProblem& problem) {
  Json out;
  out["direction"] = DirectionName(problem.direction);
  out["variables"] = problem.variables;
  out["objective_coefficients"] = problem.objective;
  out["fixed_contribution"] = problem.fixed_contribution;
  out["rows"] = Json::array();
  for (const LinearRow& row : problem.rows) {
    Json item;
    item["coefficients"] = row.coefficients;
    item["relation"] = RowRelationSymbol(row.relation);
    item["bound"] = row.bound;
    out["rows"].push_back(std::move(item));
  }
  out["fixed"] = Json::object();
  for (const auto& [name, value] : problem.fixed) out["fixed"][name] = value;
  return out;
}

absl::StatusOr<IlpProblem> ProblemFromJson(std::string_view text) {
  const Json doc = Json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded()) {
    return absl::InvalidArgumentError("problem JSON: malformed document");
  }
  if (!doc.is_object()) {
    return absl::InvalidArgumentError("problem JSON: expected an object");
  }

  IlpProblem problem;
  auto direction = doc.find("direction");
  if (direction == doc.end() || !direction->is_string()) {
    return FieldError("direction", "must be \"max\" or \"min\"");
  }
  if (*direction == "max") {
    problem.direction = Direction::kMax;
  } else if (*direction == "min") {
    problem.direction = Direction::kMin;
  } else {
    return FieldError("direction", "must be \"max\" or \"min\"");
  }

  auto variables = doc.find("variables");
  if (variables == doc.end() || !variables->is_array()) {
    return FieldError("variables", "must be an array of names");
  }
  for (const Json& name : *variables) {
    if (!name.is_string()) return FieldError("variables", "must hold strings");
    problem.variables.push_back(name.get<std::string>());
  }

  auto objective = doc.find("objective_coefficients");
  if (objective == doc.end()) {
    return FieldError("objective_coefficients", "is missing");
  }
  absl::StatusOr<std::vector<double>> coefficients =
      NumberArray(*objective, "objective_coefficients");
  if (!coefficients.ok()) return coefficients.status();
  problem.objective = *std::move(coefficients);

  if (doc.contains("fixed_contribution")) {
    absl::StatusOr<double> fixed = Number(doc, "fixed_contribution");
    if (!fixed.ok()) return fixed.status();
    problem.fixed_contribution = *fixed;
  }

  auto rows = doc.find("rows");
  if (rows != doc.end()) {
    if (!rows->is_array()) return FieldError("rows", "must be an array");
    for (const Json& item : *rows) {
      if (!item.is_object()) return FieldError("rows", "must hold objects");
      LinearRow row;
      auto row_coefficients = item.find("coefficients");
      if (row_coefficients == item.end()) {
        return FieldError("rows[].coefficients", "is missing");
      }
      absl::StatusOr<std::vector<double>> values =
          NumberArray(*row_coefficients, "rows[].coefficients");
      if (!values.ok()) return values.status();
      row.coefficients = *std::move(values);
      auto relation = item.find("relation");
      if (relation == item.end() || !relation->is_string() ||
          (*relation != "<=" && *relation != ">=")) {
        return FieldError("rows[].relation", "must be \"<=\" or \">=\"");
      }
      row.relation = *relation == "<=" ? RowRelation::kLessEqual
                                       : RowRelation::kGreaterEqual;
      absl::StatusOr<double> bound = Number(item, "bound");
      if (!bound.ok()) return FieldError("rows[].bound", "must be a number");
      row.bound = *bound;
      problem.rows.push_back(std::move(row));
    }
  }

  auto fixed = doc.find("fixed");
  if (fixed != doc.end()) {
    if (!fixed->is_object()) return FieldError("fixed", "must be an object");
    for (const auto& [name, value] : fixed->items()) {
      if (!value.is_number_integer()) {
        return FieldError("fixed", "values must be 0 or 1");
      }
      problem.fixed.emplace_back(name, value.get<int>());
    }
  }

  const std::vector<std::string> errors = CheckProblem(problem);
  if (!errors.empty()) {
    return absl::InvalidArgumentError(
        fmt::format("problem JSON: {}", fmt::join(errors, "; ")));
  }
  return problem;
}

Json SolutionToJson(const IlpProblem& problem, const Solution& solution) {
  Json out;
  out["status"] = SolveStatusName(solution.status);
  if (solution.status == SolveStatus::kOptimal) {
    out["objective_value"] = solution.objective_value;
  } else {
    out["objective_value"] = nullptr;
  }
  out["assignment"] = Json::object();
  for (size_t i = 0; i < solution.assignment.size(); ++i) {
    out["assignment"][problem.variables[i]] = solution.assignment[i];
  }
  out["fixed"] = Json::object();
  for (const auto& [name, value] : solution.fixed) out["fixed"][name] = value;
  Json stats;
  stats["nodes_explored"] = solution.stats.nodes_explored;
  if (solution.stats.best_bound.has_value()) {
    stats["best_bound"] = *solution.stats.best_bound;
  } else {
    stats["best_bound"] = nullptr;
  }
  out["stats"] = std::move(stats);
  return out;
}

}  // namespace procrecon

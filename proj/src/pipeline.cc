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

#include "procrecon/pipeline.h"

#include <chrono>

#include "absl/status/status.h"
#include "fmt/format.h"
#include "procrecon/ilp_solver.h"
#include "procrecon/model_io.h"

namespace procrecon {
namespace {

absl::Status InStage(std::string_view stage, const absl::Status& status) {
  return absl::Status(
      status.code(),
      fmt::format("{}: {}", stage, std::string(status.message())));
}

class StageClock {
 public:
  void Lap(std::string_view stage, ReconstructionReport* report) {
    const auto now = std::chrono::steady_clock::now();
    report->timings_ms.emplace_back(
        std::string(stage),
        std::chrono::duration<double, std::milli>(now - last_).count());
    last_ = now;
  }

 private:
  std::chrono::steady_clock::time_point last_ =
      std::chrono::steady_clock::now();
};

// Totals are taken over every task, or only over `only` when given.
void FillConstraintRows(const ProcessModel& model,
                        const std::vector<PropertyBound>& cc,
                        const TaskSet* only, ReconstructionReport* report) {
  for (const PropertyBound& row : cc) {
    ConstraintRowReport entry;
    entry.property = row.property;
    entry.relation = row.relation == Relation::kLess
                         ? RowRelation::kLessEqual
                         : RowRelation::kGreaterEqual;
    entry.bound = row.value;
    for (const Entity& entity : model.entities) {
      for (const Task& task : entity.tasks) {
        if (only != nullptr && !only->contains(task.name)) continue;
        entry.achieved_total += task.GetOr0(row.property);
      }
    }
    report->constraint_rows.push_back(std::move(entry));
  }
}

}  // namespace

absl::StatusOr<ReconstructionResult> Reconstruct(
    std::string_view model_text, std::string_view requirements_text,
    const ReconstructOptions& options) {
  ReconstructionResult result;
  ReconstructionReport& report = result.report;
  StageClock clock;

  absl::StatusOr<ProcessModel> original = ParseModel(model_text);
  if (!original.ok()) return InStage("parse model", original.status());
  clock.Lap("parse", &report);

  absl::StatusOr<ConstraintSet> constraints =
      Extract(requirements_text, options.dictionary);
  if (!constraints.ok()) return InStage("extract", constraints.status());
  if (!constraints->tfc.has_value() &&
      (!constraints->cc.empty() || !constraints->arc.empty())) {
    return absl::FailedPreconditionError(
        "extract: constraint or retained-task requirements need an objective");
  }
  clock.Lap("extract", &report);

  absl::StatusOr<ProcessModel> selected =
      SelectEntities(*original, constraints->esc);
  if (!selected.ok()) return InStage("select entities", selected.status());
  absl::StatusOr<AddedTasks> added =
      AddTasks(*selected, constraints->aac, options.added_properties);
  if (!added.ok()) return InStage("add tasks", added.status());
  ReserveResult reservation = ReserveTasks(added->model, constraints->arc);
  report.warnings = reservation.warnings;
  for (const AugmentedTask& task : constraints->aac) {
    report.added.push_back(std::string(TrimName(task.task)));
  }
  // Model order for the reserved list.
  for (const std::string& name : added->model.TaskNames()) {
    if (reservation.reserved.contains(name)) report.reserved.push_back(name);
  }
  clock.Lap("restructure", &report);

  ProcessModel output = added->model;
  if (!constraints->tfc.has_value()) {
    report.status = "skipped";
    for (const std::string& name : output.TaskNames()) {
      if (!added->forced.contains(name)) report.kept.push_back(name);
    }
    clock.Lap("solve", &report);
  } else {
    absl::StatusOr<IlpProblem> problem =
        BuildProblem(output, constraints->tfc, constraints->cc,
                     reservation.reserved, added->forced);
    if (!problem.ok()) return InStage("build problem", problem.status());
    const Solution solution = BranchAndBound(*problem);
    clock.Lap("solve", &report);

    report.status = std::string(SolveStatusName(solution.status));
    report.nodes_explored = solution.stats.nodes_explored;
    report.best_bound = solution.stats.best_bound;
    if (solution.status == SolveStatus::kInfeasible) {
      // Report what the fixed tasks alone already consume.
      TaskSet fixed = reservation.reserved;
      fixed.insert(added->forced.begin(), added->forced.end());
      FillConstraintRows(output, constraints->cc, &fixed, &report);
      return result;
    }
    report.objective =
        ObjectiveReport{constraints->tfc->property, constraints->tfc->direction,
                        solution.objective_value};
    for (int i = 0; i < problem->size(); ++i) {
      const std::string& name = problem->variables[i];
      if (solution.assignment[i] == 1) {
        report.kept.push_back(name);
        continue;
      }
      report.dropped.push_back(name);
      absl::StatusOr<ProcessModel> spliced = RemoveTaskWithSplice(output, name);
      if (!spliced.ok()) return InStage("rebuild", spliced.status());
      output = *std::move(spliced);
    }
  }

  FillConstraintRows(output, constraints->cc, nullptr, &report);
  absl::StatusOr<std::string> text = SerializeModel(output);
  if (!text.ok()) return InStage("rebuild", text.status());
  result.model_text = *std::move(text);
  clock.Lap("rebuild", &report);
  return result;
}

Json ReportToJson(const ReconstructionReport& report) {
  Json out;
  out["kept"] = report.kept;
  out["dropped"] = report.dropped;
  out["added"] = report.added;
  out["reserved"] = report.reserved;
  if (report.objective.has_value()) {
    out["objective"] = {
        {"property", report.objective->property},
        {"direction", DirectionName(report.objective->direction)},
        {"value", report.objective->value}};
  } else {
    out["objective"] = nullptr;
  }
  out["constraint_rows"] = Json::array();
  for (const ConstraintRowReport& row : report.constraint_rows) {
    Json item;
    item["property"] = row.property;
    item["relation"] = RowRelationSymbol(row.relation);
    item["bound"] = row.bound;
    item["achieved_total"] = row.achieved_total;
    out["constraint_rows"].push_back(std::move(item));
  }
  Json stats;
  stats["status"] = report.status;
  stats["nodes_explored"] = report.nodes_explored;
  if (report.best_bound.has_value()) {
    stats["best_bound"] = *report.best_bound;
  } else {
    stats["best_bound"] = nullptr;
  }
  out["solver_stats"] = std::move(stats);
  out["timings_ms"] = Json::object();
  for (const auto& [stage, ms] : report.timings_ms) {
    out["timings_ms"][stage] = ms;
  }
  out["warnings"] = report.warnings;
  return out;
}

}  // namespace procrecon

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

#include "testing.h"

#include <algorithm>
#include <array>
#include <set>
#include <string_view>
#include <utility>

#include "fmt/format.h"
#include "procrecon/model_io.h"

namespace procrecon::testing {
namespace {

std::string RandomName(Rng& rng, int serial) {
  static constexpr std::array<std::string_view, 12> kPieces = {
      "a", "Z", "7", " ", "\"", "\\", "é", "、", "-", "{", "#", "task"};
  std::string name;
  const int length = rng.Int(1, 8);
  for (int i = 0; i < length; ++i) name += kPieces[rng.Int(0, 11)];
  // Serial keeps names unique; the brackets keep the edges non-blank.
  return fmt::format("[{}]{}", name, serial);
}

double RandomValue(Rng& rng) {
  switch (rng.Int(0, 3)) {
    case 0:
      return rng.Int(0, 100000);
    case 1:
      return rng.Int(0, 1000000) / 1000.0;
    case 2:
      return rng.Unit() * 1000.0;
    default:
      return 0.0;
  }
}

PropertyList RandomProperties(Rng& rng) {
  static constexpr std::array<std::string_view, 6> kNames = {
      "time", "cost", "importance", "risk_2", "a", "x9_y"};
  PropertyList properties;
  const int count = rng.Int(0, 4);
  for (int i = 0; i < count; ++i) {
    const std::string name(kNames[rng.Int(0, 5)]);
    const bool seen = std::any_of(
        properties.begin(), properties.end(),
        [&](const auto& property) { return property.first == name; });
    if (!seen) properties.emplace_back(name, RandomValue(rng));
  }
  return properties;
}

std::vector<std::string> AddRandomTasks(Rng& rng, ProcessModel* model,
                                        int task_count) {
  const int entity_count = task_count == 0 ? rng.Int(0, 3) : rng.Int(1, 5);
  for (int e = 0; e < entity_count; ++e) {
    model->entities.push_back({RandomName(rng, e), {}});
  }
  std::vector<std::string> names;
  for (int t = 0; t < task_count; ++t) {
    Entity& owner = model->entities[rng.Int(0, entity_count - 1)];
    owner.tasks.push_back({RandomName(rng, 1000 + t), RandomProperties(rng)});
  }
  // Report names in model order, which is what TaskNames() yields.
  return model->TaskNames();
}

}  // namespace

ProcessModel RandomModel(Rng& rng) {
  ProcessModel model;
  model.name = RandomName(rng, 0);
  const std::vector<std::string> names =
      AddRandomTasks(rng, &model, rng.Int(0, 12));
  const int n = static_cast<int>(names.size());
  if (n < 2) return model;
  std::set<std::pair<int, int>> used;
  const int attempts = rng.Int(0, 2 * n);
  for (int i = 0; i < attempts; ++i) {
    const int source = rng.Int(0, n - 1);
    const int target = rng.Int(0, n - 1);
    if (source == target || !used.emplace(source, target).second) continue;
    model.flows.push_back({names[source], names[target]});
  }
  return model;
}

ProcessModel RandomDag(Rng& rng, int max_tasks) {
  ProcessModel model;
  model.name = "dag";
  const std::vector<std::string> names =
      AddRandomTasks(rng, &model, rng.Int(1, max_tasks));
  const int n = static_cast<int>(names.size());
  // Index order is a topological order; the flow list is shuffled so the
  // splice sees flows in arbitrary order.
  const int density = rng.Int(10, 50);
  std::vector<ControlFlow> flows;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (rng.Chance(density)) flows.push_back({names[i], names[j]});
    }
  }
  for (int i = static_cast<int>(flows.size()) - 1; i > 0; --i) {
    std::swap(flows[i], flows[rng.Int(0, i)]);
  }
  model.flows = std::move(flows);
  return model;
}

std::vector<std::vector<bool>> TransitiveClosure(
    const std::vector<std::string>& names,
    const std::vector<ControlFlow>& flows) {
  const size_t n = names.size();
  auto index = [&](const std::string& name) {
    return static_cast<size_t>(std::find(names.begin(), names.end(), name) -
                               names.begin());
  };
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (const ControlFlow& flow : flows) {
    const size_t s = index(flow.source);
    const size_t t = index(flow.target);
    if (s < n && t < n) reach[s][t] = true;
  }
  // Warshall.
  for (size_t k = 0; k < n; ++k) {
    for (size_t i = 0; i < n; ++i) {
      if (!reach[i][k]) continue;
      for (size_t j = 0; j < n; ++j) {
        if (reach[k][j]) reach[i][j] = true;
      }
    }
  }
  return reach;
}

IlpProblem RandomProblem(Rng& rng, int max_variables) {
  IlpProblem problem;
  const int n = rng.Int(1, max_variables);
  for (int i = 0; i < n; ++i) {
    problem.variables.push_back(fmt::format("x{}", i));
    problem.objective.push_back(rng.Int(0, 100));
  }
  problem.direction = rng.Chance(50) ? Direction::kMax : Direction::kMin;
  problem.fixed_contribution = rng.Int(0, 50);
  const int row_count = rng.Int(0, 3);
  for (int r = 0; r < row_count; ++r) {
    LinearRow row;
    int sum = 0;
    for (int i = 0; i < n; ++i) {
      row.coefficients.push_back(rng.Int(0, 100));
      sum += static_cast<int>(row.coefficients.back());
    }
    row.relation =
        rng.Chance(50) ? RowRelation::kLessEqual : RowRelation::kGreaterEqual;
    const bool binding = rng.Chance(50);
    if (row.relation == RowRelation::kLessEqual) {
      row.bound =
          binding ? rng.Int(0, std::max(sum - 1, 0)) : sum + rng.Int(0, 20);
    } else {
      row.bound = binding ? rng.Int(1, std::max(sum, 1)) : 0;
    }
    problem.rows.push_back(std::move(row));
  }
  return problem;
}

// Case-study fixture.

namespace {

constexpr uint32_t kCaseStudySeed = 49;

struct Lane {
  std::string_view name;
  std::string_view code;
  int tasks;
};

constexpr std::array<Lane, 5> kLanes = {{
    {"Supplier", "SUP", 11},
    {"Airborne Health Management Specialist", "AHM", 10},
    {"Member Management Specialist", "MMS", 10},
    {"Test and Validation Expert", "TVE", 9},
    {"Customer Service Company", "CSC", 9},
}};

constexpr std::array<std::string_view, 20> kActivities = {
    "Requirement Review",    "Interface Analysis", "Design Review",
    "Prototype Build",       "Test Planning",      "Verification",
    "Failure Analysis",      "Documentation",      "Supplier Audit",
    "Integration",           "Data Collection",    "Risk Assessment",
    "Configuration Control", "Training",           "Acceptance",
    "Maintenance Planning",  "Change Assessment",  "Safety Analysis",
    "Cost Estimation",       "Schedule Review",
};

std::string Canonical(const ProcessModel& model) {
  // Generated models are valid by construction.
  return *SerializeModel(model);
}

}  // namespace

std::string CaseStudyModelText() {
  Rng rng(kCaseStudySeed);
  ProcessModel model;
  model.name = "Airborne Maintenance Development Process";
  std::vector<std::string> order;
  for (const Lane& lane : kLanes) {
    Entity entity{std::string(lane.name), {}};
    for (int i = 1; i <= lane.tasks; ++i) {
      Task task;
      task.name = fmt::format(
          "{}-{:02} {}", lane.code, i,
          kActivities[rng.Int(0, static_cast<int>(kActivities.size()) - 1)]);
      task.properties = {
          {"time", rng.Int(20, 120)},
          {"cost", 1000.0 * rng.Int(100, 600)},
          {"importance", rng.Int(10, 100)},
      };
      order.push_back(task.name);
      entity.tasks.push_back(std::move(task));
    }
    model.entities.push_back(std::move(entity));
  }
  // Lanes interleave: each task flows to the next one in a round-robin
  // walk, with occasional skip-ahead hand-offs.
  std::vector<std::string> walk;
  for (int i = 0;; ++i) {
    bool any = false;
    for (const Entity& entity : model.entities) {
      if (i < static_cast<int>(entity.tasks.size())) {
        walk.push_back(entity.tasks[i].name);
        any = true;
      }
    }
    if (!any) break;
  }
  std::set<std::pair<std::string, std::string>> seen;
  for (size_t i = 0; i + 1 < walk.size(); ++i) {
    model.flows.push_back({walk[i], walk[i + 1]});
    seen.emplace(walk[i], walk[i + 1]);
    if (i + 3 < walk.size() && rng.Chance(25)) {
      const std::string& target = walk[i + 2 + rng.Int(0, 1)];
      if (seen.emplace(walk[i], target).second) {
        model.flows.push_back({walk[i], target});
      }
    }
  }
  return Canonical(model);
}

std::string CaseStudyRequirementsText() {
  return "# Reconstruction requirements for the airborne maintenance process.\n"
         "The new model shall contain \"Supplier\", \"Airborne Health "
         "Management Specialist\", \"Member Management Specialist\", \"Test "
         "and Validation Expert\", \"Customer Service Company\"\n"
         "Supplier shall add \"Airborne Maintenance and Health Management "
         "System RFI Response\"\n"
         "Importance shall be maximum\n"
         "Reserve importance greater than 90 tasks\n"
         "Time does not exceed 2500 hours\n"
         "Cost does not exceed 15,000,000\n";
}

std::string InfeasibleModelText() {
  ProcessModel model;
  model.name = "Over Budget";
  model.entities.push_back({"Supplier",
                            {{"Alpha", {{"time", 1500}, {"importance", 95}}},
                             {"Beta", {{"time", 1200}, {"importance", 92}}},
                             {"Gamma", {{"time", 100}, {"importance", 40}}}}});
  model.flows = {{"Alpha", "Beta"}, {"Beta", "Gamma"}};
  return Canonical(model);
}

std::string InfeasibleRequirementsText() {
  return "Importance shall be maximum\n"
         "Reserve importance greater than 90 tasks\n"
         "Time does not exceed 2500 hours\n";
}

}  // namespace procrecon::testing

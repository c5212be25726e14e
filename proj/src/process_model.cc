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

#include "procrecon/process_model.h"

#include <cmath>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "absl/status/status.h"
#include "fmt/format.h"

namespace procrecon {

std::optional<double> Task::Get(std::string_view property) const {
  for (const auto& [key, value] : properties) {
    if (key == property) return value;
  }
  return std::nullopt;
}

double Task::GetOr0(std::string_view property) const {
  return Get(property).value_or(0.0);
}

void Task::Set(std::string_view property, double value) {
  for (auto& [key, existing] : properties) {
    if (key == property) {
      existing = value;
      return;
    }
  }
  properties.emplace_back(std::string(property), value);
}

std::vector<std::string> ProcessModel::TaskNames() const {
  std::vector<std::string> names;
  for (const Entity& entity : entities) {
    for (const Task& task : entity.tasks) names.push_back(task.name);
  }
  return names;
}

size_t ProcessModel::TaskCount() const {
  size_t count = 0;
  for (const Entity& entity : entities) count += entity.tasks.size();
  return count;
}

bool IsPropertyName(std::string_view name) {
  if (name.empty() || name[0] < 'a' || name[0] > 'z') return false;
  for (char c : name) {
    const bool ok =
        (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
    if (!ok) return false;
  }
  return true;
}

std::string_view TrimName(std::string_view name) {
  constexpr std::string_view kSpace = " \t\r\n\f\v";
  const size_t begin = name.find_first_not_of(kSpace);
  if (begin == std::string_view::npos) return {};
  const size_t end = name.find_last_not_of(kSpace);
  return name.substr(begin, end - begin + 1);
}

namespace {

void CheckName(std::string_view kind, const std::string& name,
               std::vector<std::string>* out) {
  if (name.empty()) {
    out->push_back(fmt::format("{} with empty name", kind));
  } else if (TrimName(name) != name) {
    out->push_back(
        fmt::format("{} name \"{}\" has surrounding whitespace", kind, name));
  }
}

}  // namespace

std::vector<std::string> Validate(const ProcessModel& model) {
  std::vector<std::string> violations;
  CheckName("graph", model.name, &violations);
  std::unordered_set<std::string> entity_names;
  std::unordered_set<std::string> task_names;
  for (const Entity& entity : model.entities) {
    CheckName("entity", entity.name, &violations);
    if (!entity_names.insert(entity.name).second) {
      violations.push_back(
          fmt::format("duplicate entity name \"{}\"", entity.name));
    }
    for (const Task& task : entity.tasks) {
      CheckName("task", task.name, &violations);
      if (!task_names.insert(task.name).second) {
        violations.push_back(
            fmt::format("duplicate task name \"{}\"", task.name));
      }
      std::unordered_set<std::string> seen;
      for (const auto& [key, value] : task.properties) {
        if (!IsPropertyName(key)) {
          violations.push_back(fmt::format(
              "task \"{}\": invalid property name \"{}\"", task.name, key));
        }
        if (!seen.insert(key).second) {
          violations.push_back(fmt::format(
              "task \"{}\": duplicate property \"{}\"", task.name, key));
        }
        if (!std::isfinite(value) || value < 0) {
          violations.push_back(fmt::format(
              "task \"{}\": property \"{}\" must be finite and >= 0", task.name,
              key));
        }
      }
    }
  }
  std::set<std::pair<std::string, std::string>> seen_flows;
  for (const ControlFlow& flow : model.flows) {
    const std::string label =
        fmt::format("flow \"{}\" -> \"{}\"", flow.source, flow.target);
    if (!task_names.contains(flow.source)) {
      violations.push_back(
          fmt::format("{}: unknown source task \"{}\"", label, flow.source));
    }
    if (!task_names.contains(flow.target)) {
      violations.push_back(
          fmt::format("{}: unknown target task \"{}\"", label, flow.target));
    }
    if (flow.source == flow.target) {
      violations.push_back(fmt::format("{}: self-loop", label));
    }
    if (!seen_flows.emplace(flow.source, flow.target).second) {
      violations.push_back(fmt::format("{}: duplicate flow", label));
    }
  }
  return violations;
}

std::optional<TaskRef> LookupTask(const ProcessModel& model,
                                  std::string_view task) {
  const std::string_view wanted = TrimName(task);
  for (const Entity& entity : model.entities) {
    for (const Task& candidate : entity.tasks) {
      if (candidate.name == wanted) return TaskRef{&entity, &candidate};
    }
  }
  return std::nullopt;
}

absl::StatusOr<ProcessModel> RemoveTaskWithSplice(const ProcessModel& model,
                                                  std::string_view task) {
  const std::string name(TrimName(task));
  if (!LookupTask(model, name).has_value()) {
    return absl::NotFoundError(fmt::format("unknown task \"{}\"", name));
  }

  ProcessModel result;
  result.name = model.name;
  result.entities.reserve(model.entities.size());
  for (const Entity& entity : model.entities) {
    Entity copy{entity.name, {}};
    for (const Task& t : entity.tasks) {
      if (t.name != name) copy.tasks.push_back(t);
    }
    result.entities.push_back(std::move(copy));
  }

  std::vector<std::string> predecessors;
  std::vector<std::string> successors;
  std::set<std::pair<std::string, std::string>> present;
  for (const ControlFlow& flow : model.flows) {
    if (flow.source == name && flow.target == name) {
      continue;
    } else if (flow.target == name) {
      predecessors.push_back(flow.source);
    } else if (flow.source == name) {
      successors.push_back(flow.target);
    } else {
      result.flows.push_back(flow);
      present.emplace(flow.source, flow.target);
    }
  }
  for (const std::string& p : predecessors) {
    for (const std::string& s : successors) {
      if (p == s) continue;
      if (present.emplace(p, s).second) result.flows.push_back({p, s});
    }
  }
  return result;
}

}  // namespace procrecon

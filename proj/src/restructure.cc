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

#include "procrecon/restructure.h"

#include <algorithm>

#include "absl/status/status.h"
#include "fmt/format.h"
#include "text_util.h"

namespace procrecon {
namespace {

std::string FoldName(std::string_view name) {
  return AsciiLower(TrimName(name));
}

Entity* FindEntity(ProcessModel* model, std::string_view name) {
  const std::string key = FoldName(name);
  for (Entity& entity : model->entities) {
    if (FoldName(entity.name) == key) return &entity;
  }
  return nullptr;
}

}  // namespace

absl::StatusOr<ProcessModel> SelectEntities(
    const ProcessModel& model,
    const std::optional<std::vector<std::string>>& esc) {
  if (!esc.has_value()) return model;
  std::set<std::string> wanted;
  for (const std::string& name : *esc) {
    const std::string key = FoldName(name);
    const bool known = std::any_of(
        model.entities.begin(), model.entities.end(),
        [&](const Entity& entity) { return FoldName(entity.name) == key; });
    if (!known) {
      return absl::NotFoundError(
          fmt::format("unknown entity \"{}\"", TrimName(name)));
    }
    wanted.insert(key);
  }

  ProcessModel result = model;
  for (const Entity& entity : model.entities) {
    if (wanted.contains(FoldName(entity.name))) continue;
    for (const Task& task : entity.tasks) {
      absl::StatusOr<ProcessModel> spliced =
          RemoveTaskWithSplice(result, task.name);
      if (!spliced.ok()) return spliced.status();
      result = *std::move(spliced);
    }
  }
  std::erase_if(result.entities, [&](const Entity& entity) {
    return !wanted.contains(FoldName(entity.name));
  });
  return result;
}

absl::StatusOr<AddedTasks> AddTasks(const ProcessModel& model,
                                    const std::vector<AugmentedTask>& aac,
                                    const AddedTaskProperties& overrides) {
  std::vector<std::string> universe;
  for (const Entity& entity : model.entities) {
    for (const Task& task : entity.tasks) {
      for (const auto& [key, value] : task.properties) {
        if (std::find(universe.begin(), universe.end(), key) ==
            universe.end()) {
          universe.push_back(key);
        }
      }
    }
  }

  AddedTasks result{model, {}};
  for (const AugmentedTask& added : aac) {
    const std::string task_name(TrimName(added.task));
    Entity* entity = FindEntity(&result.model, added.entity);
    if (entity == nullptr) {
      return absl::NotFoundError(
          fmt::format("unknown entity \"{}\"", TrimName(added.entity)));
    }
    if (task_name.empty()) {
      return absl::InvalidArgumentError("added task has an empty name");
    }
    if (LookupTask(result.model, task_name).has_value()) {
      return absl::AlreadyExistsError(
          fmt::format("task \"{}\" already exists", task_name));
    }
    Task task{task_name, {}};
    for (const std::string& key : universe)
      task.properties.emplace_back(key, 0.0);
    if (auto it = overrides.find(task_name); it != overrides.end()) {
      for (const auto& [key, value] : it->second) task.Set(key, value);
    }
    entity->tasks.push_back(std::move(task));
    result.forced.insert(task_name);
  }
  for (const auto& [name, properties] : overrides) {
    if (!result.forced.contains(name)) {
      return absl::InvalidArgumentError(fmt::format(
          "property override for \"{}\", which is not an added task", name));
    }
  }
  return result;
}

ReserveResult ReserveTasks(const ProcessModel& model,
                           const std::vector<PropertyBound>& arc) {
  ReserveResult result;
  for (const PropertyBound& rule : arc) {
    bool carried = false;
    for (const Entity& entity : model.entities) {
      for (const Task& task : entity.tasks) {
        const std::optional<double> value = task.Get(rule.property);
        if (!value.has_value()) continue;
        carried = true;
        const bool match = rule.relation == Relation::kGreater
                               ? *value > rule.value
                               : *value < rule.value;
        if (match) result.reserved.insert(task.name);
      }
    }
    if (!carried) {
      result.warnings.push_back(
          fmt::format("retained-task rule on property \"{}\" matches no task: "
                      "no task carries that property",
                      rule.property));
    }
  }
  return result;
}

}  // namespace procrecon

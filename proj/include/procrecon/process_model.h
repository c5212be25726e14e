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

// In-memory activity-flow (ACT) process model: entity swimlanes holding
// tasks with numeric properties, connected by control flows.
//
// All types are plain values. Operations never mutate their input; they
// return a new model.

#ifndef PROCRECON_PROCESS_MODEL_H_
#define PROCRECON_PROCESS_MODEL_H_

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"

namespace procrecon {

// Ordered property list. Keys are lowercase identifiers, values finite and
// non-negative. Order is significant for serialization.
using PropertyList = std::vector<std::pair<std::string, double>>;

struct Task {
  std::string name;
  PropertyList properties;

  // Returns the value of `property`, or nullopt when the task lacks it.
  std::optional<double> Get(std::string_view property) const;
  // Same, with 0 for a missing property.
  double GetOr0(std::string_view property) const;
  void Set(std::string_view property, double value);

  friend bool operator==(const Task&, const Task&) = default;
};

struct Entity {
  std::string name;
  std::vector<Task> tasks;

  friend bool operator==(const Entity&, const Entity&) = default;
};

struct ControlFlow {
  std::string source;
  std::string target;

  friend bool operator==(const ControlFlow&, const ControlFlow&) = default;
};

struct ProcessModel {
  std::string name;
  std::vector<Entity> entities;
  std::vector<ControlFlow> flows;

  // Task names in entity order, then task order.
  std::vector<std::string> TaskNames() const;
  size_t TaskCount() const;

  friend bool operator==(const ProcessModel&, const ProcessModel&) = default;
};

// True for [a-z][a-z0-9_]*.
bool IsPropertyName(std::string_view name);

// Strips surrounding ASCII whitespace.
std::string_view TrimName(std::string_view name);

// One human-readable line per violated invariant; empty iff the model is
// well formed.
std::vector<std::string> Validate(const ProcessModel& model);

struct TaskRef {
  const Entity* entity;
  const Task* task;
};

// Exact (case-sensitive) match after trimming `task`. The returned pointers
// are valid for the lifetime of `model`.
std::optional<TaskRef> LookupTask(const ProcessModel& model,
                                  std::string_view task);

// Removes `task` and reconnects every predecessor to every successor.
// Surviving flows keep their relative order; new flows are appended in
// (predecessor, successor) order of appearance, skipping self-loops and
// flows that already exist.
absl::StatusOr<ProcessModel> RemoveTaskWithSplice(const ProcessModel& model,
                                                  std::string_view task);

}  // namespace procrecon

#endif  // PROCRECON_PROCESS_MODEL_H_

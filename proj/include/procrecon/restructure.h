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

// Structural reorganization of a process model: entity selection, task
// augmentation and detection of tasks that must be retained. Applied in
// that order.

#ifndef PROCRECON_RESTRUCTURE_H_
#define PROCRECON_RESTRUCTURE_H_

#include <map>
#include <set>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "procrecon/process_model.h"
#include "procrecon/req_extract.h"

namespace procrecon {

using TaskSet = std::set<std::string>;

// Tasks excluded from optimization and fixed as kept.
struct ReservationMark {
  TaskSet reserved;  // Matched a retained-task rule.
  TaskSet forced;    // Added by an augmented-task constraint.
};

// Keeps exactly the entities named in `esc` (case-insensitive, trimmed), in
// model order; tasks of dropped entities are spliced out. A missing `esc`
// returns the model unchanged.
absl::StatusOr<ProcessModel> SelectEntities(
    const ProcessModel& model,
    const std::optional<std::vector<std::string>>& esc);

struct AddedTasks {
  ProcessModel model;
  TaskSet forced;
};

// Per-task property values for added tasks, overriding the zero default.
using AddedTaskProperties = std::map<std::string, PropertyList>;

// Appends each task to its entity (matched case-insensitively). New tasks
// carry every property present anywhere in the model, set to 0, then any
// `overrides` for that task.
absl::StatusOr<AddedTasks> AddTasks(const ProcessModel& model,
                                    const std::vector<AugmentedTask>& aac,
                                    const AddedTaskProperties& overrides = {});

struct ReserveResult {
  TaskSet reserved;
  std::vector<std::string> warnings;
};

// Union over rules of the tasks whose property strictly satisfies the rule.
// A rule naming a property that no task carries yields a warning and
// matches nothing.
ReserveResult ReserveTasks(const ProcessModel& model,
                           const std::vector<PropertyBound>& arc);

}  // namespace procrecon

#endif  // PROCRECON_RESTRUCTURE_H_

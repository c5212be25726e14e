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

// Reader and writer for the textual ACT model format:
//
//   model  := "graph" STRING "{" entity* flow* "}"
//   entity := "entity" STRING "{" task* "}"
//   task   := "task" STRING "{" prop* "}"
//   prop   := IDENT "=" NUMBER ";"
//   flow   := "flow" STRING "->" STRING ";"
//
// STRING is double-quoted with \" and \\ as the only escapes. IDENT is
// [a-z][a-z0-9_]*. NUMBER is [0-9]+("."[0-9]+)?. "#" starts a comment that
// runs to end of line.

#ifndef PROCRECON_MODEL_IO_H_
#define PROCRECON_MODEL_IO_H_

#include <string>
#include <string_view>

#include "absl/status/statusor.h"
#include "procrecon/process_model.h"

namespace procrecon {

struct ParseDiagnostic {
  int line = 1;    // 1-based
  int column = 1;  // 1-based, in code points
  std::string message;

  std::string ToString() const;  // "line:column: message"
};

// Parses `text` into a model satisfying every Validate() invariant. On
// failure the status message is the diagnostic's ToString(); when
// `diagnostic` is non-null it also receives the structured position.
absl::StatusOr<ProcessModel> ParseModel(std::string_view text,
                                        ParseDiagnostic* diagnostic = nullptr);

// Canonical text: two-space indentation, one declaration per line, trailing
// newline. Fails with the list of violations when the model is invalid.
absl::StatusOr<std::string> SerializeModel(const ProcessModel& model);

}  // namespace procrecon

#endif  // PROCRECON_MODEL_IO_H_

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

#ifndef PROCRECON_CLI_H_
#define PROCRECON_CLI_H_

#include <ostream>

namespace procrecon {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsage = 2;

// Subcommands:
//   reconstruct --model <in.act> --requirements <req.txt> --out <out.act>
//               --report <report.json> [--dict <dict.tsv>]
//               [--added-props <props.tsv>]
//   extract --requirements <req.txt> [--dict <dict.tsv>]
//   solve --problem <problem.json>
//   validate --model <in.act>
//
// Documents go to `out`, diagnostics to `err`.
int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err);

}  // namespace procrecon

#endif  // PROCRECON_CLI_H_

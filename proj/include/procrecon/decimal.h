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

#ifndef PROCRECON_DECIMAL_H_
#define PROCRECON_DECIMAL_H_

#include <optional>
#include <string>
#include <string_view>

namespace procrecon {

// Shortest plain-decimal text ([0-9]+(.[0-9]+)?) that parses back to exactly
// `value`. `value` must be finite and >= 0.
std::string FormatDecimal(double value);

// Parses [0-9]+(.[0-9]+)? into a finite double; nullopt otherwise.
std::optional<double> ParseDecimal(std::string_view text);

}  // namespace procrecon

#endif  // PROCRECON_DECIMAL_H_

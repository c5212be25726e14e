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

// Dense two-phase primal simplex for
//
//   maximize c.x  subject to  A x (<= | >=) b,  0 <= x <= 1.
//
// Box bounds are handled implicitly (nonbasic variables sit at either
// bound), so the tableau only carries the general rows. Pivoting uses
// Bland's rule, which keeps the method finite on degenerate problems and
// makes the result a deterministic function of the input.

#ifndef PROCRECON_BOUNDED_SIMPLEX_H_
#define PROCRECON_BOUNDED_SIMPLEX_H_

#include <span>
#include <vector>

namespace procrecon {

enum class RowRelation { kLessEqual, kGreaterEqual };

struct BoxLpRow {
  std::vector<double> coefficients;
  RowRelation relation = RowRelation::kLessEqual;
  double rhs = 0;
};

struct BoxLpResult {
  bool feasible = false;
  double objective = 0;
  std::vector<double> x;  // Primal solution when feasible.
  int iterations = 0;
};

BoxLpResult MaximizeOverUnitBox(std::span<const double> objective,
                                std::span<const BoxLpRow> rows);

}  // namespace procrecon

#endif  // PROCRECON_BOUNDED_SIMPLEX_H_

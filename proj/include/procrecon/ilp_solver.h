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

// 0/1 task-selection program over a process model and its exact solvers.
//
// Each optimizable task i gets a binary x_i (1 = keep). The objective sums
// one property over kept tasks; every constraint row bounds the sum of a
// property over kept tasks. Retained and added tasks are fixed to 1 and
// folded into constants.
//
// Tie-breaking contract, shared by BranchAndBound and BruteForce: among
// optimal assignments, the lexicographically greatest one in variable order
// with 1 > 0 is returned (earlier tasks are preferentially kept).

#ifndef PROCRECON_ILP_SOLVER_H_
#define PROCRECON_ILP_SOLVER_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"
#include "procrecon/bounded_simplex.h"
#include "procrecon/process_model.h"
#include "procrecon/req_extract.h"
#include "procrecon/restructure.h"

namespace procrecon {

// Absolute slack allowed when checking a row.
inline constexpr double kFeasibilityTolerance = 1e-6;
// Distance from 0/1 below which a relaxation value counts as integral.
inline constexpr double kIntegralityTolerance = 1e-6;

struct LinearRow {
  std::vector<double> coefficients;
  RowRelation relation = RowRelation::kLessEqual;
  double bound = 0;

  friend bool operator==(const LinearRow&, const LinearRow&) = default;
};

struct IlpProblem {
  std::vector<std::string> variables;
  Direction direction = Direction::kMax;
  std::vector<double> objective;
  double fixed_contribution = 0;
  std::vector<LinearRow> rows;  // Bounds already net of fixed tasks.
  std::vector<std::pair<std::string, int>> fixed;
  // Set by BuildProblem when a <= row is violated by the fixed tasks alone.
  bool trivially_infeasible = false;

  int size() const { return static_cast<int>(variables.size()); }
  friend bool operator==(const IlpProblem&, const IlpProblem&) = default;
};

// Empty when all IlpProblem invariants hold.
std::vector<std::string> CheckProblem(const IlpProblem& problem);

// Variables: model tasks (model order) not in reserved or forced. The
// objective coefficient of a task is its objective-property value (0 when
// absent). A "less" constraint becomes a <= row, "greater" a >= row.
absl::StatusOr<IlpProblem> BuildProblem(const ProcessModel& model,
                                        const std::optional<Objective>& tfc,
                                        const std::vector<PropertyBound>& cc,
                                        const TaskSet& reserved,
                                        const TaskSet& forced);

enum class SolveStatus { kOptimal, kInfeasible };

std::string_view SolveStatusName(SolveStatus status);

struct SolverStats {
  int64_t nodes_explored = 0;
  std::optional<double> best_bound;  // Absent when infeasible.
  friend bool operator==(const SolverStats&, const SolverStats&) = default;
};

struct Solution {
  SolveStatus status = SolveStatus::kInfeasible;
  std::vector<int> assignment;  // One 0/1 per variable; empty if infeasible.
  std::vector<std::pair<std::string, int>> fixed;
  double objective_value = 0;  // Includes fixed_contribution.
  SolverStats stats;
  friend bool operator==(const Solution&, const Solution&) = default;
};

// Per-variable partial assignment: 0, 1, or kUnassigned.
inline constexpr int8_t kUnassigned = -1;
using PartialAssignment = std::vector<int8_t>;

bool IsFeasible(const IlpProblem& problem, std::span<const int> assignment);

// Objective of a full assignment, including the fixed contribution.
double EvaluateObjective(const IlpProblem& problem,
                         std::span<const int> assignment);

// Optimum of the linear relaxation with the free variables of `partial` in
// [0, 1], plus the assigned and fixed contributions: an upper bound on every
// feasible completion when maximizing, a lower bound when minimizing.
// nullopt means the relaxation is infeasible and the subtree can be pruned.
std::optional<double> RelaxationBound(const IlpProblem& problem,
                                      const PartialAssignment& partial);

// Best-first branch-and-bound on the relaxation bound. Branches on the most
// fractional free variable (lowest index on ties), x = 1 child first.
// Deterministic: equal problems give equal solutions and statistics.
Solution BranchAndBound(const IlpProblem& problem);

inline constexpr int kBruteForceMaxVariables = 25;

// Exhaustive enumeration with the same tie-breaking rule as BranchAndBound.
absl::StatusOr<Solution> BruteForce(const IlpProblem& problem);

}  // namespace procrecon

#endif  // PROCRECON_ILP_SOLVER_H_

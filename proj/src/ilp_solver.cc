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

#include "procrecon/ilp_solver.h"

#include <algorithm>
#include <cmath>
#include <queue>
#include <set>

#include "absl/status/status.h"
#include "fmt/format.h"

namespace procrecon {

std::string_view SolveStatusName(SolveStatus status) {
  return status == SolveStatus::kOptimal ? "optimal" : "infeasible";
}

std::vector<std::string> CheckProblem(const IlpProblem& problem) {
  std::vector<std::string> errors;
  const size_t n = problem.variables.size();
  if (problem.objective.size() != n) {
    errors.push_back(
        fmt::format("objective has {} coefficients for {} variables",
                    problem.objective.size(), n));
  }
  for (double c : problem.objective) {
    if (!std::isfinite(c)) {
      errors.push_back("objective coefficient is not finite");
      break;
    }
  }
  if (!std::isfinite(problem.fixed_contribution)) {
    errors.push_back("fixed contribution is not finite");
  }
  for (size_t r = 0; r < problem.rows.size(); ++r) {
    const LinearRow& row = problem.rows[r];
    if (row.coefficients.size() != n) {
      errors.push_back(
          fmt::format("row {} has {} coefficients for {} variables", r,
                      row.coefficients.size(), n));
    }
    const bool finite =
        std::isfinite(row.bound) &&
        std::all_of(row.coefficients.begin(), row.coefficients.end(),
                    [](double a) { return std::isfinite(a); });
    if (!finite) errors.push_back(fmt::format("row {} is not finite", r));
  }
  std::set<std::string> names(problem.variables.begin(),
                              problem.variables.end());
  if (names.size() != n) errors.push_back("duplicate variable name");
  for (const auto& [name, value] : problem.fixed) {
    if (names.contains(name)) {
      errors.push_back(fmt::format("variable \"{}\" is also fixed", name));
    }
    if (value != 0 && value != 1) {
      errors.push_back(
          fmt::format("fixed value of \"{}\" must be 0 or 1", name));
    }
  }
  return errors;
}

absl::StatusOr<IlpProblem> BuildProblem(const ProcessModel& model,
                                        const std::optional<Objective>& tfc,
                                        const std::vector<PropertyBound>& cc,
                                        const TaskSet& reserved,
                                        const TaskSet& forced) {
  if (!tfc.has_value()) {
    return absl::FailedPreconditionError("no objective");
  }
  for (const TaskSet* set : {&reserved, &forced}) {
    for (const std::string& name : *set) {
      if (!LookupTask(model, name).has_value()) {
        return absl::NotFoundError(
            fmt::format("fixed task \"{}\" is not in the model", name));
      }
    }
  }

  IlpProblem problem;
  problem.direction = tfc->direction;
  problem.rows.resize(cc.size());
  for (size_t r = 0; r < cc.size(); ++r) {
    problem.rows[r].relation = cc[r].relation == Relation::kLess
                                   ? RowRelation::kLessEqual
                                   : RowRelation::kGreaterEqual;
    problem.rows[r].bound = cc[r].value;
  }
  for (const Entity& entity : model.entities) {
    for (const Task& task : entity.tasks) {
      const bool is_fixed =
          reserved.contains(task.name) || forced.contains(task.name);
      if (is_fixed) {
        problem.fixed.emplace_back(task.name, 1);
        problem.fixed_contribution += task.GetOr0(tfc->property);
        for (size_t r = 0; r < cc.size(); ++r) {
          problem.rows[r].bound -= task.GetOr0(cc[r].property);
        }
        continue;
      }
      problem.variables.push_back(task.name);
      problem.objective.push_back(task.GetOr0(tfc->property));
      for (size_t r = 0; r < cc.size(); ++r) {
        problem.rows[r].coefficients.push_back(task.GetOr0(cc[r].property));
      }
    }
  }
  // Property values are non-negative, so a <= row whose bound the fixed
  // tasks already exceed cannot be repaired by dropping variables.
  for (const LinearRow& row : problem.rows) {
    if (row.relation == RowRelation::kLessEqual &&
        row.bound < -kFeasibilityTolerance) {
      problem.trivially_infeasible = true;
    }
  }
  return problem;
}

bool IsFeasible(const IlpProblem& problem, std::span<const int> assignment) {
  for (const LinearRow& row : problem.rows) {
    double lhs = 0;
    for (size_t i = 0; i < assignment.size(); ++i) {
      if (assignment[i] != 0) lhs += row.coefficients[i];
    }
    if (row.relation == RowRelation::kLessEqual
            ? lhs > row.bound + kFeasibilityTolerance
            : lhs < row.bound - kFeasibilityTolerance) {
      return false;
    }
  }
  return true;
}

double EvaluateObjective(const IlpProblem& problem,
                         std::span<const int> assignment) {
  double value = 0;
  for (size_t i = 0; i < assignment.size(); ++i) {
    if (assignment[i] != 0) value += problem.objective[i];
  }
  return value + problem.fixed_contribution;
}

namespace {

// Solvers internally maximize sign * objective.
double Sign(const IlpProblem& problem) {
  return problem.direction == Direction::kMax ? 1.0 : -1.0;
}

struct Relaxation {
  double bound;           // Internal sense, excludes fixed_contribution.
  std::vector<double> x;  // Assigned values plus relaxation values.
};

std::optional<Relaxation> Relax(const IlpProblem& problem,
                                const PartialAssignment& partial) {
  const double sign = Sign(problem);
  const int n = problem.size();
  std::vector<int> free;
  double assigned_value = 0;
  for (int i = 0; i < n; ++i) {
    if (partial[i] == kUnassigned) {
      free.push_back(i);
    } else if (partial[i] == 1) {
      assigned_value += sign * problem.objective[i];
    }
  }

  std::vector<BoxLpRow> rows;
  rows.reserve(problem.rows.size());
  for (const LinearRow& row : problem.rows) {
    BoxLpRow lp_row;
    lp_row.relation = row.relation;
    lp_row.rhs = row.bound;
    for (int i = 0; i < n; ++i) {
      if (partial[i] == 1) lp_row.rhs -= row.coefficients[i];
    }
    for (int i : free) lp_row.coefficients.push_back(row.coefficients[i]);
    rows.push_back(std::move(lp_row));
  }

  Relaxation out;
  out.x.assign(n, 0.0);
  for (int i = 0; i < n; ++i) {
    if (partial[i] == 1) out.x[i] = 1.0;
  }

  if (free.empty()) {
    // Exact check; the relaxation is a single point.
    std::vector<int> point(partial.begin(), partial.end());
    if (!IsFeasible(problem, point)) return std::nullopt;
    out.bound = assigned_value;
    return out;
  }

  std::vector<double> objective;
  objective.reserve(free.size());
  for (int i : free) objective.push_back(sign * problem.objective[i]);
  const BoxLpResult lp = MaximizeOverUnitBox(objective, rows);
  if (!lp.feasible) return std::nullopt;
  for (size_t k = 0; k < free.size(); ++k) out.x[free[k]] = lp.x[k];
  out.bound = assigned_value + lp.objective;
  return out;
}

// Relative tolerance for comparing objective values.
double ObjectiveTolerance(double reference) {
  return 1e-9 * std::max(1.0, std::abs(reference));
}

// True when `a` is preferred over `b` under 1 > 0 lexicographic order.
bool LexPreferred(std::span<const int> a, std::span<const int> b) {
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

Solution MakeInfeasible(const IlpProblem& problem, int64_t nodes) {
  Solution solution;
  solution.status = SolveStatus::kInfeasible;
  solution.fixed = problem.fixed;
  solution.stats.nodes_explored = nodes;
  return solution;
}

Solution MakeOptimal(const IlpProblem& problem, std::vector<int> assignment,
                     int64_t nodes) {
  Solution solution;
  solution.status = SolveStatus::kOptimal;
  solution.objective_value = EvaluateObjective(problem, assignment);
  solution.assignment = std::move(assignment);
  solution.fixed = problem.fixed;
  solution.stats.nodes_explored = nodes;
  solution.stats.best_bound = solution.objective_value;
  return solution;
}

class BranchAndBoundSearch {
 public:
  explicit BranchAndBoundSearch(const IlpProblem& problem)
      : problem_(problem), sign_(Sign(problem)) {
    integral_objective_ = std::all_of(
        problem.objective.begin(), problem.objective.end(),
        [](double c) { return std::abs(c) < 1e12 && c == std::floor(c); });
  }

  Solution Run() {
    const int n = problem_.size();
    if (problem_.trivially_infeasible) {
      return MakeInfeasible(problem_, 0);
    }
    PartialAssignment root(n, kUnassigned);
    std::optional<Relaxation> relaxation = Relax(problem_, root);
    if (!relaxation.has_value()) return MakeInfeasible(problem_, 1);
    Push(std::move(root), *std::move(relaxation));

    int64_t explored = 0;
    while (!open_.empty()) {
      Node node = open_.top();
      open_.pop();
      ++explored;
      if (Prunable(node.bound, node.partial)) continue;

      // Rounded relaxation point, when it is integral.
      std::vector<int> rounded(n);
      bool integral = true;
      for (int i = 0; i < n; ++i) {
        const double v = node.x[i];
        rounded[i] = v >= 0.5 ? 1 : 0;
        if (std::abs(v - rounded[i]) > kIntegralityTolerance) integral = false;
      }
      const bool candidate = integral && IsFeasible(problem_, rounded);
      if (candidate) Offer(rounded);
      if (Prunable(node.bound, node.partial)) continue;

      const int branch = ChooseBranchVariable(node, rounded, candidate);
      if (branch < 0) continue;
      for (int8_t value : {int8_t{1}, int8_t{0}}) {
        PartialAssignment child = node.partial;
        child[branch] = value;
        std::optional<Relaxation> child_relaxation = Relax(problem_, child);
        if (!child_relaxation.has_value()) continue;
        if (Prunable(child_relaxation->bound, child)) continue;
        Push(std::move(child), *std::move(child_relaxation));
      }
    }
    if (!incumbent_.has_value()) return MakeInfeasible(problem_, explored);
    return MakeOptimal(problem_, *incumbent_, explored);
  }

 private:
  struct Node {
    double bound;
    int64_t sequence;
    PartialAssignment partial;
    std::vector<double> x;
  };
  struct NodeOrder {
    // Highest bound first; earliest-created node on ties.
    bool operator()(const Node& a, const Node& b) const {
      if (a.bound != b.bound) return a.bound < b.bound;
      return a.sequence > b.sequence;
    }
  };

  void Push(PartialAssignment partial, Relaxation relaxation) {
    open_.push(Node{relaxation.bound, next_sequence_++, std::move(partial),
                    std::move(relaxation.x)});
  }

  double InternalValue(std::span<const int> assignment) const {
    double value = 0;
    for (size_t i = 0; i < assignment.size(); ++i) {
      if (assignment[i] != 0) value += sign_ * problem_.objective[i];
    }
    return value;
  }

  void Offer(const std::vector<int>& assignment) {
    const double value = InternalValue(assignment);
    if (incumbent_.has_value()) {
      const double tolerance = ObjectiveTolerance(incumbent_value_);
      if (value < incumbent_value_ - tolerance) return;
      if (value <= incumbent_value_ + tolerance &&
          !LexPreferred(assignment, *incumbent_)) {
        return;
      }
    }
    incumbent_ = assignment;
    incumbent_value_ = value;
  }

  // A subtree can be discarded when its bound is worse than the incumbent,
  // or ties it and holds no assignment preferred by the tie-break rule.
  bool Prunable(double bound, const PartialAssignment& partial) const {
    if (!incumbent_.has_value()) return false;
    double effective = bound;
    if (integral_objective_) effective = std::floor(bound + 1e-6);
    const double tolerance = ObjectiveTolerance(incumbent_value_);
    if (effective < incumbent_value_ - tolerance) return true;
    if (effective > incumbent_value_ + tolerance) return false;
    // The most preferred member of the subtree sets every free variable.
    std::vector<int> best(partial.size());
    for (size_t i = 0; i < partial.size(); ++i) {
      best[i] = partial[i] == kUnassigned ? 1 : partial[i];
    }
    return !LexPreferred(best, *incumbent_);
  }

  int ChooseBranchVariable(const Node& node, const std::vector<int>& rounded,
                           bool candidate) const {
    int branch = -1;
    double best_distance = 0;
    for (int i = 0; i < problem_.size(); ++i) {
      if (node.partial[i] != kUnassigned) continue;
      const double v = node.x[i];
      const double distance = std::min(v, 1.0 - v);
      if (distance > kIntegralityTolerance && distance > best_distance) {
        best_distance = distance;
        branch = i;
      }
    }
    if (branch >= 0) return branch;
    // Integral relaxation point. Split on the first free variable it sets to
    // 0, since only such subtrees can hold a preferred tie.
    for (int i = 0; i < problem_.size(); ++i) {
      if (node.partial[i] != kUnassigned) continue;
      if (!candidate || rounded[i] == 0) return i;
    }
    return -1;
  }

  const IlpProblem& problem_;
  const double sign_;
  bool integral_objective_ = false;
  std::priority_queue<Node, std::vector<Node>, NodeOrder> open_;
  int64_t next_sequence_ = 0;
  std::optional<std::vector<int>> incumbent_;
  double incumbent_value_ = 0;
};

}  // namespace

std::optional<double> RelaxationBound(const IlpProblem& problem,
                                      const PartialAssignment& partial) {
  std::optional<Relaxation> relaxation = Relax(problem, partial);
  if (!relaxation.has_value()) return std::nullopt;
  return Sign(problem) * relaxation->bound + problem.fixed_contribution;
}

Solution BranchAndBound(const IlpProblem& problem) {
  return BranchAndBoundSearch(problem).Run();
}

absl::StatusOr<Solution> BruteForce(const IlpProblem& problem) {
  const int n = problem.size();
  if (n > kBruteForceMaxVariables) {
    return absl::InvalidArgumentError(
        fmt::format("brute force supports at most {} variables, got {}",
                    kBruteForceMaxVariables, n));
  }
  const double sign = Sign(problem);
  std::optional<std::vector<int>> best;
  double best_value = 0;
  std::vector<int> assignment(n);
  int64_t enumerated = 0;
  // Masks count down so assignments arrive in preferred order; only a
  // strictly better objective replaces the incumbent.
  for (uint64_t mask = (uint64_t{1} << n); mask-- > 0;) {
    ++enumerated;
    for (int i = 0; i < n; ++i) assignment[i] = (mask >> (n - 1 - i)) & 1;
    if (!IsFeasible(problem, assignment)) continue;
    double value = 0;
    for (int i = 0; i < n; ++i) {
      if (assignment[i] != 0) value += sign * problem.objective[i];
    }
    if (!best.has_value() ||
        value > best_value + ObjectiveTolerance(best_value)) {
      best = assignment;
      best_value = value;
    }
  }
  if (!best.has_value()) return MakeInfeasible(problem, enumerated);
  return MakeOptimal(problem, *best, enumerated);
}

}  // namespace procrecon

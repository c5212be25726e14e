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

#include "procrecon/bounded_simplex.h"

#include <algorithm>
#include <cmath>
#include <limits>

namespace procrecon {
namespace {

constexpr double kInfinity = std::numeric_limits<double>::infinity();
constexpr double kCostTolerance = 1e-9;
constexpr double kPivotTolerance = 1e-9;
constexpr double kRatioTieTolerance = 1e-12;
constexpr int kMaxIterations = 100000;

// Column layout: [structural | slack | artificial]. Row i reads
//   a_i . x + sign_i * slack_i + art_sign_i * art_i = rhs_i.
class Tableau {
 public:
  Tableau(std::span<const BoxLpRow> rows, int num_structural)
      : m_(static_cast<int>(rows.size())),
        n_(num_structural),
        columns_(n_ + 2 * m_),
        table_(m_, std::vector<double>(columns_, 0.0)),
        basis_(m_),
        value_(m_),
        lower_(columns_, 0.0),
        upper_(columns_, kInfinity),
        at_upper_(columns_, false),
        is_basic_(columns_, false) {
    for (int j = 0; j < n_; ++j) upper_[j] = 1.0;
    for (int i = 0; i < m_; ++i) {
      const BoxLpRow& row = rows[i];
      const double slack_sign =
          row.relation == RowRelation::kLessEqual ? 1.0 : -1.0;
      const double residual = row.rhs;
      int basic = 0;
      double diag = 0;
      if (slack_sign * residual >= 0) {
        basic = n_ + i;
        diag = slack_sign;
        upper_[n_ + m_ + i] = 0.0;  // Unused artificial.
      } else {
        basic = n_ + m_ + i;
        diag = residual > 0 ? 1.0 : -1.0;
      }
      // B is diagonal with +-1 entries, so B^-1 A just rescales the row.
      for (int j = 0; j < n_; ++j) {
        table_[i][j] = diag * row.coefficients[j];
      }
      table_[i][n_ + i] = diag * slack_sign;
      table_[i][n_ + m_ + i] = basic >= n_ + m_ ? 1.0 : 0.0;
      basis_[i] = basic;
      is_basic_[basic] = true;
      value_[i] = diag * residual;
    }
  }

  // Runs primal simplex iterations for `cost` until optimal. Returns false
  // when the objective is unbounded or the iteration cap is hit.
  bool Optimize(const std::vector<double>& cost, int* iterations) {
    std::vector<double> reduced(columns_);
    for (; *iterations < kMaxIterations; ++*iterations) {
      int entering = -1;
      for (int j = 0; j < columns_ && entering < 0; ++j) {
        if (is_basic_[j] || upper_[j] <= lower_[j]) continue;
        double d = cost[j];
        for (int i = 0; i < m_; ++i) d -= cost[basis_[i]] * table_[i][j];
        if ((!at_upper_[j] && d > kCostTolerance) ||
            (at_upper_[j] && d < -kCostTolerance)) {
          entering = j;
        }
      }
      if (entering < 0) return true;

      const double direction = at_upper_[entering] ? -1.0 : 1.0;
      double step = upper_[entering] - lower_[entering];
      int leaving_row = -1;
      for (int i = 0; i < m_; ++i) {
        const double alpha = direction * table_[i][entering];
        const int k = basis_[i];
        double limit;
        if (alpha > kPivotTolerance) {
          limit = (value_[i] - lower_[k]) / alpha;
        } else if (alpha < -kPivotTolerance && upper_[k] < kInfinity) {
          limit = (upper_[k] - value_[i]) / -alpha;
        } else {
          continue;
        }
        limit = std::max(limit, 0.0);
        if (limit < step - kRatioTieTolerance) {
          step = limit;
          leaving_row = i;
        } else if (leaving_row >= 0 &&
                   std::abs(limit - step) <= kRatioTieTolerance &&
                   k < basis_[leaving_row]) {
          leaving_row = i;
        }
      }
      if (step == kInfinity) return false;

      for (int i = 0; i < m_; ++i) {
        value_[i] -= step * direction * table_[i][entering];
      }
      const double entering_value = at_upper_[entering]
                                        ? upper_[entering] - step
                                        : lower_[entering] + step;
      if (leaving_row < 0) {
        at_upper_[entering] = !at_upper_[entering];
        continue;
      }
      const int leaving = basis_[leaving_row];
      at_upper_[leaving] = direction * table_[leaving_row][entering] < 0;
      Pivot(leaving_row, entering);
      value_[leaving_row] = entering_value;
    }
    return false;
  }

  // Pivots basic artificials (at value zero after phase one) out of the
  // basis where possible, then pins every artificial to zero.
  void RetireArtificials() {
    for (int i = 0; i < m_; ++i) {
      if (basis_[i] < n_ + m_) continue;
      for (int j = 0; j < n_ + m_; ++j) {
        if (is_basic_[j] || std::abs(table_[i][j]) <= kPivotTolerance) {
          continue;
        }
        const double entering_value = at_upper_[j] ? upper_[j] : lower_[j];
        at_upper_[basis_[i]] = false;
        Pivot(i, j);
        value_[i] = entering_value;
        break;
      }
    }
    for (int j = n_ + m_; j < columns_; ++j) upper_[j] = 0.0;
  }

  double ArtificialSum() const {
    double sum = 0;
    for (int i = 0; i < m_; ++i) {
      if (basis_[i] >= n_ + m_) sum += value_[i];
    }
    return sum;
  }

  std::vector<double> Structural() const {
    std::vector<double> x(n_);
    for (int j = 0; j < n_; ++j) x[j] = at_upper_[j] ? upper_[j] : lower_[j];
    for (int i = 0; i < m_; ++i) {
      if (basis_[i] < n_) x[basis_[i]] = std::clamp(value_[i], 0.0, 1.0);
    }
    return x;
  }

  int columns() const { return columns_; }
  int first_artificial() const { return n_ + m_; }

 private:
  void Pivot(int row, int column) {
    std::vector<double>& pivot_row = table_[row];
    const double pivot = pivot_row[column];
    for (double& entry : pivot_row) entry /= pivot;
    for (int i = 0; i < m_; ++i) {
      if (i == row) continue;
      const double factor = table_[i][column];
      if (factor == 0.0) continue;
      for (int j = 0; j < columns_; ++j) {
        table_[i][j] -= factor * pivot_row[j];
      }
    }
    is_basic_[basis_[row]] = false;
    basis_[row] = column;
    is_basic_[column] = true;
  }

  int m_;
  int n_;
  int columns_;
  std::vector<std::vector<double>> table_;
  std::vector<int> basis_;
  std::vector<double> value_;  // Values of basic variables, by row.
  std::vector<double> lower_;
  std::vector<double> upper_;
  std::vector<bool> at_upper_;
  std::vector<bool> is_basic_;
};

}  // namespace

BoxLpResult MaximizeOverUnitBox(std::span<const double> objective,
                                std::span<const BoxLpRow> rows) {
  const int n = static_cast<int>(objective.size());
  Tableau tableau(rows, n);
  BoxLpResult result;

  double rhs_scale = 1.0;
  for (const BoxLpRow& row : rows) {
    rhs_scale = std::max(rhs_scale, std::abs(row.rhs));
    for (double a : row.coefficients)
      rhs_scale = std::max(rhs_scale, std::abs(a));
  }

  std::vector<double> cost(tableau.columns(), 0.0);
  for (int j = tableau.first_artificial(); j < tableau.columns(); ++j) {
    cost[j] = -1.0;
  }
  if (!tableau.Optimize(cost, &result.iterations)) return result;
  if (tableau.ArtificialSum() > 1e-9 * rhs_scale) return result;
  tableau.RetireArtificials();

  std::fill(cost.begin(), cost.end(), 0.0);
  std::copy(objective.begin(), objective.end(), cost.begin());
  if (!tableau.Optimize(cost, &result.iterations)) return result;

  result.feasible = true;
  result.x = tableau.Structural();
  for (int j = 0; j < n; ++j) result.objective += objective[j] * result.x[j];
  return result;
}

}  // namespace procrecon

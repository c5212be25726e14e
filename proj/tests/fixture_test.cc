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

// The committed case-study fixtures, checked against their generators and
// against an exact dynamic program that shares no code with the solver.

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "procrecon/model_io.h"
#include "procrecon/pipeline.h"
#include "testing.h"

namespace procrecon {
namespace {

std::string ReadData(const std::string& name) {
  std::ifstream in(std::string(PROCRECON_TEST_DATA_DIR) + "/" + name,
                   std::ios::binary);
  std::ostringstream contents;
  contents << in.rdbuf();
  return contents.str();
}

TEST(FixtureTest, CommittedFilesMatchGenerators) {
  EXPECT_EQ(ReadData("case_study.act"), testing::CaseStudyModelText());
  EXPECT_EQ(ReadData("case_study_requirements.txt"),
            testing::CaseStudyRequirementsText());
  EXPECT_EQ(ReadData("over_budget.act"), testing::InfeasibleModelText());
  EXPECT_EQ(ReadData("over_budget_requirements.txt"),
            testing::InfeasibleRequirementsText());
}

TEST(FixtureTest, CaseStudyShape) {
  auto model = ParseModel(testing::CaseStudyModelText());
  ASSERT_TRUE(model.ok()) << model.status();
  EXPECT_TRUE(Validate(*model).empty());
  ASSERT_EQ(model->entities.size(), 5u);
  EXPECT_EQ(model->TaskCount(), 49u);
  for (const Entity& entity : model->entities) {
    for (const Task& task : entity.tasks) {
      for (const char* key : {"time", "cost", "importance"}) {
        ASSERT_TRUE(task.Get(key).has_value()) << task.name << " " << key;
      }
    }
  }
}

// Best importance over the optimizable tasks, by a dense table indexed by
// time used and importance gained that stores the least cost reaching it.
struct Item {
  int time;
  int cost;  // In thousands.
  int importance;
};

int BestImportance(const std::vector<Item>& items, int time_budget,
                   int cost_budget) {
  int importance_cap = 0;
  for (const Item& item : items) importance_cap += item.importance;
  constexpr int kNone = std::numeric_limits<int>::max();
  const size_t width = importance_cap + 1;
  std::vector<int> least(static_cast<size_t>(time_budget + 1) * width, kNone);
  least[0] = 0;
  for (const Item& item : items) {
    for (int t = time_budget; t >= item.time; --t) {
      for (int v = importance_cap; v >= item.importance; --v) {
        const int from = least[(t - item.time) * width + v - item.importance];
        if (from == kNone) continue;
        int& to = least[t * width + v];
        to = std::min(to, from + item.cost);
      }
    }
  }
  int best = -1;
  for (int t = 0; t <= time_budget; ++t) {
    for (int v = 0; v <= importance_cap; ++v) {
      if (least[t * width + v] <= cost_budget) best = std::max(best, v);
    }
  }
  return best;
}

TEST(FixtureTest, CaseStudyOptimumMatchesDynamicProgram) {
  auto model = ParseModel(testing::CaseStudyModelText());
  ASSERT_TRUE(model.ok());
  double reserved_time = 0, reserved_cost = 0, reserved_importance = 0;
  std::vector<Item> items;
  for (const Entity& entity : model->entities) {
    for (const Task& task : entity.tasks) {
      const double time = task.GetOr0("time");
      const double cost = task.GetOr0("cost") / 1000;
      const double importance = task.GetOr0("importance");
      ASSERT_EQ(time, std::floor(time));
      ASSERT_EQ(cost, std::floor(cost));
      ASSERT_EQ(importance, std::floor(importance));
      if (importance > 90) {
        reserved_time += time;
        reserved_cost += cost;
        reserved_importance += importance;
      } else {
        items.push_back({static_cast<int>(time), static_cast<int>(cost),
                         static_cast<int>(importance)});
      }
    }
  }
  const int time_budget = 2500 - static_cast<int>(reserved_time);
  const int cost_budget = 15000 - static_cast<int>(reserved_cost);
  ASSERT_GE(time_budget, 0);
  ASSERT_GE(cost_budget, 0);
  const double expected =
      reserved_importance + BestImportance(items, time_budget, cost_budget);

  auto result = Reconstruct(testing::CaseStudyModelText(),
                            testing::CaseStudyRequirementsText());
  ASSERT_TRUE(result.ok()) << result.status();
  ASSERT_EQ(result->report.status, "optimal");
  ASSERT_TRUE(result->report.objective.has_value());
  EXPECT_EQ(result->report.objective->value, expected);
  EXPECT_EQ(expected, 2553);
  ASSERT_TRUE(result->report.best_bound.has_value());
  EXPECT_NEAR(*result->report.best_bound, expected, 1e-6);
}

TEST(FixtureTest, CaseStudyOutputSatisfiesRequirements) {
  auto input = ParseModel(testing::CaseStudyModelText());
  ASSERT_TRUE(input.ok());
  auto result = Reconstruct(testing::CaseStudyModelText(),
                            testing::CaseStudyRequirementsText());
  ASSERT_TRUE(result.ok()) << result.status();
  ASSERT_TRUE(result->model_text.has_value());
  auto output = ParseModel(*result->model_text);
  ASSERT_TRUE(output.ok()) << output.status();
  EXPECT_TRUE(Validate(*output).empty());
  EXPECT_EQ(*SerializeModel(*output), *result->model_text);

  double time = 0, cost = 0;
  for (const Entity& entity : output->entities) {
    for (const Task& task : entity.tasks) {
      time += task.GetOr0("time");
      cost += task.GetOr0("cost");
    }
  }
  EXPECT_LE(time, 2500 + 1e-6);
  EXPECT_LE(cost, 15000000 + 1e-6);
  for (const Entity& entity : input->entities) {
    for (const Task& task : entity.tasks) {
      if (task.GetOr0("importance") > 90) {
        EXPECT_TRUE(LookupTask(*output, task.name).has_value()) << task.name;
      }
    }
  }
  auto rfi = LookupTask(
      *output,
      "Airborne Maintenance and Health Management System RFI Response");
  ASSERT_TRUE(rfi.has_value());
  EXPECT_EQ(rfi->entity->name, "Supplier");
  ASSERT_EQ(result->report.constraint_rows.size(), 2u);
  EXPECT_EQ(result->report.constraint_rows[0].achieved_total, time);
  EXPECT_EQ(result->report.constraint_rows[1].achieved_total, cost);
}

TEST(FixtureTest, OverBudgetIsInfeasible) {
  auto result = Reconstruct(testing::InfeasibleModelText(),
                            testing::InfeasibleRequirementsText());
  ASSERT_TRUE(result.ok()) << result.status();
  EXPECT_EQ(result->report.status, "infeasible");
  EXPECT_FALSE(result->model_text.has_value());
  EXPECT_EQ(result->report.reserved,
            (std::vector<std::string>{"Alpha", "Beta"}));
}

}  // namespace
}  // namespace procrecon

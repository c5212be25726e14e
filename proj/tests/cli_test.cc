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

#include "procrecon/cli.h"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "procrecon/json_io.h"
#include "procrecon/model_io.h"

namespace procrecon {
namespace {

namespace fs = std::filesystem;
using ::testing::HasSubstr;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ =
        fs::path(::testing::TempDir()) /
        ("cli_" +
         std::string(
             ::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }

  std::string Path(const std::string& name) const {
    return (dir_ / name).string();
  }

  std::string Write(const std::string& name, std::string_view text) const {
    std::ofstream(Path(name), std::ios::binary) << text;
    return Path(name);
  }

  static std::string Slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream contents;
    contents << in.rdbuf();
    return contents.str();
  }

  int Run(std::vector<std::string> args) {
    args.insert(args.begin(), "procrecon");
    std::vector<const char*> argv;
    for (const std::string& arg : args) argv.push_back(arg.c_str());
    out_.str("");
    err_.str("");
    return RunCli(static_cast<int>(argv.size()), argv.data(), out_, err_);
  }

  fs::path dir_;
  std::ostringstream out_;
  std::ostringstream err_;
};

constexpr std::string_view kModel =
    "graph \"G\" {\n"
    "  entity \"Supplier\" {\n"
    "    task \"A\" { importance = 10; time = 5; }\n"
    "    task \"B\" { importance = 7; time = 4; }\n"
    "    task \"C\" { importance = 6; time = 3; }\n"
    "    task \"D\" { importance = 4; time = 1; }\n"
    "  }\n"
    "  flow \"A\" -> \"B\";\n"
    "}\n";

TEST_F(CliTest, ValidateAcceptsAndRejects) {
  EXPECT_EQ(Run({"validate", "--model", Write("ok.act", kModel)}), kExitOk);
  EXPECT_EQ(out_.str(), "");
  EXPECT_FALSE(fs::exists(Path("ok.act.tmp")));
  EXPECT_EQ(Run({"validate", "--model",
                 Write("bad.act", "graph \"G\" {\n flow \"A\" -> \"B\"; }")}),
            kExitDomainError);
  EXPECT_THAT(err_.str(), HasSubstr("bad.act:2:7:"));
  EXPECT_EQ(Run({"validate", "--model", Path("missing.act")}),
            kExitDomainError);
}

TEST_F(CliTest, ExtractPrintsConstraintJson) {
  const std::string req = Write("req.txt",
                                "Importance shall be maximum\n"
                                "Cost does not exceed 15,000,000\n");
  ASSERT_EQ(Run({"extract", "--requirements", req}), kExitOk) << err_.str();
  const Json json = Json::parse(out_.str());
  EXPECT_TRUE(json["esc"].is_null());
  EXPECT_EQ(json["tfc"]["property"], "importance");
  EXPECT_EQ(json["tfc"]["direction"], "max");
  EXPECT_EQ(json["cc"][0]["value"], 15000000.0);
  EXPECT_EQ(json["cc"][0]["relation"], "less");
}

TEST_F(CliTest, ExtractWithDictionary) {
  const std::string req = Write("req.txt", "Cost ought to stay under 5\n");
  const std::string dict = Write("dict.tsv",
                                 "ought to\tshall\tkeyword\n"
                                 "stay under\tless\trelation\n");
  EXPECT_EQ(Run({"extract", "--requirements", req}), kExitDomainError);
  EXPECT_THAT(err_.str(), HasSubstr("line 1"));
  ASSERT_EQ(Run({"extract", "--requirements", req, "--dict", dict}), kExitOk)
      << err_.str();
  EXPECT_EQ(Json::parse(out_.str())["cc"][0]["property"], "cost");
  const std::string bad = Write("bad.tsv", "x\ty\n");
  EXPECT_EQ(Run({"extract", "--requirements", req, "--dict", bad}),
            kExitDomainError);
  EXPECT_THAT(err_.str(), HasSubstr("bad.tsv"));
}

TEST_F(CliTest, SolveStandaloneProblem) {
  const std::string problem = Write("p.json", R"({
    "direction": "max",
    "variables": ["A", "B", "C", "D"],
    "objective_coefficients": [10, 7, 6, 4],
    "fixed_contribution": 0,
    "rows": [{"coefficients": [5, 4, 3, 1], "relation": "<=", "bound": 9}]
  })");
  ASSERT_EQ(Run({"solve", "--problem", problem}), kExitOk) << err_.str();
  const Json json = Json::parse(out_.str());
  EXPECT_EQ(json["status"], "optimal");
  EXPECT_EQ(json["objective_value"], 20.0);
  EXPECT_EQ(json["assignment"]["B"], 0);
  EXPECT_EQ(json["stats"]["best_bound"], 20.0);

  const std::string infeasible = Write("q.json", R"({
    "direction": "min", "variables": ["a"], "objective_coefficients": [1],
    "rows": [{"coefficients": [1], "relation": ">=", "bound": 2}]
  })");
  EXPECT_EQ(Run({"solve", "--problem", infeasible}), kExitDomainError);
  EXPECT_EQ(Json::parse(out_.str())["status"], "infeasible");

  const std::string malformed = Write("r.json", R"({"direction": "up"})");
  EXPECT_EQ(Run({"solve", "--problem", malformed}), kExitDomainError);
  EXPECT_THAT(err_.str(), HasSubstr("direction"));
}

TEST_F(CliTest, ReconstructWritesModelAndReport) {
  const std::string model = Write("in.act", kModel);
  const std::string req = Write("req.txt",
                                "Supplier shall add \"Review\"\n"
                                "Importance shall be maximum\n"
                                "Time must be less than 9\n");
  const std::string props = Write("props.tsv", "Review\ttime\t1\n");
  ASSERT_EQ(Run({"reconstruct", "--model", model, "--requirements", req,
                 "--out", Path("out.act"), "--report", Path("report.json"),
                 "--added-props", props}),
            kExitOk)
      << err_.str();
  auto out = ParseModel(Slurp(Path("out.act")));
  ASSERT_TRUE(out.ok()) << out.status();
  EXPECT_TRUE(LookupTask(*out, "Review").has_value());
  const Json report = Json::parse(Slurp(Path("report.json")));
  EXPECT_EQ(report["solver_stats"]["status"], "optimal");
  EXPECT_EQ(report["added"][0], "Review");
  EXPECT_EQ(report["constraint_rows"][0]["achieved_total"], 9.0);
  EXPECT_FALSE(fs::exists(Path("out.act.tmp")));
}

TEST_F(CliTest, ReconstructInfeasible) {
  const std::string model = Write("in.act", kModel);
  const std::string req = Write("req.txt",
                                "Importance shall be maximum\n"
                                "Reserve importance greater than 5 tasks\n"
                                "Time does not exceed 10 hours\n");
  EXPECT_EQ(Run({"reconstruct", "--model", model, "--requirements", req,
                 "--out", Path("out.act"), "--report", Path("report.json")}),
            kExitDomainError);
  EXPECT_FALSE(fs::exists(Path("out.act")));
  EXPECT_EQ(Json::parse(Slurp(Path("report.json")))["solver_stats"]["status"],
            "infeasible");
  EXPECT_THAT(err_.str(), HasSubstr("infeasible"));
}

TEST_F(CliTest, ReconstructDomainErrors) {
  const std::string model = Write("in.act", kModel);
  const std::string req =
      Write("req.txt", "The new model shall contain Supplier, Ghost\n");
  EXPECT_EQ(Run({"reconstruct", "--model", model, "--requirements", req,
                 "--out", Path("out.act"), "--report", Path("report.json")}),
            kExitDomainError);
  EXPECT_THAT(err_.str(), HasSubstr("Ghost"));
  EXPECT_FALSE(fs::exists(Path("out.act")));
  EXPECT_FALSE(fs::exists(Path("report.json")));

  const std::string props = Write("props.tsv", "Review\tTime\t1\n");
  EXPECT_EQ(Run({"reconstruct", "--model", model, "--requirements", req,
                 "--out", Path("out.act"), "--report", Path("report.json"),
                 "--added-props", props}),
            kExitDomainError);
  EXPECT_THAT(err_.str(), HasSubstr("props.tsv:1: invalid property name"));
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(Run({}), kExitUsage);
  EXPECT_EQ(Run({"frobnicate"}), kExitUsage);
  EXPECT_EQ(Run({"validate"}), kExitUsage);
  EXPECT_EQ(Run({"reconstruct", "--model", "x"}), kExitUsage);
  EXPECT_EQ(Run({"--help"}), kExitOk);
  EXPECT_THAT(out_.str(), HasSubstr("reconstruct"));
}

}  // namespace
}  // namespace procrecon

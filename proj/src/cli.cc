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

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "fmt/format.h"
#include "procrecon/decimal.h"
#include "procrecon/ilp_solver.h"
#include "procrecon/json_io.h"
#include "procrecon/model_io.h"
#include "procrecon/pipeline.h"
#include "text_util.h"

namespace procrecon {
namespace {

absl::StatusOr<std::string> ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return absl::NotFoundError(fmt::format("cannot open {}", path));
  std::ostringstream contents;
  contents << in.rdbuf();
  if (in.bad()) return absl::DataLossError(fmt::format("cannot read {}", path));
  return contents.str();
}

// Writes through a sibling temporary so a partial file is never left at
// `path`.
absl::Status WriteFileAtomically(const std::string& path,
                                 std::string_view contents) {
  const std::string temporary = path + ".tmp";
  {
    std::ofstream out(temporary, std::ios::binary | std::ios::trunc);
    if (!out) {
      return absl::PermissionDeniedError(
          fmt::format("cannot write {}", temporary));
    }
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) {
      return absl::DataLossError(fmt::format("cannot write {}", temporary));
    }
  }
  std::error_code ec;
  std::filesystem::rename(temporary, path, ec);
  if (ec) {
    std::filesystem::remove(temporary, ec);
    return absl::PermissionDeniedError(
        fmt::format("cannot move {} to {}", temporary, path));
  }
  return absl::OkStatus();
}

absl::StatusOr<Dictionary> LoadDictionary(const std::string& path) {
  if (path.empty()) return DefaultDictionary();
  absl::StatusOr<std::string> text = ReadFile(path);
  if (!text.ok()) return text.status();
  absl::StatusOr<Dictionary> dict =
      MergeDictionaryTsv(DefaultDictionary(), *text);
  if (!dict.ok()) {
    return absl::Status(
        dict.status().code(),
        fmt::format("{}: {}", path, std::string(dict.status().message())));
  }
  return dict;
}

// Rows: task TAB property TAB value.
absl::StatusOr<AddedTaskProperties> LoadAddedProperties(
    const std::string& path) {
  AddedTaskProperties properties;
  if (path.empty()) return properties;
  absl::StatusOr<std::string> text = ReadFile(path);
  if (!text.ok()) return text.status();
  int line_number = 0;
  for (std::string_view line : Split(*text, '\n')) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const std::string_view trimmed = TrimName(line);
    if (trimmed.empty() || trimmed[0] == '#') continue;
    std::vector<std::string_view> fields = Split(line, '\t');
    auto fail = [&](std::string_view why) {
      return absl::InvalidArgumentError(
          fmt::format("{}:{}: {}", path, line_number, why));
    };
    if (fields.size() != 3) return fail("expected task<TAB>property<TAB>value");
    const std::string_view property = TrimName(fields[1]);
    if (!IsPropertyName(property)) return fail("invalid property name");
    const std::optional<double> value = ParseDecimal(TrimName(fields[2]));
    if (!value.has_value()) return fail("value must be a non-negative decimal");
    PropertyList& list = properties[std::string(TrimName(fields[0]))];
    auto same = [&](const auto& entry) { return entry.first == property; };
    if (auto it = std::find_if(list.begin(), list.end(), same);
        it != list.end()) {
      it->second = *value;
    } else {
      list.emplace_back(std::string(property), *value);
    }
  }
  return properties;
}

int Report(std::ostream& err, const absl::Status& status) {
  err << "error: " << status.message() << "\n";
  return kExitDomainError;
}

int RunValidate(const std::string& model_path, std::ostream& err) {
  absl::StatusOr<std::string> text = ReadFile(model_path);
  if (!text.ok()) return Report(err, text.status());
  ParseDiagnostic diagnostic;
  absl::StatusOr<ProcessModel> model = ParseModel(*text, &diagnostic);
  if (!model.ok()) {
    err << model_path << ":" << diagnostic.ToString() << "\n";
    return kExitDomainError;
  }
  return kExitOk;
}

int RunExtract(const std::string& requirements_path,
               const std::string& dict_path, std::ostream& out,
               std::ostream& err) {
  absl::StatusOr<Dictionary> dict = LoadDictionary(dict_path);
  if (!dict.ok()) return Report(err, dict.status());
  absl::StatusOr<std::string> text = ReadFile(requirements_path);
  if (!text.ok()) return Report(err, text.status());
  absl::StatusOr<ConstraintSet> constraints = Extract(*text, *dict);
  if (!constraints.ok()) {
    err << requirements_path << ": " << constraints.status().message() << "\n";
    return kExitDomainError;
  }
  out << ConstraintSetToJson(*constraints).dump(2) << "\n";
  return kExitOk;
}

int RunSolve(const std::string& problem_path, std::ostream& out,
             std::ostream& err) {
  absl::StatusOr<std::string> text = ReadFile(problem_path);
  if (!text.ok()) return Report(err, text.status());
  absl::StatusOr<IlpProblem> problem = ProblemFromJson(*text);
  if (!problem.ok()) return Report(err, problem.status());
  const Solution solution = BranchAndBound(*problem);
  out << SolutionToJson(*problem, solution).dump(2) << "\n";
  return solution.status == SolveStatus::kOptimal ? kExitOk : kExitDomainError;
}

struct ReconstructArgs {
  std::string model;
  std::string requirements;
  std::string out;
  std::string report;
  std::string dict;
  std::string added_props;
};

int RunReconstruct(const ReconstructArgs& args, std::ostream& err) {
  ReconstructOptions options;
  absl::StatusOr<Dictionary> dict = LoadDictionary(args.dict);
  if (!dict.ok()) return Report(err, dict.status());
  options.dictionary = *std::move(dict);
  absl::StatusOr<AddedTaskProperties> props =
      LoadAddedProperties(args.added_props);
  if (!props.ok()) return Report(err, props.status());
  options.added_properties = *std::move(props);

  absl::StatusOr<std::string> model_text = ReadFile(args.model);
  if (!model_text.ok()) return Report(err, model_text.status());
  absl::StatusOr<std::string> requirements_text = ReadFile(args.requirements);
  if (!requirements_text.ok()) return Report(err, requirements_text.status());

  absl::StatusOr<ReconstructionResult> result =
      Reconstruct(*model_text, *requirements_text, options);
  if (!result.ok()) return Report(err, result.status());

  for (const std::string& warning : result->report.warnings) {
    err << "warning: " << warning << "\n";
  }
  absl::Status written = WriteFileAtomically(
      args.report, ReportToJson(result->report).dump(2) + "\n");
  if (!written.ok()) return Report(err, written);
  if (!result->model_text.has_value()) {
    err << "error: no task selection satisfies the constraints "
           "(status=infeasible); no model written\n";
    return kExitDomainError;
  }
  written = WriteFileAtomically(args.out, *result->model_text);
  if (!written.ok()) return Report(err, written);
  return kExitOk;
}

}  // namespace

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Development-process model reconstruction", "procrecon"};
  app.require_subcommand(1);

  ReconstructArgs reconstruct;
  CLI::App* reconstruct_cmd = app.add_subcommand(
      "reconstruct", "Restructure a model and select tasks by 0/1 programming");
  reconstruct_cmd->add_option("--model", reconstruct.model, "Input model")
      ->required();
  reconstruct_cmd
      ->add_option("--requirements", reconstruct.requirements,
                   "Requirement sentences, one per line")
      ->required();
  reconstruct_cmd->add_option("--out", reconstruct.out, "Output model")
      ->required();
  reconstruct_cmd->add_option("--report", reconstruct.report, "Report JSON")
      ->required();
  reconstruct_cmd->add_option("--dict", reconstruct.dict,
                              "Extra dictionary rows (TSV)");
  reconstruct_cmd->add_option("--added-props", reconstruct.added_props,
                              "Property values for added tasks (TSV)");

  std::string requirements_path;
  std::string dict_path;
  CLI::App* extract_cmd = app.add_subcommand(
      "extract", "Print the constraints found in a requirements file");
  extract_cmd->add_option("--requirements", requirements_path)->required();
  extract_cmd->add_option("--dict", dict_path);

  std::string problem_path;
  CLI::App* solve_cmd =
      app.add_subcommand("solve", "Solve a standalone 0/1 program");
  solve_cmd->add_option("--problem", problem_path)->required();

  std::string model_path;
  CLI::App* validate_cmd =
      app.add_subcommand("validate", "Check that a model file is well formed");
  validate_cmd->add_option("--model", model_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (*reconstruct_cmd) return RunReconstruct(reconstruct, err);
  if (*extract_cmd) return RunExtract(requirements_path, dict_path, out, err);
  if (*solve_cmd) return RunSolve(problem_path, out, err);
  if (*validate_cmd) return RunValidate(model_path, err);
  return kExitUsage;
}

}  // namespace procrecon

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

#include "procrecon/model_io.h"

#include <set>
#include <unordered_set>
#include <utility>

#include "absl/status/status.h"
#include "fmt/format.h"
#include "fmt/ranges.h"
#include "procrecon/decimal.h"

namespace procrecon {

std::string ParseDiagnostic::ToString() const {
  return fmt::format("{}:{}: {}", line, column, message);
}

namespace {

enum class TokenKind {
  kWord,
  kString,
  kNumber,
  kLeftBrace,
  kRightBrace,
  kEquals,
  kSemicolon,
  kArrow,
  kEnd,
};

struct Lexeme {
  TokenKind kind = TokenKind::kEnd;
  std::string text;  // Unescaped for strings.
  int line = 1;
  int column = 1;
};

std::string Describe(const Lexeme& token) {
  switch (token.kind) {
    case TokenKind::kWord:
      return fmt::format("'{}'", token.text);
    case TokenKind::kString:
      return "string";
    case TokenKind::kNumber:
      return fmt::format("number {}", token.text);
    case TokenKind::kLeftBrace:
      return "'{'";
    case TokenKind::kRightBrace:
      return "'}'";
    case TokenKind::kEquals:
      return "'='";
    case TokenKind::kSemicolon:
      return "';'";
    case TokenKind::kArrow:
      return "'->'";
    case TokenKind::kEnd:
      return "end of input";
  }
  return "token";
}

bool IsDigit(char c) { return c >= '0' && c <= '9'; }
bool IsWordStart(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}
bool IsWordChar(char c) { return IsWordStart(c) || IsDigit(c); }

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  bool Parse(ProcessModel* model) {
    if (!Advance()) return false;
    if (!ExpectWord("graph")) return false;
    Lexeme name;
    if (!ExpectName("graph", &name)) return false;
    model->name = name.text;
    if (!Expect(TokenKind::kLeftBrace)) return false;
    bool seen_flow = false;
    while (current_.kind != TokenKind::kRightBrace) {
      if (current_.kind == TokenKind::kWord && current_.text == "entity") {
        if (seen_flow) {
          return Fail(current_, "entity declarations must precede flows");
        }
        if (!ParseEntity(model)) return false;
      } else if (current_.kind == TokenKind::kWord && current_.text == "flow") {
        seen_flow = true;
        if (!ParseFlow(model)) return false;
      } else {
        return Fail(current_, fmt::format("{}{}",
                                          "expected 'entity', 'flow' or '}', "
                                          "found ",
                                          Describe(current_)));
      }
    }
    if (!Advance()) return false;
    if (current_.kind != TokenKind::kEnd) {
      return Fail(current_, fmt::format("unexpected {} after end of graph",
                                        Describe(current_)));
    }
    return true;
  }

  const ParseDiagnostic& diagnostic() const { return diagnostic_; }

 private:
  bool ParseEntity(ProcessModel* model) {
    if (!Advance()) return false;
    Lexeme name;
    if (!ExpectName("entity", &name)) return false;
    if (!entity_names_.insert(name.text).second) {
      return Fail(name, fmt::format("duplicate entity name \"{}\"", name.text));
    }
    Entity entity{name.text, {}};
    if (!Expect(TokenKind::kLeftBrace)) return false;
    while (current_.kind != TokenKind::kRightBrace) {
      if (current_.kind != TokenKind::kWord || current_.text != "task") {
        return Fail(current_, fmt::format("expected 'task' or '}}', found {}",
                                          Describe(current_)));
      }
      if (!ParseTask(&entity)) return false;
    }
    if (!Advance()) return false;
    model->entities.push_back(std::move(entity));
    return true;
  }

  bool ParseTask(Entity* entity) {
    if (!Advance()) return false;
    Lexeme name;
    if (!ExpectName("task", &name)) return false;
    if (!task_names_.insert(name.text).second) {
      return Fail(name, fmt::format("duplicate task name \"{}\"", name.text));
    }
    Task task{name.text, {}};
    if (!Expect(TokenKind::kLeftBrace)) return false;
    while (current_.kind != TokenKind::kRightBrace) {
      if (current_.kind != TokenKind::kWord) {
        return Fail(current_, fmt::format("{}{}",
                                          "expected property name or '}', "
                                          "found ",
                                          Describe(current_)));
      }
      const Lexeme key = current_;
      if (!IsPropertyName(key.text)) {
        return Fail(
            key,
            fmt::format("invalid property name '{}' (expected [a-z][a-z0-9_]*)",
                        key.text));
      }
      if (task.Get(key.text).has_value()) {
        return Fail(key, fmt::format("duplicate property '{}' in task \"{}\"",
                                     key.text, task.name));
      }
      if (!Advance()) return false;
      if (!Expect(TokenKind::kEquals)) return false;
      if (current_.kind == TokenKind::kWord && current_.text == "-") {
        return Fail(
            current_,
            fmt::format("negative value for property '{}' of task \"{}\"",
                        key.text, task.name));
      }
      if (current_.kind != TokenKind::kNumber) {
        return Fail(current_, fmt::format("expected number, found {}",
                                          Describe(current_)));
      }
      const std::optional<double> value = ParseDecimal(current_.text);
      if (!value.has_value()) {
        return Fail(
            current_,
            fmt::format("number out of range for property '{}'", key.text));
      }
      task.properties.emplace_back(key.text, *value);
      if (!Advance()) return false;
      if (!Expect(TokenKind::kSemicolon)) return false;
    }
    if (!Advance()) return false;
    entity->tasks.push_back(std::move(task));
    return true;
  }

  bool ParseFlow(ProcessModel* model) {
    if (!Advance()) return false;
    Lexeme source;
    if (!ExpectName("flow source", &source)) return false;
    if (!Expect(TokenKind::kArrow)) return false;
    Lexeme target;
    if (!ExpectName("flow target", &target)) return false;
    const std::string label =
        fmt::format("flow \"{}\" -> \"{}\"", source.text, target.text);
    if (!task_names_.contains(source.text)) {
      return Fail(source, fmt::format("{}: unknown source task \"{}\"", label,
                                      source.text));
    }
    if (!task_names_.contains(target.text)) {
      return Fail(target, fmt::format("{}: unknown target task \"{}\"", label,
                                      target.text));
    }
    if (source.text == target.text) {
      return Fail(source, fmt::format("{}: self-loop", label));
    }
    if (!flows_.emplace(source.text, target.text).second) {
      return Fail(source, fmt::format("{}: duplicate flow", label));
    }
    if (!Expect(TokenKind::kSemicolon)) return false;
    model->flows.push_back({source.text, target.text});
    return true;
  }

  bool ExpectWord(std::string_view word) {
    if (current_.kind != TokenKind::kWord || current_.text != word) {
      return Fail(current_, fmt::format("expected '{}', found {}", word,
                                        Describe(current_)));
    }
    return Advance();
  }

  bool Expect(TokenKind kind) {
    if (current_.kind != kind) {
      Lexeme wanted;
      wanted.kind = kind;
      return Fail(current_, fmt::format("expected {}, found {}",
                                        Describe(wanted), Describe(current_)));
    }
    return Advance();
  }

  // Consumes a string token and trims it; empty names are rejected.
  bool ExpectName(std::string_view what, Lexeme* out) {
    if (current_.kind != TokenKind::kString) {
      return Fail(current_, fmt::format("expected {}{}{}", what,
                                        " name string, "
                                        "found ",
                                        Describe(current_)));
    }
    *out = current_;
    out->text = std::string(TrimName(out->text));
    if (out->text.empty()) {
      return Fail(*out, fmt::format("empty {} name", what));
    }
    return Advance();
  }

  bool Fail(const Lexeme& at, std::string message) {
    return Fail(at.line, at.column, std::move(message));
  }
  bool Fail(int line, int column, std::string message) {
    diagnostic_ = {line, column, std::move(message)};
    return false;
  }

  char Peek(size_t offset = 0) const {
    return pos_ + offset < text_.size() ? text_[pos_ + offset] : '\0';
  }

  void Bump() {
    const char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) {
      ++column_;
    }
  }

  // Lexes the next token into current_.
  bool Advance() {
    for (;;) {
      while (pos_ < text_.size() &&
             (Peek() == ' ' || Peek() == '\t' || Peek() == '\r' ||
              Peek() == '\n' || Peek() == '\f' || Peek() == '\v')) {
        Bump();
      }
      if (Peek() == '#') {
        while (pos_ < text_.size() && Peek() != '\n') Bump();
        continue;
      }
      break;
    }
    // A UTF-8 continuation byte does not start a code point, so the column
    // of the next token is the running count.
    current_ = Lexeme{};
    current_.line = line_;
    current_.column = column_;
    if (pos_ >= text_.size()) {
      current_.kind = TokenKind::kEnd;
      return true;
    }
    const char c = Peek();
    switch (c) {
      case '{':
        current_.kind = TokenKind::kLeftBrace;
        Bump();
        return true;
      case '}':
        current_.kind = TokenKind::kRightBrace;
        Bump();
        return true;
      case '=':
        current_.kind = TokenKind::kEquals;
        Bump();
        return true;
      case ';':
        current_.kind = TokenKind::kSemicolon;
        Bump();
        return true;
      case '"':
        return LexString();
      default:
        break;
    }
    if (c == '-') {
      if (Peek(1) == '>') {
        current_.kind = TokenKind::kArrow;
        Bump();
        Bump();
        return true;
      }
      if (IsDigit(Peek(1))) {
        // Reported by the property parser with the property name.
        current_.kind = TokenKind::kWord;
        current_.text = "-";
        Bump();
        return true;
      }
    }
    if (IsDigit(c)) {
      const size_t start = pos_;
      while (IsDigit(Peek())) Bump();
      if (Peek() == '.') {
        Bump();
        if (!IsDigit(Peek())) {
          return Fail(line_, column_, "expected digit after '.'");
        }
        while (IsDigit(Peek())) Bump();
      }
      current_.kind = TokenKind::kNumber;
      current_.text = std::string(text_.substr(start, pos_ - start));
      return true;
    }
    if (IsWordStart(c)) {
      const size_t start = pos_;
      while (IsWordChar(Peek())) Bump();
      current_.kind = TokenKind::kWord;
      current_.text = std::string(text_.substr(start, pos_ - start));
      return true;
    }
    return Fail(line_, column_,
                fmt::format("unexpected character '{}'", std::string(1, c)));
  }

  bool LexString() {
    const int line = line_;
    const int column = column_;
    Bump();  // Opening quote.
    std::string value;
    for (;;) {
      if (pos_ >= text_.size()) {
        return Fail(line, column, "unterminated string");
      }
      const char c = Peek();
      if (c == '"') {
        Bump();
        break;
      }
      if (c == '\\') {
        const char next = Peek(1);
        if (next != '"' && next != '\\') {
          return Fail(line_, column_,
                      "invalid escape (only \\\" and \\\\ are allowed)");
        }
        value.push_back(next);
        Bump();
        Bump();
        continue;
      }
      value.push_back(c);
      Bump();
    }
    current_.kind = TokenKind::kString;
    current_.text = std::move(value);
    return true;
  }

  std::string_view text_;
  size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
  Lexeme current_;
  ParseDiagnostic diagnostic_;
  std::unordered_set<std::string> entity_names_;
  std::unordered_set<std::string> task_names_;
  std::set<std::pair<std::string, std::string>> flows_;
};

std::string Quote(std::string_view text) {
  std::string out = "\"";
  for (char c : text) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace

absl::StatusOr<ProcessModel> ParseModel(std::string_view text,
                                        ParseDiagnostic* diagnostic) {
  Parser parser(text);
  ProcessModel model;
  if (!parser.Parse(&model)) {
    if (diagnostic != nullptr) *diagnostic = parser.diagnostic();
    return absl::InvalidArgumentError(parser.diagnostic().ToString());
  }
  return model;
}

absl::StatusOr<std::string> SerializeModel(const ProcessModel& model) {
  const std::vector<std::string> violations = Validate(model);
  if (!violations.empty()) {
    return absl::InvalidArgumentError(
        fmt::format("invalid model: {}", fmt::join(violations, "; ")));
  }
  std::string out = fmt::format("graph {} {{\n", Quote(model.name));
  for (const Entity& entity : model.entities) {
    fmt::format_to(std::back_inserter(out), "  entity {} {{\n",
                   Quote(entity.name));
    for (const Task& task : entity.tasks) {
      fmt::format_to(std::back_inserter(out), "    task {} {{\n",
                     Quote(task.name));
      for (const auto& [key, value] : task.properties) {
        fmt::format_to(std::back_inserter(out), "      {} = {};\n", key,
                       FormatDecimal(value));
      }
      fmt::format_to(std::back_inserter(out), "    }}\n");
    }
    fmt::format_to(std::back_inserter(out), "  }}\n");
  }
  for (const ControlFlow& flow : model.flows) {
    fmt::format_to(std::back_inserter(out), "  flow {} -> {};\n",
                   Quote(flow.source), Quote(flow.target));
  }
  out += "}\n";
  return out;
}

}  // namespace procrecon

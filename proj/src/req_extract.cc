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

#include "procrecon/req_extract.h"

#include <algorithm>
#include <cmath>
#include <utility>

#include "absl/status/status.h"
#include "fmt/format.h"
#include "fmt/ranges.h"
#include "procrecon/decimal.h"
#include "procrecon/process_model.h"
#include "text_util.h"

namespace procrecon {

std::string_view TokenTagName(TokenTag tag) {
  switch (tag) {
    case TokenTag::kKeyword:
      return "keyword";
    case TokenTag::kRelation:
      return "relation";
    case TokenTag::kBound:
      return "bound";
    case TokenTag::kObjective:
      return "objective";
    case TokenTag::kName:
      return "name";
    case TokenTag::kNumber:
      return "number";
    case TokenTag::kSeparator:
      return "separator";
  }
  return "name";
}

std::optional<TokenTag> TokenTagFromName(std::string_view name) {
  for (TokenTag tag : {TokenTag::kKeyword, TokenTag::kRelation,
                       TokenTag::kBound, TokenTag::kObjective, TokenTag::kName,
                       TokenTag::kNumber, TokenTag::kSeparator}) {
    if (TokenTagName(tag) == name) return tag;
  }
  return std::nullopt;
}

std::string_view RelationName(Relation relation) {
  return relation == Relation::kGreater ? "greater" : "less";
}

std::string_view DirectionName(Direction direction) {
  return direction == Direction::kMax ? "max" : "min";
}

namespace {

// Lowercases and collapses internal whitespace runs to one space.
std::string NormalizeSurface(std::string_view surface) {
  std::vector<std::string_view> words;
  for (std::string_view word : Split(surface, ' ')) {
    word = TrimName(word);
    if (!word.empty()) words.push_back(word);
  }
  return AsciiLower(fmt::format("{}", fmt::join(words, " ")));
}

int WordCount(std::string_view normalized) {
  return static_cast<int>(
             std::count(normalized.begin(), normalized.end(), ' ')) +
         1;
}

}  // namespace

absl::Status Dictionary::Add(std::string_view surface,
                             std::string_view canonical, TokenTag tag) {
  std::string normalized = NormalizeSurface(surface);
  if (normalized.empty()) {
    return absl::InvalidArgumentError("dictionary surface is empty");
  }
  if (TrimName(canonical).empty()) {
    return absl::InvalidArgumentError(fmt::format(
        "dictionary entry \"{}\" has an empty canonical form", normalized));
  }
  max_words_ = std::max(max_words_, WordCount(normalized));
  for (DictionaryEntry& entry : entries_) {
    if (entry.surface == normalized) {
      entry.canonical = std::string(TrimName(canonical));
      entry.tag = tag;
      return absl::OkStatus();
    }
  }
  entries_.push_back(
      {std::move(normalized), std::string(TrimName(canonical)), tag});
  return absl::OkStatus();
}

const DictionaryEntry* Dictionary::Lookup(std::string_view surface) const {
  const std::string normalized = NormalizeSurface(surface);
  for (const DictionaryEntry& entry : entries_) {
    if (entry.surface == normalized) return &entry;
  }
  return nullptr;
}

Dictionary DefaultDictionary() {
  struct Row {
    std::string_view canonical;
    TokenTag tag;
    std::vector<std::string_view> surfaces;
  };
  const std::vector<Row> rows = {
      {"shall", TokenTag::kKeyword, {"shall", "should", "must"}},
      {"add", TokenTag::kKeyword, {"add", "increase", "execute", "perform"}},
      {"reserve",
       TokenTag::kKeyword,
       {"reserve", "save", "retain", "keep", "preserve"}},
      {"contain",
       TokenTag::kKeyword,
       {"contain", "contains", "include", "includes"}},
      {"model", TokenTag::kKeyword, {"model", "new model"}},
      {"task",
       TokenTag::kKeyword,
       {"task", "tasks", "activity", "activities", "step", "steps"}},
      {"property", TokenTag::kKeyword, {"property", "attribute"}},
      {"greater",
       TokenTag::kRelation,
       {"greater", "greater than", "more than", "higher than", "above",
        "at least", "no less than", "exceed", "exceeds"}},
      {"less",
       TokenTag::kRelation,
       {"less", "less than", "lower than", "below", "at most", "no more than",
        "not exceed", "does not exceed", "do not exceed"}},
      {"max",
       TokenTag::kObjective,
       {"max", "maximum", "greatest", "most", "highest", "maximize", "maximise",
        "maximized"}},
      {"min",
       TokenTag::kObjective,
       {"min", "minimum", "least", "lowest", "minimize", "minimise",
        "minimized"}},
      {"hour", TokenTag::kBound, {"hour", "hours"}},
      {"day", TokenTag::kBound, {"day", "days"}},
      {"yuan", TokenTag::kBound, {"yuan"}},
      {"dollar", TokenTag::kBound, {"dollar", "dollars"}},
  };
  Dictionary dict;
  for (const Row& row : rows) {
    for (std::string_view surface : row.surfaces) {
      dict.Add(surface, row.canonical, row.tag).IgnoreError();
    }
  }
  return dict;
}

absl::StatusOr<Dictionary> MergeDictionaryTsv(Dictionary base,
                                              std::string_view tsv) {
  int line_number = 0;
  for (std::string_view line : Split(tsv, '\n')) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const std::string_view trimmed = TrimName(line);
    if (trimmed.empty() || trimmed[0] == '#') continue;
    std::vector<std::string_view> fields = Split(line, '\t');
    if (fields.size() != 3) {
      return absl::InvalidArgumentError(
          fmt::format("dictionary line {}: expected "
                      "surface<TAB>canonical<TAB>tag, found {} field(s)",
                      line_number, fields.size()));
    }
    const std::optional<TokenTag> tag = TokenTagFromName(TrimName(fields[2]));
    if (!tag.has_value() || *tag == TokenTag::kNumber) {
      return absl::InvalidArgumentError(
          fmt::format("dictionary line {}: unknown tag \"{}\"", line_number,
                      TrimName(fields[2])));
    }
    absl::Status status = base.Add(fields[0], fields[1], *tag);
    if (!status.ok()) {
      return absl::InvalidArgumentError(
          fmt::format("dictionary line {}: {}", line_number,
                      std::string(status.message())));
    }
  }
  return base;
}

namespace {

enum class PieceKind { kWord, kQuoted, kNumber, kSeparator };

struct Piece {
  PieceKind kind;
  std::string text;  // Lowercased word, verbatim quote, stripped number.
  std::string surface;
  int column;
};

bool IsAsciiDigit(char c) { return c >= '0' && c <= '9'; }

bool IsWordByte(unsigned char c) {
  return std::isalnum(c) || c == '_' || c == '-' || c == '\'' || c == '/' ||
         c == '&' || c >= 0x80;
}

// U+3001 IDEOGRAPHIC COMMA and U+FF0C FULLWIDTH COMMA act as list
// separators.
size_t WideSeparatorLength(std::string_view text, size_t pos) {
  const std::string_view rest = text.substr(pos);
  if (rest.starts_with("\xE3\x80\x81")) return 3;
  if (rest.starts_with("\xEF\xBC\x8C")) return 3;
  return 0;
}

class SentenceLexer {
 public:
  explicit SentenceLexer(std::string_view text) : text_(text) {}

  absl::StatusOr<std::vector<Piece>> Run() {
    std::vector<Piece> pieces;
    while (pos_ < text_.size()) {
      const unsigned char c = text_[pos_];
      const int column = column_;
      if (std::isspace(c)) {
        Bump(1);
      } else if (c == '"') {
        const size_t close = text_.find('"', pos_ + 1);
        if (close == std::string_view::npos) {
          return absl::InvalidArgumentError(
              fmt::format("column {}: unbalanced quote", column));
        }
        std::string inner(text_.substr(pos_ + 1, close - pos_ - 1));
        Bump(close + 1 - pos_);
        pieces.push_back({PieceKind::kQuoted, inner, inner, column});
      } else if (c == ',') {
        Bump(1);
        pieces.push_back({PieceKind::kSeparator, ",", ",", column});
      } else if (size_t n = WideSeparatorLength(text_, pos_); n > 0) {
        std::string surface(text_.substr(pos_, n));
        Bump(n);
        pieces.push_back({PieceKind::kSeparator, ",", surface, column});
      } else if (IsAsciiDigit(c)) {
        pieces.push_back(LexNumber());
      } else if (IsWordByte(c)) {
        const size_t start = pos_;
        while (pos_ < text_.size() &&
               IsWordByte(static_cast<unsigned char>(text_[pos_])) &&
               WideSeparatorLength(text_, pos_) == 0) {
          Bump(1);
        }
        std::string surface(text_.substr(start, pos_ - start));
        pieces.push_back(
            {PieceKind::kWord, AsciiLower(surface), surface, column});
      } else {
        // Sentence punctuation and template brackets carry no content.
        Bump(1);
      }
    }
    return pieces;
  }

 private:
  // digits (',' ddd)* ('.' digits)? ; separators are stripped.
  Piece LexNumber() {
    const int column = column_;
    const size_t start = pos_;
    std::string digits;
    auto take_digits = [&] {
      while (pos_ < text_.size() && IsAsciiDigit(text_[pos_])) {
        digits.push_back(text_[pos_]);
        Bump(1);
      }
    };
    take_digits();
    while (pos_ + 3 < text_.size() && text_[pos_] == ',' &&
           IsAsciiDigit(text_[pos_ + 1]) && IsAsciiDigit(text_[pos_ + 2]) &&
           IsAsciiDigit(text_[pos_ + 3]) &&
           (pos_ + 4 >= text_.size() || !IsAsciiDigit(text_[pos_ + 4]))) {
      digits.append(text_.substr(pos_ + 1, 3));
      Bump(4);
    }
    if (pos_ + 1 < text_.size() && text_[pos_] == '.' &&
        IsAsciiDigit(text_[pos_ + 1])) {
      digits.push_back('.');
      Bump(1);
      take_digits();
    }
    return {PieceKind::kNumber, digits,
            std::string(text_.substr(start, pos_ - start)), column};
  }

  void Bump(size_t n) {
    for (size_t i = 0; i < n; ++i) {
      if ((static_cast<unsigned char>(text_[pos_]) & 0xC0) != 0x80) ++column_;
      ++pos_;
    }
  }

  std::string_view text_;
  size_t pos_ = 0;
  int column_ = 1;
};

bool IsDroppedWord(std::string_view lower) {
  static constexpr std::string_view kDropped[] = {
      "the", "a", "an", "be", "is", "are", "been", "being", "total"};
  return std::find(std::begin(kDropped), std::end(kDropped), lower) !=
         std::end(kDropped);
}

}  // namespace

absl::StatusOr<std::vector<Token>> Tokenize(std::string_view sentence,
                                            const Dictionary& dict) {
  SentenceLexer lexer(sentence);
  absl::StatusOr<std::vector<Piece>> pieces = lexer.Run();
  if (!pieces.ok()) return pieces.status();

  std::vector<Token> tokens;
  const std::vector<Piece>& p = *pieces;
  size_t i = 0;
  while (i < p.size()) {
    const Piece& piece = p[i];
    switch (piece.kind) {
      case PieceKind::kQuoted: {
        Token token;
        token.text = piece.text;
        token.surface = piece.surface;
        token.quoted = true;
        token.column = piece.column;
        tokens.push_back(std::move(token));
        ++i;
        continue;
      }
      case PieceKind::kNumber: {
        const std::optional<double> value = ParseDecimal(piece.text);
        if (!value.has_value()) {
          return absl::InvalidArgumentError(
              fmt::format("column {}: number out of range", piece.column));
        }
        Token token;
        token.text = FormatDecimal(*value);
        token.tag = TokenTag::kNumber;
        token.surface = piece.surface;
        token.number = *value;
        token.column = piece.column;
        tokens.push_back(std::move(token));
        ++i;
        continue;
      }
      case PieceKind::kSeparator: {
        Token token;
        token.text = ",";
        token.tag = TokenTag::kSeparator;
        token.surface = piece.surface;
        token.column = piece.column;
        tokens.push_back(std::move(token));
        ++i;
        continue;
      }
      case PieceKind::kWord:
        break;
    }

    // Longest dictionary phrase over the run of consecutive words.
    size_t run = 0;
    while (i + run < p.size() && p[i + run].kind == PieceKind::kWord &&
           static_cast<int>(run) < dict.max_words()) {
      ++run;
    }
    const DictionaryEntry* match = nullptr;
    size_t matched = 0;
    for (size_t k = run; k >= 1 && match == nullptr; --k) {
      std::vector<std::string_view> words;
      for (size_t j = 0; j < k; ++j) words.push_back(p[i + j].text);
      match = dict.Lookup(fmt::format("{}", fmt::join(words, " ")));
      if (match != nullptr) matched = k;
    }
    if (match != nullptr) {
      Token token;
      token.text = match->canonical;
      token.tag = match->tag;
      std::vector<std::string_view> surfaces;
      for (size_t j = 0; j < matched; ++j) surfaces.push_back(p[i + j].surface);
      token.surface = fmt::format("{}", fmt::join(surfaces, " "));
      token.column = piece.column;
      tokens.push_back(std::move(token));
      i += matched;
      continue;
    }
    if (piece.text == "and") {
      tokens.push_back(
          {",", TokenTag::kSeparator, piece.surface, false, 0, piece.column});
    } else if (!IsDroppedWord(piece.text)) {
      tokens.push_back(
          {piece.text, TokenTag::kName, piece.surface, false, 0, piece.column});
    }
    ++i;
  }
  return tokens;
}

std::string RenderTokens(const std::vector<Token>& tokens) {
  std::vector<std::string> parts;
  for (const Token& token : tokens) {
    if (token.tag == TokenTag::kName) {
      parts.push_back(fmt::format("\"{}\"", token.text));
    } else {
      parts.push_back(token.text);
    }
  }
  return fmt::format("{}", fmt::join(parts, " "));
}

namespace {

bool IsKeyword(const Token& token, std::string_view word) {
  return token.tag == TokenTag::kKeyword && token.text == word;
}

std::string Describe(const std::vector<Token>& tokens) {
  std::vector<std::string> parts;
  for (const Token& token : tokens) {
    parts.push_back(fmt::format("{}:{}", TokenTagName(token.tag), token.text));
  }
  return fmt::format("[{}]", fmt::join(parts, " "));
}

absl::Status Unrecognized(const std::vector<Token>& tokens,
                          std::string_view why) {
  return absl::InvalidArgumentError(
      fmt::format("unrecognized requirement ({}): {}", why, Describe(tokens)));
}

absl::Status Ambiguous(const std::vector<Token>& tokens, std::string_view why) {
  return absl::InvalidArgumentError(
      fmt::format("ambiguous requirement ({}): {}", why, Describe(tokens)));
}

// Joins surfaces with single spaces.
std::string JoinSurfaces(const std::vector<Token>& tokens, size_t begin,
                         size_t end) {
  std::vector<std::string_view> parts;
  for (size_t i = begin; i < end; ++i) parts.push_back(tokens[i].surface);
  return fmt::format("{}", fmt::join(parts, " "));
}

absl::StatusOr<std::string> PropertyFrom(const std::vector<Token>& tokens,
                                         const std::vector<size_t>& names) {
  if (names.empty()) return Unrecognized(tokens, "missing property");
  if (names.size() > 1) return Ambiguous(tokens, "more than one property");
  const Token& token = tokens[names[0]];
  std::string property = AsciiLower(TrimName(token.text));
  if (!IsPropertyName(property)) {
    return absl::InvalidArgumentError(
        fmt::format("invalid property name \"{}\" in requirement {}",
                    token.text, Describe(tokens)));
  }
  return property;
}

// Selection: [model] [shall] [contain] name-list.
absl::StatusOr<std::optional<RequirementRecord>> MatchSelection(
    const std::vector<Token>& tokens) {
  auto model = std::find_if(tokens.begin(), tokens.end(), [](const Token& t) {
    return IsKeyword(t, "model");
  });
  auto contain = std::find_if(tokens.begin(), tokens.end(), [](const Token& t) {
    return IsKeyword(t, "contain");
  });
  if (model == tokens.end() || contain == tokens.end()) return std::nullopt;
  if (tokens.size() < 3 || !IsKeyword(tokens[0], "model") ||
      !IsKeyword(tokens[1], "shall") || !IsKeyword(tokens[2], "contain")) {
    return Unrecognized(tokens,
                        "selection must read <new model> <shall> "
                        "<contain> {entities}");
  }
  SelectionRecord record;
  size_t group_begin = 3;
  for (size_t i = 3; i <= tokens.size(); ++i) {
    if (i < tokens.size() && tokens[i].tag == TokenTag::kName) continue;
    if (i < tokens.size() && tokens[i].tag != TokenTag::kSeparator) {
      return Unrecognized(tokens, "selection list may only hold names");
    }
    // Empty groups come from "A, and B"; skip them.
    if (i > group_begin) {
      record.entities.push_back(JoinSurfaces(tokens, group_begin, i));
    }
    group_begin = i + 1;
  }
  if (record.entities.empty()) {
    return Unrecognized(tokens, "selection names no entity");
  }
  return RequirementRecord(std::move(record));
}

// Augmented task: name+ [shall] [add] [task]? name+ [task]?.
absl::StatusOr<std::optional<RequirementRecord>> MatchAugmentedTask(
    const std::vector<Token>& tokens) {
  size_t add = tokens.size();
  for (size_t i = 1; i < tokens.size(); ++i) {
    if (IsKeyword(tokens[i], "add") && IsKeyword(tokens[i - 1], "shall")) {
      add = i;
      break;
    }
  }
  if (add == tokens.size()) return std::nullopt;
  const size_t shall = add - 1;
  if (shall == 0) return Unrecognized(tokens, "missing entity before <shall>");
  for (size_t i = 0; i < shall; ++i) {
    if (tokens[i].tag == TokenTag::kSeparator) {
      return Ambiguous(tokens, "more than one entity");
    }
    if (tokens[i].tag != TokenTag::kName) {
      return Unrecognized(tokens, "entity must be a name");
    }
  }
  size_t begin = add + 1;
  size_t end = tokens.size();
  if (begin < end && IsKeyword(tokens[begin], "task")) ++begin;
  if (end > begin && IsKeyword(tokens[end - 1], "task")) --end;
  if (begin == end) return Unrecognized(tokens, "missing task name");
  for (size_t i = begin; i < end; ++i) {
    if (tokens[i].tag == TokenTag::kSeparator) {
      return Ambiguous(tokens, "more than one task");
    }
    if (tokens[i].tag != TokenTag::kName) {
      return Unrecognized(tokens, "task must be a name");
    }
  }
  AugmentedTask record;
  record.entity = JoinSurfaces(tokens, 0, shall);
  record.task = JoinSurfaces(tokens, begin, end);
  return RequirementRecord(std::move(record));
}

// Shared shape of the retained-task and constraint templates once the lead
// token(s) are consumed: [property]? name [shall]? relation number units*
// [task]?.
absl::StatusOr<PropertyBound> MatchBoundTail(const std::vector<Token>& tokens,
                                             size_t begin, bool allow_task) {
  std::vector<size_t> names;
  size_t relation = tokens.size();
  for (size_t i = begin; i < tokens.size(); ++i) {
    const Token& t = tokens[i];
    if (t.tag == TokenTag::kRelation) {
      relation = i;
      break;
    }
    if (t.tag == TokenTag::kName) {
      names.push_back(i);
    } else if (t.tag == TokenTag::kSeparator) {
      if (!names.empty()) names.push_back(i);  // Counts as a second property.
    } else if (IsKeyword(t, "property") || IsKeyword(t, "shall") ||
               (allow_task && IsKeyword(t, "task"))) {
      continue;
    } else if (t.tag == TokenTag::kNumber) {
      return Unrecognized(tokens, "value precedes the relation");
    } else {
      return Unrecognized(tokens, "unexpected token before the relation");
    }
  }
  if (relation == tokens.size())
    return Unrecognized(tokens, "missing relation");
  absl::StatusOr<std::string> property = PropertyFrom(tokens, names);
  if (!property.ok()) return property.status();

  std::vector<size_t> numbers;
  for (size_t i = relation + 1; i < tokens.size(); ++i) {
    const Token& t = tokens[i];
    if (t.tag == TokenTag::kNumber) {
      numbers.push_back(i);
    } else if (t.tag == TokenTag::kRelation) {
      return Ambiguous(tokens, "more than one relation");
    } else if (numbers.empty()) {
      return Unrecognized(tokens, "expected a value after the relation");
    } else if (t.tag == TokenTag::kBound ||
               (t.tag == TokenTag::kName && !t.quoted) ||
               t.tag == TokenTag::kSeparator ||
               (allow_task && IsKeyword(t, "task"))) {
      // Units and trailing filler after the value.
      continue;
    } else {
      return Unrecognized(tokens, "unexpected token after the value");
    }
  }
  if (numbers.empty()) return Unrecognized(tokens, "missing value");
  if (numbers.size() > 1) return Ambiguous(tokens, "more than one value");

  PropertyBound bound;
  bound.property = *std::move(property);
  bound.relation =
      tokens[relation].text == "greater" ? Relation::kGreater : Relation::kLess;
  bound.value = tokens[numbers[0]].number;
  return bound;
}

// Retained task: [shall]? [reserve] ... (see MatchBoundTail).
absl::StatusOr<std::optional<RequirementRecord>> MatchRetainedTask(
    const std::vector<Token>& tokens) {
  auto reserve = std::find_if(tokens.begin(), tokens.end(), [](const Token& t) {
    return IsKeyword(t, "reserve");
  });
  if (reserve == tokens.end()) return std::nullopt;
  const size_t index = reserve - tokens.begin();
  for (size_t i = 0; i < index; ++i) {
    if (!IsKeyword(tokens[i], "shall")) {
      return Unrecognized(tokens,
                          "retained-task rule must start with "
                          "<reserve>");
    }
  }
  absl::StatusOr<PropertyBound> rule =
      MatchBoundTail(tokens, index + 1, /*allow_task=*/true);
  if (!rule.ok()) return rule.status();
  return RequirementRecord(RetainedTaskRecord{*std::move(rule)});
}

// Objective: {property} <max|min> or <max|min> {property}; modal verbs and
// the property keyword are ignored.
absl::StatusOr<std::optional<RequirementRecord>> MatchObjective(
    const std::vector<Token>& tokens) {
  std::vector<size_t> objectives;
  std::vector<size_t> names;
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (tokens[i].tag == TokenTag::kObjective) objectives.push_back(i);
  }
  if (objectives.empty()) return std::nullopt;
  if (objectives.size() > 1)
    return Ambiguous(tokens, "more than one objective");
  for (size_t i = 0; i < tokens.size(); ++i) {
    const Token& t = tokens[i];
    if (t.tag == TokenTag::kObjective || IsKeyword(t, "shall") ||
        IsKeyword(t, "property")) {
      continue;
    }
    if (t.tag == TokenTag::kName) {
      names.push_back(i);
    } else if (t.tag == TokenTag::kSeparator) {
      if (!names.empty()) names.push_back(i);
    } else {
      return Unrecognized(tokens, "objective takes only a property");
    }
  }
  absl::StatusOr<std::string> property = PropertyFrom(tokens, names);
  if (!property.ok()) return property.status();
  Objective record;
  record.property = *std::move(property);
  record.direction =
      tokens[objectives[0]].text == "max" ? Direction::kMax : Direction::kMin;
  return RequirementRecord(std::move(record));
}

// Constraint: [property]? name [shall]? relation number units*.
absl::StatusOr<std::optional<RequirementRecord>> MatchConstraint(
    const std::vector<Token>& tokens) {
  const bool has_relation =
      std::any_of(tokens.begin(), tokens.end(),
                  [](const Token& t) { return t.tag == TokenTag::kRelation; });
  if (!has_relation) return std::nullopt;
  absl::StatusOr<PropertyBound> row =
      MatchBoundTail(tokens, 0, /*allow_task=*/false);
  if (!row.ok()) return row.status();
  return RequirementRecord(ConstraintRecord{*std::move(row)});
}

}  // namespace

absl::StatusOr<RequirementRecord> MatchTemplates(
    const std::vector<Token>& tokens) {
  using Matcher = absl::StatusOr<std::optional<RequirementRecord>> (*)(
      const std::vector<Token>&);
  static constexpr Matcher kMatchers[] = {&MatchSelection, &MatchAugmentedTask,
                                          &MatchRetainedTask, &MatchObjective,
                                          &MatchConstraint};
  for (Matcher matcher : kMatchers) {
    absl::StatusOr<std::optional<RequirementRecord>> result = matcher(tokens);
    if (!result.ok()) return result.status();
    if (result->has_value()) return **std::move(result);
  }
  return Unrecognized(tokens, "no template matches");
}

absl::StatusOr<ConstraintSet> Extract(std::string_view requirements_text,
                                      const Dictionary& dict) {
  ConstraintSet constraints;
  int selection_line = 0;
  int objective_line = 0;
  int line_number = 0;
  for (std::string_view line : Split(requirements_text, '\n')) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const std::string_view sentence = TrimName(line);
    if (sentence.empty() || sentence[0] == '#') continue;

    auto annotate = [&](const absl::Status& status) {
      return absl::Status(status.code(),
                          fmt::format("line {}: {} in \"{}\"", line_number,
                                      std::string(status.message()), sentence));
    };
    absl::StatusOr<std::vector<Token>> tokens = Tokenize(sentence, dict);
    if (!tokens.ok()) return annotate(tokens.status());
    absl::StatusOr<RequirementRecord> record = MatchTemplates(*tokens);
    if (!record.ok()) return annotate(record.status());

    if (auto* selection = std::get_if<SelectionRecord>(&*record)) {
      if (selection_line != 0) {
        return annotate(absl::FailedPreconditionError(fmt::format(
            "conflicting entity selection (already given on line {})",
            selection_line)));
      }
      selection_line = line_number;
      std::vector<std::string> names;
      for (std::string& name : selection->entities) {
        const std::string key = AsciiLower(name);
        const bool seen = std::any_of(
            names.begin(), names.end(),
            [&](const std::string& n) { return AsciiLower(n) == key; });
        if (!seen) names.push_back(std::move(name));
      }
      constraints.esc = std::move(names);
    } else if (auto* added = std::get_if<AugmentedTask>(&*record)) {
      constraints.aac.push_back(std::move(*added));
    } else if (auto* retained = std::get_if<RetainedTaskRecord>(&*record)) {
      constraints.arc.push_back(std::move(retained->rule));
    } else if (auto* objective = std::get_if<Objective>(&*record)) {
      if (objective_line != 0) {
        return annotate(absl::FailedPreconditionError(
            fmt::format("conflicting objective (already given on line {})",
                        objective_line)));
      }
      objective_line = line_number;
      constraints.tfc = std::move(*objective);
    } else if (auto* row = std::get_if<ConstraintRecord>(&*record)) {
      constraints.cc.push_back(std::move(row->row));
    }
  }
  return constraints;
}

namespace {

absl::StatusOr<std::string> QuoteName(std::string_view name) {
  if (name.find_first_of("\"\n\r") != std::string_view::npos) {
    return absl::InvalidArgumentError(
        fmt::format("name \"{}\" cannot be written as a requirement", name));
  }
  return fmt::format("\"{}\"", name);
}

}  // namespace

absl::StatusOr<std::string> RenderRequirements(
    const ConstraintSet& constraints) {
  std::string out;
  if (constraints.esc.has_value()) {
    std::vector<std::string> names;
    for (const std::string& name : *constraints.esc) {
      absl::StatusOr<std::string> quoted = QuoteName(name);
      if (!quoted.ok()) return quoted.status();
      names.push_back(*std::move(quoted));
    }
    fmt::format_to(std::back_inserter(out), "The new model shall contain {}\n",
                   fmt::join(names, ", "));
  }
  for (const AugmentedTask& added : constraints.aac) {
    absl::StatusOr<std::string> entity = QuoteName(added.entity);
    if (!entity.ok()) return entity.status();
    absl::StatusOr<std::string> task = QuoteName(added.task);
    if (!task.ok()) return task.status();
    fmt::format_to(std::back_inserter(out), "{} shall add {}\n", *entity,
                   *task);
  }
  if (constraints.tfc.has_value()) {
    fmt::format_to(
        std::back_inserter(out), "\"{}\" shall be {}\n",
        constraints.tfc->property,
        constraints.tfc->direction == Direction::kMax ? "maximum" : "minimum");
  }
  for (const PropertyBound& rule : constraints.arc) {
    fmt::format_to(std::back_inserter(out), "Reserve \"{}\" {} than {} tasks\n",
                   rule.property, RelationName(rule.relation),
                   FormatDecimal(rule.value));
  }
  for (const PropertyBound& row : constraints.cc) {
    fmt::format_to(std::back_inserter(out), "\"{}\" shall be {} than {}\n",
                   row.property, RelationName(row.relation),
                   FormatDecimal(row.value));
  }
  return out;
}

}  // namespace procrecon

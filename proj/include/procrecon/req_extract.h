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

// Rule-based extraction of reconstruction constraints from structured
// English requirement sentences.
//
// A sentence is tokenized against a user dictionary (longest phrase match,
// canonical replacement, tag assignment) and then classified by five
// templates, tried in this order:
//
//   selection      <new model> <shall> <contain> {entity}, {entity} ...
//   augmented task {entity} <shall> <add> {task}
//   retained task  <reserve> {property} <greater|less> {value} <task>
//   objective      {property} <max|min>
//   constraint     {property} <greater|less> {value}
//
// Per-sentence records are then aggregated into a ConstraintSet.

#ifndef PROCRECON_REQ_EXTRACT_H_
#define PROCRECON_REQ_EXTRACT_H_

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "absl/status/statusor.h"

namespace procrecon {

enum class TokenTag {
  kKeyword,
  kRelation,
  kBound,  // Unit word trailing a value ("hours"); ignored by the templates.
  kObjective,
  kName,
  kNumber,
  kSeparator,
};

std::string_view TokenTagName(TokenTag tag);
std::optional<TokenTag> TokenTagFromName(std::string_view name);

struct DictionaryEntry {
  std::string surface;  // Lowercase, single-spaced.
  std::string canonical;
  TokenTag tag;

  friend bool operator==(const DictionaryEntry&,
                         const DictionaryEntry&) = default;
};

// Ordered surface -> (canonical, tag) table. Surfaces are unique after
// lowercasing and may span several words.
class Dictionary {
 public:
  // Inserts `entry`, replacing an existing entry with the same surface in
  // place. Fails on an empty surface.
  absl::Status Add(std::string_view surface, std::string_view canonical,
                   TokenTag tag);

  const DictionaryEntry* Lookup(std::string_view surface) const;

  const std::vector<DictionaryEntry>& entries() const { return entries_; }
  // Word count of the longest surface.
  int max_words() const { return max_words_; }

 private:
  std::vector<DictionaryEntry> entries_;
  int max_words_ = 0;
};

// Built-in vocabulary: modal verbs, action verbs, relations, objectives and
// the structural keywords the templates anchor on.
Dictionary DefaultDictionary();

// Merges "surface TAB canonical TAB tag" rows over `base`. Blank lines and
// lines starting with '#' are skipped.
absl::StatusOr<Dictionary> MergeDictionaryTsv(Dictionary base,
                                              std::string_view tsv);

struct Token {
  std::string text;  // Canonical form, or the lowercased / quoted literal.
  TokenTag tag = TokenTag::kName;
  std::string surface;  // Original spelling from the sentence.
  bool quoted = false;
  double number = 0;  // Set for kNumber.
  int column = 1;     // 1-based code point.

  // Canonical identity; surface spelling and position are ignored.
  bool SameCanonical(const Token& other) const {
    return text == other.text && tag == other.tag;
  }
};

absl::StatusOr<std::vector<Token>> Tokenize(std::string_view sentence,
                                            const Dictionary& dict);

// Renders tokens back to text that re-tokenizes to the same canonical
// tokens. Names are always quoted.
std::string RenderTokens(const std::vector<Token>& tokens);

enum class Relation { kGreater, kLess };
enum class Direction { kMax, kMin };

std::string_view RelationName(Relation relation);
std::string_view DirectionName(Direction direction);

struct AugmentedTask {
  std::string entity;
  std::string task;
  friend bool operator==(const AugmentedTask&, const AugmentedTask&) = default;
};

struct PropertyBound {
  std::string property;
  Relation relation = Relation::kLess;
  double value = 0;
  friend bool operator==(const PropertyBound&, const PropertyBound&) = default;
};

struct Objective {
  std::string property;
  Direction direction = Direction::kMax;
  friend bool operator==(const Objective&, const Objective&) = default;
};

struct ConstraintSet {
  std::optional<std::vector<std::string>> esc;
  std::vector<AugmentedTask> aac;
  std::vector<PropertyBound> arc;
  std::optional<Objective> tfc;
  std::vector<PropertyBound> cc;

  bool empty() const {
    return !esc.has_value() && aac.empty() && arc.empty() && !tfc.has_value() &&
           cc.empty();
  }
  friend bool operator==(const ConstraintSet&, const ConstraintSet&) = default;
};

struct SelectionRecord {
  std::vector<std::string> entities;
};
struct RetainedTaskRecord {
  PropertyBound rule;
};
struct ConstraintRecord {
  PropertyBound row;
};

using RequirementRecord =
    std::variant<SelectionRecord, AugmentedTask, RetainedTaskRecord, Objective,
                 ConstraintRecord>;

// Classifies one tokenized sentence. Exactly one record or one error.
absl::StatusOr<RequirementRecord> MatchTemplates(
    const std::vector<Token>& tokens);

absl::StatusOr<ConstraintSet> Extract(std::string_view requirements_text,
                                      const Dictionary& dict);

// One canonical sentence per record, in esc, aac, tfc, arc, cc order.
// Extract(RenderRequirements(c)) reproduces c. Fails if a name contains a
// double quote, which the sentence syntax cannot express.
absl::StatusOr<std::string> RenderRequirements(
    const ConstraintSet& constraints);

}  // namespace procrecon

#endif  // PROCRECON_REQ_EXTRACT_H_

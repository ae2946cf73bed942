#pragma once

// PADT-style to I3rab conversion: re-tokenization, label mapping and
// head restructuring, with a manual override channel.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "i3rab/conllx.hpp"
#include "i3rab/error.hpp"
#include "i3rab/schema.hpp"

namespace i3rab::converter {

using conllx::Sentence;
using conllx::Token;
using conllx::Treebank;

enum class ConvertErrc {
  kNoCovertMapping,
  kRestructureFailure,
  kOverrideIndexOutOfRange,
  kInvalidOverride,
  kMalformedRules,
};

std::string_view to_string(ConvertErrc errc);

class ConvertError : public TypedError<ConvertErrc> {
 public:
  using TypedError::TypedError;
};

struct FixAction {
  enum class Kind { kSplit, kMerge, kDelete };

  Kind kind = Kind::kMerge;
  std::string match;                       // surface form the action applies to
  std::vector<schema::SplitPart> parts;    // kSplit only
  std::optional<std::size_t> sentence;     // 1-based; applies everywhere when empty

  friend bool operator==(const FixAction&, const FixAction&) = default;
};

struct RuleOptions {
  bool insert_covert = true;
  bool detach_joined = true;
  std::string jussive_label = "NEG";
  std::string accusative_label = "P-ACC";

  friend bool operator==(const RuleOptions&, const RuleOptions&) = default;
};

struct ConversionRules {
  schema::Schema schema;
  // Keys: "Label", "Label/DEPCPOS", "Label^HEADCPOS", "*/DEPCPOS", "*^HEADCPOS".
  std::map<std::string, std::string> label_map;
  std::vector<FixAction> fix_list;
  RuleOptions options;
};

// Sectioned rules file ([label_map], [fix_list], [options]); sections that
// are present replace the built-in defaults.
ConversionRules load_rules(std::string_view text, const schema::Schema& schema);
ConversionRules default_rules(const schema::Schema& schema);
std::string_view default_rules_text();
ConversionRules load_rules_source(const std::string& source, const schema::Schema& schema);

struct ConversionReport {
  std::size_t dropped_pronoun = 0;
  std::size_t joined_pronoun = 0;
  std::size_t separated = 0;
  std::size_t merged = 0;
  std::size_t deleted = 0;
  std::size_t overridden_sentences = 0;
  std::size_t nonprojective_outputs = 0;
  std::size_t restructure_failures = 0;
  std::size_t input_tokens = 0;
  std::size_t output_tokens = 0;

  ConversionReport& operator+=(const ConversionReport& other);
  // output - input as predicted by the counters.
  long long predicted_delta() const;
  bool balanced() const;
  std::string to_text() const;

  friend bool operator==(const ConversionReport&, const ConversionReport&) = default;
};

// ----- single-token steps -------------------------------------------------

// Splits a verb carrying a joined nominative suffix into (verb, pronoun).
// The pronoun token gets id 0 and head 0; callers place it.
std::optional<std::pair<Token, Token>> detach_joined_pronoun(const Token& t,
                                                             const schema::Schema& schema);

// Covert agent pronoun for verb `v` of `s`, or nothing when an overt agent
// follows it. Throws NoCovertMapping for agreement outside the table.
std::optional<Token> surmise_covert_pronoun(const Token& v, const Sentence& s,
                                            const schema::Schema& schema);

// Parts of a fused word (ids/heads left for the caller), or {t}.
std::vector<Token> split_fused_word(const Token& t, const schema::Schema& schema);

// ----- sentence steps -----------------------------------------------------

struct RetokenizeResult {
  Sentence sentence;
  ConversionReport report;
};

// `sentence_number` (1-based) selects "@N"-scoped fix-list entries.
RetokenizeResult retokenize_sentence(const Sentence& s, const ConversionRules& rules,
                                     std::size_t sentence_number = 0);

// Label of `t` after the label map (head may be null for root arcs).
std::string map_label(const Token& t, const Token* head, const ConversionRules& rules);
Sentence map_labels(const Sentence& s, const ConversionRules& rules);

// PRED-/PREDX- suffix for a predicate word: VP, PP, ADVP, NP or NOUN.
std::string predicate_suffix(const Token& t, const Sentence& s, const schema::Schema& schema);

// Throws RestructureFailure when the sentence cannot be rebuilt.
Sentence restructure_heads(const Sentence& s, const ConversionRules& rules);

struct ConversionResult {
  Treebank treebank;
  ConversionReport report;
};

ConversionResult convert_treebank(const Treebank& tb, const ConversionRules& rules,
                                  const std::optional<Treebank>& overrides = std::nullopt);

}  // namespace i3rab::converter

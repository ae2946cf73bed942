#pragma once

// I3rab vocabularies, lexicons and the governance-constraint validator.

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "i3rab/conllx.hpp"
#include "i3rab/error.hpp"

namespace i3rab::schema {

using conllx::Sentence;
using conllx::Token;

enum class SchemaErrc {
  kUnknownSection,
  kDuplicateEntry,
  kAliasTargetMissing,
  kMalformedLine,
  kUnclassifiable,
};

std::string_view to_string(SchemaErrc errc);

class SchemaError : public TypedError<SchemaErrc> {
 public:
  using TypedError::TypedError;
};

// Person/gender/number pattern. Each field is a set of accepted values;
// an empty set means "any" (written "*" in config files).
struct AgreementPattern {
  std::set<std::string> persons;
  std::set<std::string> genders;
  std::set<std::string> numbers;

  bool matches(std::string_view person, std::string_view gender, std::string_view number) const;
  friend bool operator==(const AgreementPattern&, const AgreementPattern&) = default;
};

// A joined nominative pronoun suffix such as ون (3rd person masculine plural).
struct PronounDescriptor {
  AgreementPattern agreement;
  std::string pronoun;  // independent pronoun the suffix stands for (lemma base)

  friend bool operator==(const PronounDescriptor&, const PronounDescriptor&) = default;
};

struct CovertEntry {
  AgreementPattern agreement;
  std::string pronoun;

  friend bool operator==(const CovertEntry&, const CovertEntry&) = default;
};

// One part of a fused-word split; an empty postag inherits the original's.
struct SplitPart {
  std::string form;
  std::string postag;

  friend bool operator==(const SplitPart&, const SplitPart&) = default;
};

struct Schema {
  std::set<std::string> relation_labels;
  std::set<std::string> pos_tags;
  std::map<std::string, std::set<std::string>> feature_values;
  std::map<std::string, std::string> label_aliases;
  std::set<std::string> kana_sisters;
  std::set<std::string> inna_sisters;
  std::set<std::string> jussive_particles;
  std::set<std::string> accusative_particles;
  // Ordered by config appearance so longer suffixes can be listed first.
  std::vector<std::pair<std::string, PronounDescriptor>> joined_nominative_suffixes;
  std::vector<CovertEntry> covert_pronouns;
  std::map<std::string, std::vector<SplitPart>> split_lexicon;
  std::set<std::string> punctuation_pos;

  // Resolves an alias to its target; labels and unknowns come back unchanged.
  std::string resolve_label(std::string_view label) const;
  bool is_known_label(std::string_view label) const;

  // Covert pronoun for the given verb agreement, if the table has one.
  std::optional<std::string> covert_pronoun_for(std::string_view person, std::string_view gender,
                                                 std::string_view number) const;

  friend bool operator==(const Schema&, const Schema&) = default;
};

// Parses the sectioned schema config; absent sections take built-in defaults.
Schema load_schema(std::string_view config);
const Schema& default_schema();
std::string_view default_schema_text();

// Canonical text dump and its 64-bit FNV-1a digest in hex.
std::string canonical_schema_text(const Schema& schema);
std::string schema_digest(const Schema& schema);

// Parses "a/TAG + b/TAG" split parts; throws MalformedLine on empty parts.
std::vector<SplitPart> parse_split_parts(std::string_view text);

// Loads "default" (embedded) or a config file path.
Schema load_schema_source(const std::string& source);

// ----- token classes ------------------------------------------------------

// Lemma without PADT sense index ("بدأ_1" -> "بدأ") and without diacritics.
std::string lemma_key(const Token& t);
bool in_lexicon(const std::set<std::string>& lexicon, const Token& t);

bool is_punctuation(const Token& t, const Schema& schema);
bool is_verb(const Token& t);
bool is_strong_verb(const Token& t, const Schema& schema);
bool is_covert(const Token& t);
// Nouns, proper names, adjectives, pronouns, numbers, abbreviations.
bool is_nominal(const Token& t);
bool is_preposition(const Token& t);
bool is_adverb(const Token& t);
std::string coarse_of(std::string_view postag);

// ----- validation ---------------------------------------------------------

enum class Severity { kError, kWarning };
std::string_view to_string(Severity severity);

enum class ViolationCode {
  kUnknownLabel,
  kUnknownPos,
  kUnknownFeature,
  kHeadSelfOrRange,
  kCycle,
  kMultiRoot,
  kRootPunctExtra,
  kVerbWithoutAgent,
  kCovertNotPronoun,
};
std::string_view to_string(ViolationCode code);

struct Violation {
  std::size_t sentence_index = 0;
  std::optional<int> token_id;
  ViolationCode code;
  Severity severity;
  std::string message;
};

std::vector<Violation> validate_sentence(const Sentence& s, const Schema& schema,
                                         std::size_t sentence_index = 0);
std::vector<Violation> validate_treebank(const conllx::Treebank& tb, const Schema& schema);
bool has_errors(const std::vector<Violation>& violations);
std::string format_violation(const Violation& v);

// ----- classification -----------------------------------------------------

enum class SentenceType { kVerbal, kNominal, kNominalWithKana, kNominalWithInna };
std::string_view to_string(SentenceType type);

struct SentenceAnalysis {
  SentenceType type;
  // Id of the word that decided the type: the verb, Kana verb, Inna
  // particle, or the first nominal word.
  int deciding_word = 0;
  // Leading jussive/accusative particle governing the verb (Verbal only).
  std::optional<int> verb_particle;
  bool verb_particle_is_jussive = false;
};

SentenceAnalysis analyze_sentence(const Sentence& s, const Schema& schema);
SentenceType classify_sentence(const Sentence& s, const Schema& schema);

struct GovernorInfo {
  bool governs = false;         // has at least one dependent in the sentence
  bool rule_predicts = false;   // the governor rules expect it to govern
};

GovernorInfo classify_governor(const Token& t, const Sentence& s, const Schema& schema);

}  // namespace i3rab::schema

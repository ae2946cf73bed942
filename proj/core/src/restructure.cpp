#include <algorithm>

#include "i3rab/converter.hpp"
#include "i3rab/strings.hpp"

namespace i3rab::converter {

namespace {

using schema::SentenceType;

[[noreturn]] void failure(const std::string& message) {
  throw ConvertError(ConvertErrc::kRestructureFailure, message);
}

bool is_predicate_label(std::string_view label) {
  return strings::starts_with(label, "PRED-") || strings::starts_with(label, "PREDX-");
}

// Object of a preposition: headed by a P that comes before it.
bool governed_by_preposition(const Sentence& s, const Token& t) {
  return t.head != 0 && t.head < t.id && schema::is_preposition(s.at(t.head));
}

// First nominal word after `from` that is not the object of a preposition.
std::optional<int> find_topic(const Sentence& s, int from) {
  for (const auto& t : s.tokens) {
    if (t.id <= from || schema::is_covert(t)) continue;
    if (schema::is_nominal(t) && !governed_by_preposition(s, t)) return t.id;
  }
  return std::nullopt;
}

std::optional<int> find_predicate(const Sentence& s, const schema::Schema& schema, int topic,
                                  std::optional<int> abolisher) {
  const int topic_head = s.at(topic).head;
  if (topic_head != 0 && topic_head != abolisher.value_or(-1)) return topic_head;
  for (const auto& t : s.tokens) {
    if (t.id == topic || t.id == abolisher || !is_predicate_label(t.deprel)) continue;
    if (t.head == topic || t.head == 0 || (abolisher && t.head == *abolisher)) return t.id;
  }
  if (abolisher) {
    for (const auto& t : s.tokens) {
      if (t.id <= topic || schema::is_punctuation(t, schema) || schema::is_covert(t)) continue;
      if (t.head == *abolisher || t.head == 0) return t.id;
    }
  }
  return std::nullopt;
}

// Attaches remaining content roots to `root` and the sentence-final
// punctuation to 0.
void tidy_roots(Sentence& s, const schema::Schema& schema, int root) {
  const int last = static_cast<int>(s.size());
  for (auto& t : s.tokens) {
    if (t.id == root) continue;
    const bool final_punct = t.id == last && schema::is_punctuation(t, schema);
    if (final_punct) {
      t.head = 0;
    } else if (t.head == 0) {
      t.head = root;
    }
  }
}

void relabel_predicates(Sentence& s, const schema::Schema& schema) {
  for (auto& t : s.tokens) {
    if (!is_predicate_label(t.deprel)) continue;
    const std::string prefix = strings::starts_with(t.deprel, "PREDX-") ? "PREDX-" : "PRED-";
    t.deprel = prefix + predicate_suffix(t, s, schema);
  }
}

}  // namespace

std::string predicate_suffix(const Token& t, const Sentence& s, const schema::Schema& schema) {
  (void)schema;
  if (schema::is_verb(t)) return "VP";
  if (schema::is_preposition(t)) return "PP";
  if (schema::is_adverb(t)) return "ADVP";
  const bool heads_clause = std::any_of(s.tokens.begin(), s.tokens.end(), [&](const Token& d) {
    return d.head == t.id && (is_predicate_label(d.deprel) || schema::is_verb(d));
  });
  return heads_clause ? "NP" : "NOUN";
}

Sentence restructure_heads(const Sentence& input, const ConversionRules& rules) {
  const auto& schema = rules.schema;
  Sentence s = map_labels(input, rules);

  schema::SentenceAnalysis analysis;
  try {
    analysis = schema::analyze_sentence(s, schema);
  } catch (const schema::SchemaError& err) {
    failure(err.what());
  }

  int root = 0;
  switch (analysis.type) {
    case SentenceType::kNominal:
    case SentenceType::kNominalWithInna:
    case SentenceType::kNominalWithKana: {
      const bool nominal = analysis.type == SentenceType::kNominal;
      const std::optional<int> abolisher =
          nominal ? std::nullopt : std::optional<int>(analysis.deciding_word);
      const auto topic = find_topic(s, abolisher.value_or(0));
      if (!topic) failure("no topic found");
      const auto pred = find_predicate(s, schema, *topic, abolisher);
      if (nominal) {
        root = *topic;
        s.at(root).head = 0;
        s.at(root).deprel = "TOPIC";
        if (pred) {
          s.at(*pred).head = root;
          s.at(*pred).deprel = "PRED-NOUN";
        }
      } else {
        root = *abolisher;
        const bool kana = analysis.type == SentenceType::kNominalWithKana;
        Token& head_word = s.at(root);
        head_word.head = 0;
        head_word.deprel = kana ? "VBX" : rules.options.accusative_label;
        s.at(*topic).head = root;
        s.at(*topic).deprel = "TOPICX";
        if (pred) {
          s.at(*pred).head = root;
          s.at(*pred).deprel = "PREDX-NOUN";
        }
      }
      break;
    }
    case SentenceType::kVerbal: {
      const int verb = analysis.deciding_word;
      root = analysis.verb_particle.value_or(verb);
      if (root != verb) {
        s.at(root).deprel =
            analysis.verb_particle_is_jussive ? rules.options.jussive_label : rules.options.accusative_label;
        s.at(verb).head = root;
      }
      s.at(root).head = 0;
      s.at(verb).deprel = "VB";
      break;
    }
  }

  tidy_roots(s, schema, root);
  relabel_predicates(s, schema);

  const auto violations = schema::validate_sentence(s, schema);
  if (schema::has_errors(violations)) {
    for (const auto& v : violations) {
      if (v.severity == schema::Severity::kError) failure(schema::format_violation(v));
    }
  }
  return s;
}

}  // namespace i3rab::converter

#include <algorithm>

#include "i3rab/schema.hpp"

namespace i3rab::schema {

namespace {

bool is_skippable_particle(const Token& t, const Schema& schema) {
  static const std::set<std::string> kParticles = {"C", "F", "I", "G", "-", ""};
  return is_punctuation(t, schema) || kParticles.count(t.cpostag) != 0;
}

std::size_t next_content(const Sentence& s, const Schema& schema, std::size_t from) {
  while (from < s.size() && is_punctuation(s.tokens[from], schema)) ++from;
  return from;
}

bool descends_from(const Sentence& s, int id, int ancestor) {
  int cur = id;
  for (std::size_t steps = 0; cur != 0 && steps <= s.size(); ++steps) {
    cur = s.at(cur).head;
    if (cur == ancestor) return true;
    if (cur < 0 || cur > static_cast<int>(s.size())) return false;
  }
  return false;
}

// Skips adverbial openers ("في الصباح", "قبل فترة"): a preposition or
// adverb together with the contiguous run of its descendants.
std::size_t skip_adverbials(const Sentence& s, std::size_t i) {
  while (i < s.size() && (is_preposition(s.tokens[i]) || is_adverb(s.tokens[i]))) {
    const int anchor = s.tokens[i].id;
    ++i;
    while (i < s.size() && descends_from(s, s.tokens[i].id, anchor)) ++i;
  }
  return i;
}

SentenceAnalysis from_word(const Token& t, const Schema& schema) {
  if (is_verb(t)) {
    return {in_lexicon(schema.kana_sisters, t) ? SentenceType::kNominalWithKana : SentenceType::kVerbal, t.id, {}, false};
  }
  return {SentenceType::kNominal, t.id, {}, false};
}

}  // namespace

std::string_view to_string(SentenceType type) {
  switch (type) {
    case SentenceType::kVerbal: return "Verbal";
    case SentenceType::kNominal: return "Nominal";
    case SentenceType::kNominalWithKana: return "NominalWithKana";
    case SentenceType::kNominalWithInna: return "NominalWithInna";
  }
  return "Unknown";
}

SentenceAnalysis analyze_sentence(const Sentence& s, const Schema& schema) {
  std::size_t i = 0;
  for (; i < s.size(); ++i) {
    const Token& t = s.tokens[i];
    const std::size_t next = next_content(s, schema, i + 1);
    if (next < s.size()) {
      const Token& n = s.tokens[next];
      if (in_lexicon(schema.inna_sisters, t) && is_nominal(n)) {
        return {SentenceType::kNominalWithInna, t.id, {}, false};
      }
      const bool jussive = in_lexicon(schema.jussive_particles, t);
      if ((jussive || in_lexicon(schema.accusative_particles, t)) && is_verb(n)) {
        return {SentenceType::kVerbal, n.id, t.id, jussive};
      }
    }
    if (!is_skippable_particle(t, schema)) break;
  }
  if (i == s.size()) {
    throw SchemaError(SchemaErrc::kUnclassifiable, "sentence has no content word");
  }

  const Token& first = s.tokens[i];
  if (is_verb(first) || is_nominal(first)) return from_word(first, schema);

  // Opening adverbial phrase: the word after it decides when it is a verb
  // or a nominal; otherwise the first nominal not inside a prepositional phrase.
  const std::size_t after = skip_adverbials(s, i);
  if (after < s.size() && (is_verb(s.tokens[after]) || is_nominal(s.tokens[after]))) {
    return from_word(s.tokens[after], schema);
  }
  for (std::size_t j = i; j < s.size(); ++j) {
    if (is_verb(s.tokens[j])) return from_word(s.tokens[j], schema);
  }
  for (std::size_t j = i; j < s.size(); ++j) {
    if (is_nominal(s.tokens[j])) return {SentenceType::kNominal, s.tokens[j].id, {}, false};
  }
  throw SchemaError(SchemaErrc::kUnclassifiable, "sentence has no verb or nominal word");
}

SentenceType classify_sentence(const Sentence& s, const Schema& schema) {
  return analyze_sentence(s, schema).type;
}

GovernorInfo classify_governor(const Token& t, const Sentence& s, const Schema& schema) {
  GovernorInfo info;
  info.governs = std::any_of(s.tokens.begin(), s.tokens.end(), [&](const Token& d) { return d.head == t.id; });
  info.rule_predicts = is_verb(t) || is_preposition(t) || in_lexicon(schema.jussive_particles, t) ||
                       in_lexicon(schema.accusative_particles, t) || in_lexicon(schema.inna_sisters, t) ||
                       (is_nominal(t) && info.governs);
  return info;
}

}  // namespace i3rab::schema

#include <algorithm>
#include <map>

#include "i3rab/converter.hpp"
#include "i3rab/strings.hpp"

namespace i3rab::converter {

namespace {

using schema::Schema;

// Working copy whose token ids are stable keys rather than positions;
// heads refer to keys. New tokens get fresh keys above every existing one.
struct Draft {
  std::vector<Token> tokens;
  int next_key = 0;

  explicit Draft(const Sentence& s) : tokens(s.tokens), next_key(static_cast<int>(s.size()) + 1) {}

  std::size_t position(int key) const {
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      if (tokens[i].id == key) return i;
    }
    return tokens.size();
  }

  // Removes the token at `pos`, sending its dependents to `target` (a key or 0).
  void remove(std::size_t pos, int target) {
    const Token gone = tokens[pos];
    tokens.erase(tokens.begin() + static_cast<std::ptrdiff_t>(pos));
    for (auto& t : tokens) {
      if (t.head == gone.id) t.head = target;
      if (t.head == t.id) t.head = gone.head;
    }
  }

  Sentence finish(const Sentence& original) const {
    std::map<int, int> renumber;
    for (std::size_t i = 0; i < tokens.size(); ++i) renumber[tokens[i].id] = static_cast<int>(i) + 1;
    Sentence out;
    out.comments = original.comments;
    out.tokens = tokens;
    for (auto& t : out.tokens) {
      t.id = renumber.at(t.id);
      t.head = t.head == 0 ? 0 : renumber.at(t.head);
    }
    return out;
  }
};

bool in_scope(const FixAction& a, std::size_t sentence_number) {
  return !a.sentence || *a.sentence == sentence_number;
}

std::string coarse_tag(std::string_view postag) {
  return postag.empty() ? std::string() : std::string(postag.substr(0, 1));
}

std::vector<Token> make_parts(const Token& t, const std::vector<schema::SplitPart>& parts) {
  std::vector<Token> out;
  for (const auto& p : parts) {
    Token part;
    part.form = p.form;
    part.lemma = p.form;
    part.postag = p.postag.empty() ? t.postag : p.postag;
    part.cpostag = p.postag.empty() ? t.cpostag : coarse_tag(p.postag);
    part.head = 0;
    out.push_back(std::move(part));
  }
  return out;
}

// Inserts the parts of the token at `pos` in its place and wires them up:
// a leading preposition heads the rest, a leading conjunction hangs on the
// following part, otherwise the first part stands for the original word.
void apply_split(Draft& d, std::size_t pos, std::vector<Token> parts) {
  const Token original = d.tokens[pos];
  const bool prep_first = parts.front().cpostag == "P";
  const bool conj_first = parts.front().cpostag == "C" && parts.size() > 1;
  const std::size_t anchor = conj_first ? 1 : 0;
  const std::size_t content = prep_first ? parts.size() - 1 : anchor;

  std::vector<int> keys(parts.size());
  for (std::size_t i = 0; i < parts.size(); ++i) keys[i] = i == anchor ? original.id : d.next_key++;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    Token& p = parts[i];
    p.id = keys[i];
    if (i == content) p.feats = original.feats;
    if (i == anchor) {
      p.head = original.head;
      p.deprel = original.deprel;
    } else if (conj_first && i == 0) {
      p.head = keys[1];
      p.deprel = "COORD";
    } else {
      p.head = keys[i - 1];
      p.deprel = "GEN";
    }
  }
  if (content != anchor) {
    for (auto& t : d.tokens) {
      if (t.head == original.id && t.id != original.id) t.head = keys[content];
    }
  }
  d.tokens.erase(d.tokens.begin() + static_cast<std::ptrdiff_t>(pos));
  d.tokens.insert(d.tokens.begin() + static_cast<std::ptrdiff_t>(pos), parts.begin(), parts.end());
}

void apply_fix_list(Draft& d, const ConversionRules& rules, std::size_t sentence_number,
                    ConversionReport& report) {
  for (std::size_t pos = 0; pos < d.tokens.size();) {
    const FixAction* hit = nullptr;
    for (const auto& a : rules.fix_list) {
      if (in_scope(a, sentence_number) && a.match == d.tokens[pos].form) {
        hit = &a;
        break;
      }
    }
    if (hit == nullptr) {
      ++pos;
      continue;
    }
    switch (hit->kind) {
      case FixAction::Kind::kMerge: {
        if (pos + 1 >= d.tokens.size()) {
          ++pos;
          break;
        }
        Token& next = d.tokens[pos + 1];
        next.form = d.tokens[pos].form + next.form;
        d.remove(pos, next.id);
        ++report.merged;
        break;
      }
      case FixAction::Kind::kDelete:
        d.remove(pos, d.tokens[pos].head);
        ++report.deleted;
        break;
      case FixAction::Kind::kSplit: {
        auto parts = make_parts(d.tokens[pos], hit->parts);
        const std::size_t n = parts.size();
        apply_split(d, pos, std::move(parts));
        report.separated += n - 1;
        pos += n;
        break;
      }
    }
  }
}

void apply_split_lexicon(Draft& d, const Schema& schema, ConversionReport& report) {
  for (std::size_t pos = 0; pos < d.tokens.size();) {
    const auto it = schema.split_lexicon.find(d.tokens[pos].form);
    if (it == schema.split_lexicon.end()) {
      ++pos;
      continue;
    }
    auto parts = split_fused_word(d.tokens[pos], schema);
    const std::size_t n = parts.size();
    apply_split(d, pos, std::move(parts));
    report.separated += n - 1;
    pos += n;
  }
}

void apply_detach(Draft& d, const Schema& schema, ConversionReport& report) {
  for (std::size_t pos = 0; pos < d.tokens.size(); ++pos) {
    if (!schema::is_strong_verb(d.tokens[pos], schema)) continue;
    auto split = detach_joined_pronoun(d.tokens[pos], schema);
    if (!split) continue;
    auto& [verb, pronoun] = *split;
    pronoun.id = d.next_key++;
    pronoun.head = verb.id;
    pronoun.deprel = "AGENT";
    d.tokens[pos] = std::move(verb);
    d.tokens.insert(d.tokens.begin() + static_cast<std::ptrdiff_t>(pos) + 1, std::move(pronoun));
    ++report.joined_pronoun;
    ++pos;
  }
}

void apply_covert(Draft& d, const Schema& schema, ConversionReport& report) {
  for (std::size_t pos = 0; pos < d.tokens.size(); ++pos) {
    if (!schema::is_strong_verb(d.tokens[pos], schema)) continue;
    Sentence view;
    view.tokens = d.tokens;
    auto covert = surmise_covert_pronoun(d.tokens[pos], view, schema);
    if (!covert) continue;
    covert->id = d.next_key++;
    covert->head = d.tokens[pos].id;
    d.tokens.insert(d.tokens.begin() + static_cast<std::ptrdiff_t>(pos) + 1, std::move(*covert));
    ++report.dropped_pronoun;
    ++pos;
  }
}

void copy_agreement(const Token& from, Token& to) {
  for (const char* key : {"Person", "Gender", "Number"}) {
    if (const auto v = from.feats.get(key)) to.feats.set(key, *v);
  }
}

}  // namespace

std::optional<std::pair<Token, Token>> detach_joined_pronoun(const Token& t, const Schema& schema) {
  if (!schema::is_verb(t)) return std::nullopt;
  const auto person = t.feats.get("Person").value_or("");
  const auto gender = t.feats.get("Gender").value_or("");
  const auto number = t.feats.get("Number").value_or("");
  for (const auto& [suffix, descriptor] : schema.joined_nominative_suffixes) {
    if (!strings::ends_with(t.form, suffix) || t.form.size() <= suffix.size()) continue;
    if (!descriptor.agreement.matches(person, gender, number)) continue;
    Token verb = t;
    verb.form = t.form.substr(0, t.form.size() - suffix.size());
    if (verb.feats.get("Number")) verb.feats.set("Number", "S");

    Token pronoun;
    pronoun.form = suffix;
    pronoun.lemma = descriptor.pronoun + "_1";
    pronoun.cpostag = "S";
    pronoun.postag = "S-";
    copy_agreement(t, pronoun);
    pronoun.feats.set("Case", "1");
    pronoun.deprel = "AGENT";
    return std::make_pair(std::move(verb), std::move(pronoun));
  }
  return std::nullopt;
}

std::optional<Token> surmise_covert_pronoun(const Token& v, const Sentence& s, const Schema& schema) {
  std::size_t pos = 0;
  while (pos < s.size() && s.tokens[pos].id != v.id) ++pos;
  std::size_t next = pos + 1;
  // Object clitics written on the verb come before the agent ("ضربه زيد").
  while (next < s.size()) {
    const Token& t = s.tokens[next];
    const bool object_clitic = t.cpostag == "S" && t.head == v.id && (t.deprel == "Obj" || t.deprel == "OBJ");
    if (!object_clitic) break;
    ++next;
  }
  if (next < s.size()) {
    const Token& n = s.tokens[next];
    const bool nominative = (schema::is_nominal(n) && n.feats.has("Case", "1"));
    const bool agent_label = n.head == v.id && (n.deprel == "Sb" || schema.resolve_label(n.deprel) == "AGENT");
    if (nominative || agent_label) return std::nullopt;
  }

  const auto person = v.feats.get("Person").value_or("");
  const auto gender = v.feats.get("Gender").value_or("");
  const auto number = v.feats.get("Number").value_or("");
  const auto pronoun = schema.covert_pronoun_for(person, gender, number);
  if (!pronoun) {
    throw ConvertError(ConvertErrc::kNoCovertMapping,
                       "no covert pronoun for verb '" + v.form + "' (Person=" + std::string(person) +
                           " Gender=" + std::string(gender) + " Number=" + std::string(number) + ")");
  }
  Token covert;
  covert.form = "*" + *pronoun;
  covert.lemma = *pronoun + "_1";
  covert.cpostag = "S";
  covert.postag = "S-";
  copy_agreement(v, covert);
  covert.feats.set("Case", "1");
  covert.feats.set("Covert", "Y");
  covert.head = v.id;
  covert.deprel = "AGENT";
  return covert;
}

std::vector<Token> split_fused_word(const Token& t, const Schema& schema) {
  const auto it = schema.split_lexicon.find(t.form);
  if (it == schema.split_lexicon.end()) return {t};
  return make_parts(t, it->second);
}

RetokenizeResult retokenize_sentence(const Sentence& s, const ConversionRules& rules,
                                     std::size_t sentence_number) {
  ConversionReport report;
  report.input_tokens = s.size();
  Draft d(s);
  apply_fix_list(d, rules, sentence_number, report);
  apply_split_lexicon(d, rules.schema, report);
  if (rules.options.detach_joined) apply_detach(d, rules.schema, report);
  if (rules.options.insert_covert) apply_covert(d, rules.schema, report);
  Sentence out = d.finish(s);
  report.output_tokens = out.size();
  return {std::move(out), report};
}

}  // namespace i3rab::converter

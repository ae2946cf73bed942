#include <map>
#include <vector>

#include "i3rab/converter.hpp"
#include "i3rab/strings.hpp"

namespace i3rab::converter {

namespace {

struct Line {
  std::string text;
  int number;
};

using Sections = std::map<std::string, std::vector<Line>>;

[[noreturn]] void fail(const std::string& message, int line) {
  throw ConvertError(ConvertErrc::kMalformedRules, "rules line " + std::to_string(line) + ": " + message);
}

Sections parse_sections(std::string_view text) {
  Sections sections;
  std::vector<Line>* current = nullptr;
  int number = 0;
  for (auto raw : strings::lines(text)) {
    ++number;
    const auto line = strings::trim(raw);
    if (line.empty() || line.front() == '#') continue;
    if (line.front() == '[' && line.back() == ']') {
      const std::string name(strings::trim(line.substr(1, line.size() - 2)));
      if (name != "label_map" && name != "fix_list" && name != "options") fail("unknown section [" + name + "]", number);
      if (sections.count(name) != 0) fail("section [" + name + "] repeated", number);
      current = &sections[name];
      continue;
    }
    if (current == nullptr) fail("entry outside any section", number);
    current->push_back({std::string(line), number});
  }
  return sections;
}

bool parse_bool(std::string_view v, int line) {
  if (v == "true" || v == "yes" || v == "1") return true;
  if (v == "false" || v == "no" || v == "0") return false;
  fail("expected true or false, got '" + std::string(v) + "'", line);
}

FixAction parse_fix(const Line& line) {
  const auto colon = strings::split_once(line.text, ":");
  if (!colon) fail("expected 'action: form'", line.number);
  FixAction action;
  const auto head = strings::split_ws(colon->first);
  if (head.empty()) fail("missing fix action", line.number);
  if (head[0] == "merge") {
    action.kind = FixAction::Kind::kMerge;
  } else if (head[0] == "delete") {
    action.kind = FixAction::Kind::kDelete;
  } else if (head[0] == "split") {
    action.kind = FixAction::Kind::kSplit;
  } else {
    fail("unknown fix action '" + std::string(head[0]) + "'", line.number);
  }
  if (head.size() == 2 && strings::starts_with(head[1], "@")) {
    const auto n = strings::parse_int(head[1].substr(1));
    if (!n || *n < 1) fail("bad sentence scope '" + std::string(head[1]) + "'", line.number);
    action.sentence = static_cast<std::size_t>(*n);
  } else if (head.size() != 1) {
    fail("unexpected text before ':'", line.number);
  }

  std::string_view body = strings::trim(colon->second);
  if (action.kind == FixAction::Kind::kSplit) {
    const auto arrow = strings::split_once(body, "->");
    if (!arrow) fail("split needs 'form -> part + part'", line.number);
    action.match = std::string(strings::trim(arrow->first));
    try {
      action.parts = schema::parse_split_parts(arrow->second);
    } catch (const schema::SchemaError& err) {
      fail(err.what(), line.number);
    }
    if (action.parts.size() < 2) fail("split needs two or more parts", line.number);
  } else {
    action.match = std::string(body);
  }
  if (action.match.empty()) fail("empty form", line.number);
  return action;
}

ConversionRules build(const Sections& sections, const schema::Schema& schema) {
  ConversionRules rules;
  rules.schema = schema;
  for (const auto& line : sections.at("label_map")) {
    const auto arrow = strings::split_once(line.text, "->");
    if (!arrow) fail("expected 'KEY -> LABEL'", line.number);
    const std::string key(strings::trim(arrow->first));
    const std::string target = schema.resolve_label(strings::trim(arrow->second));
    if (schema.relation_labels.count(target) == 0) {
      fail("label map target '" + target + "' is not a schema label", line.number);
    }
    if (!rules.label_map.emplace(key, target).second) fail("key '" + key + "' repeated", line.number);
  }
  for (const auto& line : sections.at("fix_list")) rules.fix_list.push_back(parse_fix(line));
  for (const auto& line : sections.at("options")) {
    const auto kv = strings::split_once(line.text, "=");
    if (!kv) fail("expected 'name = value'", line.number);
    const auto key = strings::trim(kv->first);
    const auto value = strings::trim(kv->second);
    if (key == "insert_covert") {
      rules.options.insert_covert = parse_bool(value, line.number);
    } else if (key == "detach_joined") {
      rules.options.detach_joined = parse_bool(value, line.number);
    } else if (key == "jussive_label" || key == "accusative_label") {
      const std::string label = schema.resolve_label(value);
      if (schema.relation_labels.count(label) == 0) fail("'" + label + "' is not a schema label", line.number);
      (key == "jussive_label" ? rules.options.jussive_label : rules.options.accusative_label) = label;
    } else {
      fail("unknown option '" + std::string(key) + "'", line.number);
    }
  }
  return rules;
}

const Sections& default_sections() {
  static const Sections kDefaults = parse_sections(default_rules_text());
  return kDefaults;
}

}  // namespace

std::string_view to_string(ConvertErrc errc) {
  switch (errc) {
    case ConvertErrc::kNoCovertMapping: return "NO_COVERT_MAPPING";
    case ConvertErrc::kRestructureFailure: return "RESTRUCTURE_FAILURE";
    case ConvertErrc::kOverrideIndexOutOfRange: return "OVERRIDE_INDEX_OUT_OF_RANGE";
    case ConvertErrc::kInvalidOverride: return "INVALID_OVERRIDE";
    case ConvertErrc::kMalformedRules: return "MALFORMED_RULES";
  }
  return "UNKNOWN";
}

ConversionRules load_rules(std::string_view text, const schema::Schema& schema) {
  Sections sections = parse_sections(text);
  for (const auto& [name, lines] : default_sections()) sections.emplace(name, lines);
  return build(sections, schema);
}

ConversionRules default_rules(const schema::Schema& schema) { return build(default_sections(), schema); }

ConversionRules load_rules_source(const std::string& source, const schema::Schema& schema) {
  if (source.empty() || source == "default") return default_rules(schema);
  return load_rules(strings::read_file(source), schema);
}

std::string map_label(const Token& t, const Token* head, const ConversionRules& rules) {
  const auto& schema = rules.schema;
  if (schema.is_known_label(t.deprel)) return schema.resolve_label(t.deprel);
  const std::string head_cpos = head == nullptr ? "ROOT" : head->cpostag;
  const std::string keys[] = {
      t.deprel + "/" + t.cpostag, t.deprel + "^" + head_cpos, "*/" + t.cpostag, "*^" + head_cpos, t.deprel,
  };
  for (const auto& key : keys) {
    if (const auto it = rules.label_map.find(key); it != rules.label_map.end()) return it->second;
  }
  return t.deprel;
}

Sentence map_labels(const Sentence& s, const ConversionRules& rules) {
  Sentence out = s;
  for (auto& t : out.tokens) {
    const Token* head = t.head > 0 && t.head <= static_cast<int>(s.size()) ? &s.at(t.head) : nullptr;
    t.deprel = map_label(s.at(t.id), head, rules);
  }
  return out;
}

ConversionReport& ConversionReport::operator+=(const ConversionReport& o) {
  dropped_pronoun += o.dropped_pronoun;
  joined_pronoun += o.joined_pronoun;
  separated += o.separated;
  merged += o.merged;
  deleted += o.deleted;
  overridden_sentences += o.overridden_sentences;
  nonprojective_outputs += o.nonprojective_outputs;
  restructure_failures += o.restructure_failures;
  input_tokens += o.input_tokens;
  output_tokens += o.output_tokens;
  return *this;
}

long long ConversionReport::predicted_delta() const {
  return static_cast<long long>(dropped_pronoun + joined_pronoun + separated) -
         static_cast<long long>(merged + deleted);
}

bool ConversionReport::balanced() const {
  return static_cast<long long>(output_tokens) - static_cast<long long>(input_tokens) == predicted_delta();
}

std::string ConversionReport::to_text() const {
  const std::pair<const char*, std::size_t> rows[] = {
      {"dropped_pronoun", dropped_pronoun},
      {"joined_pronoun", joined_pronoun},
      {"separated", separated},
      {"merged", merged},
      {"deleted", deleted},
      {"overridden_sentences", overridden_sentences},
      {"nonprojective_outputs", nonprojective_outputs},
      {"restructure_failures", restructure_failures},
      {"input_tokens", input_tokens},
      {"output_tokens", output_tokens},
  };
  std::string out;
  for (const auto& [key, value] : rows) out += std::string(key) + "\t" + std::to_string(value) + "\n";
  return out;
}

}  // namespace i3rab::converter

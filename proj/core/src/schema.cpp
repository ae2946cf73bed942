#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdio>
#include <map>

#include "i3rab/schema.hpp"
#include "i3rab/strings.hpp"

namespace i3rab::schema {

namespace {

constexpr std::array<std::string_view, 12> kSections = {
    "labels",       "label_aliases",        "pos",
    "feats",        "kana_sisters",         "inna_sisters",
    "jussive",      "accusative_particles", "joined_nominative_suffixes",
    "covert_pronouns", "split_lexicon",     "punctuation_pos",
};

struct Entry {
  std::string text;
  int line;
};

using SectionMap = std::map<std::string, std::vector<Entry>>;

[[noreturn]] void fail(SchemaErrc errc, const std::string& message, int line = 0) {
  if (line > 0) throw SchemaError(errc, "line " + std::to_string(line) + ": " + message);
  throw SchemaError(errc, message);
}

SectionMap parse_sections(std::string_view config) {
  SectionMap sections;
  std::vector<Entry>* current = nullptr;
  int line_no = 0;
  for (auto raw : strings::lines(config)) {
    ++line_no;
    const auto line = strings::trim(raw);
    if (line.empty() || line.front() == '#') continue;
    if (line.front() == '[') {
      if (line.back() != ']') fail(SchemaErrc::kMalformedLine, "unterminated section header", line_no);
      const std::string name(strings::trim(line.substr(1, line.size() - 2)));
      if (std::find(kSections.begin(), kSections.end(), name) == kSections.end()) {
        fail(SchemaErrc::kUnknownSection, "unknown section [" + name + "]", line_no);
      }
      if (sections.count(name) != 0) fail(SchemaErrc::kDuplicateEntry, "section [" + name + "] repeated", line_no);
      current = &sections[name];
      continue;
    }
    if (current == nullptr) fail(SchemaErrc::kUnknownSection, "entry outside any section", line_no);
    current->push_back({std::string(line), line_no});
  }
  return sections;
}

std::set<std::string> parse_set(const std::vector<Entry>& entries, std::string_view section) {
  std::set<std::string> out;
  for (const auto& e : entries) {
    if (!out.insert(e.text).second) {
      fail(SchemaErrc::kDuplicateEntry, "'" + e.text + "' repeated in [" + std::string(section) + "]", e.line);
    }
  }
  return out;
}

std::pair<std::string, std::string> parse_arrow(const Entry& e) {
  const auto parts = strings::split_once(e.text, "->");
  if (!parts) fail(SchemaErrc::kMalformedLine, "expected 'A -> B', got '" + e.text + "'", e.line);
  const auto lhs = strings::trim(parts->first);
  const auto rhs = strings::trim(parts->second);
  if (lhs.empty() || rhs.empty()) fail(SchemaErrc::kMalformedLine, "empty side in '" + e.text + "'", e.line);
  return {std::string(lhs), std::string(rhs)};
}

std::set<std::string> parse_alternatives(std::string_view field) {
  field = strings::trim(field);
  std::set<std::string> values;
  if (field == "*") return values;
  for (auto v : strings::split(field, '|')) values.emplace(strings::trim(v));
  return values;
}

AgreementPattern parse_agreement(std::string_view person, std::string_view gender, std::string_view number) {
  return {parse_alternatives(person), parse_alternatives(gender), parse_alternatives(number)};
}

std::vector<std::string_view> comma_fields(std::string_view s) {
  std::vector<std::string_view> out;
  for (auto f : strings::split(s, ',')) out.push_back(strings::trim(f));
  return out;
}

std::string join_alternatives(const std::set<std::string>& values) {
  if (values.empty()) return "*";
  std::string out;
  for (const auto& v : values) {
    if (!out.empty()) out += '|';
    out += v;
  }
  return out;
}

std::string agreement_text(const AgreementPattern& a) {
  return join_alternatives(a.persons) + "," + join_alternatives(a.genders) + "," + join_alternatives(a.numbers);
}

Schema build(const SectionMap& sections) {
  Schema s;
  auto section = [&](std::string_view name) -> const std::vector<Entry>& {
    static const std::vector<Entry> kNone;
    const auto it = sections.find(std::string(name));
    return it == sections.end() ? kNone : it->second;
  };

  s.relation_labels = parse_set(section("labels"), "labels");
  s.pos_tags = parse_set(section("pos"), "pos");
  s.kana_sisters = parse_set(section("kana_sisters"), "kana_sisters");
  s.inna_sisters = parse_set(section("inna_sisters"), "inna_sisters");
  s.jussive_particles = parse_set(section("jussive"), "jussive");
  s.accusative_particles = parse_set(section("accusative_particles"), "accusative_particles");
  s.punctuation_pos = parse_set(section("punctuation_pos"), "punctuation_pos");

  for (const auto& e : section("label_aliases")) {
    auto [from, to] = parse_arrow(e);
    if (!s.label_aliases.emplace(from, to).second) {
      fail(SchemaErrc::kDuplicateEntry, "alias '" + from + "' repeated", e.line);
    }
  }

  for (const auto& e : section("feats")) {
    const auto kv = strings::split_once(e.text, "=");
    if (!kv) fail(SchemaErrc::kMalformedLine, "expected 'Key = v1,v2', got '" + e.text + "'", e.line);
    const std::string key(strings::trim(kv->first));
    std::set<std::string> values;
    for (auto v : comma_fields(kv->second)) {
      if (!v.empty() && !values.emplace(v).second) {
        fail(SchemaErrc::kDuplicateEntry, "value '" + std::string(v) + "' repeated for " + key, e.line);
      }
    }
    if (!s.feature_values.emplace(key, std::move(values)).second) {
      fail(SchemaErrc::kDuplicateEntry, "feature '" + key + "' repeated", e.line);
    }
  }

  for (const auto& e : section("joined_nominative_suffixes")) {
    auto [suffix, rhs] = parse_arrow(e);
    const auto f = comma_fields(rhs);
    if (f.size() != 4) fail(SchemaErrc::kMalformedLine, "expected 'person,gender,number,form'", e.line);
    const bool dup = std::any_of(s.joined_nominative_suffixes.begin(), s.joined_nominative_suffixes.end(),
                                 [&](const auto& p) { return p.first == suffix; });
    if (dup) fail(SchemaErrc::kDuplicateEntry, "suffix '" + suffix + "' repeated", e.line);
    s.joined_nominative_suffixes.push_back({suffix, {parse_agreement(f[0], f[1], f[2]), std::string(f[3])}});
  }

  for (const auto& e : section("covert_pronouns")) {
    auto [lhs, form] = parse_arrow(e);
    const auto f = comma_fields(lhs);
    if (f.size() != 3) fail(SchemaErrc::kMalformedLine, "expected 'person,gender,number -> form'", e.line);
    CovertEntry entry{parse_agreement(f[0], f[1], f[2]), form};
    const bool dup = std::any_of(s.covert_pronouns.begin(), s.covert_pronouns.end(),
                                 [&](const CovertEntry& c) { return c.agreement == entry.agreement; });
    if (dup) fail(SchemaErrc::kDuplicateEntry, "covert pronoun key '" + lhs + "' repeated", e.line);
    s.covert_pronouns.push_back(std::move(entry));
  }

  for (const auto& e : section("split_lexicon")) {
    auto [fused, rhs] = parse_arrow(e);
    std::vector<SplitPart> parts;
    try {
      parts = parse_split_parts(rhs);
    } catch (const SchemaError& err) {
      fail(SchemaErrc::kMalformedLine, err.what(), e.line);
    }
    if (parts.size() < 2) fail(SchemaErrc::kMalformedLine, "split of '" + fused + "' needs two or more parts", e.line);
    if (!s.split_lexicon.emplace(fused, std::move(parts)).second) {
      fail(SchemaErrc::kDuplicateEntry, "split entry '" + fused + "' repeated", e.line);
    }
  }

  for (const auto& [from, to] : s.label_aliases) {
    if (s.relation_labels.count(to) == 0) {
      fail(SchemaErrc::kAliasTargetMissing, "alias '" + from + "' targets unknown label '" + to + "'");
    }
  }
  return s;
}

const SectionMap& default_sections() {
  static const SectionMap kDefaults = parse_sections(default_schema_text());
  return kDefaults;
}

// A word-initial alef with hamza or madda (أ إ آ) folds to bare alef, so
// "ان" and "إن" compare equal while "كأن" and "كان" stay distinct.
std::string fold_alef(std::string_view s) {
  if (s.size() >= 2 && static_cast<unsigned char>(s[0]) == 0xD8) {
    const auto n = static_cast<unsigned char>(s[1]);
    if (n == 0xA3 || n == 0xA5 || n == 0xA2) return "\xD8\xA7" + std::string(s.substr(2));
  }
  return std::string(s);
}

std::string lexical_key(std::string_view s) { return fold_alef(strings::strip_diacritics(s)); }

}  // namespace

std::string_view to_string(SchemaErrc errc) {
  switch (errc) {
    case SchemaErrc::kUnknownSection: return "UNKNOWN_SECTION";
    case SchemaErrc::kDuplicateEntry: return "DUPLICATE_ENTRY";
    case SchemaErrc::kAliasTargetMissing: return "ALIAS_TARGET_MISSING";
    case SchemaErrc::kMalformedLine: return "MALFORMED_LINE";
    case SchemaErrc::kUnclassifiable: return "UNCLASSIFIABLE";
  }
  return "UNKNOWN";
}

bool AgreementPattern::matches(std::string_view person, std::string_view gender,
                               std::string_view number) const {
  auto accepts = [](const std::set<std::string>& values, std::string_view v) {
    return values.empty() || values.count(std::string(v)) != 0;
  };
  return accepts(persons, person) && accepts(genders, gender) && accepts(numbers, number);
}

std::string Schema::resolve_label(std::string_view label) const {
  const auto it = label_aliases.find(std::string(label));
  return it == label_aliases.end() ? std::string(label) : it->second;
}

bool Schema::is_known_label(std::string_view label) const {
  return relation_labels.count(std::string(label)) != 0 || label_aliases.count(std::string(label)) != 0;
}

std::optional<std::string> Schema::covert_pronoun_for(std::string_view person, std::string_view gender,
                                                      std::string_view number) const {
  for (const auto& entry : covert_pronouns) {
    if (entry.agreement.matches(person, gender, number)) return entry.pronoun;
  }
  return std::nullopt;
}

std::vector<SplitPart> parse_split_parts(std::string_view text) {
  std::vector<SplitPart> parts;
  for (auto piece : strings::split(text, '+')) {
    piece = strings::trim(piece);
    if (piece.empty()) throw SchemaError(SchemaErrc::kMalformedLine, "empty part in '" + std::string(text) + "'");
    const auto slash = piece.rfind('/');
    if (slash != std::string_view::npos && slash > 0) {
      parts.push_back({std::string(piece.substr(0, slash)), std::string(piece.substr(slash + 1))});
    } else {
      parts.push_back({std::string(piece), ""});
    }
  }
  return parts;
}

Schema load_schema(std::string_view config) {
  SectionMap sections = parse_sections(config);
  for (const auto& [name, entries] : default_sections()) {
    sections.emplace(name, entries);  // only fills sections the config lacks
  }
  return build(sections);
}

const Schema& default_schema() {
  static const Schema kDefault = build(default_sections());
  return kDefault;
}

Schema load_schema_source(const std::string& source) {
  if (source.empty() || source == "default") return default_schema();
  return load_schema(strings::read_file(source));
}

std::string canonical_schema_text(const Schema& s) {
  std::string out;
  auto set_section = [&](std::string_view name, const std::set<std::string>& values) {
    out += "[" + std::string(name) + "]\n";
    for (const auto& v : values) out += v + "\n";
  };
  set_section("labels", s.relation_labels);
  out += "[label_aliases]\n";
  for (const auto& [from, to] : s.label_aliases) out += from + " -> " + to + "\n";
  set_section("pos", s.pos_tags);
  out += "[feats]\n";
  for (const auto& [key, values] : s.feature_values) {
    std::string joined;
    for (const auto& v : values) joined += (joined.empty() ? "" : ",") + v;
    out += key + " = " + joined + "\n";
  }
  set_section("kana_sisters", s.kana_sisters);
  set_section("inna_sisters", s.inna_sisters);
  set_section("jussive", s.jussive_particles);
  set_section("accusative_particles", s.accusative_particles);
  out += "[joined_nominative_suffixes]\n";
  for (const auto& [suffix, d] : s.joined_nominative_suffixes) {
    out += suffix + " -> " + agreement_text(d.agreement) + "," + d.pronoun + "\n";
  }
  out += "[covert_pronouns]\n";
  for (const auto& c : s.covert_pronouns) out += agreement_text(c.agreement) + " -> " + c.pronoun + "\n";
  out += "[split_lexicon]\n";
  for (const auto& [fused, parts] : s.split_lexicon) {
    out += fused + " ->";
    for (std::size_t i = 0; i < parts.size(); ++i) {
      out += (i == 0 ? " " : " + ") + parts[i].form;
      if (!parts[i].postag.empty()) out += "/" + parts[i].postag;
    }
    out += "\n";
  }
  set_section("punctuation_pos", s.punctuation_pos);
  return out;
}

std::string schema_digest(const Schema& schema) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : canonical_schema_text(schema)) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

std::string lemma_key(const Token& t) {
  std::string_view lemma = t.lemma;
  // PADT sense index: "بدأ_1"; some renderings put it first ("1_بدأ").
  if (const auto pos = lemma.rfind('_'); pos != std::string_view::npos && pos > 0 &&
                                         strings::parse_int(lemma.substr(pos + 1))) {
    lemma = lemma.substr(0, pos);
  } else if (const auto p = lemma.find('_'); p != std::string_view::npos && p > 0 &&
                                             strings::parse_int(lemma.substr(0, p))) {
    lemma = lemma.substr(p + 1);
  }
  return strings::strip_diacritics(lemma);
}

bool in_lexicon(const std::set<std::string>& lexicon, const Token& t) {
  const std::string lemma = lexical_key(lemma_key(t));
  const std::string form = lexical_key(t.form);
  for (const auto& entry : lexicon) {
    const std::string key = lexical_key(entry);
    if ((!lemma.empty() && key == lemma) || key == form) return true;
  }
  return false;
}

std::string coarse_of(std::string_view postag) {
  if (postag.empty()) return {};
  return std::string(postag.substr(0, 1));
}

bool is_punctuation(const Token& t, const Schema& schema) {
  if (schema.punctuation_pos.count(t.postag) != 0) return true;
  return !t.cpostag.empty() && schema.punctuation_pos.count(t.cpostag + "-") != 0;
}

bool is_verb(const Token& t) { return t.cpostag == "V"; }

bool is_strong_verb(const Token& t, const Schema& schema) {
  return is_verb(t) && !in_lexicon(schema.kana_sisters, t);
}

bool is_covert(const Token& t) { return t.feats.has("Covert", "Y"); }

bool is_nominal(const Token& t) {
  static const std::set<std::string> kNominal = {"N", "Z", "A", "S", "Q", "Y"};
  return kNominal.count(t.cpostag) != 0;
}

bool is_preposition(const Token& t) { return t.cpostag == "P"; }

bool is_adverb(const Token& t) { return t.cpostag == "D"; }

}  // namespace i3rab::schema

#include "i3rab/conllx.hpp"

#include <algorithm>

#include "i3rab/strings.hpp"

namespace i3rab::conllx {

namespace {

constexpr std::string_view kEmpty = "_";
constexpr std::size_t kColumns = 10;

bool is_empty_marker(std::string_view field) { return field.empty() || field == kEmpty; }

// PHEAD/PDEPREL also accept "-" as printed in some published tables.
bool is_optional_empty(std::string_view field) {
  return is_empty_marker(field) || field == "-";
}

std::string field_or_empty(std::string_view field) {
  return is_empty_marker(field) ? std::string() : std::string(field);
}

std::string_view out(const std::string& value) {
  return value.empty() ? kEmpty : std::string_view(value);
}

[[noreturn]] void fail(ConllErrc errc, const std::string& what, int line) {
  std::string message = what;
  if (line > 0) message = "line " + std::to_string(line) + ": " + message;
  throw ConllError(errc, message, line);
}

Token parse_row(std::string_view row, int line, const ReadOptions& options) {
  const auto fields = strings::split(row, '\t');
  if (fields.size() < 4 || fields.size() > kColumns) {
    fail(ConllErrc::kMalformedRow,
         "expected 4 to 10 tab-separated columns, got " + std::to_string(fields.size()), line);
  }

  // Compact rows carry ID FORM HEAD DEPREL; longer rows are positional.
  std::vector<std::string_view> cols(kColumns);
  std::string joined_feats;
  const bool collapsed = fields.size() > 4 && fields.size() < kColumns &&
                         std::any_of(fields.begin() + 2, fields.end(), [](std::string_view f) {
                           return f.find(' ') != std::string_view::npos;
                         });
  if (collapsed) {
    // Rows printed with spaces in place of some tabs, e.g.
    // "1<TAB>form<TAB>lemma<TAB>N N- Case=1 Defin=R<TAB>0<TAB>SUBJ<TAB>_<TAB>_".
    std::vector<std::string_view> items;
    for (std::size_t i = 2; i < fields.size(); ++i) {
      for (auto item : strings::split_ws(fields[i])) items.push_back(item);
    }
    if (items.size() < 5) fail(ConllErrc::kMalformedRow, "too few columns in space-separated row", line);
    std::size_t next = 3;
    if (items[3].find('=') != std::string_view::npos) {
      while (next < items.size() && items[next].find('=') != std::string_view::npos) {
        if (!joined_feats.empty()) joined_feats += '|';
        joined_feats += items[next++];
      }
    } else if (is_empty_marker(items[3])) {
      ++next;
    }
    const std::size_t rest = items.size() - next;
    if (rest < 2 || rest > 4) fail(ConllErrc::kMalformedRow, "cannot recover columns of space-separated row", line);
    cols[0] = fields[0];
    cols[1] = fields[1];
    cols[2] = items[0];
    cols[3] = items[1];
    cols[4] = items[2];
    cols[5] = joined_feats;
    for (std::size_t k = 0; k < rest; ++k) cols[6 + k] = items[next + k];
  } else if (fields.size() == 4) {
    cols[0] = fields[0];
    cols[1] = fields[1];
    cols[6] = fields[2];
    cols[7] = fields[3];
  } else {
    std::copy(fields.begin(), fields.end(), cols.begin());
  }

  Token t;
  const auto id = strings::parse_int(cols[0]);
  if (!id || *id < 1) fail(ConllErrc::kMalformedRow, "non-numeric or non-positive ID '" + std::string(cols[0]) + "'", line);
  t.id = *id;

  if (cols[1].empty()) fail(ConllErrc::kMalformedRow, "empty FORM", line);
  t.form = std::string(cols[1]);
  t.lemma = field_or_empty(cols[2]);
  t.cpostag = field_or_empty(cols[3]);
  t.postag = field_or_empty(cols[4]);
  try {
    t.feats = parse_feats(cols[5]);
  } catch (const ConllError& e) {
    fail(e.errc(), e.what(), line);
  }

  const bool head_missing = !collapsed && fields.size() != 4 && fields.size() < 7;
  if (head_missing || is_empty_marker(cols[6])) {
    if (!options.allow_missing_heads) fail(ConllErrc::kMalformedRow, "missing HEAD", line);
    t.head = 0;
  } else {
    const auto head = strings::parse_int(cols[6]);
    if (!head || *head < 0) fail(ConllErrc::kMalformedRow, "non-numeric HEAD '" + std::string(cols[6]) + "'", line);
    t.head = *head;
  }
  t.deprel = field_or_empty(cols[7]);

  if (!is_optional_empty(cols[8])) {
    const auto phead = strings::parse_int(cols[8]);
    if (!phead || *phead < 0) fail(ConllErrc::kMalformedRow, "non-numeric PHEAD '" + std::string(cols[8]) + "'", line);
    t.phead = *phead;
  }
  if (!is_optional_empty(cols[9])) t.pdeprel = std::string(cols[9]);
  return t;
}

void check_sentence_at(const Sentence& s, int first_line) {
  const int n = static_cast<int>(s.tokens.size());
  for (int i = 0; i < n; ++i) {
    const Token& t = s.tokens[static_cast<std::size_t>(i)];
    const int line = first_line > 0 ? first_line + i : 0;
    if (t.id != i + 1) {
      fail(ConllErrc::kIdGap, "expected ID " + std::to_string(i + 1) + ", found " + std::to_string(t.id), line);
    }
    if (t.head < 0 || t.head > n) {
      fail(ConllErrc::kHeadOutOfRange,
           "HEAD " + std::to_string(t.head) + " outside 0.." + std::to_string(n), line);
    }
  }
}

}  // namespace

std::string_view to_string(ConllErrc errc) {
  switch (errc) {
    case ConllErrc::kMalformedRow: return "MALFORMED_ROW";
    case ConllErrc::kIdGap: return "ID_GAP";
    case ConllErrc::kHeadOutOfRange: return "HEAD_OUT_OF_RANGE";
    case ConllErrc::kDuplicateKey: return "DUPLICATE_KEY";
    case ConllErrc::kMalformedPair: return "MALFORMED_PAIR";
  }
  return "UNKNOWN";
}

ConllError::ConllError(ConllErrc errc, const std::string& message, int line)
    : TypedError(errc, message), line_(line) {}

FeatureBag::FeatureBag(std::initializer_list<Feature> pairs) {
  for (const auto& p : pairs) set(p.key, p.value);
}

std::optional<std::string_view> FeatureBag::get(std::string_view key) const {
  for (const auto& p : pairs_) {
    if (p.key == key) return std::string_view(p.value);
  }
  return std::nullopt;
}

bool FeatureBag::has(std::string_view key, std::string_view value) const {
  const auto v = get(key);
  return v && *v == value;
}

void FeatureBag::set(std::string_view key, std::string_view value) {
  for (auto& p : pairs_) {
    if (p.key == key) {
      p.value = std::string(value);
      return;
    }
  }
  pairs_.push_back({std::string(key), std::string(value)});
}

bool FeatureBag::erase(std::string_view key) {
  const auto it = std::find_if(pairs_.begin(), pairs_.end(),
                               [&](const Feature& p) { return p.key == key; });
  if (it == pairs_.end()) return false;
  pairs_.erase(it);
  return true;
}

std::string FeatureBag::to_string() const {
  if (pairs_.empty()) return std::string(kEmpty);
  std::string out;
  for (const auto& p : pairs_) {
    if (!out.empty()) out += '|';
    out += p.key;
    out += '=';
    out += p.value;
  }
  return out;
}

FeatureBag parse_feats(std::string_view field) {
  FeatureBag bag;
  field = strings::trim(field);
  if (is_empty_marker(field)) return bag;

  std::vector<std::string_view> items;
  for (auto chunk : strings::split(field, '|')) {
    for (auto item : strings::split_ws(chunk)) items.push_back(item);
  }
  for (auto item : items) {
    const auto kv = strings::split_once(item, "=");
    if (!kv || kv->first.empty()) {
      throw ConllError(ConllErrc::kMalformedPair, "feature '" + std::string(item) + "' has no key=value form");
    }
    if (bag.get(kv->first)) {
      throw ConllError(ConllErrc::kDuplicateKey, "feature key '" + std::string(kv->first) + "' repeated");
    }
    bag.set(kv->first, kv->second);
  }
  return bag;
}

std::optional<std::string> Sentence::sent_id() const {
  for (const auto& c : comments) {
    auto body = strings::trim(std::string_view(c).substr(1));
    if (!strings::starts_with(body, "sent_id")) continue;
    auto rest = strings::trim(body.substr(7));
    if (rest.empty() || rest.front() != '=') continue;
    return std::string(strings::trim(rest.substr(1)));
  }
  return std::nullopt;
}

void Sentence::set_sent_id(std::string_view id) {
  const std::string line = "# sent_id = " + std::string(id);
  for (auto& c : comments) {
    auto body = strings::trim(std::string_view(c).substr(1));
    if (strings::starts_with(body, "sent_id")) {
      c = line;
      return;
    }
  }
  comments.insert(comments.begin(), line);
}

std::size_t Treebank::token_count() const {
  std::size_t n = 0;
  for (const auto& s : sentences) n += s.size();
  return n;
}

Treebank parse_treebank(std::string_view document, const ReadOptions& options) {
  Treebank tb;
  Sentence current;
  int first_token_line = 0;
  int line_no = 0;

  auto flush = [&](int line) {
    if (current.tokens.empty()) {
      if (!current.comments.empty()) fail(ConllErrc::kMalformedRow, "comment block without tokens", line);
      return;
    }
    check_sentence_at(current, first_token_line);
    tb.sentences.push_back(std::move(current));
    current = Sentence{};
  };

  for (auto line : strings::lines(document)) {
    ++line_no;
    if (strings::trim(line).empty()) {
      flush(line_no);
      continue;
    }
    if (line.front() == '#' && current.tokens.empty()) {
      current.comments.emplace_back(line);
      continue;
    }
    if (current.tokens.empty()) first_token_line = line_no;
    current.tokens.push_back(parse_row(line, line_no, options));
  }
  flush(line_no);
  return tb;
}

std::string emit_sentence(const Sentence& s) {
  std::string text;
  for (const auto& c : s.comments) {
    text += c;
    text += '\n';
  }
  for (const auto& t : s.tokens) {
    text += std::to_string(t.id);
    text += '\t';
    text += t.form;
    text += '\t';
    text += out(t.lemma);
    text += '\t';
    text += out(t.cpostag);
    text += '\t';
    text += out(t.postag);
    text += '\t';
    text += t.feats.to_string();
    text += '\t';
    text += std::to_string(t.head);
    text += '\t';
    text += out(t.deprel);
    text += '\t';
    text += t.phead ? std::to_string(*t.phead) : std::string(kEmpty);
    text += '\t';
    text += t.pdeprel ? out(*t.pdeprel) : kEmpty;
    text += '\n';
  }
  text += '\n';
  return text;
}

std::string emit_treebank(const Treebank& tb) {
  std::string text;
  for (const auto& s : tb.sentences) text += emit_sentence(s);
  return text;
}

void check_sentence(const Sentence& s) { check_sentence_at(s, 0); }

Treebank read_treebank_file(const std::string& path, const ReadOptions& options) {
  Treebank tb = parse_treebank(strings::read_file(path), options);
  tb.source = path;
  return tb;
}

void write_treebank_file(const std::string& path, const Treebank& tb) {
  strings::write_file(path, emit_treebank(tb));
}

Sentence strip_dependencies(const Sentence& s) {
  Sentence blind = s;
  for (auto& t : blind.tokens) {
    t.head = 0;
    t.deprel.clear();
    t.phead.reset();
    t.pdeprel.reset();
  }
  return blind;
}

bool is_projective(const Sentence& s) {
  std::vector<std::pair<int, int>> arcs;
  arcs.reserve(s.size());
  for (const auto& t : s.tokens) arcs.emplace_back(std::min(t.head, t.id), std::max(t.head, t.id));
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    const auto [a, b] = arcs[i];
    for (std::size_t j = i + 1; j < arcs.size(); ++j) {
      const auto [c, d] = arcs[j];
      if ((a < c && c < b && b < d) || (c < a && a < d && d < b)) return false;
    }
  }
  return true;
}

}  // namespace i3rab::conllx

#pragma once

// CoNLL-X treebank model, reader and writer.
//
// Canonical output: ten tab-separated columns, "_" for empty fields, FEATS
// joined with "|", LF line endings and one blank line after every sentence.
// Comment lines ("# ...") directly before a sentence are kept verbatim.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "i3rab/error.hpp"

namespace i3rab::conllx {

enum class ConllErrc {
  kMalformedRow,
  kIdGap,
  kHeadOutOfRange,
  kDuplicateKey,
  kMalformedPair,
};

std::string_view to_string(ConllErrc errc);

class ConllError : public TypedError<ConllErrc> {
 public:
  ConllError(ConllErrc errc, const std::string& message, int line = 0);

  // 1-based source line, 0 when not tied to a line.
  int line() const noexcept { return line_; }

 private:
  int line_;
};

struct Feature {
  std::string key;
  std::string value;

  friend bool operator==(const Feature&, const Feature&) = default;
};

// Ordered morphological feature pairs (e.g. Gender=M|Number=P|Case=1).
class FeatureBag {
 public:
  FeatureBag() = default;
  FeatureBag(std::initializer_list<Feature> pairs);

  bool empty() const noexcept { return pairs_.empty(); }
  std::size_t size() const noexcept { return pairs_.size(); }
  auto begin() const noexcept { return pairs_.begin(); }
  auto end() const noexcept { return pairs_.end(); }

  std::optional<std::string_view> get(std::string_view key) const;
  bool has(std::string_view key, std::string_view value) const;

  // Replaces the value of an existing key in place or appends a new pair.
  void set(std::string_view key, std::string_view value);
  bool erase(std::string_view key);

  // Canonical FEATS column text; "_" when empty.
  std::string to_string() const;

  friend bool operator==(const FeatureBag&, const FeatureBag&) = default;

 private:
  std::vector<Feature> pairs_;
};

// Parses one FEATS column. Accepts "|" or runs of spaces between pairs.
FeatureBag parse_feats(std::string_view field);

struct Token {
  int id = 0;
  std::string form;
  std::string lemma;
  std::string cpostag;
  std::string postag;
  FeatureBag feats;
  int head = 0;
  std::string deprel;
  std::optional<int> phead;
  std::optional<std::string> pdeprel;

  friend bool operator==(const Token&, const Token&) = default;
};

struct Sentence {
  std::vector<std::string> comments;  // raw lines including the leading '#'
  std::vector<Token> tokens;

  std::size_t size() const noexcept { return tokens.size(); }
  bool empty() const noexcept { return tokens.empty(); }

  // Token by 1-based id.
  const Token& at(int id) const { return tokens.at(static_cast<std::size_t>(id - 1)); }
  Token& at(int id) { return tokens.at(static_cast<std::size_t>(id - 1)); }

  // Value of a "# sent_id = N" comment, if present.
  std::optional<std::string> sent_id() const;
  void set_sent_id(std::string_view id);

  friend bool operator==(const Sentence&, const Sentence&) = default;
};

struct Treebank {
  std::vector<Sentence> sentences;
  std::optional<std::string> source;

  std::size_t size() const noexcept { return sentences.size(); }
  bool empty() const noexcept { return sentences.empty(); }
  std::size_t token_count() const;

  // Source is provenance only and does not take part in equality.
  friend bool operator==(const Treebank& a, const Treebank& b) {
    return a.sentences == b.sentences;
  }
};

struct ReadOptions {
  // Blind parser input: HEAD/DEPREL may be "_" or absent (6-column rows).
  bool allow_missing_heads = false;
};

Treebank parse_treebank(std::string_view document, const ReadOptions& options = {});
std::string emit_treebank(const Treebank& tb);
std::string emit_sentence(const Sentence& s);

// Throws ConllError when ids are not 1..n or a head lies outside 0..n.
void check_sentence(const Sentence& s);

Treebank read_treebank_file(const std::string& path, const ReadOptions& options = {});
void write_treebank_file(const std::string& path, const Treebank& tb);

// Copy with HEAD/DEPREL/PHEAD/PDEPREL cleared (blind test input).
Sentence strip_dependencies(const Sentence& s);

// True when no two arcs cross when drawn above the token sequence
// (root arcs included, drawn from position 0).
bool is_projective(const Sentence& s);

}  // namespace i3rab::conllx

#pragma once

// Greedy arc-eager dependency parser with an averaged perceptron.

#include <cstddef>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "i3rab/conllx.hpp"
#include "i3rab/error.hpp"
#include "i3rab/schema.hpp"

namespace i3rab::parser {

using conllx::Sentence;
using conllx::Treebank;
using conllx::is_projective;

enum class ParserErrc {
  kNonProjectiveInput,
  kIllegalTransition,
  kEmptyTreebank,
  kAllSentencesNonProjective,
  kSchemaMismatch,
  kMalformedModel,
};

std::string_view to_string(ParserErrc errc);

class ParserError : public TypedError<ParserErrc> {
 public:
  using TypedError::TypedError;
};

// ----- transition system --------------------------------------------------

struct Transition {
  enum class Kind { kShift, kLeftArc, kRightArc, kReduce };

  Kind kind = Kind::kShift;
  std::string label;  // arc transitions only

  static Transition shift() { return {Kind::kShift, {}}; }
  static Transition left_arc(std::string label) { return {Kind::kLeftArc, std::move(label)}; }
  static Transition right_arc(std::string label) { return {Kind::kRightArc, std::move(label)}; }
  static Transition reduce() { return {Kind::kReduce, {}}; }

  // "SHIFT", "LEFT_ARC(OBJ)", "RIGHT_ARC(OBJ)", "REDUCE".
  std::string to_string() const;
  static std::optional<Transition> parse(std::string_view text);

  // Tie-break order: SHIFT < LEFT_ARC < RIGHT_ARC < REDUCE, then label.
  friend auto operator<=>(const Transition&, const Transition&) = default;
};

struct Arc {
  int head = 0;
  int dependent = 0;
  std::string label;

  friend auto operator<=>(const Arc&, const Arc&) = default;
};

struct Configuration {
  std::vector<int> stack;   // bottom is the artificial root 0
  std::deque<int> buffer;
  std::vector<int> heads;   // index = token id; -1 while unattached
  std::vector<std::string> labels;

  static Configuration initial(std::size_t n);

  bool terminal() const { return buffer.empty(); }
  bool has_head(int id) const { return heads[static_cast<std::size_t>(id)] >= 0; }
  std::vector<Arc> arcs() const;
};

bool is_legal(const Configuration& c, const Transition& t);
// Throws IllegalTransition.
Configuration apply_transition(Configuration c, const Transition& t);
void apply_in_place(Configuration& c, const Transition& t);

// Static arc-eager oracle for the gold tree `s`. Throws NonProjectiveInput.
std::optional<Transition> oracle_step(const Configuration& c, const Sentence& s);
std::vector<Transition> oracle_sequence(const Sentence& s);

// Gold arcs of `s` in dependent order.
std::vector<Arc> gold_arcs(const Sentence& s);

// ----- features -----------------------------------------------------------

const std::vector<std::string>& default_templates();

// Feature strings such as "s0.form=كتاب", "s0.pos=ROOT", "b1.lemma=NULL".
std::vector<std::string> extract_features(const Configuration& c, const Sentence& s);

// ----- model --------------------------------------------------------------

inline constexpr std::string_view kModelHeader = "I3RAB-MODEL v1";

struct ParserModel {
  std::string version = std::string(kModelHeader);
  std::string schema_digest;
  std::vector<std::string> templates;
  std::vector<std::string> labels;     // sorted
  std::string root_label;
  std::string fallback_label;
  std::set<std::string> punctuation;   // fine POS tags treated as punctuation
  // Averaged weights in millionths, indexed like transitions().
  std::map<std::string, std::vector<std::int64_t>> weights;

  std::vector<Transition> transitions() const;
  friend bool operator==(const ParserModel&, const ParserModel&) = default;
};

std::string save_model(const ParserModel& m);
ParserModel load_model(std::string_view text);
void save_model_file(const std::string& path, const ParserModel& m);
ParserModel load_model_file(const std::string& path);

// ----- training and decoding ----------------------------------------------

struct TrainOptions {
  int epochs = 10;
  std::uint64_t seed = 1;
};

struct TrainReport {
  std::size_t sentences_used = 0;
  std::size_t skipped_nonprojective = 0;
  std::size_t updates = 0;
  std::vector<std::size_t> errors_per_epoch;  // mispredicted transitions
};

struct TrainResult {
  ParserModel model;
  TrainReport report;
};

TrainResult train(const Treebank& tb, const schema::Schema& schema, const TrainOptions& options);

// Greedy decoding. HEAD/DEPREL of the input are ignored. When `schema` is
// given its digest must equal the model's (SchemaMismatch otherwise).
Sentence parse_sentence(const Sentence& s, const ParserModel& m,
                        const schema::Schema* schema = nullptr);
Treebank parse_treebank(const Treebank& tb, const ParserModel& m,
                        const schema::Schema* schema = nullptr);

}  // namespace i3rab::parser

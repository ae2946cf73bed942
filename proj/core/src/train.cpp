#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <unordered_map>

#include "i3rab/parser.hpp"

namespace i3rab::parser {

namespace {

bool is_punct_tag(const ParserModel& m, const conllx::Token& t) {
  return m.punctuation.count(t.postag) != 0;
}

std::string most_frequent(const std::map<std::string, std::size_t>& counts) {
  std::string best;
  std::size_t best_count = 0;
  for (const auto& [label, n] : counts) {
    if (n > best_count) {
      best = label;
      best_count = n;
    }
  }
  return best;
}

// Perceptron weights with the running sums needed for averaging.
class Learner {
 public:
  explicit Learner(std::size_t transitions) : width_(transitions) {}

  void score(const std::vector<std::string>& features, std::vector<std::int64_t>& out) const {
    out.assign(width_, 0);
    for (const auto& f : features) {
      const auto it = rows_.find(f);
      if (it == rows_.end()) continue;
      for (std::size_t t = 0; t < width_; ++t) out[t] += it->second.weight[t];
    }
  }

  void update(const std::vector<std::string>& features, std::size_t gold, std::size_t guess) {
    for (const auto& f : features) {
      auto& row = rows_.try_emplace(f, width_).first->second;
      row.weight[gold] += 1;
      row.total[gold] += step_;
      row.weight[guess] -= 1;
      row.total[guess] -= step_;
    }
  }

  void tick() { ++step_; }

  // Averaged weights in millionths: w - total/step.
  std::map<std::string, std::vector<std::int64_t>> averaged() const {
    std::map<std::string, std::vector<std::int64_t>> out;
    const long double steps = static_cast<long double>(std::max<std::int64_t>(step_, 1));
    for (const auto& [feature, row] : rows_) {
      std::vector<std::int64_t> avg(width_, 0);
      bool any = false;
      for (std::size_t t = 0; t < width_; ++t) {
        const long double value = static_cast<long double>(row.weight[t]) - static_cast<long double>(row.total[t]) / steps;
        avg[t] = static_cast<std::int64_t>(std::llround(value * 1000000.0L));
        any = any || avg[t] != 0;
      }
      if (any) out.emplace(feature, std::move(avg));
    }
    return out;
  }

 private:
  struct Row {
    explicit Row(std::size_t n) : weight(n, 0), total(n, 0) {}
    std::vector<std::int64_t> weight;
    std::vector<std::int64_t> total;  // sum of step * delta
  };

  std::size_t width_;
  std::int64_t step_ = 1;
  std::unordered_map<std::string, Row> rows_;
};

std::size_t best_legal(const Configuration& c, const std::vector<Transition>& transitions,
                       const std::vector<std::int64_t>& scores, const std::vector<bool>& allowed) {
  std::size_t best = transitions.size();
  for (std::size_t t = 0; t < transitions.size(); ++t) {
    if (!allowed[t] || !is_legal(c, transitions[t])) continue;
    if (best == transitions.size() || scores[t] > scores[best]) best = t;
  }
  return best;
}

}  // namespace

TrainResult train(const Treebank& tb, const schema::Schema& schema, const TrainOptions& options) {
  if (tb.empty()) throw ParserError(ParserErrc::kEmptyTreebank, "training treebank has no sentences");

  TrainResult result;
  auto& report = result.report;
  std::vector<const Sentence*> usable;
  std::set<std::string> labels;
  std::map<std::string, std::size_t> root_counts, other_counts;
  for (const auto& s : tb.sentences) {
    if (!is_projective(s)) {
      ++report.skipped_nonprojective;
      continue;
    }
    usable.push_back(&s);
    for (const auto& t : s.tokens) {
      labels.insert(t.deprel);
      if (schema.punctuation_pos.count(t.postag) != 0) continue;
      ++(t.head == 0 ? root_counts : other_counts)[t.deprel];
    }
  }
  if (usable.empty()) {
    throw ParserError(ParserErrc::kAllSentencesNonProjective, "every training sentence is non-projective");
  }
  report.sentences_used = usable.size();

  ParserModel& m = result.model;
  m.schema_digest = schema::schema_digest(schema);
  m.templates = default_templates();
  m.labels.assign(labels.begin(), labels.end());
  m.root_label = most_frequent(root_counts);
  m.fallback_label = most_frequent(other_counts);
  if (m.root_label.empty()) m.root_label = m.labels.front();
  if (m.fallback_label.empty()) m.fallback_label = m.root_label;
  m.punctuation = schema.punctuation_pos;

  const auto transitions = m.transitions();
  std::map<std::string, std::size_t> index;
  for (std::size_t t = 0; t < transitions.size(); ++t) index[transitions[t].to_string()] = t;
  const std::vector<bool> all_allowed(transitions.size(), true);

  Learner learner(transitions.size());
  std::mt19937_64 rng(options.seed);
  std::vector<std::size_t> order(usable.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::vector<std::int64_t> scores;

  for (int epoch = 0; epoch < options.epochs; ++epoch) {
    // Fisher-Yates with a fixed draw rule, so the order is the same on every platform.
    for (std::size_t i = order.size(); i > 1; --i) {
      const std::size_t j = static_cast<std::size_t>(rng() % i);
      std::swap(order[i - 1], order[j]);
    }
    std::size_t errors = 0;
    for (const std::size_t idx : order) {
      const Sentence& s = *usable[idx];
      auto c = Configuration::initial(s.size());
      while (auto gold = oracle_step(c, s)) {
        const auto features = extract_features(c, s);
        learner.score(features, scores);
        const std::size_t guess = best_legal(c, transitions, scores, all_allowed);
        const std::size_t want = index.at(gold->to_string());
        if (guess != want) {
          learner.update(features, want, guess);
          ++errors;
          ++report.updates;
        }
        learner.tick();
        apply_in_place(c, *gold);
      }
    }
    report.errors_per_epoch.push_back(errors);
  }
  m.weights = learner.averaged();
  return result;
}

Sentence parse_sentence(const Sentence& input, const ParserModel& m, const schema::Schema* schema) {
  if (schema != nullptr && schema::schema_digest(*schema) != m.schema_digest) {
    throw ParserError(ParserErrc::kSchemaMismatch, "model was trained with schema " + m.schema_digest +
                                                       ", requested " + schema::schema_digest(*schema));
  }
  const auto transitions = m.transitions();
  Sentence s = input;
  auto c = Configuration::initial(s.size());
  std::vector<std::int64_t> scores(transitions.size());
  std::vector<bool> allowed(transitions.size(), true);
  bool content_root = false;

  while (!c.terminal()) {
    const auto features = extract_features(c, s);
    std::fill(scores.begin(), scores.end(), 0);
    for (const auto& f : features) {
      const auto it = m.weights.find(f);
      if (it == m.weights.end()) continue;
      for (std::size_t t = 0; t < transitions.size(); ++t) scores[t] += it->second[t];
    }
    // Only one content word may hang directly on the root.
    const bool b0_punct = is_punct_tag(m, s.at(c.buffer.front()));
    for (std::size_t t = 0; t < transitions.size(); ++t) {
      allowed[t] = !(transitions[t].kind == Transition::Kind::kRightArc && c.stack.back() == 0 &&
                     content_root && !b0_punct);
    }
    std::size_t best = best_legal(c, transitions, scores, allowed);
    if (best == transitions.size()) best = 0;  // SHIFT is always legal with a non-empty buffer
    if (transitions[best].kind == Transition::Kind::kRightArc && c.stack.back() == 0 && !b0_punct) {
      content_root = true;
    }
    apply_in_place(c, transitions[best]);
  }

  int root = 0;
  for (std::size_t d = 1; d < c.heads.size(); ++d) {
    if (c.heads[d] == 0 && !is_punct_tag(m, s.at(static_cast<int>(d)))) root = static_cast<int>(d);
  }
  if (root == 0) {
    for (std::size_t d = 1; d < c.heads.size() && root == 0; ++d) {
      if (c.heads[d] < 0 && !is_punct_tag(m, s.at(static_cast<int>(d)))) root = static_cast<int>(d);
    }
    if (root == 0) {
      for (std::size_t d = 1; d < c.heads.size() && root == 0; ++d) {
        if (c.heads[d] < 0) root = static_cast<int>(d);
      }
    }
    if (root != 0) {
      c.heads[static_cast<std::size_t>(root)] = 0;
      c.labels[static_cast<std::size_t>(root)] = m.root_label;
    }
  }
  for (std::size_t d = 1; d < c.heads.size(); ++d) {
    if (c.heads[d] >= 0) continue;
    c.heads[d] = root;
    c.labels[d] = m.fallback_label;
  }

  for (auto& t : s.tokens) {
    t.head = c.heads[static_cast<std::size_t>(t.id)];
    t.deprel = c.labels[static_cast<std::size_t>(t.id)];
    t.phead.reset();
    t.pdeprel.reset();
  }
  return s;
}

Treebank parse_treebank(const Treebank& tb, const ParserModel& m, const schema::Schema* schema) {
  Treebank out;
  out.source = tb.source;
  out.sentences.reserve(tb.size());
  for (const auto& s : tb.sentences) out.sentences.push_back(parse_sentence(s, m, schema));
  return out;
}

}  // namespace i3rab::parser

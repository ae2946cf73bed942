#include "i3rab/eval.hpp"

namespace i3rab::eval {

std::string_view to_string(EvalErrc errc) {
  switch (errc) {
    case EvalErrc::kTokenMismatch: return "TOKEN_MISMATCH";
    case EvalErrc::kZeroVariance: return "ZERO_VARIANCE";
    case EvalErrc::kLengthMismatch: return "LENGTH_MISMATCH";
    case EvalErrc::kZeroBase: return "ZERO_BASE";
    case EvalErrc::kKTooLarge: return "K_TOO_LARGE";
    case EvalErrc::kEmptyInput: return "EMPTY_INPUT";
  }
  return "UNKNOWN";
}

EvalReport EvalReport::from_counts(std::size_t tokens, std::size_t head, std::size_t head_and_label) {
  EvalReport r;
  r.token_count = tokens;
  r.correct_head = head;
  r.correct_head_and_label = head_and_label;
  if (tokens > 0) {
    r.uas = 100.0 * static_cast<double>(head) / static_cast<double>(tokens);
    r.las = 100.0 * static_cast<double>(head_and_label) / static_cast<double>(tokens);
  }
  return r;
}

EvalReport& EvalReport::operator+=(const EvalReport& other) {
  *this = from_counts(token_count + other.token_count, correct_head + other.correct_head,
                      correct_head_and_label + other.correct_head_and_label);
  return *this;
}

EvalReport attachment_scores(const Sentence& gold, const Sentence& pred, const EvalOptions& opts) {
  if (gold.size() != pred.size()) {
    throw EvalError(EvalErrc::kTokenMismatch, "gold has " + std::to_string(gold.size()) + " tokens, prediction " +
                                                  std::to_string(pred.size()));
  }
  std::size_t tokens = 0, head = 0, both = 0;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    const auto& g = gold.tokens[i];
    const auto& p = pred.tokens[i];
    if (g.id != p.id || g.form != p.form) {
      throw EvalError(EvalErrc::kTokenMismatch, "token " + std::to_string(g.id) + " differs: '" + g.form +
                                                    "' vs '" + p.form + "'");
    }
    if (opts.exclude_punct && opts.punct_tags.count(g.postag) != 0) continue;
    ++tokens;
    if (g.head == p.head) {
      ++head;
      if (g.deprel == p.deprel) ++both;
    }
  }
  return EvalReport::from_counts(tokens, head, both);
}

EvalReport attachment_scores(const Treebank& gold, const Treebank& pred, const EvalOptions& opts) {
  if (gold.size() != pred.size()) {
    throw EvalError(EvalErrc::kTokenMismatch, "gold has " + std::to_string(gold.size()) +
                                                  " sentences, prediction " + std::to_string(pred.size()));
  }
  EvalReport total;
  for (std::size_t i = 0; i < gold.size(); ++i) total += attachment_scores(gold.sentences[i], pred.sentences[i], opts);
  return total;
}

}  // namespace i3rab::eval

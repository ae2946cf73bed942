#include <algorithm>

#include "i3rab/parser.hpp"
#include "i3rab/strings.hpp"

namespace i3rab::parser {

std::string_view to_string(ParserErrc errc) {
  switch (errc) {
    case ParserErrc::kNonProjectiveInput: return "NON_PROJECTIVE_INPUT";
    case ParserErrc::kIllegalTransition: return "ILLEGAL_TRANSITION";
    case ParserErrc::kEmptyTreebank: return "EMPTY_TREEBANK";
    case ParserErrc::kAllSentencesNonProjective: return "ALL_SENTENCES_NON_PROJECTIVE";
    case ParserErrc::kSchemaMismatch: return "SCHEMA_MISMATCH";
    case ParserErrc::kMalformedModel: return "MALFORMED_MODEL";
  }
  return "UNKNOWN";
}

std::string Transition::to_string() const {
  switch (kind) {
    case Kind::kShift: return "SHIFT";
    case Kind::kLeftArc: return "LEFT_ARC(" + label + ")";
    case Kind::kRightArc: return "RIGHT_ARC(" + label + ")";
    case Kind::kReduce: return "REDUCE";
  }
  return {};
}

std::optional<Transition> Transition::parse(std::string_view text) {
  if (text == "SHIFT") return shift();
  if (text == "REDUCE") return reduce();
  auto labelled = [&](std::string_view prefix) -> std::optional<std::string> {
    if (!strings::starts_with(text, prefix) || !strings::ends_with(text, ")")) return std::nullopt;
    const auto label = text.substr(prefix.size(), text.size() - prefix.size() - 1);
    if (label.empty()) return std::nullopt;
    return std::string(label);
  };
  if (auto l = labelled("LEFT_ARC(")) return left_arc(*l);
  if (auto l = labelled("RIGHT_ARC(")) return right_arc(*l);
  return std::nullopt;
}

Configuration Configuration::initial(std::size_t n) {
  Configuration c;
  c.stack = {0};
  for (std::size_t i = 1; i <= n; ++i) c.buffer.push_back(static_cast<int>(i));
  c.heads.assign(n + 1, -1);
  c.labels.assign(n + 1, {});
  return c;
}

std::vector<Arc> Configuration::arcs() const {
  std::vector<Arc> out;
  for (std::size_t d = 1; d < heads.size(); ++d) {
    if (heads[d] >= 0) out.push_back({heads[d], static_cast<int>(d), labels[d]});
  }
  return out;
}

bool is_legal(const Configuration& c, const Transition& t) {
  switch (t.kind) {
    case Transition::Kind::kShift:
    case Transition::Kind::kRightArc:
      return !c.buffer.empty() && !c.stack.empty();
    case Transition::Kind::kLeftArc:
      return !c.buffer.empty() && !c.stack.empty() && c.stack.back() != 0 && !c.has_head(c.stack.back());
    case Transition::Kind::kReduce:
      return !c.stack.empty() && c.stack.back() != 0 && c.has_head(c.stack.back());
  }
  return false;
}

void apply_in_place(Configuration& c, const Transition& t) {
  if (!is_legal(c, t)) throw ParserError(ParserErrc::kIllegalTransition, t.to_string() + " is not legal here");
  switch (t.kind) {
    case Transition::Kind::kShift:
      c.stack.push_back(c.buffer.front());
      c.buffer.pop_front();
      break;
    case Transition::Kind::kLeftArc: {
      const int dep = c.stack.back();
      c.heads[static_cast<std::size_t>(dep)] = c.buffer.front();
      c.labels[static_cast<std::size_t>(dep)] = t.label;
      c.stack.pop_back();
      break;
    }
    case Transition::Kind::kRightArc: {
      const int dep = c.buffer.front();
      c.heads[static_cast<std::size_t>(dep)] = c.stack.back();
      c.labels[static_cast<std::size_t>(dep)] = t.label;
      c.stack.push_back(dep);
      c.buffer.pop_front();
      break;
    }
    case Transition::Kind::kReduce:
      c.stack.pop_back();
      break;
  }
}

Configuration apply_transition(Configuration c, const Transition& t) {
  apply_in_place(c, t);
  return c;
}

std::vector<Arc> gold_arcs(const Sentence& s) {
  std::vector<Arc> out;
  out.reserve(s.size());
  for (const auto& t : s.tokens) out.push_back({t.head, t.id, t.deprel});
  return out;
}

std::optional<Transition> oracle_step(const Configuration& c, const Sentence& s) {
  if (c.terminal()) return std::nullopt;
  const int s0 = c.stack.back();
  const int b0 = c.buffer.front();
  if (s0 != 0 && s.at(s0).head == b0) return Transition::left_arc(s.at(s0).deprel);
  if (s.at(b0).head == s0) return Transition::right_arc(s.at(b0).deprel);
  for (std::size_t i = 0; i + 1 < c.stack.size(); ++i) {
    const int k = c.stack[i];
    if (s.at(b0).head == k || (k != 0 && s.at(k).head == b0)) {
      return Transition::reduce();
    }
  }
  return Transition::shift();
}

std::vector<Transition> oracle_sequence(const Sentence& s) {
  if (!is_projective(s)) throw ParserError(ParserErrc::kNonProjectiveInput, "sentence is not projective");
  auto c = Configuration::initial(s.size());
  std::vector<Transition> out;
  while (auto t = oracle_step(c, s)) {
    if (!is_legal(c, *t)) {
      throw ParserError(ParserErrc::kNonProjectiveInput, "oracle reached an illegal " + t->to_string());
    }
    apply_in_place(c, *t);
    out.push_back(std::move(*t));
  }
  for (std::size_t d = 1; d < c.heads.size(); ++d) {
    if (c.heads[d] != s.at(static_cast<int>(d)).head) {
      throw ParserError(ParserErrc::kNonProjectiveInput, "oracle could not attach token " + std::to_string(d));
    }
  }
  return out;
}

}  // namespace i3rab::parser

#include <algorithm>
#include <vector>

#include "i3rab/schema.hpp"

namespace i3rab::schema {

std::string_view to_string(Severity severity) {
  return severity == Severity::kError ? "error" : "warning";
}

std::string_view to_string(ViolationCode code) {
  switch (code) {
    case ViolationCode::kUnknownLabel: return "UNKNOWN_LABEL";
    case ViolationCode::kUnknownPos: return "UNKNOWN_POS";
    case ViolationCode::kUnknownFeature: return "UNKNOWN_FEATURE";
    case ViolationCode::kHeadSelfOrRange: return "HEAD_SELF_OR_RANGE";
    case ViolationCode::kCycle: return "CYCLE";
    case ViolationCode::kMultiRoot: return "MULTI_ROOT";
    case ViolationCode::kRootPunctExtra: return "ROOT_PUNCT_EXTRA";
    case ViolationCode::kVerbWithoutAgent: return "VERB_WITHOUT_AGENT";
    case ViolationCode::kCovertNotPronoun: return "COVERT_NOT_PRONOUN";
  }
  return "UNKNOWN";
}

std::vector<Violation> validate_sentence(const Sentence& s, const Schema& schema,
                                         std::size_t sentence_index) {
  std::vector<Violation> out;
  const int n = static_cast<int>(s.size());
  auto report = [&](std::optional<int> id, ViolationCode code, Severity sev, std::string msg) {
    out.push_back({sentence_index, id, code, sev, std::move(msg)});
  };

  std::vector<bool> head_ok(static_cast<std::size_t>(n) + 1, true);
  for (const auto& t : s.tokens) {
    if (!schema.is_known_label(t.deprel)) {
      report(t.id, ViolationCode::kUnknownLabel, Severity::kError, "label '" + t.deprel + "' is not in the schema");
    }
    if (!t.postag.empty() && schema.pos_tags.count(t.postag) == 0) {
      report(t.id, ViolationCode::kUnknownPos, Severity::kError, "POS tag '" + t.postag + "' is not in the schema");
    }
    for (const auto& f : t.feats) {
      const auto it = schema.feature_values.find(f.key);
      if (it == schema.feature_values.end() || it->second.count(f.value) == 0) {
        report(t.id, ViolationCode::kUnknownFeature, Severity::kWarning,
               "feature " + f.key + "=" + f.value + " is not in the schema");
      }
    }
    if (t.head == t.id || t.head < 0 || t.head > n) {
      head_ok[static_cast<std::size_t>(t.id)] = false;
      report(t.id, ViolationCode::kHeadSelfOrRange, Severity::kError,
             "head " + std::to_string(t.head) + " is the token itself or outside 0.." + std::to_string(n));
    }
    if (is_covert(t) && t.cpostag != "S") {
      report(t.id, ViolationCode::kCovertNotPronoun, Severity::kError,
             "covert token has coarse POS '" + t.cpostag + "', expected S");
    }
  }

  // Cycle detection: colour walk; each cycle is reported once at its smallest id.
  std::vector<int> state(static_cast<std::size_t>(n) + 1, 0);  // 0 new, 1 on path, 2 done
  for (int start = 1; start <= n; ++start) {
    std::vector<int> path;
    int cur = start;
    while (cur != 0 && head_ok[static_cast<std::size_t>(cur)] && state[static_cast<std::size_t>(cur)] == 0) {
      state[static_cast<std::size_t>(cur)] = 1;
      path.push_back(cur);
      cur = s.at(cur).head;
    }
    if (cur != 0 && head_ok[static_cast<std::size_t>(cur)] && state[static_cast<std::size_t>(cur)] == 1) {
      const auto first = std::find(path.begin(), path.end(), cur);
      const int smallest = *std::min_element(first, path.end());
      report(smallest, ViolationCode::kCycle, Severity::kError,
             "head chain from token " + std::to_string(smallest) + " never reaches the root");
    }
    for (int id : path) state[static_cast<std::size_t>(id)] = 2;
  }

  std::vector<int> content_roots;
  std::vector<int> punct_roots;
  for (const auto& t : s.tokens) {
    if (t.head != 0) continue;
    (is_punctuation(t, schema) ? punct_roots : content_roots).push_back(t.id);
  }
  for (std::size_t i = 1; i < content_roots.size(); ++i) {
    report(content_roots[i], ViolationCode::kMultiRoot, Severity::kError,
           "second root word (first is token " + std::to_string(content_roots[0]) + ")");
  }
  for (std::size_t i = 1; i < punct_roots.size(); ++i) {
    report(punct_roots[i], ViolationCode::kRootPunctExtra, Severity::kWarning,
           "more than one punctuation token attached to the root");
  }

  for (const auto& v : s.tokens) {
    if (!is_strong_verb(v, schema)) continue;
    const bool has_agent = std::any_of(s.tokens.begin(), s.tokens.end(), [&](const Token& d) {
      return d.head == v.id && schema.resolve_label(d.deprel) == "AGENT";
    });
    if (!has_agent) {
      report(v.id, ViolationCode::kVerbWithoutAgent, Severity::kWarning, "verb '" + v.form + "' has no AGENT dependent");
    }
  }

  std::stable_sort(out.begin(), out.end(), [](const Violation& a, const Violation& b) {
    return a.token_id.value_or(0) < b.token_id.value_or(0);
  });
  return out;
}

std::vector<Violation> validate_treebank(const conllx::Treebank& tb, const Schema& schema) {
  std::vector<Violation> out;
  for (std::size_t i = 0; i < tb.size(); ++i) {
    auto v = validate_sentence(tb.sentences[i], schema, i);
    out.insert(out.end(), std::make_move_iterator(v.begin()), std::make_move_iterator(v.end()));
  }
  return out;
}

bool has_errors(const std::vector<Violation>& violations) {
  return std::any_of(violations.begin(), violations.end(),
                     [](const Violation& v) { return v.severity == Severity::kError; });
}

// "sentence 3, token 2: error UNKNOWN_LABEL: label 'Xx' is not in the schema"
std::string format_violation(const Violation& v) {
  std::string out = "sentence " + std::to_string(v.sentence_index + 1);
  if (v.token_id) out += ", token " + std::to_string(*v.token_id);
  out += ": ";
  out += to_string(v.severity);
  out += ' ';
  out += to_string(v.code);
  out += ": " + v.message;
  return out;
}

}  // namespace i3rab::schema

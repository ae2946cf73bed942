#include <map>

#include "i3rab/converter.hpp"
#include "i3rab/strings.hpp"

namespace i3rab::converter {

namespace {

std::map<std::size_t, Sentence> index_overrides(const Treebank& overrides, const Treebank& tb,
                                                const schema::Schema& schema) {
  std::map<std::size_t, Sentence> out;
  for (const auto& s : overrides.sentences) {
    const auto id = s.sent_id();
    const auto n = id ? strings::parse_int(*id) : std::nullopt;
    if (!n) throw ConvertError(ConvertErrc::kInvalidOverride, "override sentence lacks a numeric '# sent_id'");
    if (*n < 1 || static_cast<std::size_t>(*n) > tb.size()) {
      throw ConvertError(ConvertErrc::kOverrideIndexOutOfRange,
                         "override sent_id " + std::to_string(*n) + " outside 1.." + std::to_string(tb.size()));
    }
    const auto index = static_cast<std::size_t>(*n);
    for (const auto& v : schema::validate_sentence(s, schema, index - 1)) {
      if (v.severity == schema::Severity::kError) {
        throw ConvertError(ConvertErrc::kInvalidOverride,
                           "override for sentence " + std::to_string(index) + " is invalid: " +
                               schema::format_violation(v));
      }
    }
    if (!out.emplace(index, s).second) {
      throw ConvertError(ConvertErrc::kInvalidOverride, "sentence " + std::to_string(index) + " overridden twice");
    }
  }
  return out;
}

}  // namespace

ConversionResult convert_treebank(const Treebank& tb, const ConversionRules& rules,
                                  const std::optional<Treebank>& overrides) {
  const auto fixes = overrides ? index_overrides(*overrides, tb, rules.schema) : std::map<std::size_t, Sentence>{};
  ConversionResult result;
  result.treebank.source = tb.source;
  for (std::size_t i = 0; i < tb.size(); ++i) {
    const Sentence& input = tb.sentences[i];
    ConversionReport report;
    Sentence output;
    if (const auto it = fixes.find(i + 1); it != fixes.end()) {
      output = it->second;
      report.input_tokens = input.size();
      report.output_tokens = output.size();
      report.overridden_sentences = 1;
      // An expert tree is taken as is; its token changes count as
      // insertions or deletions so the accounting still balances.
      if (output.size() >= input.size()) {
        report.dropped_pronoun = output.size() - input.size();
      } else {
        report.deleted = input.size() - output.size();
      }
    } else {
      try {
        auto retok = retokenize_sentence(input, rules, i + 1);
        output = restructure_heads(retok.sentence, rules);
        report = retok.report;
      } catch (const ConvertError& err) {
        if (err.errc() != ConvertErrc::kRestructureFailure && err.errc() != ConvertErrc::kNoCovertMapping) throw;
        output = input;
        report = {};
        report.input_tokens = report.output_tokens = input.size();
        report.restructure_failures = 1;
      }
    }
    if (!conllx::is_projective(output)) report.nonprojective_outputs = 1;
    result.report += report;
    result.treebank.sentences.push_back(std::move(output));
  }
  return result;
}

}  // namespace i3rab::converter

#pragma once

// Random PADT-style sentences and random conversion rules for the
// token-accounting property.

#include <iterator>
#include <random>
#include <string>
#include <vector>

#include "i3rab/converter.hpp"
#include "random_trees.hpp"

namespace i3rab::testing {

using converter::ConversionRules;
using converter::Sentence;
using converter::Token;

struct Word {
  const char* form;
  const char* lemma;
  const char* postag;
  const char* feats;
};

inline const std::vector<Word>& word_pool() {
  static const std::vector<Word> kPool = {
      {"يبدأون", "بدأ_1", "VI", "Mood=I|Person=3|Gender=M|Number=P"},
      {"يجتمعان", "اجتمع_1", "VI", "Mood=I|Person=3|Gender=M|Number=D"},
      {"كتبت", "كتب_1", "VP", "Person=1|Number=S"},
      {"تقرأ", "قرأ_1", "VI", "Mood=I|Person=3|Gender=F|Number=S"},
      {"تكتبن", "كتب_1", "VI", "Person=2|Gender=F|Number=P"},
      {"كان", "كان_1", "VP", "Person=3|Gender=M|Number=S"},
      {"حسبما", "حسبما_1", "D-", "_"},
      {"بالسارس", "سارس_1", "Z-", "Case=2"},
      {"وهواتيان", "هواتيان_1", "Z-", "_"},
      {"ال", "ال_1", "--", "_"},
      {"زائد", "زائد_1", "--", "_"},
      {"محمد", "محمد_1", "Z-", "Case=1|Defin=R"},
      {"الكتاب", "كتاب_1", "N-", "Case=4|Defin=D"},
      {"في", "في_1", "P-", "_"},
      {"إن", "إن_1", "F-", "_"},
      {"لم", "لم_1", "F-", "_"},
      {"و", "و_1", "C-", "_"},
      {".", ".", "G-", "_"},
  };
  return kPool;
}

inline Sentence random_padt_sentence(std::mt19937_64& rng) {
  static const std::vector<std::string> kLabels = {"Sb", "Obj", "Atr", "Adv", "AuxP", "Pred", "Pnom", "Coord", "AuxY"};
  const int n = 1 + static_cast<int>(rng() % 10);
  const auto heads = random_projective_heads(rng, n);
  Sentence s;
  for (int i = 1; i <= n; ++i) {
    const auto& w = word_pool()[rng() % word_pool().size()];
    Token tok;
    tok.id = i;
    tok.form = w.form;
    tok.lemma = w.lemma;
    tok.postag = w.postag;
    tok.cpostag = std::string(w.postag).substr(0, 1);
    tok.feats = i3rab::conllx::parse_feats(w.feats);
    tok.head = heads[static_cast<std::size_t>(i - 1)];
    tok.deprel = kLabels[rng() % kLabels.size()];
    s.tokens.push_back(std::move(tok));
  }
  return s;
}

inline ConversionRules random_rules(std::mt19937_64& rng) {
  std::string text = "[fix_list]\n";
  const char* forms[] = {"ال", "زائد", "محمد", "في", "الكتاب", "و"};
  const int actions = static_cast<int>(rng() % 5);
  for (int i = 0; i < actions; ++i) {
    const std::string form = forms[rng() % std::size(forms)];
    const std::string scope = rng() % 3 == 0 ? " @" + std::to_string(1 + rng() % 6) : "";
    switch (rng() % 3) {
      case 0: text += "merge" + scope + ": " + form + "\n"; break;
      case 1: text += "delete" + scope + ": " + form + "\n"; break;
      default: text += "split" + scope + ": " + form + " -> " + form + "/N- + ه/S- + ا/--\n"; break;
    }
  }
  text += "[options]\n";
  text += std::string("insert_covert = ") + (rng() % 4 == 0 ? "false" : "true") + "\n";
  text += std::string("detach_joined = ") + (rng() % 4 == 0 ? "false" : "true") + "\n";
  return converter::load_rules(text, schema::default_schema());
}

}  // namespace i3rab::testing

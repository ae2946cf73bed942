#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "expect_error.hpp"
#include "i3rab/eval.hpp"
#include "i3rab/parser.hpp"
#include "random_trees.hpp"
#include "test_data.hpp"

namespace {

using namespace i3rab::parser;
using i3rab::schema::default_schema;
using i3rab::testing::make_sentence;
namespace t = i3rab::testing;

std::vector<Arc> replay(const Sentence& s, const std::vector<Transition>& seq) {
  auto c = Configuration::initial(s.size());
  for (const auto& tr : seq) apply_in_place(c, tr);
  auto arcs = c.arcs();
  std::sort(arcs.begin(), arcs.end());
  return arcs;
}

std::vector<Arc> sorted_gold(const Sentence& s) {
  auto arcs = gold_arcs(s);
  std::sort(arcs.begin(), arcs.end());
  return arcs;
}

const TrainResult& corpus_model() {
  static const TrainResult r = train(t::i3rab_corpus(), default_schema(), TrainOptions{10, 1});
  return r;
}

// Every token has a head in range, heads chain to 0, one non-punctuation root.
void expect_tree(const Sentence& s) {
  int content_roots = 0;
  for (const auto& tok : s.tokens) {
    ASSERT_GE(tok.head, 0);
    ASSERT_LE(tok.head, static_cast<int>(s.size()));
    ASSERT_NE(tok.head, tok.id);
    if (tok.head == 0 && !i3rab::schema::is_punctuation(tok, default_schema())) ++content_roots;
    int cur = tok.id;
    std::size_t steps = 0;
    while (cur != 0 && steps++ <= s.size()) cur = s.at(cur).head;
    ASSERT_EQ(cur, 0) << "cycle through token " << tok.id;
  }
  const bool all_punct = std::all_of(s.tokens.begin(), s.tokens.end(), [](const auto& tok) {
    return i3rab::schema::is_punctuation(tok, default_schema());
  });
  EXPECT_EQ(content_roots, all_punct ? 0 : 1);
}

// ----- transitions --------------------------------------------------------

TEST(Transition, TextForms) {
  EXPECT_EQ(Transition::shift().to_string(), "SHIFT");
  EXPECT_EQ(Transition::left_arc("OBJ").to_string(), "LEFT_ARC(OBJ)");
  EXPECT_EQ(Transition::parse("RIGHT_ARC(PRED-VP)"), Transition::right_arc("PRED-VP"));
  EXPECT_EQ(Transition::parse("REDUCE"), Transition::reduce());
  EXPECT_FALSE(Transition::parse("JUMP").has_value());
  EXPECT_LT(Transition::shift(), Transition::left_arc("A"));
  EXPECT_LT(Transition::left_arc("Z"), Transition::right_arc("A"));
  EXPECT_LT(Transition::right_arc("Z"), Transition::reduce());
  EXPECT_LT(Transition::right_arc("ADJ"), Transition::right_arc("GEN"));
}

TEST(Transition, ShiftMovesBufferFront) {
  const auto c = apply_transition(Configuration::initial(2), Transition::shift());
  EXPECT_EQ(c.stack, (std::vector<int>{0, 1}));
  EXPECT_EQ(c.buffer, (std::deque<int>{2}));
}

TEST(Transition, RightArcAddsArcAndPushes) {
  Configuration c = Configuration::initial(5);
  c.stack = {0, 3};
  c.buffer = {5};
  const auto next = apply_transition(c, Transition::right_arc("OBJ"));
  EXPECT_EQ(next.stack, (std::vector<int>{0, 3, 5}));
  EXPECT_TRUE(next.buffer.empty());
  EXPECT_EQ(next.heads[5], 3);
  EXPECT_EQ(next.labels[5], "OBJ");
  EXPECT_EQ(next.arcs(), (std::vector<Arc>{{3, 5, "OBJ"}}));
}

TEST(Transition, LeftArcPopsDependent) {
  Configuration c = apply_transition(Configuration::initial(2), Transition::shift());
  c = apply_transition(c, Transition::left_arc("GEN"));
  EXPECT_EQ(c.stack, (std::vector<int>{0}));
  EXPECT_EQ(c.heads[1], 2);
}

TEST(Transition, IllegalMoves) {
  const auto init = Configuration::initial(2);
  expect_errc<ParserError>([&] { apply_transition(init, Transition::reduce()); }, ParserErrc::kIllegalTransition);
  expect_errc<ParserError>([&] { apply_transition(init, Transition::left_arc("GEN")); },
                           ParserErrc::kIllegalTransition);
  auto shifted = apply_transition(init, Transition::shift());
  expect_errc<ParserError>([&] { apply_transition(shifted, Transition::reduce()); }, ParserErrc::kIllegalTransition);
  auto attached = apply_transition(Configuration::initial(1), Transition::right_arc("TOPIC"));
  EXPECT_TRUE(attached.terminal());
  EXPECT_FALSE(is_legal(attached, Transition::shift()));
  EXPECT_FALSE(is_legal(attached, Transition::right_arc("GEN")));
  EXPECT_TRUE(is_legal(attached, Transition::reduce()));
}

// ----- oracle -------------------------------------------------------------

TEST(Oracle, TwoTokenChain) {
  const auto s = make_sentence({{"محمد", "Z-", 0, "TOPIC"}, {"يقرأ", "VI", 1, "PRED-VP"}});
  EXPECT_EQ(oracle_sequence(s),
            (std::vector<Transition>{Transition::right_arc("TOPIC"), Transition::right_arc("PRED-VP")}));
}

TEST(Oracle, CrossingArcsRejected) {
  const auto s = make_sentence({{"a", "N-", 0, "TOPIC"}, {"b", "N-", 4, "GEN"}, {"c", "N-", 1, "GEN"},
                                {"d", "N-", 1, "GEN"}});
  EXPECT_FALSE(is_projective(s));
  expect_errc<ParserError>([&] { oracle_sequence(s); }, ParserErrc::kNonProjectiveInput);
}

TEST(Oracle, SoundOnBundledCorpora) {
  for (const auto& tb : {t::i3rab_corpus(), t::padt_corpus()}) {
    for (const auto& s : tb.sentences) {
      ASSERT_TRUE(is_projective(s));
      const auto seq = oracle_sequence(s);
      EXPECT_LE(seq.size(), 2 * s.size());
      EXPECT_EQ(replay(s, seq), sorted_gold(s)) << i3rab::conllx::emit_sentence(s);
    }
  }
}

TEST(Oracle, SoundOnRandomProjectiveTrees) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 500; ++i) {
    const auto s = t::random_projective_sentence(rng, 1 + static_cast<int>(rng() % 20));
    ASSERT_TRUE(is_projective(s));
    ASSERT_EQ(replay(s, oracle_sequence(s)), sorted_gold(s)) << i3rab::conllx::emit_sentence(s);
  }
}

TEST(Oracle, SoundOnMultiRootForests) {
  // Several tokens on ROOT (e.g. a content word and final punctuation).
  const auto s = make_sentence({{"a", "N-", 0, "TOPIC"}, {"b", "N-", 1, "GEN"}, {".", "G-", 0, "END"}});
  EXPECT_EQ(replay(s, oracle_sequence(s)), sorted_gold(s));
}

// ----- features -----------------------------------------------------------

TEST(Features, InitialOneTokenConfiguration) {
  const auto s = make_sentence({{"كتب", "VP", 0, "VB"}});
  const auto f = extract_features(Configuration::initial(1), s);
  EXPECT_NE(std::find(f.begin(), f.end(), "b0.form=كتب"), f.end());
  EXPECT_NE(std::find(f.begin(), f.end(), "s0.pos=ROOT"), f.end());
  EXPECT_NE(std::find(f.begin(), f.end(), "b1.lemma=NULL"), f.end());
  EXPECT_NE(std::find(f.begin(), f.end(), "s1.form=NULL"), f.end());
}

TEST(Features, Deterministic) {
  const auto gold = t::i3rab_corpus();
  for (const auto& s : gold.sentences) {
    auto c = Configuration::initial(s.size());
    for (const auto& tr : oracle_sequence(s)) {
      EXPECT_EQ(extract_features(c, s), extract_features(c, s));
      apply_in_place(c, tr);
    }
  }
}

TEST(Features, UnicefStaffAfterTwoTransitions) {
  const auto gold = t::i3rab_corpus();
  const auto& s = gold.sentences[t::kUnicefStaff - 1];
  auto c = Configuration::initial(s.size());
  const auto seq = oracle_sequence(s);
  ASSERT_EQ(seq[0], Transition::right_arc("TOPIC"));
  ASSERT_EQ(seq[1], Transition::right_arc("GEN"));
  apply_in_place(c, seq[0]);
  apply_in_place(c, seq[1]);
  const std::vector<std::string> expected = {
      "bias",
      "s0.form=اليونيسف", "s0.lemma=يونيسف_1", "s0.cpos=Z", "s0.pos=Z-", "s0.feat.Defin=D",
      "s1.form=موظفو", "s1.lemma=موظف_1", "s1.cpos=N", "s1.pos=N-",
      "s1.feat.Gender=M", "s1.feat.Number=P", "s1.feat.Case=1", "s1.feat.Defin=R",
      "b0.form=يبدأ", "b0.lemma=بدأ_1", "b0.cpos=V", "b0.pos=VI",
      "b0.feat.Mood=I", "b0.feat.Person=3", "b0.feat.Gender=M", "b0.feat.Number=S",
      "b1.form=ون", "b1.lemma=هم_1", "b1.cpos=S", "b1.pos=S-",
      "b1.feat.Person=3", "b1.feat.Gender=M", "b1.feat.Number=P", "b1.feat.Case=1",
      "s0.pos+b0.pos=Z-+VI", "s1.pos+s0.pos=N-+Z-", "b0.pos+b1.pos=VI+S-", "s0.cpos+b0.cpos=Z+V",
      "s0.form+b0.pos=اليونيسف+VI", "s0.pos+b0.form=Z-+يبدأ",
      "s0.ldep=NULL", "s0.rdep=NULL", "b0.ldep=NULL", "s0.pos+s0.ldep+s0.rdep=Z-+NULL+NULL",
      "dist=1", "s0.headed=Y",
  };
  EXPECT_EQ(extract_features(c, s), expected);
}

// ----- model file ---------------------------------------------------------

TEST(Model, SaveLoadRoundTrip) {
  const auto& m = corpus_model().model;
  const auto text = save_model(m);
  EXPECT_EQ(load_model(text), m);
  EXPECT_EQ(save_model(load_model(text)), text);
  EXPECT_EQ(text.rfind(std::string(kModelHeader) + "\n", 0), 0u);
  std::istringstream lines(text);
  std::string line;
  std::getline(lines, line);
  std::getline(lines, line);
  EXPECT_EQ(line, i3rab::schema::schema_digest(default_schema()));
  const auto start = text.find("weights:\n");
  ASSERT_NE(start, std::string::npos);
  std::istringstream weights(text.substr(start + 9));
  std::vector<std::string> rows;
  while (std::getline(weights, line)) rows.push_back(line);
  EXPECT_FALSE(rows.empty());
  EXPECT_TRUE(std::is_sorted(rows.begin(), rows.end()));
}

TEST(Model, MalformedFiles) {
  const auto text = save_model(corpus_model().model);
  expect_errc<ParserError>([] { load_model("NOT-A-MODEL\n"); }, ParserErrc::kMalformedModel);
  expect_errc<ParserError>([&] { load_model(text.substr(0, text.find("labels:"))); }, ParserErrc::kMalformedModel);
  std::string bad = text;
  bad.replace(bad.find("\tREDUCE\t"), 8, "\tJUMP\t");
  expect_errc<ParserError>([&] { load_model(bad); }, ParserErrc::kMalformedModel);
}

// ----- training and decoding ----------------------------------------------

TEST(Train, LearnsBundledCorpus) {
  const auto& r = corpus_model();
  EXPECT_EQ(r.report.sentences_used, 16u);
  EXPECT_EQ(r.report.skipped_nonprojective, 0u);
  EXPECT_EQ(r.report.errors_per_epoch.size(), 10u);
  const auto gold = t::i3rab_corpus();
  const auto parsed = parse_treebank(gold, r.model, &default_schema());
  const auto scores = i3rab::eval::attachment_scores(gold, parsed);
  EXPECT_GE(scores.uas, 95.0);
  EXPECT_EQ(parsed, gold);
}

TEST(Train, SameSeedSameBytes) {
  const auto again = train(t::i3rab_corpus(), default_schema(), TrainOptions{10, 1});
  EXPECT_EQ(save_model(again.model), save_model(corpus_model().model));
}

TEST(Train, EmptyTreebank) {
  expect_errc<ParserError>([] { train({}, default_schema(), {}); }, ParserErrc::kEmptyTreebank);
}

TEST(Train, NonProjectiveSentencesSkipped) {
  const auto crossing = make_sentence({{"a", "N-", 0, "TOPIC"}, {"b", "N-", 4, "GEN"}, {"c", "N-", 1, "GEN"},
                                       {"d", "N-", 1, "GEN"}});
  Treebank only;
  only.sentences.push_back(crossing);
  expect_errc<ParserError>([&] { train(only, default_schema(), {}); }, ParserErrc::kAllSentencesNonProjective);
  auto mixed = t::i3rab_corpus();
  mixed.sentences.push_back(crossing);
  const auto r = train(mixed, default_schema(), TrainOptions{2, 1});
  EXPECT_EQ(r.report.skipped_nonprojective, 1u);
  EXPECT_EQ(r.report.sentences_used, 16u);
}

TEST(Parse, SchemaMismatch) {
  const auto other = i3rab::schema::load_schema("[punctuation_pos]\nG-\nQ-\n");
  const auto s = t::i3rab_corpus().sentences[0];
  expect_errc<ParserError>([&] { parse_sentence(s, corpus_model().model, &other); }, ParserErrc::kSchemaMismatch);
}

TEST(Parse, SingleToken) {
  const auto s = make_sentence({{"نعم", "D-", 0, ""}});
  const auto out = parse_sentence(s, corpus_model().model);
  EXPECT_EQ(out.at(1).head, 0);
  EXPECT_FALSE(out.at(1).deprel.empty());
}

TEST(Parse, IgnoresInputHeadsAndIsDeterministic) {
  const auto gold = t::i3rab_corpus();
  for (const auto& s : gold.sentences) {
    const auto blind = i3rab::conllx::strip_dependencies(s);
    const auto a = parse_sentence(blind, corpus_model().model);
    EXPECT_EQ(a, parse_sentence(s, corpus_model().model));
    EXPECT_EQ(a, parse_sentence(blind, corpus_model().model));
  }
}

TEST(Parse, AlwaysEmitsATree) {
  ParserModel empty;
  empty.labels = {"GEN", "TOPIC"};
  empty.root_label = "TOPIC";
  empty.fallback_label = "GEN";
  empty.punctuation = {"G-"};
  empty.templates = default_templates();
  const ParserModel* models[] = {&empty, &corpus_model().model};
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    auto s = t::random_projective_sentence(rng, 1 + static_cast<int>(rng() % 15));
    if (rng() % 3 == 0) {
      i3rab::conllx::Token dot;
      dot.id = static_cast<int>(s.size()) + 1;
      dot.form = ".";
      dot.cpostag = "G";
      dot.postag = "G-";
      s.tokens.push_back(dot);
    }
    for (const auto* m : models) {
      const auto out = parse_sentence(i3rab::conllx::strip_dependencies(s), *m);
      ASSERT_EQ(out.size(), s.size());
      expect_tree(out);
    }
  }
}

}  // namespace

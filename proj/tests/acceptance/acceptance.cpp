// Acceptance gate: one PASS/FAIL line per criterion; exit status 1 when any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <random>
#include <string>
#include <vector>

#include "i3rab/conllx.hpp"
#include "i3rab/converter.hpp"
#include "i3rab/eval.hpp"
#include "i3rab/parser.hpp"
#include "i3rab/schema.hpp"
#include "random_padt.hpp"
#include "random_trees.hpp"
#include "test_data.hpp"

namespace {

using namespace i3rab;
namespace t = i3rab::testing;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fixed(double v, int places) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", places, v);
  return buf;
}

std::string sci(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

const std::vector<double> kPadtUas = {77.4, 78.5, 75.4, 75.7, 81.8, 78.2, 79.2, 76.4, 75.2, 80.6};
const std::vector<double> kI3rabUas = {90.4, 84.4, 82.4, 83.3, 84.3, 77.9, 83.4, 81.7, 82.5, 86.4};
const std::vector<double> kPadtLas = {66.8, 65.8, 62.0, 63.3, 69.4, 66.4, 69.7, 65.4, 64.4, 70.1};
const std::vector<double> kI3rabLas = {88.3, 79.7, 76.4, 77.6, 79.1, 72.7, 78.3, 76.0, 78.2, 81.7};

Outcome table_arithmetic() {
  bool ok = true;
  const std::string means = fixed(eval::mean(kPadtUas), 1) + "/" + fixed(eval::mean(kI3rabUas), 1) + " LAS " +
                            fixed(eval::mean(kPadtLas), 1) + "/" + fixed(eval::mean(kI3rabLas), 1);
  ok &= means == "77.8/83.7 LAS 66.3/78.8";
  const double up_uas = eval::improvement_pct(kPadtUas, kI3rabUas);
  const double up_las = eval::improvement_pct(kPadtLas, kI3rabLas);
  ok &= std::fabs(up_uas - 7.5) <= 0.05 && std::fabs(up_las - 18.8) <= 0.05;
  const auto uas = eval::paired_t_test(kPadtUas, kI3rabUas);
  const auto las = eval::paired_t_test(kPadtLas, kI3rabLas);
  ok &= uas.p <= 0.001 && las.p <= 0.0005;
  return {ok, "UAS " + means + ", improvement " + fixed(up_uas, 2) + "%/" + fixed(up_las, 2) + "%, p " +
                  sci(uas.p) + "/" + sci(las.p)};
}

Outcome gold_conversion() {
  const auto rules = converter::default_rules(schema::default_schema());
  const auto padt = t::padt_corpus();
  const auto gold = t::i3rab_corpus();
  auto convert = [&](std::size_t n) {
    const auto r = converter::retokenize_sentence(padt.sentences[n - 1], rules, n);
    return converter::restructure_heads(r.sentence, rules);
  };
  const auto unicef = convert(t::kUnicefStaff);
  std::vector<int> heads;
  std::vector<std::string> labels;
  for (const auto& tok : unicef.tokens) {
    heads.push_back(tok.head);
    labels.push_back(tok.deprel);
  }
  bool ok = unicef.size() == 7 && heads == std::vector<int>{0, 1, 1, 3, 3, 5, 6} &&
            labels == std::vector<std::string>{"TOPIC", "GEN", "PRED-VP", "AGENT", "OBJ", "P", "GEN"} &&
            unicef == gold.sentences[t::kUnicefStaff - 1];
  std::size_t matched = ok ? 1 : 0;
  for (std::size_t n : {t::kInnaIraqis, t::kKanaMuhammad, t::kLanYaqra, t::kLamYaqra}) {
    const bool same = convert(n) == gold.sentences[n - 1];
    matched += same ? 1 : 0;
    ok &= same;
  }
  return {ok, std::to_string(matched) + "/5 restructurings identical to the hand-built trees"};
}

Outcome direction_counts() {
  const auto padt = eval::DirectionStats::from_counts(670, 6863);
  const auto i3rab = eval::DirectionStats::from_counts(109, 7203);
  const auto a = fixed(padt.left_pct, 2), b = fixed(i3rab.left_pct, 2);
  return {a == "9.76" && b == "1.51", "left " + a + "% and " + b + "%"};
}

Outcome token_accounting() {
  std::mt19937_64 rng(2024);
  std::size_t runs = 0, sentences = 0, changes = 0;
  for (; runs < 500; ++runs) {
    const auto rules = t::random_rules(rng);
    conllx::Treebank tb;
    const int n = 1 + static_cast<int>(rng() % 5);
    for (int i = 0; i < n; ++i) tb.sentences.push_back(t::random_padt_sentence(rng));
    const auto result = converter::convert_treebank(tb, rules);
    const auto delta = static_cast<long long>(result.treebank.token_count()) - static_cast<long long>(tb.token_count());
    if (delta != result.report.predicted_delta() || !result.report.balanced()) {
      return {false, "identity broken on run " + std::to_string(runs)};
    }
    sentences += tb.size();
    const auto& r = result.report;
    changes += r.dropped_pronoun + r.joined_pronoun + r.separated + r.merged + r.deleted;
  }
  // Bundled corpus too.
  const auto bundled = converter::convert_treebank(t::padt_corpus(), converter::default_rules(schema::default_schema()));
  const bool ok = bundled.report.balanced();
  return {ok, "identity held on " + std::to_string(runs) + " random runs (" + std::to_string(sentences) +
                  " sentences, " + std::to_string(changes) + " token changes) and the bundled corpus"};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Outcome round_trip() {
  std::size_t files = 0;
  for (const char* name : {"figures.padt.conll", "figures.i3rab.conll"}) {
    const auto bytes = slurp(t::data_path(name));
    if (bytes.empty() || conllx::emit_treebank(conllx::parse_treebank(bytes)) != bytes) {
      return {false, std::string("round trip differs for ") + name};
    }
    ++files;
  }
  std::mt19937_64 rng(77);
  for (int i = 0; i < 1000; ++i) {
    const auto doc = t::random_canonical_document(rng);
    if (conllx::emit_treebank(conllx::parse_treebank(doc)) != doc) {
      return {false, "fuzzed document " + std::to_string(i) + " differs"};
    }
    ++files;
  }
  return {true, std::to_string(files) + " files byte-identical"};
}

Outcome validator_suite() {
  using schema::ViolationCode;
  const auto& sch = schema::default_schema();
  const auto gold = t::i3rab_corpus();
  const auto clean = gold.sentences[t::kAnnaLebanon - 1];
  auto fires = [&](const conllx::Sentence& s, ViolationCode code) {
    const auto vs = schema::validate_sentence(s, sch);
    return std::any_of(vs.begin(), vs.end(), [&](const schema::Violation& v) { return v.code == code; });
  };
  int checks = 0, passed = 0;
  auto check = [&](bool b) {
    ++checks;
    passed += b ? 1 : 0;
  };
  // single root
  auto two_roots = clean;
  two_roots.at(2).head = 0;
  check(!fires(clean, ViolationCode::kMultiRoot) && fires(two_roots, ViolationCode::kMultiRoot));
  // acyclicity
  auto cyclic = clean;
  cyclic.at(3).head = 5;
  cyclic.at(5).head = 3;
  check(!fires(clean, ViolationCode::kCycle) && fires(cyclic, ViolationCode::kCycle));
  // head range
  auto self = clean;
  self.at(5).head = 5;
  check(!fires(clean, ViolationCode::kHeadSelfOrRange) && fires(self, ViolationCode::kHeadSelfOrRange));
  // label vocabulary
  auto padt_label = clean;
  padt_label.at(2).deprel = "Sb";
  check(!fires(clean, ViolationCode::kUnknownLabel) && fires(padt_label, ViolationCode::kUnknownLabel));
  // covert-token POS
  auto covert_noun = clean;
  covert_noun.at(4).cpostag = "N";
  check(!fires(clean, ViolationCode::kCovertNotPronoun) && fires(covert_noun, ViolationCode::kCovertNotPronoun));
  const auto corpus = schema::validate_treebank(gold, sch);
  const bool corpus_clean = !schema::has_errors(corpus);
  return {passed == checks && corpus_clean, std::to_string(passed) + "/" + std::to_string(checks) +
                                                " constraint pairs, bundled corpus " +
                                                std::to_string(corpus.size()) + " violations"};
}

Outcome oracle_soundness() {
  auto sound = [](const conllx::Sentence& s) {
    auto c = parser::Configuration::initial(s.size());
    for (const auto& tr : parser::oracle_sequence(s)) parser::apply_in_place(c, tr);
    auto got = c.arcs();
    auto want = parser::gold_arcs(s);
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    return got == want;
  };
  std::size_t checked = 0;
  for (const auto& tb : {t::i3rab_corpus(), t::padt_corpus()}) {
    for (const auto& s : tb.sentences) {
      if (!conllx::is_projective(s)) continue;
      if (!sound(s)) return {false, "oracle replay differs on a bundled sentence"};
      ++checked;
    }
  }
  std::mt19937_64 rng(500);
  for (int i = 0; i < 500; ++i) {
    const auto s = t::random_projective_sentence(rng, 1 + static_cast<int>(rng() % 25));
    if (!sound(s)) return {false, "oracle replay differs on random tree " + std::to_string(i)};
    ++checked;
  }
  return {true, std::to_string(checked) + " sentences replayed to their gold arcs"};
}

Outcome learnability() {
  const auto gold = t::i3rab_corpus();
  const auto& sch = schema::default_schema();
  const auto a = parser::train(gold, sch, {10, 1});
  const auto b = parser::train(gold, sch, {10, 1});
  const auto parsed = parser::parse_treebank(gold, a.model, &sch);
  const auto scores = eval::attachment_scores(gold, parsed);
  const bool same = parser::save_model(a.model) == parser::save_model(b.model);
  return {gold.size() <= 50 && scores.uas >= 95.0 && same,
          std::to_string(gold.size()) + " sentences, 10 epochs: UAS " + fixed(scores.uas, 2) + ", LAS " +
              fixed(scores.las, 2) + (same ? ", identical model bytes" : ", model bytes differ")};
}

Outcome distance_formula() {
  bool ok = true;
  for (int h = 1; h < 20; ++h) ok &= eval::dependency_distance(h, h + 1) == 0 && eval::dependency_distance(h + 1, h) == 0;
  ok &= eval::dependency_distance(0, 1) == 0;
  const auto gold = t::i3rab_corpus();
  conllx::Treebank dotted;
  dotted.sentences = {gold.sentences[t::kSunShining - 1]};
  ok &= dotted.sentences[0].tokens.back().form == ".";
  eval::EvalOptions keep, drop;
  drop.exclude_root_dot_distance = true;
  const auto with = eval::distance_histogram(dotted, keep);
  const auto without = eval::distance_histogram(dotted, drop);
  const auto count = [](const eval::DistanceHistogram& h) {
    std::size_t n = 0;
    for (const auto& [d, c] : h) n += c;
    return n;
  };
  ok &= count(with.root_arcs) == 2 && count(without.root_arcs) == 1 && with.root_arcs.count(2) == 1 &&
        without.root_arcs.count(2) == 0;
  return {ok, "adjacent arcs give 0; root-dot arc " + std::string(ok ? "excluded" : "not excluded") +
                  " under the flag (" + std::to_string(count(with.root_arcs)) + " -> " +
                  std::to_string(count(without.root_arcs)) + " root arcs)"};
}

Outcome t_distribution() {
  const std::pair<double, double> oracle[] = {{0.5, 0.6290712998260264},
                                              {2.262, 0.05001284550245455},
                                              {5.28, 0.0005071031710463585},
                                              {9.4, 5.974105120491206e-06}};
  double worst = 0.0;
  for (const auto& [tv, p] : oracle) worst = std::max(worst, std::fabs(eval::student_t_two_sided(tv, 9) - p));
  return {worst <= 1e-6, "max |p - oracle| = " + sci(worst)};
}

struct Criterion {
  int number;
  const char* name;
  std::function<Outcome()> run;
  double limit_seconds;  // 0 = no limit
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "table arithmetic", table_arithmetic, 1.0},
      {2, "gold conversion", gold_conversion, 1.0},
      {3, "direction percentages", direction_counts, 0.0},
      {4, "token accounting", token_accounting, 0.0},
      {5, "round trip", round_trip, 0.0},
      {6, "validator suite", validator_suite, 0.0},
      {7, "oracle soundness", oracle_soundness, 0.0},
      {8, "learnability", learnability, 60.0},
      {9, "distance formula", distance_formula, 0.0},
      {10, "t-distribution accuracy", t_distribution, 0.0},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && secs >= c.limit_seconds) {
      o.pass = false;
      o.detail += " [over the " + fixed(c.limit_seconds, 0) + " s limit]";
    }
    if (!o.pass) ++failures;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << (c.number < 10 ? " " : "") << c.number << "  " << c.name
              << ": " << o.detail << " (" << fixed(secs * 1000, 1) << " ms)\n";
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << "\n";
  return failures == 0 ? 0 : 1;
}

#include "i3rab/cli/command.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "i3rab/cli/render.hpp"
#include "i3rab/conllx.hpp"
#include "i3rab/converter.hpp"
#include "i3rab/eval.hpp"
#include "i3rab/parser.hpp"
#include "i3rab/schema.hpp"
#include "i3rab/strings.hpp"

namespace i3rab::cli {

namespace {

constexpr const char* kSynopsis =
    "usage: i3rab {validate|convert|stats|train|parse|eval|crossval|render} [options] FILES...";

// Raised for bad flag values that CLI11 cannot check on its own.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string pct(double value) { return strings::format_fixed(value, 2); }

struct Context {
  std::ostream& out;
  std::ostream& err;
};

// ----- subcommand option holders ------------------------------------------

struct ValidateArgs {
  std::string schema = "default";
  std::string file;
};

struct ConvertArgs {
  std::string schema = "default";
  std::string rules = "default";
  std::string overrides;
  std::string input;
  std::string output;
  std::string report;
};

struct StatsArgs {
  std::string schema = "default";
  std::string file;
  bool exclude_punct = false;
  bool exclude_root_dot = false;
  bool machine = false;
};

struct TrainArgs {
  std::string schema = "default";
  int epochs = 10;
  std::uint64_t seed = 1;
  std::string train;
  std::string model;
};

struct ParseArgs {
  std::string model;
  std::string schema;
  std::string input;
  std::string output;
};

struct EvalArgs {
  bool exclude_punct = false;
  bool machine = false;
  std::string gold;
  std::string pred;
};

struct CrossvalArgs {
  std::string schema = "default";
  std::size_t k = 10;
  int epochs = 10;
  std::uint64_t seed = 1;
  bool exclude_punct = false;
  std::string file;
};

struct RenderArgs {
  std::string format = "text";
  bool rtl = false;
  std::size_t sentence = 0;
  std::string file;
  std::string output;
};

eval::EvalOptions eval_options(const schema::Schema& schema, bool exclude_punct, bool exclude_root_dot) {
  eval::EvalOptions opts;
  opts.exclude_punct = exclude_punct;
  opts.exclude_root_dot_distance = exclude_root_dot;
  opts.punct_tags = schema.punctuation_pos;
  return opts;
}

// ----- subcommands --------------------------------------------------------

int do_validate(const ValidateArgs& a, Context& ctx) {
  const auto schema = schema::load_schema_source(a.schema);
  const auto tb = conllx::read_treebank_file(a.file);
  const auto violations = schema::validate_treebank(tb, schema);
  std::size_t errors = 0;
  for (const auto& v : violations) {
    ctx.out << schema::format_violation(v) << "\n";
    if (v.severity == schema::Severity::kError) ++errors;
  }
  ctx.err << tb.size() << " sentences, " << errors << " errors, " << violations.size() - errors << " warnings\n";
  return errors > 0 ? kExitValidationErrors : kExitOk;
}

int do_convert(const ConvertArgs& a, Context& ctx) {
  const auto schema = schema::load_schema_source(a.schema);
  const auto rules = converter::load_rules_source(a.rules, schema);
  const auto tb = conllx::read_treebank_file(a.input);
  std::optional<conllx::Treebank> overrides;
  if (!a.overrides.empty()) overrides = conllx::read_treebank_file(a.overrides);
  const auto result = converter::convert_treebank(tb, rules, overrides);
  conllx::write_treebank_file(a.output, result.treebank);
  if (a.report.empty()) {
    ctx.out << result.report.to_text();
  } else {
    strings::write_file(a.report, result.report.to_text());
  }
  return kExitOk;
}

void print_histogram(std::ostream& out, const std::string& title, const eval::DistanceHistogram& h) {
  std::size_t total = 0;
  for (const auto& [d, n] : h) total += n;
  out << title << "\n";
  for (const auto& [d, n] : h) {
    const double share = total == 0 ? 0.0 : 100.0 * static_cast<double>(n) / static_cast<double>(total);
    out << "  " << std::setw(4) << d << std::setw(8) << n << std::setw(9) << pct(share) << "%\n";
  }
}

int do_stats(const StatsArgs& a, Context& ctx) {
  const auto schema = schema::load_schema_source(a.schema);
  const auto tb = conllx::read_treebank_file(a.file);
  const auto opts = eval_options(schema, a.exclude_punct, a.exclude_root_dot);
  const auto dir = eval::direction_stats(tb);
  const auto dist = eval::distance_histogram(tb, opts);
  const auto card = eval::cardinality_classes(tb);
  auto& out = ctx.out;

  if (a.machine) {
    out << "sentences\t" << tb.size() << "\n";
    out << "tokens\t" << tb.token_count() << "\n";
    out << "direction.total\t" << dir.total << "\n";
    out << "direction.root_arcs\t" << dir.root_arcs << "\n";
    out << "direction.left\t" << dir.left << "\n";
    out << "direction.right\t" << dir.right << "\n";
    out << "direction.left_pct\t" << pct(dir.left_pct) << "\n";
    out << "direction.right_pct\t" << pct(dir.right_pct) << "\n";
    for (const auto& [d, n] : dist.root_arcs) out << "distance.root." << d << "\t" << n << "\n";
    for (const auto& [d, n] : dist.other_arcs) out << "distance.other." << d << "\t" << n << "\n";
    for (const auto& [label, share] : card) {
      out << "cardinality." << label << "\t" << share.count << "\t" << pct(share.pct) << "\t"
          << eval::to_string(share.cls) << "\n";
    }
    return kExitOk;
  }

  out << "sentences " << tb.size() << ", tokens " << tb.token_count() << "\n\n";
  out << "direction\n";
  out << "  arcs       " << std::setw(8) << dir.total << "\n";
  out << "  root arcs  " << std::setw(8) << dir.root_arcs << "\n";
  out << "  left       " << std::setw(8) << dir.left << std::setw(9) << pct(dir.left_pct) << "%\n";
  out << "  right      " << std::setw(8) << dir.right << std::setw(9) << pct(dir.right_pct) << "%\n\n";
  print_histogram(out, "distance (root arcs)", dist.root_arcs);
  out << "\n";
  print_histogram(out, "distance (other arcs)", dist.other_arcs);
  out << "\ncardinality\n";
  for (const auto& [label, share] : card) {
    out << "  " << std::left << std::setw(12) << label << std::right << std::setw(8) << share.count << std::setw(9)
        << pct(share.pct) << "%  " << eval::to_string(share.cls) << "\n";
  }
  return kExitOk;
}

int do_train(const TrainArgs& a, Context& ctx) {
  const auto schema = schema::load_schema_source(a.schema);
  const auto tb = conllx::read_treebank_file(a.train);
  const auto result = parser::train(tb, schema, {a.epochs, a.seed});
  parser::save_model_file(a.model, result.model);
  ctx.out << "sentences\t" << result.report.sentences_used << "\n";
  ctx.out << "skipped_nonprojective\t" << result.report.skipped_nonprojective << "\n";
  ctx.out << "epochs\t" << a.epochs << "\n";
  ctx.out << "features\t" << result.model.weights.size() << "\n";
  return kExitOk;
}

int do_parse(const ParseArgs& a, Context&) {
  const auto model = parser::load_model_file(a.model);
  std::optional<schema::Schema> schema;
  if (!a.schema.empty()) schema = schema::load_schema_source(a.schema);
  conllx::ReadOptions read;
  read.allow_missing_heads = true;
  const auto tb = conllx::read_treebank_file(a.input, read);
  conllx::write_treebank_file(a.output, parser::parse_treebank(tb, model, schema ? &*schema : nullptr));
  return kExitOk;
}

int do_eval(const EvalArgs& a, Context& ctx) {
  const auto gold = conllx::read_treebank_file(a.gold);
  const auto pred = conllx::read_treebank_file(a.pred);
  eval::EvalOptions opts;
  opts.exclude_punct = a.exclude_punct;
  const auto r = eval::attachment_scores(gold, pred, opts);
  if (a.machine) {
    ctx.out << "uas\t" << pct(r.uas) << "\nlas\t" << pct(r.las) << "\ntokens\t" << r.token_count << "\n";
  } else {
    ctx.out << "UAS " << pct(r.uas) << " / LAS " << pct(r.las) << "\n";
  }
  return kExitOk;
}

int do_crossval(const CrossvalArgs& a, Context& ctx) {
  const auto schema = schema::load_schema_source(a.schema);
  const auto tb = conllx::read_treebank_file(a.file);
  eval::CrossValidationOptions opts;
  opts.k = a.k;
  opts.epochs = a.epochs;
  opts.seed = a.seed;
  opts.eval = eval_options(schema, a.exclude_punct, false);
  const auto scores = eval::cross_validate(tb, schema, opts);
  ctx.out << "fold\tuas\tlas\n";
  for (std::size_t i = 0; i < scores.folds.size(); ++i) {
    ctx.out << i + 1 << "\t" << pct(scores.folds[i].uas) << "\t" << pct(scores.folds[i].las) << "\n";
  }
  ctx.out << "avg\t" << pct(scores.avg_uas) << "\t" << pct(scores.avg_las) << "\n";
  return kExitOk;
}

int do_render(const RenderArgs& a, Context&) {
  const auto tb = conllx::read_treebank_file(a.file);
  if (a.sentence > tb.size()) {
    throw UsageError("--sentence " + std::to_string(a.sentence) + " is beyond the " + std::to_string(tb.size()) +
                     " sentences in " + a.file);
  }
  std::vector<const conllx::Sentence*> chosen;
  if (a.sentence > 0) {
    chosen.push_back(&tb.sentences[a.sentence - 1]);
  } else if (a.format == "svg") {
    if (!tb.empty()) chosen.push_back(&tb.sentences.front());
  } else {
    for (const auto& s : tb.sentences) chosen.push_back(&s);
  }
  std::string text;
  for (std::size_t i = 0; i < chosen.size(); ++i) {
    if (a.format == "svg") {
      text += render_svg(*chosen[i], {a.rtl});
    } else {
      if (i > 0) text += "\n";
      text += render_text(*chosen[i]);
    }
  }
  strings::write_file(a.output, text);
  return kExitOk;
}

// Input problems (unreadable files, malformed CoNLL-X, config or model
// files) map to 3; bad flag values to 2; anything else to 4.
int classify_error(const Error& e) {
  static const std::set<std::string> kInputCodes = {
      "IO_ERROR", "MALFORMED_ROW", "ID_GAP", "HEAD_OUT_OF_RANGE", "DUPLICATE_KEY", "MALFORMED_PAIR",
      "UNKNOWN_SECTION", "DUPLICATE_ENTRY", "ALIAS_TARGET_MISSING", "MALFORMED_LINE", "MALFORMED_RULES",
      "MALFORMED_MODEL", "OVERRIDE_INDEX_OUT_OF_RANGE", "INVALID_OVERRIDE",
  };
  if (kInputCodes.count(e.code()) != 0) return kExitIo;
  if (e.code() == "K_TOO_LARGE") return kExitUsage;
  return kExitInternal;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"I3rab treebank toolkit", "i3rab"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  ValidateArgs validate;
  auto* v = app.add_subcommand("validate", "Check a treebank against the schema");
  v->add_option("--schema", validate.schema, "Schema file or 'default'");
  v->add_option("file", validate.file, "CoNLL-X file")->required();

  ConvertArgs convert;
  auto* c = app.add_subcommand("convert", "Convert PADT-style trees to I3rab");
  c->add_option("--schema", convert.schema, "Schema file or 'default'");
  c->add_option("--rules", convert.rules, "Rules file or 'default'");
  c->add_option("--overrides", convert.overrides, "CoNLL-X file of hand-corrected sentences");
  c->add_option("--report", convert.report, "Write the conversion report here");
  c->add_option("input", convert.input, "PADT-style CoNLL-X file")->required();
  c->add_option("output", convert.output, "Converted CoNLL-X file")->required();

  StatsArgs stats;
  auto* st = app.add_subcommand("stats", "Direction, distance and label statistics");
  st->add_option("--schema", stats.schema, "Schema file or 'default'");
  st->add_flag("--exclude-punct", stats.exclude_punct, "Leave punctuation arcs out of the distance histogram");
  st->add_flag("--exclude-root-dot", stats.exclude_root_dot, "Leave the ROOT-to-final-dot arc out");
  st->add_flag("--machine", stats.machine, "Print key<TAB>value lines");
  st->add_option("file", stats.file, "CoNLL-X file")->required();

  TrainArgs train;
  auto* tr = app.add_subcommand("train", "Train a parser model");
  tr->add_option("--schema", train.schema, "Schema file or 'default'");
  tr->add_option("--epochs", train.epochs, "Training epochs")->check(CLI::PositiveNumber);
  tr->add_option("--seed", train.seed, "Shuffle seed");
  tr->add_option("train", train.train, "Training CoNLL-X file")->required();
  tr->add_option("model", train.model, "Model file to write")->required();

  ParseArgs parse;
  auto* p = app.add_subcommand("parse", "Parse sentences with a trained model");
  p->add_option("--model", parse.model, "Model file")->required();
  p->add_option("--schema", parse.schema, "Require the model to match this schema");
  p->add_option("input", parse.input, "CoNLL-X input (heads ignored)")->required();
  p->add_option("output", parse.output, "Parsed CoNLL-X file")->required();

  EvalArgs ev;
  auto* e = app.add_subcommand("eval", "Attachment scores of a prediction against gold");
  e->add_flag("--exclude-punct", ev.exclude_punct, "Skip punctuation tokens");
  e->add_flag("--machine", ev.machine, "Print key<TAB>value lines");
  e->add_option("gold", ev.gold, "Gold CoNLL-X file")->required();
  e->add_option("pred", ev.pred, "Predicted CoNLL-X file")->required();

  CrossvalArgs cv;
  auto* x = app.add_subcommand("crossval", "k-fold cross-validation of the parser");
  x->add_option("--schema", cv.schema, "Schema file or 'default'");
  x->add_option("--k", cv.k, "Number of folds")->check(CLI::PositiveNumber);
  x->add_option("--epochs", cv.epochs, "Training epochs")->check(CLI::PositiveNumber);
  x->add_option("--seed", cv.seed, "Shuffle seed");
  x->add_flag("--exclude-punct", cv.exclude_punct, "Skip punctuation tokens when scoring");
  x->add_option("file", cv.file, "CoNLL-X file")->required();

  RenderArgs render;
  auto* r = app.add_subcommand("render", "Draw dependency trees as text or SVG");
  r->add_option("--format", render.format, "text or svg")->check(CLI::IsMember({"text", "svg"}));
  r->add_flag("--rtl", render.rtl, "Mirror the SVG layout right-to-left");
  r->add_option("--sentence", render.sentence, "1-based sentence to draw")->check(CLI::PositiveNumber);
  r->add_option("file", render.file, "CoNLL-X file")->required();
  r->add_option("output", render.output, "Output file")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& help) {
    return app.exit(help, out, err);
  } catch (const CLI::CallForAllHelp& help) {
    return app.exit(help, out, err);
  } catch (const CLI::ParseError& error) {
    err << "i3rab: " << error.what() << "\n" << kSynopsis << "\n";
    return kExitUsage;
  }

  Context ctx{out, err};
  try {
    if (*v) return do_validate(validate, ctx);
    if (*c) return do_convert(convert, ctx);
    if (*st) return do_stats(stats, ctx);
    if (*tr) return do_train(train, ctx);
    if (*p) return do_parse(parse, ctx);
    if (*e) return do_eval(ev, ctx);
    if (*x) return do_crossval(cv, ctx);
    if (*r) return do_render(render, ctx);
  } catch (const UsageError& error) {
    err << "i3rab: " << error.what() << "\n" << kSynopsis << "\n";
    return kExitUsage;
  } catch (const Error& error) {
    err << "i3rab: " << error.code() << ": " << error.what() << "\n";
    return classify_error(error);
  } catch (const std::exception& error) {
    err << "i3rab: internal error: " << error.what() << "\n";
    return kExitInternal;
  }
  err << kSynopsis << "\n";
  return kExitUsage;
}

}  // namespace i3rab::cli

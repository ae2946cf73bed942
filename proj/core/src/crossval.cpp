#include <future>

#include "i3rab/eval.hpp"
#include "i3rab/parser.hpp"

namespace i3rab::eval {

std::vector<Fold> kfold_split(const Treebank& tb, std::size_t k) {
  if (k == 0) throw EvalError(EvalErrc::kKTooLarge, "k must be positive");
  if (k > tb.size()) {
    throw EvalError(EvalErrc::kKTooLarge,
                    "k = " + std::to_string(k) + " exceeds the " + std::to_string(tb.size()) + " sentences");
  }
  const std::size_t n = tb.size();
  std::vector<Fold> folds(k);
  std::size_t begin = 0;
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t size = n / k + (i < n % k ? 1 : 0);
    const std::size_t end = begin + size;
    for (std::size_t j = 0; j < n; ++j) {
      auto& target = (j >= begin && j < end) ? folds[i].test : folds[i].train;
      target.sentences.push_back(tb.sentences[j]);
    }
    folds[i].train.source = folds[i].test.source = tb.source;
    begin = end;
  }
  return folds;
}

FoldScores cross_validate(const Treebank& tb, const schema::Schema& schema,
                          const CrossValidationOptions& options) {
  const auto folds = kfold_split(tb, options.k);
  std::vector<std::future<EvalReport>> jobs;
  jobs.reserve(folds.size());
  for (const auto& fold : folds) {
    jobs.push_back(std::async(std::launch::async, [&fold, &schema, &options] {
      const auto model = parser::train(fold.train, schema, {options.epochs, options.seed}).model;
      Treebank blind;
      for (const auto& s : fold.test.sentences) blind.sentences.push_back(conllx::strip_dependencies(s));
      return attachment_scores(fold.test, parser::parse_treebank(blind, model), options.eval);
    }));
  }
  FoldScores scores;
  for (auto& job : jobs) scores.folds.push_back(job.get());
  std::vector<double> uas, las;
  for (const auto& f : scores.folds) {
    uas.push_back(f.uas);
    las.push_back(f.las);
  }
  scores.avg_uas = mean(uas);
  scores.avg_las = mean(las);
  return scores;
}

}  // namespace i3rab::eval

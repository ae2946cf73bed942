#pragma once

// Attachment scores, treebank statistics, cross-validation and the
// paired t-test.

#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "i3rab/conllx.hpp"
#include "i3rab/error.hpp"
#include "i3rab/schema.hpp"

namespace i3rab::eval {

using conllx::Sentence;
using conllx::Treebank;

enum class EvalErrc {
  kTokenMismatch,
  kZeroVariance,
  kLengthMismatch,
  kZeroBase,
  kKTooLarge,
  kEmptyInput,
};

std::string_view to_string(EvalErrc errc);

class EvalError : public TypedError<EvalErrc> {
 public:
  using TypedError::TypedError;
};

struct EvalOptions {
  bool exclude_punct = false;
  // Leave the arc between ROOT and a sentence-final punctuation mark out of
  // the distance histogram.
  bool exclude_root_dot_distance = false;
  std::set<std::string> punct_tags = {"G-"};
};

// ----- attachment scores --------------------------------------------------

struct EvalReport {
  double uas = 0.0;  // percent
  double las = 0.0;  // percent
  std::size_t token_count = 0;
  std::size_t correct_head = 0;
  std::size_t correct_head_and_label = 0;

  static EvalReport from_counts(std::size_t tokens, std::size_t head, std::size_t head_and_label);
  // Micro-average: pools the counts and recomputes the percentages.
  EvalReport& operator+=(const EvalReport& other);
};

EvalReport attachment_scores(const Sentence& gold, const Sentence& pred, const EvalOptions& opts = {});
EvalReport attachment_scores(const Treebank& gold, const Treebank& pred, const EvalOptions& opts = {});

// ----- corpus statistics --------------------------------------------------

// Arcs from ROOT count as RIGHT (ROOT sits at position 0) and are part of
// `total`; `root_arcs` reports how many of them there are.
struct DirectionStats {
  std::size_t total = 0;
  std::size_t left = 0;
  std::size_t right = 0;
  std::size_t root_arcs = 0;
  double left_pct = 0.0;
  double right_pct = 0.0;

  static DirectionStats from_counts(std::size_t left, std::size_t total, std::size_t root_arcs = 0);
};

DirectionStats direction_stats(const Treebank& tb);
DirectionStats direction_stats(const Sentence& s);

// |head - dependent| - 1; ROOT is position 0.
int dependency_distance(int head, int dependent);

using DistanceHistogram = std::map<int, std::size_t>;

struct DistanceReport {
  DistanceHistogram root_arcs;
  DistanceHistogram other_arcs;
};

DistanceReport distance_histogram(const Treebank& tb, const EvalOptions& opts = {});

enum class CardinalityClass { kRare, kLow, kMedium, kHigh, kVeryHigh };
std::string_view to_string(CardinalityClass c);

// rare [0,1), low [1,5), medium [5,10), high [10,30), very-high [30,100].
CardinalityClass cardinality_class(double share_pct);

struct LabelShare {
  std::size_t count = 0;
  double pct = 0.0;
  CardinalityClass cls = CardinalityClass::kRare;
};

std::map<std::string, LabelShare> cardinality_classes(const Treebank& tb);

// ----- cross-validation ---------------------------------------------------

struct Fold {
  Treebank train;
  Treebank test;
};

// Contiguous blocks in file order; the first n mod k blocks hold one extra
// sentence. Throws KTooLarge when k exceeds the sentence count.
std::vector<Fold> kfold_split(const Treebank& tb, std::size_t k);

struct FoldScores {
  std::vector<EvalReport> folds;
  double avg_uas = 0.0;
  double avg_las = 0.0;
};

struct CrossValidationOptions {
  std::size_t k = 10;
  int epochs = 10;
  std::uint64_t seed = 1;
  EvalOptions eval;
};

// Folds train concurrently, each with its own model; results keep fold order.
FoldScores cross_validate(const Treebank& tb, const schema::Schema& schema,
                          const CrossValidationOptions& options);

// ----- significance -------------------------------------------------------

double mean(const std::vector<double>& values);

struct TTestResult {
  double t = 0.0;
  double p = 0.0;  // two-sided
  std::size_t df = 0;
  double mean_difference = 0.0;
};

// Paired t-test on b - a.
TTestResult paired_t_test(const std::vector<double>& a, const std::vector<double>& b);

// Regularized incomplete beta I_x(a, b).
double incomplete_beta(double a, double b, double x);
// Two-sided tail probability of Student's t with `df` degrees of freedom.
double student_t_two_sided(double t, double df);

// 100 * (mean(new) - mean(base)) / mean(base) on unrounded means.
double improvement_pct(const std::vector<double>& base, const std::vector<double>& updated);

}  // namespace i3rab::eval

#include <cstdlib>

#include "i3rab/eval.hpp"

namespace i3rab::eval {

DirectionStats DirectionStats::from_counts(std::size_t left, std::size_t total, std::size_t root_arcs) {
  DirectionStats d;
  d.total = total;
  d.left = left;
  d.right = total - left;
  d.root_arcs = root_arcs;
  if (total > 0) {
    d.left_pct = 100.0 * static_cast<double>(left) / static_cast<double>(total);
    d.right_pct = 100.0 * static_cast<double>(d.right) / static_cast<double>(total);
  }
  return d;
}

DirectionStats direction_stats(const Sentence& s) {
  std::size_t left = 0, roots = 0;
  for (const auto& t : s.tokens) {
    if (t.head == 0) ++roots;
    if (t.head > t.id) ++left;
  }
  return DirectionStats::from_counts(left, s.size(), roots);
}

DirectionStats direction_stats(const Treebank& tb) {
  std::size_t left = 0, total = 0, roots = 0;
  for (const auto& s : tb.sentences) {
    const auto d = direction_stats(s);
    left += d.left;
    total += d.total;
    roots += d.root_arcs;
  }
  return DirectionStats::from_counts(left, total, roots);
}

int dependency_distance(int head, int dependent) { return std::abs(head - dependent) - 1; }

DistanceReport distance_histogram(const Treebank& tb, const EvalOptions& opts) {
  DistanceReport out;
  for (const auto& s : tb.sentences) {
    for (const auto& t : s.tokens) {
      const bool punct = opts.punct_tags.count(t.postag) != 0;
      if (opts.exclude_punct && punct) continue;
      const int d = dependency_distance(t.head, t.id);
      if (t.head == 0) {
        const bool final_dot = punct && t.id == static_cast<int>(s.size());
        if (final_dot && opts.exclude_root_dot_distance) continue;
        ++out.root_arcs[d];
      } else {
        ++out.other_arcs[d];
      }
    }
  }
  return out;
}

std::string_view to_string(CardinalityClass c) {
  switch (c) {
    case CardinalityClass::kRare: return "rare";
    case CardinalityClass::kLow: return "low";
    case CardinalityClass::kMedium: return "medium";
    case CardinalityClass::kHigh: return "high";
    case CardinalityClass::kVeryHigh: return "very-high";
  }
  return "rare";
}

CardinalityClass cardinality_class(double share_pct) {
  if (share_pct < 1.0) return CardinalityClass::kRare;
  if (share_pct < 5.0) return CardinalityClass::kLow;
  if (share_pct < 10.0) return CardinalityClass::kMedium;
  if (share_pct < 30.0) return CardinalityClass::kHigh;
  return CardinalityClass::kVeryHigh;
}

std::map<std::string, LabelShare> cardinality_classes(const Treebank& tb) {
  std::map<std::string, LabelShare> out;
  std::size_t total = 0;
  for (const auto& s : tb.sentences) {
    for (const auto& t : s.tokens) {
      ++out[t.deprel].count;
      ++total;
    }
  }
  for (auto& [label, share] : out) {
    share.pct = 100.0 * static_cast<double>(share.count) / static_cast<double>(total);
    share.cls = cardinality_class(share.pct);
  }
  return out;
}

}  // namespace i3rab::eval

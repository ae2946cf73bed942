#include <cmath>
#include <limits>
#include <numeric>

#include "i3rab/eval.hpp"

namespace i3rab::eval {

namespace {

// Continued fraction for I_x(a, b), modified Lentz evaluation.
double beta_continued_fraction(double a, double b, double x) {
  constexpr int kMaxIterations = 1000;
  constexpr double kEpsilon = 1e-15;
  constexpr double kTiny = 1e-300;
  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIterations; ++m) {
    const double m2 = 2.0 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1.0) < kEpsilon) break;
  }
  return h;
}

}  // namespace

double incomplete_beta(double a, double b, double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const double log_front =
      std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) + a * std::log(x) + b * std::log1p(-x);
  const double front = std::exp(log_front);
  if (x < (a + 1.0) / (a + b + 2.0)) return front * beta_continued_fraction(a, b, x) / a;
  return 1.0 - front * beta_continued_fraction(b, a, 1.0 - x) / b;
}

double student_t_two_sided(double t, double df) {
  if (std::isinf(t)) return 0.0;
  return incomplete_beta(df / 2.0, 0.5, df / (df + t * t));
}

double mean(const std::vector<double>& values) {
  if (values.empty()) throw EvalError(EvalErrc::kEmptyInput, "mean of an empty sequence");
  return std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
}

TTestResult paired_t_test(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) {
    throw EvalError(EvalErrc::kLengthMismatch,
                    "paired samples differ in length (" + std::to_string(a.size()) + " vs " + std::to_string(b.size()) + ")");
  }
  if (a.size() < 2) throw EvalError(EvalErrc::kLengthMismatch, "paired t-test needs at least two pairs");
  std::vector<double> diff(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) diff[i] = b[i] - a[i];
  const double m = mean(diff);
  double ss = 0.0;
  for (double d : diff) ss += (d - m) * (d - m);
  const auto n = static_cast<double>(diff.size());
  const double sd = std::sqrt(ss / (n - 1.0));
  if (sd == 0.0 || sd < std::numeric_limits<double>::epsilon() * std::fabs(m)) {
    throw EvalError(EvalErrc::kZeroVariance, "all paired differences are equal");
  }
  TTestResult r;
  r.df = diff.size() - 1;
  r.mean_difference = m;
  r.t = m / (sd / std::sqrt(n));
  r.p = student_t_two_sided(r.t, static_cast<double>(r.df));
  return r;
}

double improvement_pct(const std::vector<double>& base, const std::vector<double>& updated) {
  if (base.size() != updated.size()) throw EvalError(EvalErrc::kLengthMismatch, "score sequences differ in length");
  const double b = mean(base);
  if (b == 0.0) throw EvalError(EvalErrc::kZeroBase, "base mean is zero");
  return 100.0 * (mean(updated) - b) / b;
}

}  // namespace i3rab::eval

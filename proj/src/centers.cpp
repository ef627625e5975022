#include "predomain/centers.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace predomain {

namespace {

constexpr double kTieTolerance = 1e-12;

// Scans residual(m) over the sorted samples and keeps the first minimizer of
// |residual|. Runs of equal samples share one residual, evaluated at the run
// start, so ties between duplicates always resolve to the smallest index.
// Residuals that differ by less than `tolerance` count as tied; otherwise
// rounding in the closed forms could break exact ties (e.g. two samples
// symmetric about the mean) in favour of the later index.
template <typename Residual>
CenterResult select_balance(const ClassScores& scores, CenterMethod method, double tolerance,
                            Residual&& residual) {
  const auto x = scores.values();
  std::size_t best = 0;
  double best_residual = residual(0);
  for (std::size_t m = 1; m < x.size(); ++m) {
    if (x[m] == x[m - 1]) continue;
    const double r = residual(m);
    if (std::abs(r) < std::abs(best_residual) - tolerance) {
      best = m;
      best_residual = r;
    }
  }
  return {method, x[best], best, best_residual};
}

}  // namespace

std::string_view to_string(CenterMethod method) {
  switch (method) {
    case CenterMethod::mean: return "mean";
    case CenterMethod::median: return "median";
    case CenterMethod::distance_balance: return "balance";
    case CenterMethod::weighted_balance: return "weighted-balance";
  }
  return "?";
}

CenterMethod parse_center_method(std::string_view text) {
  if (text == "mean") return CenterMethod::mean;
  if (text == "median") return CenterMethod::median;
  if (text == "balance" || text == "distance-balance") return CenterMethod::distance_balance;
  if (text == "weighted-balance") return CenterMethod::weighted_balance;
  throw std::invalid_argument("unknown center method '" + std::string(text) + "'");
}

CenterResult center_mean(const ClassScores& scores) {
  const auto x = scores.values();
  double mean = std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(x.size());
  // Rounding can push the quotient one ulp outside the sample range.
  mean = std::clamp(mean, scores.min(), scores.max());
  return {CenterMethod::mean, mean, std::nullopt, 0.0};
}

CenterResult center_median(const ClassScores& scores) {
  const auto n = scores.size();
  const double value = n % 2 == 1 ? scores[n / 2] : (scores[n / 2 - 1] + scores[n / 2]) / 2.0;
  return {CenterMethod::median, value, std::nullopt, 0.0};
}

CenterResult center_distance_balance(const ClassScores& scores) {
  // sum_{n<m}(x_m - x_n) - sum_{n>m}(x_n - x_m) = N*x_m - sum(x)
  const auto x = scores.values();
  const double total = std::accumulate(x.begin(), x.end(), 0.0);
  const double count = static_cast<double>(x.size());
  const double tolerance = kTieTolerance * count * (scores.max() - scores.min());
  return select_balance(scores, CenterMethod::distance_balance, tolerance,
                        [&](std::size_t m) { return count * x[m] - total; });
}

CenterResult center_weighted_balance(const ClassScores& scores) {
  // Work on deviations from the mean to keep the expanded squares small.
  const auto x = scores.values();
  const std::size_t n = x.size();
  const double mean = std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(n);

  std::vector<double> prefix1(n + 1, 0.0);
  std::vector<double> prefix2(n + 1, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const double y = x[i] - mean;
    prefix1[i + 1] = prefix1[i] + y;
    prefix2[i + 1] = prefix2[i] + y * y;
  }

  const double range = scores.max() - scores.min();
  const double tolerance = kTieTolerance * static_cast<double>(n) * range * range;
  return select_balance(scores, CenterMethod::weighted_balance, tolerance, [&](std::size_t m) {
    const double c = x[m] - mean;
    const double below = static_cast<double>(m);
    const double above = static_cast<double>(n - 1 - m);
    const double left = below * c * c - 2.0 * c * prefix1[m] + prefix2[m];
    const double right_sum1 = prefix1[n] - prefix1[m + 1];
    const double right_sum2 = prefix2[n] - prefix2[m + 1];
    const double right = right_sum2 - 2.0 * c * right_sum1 + above * c * c;
    return left - right;
  });
}

CenterResult compute_center(const ClassScores& scores, CenterMethod method) {
  switch (method) {
    case CenterMethod::mean: return center_mean(scores);
    case CenterMethod::median: return center_median(scores);
    case CenterMethod::distance_balance: return center_distance_balance(scores);
    case CenterMethod::weighted_balance: return center_weighted_balance(scores);
  }
  throw std::invalid_argument("unknown center method");
}

}  // namespace predomain

#include "predomain/thresholds.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace predomain {

namespace {

std::size_t count_less(const ClassScores& s, double t) {
  const auto v = s.values();
  return static_cast<std::size_t>(std::lower_bound(v.begin(), v.end(), t) - v.begin());
}

std::size_t count_less_equal(const ClassScores& s, double t) {
  const auto v = s.values();
  return static_cast<std::size_t>(std::upper_bound(v.begin(), v.end(), t) - v.begin());
}

std::size_t count_greater(const ClassScores& s, double t) { return s.size() - count_less_equal(s, t); }

std::size_t count_greater_equal(const ClassScores& s, double t) { return s.size() - count_less(s, t); }

// Samples of `s` accepted as genuine at threshold t.
std::size_t accepted(const ClassScores& s, double t, Polarity polarity, bool include_equal) {
  if (polarity == Polarity::genuine_low) {
    return include_equal ? count_less_equal(s, t) : count_less(s, t);
  }
  return include_equal ? count_greater_equal(s, t) : count_greater(s, t);
}

double sum(const ClassScores& s) {
  const auto v = s.values();
  return std::accumulate(v.begin(), v.end(), 0.0);
}

std::vector<double> distinct_pooled(const LabeledDataset& data) {
  std::vector<double> pooled;
  pooled.reserve(data.lower.size() + data.upper.size());
  std::merge(data.lower.values().begin(), data.lower.values().end(), data.upper.values().begin(),
             data.upper.values().end(), std::back_inserter(pooled));
  pooled.erase(std::unique(pooled.begin(), pooled.end()), pooled.end());
  return pooled;
}

}  // namespace

std::string_view to_string(Strategy strategy) {
  switch (strategy) {
    case Strategy::fake_border: return "fake-border";
    case Strategy::live_border: return "live-border";
    case Strategy::cross_point: return "cross-point";
    case Strategy::balance_point: return "balance-point";
    case Strategy::acer_left: return "acer-left";
    case Strategy::acer_right: return "acer-right";
    case Strategy::acer_mid: return "acer-mid";
  }
  return "?";
}

std::string_view to_string(ThresholdNote note) {
  switch (note) {
    case ThresholdNote::ok: return "ok";
    case ThresholdNote::classes_overlap: return "classes-overlap";
    case ThresholdNote::clamped_to_gap: return "clamped-to-gap";
    case ThresholdNote::circles_disjoint_fallback: return "circles-disjoint-fallback";
    case ThresholdNote::circles_nested_fallback: return "circles-nested-fallback";
  }
  return "?";
}

std::string_view to_string(TieRule rule) {
  switch (rule) {
    case TieRule::equal_is_genuine: return "equal-is-genuine";
    case TieRule::equal_is_attack: return "equal-is-attack";
    case TieRule::strict: return "strict";
  }
  return "?";
}

TieRule parse_tie_rule(std::string_view text) {
  if (text == "equal-is-genuine") return TieRule::equal_is_genuine;
  if (text == "equal-is-attack") return TieRule::equal_is_attack;
  if (text == "strict") return TieRule::strict;
  throw std::invalid_argument("unknown tie rule '" + std::string(text) + "'");
}

BorderPair threshold_borders(const LabeledDataset& data) {
  const bool lower_is_live = data.polarity == Polarity::genuine_low;
  const bool overlap = !data.separable();
  const auto note = overlap ? ThresholdNote::classes_overlap : ThresholdNote::ok;
  BorderPair borders;
  borders.lower = {lower_is_live ? Strategy::live_border : Strategy::fake_border, data.lower.max(),
                   !overlap, note};
  borders.upper = {lower_is_live ? Strategy::fake_border : Strategy::live_border, data.upper.min(),
                   !overlap, note};
  return borders;
}

long long acer_imbalance(const LabeledDataset& data, double threshold) {
  const auto n = static_cast<long long>(data.lower.size());
  const auto m = static_cast<long long>(data.upper.size());
  const auto lower_errors = static_cast<long long>(count_greater(data.lower, threshold));
  const auto upper_errors = static_cast<long long>(count_less(data.upper, threshold));
  return lower_errors * m - upper_errors * n;
}

AcerPlateau threshold_acer(const LabeledDataset& data) {
  const auto values = distinct_pooled(data);
  const auto k = values.size();
  const auto n = static_cast<long long>(data.lower.size());
  const auto m = static_cast<long long>(data.upper.size());

  // Candidate sequence: below, point 0, gap 0, point 1, ..., point k-1, above.
  // Candidate c in [1, 2k-1] is point (c-1)/2 when c is odd and the open
  // interval after point (c-2)/2 when c is even. Counts for intervals are
  // taken combinatorially so no floating midpoint is ever evaluated.
  const std::size_t total = 2 * k + 1;
  std::vector<long long> objective(total);
  objective[0] = n * m;  // every lower sample above, no upper sample below
  objective[total - 1] = n * m;
  for (std::size_t c = 1; c + 1 < total; ++c) {
    long long lower_errors = 0;
    long long upper_errors = 0;
    if (c % 2 == 1) {
      const double v = values[(c - 1) / 2];
      lower_errors = static_cast<long long>(count_greater(data.lower, v));
      upper_errors = static_cast<long long>(count_less(data.upper, v));
    } else {
      const double v = values[(c - 2) / 2];
      lower_errors = static_cast<long long>(count_greater(data.lower, v));
      upper_errors = static_cast<long long>(count_less_equal(data.upper, v));
    }
    objective[c] = std::llabs(lower_errors * m - upper_errors * n);
  }

  const auto best = *std::min_element(objective.begin(), objective.end());
  std::size_t first = 0;
  while (objective[first] != best) ++first;
  std::size_t last = total - 1;
  while (objective[last] != best) --last;

  // Infimum: a point contributes itself, an interval its left end.
  // Supremum: a point contributes itself, an interval its right end.
  const auto infimum = [&](std::size_t c) {
    if (c == 0) return values.front();
    return c % 2 == 1 ? values[(c - 1) / 2] : values[(c - 2) / 2];
  };
  const auto supremum = [&](std::size_t c) {
    if (c == total - 1) return values.back();
    return c % 2 == 1 ? values[(c - 1) / 2] : values[c / 2];
  };

  const double left = infimum(first);
  const double right = supremum(last);
  return {{Strategy::acer_left, left, true, ThresholdNote::ok},
          {Strategy::acer_mid, std::midpoint(left, right), true, ThresholdNote::ok},
          {Strategy::acer_right, right, true, ThresholdNote::ok}};
}

ThresholdCandidate threshold_balance(const LabeledDataset& data) {
  // sum_n (T - lower_n) = sum_m (upper_m - T)  =>  (N + M) T = sum(all)
  const double count = static_cast<double>(data.lower.size() + data.upper.size());
  const double pooled_mean = (sum(data.lower) + sum(data.upper)) / count;

  if (!data.separable()) {
    return {Strategy::balance_point, pooled_mean, true, ThresholdNote::classes_overlap};
  }
  const double gap_lo = data.lower.max();
  const double gap_hi = data.upper.min();
  if (pooled_mean < gap_lo) return {Strategy::balance_point, gap_lo, true, ThresholdNote::clamped_to_gap};
  if (pooled_mean > gap_hi) return {Strategy::balance_point, gap_hi, true, ThresholdNote::clamped_to_gap};
  return {Strategy::balance_point, pooled_mean, true, ThresholdNote::ok};
}

ThresholdCandidate threshold_cross(const DomainSummary& lower, const DomainSummary& upper) {
  const double c_lo = lower.center.value;
  const double c_hi = upper.center.value;
  if (c_lo > c_hi) {
    throw std::invalid_argument("threshold_cross expects lower.center <= upper.center");
  }
  const double r_lo = lower.radius;
  const double r_hi = upper.radius;
  const double d = c_hi - c_lo;

  if (d == 0.0 || d <= std::abs(r_lo - r_hi)) {
    if (d >= r_lo + r_hi && d > 0.0) {
      // Degenerate touch of a zero-radius circle: treat as disjoint.
      return {Strategy::cross_point, std::midpoint(c_lo + r_lo, c_hi - r_hi), true,
              ThresholdNote::circles_disjoint_fallback};
    }
    return {Strategy::cross_point, std::midpoint(c_lo, c_hi), false,
            ThresholdNote::circles_nested_fallback};
  }
  if (d >= r_lo + r_hi) {
    return {Strategy::cross_point, std::midpoint(c_lo + r_lo, c_hi - r_hi), true,
            ThresholdNote::circles_disjoint_fallback};
  }
  // Law of cosines: rU^2 = rL^2 + d^2 - 2 d rL cos(theta), foot = cL + rL cos(theta).
  const double foot = c_lo + (d * d + r_lo * r_lo - r_hi * r_hi) / (2.0 * d);
  return {Strategy::cross_point, foot, true, ThresholdNote::ok};
}

ThresholdEvaluation rates_from_counts(double threshold, std::size_t tp, std::size_t fp,
                                      std::size_t tn, std::size_t fn) {
  if (tn + fp == 0 || fn + tp == 0) {
    throw std::invalid_argument("cannot form error rates with an empty class");
  }
  ThresholdEvaluation e;
  e.threshold = threshold;
  e.tp = tp;
  e.fp = fp;
  e.tn = tn;
  e.fn = fn;
  e.apcer = static_cast<double>(fp) / static_cast<double>(tn + fp);
  e.bpcer = static_cast<double>(fn) / static_cast<double>(fn + tp);
  e.acer = (e.apcer + e.bpcer) / 2.0;
  e.fpr = e.apcer;
  e.tpr = static_cast<double>(tp) / static_cast<double>(tp + fn);
  return e;
}

ThresholdEvaluation evaluate_threshold(const LabeledDataset& data, double threshold,
                                       TieRule tie_rule) {
  if (!std::isfinite(threshold)) throw std::invalid_argument("threshold must be finite");
  const auto& genuine = data.genuine();
  const auto& attack = data.attack();
  const std::size_t tp = accepted(genuine, threshold, data.polarity, tie_rule != TieRule::equal_is_attack);
  const std::size_t fp = accepted(attack, threshold, data.polarity, tie_rule == TieRule::equal_is_genuine);
  return rates_from_counts(threshold, tp, fp, attack.size() - fp, genuine.size() - tp);
}

RocCurve roc_sweep(const LabeledDataset& data) {
  auto values = distinct_pooled(data);
  const double below = values.front() - 1.0;
  const double above = values.back() + 1.0;
  std::vector<double> thresholds;
  thresholds.reserve(values.size() + 2);
  if (data.polarity == Polarity::genuine_low) {
    thresholds.push_back(below);
    thresholds.insert(thresholds.end(), values.begin(), values.end());
    thresholds.push_back(above);
  } else {
    thresholds.push_back(above);
    thresholds.insert(thresholds.end(), values.rbegin(), values.rend());
    thresholds.push_back(below);
  }

  const auto& genuine = data.genuine();
  const auto& attack = data.attack();
  const double g = static_cast<double>(genuine.size());
  const double a = static_cast<double>(attack.size());

  RocCurve curve;
  curve.points.reserve(thresholds.size());
  // Trapezoids summed over integer counts: area * 2 * |G| * |A|.
  double doubled_area = 0.0;
  std::size_t prev_tp = 0;
  std::size_t prev_fp = 0;
  for (double t : thresholds) {
    const std::size_t tp = accepted(genuine, t, data.polarity, true);
    const std::size_t fp = accepted(attack, t, data.polarity, true);
    doubled_area += static_cast<double>(fp - prev_fp) * static_cast<double>(tp + prev_tp);
    prev_tp = tp;
    prev_fp = fp;
    curve.points.push_back({t, static_cast<double>(fp) / a, static_cast<double>(tp) / g});
  }
  curve.auc = doubled_area / (2.0 * g * a);
  return curve;
}

StrategySelection parse_strategy_selection(std::string_view text) {
  if (text == "all") return StrategySelection::all;
  if (text == "acer") return StrategySelection::acer;
  if (text == "balance") return StrategySelection::balance;
  if (text == "cross") return StrategySelection::cross;
  if (text == "borders") return StrategySelection::borders;
  throw std::invalid_argument("unknown strategy '" + std::string(text) + "'");
}

std::string_view to_string(StrategySelection selection) {
  switch (selection) {
    case StrategySelection::all: return "all";
    case StrategySelection::acer: return "acer";
    case StrategySelection::balance: return "balance";
    case StrategySelection::cross: return "cross";
    case StrategySelection::borders: return "borders";
  }
  return "?";
}

ThresholdReport threshold_report(const LabeledDataset& train, const LabeledDataset* dev,
                                 const ThresholdOptions& options) {
  const auto sel = options.selection;
  const bool all = sel == StrategySelection::all;
  std::vector<ThresholdCandidate> candidates;

  if (all || sel == StrategySelection::borders) {
    const auto borders = threshold_borders(train);
    const bool lower_is_fake = borders.lower.strategy == Strategy::fake_border;
    candidates.push_back(lower_is_fake ? borders.lower : borders.upper);
    candidates.push_back(lower_is_fake ? borders.upper : borders.lower);
  }
  if (all || sel == StrategySelection::cross) {
    auto lower = summarize_domain(train.lower, options.center);
    auto upper = summarize_domain(train.upper, options.center);
    if (lower.center.value > upper.center.value) std::swap(lower, upper);
    candidates.push_back(threshold_cross(lower, upper));
  }
  if (all || sel == StrategySelection::balance) {
    candidates.push_back(threshold_balance(train));
  }
  if (all || sel == StrategySelection::acer) {
    const auto plateau = threshold_acer(train);
    candidates.push_back(plateau.left);
    if (!all) candidates.push_back(plateau.mid);
    candidates.push_back(plateau.right);
  }

  ThresholdReport report;
  report.has_dev = dev != nullptr;
  for (const auto& c : candidates) {
    ThresholdRow row{c, evaluate_threshold(train, c.value, options.tie_rule), std::nullopt};
    if (dev) row.dev = evaluate_threshold(*dev, c.value, options.tie_rule);
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace predomain

#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "predomain/geometry.hpp"
#include "predomain/score_model.hpp"

namespace predomain {

enum class Strategy {
  fake_border,
  live_border,
  cross_point,
  balance_point,
  acer_left,
  acer_right,
  acer_mid,
};

enum class ThresholdNote {
  ok,
  classes_overlap,
  clamped_to_gap,
  circles_disjoint_fallback,
  circles_nested_fallback,
};

std::string_view to_string(Strategy strategy);
std::string_view to_string(ThresholdNote note);

struct ThresholdCandidate {
  Strategy strategy = Strategy::balance_point;
  double value = 0.0;
  bool valid = true;
  ThresholdNote note = ThresholdNote::ok;
};

// Inner class extremes. Each side is tagged fake_border or live_border
// according to the dataset polarity.
struct BorderPair {
  ThresholdCandidate lower;  // max(lower class)
  ThresholdCandidate upper;  // min(upper class)
};

BorderPair threshold_borders(const LabeledDataset& data);

/// Equal-error thresholds.
///
/// The objective is |#{lower > T}/N - #{upper < T}/M| with strict
/// inequalities on both sides. It is piecewise constant in T, so every
/// distinct pooled score and every open interval between neighbours
/// (represented by its midpoint) is examined, plus one candidate outside each
/// end. `left`/`right` are the infimum and supremum of the set of minimizing
/// T and `mid` is their average. On separable data left == max(lower) and
/// right == min(upper).
struct AcerPlateau {
  ThresholdCandidate left;
  ThresholdCandidate mid;
  ThresholdCandidate right;
};

AcerPlateau threshold_acer(const LabeledDataset& data);

// Signed equal-error objective #{lower > T}*M - #{upper < T}*N; zero means
// the two error fractions match exactly.
long long acer_imbalance(const LabeledDataset& data, double threshold);

/// Distance-balance threshold: sum(T - lower) = sum(upper - T), solved in
/// closed form as the pooled mean. When the classes are separable the
/// result is clamped into [max(lower), min(upper)] (note clamped_to_gap);
/// when they overlap the pooled mean is returned with note classes_overlap.
ThresholdCandidate threshold_balance(const LabeledDataset& data);

/// Cross point of the two domain circles, each centered on the score axis
/// at its center with its radius. For a proper intersection the chord foot
/// is cL + (d^2 + rL^2 - rU^2) / (2d). Disjoint circles fall back to the
/// midpoint of the gap between them; nested circles (including equal
/// centers) fall back to the midpoint of the centers and are marked invalid.
/// Requires lower.center <= upper.center.
ThresholdCandidate threshold_cross(const DomainSummary& lower, const DomainSummary& upper);

enum class TieRule {
  equal_is_genuine,
  equal_is_attack,
  // Equality is never an error for either class, matching the strict
  // inequalities of the equal-error objective.
  strict,
};

std::string_view to_string(TieRule rule);
TieRule parse_tie_rule(std::string_view text);

// "Positive" is an accept-as-genuine decision: FP are accepted attacks,
// FN rejected genuine samples. Hence fpr == apcer and tpr == 1 - bpcer.
struct ThresholdEvaluation {
  double threshold = 0.0;
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t tn = 0;
  std::size_t fn = 0;
  double apcer = 0.0;
  double bpcer = 0.0;
  double acer = 0.0;
  double fpr = 0.0;
  double tpr = 0.0;
};

// Rates from raw counts. Throws std::invalid_argument if a class is empty.
ThresholdEvaluation rates_from_counts(double threshold, std::size_t tp, std::size_t fp,
                                      std::size_t tn, std::size_t fn);

ThresholdEvaluation evaluate_threshold(const LabeledDataset& data, double threshold,
                                       TieRule tie_rule = TieRule::equal_is_genuine);

struct RocPoint {
  double threshold = 0.0;
  double fpr = 0.0;
  double tpr = 0.0;
};

struct RocCurve {
  std::vector<RocPoint> points;  // ascending FPR, (0,0) first, (1,1) last
  double auc = 0.0;
};

// One point per distinct pooled score plus a sentinel beyond each end
// (min - 1 and max + 1). AUC by the trapezoid rule.
RocCurve roc_sweep(const LabeledDataset& data);

enum class StrategySelection { all, acer, balance, cross, borders };

StrategySelection parse_strategy_selection(std::string_view text);
std::string_view to_string(StrategySelection selection);

struct ThresholdRow {
  ThresholdCandidate candidate;
  ThresholdEvaluation train;
  std::optional<ThresholdEvaluation> dev;
};

struct ThresholdReport {
  std::vector<ThresholdRow> rows;
  bool has_dev = false;
};

struct ThresholdOptions {
  StrategySelection selection = StrategySelection::all;
  CenterMethod center = CenterMethod::distance_balance;
  TieRule tie_rule = TieRule::equal_is_genuine;
};

/// Rows for `all`: fake-border, live-border, cross-point, balance-point,
/// acer-left, acer-right. Every threshold comes from the train set and is
/// evaluated on train and, if given, on dev.
ThresholdReport threshold_report(const LabeledDataset& train, const LabeledDataset* dev,
                                 const ThresholdOptions& options = {});

}  // namespace predomain

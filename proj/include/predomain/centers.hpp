#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

#include "predomain/score_model.hpp"

namespace predomain {

enum class CenterMethod { mean, median, distance_balance, weighted_balance };

// CLI spellings: mean, median, balance, weighted-balance.
std::string_view to_string(CenterMethod method);
CenterMethod parse_center_method(std::string_view text);

struct CenterResult {
  CenterMethod method = CenterMethod::distance_balance;
  double value = 0.0;
  // Index into the sorted scores; set only by the two balance methods.
  std::optional<std::size_t> selected_index;
  // Signed residual (below-side sum minus above-side sum) at the selected
  // sample; 0 for mean and median.
  double imbalance = 0.0;
};

CenterResult center_mean(const ClassScores& scores);

// Ordinary sample median (mean of the two middle values for even n).
CenterResult center_median(const ClassScores& scores);

/// Sample x_m minimizing |sum_{n<m}(x_m - x_n) - sum_{n>m}(x_n - x_m)|.
/// The residual simplifies to N*x_m - sum(x), so this is the sample closest
/// to the arithmetic mean. Ties go to the smaller index.
CenterResult center_distance_balance(const ClassScores& scores);

/// Same as center_distance_balance with squared distances, which pulls the
/// center toward far-away samples. Ties go to the smaller index.
CenterResult center_weighted_balance(const ClassScores& scores);

CenterResult compute_center(const ClassScores& scores, CenterMethod method);

}  // namespace predomain

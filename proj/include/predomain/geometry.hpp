#pragma once

#include <cstddef>
#include <optional>

#include "predomain/centers.hpp"
#include "predomain/score_model.hpp"

namespace predomain {

// Half of the larger one-sided extent around the center. The halving is
// intentional: a drawn domain circle covers only half the farthest sample.
// Throws std::domain_error if center lies outside [min, max].
double radius(double center, double min, double max);

// (center - min) / (max - center). std::nullopt marks a one-sided domain
// (center == max); reports print it as n/a.
std::optional<double> normalize(double center, double min, double max);

// Mean absolute deviation from center divided by radius; 0 when radius is 0.
double density(const ClassScores& scores, double center, double radius);

struct DomainSummary {
  CenterResult center;
  double radius = 0.0;
  std::optional<double> normalize;
  double density = 0.0;
  double min = 0.0;
  double max = 0.0;
  std::size_t n = 0;
};

DomainSummary summarize_domain(const ClassScores& scores,
                               CenterMethod method = CenterMethod::distance_balance);

// Before/after deltas of radius, normalize and density. The flags are
// annotations for reports only.
struct ComparisonRow {
  DomainSummary before;
  DomainSummary after;
  double radius_delta = 0.0;
  std::optional<double> normalize_delta;  // absent if either side is one-sided
  double density_delta = 0.0;
  bool domain_expanded = false;  // radius grew
  bool more_cohesive = false;    // density shrank
};

ComparisonRow compare_domains(const DomainSummary& before, const DomainSummary& after);

}  // namespace predomain

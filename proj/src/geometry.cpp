#include "predomain/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace predomain {

double radius(double center, double min, double max) {
  if (!(min <= center && center <= max)) {
    throw std::domain_error("center lies outside [min, max]");
  }
  return std::max(center - min, max - center) / 2.0;
}

std::optional<double> normalize(double center, double min, double max) {
  if (!(min <= center && center <= max)) {
    throw std::domain_error("center lies outside [min, max]");
  }
  if (max == center) return std::nullopt;
  return (center - min) / (max - center);
}

double density(const ClassScores& scores, double center, double radius) {
  if (radius == 0.0) return 0.0;
  double deviation = 0.0;
  for (double v : scores.values()) deviation += std::abs(v - center);
  return deviation / radius / static_cast<double>(scores.size());
}

DomainSummary summarize_domain(const ClassScores& scores, CenterMethod method) {
  DomainSummary s;
  s.center = compute_center(scores, method);
  s.min = scores.min();
  s.max = scores.max();
  s.n = scores.size();
  s.radius = radius(s.center.value, s.min, s.max);
  s.normalize = normalize(s.center.value, s.min, s.max);
  s.density = density(scores, s.center.value, s.radius);
  return s;
}

ComparisonRow compare_domains(const DomainSummary& before, const DomainSummary& after) {
  ComparisonRow row;
  row.before = before;
  row.after = after;
  row.radius_delta = after.radius - before.radius;
  row.density_delta = after.density - before.density;
  if (before.normalize && after.normalize) row.normalize_delta = *after.normalize - *before.normalize;
  row.domain_expanded = row.radius_delta > 0.0;
  row.more_cohesive = row.density_delta < 0.0;
  return row;
}

}  // namespace predomain

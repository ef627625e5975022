#pragma once

#include <span>
#include <string>
#include <vector>

#include "predomain/geometry.hpp"
#include "predomain/thresholds.hpp"

namespace predomain {

struct Viewport {
  double lo = 0.0;
  double hi = 1.0;
};

struct ClassStyle {
  std::string name;
  std::string color;
};

struct DomainLayer {
  DomainSummary summary;
  std::vector<double> scores;  // sorted; used for rug ticks and rings, may be empty
  ClassStyle style;
};

struct ThresholdLayer {
  ThresholdCandidate candidate;
  std::string color;
  bool dashed = false;
};

/// Everything the renderer needs; nothing is read from the environment.
///
/// Horizontal layout maps the viewport linearly onto [0, width] pixels.
/// Each domain is a circle centered on the axis with pixel radius
/// radius * width / (hi - lo). Because the domain radius is half the largest
/// one-sided extent, a ring for sample fraction q is drawn at half the
/// q-quantile of |score - center|, so the q = 1 ring coincides with the
/// domain circle. The canvas grows vertically to fit the largest circle.
struct RenderSpec {
  int width = 800;
  int height = 400;
  Viewport viewport;
  std::string title;
  std::vector<DomainLayer> domains;
  std::vector<ThresholdLayer> thresholds;
  bool rug = true;
  std::vector<double> rings = {0.25, 0.5, 0.75, 1.0};
  bool legend = true;
  // Emitted verbatim (after escaping) as XML comments at the top.
  std::vector<std::string> comments;
};

// Palette used by the CLI.
ClassStyle default_class_style(ScoreClass cls, const std::string& name);
std::string default_threshold_color(Strategy strategy);

// Half the q-quantile (nearest rank) of |score - center|.
double ring_radius(std::span<const double> scores, double center, double fraction);

// Throws std::invalid_argument for a degenerate viewport or non-positive size.
std::string render(const RenderSpec& spec);

// Two panels side by side sharing the viewport, width and height.
// Throws std::invalid_argument when the viewports differ.
std::string render_comparison(const RenderSpec& before, const RenderSpec& after);

}  // namespace predomain

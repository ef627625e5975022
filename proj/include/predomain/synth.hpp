#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "predomain/score_model.hpp"

namespace predomain {

struct ClampInterval {
  double lo = 0.0;
  double hi = 1.0;
};

struct SynthSpec {
  std::size_t n = 500;
  double mean = 0.5;
  double std_dev = 0.1;
  std::uint64_t seed = 20240617;
  std::optional<ClampInterval> clamp;
};

/// Gaussian draws in generation order.
///
/// Generator: std::mt19937_64 seeded with `seed` (its output sequence is fixed
/// by the C++ standard). Each pair of 64-bit outputs a, b becomes
///   u1 = ((a >> 11) + 1) * 2^-53   in (0, 1]
///   u2 =  (b >> 11)      * 2^-53   in [0, 1)
/// and the Box-Muller pair
///   z0 = sqrt(-2 ln u1) cos(2 pi u2),  z1 = sqrt(-2 ln u1) sin(2 pi u2),
/// emitted z0 then z1. Value = mean + std_dev * z, then saturated into
/// `clamp` when set. Throws std::invalid_argument for n == 0, negative or
/// non-finite std_dev, or an inverted clamp interval.
std::vector<double> generate_raw(const SynthSpec& spec);

// generate_raw, sorted ascending.
ClassScores generate(const SynthSpec& spec);

}  // namespace predomain

#include "predomain/synth.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace predomain {

namespace {

constexpr double kTwoPow53 = 9007199254740992.0;

void validate(const SynthSpec& spec) {
  if (spec.n == 0) throw std::invalid_argument("synth: n must be >= 1");
  if (!std::isfinite(spec.mean)) throw std::invalid_argument("synth: mean must be finite");
  if (!std::isfinite(spec.std_dev) || spec.std_dev < 0.0) {
    throw std::invalid_argument("synth: std_dev must be finite and >= 0");
  }
  if (spec.clamp && !(spec.clamp->lo <= spec.clamp->hi)) {
    throw std::invalid_argument("synth: clamp interval must satisfy lo <= hi");
  }
}

}  // namespace

std::vector<double> generate_raw(const SynthSpec& spec) {
  validate(spec);
  std::mt19937_64 engine(spec.seed);
  std::vector<double> out;
  out.reserve(spec.n + 1);
  while (out.size() < spec.n) {
    const double u1 = static_cast<double>((engine() >> 11) + 1) / kTwoPow53;
    const double u2 = static_cast<double>(engine() >> 11) / kTwoPow53;
    const double magnitude = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    out.push_back(spec.mean + spec.std_dev * magnitude * std::cos(angle));
    out.push_back(spec.mean + spec.std_dev * magnitude * std::sin(angle));
  }
  out.resize(spec.n);
  if (spec.clamp) {
    for (double& v : out) v = std::clamp(v, spec.clamp->lo, spec.clamp->hi);
  }
  return out;
}

ClassScores generate(const SynthSpec& spec) { return ClassScores::from_unsorted(generate_raw(spec)); }

}  // namespace predomain

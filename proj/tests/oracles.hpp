#pragma once

// Brute-force reference computations for tests. Nothing here calls into the
// library's algorithms; only plain data types are shared.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numbers>
#include <random>
#include <span>
#include <vector>

namespace oracle {

struct BalancePick {
  std::size_t index = 0;
  double residual = 0.0;
};

// O(n^2): residual(m) = sum_{n<m} f(x_m - x_n) - sum_{n>m} f(x_n - x_m),
// argmin |residual|, first index wins ties.
template <typename F>
BalancePick brute_balance(std::span<const double> x, F&& f) {
  BalancePick best{0, std::numeric_limits<double>::infinity()};
  for (std::size_t m = 0; m < x.size(); ++m) {
    double left = 0.0;
    for (std::size_t n = 0; n < m; ++n) left += f(x[m] - x[n]);
    double right = 0.0;
    for (std::size_t n = m + 1; n < x.size(); ++n) right += f(x[n] - x[m]);
    const double r = left - right;
    if (std::abs(r) < std::abs(best.residual)) best = {m, r};
  }
  return best;
}

inline BalancePick brute_distance_balance(std::span<const double> x) {
  return brute_balance(x, [](double d) { return d; });
}

inline BalancePick brute_weighted_balance(std::span<const double> x) {
  return brute_balance(x, [](double d) { return d * d; });
}

inline double mean(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s += v;
  return s / static_cast<double>(x.size());
}

struct Geometry {
  double radius = 0.0;
  bool one_sided = false;
  double normalize = 0.0;
  double density = 0.0;
};

// Straight transcription of the radius/normalize/density formulas.
inline Geometry direct_geometry(std::span<const double> x, double center) {
  const double lo = *std::min_element(x.begin(), x.end());
  const double hi = *std::max_element(x.begin(), x.end());
  Geometry g;
  g.radius = std::max(center - lo, hi - center) / 2.0;
  g.one_sided = hi == center;
  g.normalize = g.one_sided ? 0.0 : (center - lo) / (hi - center);
  if (g.radius > 0.0) {
    double acc = 0.0;
    for (double v : x) acc += std::abs(v - center) / g.radius;
    g.density = acc / static_cast<double>(x.size());
  }
  return g;
}

// P(genuine ranks on the genuine side of attack) + 1/2 P(tie), by pairs.
inline double mann_whitney_auc(std::span<const double> genuine, std::span<const double> attack,
                               bool genuine_low) {
  double wins = 0.0;
  for (double g : genuine) {
    for (double a : attack) {
      if (g == a) {
        wins += 0.5;
      } else if ((g < a) == genuine_low) {
        wins += 1.0;
      }
    }
  }
  return wins / (static_cast<double>(genuine.size()) * static_cast<double>(attack.size()));
}

// |#{lower > t}/N - #{upper < t}/M| by direct counting.
inline double acer_gap(std::span<const double> lower, std::span<const double> upper, double t) {
  double a = 0.0;
  for (double v : lower) a += v > t ? 1.0 : 0.0;
  double b = 0.0;
  for (double v : upper) b += v < t ? 1.0 : 0.0;
  return std::abs(a / static_cast<double>(lower.size()) - b / static_cast<double>(upper.size()));
}

// Every candidate threshold: each distinct pooled value, every midpoint
// between neighbours, and one point outside each end.
inline std::vector<double> sweep_candidates(std::span<const double> lower, std::span<const double> upper) {
  std::vector<double> pooled(lower.begin(), lower.end());
  pooled.insert(pooled.end(), upper.begin(), upper.end());
  std::sort(pooled.begin(), pooled.end());
  pooled.erase(std::unique(pooled.begin(), pooled.end()), pooled.end());
  std::vector<double> out{pooled.front() - 1.0};
  for (std::size_t i = 0; i < pooled.size(); ++i) {
    out.push_back(pooled[i]);
    if (i + 1 < pooled.size()) out.push_back((pooled[i] + pooled[i + 1]) / 2.0);
  }
  out.push_back(pooled.back() + 1.0);
  return out;
}

// x coordinate of the upper intersection of two circles centered on the
// axis, found by bisection on the angle along the first circle. Requires a
// proper intersection.
inline double circle_intersection_x(double c1, double r1, double c2, double r2) {
  // Distance from (c2, 0) grows monotonically as theta sweeps 0 -> pi when
  // c2 >= c1, so h(theta) changes sign exactly once.
  const auto h = [&](double theta) {
    const double x = c1 + r1 * std::cos(theta);
    const double y = r1 * std::sin(theta);
    return std::hypot(x - c2, y) - r2;
  };
  double lo = 0.0;
  double hi = std::numbers::pi;
  for (int i = 0; i < 200; ++i) {
    const double mid = (lo + hi) / 2.0;
    if (h(mid) < 0.0) lo = mid; else hi = mid;
  }
  return c1 + r1 * std::cos((lo + hi) / 2.0);
}

// Mixed-family random score vectors for property tests.
class ScoreGen {
 public:
  explicit ScoreGen(std::uint64_t seed) : rng_(seed) {}

  std::vector<double> vector(std::size_t n) {
    std::uniform_int_distribution<int> family(0, 6);
    return vector(n, family(rng_));
  }

  std::vector<double> vector(std::size_t n, int family) {
    std::vector<double> out(n);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    switch (family) {
      case 0:
        for (auto& v : out) v = unit(rng_);
        break;
      case 1: {
        std::normal_distribution<double> g(0.2 + 0.6 * unit(rng_), 0.01 + 0.19 * unit(rng_));
        for (auto& v : out) v = g(rng_);
        break;
      }
      case 2: {
        std::exponential_distribution<double> e(2.0 + 20.0 * unit(rng_));
        for (auto& v : out) v = 1.0 - std::min(1.0, e(rng_));
        break;
      }
      case 3: {
        std::normal_distribution<double> a(0.2, 0.05);
        std::normal_distribution<double> b(0.8, 0.08);
        const double w = unit(rng_);
        for (auto& v : out) v = unit(rng_) < w ? a(rng_) : b(rng_);
        break;
      }
      case 4: {
        std::normal_distribution<double> g(unit(rng_), 0.5);
        for (auto& v : out) v = std::clamp(g(rng_), 0.0, 1.0);
        break;
      }
      case 5: {
        std::uniform_int_distribution<std::size_t> k(1, 10);
        std::vector<double> pool(k(rng_));
        for (auto& p : pool) p = unit(rng_);
        std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
        for (auto& v : out) v = pool[pick(rng_)];
        break;
      }
      default: {
        std::uniform_real_distribution<double> wide(-50.0, 150.0);
        for (auto& v : out) v = wide(rng_);
        break;
      }
    }
    return out;
  }

  std::size_t size(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
  }

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace oracle

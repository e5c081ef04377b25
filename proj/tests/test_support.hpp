#pragma once

// Shared helpers for unit and acceptance tests.

#include <cmath>
#include <random>
#include <vector>

#include "oscopt/angles.hpp"
#include "oscopt/coupling.hpp"
#include "oscopt/graph.hpp"

namespace oscopt::testsupport {

inline Graph petersen() {
  std::vector<Edge> edges;
  for (std::uint32_t i = 0; i < 5; ++i) {
    edges.push_back({i, (i + 1) % 5, 1.0});
    edges.push_back({i + 5, ((i + 2) % 5) + 5, 1.0});
    edges.push_back({i, i + 5, 1.0});
  }
  return Graph(10, edges);
}

inline std::vector<std::vector<double>> random_metric(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::vector<std::pair<double, double>> pts(n);
  for (auto& p : pts) p = {unif(rng), unif(rng)};
  std::vector<std::vector<double>> d(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      d[i][j] = std::hypot(pts[i].first - pts[j].first, pts[i].second - pts[j].second);
    }
  }
  return d;
}

/// Phases whose pairwise differences all stay at wrapped distance
/// >= 5*sigma + margin from every bump center: an arithmetic progression
/// with a validated increment plus sub-margin jitter.
inline std::vector<double> flat_zone_phases(std::size_t n, const PhaseInteraction& fi,
                                            std::mt19937_64& rng) {
  const double margin = fi.sigma() / 4.0;
  const double need = 5.0 * fi.sigma() + margin;
  const auto clear = [&](double alpha) {
    for (std::size_t m = 1; m < n; ++m) {
      const double d = wrap_pi(alpha * static_cast<double>(m));
      for (const auto& b : fi.bumps()) {
        if (wrapped_distance(d, b.center) < need || wrapped_distance(d, -b.center) < need) {
          return false;
        }
      }
    }
    return true;
  };

  std::vector<double> candidates;
  for (double alpha = 0.0; alpha < kTwoPi; alpha += kTwoPi / 4096.0) {
    if (clear(alpha)) candidates.push_back(alpha);
  }
  if (candidates.empty()) throw std::runtime_error("no flat-zone progression exists");

  std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
  std::uniform_real_distribution<double> jitter(-fi.sigma() / 16.0, fi.sigma() / 16.0);
  std::uniform_real_distribution<double> offset(0.0, kTwoPi);
  const double alpha = candidates[pick(rng)];
  const double base = offset(rng);
  std::vector<double> phases(n);
  for (std::size_t i = 0; i < n; ++i) {
    phases[i] = wrap_2pi(base + alpha * static_cast<double>(i) + jitter(rng));
  }
  return phases;
}

/// Random phases with mean exactly pi/2 (pairs (x, pi - x)), where the
/// graph-partition balance drive and its degree-weighted gradient both
/// vanish.
inline std::vector<double> balanced_mean_phases(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unif(0.05, kPi / 2.0 - 0.05);
  std::vector<double> phases(n);
  for (std::size_t i = 0; i + 1 < n; i += 2) {
    const double x = unif(rng);
    phases[i] = x;
    phases[i + 1] = kPi - x;
  }
  if (n % 2 == 1) phases[n - 1] = kPi / 2.0;
  return phases;
}

}  // namespace oscopt::testsupport

#include "oscopt/coupling.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "oscopt/angles.hpp"
#include "oscopt/errors.hpp"
#include "oscopt/kernels.hpp"

namespace oscopt {

namespace {

void check_sigma(double sigma, int order) {
  if (!(sigma > 0.0)) throw ValidationError("sigma must be positive");
  if (sigma > kPi / (4.0 * order)) {
    throw ValidationError("sigma too large: bumps on the 2pi/" + std::to_string(order) +
                          " grid overlap (require sigma <= pi/(4*" + std::to_string(order) + "))");
  }
}

}  // namespace

double default_sigma(int grid_order) { return kPi / (8.0 * grid_order); }

PhaseInteraction::PhaseInteraction(std::vector<BumpSpec> bumps, double sigma, int grid_order)
    : bumps_(std::move(bumps)), sigma_(sigma), grid_order_(grid_order) {
  check_sigma(sigma_, grid_order_);
  inv_two_sigma_sq_ = 1.0 / (2.0 * sigma_ * sigma_);
  rebuild_flat();
}

void PhaseInteraction::rebuild_flat() {
  centers_.clear();
  amps_.clear();
  for (const auto& b : bumps_) {
    if (b.amplitude != 0.0) {
      centers_.push_back(b.center);
      amps_.push_back(b.amplitude);
    }
  }
}

double PhaseInteraction::eval(double dphi) const {
  const kernels::CouplingSpec spec{centers_.data(), amps_.data(), centers_.size(),
                                   inv_two_sigma_sq_};
  return kernels::bump_sum(wrap_pi(dphi), spec);
}

std::pair<double, double> PhaseInteraction::quadrature(double dphi) const {
  const double f = eval(dphi);
  return {std::cos(f), std::sin(f)};
}

void PhaseInteraction::check_separation(const BumpSpec& candidate) const {
  const double min_sep = 6.0 * sigma_;
  // A bump at exactly pi coincides with its own mirror; that pair is the
  // antipodal boundary case and is exempt.
  if (candidate.center != kPi && wrapped_distance(candidate.center, -candidate.center) < min_sep) {
    throw ValidationError("bump at center " + std::to_string(candidate.center) +
                          " overlaps its own mirror");
  }
  for (const auto& b : bumps_) {
    if (wrapped_distance(candidate.center, b.center) < min_sep ||
        wrapped_distance(candidate.center, -b.center) < min_sep) {
      throw ValidationError("bump at center " + std::to_string(candidate.center) +
                            " violates the 6*sigma separation from center " +
                            std::to_string(b.center));
    }
  }
}

void PhaseInteraction::add_bump(double center, double amplitude) {
  if (!(center > 0.0) || !(center < kTwoPi)) {
    throw ValidationError("bump center must lie in (0, 2pi)");
  }
  // Canonicalize to the positive side of (-pi, pi].
  double c = wrap_pi(center);
  double a = wrap_pi(amplitude);
  if (c == 0.0) throw ValidationError("bump center wraps to 0 and would break oddness");
  if (c < 0.0) {
    c = -c;
    a = (a == kPi) ? kPi : -a;  // -pi and pi are the same offset
  }
  const double grid = kTwoPi / grid_order_;
  const double q = c / grid;
  if (std::fabs(q - std::round(q)) > 1e-9) {
    throw ValidationError("bump center is not a multiple of 2pi/" + std::to_string(grid_order_));
  }
  // A term at an already-bumped angle merges into that bump: Gaussians at
  // the same center just add amplitudes.
  for (auto& b : bumps_) {
    if (b.center == c) {
      b.amplitude = wrap_pi(b.amplitude + a);
      rebuild_flat();
      return;
    }
  }
  const BumpSpec spec{c, a};
  check_separation(spec);
  bumps_.push_back(spec);
  std::sort(bumps_.begin(), bumps_.end(),
            [](const BumpSpec& x, const BumpSpec& y) { return x.center < y.center; });
  rebuild_flat();
}

PhaseInteraction build_max_k_cut_interaction(int k, double sigma) {
  if (k < 2) throw ValidationError("Max-K-Cut requires K >= 2");
  if (sigma < 0.0) sigma = default_sigma(k);
  check_sigma(sigma, k);
  // Grid differences 2*pi*j/K must map onto pi: amplitude pi - 2*pi*j/K at
  // each canonical center (j = 1 .. K/2); the centers above pi are reached
  // through the mirrors.
  std::vector<BumpSpec> bumps;
  for (int j = 1; j <= k / 2; ++j) {
    const double center = kTwoPi * j / k;
    bumps.push_back({center, kPi - center});
  }
  return PhaseInteraction(std::move(bumps), sigma, k);
}

PhaseInteraction build_tsp_interaction(int n, double sigma) {
  if (n < 3) throw ValidationError("TSP interaction requires N >= 3");
  if (sigma < 0.0) sigma = default_sigma(n);
  check_sigma(sigma, n);
  // Adjacent slots (dphi = 2*pi/N) are pulled to 0; all other nonzero grid
  // differences are pushed to pi.
  std::vector<BumpSpec> bumps;
  bumps.push_back({kTwoPi / n, -kTwoPi / n});
  for (int j = 2; j <= n / 2; ++j) {
    const double center = kTwoPi * j / n;
    bumps.push_back({center, kPi - center});
  }
  return PhaseInteraction(std::move(bumps), sigma, n);
}

PhaseInteraction build_hc_interaction(int n, double sigma) {
  if (n < 3) throw ValidationError("Hamiltonian interaction requires N >= 3");
  if (sigma < 0.0) sigma = default_sigma(n);
  check_sigma(sigma, n);
  // Adjacent slots land on pi (reward when an edge is present, J = -1);
  // non-adjacent slots land on pi/2, which is energy-neutral.
  std::vector<BumpSpec> bumps;
  bumps.push_back({kTwoPi / n, kPi - kTwoPi / n});
  for (int j = 2; j <= n / 2; ++j) {
    const double center = kTwoPi * j / n;
    bumps.push_back({center, kPi / 2.0 - center});
  }
  return PhaseInteraction(std::move(bumps), sigma, n);
}

}  // namespace oscopt

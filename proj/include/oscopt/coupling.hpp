#pragma once

#include <utility>
#include <vector>

namespace oscopt {

/// One Gaussian bump of the coupling function. Every stored bump has a
/// positive center; it is mirrored by an implicit bump at -center with
/// negated amplitude, so oddness is structural and never re-derived
/// numerically.
struct BumpSpec {
  double center;     // in (0, pi], an integer multiple of 2*pi/grid_order
  double amplitude;  // phase offset delivered at the center, in (-pi, pi]

  friend bool operator==(const BumpSpec&, const BumpSpec&) = default;
};

/// A 2pi-periodic odd function f built as a sum of Gaussian bumps, used as
/// the engineered phase-coupling offset: the pairwise interaction is
/// sin(dphi + f(dphi)). Bumps sit on the grid {2*pi*k/grid_order}; their
/// amplitudes steer dphi + f(dphi) onto the per-problem target angles.
///
/// Stored bumps are the canonical positive-side representatives: amplitudes
/// are reduced mod 2pi (which leaves sin/cos of dphi + f unchanged) and grid
/// points above pi are represented through the mirror of their antipodal
/// partner, as selected by wrapping dphi into (-pi, pi].
class PhaseInteraction {
 public:
  PhaseInteraction(std::vector<BumpSpec> bumps, double sigma, int grid_order);

  /// f(dphi): wraps dphi to (-pi, pi] and sums the bumps and their mirrors.
  /// Exactly odd and exactly 2pi-periodic.
  double eval(double dphi) const;

  /// (cos(f(dphi)), sin(f(dphi))) — the quadrature coupling coefficients.
  /// c*sin(dphi) + s*cos(dphi) == sin(dphi + f(dphi)).
  std::pair<double, double> quadrature(double dphi) const;

  /// Append an extra penalty bump (center in (0, 2pi), any amplitude).
  /// The center must be a grid multiple and respect the 6*sigma separation
  /// from every existing bump and mirror; throws ValidationError otherwise.
  void add_bump(double center, double amplitude);

  const std::vector<BumpSpec>& bumps() const { return bumps_; }
  double sigma() const { return sigma_; }
  int grid_order() const { return grid_order_; }

  /// Bumps with nonzero amplitude, flattened for the kernels.
  const std::vector<double>& centers() const { return centers_; }
  const std::vector<double>& amplitudes() const { return amps_; }
  double inv_two_sigma_sq() const { return inv_two_sigma_sq_; }

 private:
  void rebuild_flat();
  void check_separation(const BumpSpec& candidate) const;

  std::vector<BumpSpec> bumps_;
  double sigma_;
  int grid_order_;
  std::vector<double> centers_;  // nonzero-amplitude bumps only
  std::vector<double> amps_;
  double inv_two_sigma_sq_;
};

/// Default bump width: adjacent grid centers are 2*pi/order apart, so
/// pi/(8*order) gives 16 sigma of separation.
double default_sigma(int grid_order);

/// Max-K-Cut coupling (K >= 2): dphi + f(dphi) lands on pi at every nonzero
/// grid difference, so each cut edge contributes cos = -1. K = 2 reduces to
/// f == 0 (plain MaxCut). sigma < 0 selects the default; sigma must satisfy
/// sigma <= pi/(4K).
PhaseInteraction build_max_k_cut_interaction(int k, double sigma = -1.0);

/// TSP coupling (N >= 3): dphi + f -> 0 when the pair sits in adjacent tour
/// slots (dphi = +-2*pi/N) and -> pi elsewhere, so the energy rewards short
/// edges between neighbors and penalizes long ones.
PhaseInteraction build_tsp_interaction(int n, double sigma = -1.0);

/// Hamiltonian cycle/path coupling (N >= 3): dphi + f -> pi at adjacent
/// slots and -> pi/2 (energy-neutral) at non-adjacent slots.
PhaseInteraction build_hc_interaction(int n, double sigma = -1.0);

inline double eval_f(const PhaseInteraction& fi, double dphi) { return fi.eval(dphi); }
inline std::pair<double, double> quadrature_split(const PhaseInteraction& fi, double dphi) {
  return fi.quadrature(dphi);
}

}  // namespace oscopt

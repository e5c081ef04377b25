#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "oscopt/coupling.hpp"
#include "oscopt/errors.hpp"
#include "oscopt/graph.hpp"
#include "oscopt/kernels.hpp"

namespace oscopt {

enum class ProblemKind { MaxKCut, Tsp, HamiltonianCycle, GraphPartition };

/// Sign applied to the stored weight magnitudes to form J_ij.
/// MaxCut/Max-K-Cut and Hamiltonian use J = -w, TSP uses J = -D,
/// graph partitioning uses J = +w.
inline double coupling_sign(ProblemKind kind) {
  return kind == ProblemKind::GraphPartition ? 1.0 : -1.0;
}

/// Annealing schedule: C1 ramps linearly from c1_start to a over the
/// horizon; c_sync and c2 are constant.
struct Schedule {
  double c1_start = 1.0;
  double a = 10.0;          // C1 value reached at t = horizon
  double horizon = 100.0;   // total simulation time in cycles
  double c_sync = 1.0;      // harmonic injection strength
  double c2 = 1.0;          // pairwise cut weight (graph partitioning only)
  double stability_ceiling = 70.0;

  double c1_at(double t) const { return c1_start + t * (a - c1_start) / horizon; }

  /// Non-fatal configuration warnings, e.g. C1/Csync above the
  /// destabilization ceiling. Kept as warnings so the destabilization
  /// experiments stay runnable.
  std::vector<std::string> warnings() const;
  void validate() const;  // throws ValidationError on nonsensical values
};

/// Effective constants at one instant ("schedule at t").
struct Constants {
  double c1 = 1.0;
  double c_sync = 1.0;
  double c2 = 1.0;
};

enum class Integrator { Euler, Rk4 };

struct RunConfig {
  double dt = 0.01;
  Integrator method = Integrator::Euler;
  std::uint64_t seed = 0;
  double record_interval = 0.1;
  bool record_phases = false;
  // Optional additive phase noise (off by default). The amplitude decays
  // linearly to zero at t = horizon, so late-time states still settle onto
  // deterministic attractors.
  double noise_amplitude = 0.0;
};

struct OscillatorState {
  std::vector<double> phases;  // wrapped to [0, 2pi) after every step
  double t = 0.0;
};

struct RunResult {
  OscillatorState final_state;
  std::vector<std::pair<double, double>> energy_trace;  // (t, E), includes t=0 and t=T
  std::vector<std::pair<double, std::vector<double>>> phase_trace;  // optional
  std::uint64_t step_count = 0;
  std::uint64_t seed = 0;
};

/// Integration blew up (non-finite phase); carries the offending step.
class NumericError : public ValidationError {
 public:
  NumericError(const std::string& what, std::uint64_t step)
      : ValidationError(what), step_index(step) {}
  std::uint64_t step_index;
};

/// Owns the flattened edge arrays and scratch buffers for one
/// (graph, interaction, problem) binding. A single simulator is sequential;
/// concurrent trials each build their own (the graph and interaction are
/// shared read-only).
class Simulator {
 public:
  Simulator(const Graph& g, const PhaseInteraction& fi, Schedule sched, ProblemKind kind);

  int order() const { return order_; }
  ProblemKind kind() const { return kind_; }
  const Schedule& schedule() const { return sched_; }

  /// dphi/dt at the state's own time (C1 taken from the schedule).
  std::vector<double> velocity(const OscillatorState& state) const;
  std::vector<double> velocity(const OscillatorState& state, const Constants& at) const;

  /// Lyapunov energy at explicit constants.
  double energy(const OscillatorState& state, const Constants& at) const;
  double energy(const OscillatorState& state) const;

  Constants constants_at(double t) const {
    return {sched_.c1_at(t), sched_.c_sync, sched_.c2};
  }

  /// One explicit step of size dt; constants are evaluated at the step's
  /// start time for all stages. Phases are re-wrapped to [0, 2pi).
  /// Throws NumericError if a phase goes non-finite.
  void step(OscillatorState& state, double dt, Integrator method,
            std::uint64_t step_index = 0) const;

  /// Full trajectory from seeded uniform-random phases to t = horizon.
  RunResult run(const RunConfig& cfg) const;

 private:
  struct PassOutput {
    double edge_cos_sum;  // sum_e w_e cos(d_e + f(d_e)), valid when want_cos
    double inj_cos_sum;   // sum_i cos(order * phi_i)
    double mean_phase;    // GP only
  };
  PassOutput velocity_into(const std::vector<double>& phases, const Constants& at,
                           std::vector<double>& out_v, bool want_cos) const;
  double energy_from(const PassOutput& pass, const Constants& at) const;

  const Graph* graph_;
  Schedule sched_;
  ProblemKind kind_;
  int order_;
  std::uint32_t n_;
  std::vector<std::uint32_t> eu_, ev_;
  std::vector<double> w_;
  std::vector<double> centers_, amps_;  // copied from the interaction
  double inv_two_sigma_sq_;
  std::vector<double> weighted_degree_;  // GP balance term
  double total_weight_;
  // scratch (mutable: velocity/energy are logically const)
  mutable std::vector<double> term_sin_, term_cos_, force_;
  mutable std::vector<double> stage_[4], probe_;
};

/// Spec-level convenience wrappers.
std::vector<double> phase_velocity(const OscillatorState& state, const Graph& g,
                                   const PhaseInteraction& fi, const Constants& at,
                                   ProblemKind kind);
OscillatorState step(const OscillatorState& state, const Graph& g, const PhaseInteraction& fi,
                     const Schedule& sched, double dt, Integrator method, ProblemKind kind);
RunResult run(const Graph& g, const PhaseInteraction& fi, const Schedule& sched,
              const RunConfig& cfg, ProblemKind kind);

}  // namespace oscopt

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "oscopt/coupling.hpp"
#include "oscopt/dynamics.hpp"
#include "oscopt/graph.hpp"

namespace oscopt {

/// Lyapunov energy of a state. For Max-K-Cut/TSP/Hamiltonian:
///   E = -(order*C1/2) * sum_{i != j} J_ij cos(dphi_ij + f(dphi_ij))
///       - Csync * sum_i cos(order*phi_i)
/// (ordered pairs, so every edge counts twice). Graph partitioning uses its
/// own balance + pairwise form. The injection order is fi.grid_order().
double lyapunov_energy(const OscillatorState& state, const Graph& g, const PhaseInteraction& fi,
                       const Constants& at, ProblemKind kind);

/// Discrete Max-K-Cut objective evaluated through cos(dtheta + f) at the
/// exact grid angles theta = 2*pi*label/K. Equals (internal - cut) edge
/// weight; K = 2 reduces to the Ising Hamiltonian with J = -w.
double objective_max_k_cut(const std::vector<int>& labels, const Graph& g,
                           const PhaseInteraction& fi);

/// Discrete TSP objective: sum over city pairs of D_ij cos(dtheta + f) with
/// slot angles from the tour; minimized by the shortest tour.
double objective_tsp(const std::vector<int>& tour, const std::vector<std::vector<double>>& dist,
                     const PhaseInteraction& fi);

/// Discrete Hamiltonian-cycle objective: -(number of graph edges between
/// cyclically adjacent tour slots), through cos(dtheta + f_HC).
double objective_hamiltonian(const std::vector<int>& tour, const Graph& g,
                             const PhaseInteraction& fi);

/// Discrete graph-partition objective (binary labels): the product-of-spins
/// balance reward is interpreted through the mean phase,
///   H = -sum_edges w * (A*cos(mean - pi/2) + B*cos(dtheta)).
double objective_graph_partition(const std::vector<int>& labels, const Graph& g, double balance_a,
                                 double cut_b);

/// | E(grid phases) - (order*C1*H(labels) - N*Csync) |: the constant-offset
/// equivalence between the Lyapunov energy at grid phases and the discrete
/// objective. Grid phases are phi_i = 2*pi*label_i/order.
double discrete_equivalence_gap(const std::vector<int>& labels, const Graph& g,
                                const PhaseInteraction& fi, const Constants& at);

struct EnergyTraceReport {
  std::size_t total_steps = 0;
  std::vector<std::pair<std::size_t, double>> violations;  // (step, dE)
  double max_uptick = 0.0;
  double monotone_fraction = 1.0;
};

/// Flags every recorded step whose energy increase exceeds tol.
EnergyTraceReport check_energy_monotone(const std::vector<std::pair<double, double>>& trace,
                                        double tol = 1e-6);

/// Central-difference dE/dphi_i compared against -order * (dphi_i/dt);
/// returns the max difference relative to the gradient scale. Requires every
/// pairwise phase difference to sit at wrapped distance >= 5*sigma from
/// every bump center (the flat zones where f' is negligible); throws
/// ValidationError otherwise so the caller can resample.
double gradient_consistency(const OscillatorState& state, const Graph& g,
                            const PhaseInteraction& fi, const Constants& at, ProblemKind kind,
                            double h = 1e-5);

}  // namespace oscopt

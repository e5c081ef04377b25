#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "oscopt/decode.hpp"
#include "oscopt/dynamics.hpp"
#include "oscopt/graph.hpp"

namespace oscopt {

struct SolverConfig {
  Schedule schedule;
  RunConfig run;
  int restarts = 20;
  double sigma = -1.0;    // coupling width; -1 = default for the order
  int threads = 0;        // 0 = OSC_OPT_THREADS env or hardware concurrency
  bool weighted = false;  // score cuts by weight instead of edge count
  bool raw_distances = false;  // TSP: skip the J = -D/Dmax normalization
};

/// Per-problem tuned defaults (the generic Schedule defaults plus the
/// calibration constants for graph partitioning).
SolverConfig default_config(ProblemKind kind);

struct Solution {
  std::vector<int> labels;  // cuts / partitioning
  std::vector<int> tour;    // TSP / Hamiltonian
  double score = 0.0;
  bool valid = true;
  double discreteness = 0.0;
  std::uint32_t cut_edges = 0;
  std::uint32_t internal_edges = 0;
  double weighted_cut = 0.0;
  std::uint32_t missing_edges = 0;  // Hamiltonian
  std::uint32_t imbalance = 0;      // graph partitioning
  double energy_start = 0.0;
  double energy_end = 0.0;
};

struct TrialSummary {
  std::uint64_t seed = 0;
  double score = 0.0;
  bool valid = true;
  double discreteness = 0.0;
  double energy_start = 0.0;
  double energy_end = 0.0;

  friend bool operator==(const TrialSummary&, const TrialSummary&) = default;
};

struct SolveOutcome {
  Solution best;  // valid solutions outrank invalid ones regardless of score
  std::vector<TrialSummary> trials;
  double wall_time_sec = 0.0;
};

SolveOutcome solve_max_k_cut(const Graph& g, int k, const SolverConfig& cfg);

struct ChromaticResult {
  bool found = false;       // false: heuristic failed up to Delta+1
  int k = 0;                // accepted K (the chromatic estimate) or best attempt
  std::vector<int> labels;  // proper coloring when found, else best attempt
  std::uint32_t internal_edges = 0;  // 0 when found
};

/// Ascending-K Max-K-Cut until a labeling with zero internal edges appears;
/// capped at Delta+1. Failure is reported, not thrown.
ChromaticResult chromatic_search(const Graph& g, const SolverConfig& cfg);

/// Largest edge-free color class accumulated over the chromatic search.
std::vector<std::uint32_t> approximate_mis(const Graph& g, const SolverConfig& cfg);

/// MIS of the complement; the returned set is re-verified pairwise adjacent.
std::vector<std::uint32_t> approximate_max_clique(const Graph& g, const SolverConfig& cfg);

SolveOutcome solve_tsp(const std::vector<std::vector<double>>& dist, const SolverConfig& cfg);

SolveOutcome solve_hamiltonian(const Graph& g, const SolverConfig& cfg);

SolveOutcome solve_graph_partition(const Graph& g, const SolverConfig& cfg);

/// Validates an explicit distance matrix: square, symmetric (1e-9), zero
/// diagonal, non-negative entries. Shared with the CSV parser.
void validate_distance_matrix(const std::vector<std::vector<double>>& dist);

}  // namespace oscopt

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "oscopt/dynamics.hpp"
#include "oscopt/graph.hpp"
#include "oscopt/solve.hpp"

namespace oscopt::io {

/// Edge-list format (G-set compatible): optional '%'/'#' comment lines, a
/// header "n m", then m lines "i j w" with 1-based node indices. Weights are
/// stored as magnitudes. Errors carry the offending line number.
Graph parse_edge_list(const std::string& text);
Graph load_edge_list(const std::string& path);

/// CSV of N rows x N numbers; symmetric within 1e-9, zero diagonal,
/// non-negative entries.
std::vector<std::vector<double>> parse_distance_matrix(const std::string& text);
std::vector<std::vector<double>> load_distance_matrix(const std::string& path);

std::string format_edge_list(const Graph& g);

/// Everything needed to reproduce a solve run plus its outcome.
struct ResultRecord {
  std::string problem;
  std::string instance;
  std::uint32_t n = 0;
  std::uint64_t m = 0;
  // solver parameters
  int k = 2;
  double sigma = -1.0;
  double dt = 0.01;
  double cycles = 100.0;
  double c1_start = 1.0;
  double anneal_a = 10.0;
  double c_sync = 1.0;
  double c2 = 1.0;
  std::uint64_t seed = 0;
  int restarts = 20;
  bool weighted = false;
  // outcome
  double best_score = 0.0;
  bool best_valid = false;
  double best_discreteness = 0.0;
  double energy_start = 0.0;
  double energy_end = 0.0;
  std::vector<int> best_labels;  // or tour, depending on the problem
  std::vector<TrialSummary> trials;
  std::string timestamp;

  friend bool operator==(const ResultRecord&, const ResultRecord&) = default;
};

/// JSON round-trip; serialization is byte-deterministic for a given record.
std::string serialize_result(const ResultRecord& record);
ResultRecord deserialize_result(const std::string& text);
void write_result(const ResultRecord& record, const std::string& path);
ResultRecord read_result(const std::string& path);

/// Tabular trace: header "t,phi_0,...,phi_{N-1},energy,C1", one row per
/// recording interval. Runs recorded without phases emit "t,energy,C1".
std::string format_trajectory(const RunResult& run, const Schedule& sched);
void write_trajectory(const RunResult& run, const Schedule& sched, const std::string& path);

}  // namespace oscopt::io

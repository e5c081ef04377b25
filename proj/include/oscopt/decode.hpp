#pragma once

#include <cstdint>
#include <vector>

#include "oscopt/graph.hpp"

namespace oscopt::decode {

struct SnapResult {
  std::vector<int> labels;  // in 0..order-1
  double discreteness;      // max wrapped distance to the nearest grid point
};

/// label_i = round(order*phi_i / 2pi) mod order; exact midpoints break
/// toward the lower k so runs reproduce across platforms.
SnapResult snap_phases(const std::vector<double>& phases, int order);

struct CutStats {
  std::uint32_t cut_edges = 0;
  std::uint32_t internal_edges = 0;
  double weighted_cut = 0.0;
};

CutStats cut_value(const std::vector<int>& labels, const Graph& g);

struct DecodedTour {
  std::vector<int> order;  // canonical: starts at node 0, lexicographically
                           // smaller direction; a permutation even when invalid
  bool valid = false;      // true iff snapped slots form a bijection
  double discreteness = 0.0;
};

/// Snap to the 2pi*k/N grid and read the cyclic ordering. When two
/// oscillators land in one slot the decode is marked invalid and the phase
/// rank order is used as the fallback, so downstream metrics stay
/// computable. Rotations and reflections decode to one canonical tour.
DecodedTour decode_tour(const std::vector<double>& phases, int n);

/// Closed-tour length. Throws on an asymmetric matrix.
double tour_length(const std::vector<int>& order, const std::vector<std::vector<double>>& dist);

enum class HamiltonianStatus { Cycle, PathOnly, Neither };

struct HamiltonianReport {
  HamiltonianStatus status;
  std::uint32_t missing_edges;  // consecutive (cyclic) pairs lacking an edge
};

HamiltonianReport check_hamiltonian(const std::vector<int>& order, const Graph& g);

struct PartitionReport {
  std::uint32_t imbalance;  // | n0 - n1 |
  std::uint32_t cut_edges;
};

PartitionReport partition_report(const std::vector<int>& labels, const Graph& g);

struct IndependentSetReport {
  std::vector<std::uint32_t> internal_edges;  // per label class
  std::vector<std::uint32_t> largest_edge_free;  // empty when no class qualifies
};

/// Per-class internal edge counts plus the largest edge-free class (an
/// independent set when it exists).
IndependentSetReport independent_sets_from(const std::vector<int>& labels, const Graph& g);

}  // namespace oscopt::decode

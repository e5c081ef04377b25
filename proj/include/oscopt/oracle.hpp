#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "oscopt/graph.hpp"

namespace oscopt::oracle {

/// Hard size caps per problem. Requests above a cap are rejected with
/// BudgetError, never silently approximated.
struct Budget {
  std::uint32_t max_n_cut = 16;
  std::uint32_t max_n_tsp = 15;
  std::uint32_t max_n_hamiltonian = 20;
  std::uint32_t max_n_partition = 20;
  std::uint32_t max_n_mis = 30;
  std::uint32_t max_n_chromatic = 12;
  std::uint64_t max_enumerations = 1ull << 27;
};

struct CutResult {
  std::uint32_t cut_edges;
  std::vector<int> labels;
};

/// Exhaustive Max-K-Cut with first-node symmetry fixing (label(0) = 0).
CutResult exact_max_k_cut(const Graph& g, int k, const Budget& budget = {});

struct TspResult {
  double length;
  std::vector<int> tour;
};

/// Held-Karp dynamic program over subsets; N <= 15.
TspResult exact_tsp(const std::vector<std::vector<double>>& dist, const Budget& budget = {});

/// Brute-force permutation minimum, used to cross-validate Held-Karp (N <= 9).
TspResult exact_tsp_brute_force(const std::vector<std::vector<double>>& dist);

enum class HamiltonianKind { Cycle, PathOnly, None };

struct HamiltonianResult {
  HamiltonianKind kind;
  std::vector<int> witness;  // cycle/path order; empty when kind == None
};

/// Backtracking search with degree pruning.
HamiltonianResult exact_hamiltonian(const Graph& g, const Budget& budget = {});

struct PartitionResult {
  std::uint32_t cut_edges;
  std::vector<int> labels;  // 0/1, exactly n/2 each
};

/// Enumerates all balanced bipartitions; n even, n <= 20.
PartitionResult exact_balanced_partition(const Graph& g, const Budget& budget = {});

struct MisResult {
  std::uint32_t size;
  std::vector<std::uint32_t> nodes;
};

/// Branch-and-bound maximum independent set.
MisResult exact_mis(const Graph& g, const Budget& budget = {});

/// Chromatic number via iterated K-colorability backtracking.
int exact_chromatic(const Graph& g, const Budget& budget = {});

}  // namespace oscopt::oracle

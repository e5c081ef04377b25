#pragma once

#include <cstdint>
#include <vector>

namespace oscopt {

struct Edge {
  std::uint32_t u;  // u < v
  std::uint32_t v;
  double w;  // weight magnitude, > 0

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Undirected graph with positive edge-weight magnitudes. Problem layers
/// apply their own sign convention to the weights (MaxCut/HC use J = -w,
/// TSP uses J = -D, graph partitioning uses J = +w). Immutable after
/// construction; safe to share read-only across concurrent solver trials.
class Graph {
 public:
  Graph() = default;

  /// Canonicalizes (sorts edges, normalizes i < j) and validates.
  /// Throws ValidationError on out-of-range indices, self-loops,
  /// duplicate edges, or non-positive weights.
  Graph(std::uint32_t n, std::vector<Edge> edges);

  std::uint32_t node_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }

  bool has_edge(std::uint32_t u, std::uint32_t v) const;
  std::vector<std::uint32_t> degrees() const;
  std::uint32_t max_degree() const;
  bool is_unweighted() const;  // all weights exactly 1
  double total_weight() const;

  /// Adjacency lists (neighbor indices only), built on demand.
  std::vector<std::vector<std::uint32_t>> adjacency() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::uint32_t n_ = 0;
  std::vector<Edge> edges_;
};

/// Edge complement of an unweighted graph. Throws if any weight != 1.
Graph complement(const Graph& g);

/// Cycle 0-1-...-(n-1)-0 plus antipodal chords (i, i+n/2). n must be even
/// and >= 6; edge count is 3n/2.
Graph mobius_ladder(std::uint32_t n);

/// Erdos-Renyi G(n, p) sample; identical seed gives an identical graph.
Graph random_graph(std::uint32_t n, double p, std::uint64_t seed);

/// Complete graph on n nodes with unit weights.
Graph complete_graph(std::uint32_t n);

/// Simple cycle 0-1-...-(n-1)-0.
Graph cycle_graph(std::uint32_t n);

}  // namespace oscopt

#include "oscopt/decode.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "oscopt/angles.hpp"
#include "oscopt/errors.hpp"

namespace oscopt::decode {

namespace {

// Round to nearest with ties toward the lower integer.
long round_ties_down(double x) { return static_cast<long>(std::ceil(x - 0.5)); }

int snap_one(double phase, int order, double& dist) {
  const double x = phase * order / kTwoPi;
  long k = round_ties_down(x);
  dist = wrapped_distance(phase, kTwoPi * static_cast<double>(k) / order);
  k %= order;
  if (k < 0) k += order;
  return static_cast<int>(k);
}

}  // namespace

SnapResult snap_phases(const std::vector<double>& phases, int order) {
  if (order < 2) throw ValidationError("snap_phases requires order >= 2");
  SnapResult out;
  out.labels.reserve(phases.size());
  out.discreteness = 0.0;
  for (double p : phases) {
    double d;
    out.labels.push_back(snap_one(p, order, d));
    out.discreteness = std::max(out.discreteness, d);
  }
  return out;
}

CutStats cut_value(const std::vector<int>& labels, const Graph& g) {
  if (labels.size() != g.node_count()) throw ValidationError("label vector length mismatch");
  CutStats stats;
  for (const auto& e : g.edges()) {
    if (labels[e.u] != labels[e.v]) {
      ++stats.cut_edges;
      stats.weighted_cut += e.w;
    } else {
      ++stats.internal_edges;
    }
  }
  return stats;
}

namespace {

// Canonical representative of a cyclic order: start at node 0, pick the
// lexicographically smaller of the two directions.
std::vector<int> canonical_cycle(std::vector<int> order) {
  const auto n = order.size();
  if (n == 0) return order;
  const auto zero_pos =
      static_cast<std::size_t>(std::find(order.begin(), order.end(), 0) - order.begin());
  std::vector<int> fwd(n), bwd(n);
  for (std::size_t i = 0; i < n; ++i) {
    fwd[i] = order[(zero_pos + i) % n];
    bwd[i] = order[(zero_pos + n - i) % n];
  }
  return std::min(fwd, bwd);
}

}  // namespace

DecodedTour decode_tour(const std::vector<double>& phases, int n) {
  if (n < 1 || phases.size() != static_cast<std::size_t>(n)) {
    throw ValidationError("decode_tour: phase count must equal n");
  }
  DecodedTour out;
  auto snapped = snap_phases(phases, std::max(2, n));
  out.discreteness = snapped.discreteness;

  std::vector<int> slot_owner(n, -1);
  bool bijective = true;
  for (int i = 0; i < n; ++i) {
    const int s = snapped.labels[i];
    if (s >= n || slot_owner[s] != -1) {
      bijective = false;
      break;
    }
    slot_owner[s] = i;
  }
  out.valid = bijective;

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  if (bijective) {
    for (int s = 0; s < n; ++s) order[s] = slot_owner[s];
  } else {
    // Rank-order fallback: sort by phase, ties by index.
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return phases[a] < phases[b]; });
  }
  out.order = canonical_cycle(std::move(order));
  return out;
}

double tour_length(const std::vector<int>& order, const std::vector<std::vector<double>>& dist) {
  const std::size_t n = dist.size();
  if (order.size() != n) throw ValidationError("tour length does not match matrix");
  for (std::size_t i = 0; i < n; ++i) {
    if (dist[i].size() != n) throw ValidationError("distance matrix is not square");
    if (dist[i][i] != 0.0) throw ValidationError("distance matrix diagonal must be zero");
    for (std::size_t j = 0; j < n; ++j) {
      if (dist[i][j] != dist[j][i]) throw ValidationError("distance matrix is asymmetric");
    }
  }
  double len = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    len += dist[order[i]][order[(i + 1) % n]];
  }
  return len;
}

HamiltonianReport check_hamiltonian(const std::vector<int>& order, const Graph& g) {
  const std::uint32_t n = g.node_count();
  if (order.size() != n) throw ValidationError("order length does not match graph");
  std::uint32_t missing = 0;
  for (std::uint32_t i = 0; i < n; ++i) {
    const auto a = static_cast<std::uint32_t>(order[i]);
    const auto b = static_cast<std::uint32_t>(order[(i + 1) % n]);
    if (!g.has_edge(a, b)) ++missing;
  }
  HamiltonianStatus status = HamiltonianStatus::Neither;
  if (missing == 0) {
    status = HamiltonianStatus::Cycle;
  } else if (missing == 1) {
    status = HamiltonianStatus::PathOnly;
  }
  return {status, missing};
}

PartitionReport partition_report(const std::vector<int>& labels, const Graph& g) {
  if (labels.size() != g.node_count()) throw ValidationError("label vector length mismatch");
  std::uint32_t n1 = 0;
  for (int l : labels) {
    if (l != 0 && l != 1) throw ValidationError("partition labels must be 0/1");
    n1 += static_cast<std::uint32_t>(l);
  }
  const auto n0 = static_cast<std::uint32_t>(labels.size()) - n1;
  const std::uint32_t imbalance = n0 > n1 ? n0 - n1 : n1 - n0;
  return {imbalance, cut_value(labels, g).cut_edges};
}

IndependentSetReport independent_sets_from(const std::vector<int>& labels, const Graph& g) {
  if (labels.size() != g.node_count()) throw ValidationError("label vector length mismatch");
  int k = 0;
  for (int l : labels) {
    if (l < 0) throw ValidationError("labels must be non-negative");
    k = std::max(k, l + 1);
  }
  IndependentSetReport report;
  report.internal_edges.assign(k, 0);
  for (const auto& e : g.edges()) {
    if (labels[e.u] == labels[e.v]) ++report.internal_edges[labels[e.u]];
  }
  std::vector<std::uint32_t> class_size(k, 0);
  for (int l : labels) ++class_size[l];
  int best = -1;
  for (int c = 0; c < k; ++c) {
    if (report.internal_edges[c] == 0 && (best == -1 || class_size[c] > class_size[best])) {
      best = c;
    }
  }
  if (best >= 0) {
    for (std::uint32_t i = 0; i < labels.size(); ++i) {
      if (labels[i] == best) report.largest_edge_free.push_back(i);
    }
  }
  return report;
}

}  // namespace oscopt::decode

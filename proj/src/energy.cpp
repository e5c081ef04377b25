#include "oscopt/energy.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "oscopt/angles.hpp"
#include "oscopt/errors.hpp"

namespace oscopt {

double lyapunov_energy(const OscillatorState& state, const Graph& g, const PhaseInteraction& fi,
                       const Constants& at, ProblemKind kind) {
  Simulator sim(g, fi, Schedule{}, kind);
  return sim.energy(state, at);
}

double objective_max_k_cut(const std::vector<int>& labels, const Graph& g,
                           const PhaseInteraction& fi) {
  if (labels.size() != g.node_count()) throw ValidationError("label vector length mismatch");
  const int k = fi.grid_order();
  for (int l : labels) {
    if (l < 0 || l >= k) throw ValidationError("label out of range 0..K-1");
  }
  double h = 0.0;
  for (const auto& e : g.edges()) {
    const double dtheta = kTwoPi * (labels[e.u] - labels[e.v]) / k;
    h += e.w * std::cos(dtheta + fi.eval(dtheta));  // J = -w
  }
  return h;
}

double objective_tsp(const std::vector<int>& tour, const std::vector<std::vector<double>>& dist,
                     const PhaseInteraction& fi) {
  const std::size_t n = dist.size();
  if (tour.size() != n) throw ValidationError("tour length does not match distance matrix");
  std::vector<int> slot(n, -1);
  for (std::size_t s = 0; s < n; ++s) {
    const int city = tour[s];
    if (city < 0 || static_cast<std::size_t>(city) >= n || slot[city] != -1) {
      throw ValidationError("tour is not a permutation");
    }
    slot[city] = static_cast<int>(s);
  }
  double h = 0.0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double dtheta = kTwoPi * (slot[i] - slot[j]) / static_cast<double>(n);
      h += dist[i][j] * std::cos(dtheta + fi.eval(dtheta));  // J = -D
    }
  }
  return h;
}

double objective_hamiltonian(const std::vector<int>& tour, const Graph& g,
                             const PhaseInteraction& fi) {
  const std::uint32_t n = g.node_count();
  if (tour.size() != n) throw ValidationError("tour length does not match graph");
  std::vector<int> slot(n, -1);
  for (std::size_t s = 0; s < tour.size(); ++s) {
    const int node = tour[s];
    if (node < 0 || static_cast<std::uint32_t>(node) >= n || slot[node] != -1) {
      throw ValidationError("tour is not a permutation");
    }
    slot[node] = static_cast<int>(s);
  }
  double h = 0.0;
  for (const auto& e : g.edges()) {
    const double dtheta = kTwoPi * (slot[e.u] - slot[e.v]) / static_cast<double>(n);
    h += e.w * std::cos(dtheta + fi.eval(dtheta));  // J = -1 on edges
  }
  return h;
}

double objective_graph_partition(const std::vector<int>& labels, const Graph& g, double balance_a,
                                 double cut_b) {
  if (labels.size() != g.node_count()) throw ValidationError("label vector length mismatch");
  double mean = 0.0;
  for (int l : labels) {
    if (l != 0 && l != 1) throw ValidationError("graph partition labels must be 0/1");
    mean += l == 0 ? 0.0 : kPi;
  }
  mean /= static_cast<double>(labels.empty() ? 1 : labels.size());
  double h = 0.0;
  const double balance = balance_a * std::cos(mean - kPi / 2.0);
  for (const auto& e : g.edges()) {
    const double dtheta = labels[e.u] == labels[e.v] ? 0.0 : kPi;
    h -= e.w * (balance + cut_b * std::cos(dtheta));  // J = +w
  }
  return h;
}

double discrete_equivalence_gap(const std::vector<int>& labels, const Graph& g,
                                const PhaseInteraction& fi, const Constants& at) {
  const int order = fi.grid_order();
  OscillatorState state;
  state.phases.reserve(labels.size());
  for (int l : labels) state.phases.push_back(wrap_2pi(kTwoPi * l / order));
  const double e_grid = lyapunov_energy(state, g, fi, at, ProblemKind::MaxKCut);
  const double h = objective_max_k_cut(labels, g, fi);
  const double expected = order * at.c1 * h - static_cast<double>(g.node_count()) * at.c_sync;
  return std::fabs(e_grid - expected);
}

EnergyTraceReport check_energy_monotone(const std::vector<std::pair<double, double>>& trace,
                                        double tol) {
  if (trace.size() < 2) throw ValidationError("energy trace needs at least 2 samples");
  EnergyTraceReport report;
  report.total_steps = trace.size() - 1;
  for (std::size_t i = 1; i < trace.size(); ++i) {
    const double de = trace[i].second - trace[i - 1].second;
    if (de > tol) {
      report.violations.emplace_back(i, de);
      report.max_uptick = std::max(report.max_uptick, de);
    }
  }
  report.monotone_fraction =
      1.0 - static_cast<double>(report.violations.size()) / static_cast<double>(report.total_steps);
  return report;
}

double gradient_consistency(const OscillatorState& state, const Graph& g,
                            const PhaseInteraction& fi, const Constants& at, ProblemKind kind,
                            double h) {
  const std::size_t n = state.phases.size();
  if (n != g.node_count()) throw ValidationError("phase vector length mismatch");

  // Flat-zone precondition: every pairwise difference must be >= 5*sigma
  // away from every bump center (and mirror), where f' is negligible.
  const double min_dist = 5.0 * fi.sigma();
  const auto& centers = fi.centers();
  if (!centers.empty()) {
    for (std::size_t i = 0; i + 1 < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const double d = state.phases[i] - state.phases[j];
        for (double c : centers) {
          if (wrapped_distance(d, c) < min_dist || wrapped_distance(d, -c) < min_dist) {
            throw ValidationError(
                "phase pair lands inside a bump zone; resample phases in the flat zones");
          }
        }
      }
    }
  }

  Simulator sim(g, fi, Schedule{}, kind);
  const double order = kind == ProblemKind::GraphPartition ? 2.0 : fi.grid_order();
  const std::vector<double> v = sim.velocity(state, at);

  OscillatorState probe = state;
  std::vector<double> fd(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double orig = state.phases[i];
    probe.phases[i] = orig + h;
    const double ep = sim.energy(probe, at);
    probe.phases[i] = orig - h;
    const double em = sim.energy(probe, at);
    probe.phases[i] = orig;
    fd[i] = (ep - em) / (2.0 * h);
  }

  double scale = 1.0;
  for (double x : fd) scale = std::max(scale, std::fabs(x));
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    worst = std::max(worst, std::fabs(fd[i] + order * v[i]) / scale);
  }
  return worst;
}

}  // namespace oscopt

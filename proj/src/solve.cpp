#include "oscopt/solve.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <string>
#include <thread>

#include "oscopt/angles.hpp"
#include "oscopt/coupling.hpp"
#include "oscopt/errors.hpp"

namespace oscopt {

namespace {

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("OSC_OPT_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Runs `count` independent trials (seeded cfg.run.seed + index) and
/// collects results in index order, so aggregation is order-independent.
template <typename Trial>
std::vector<Trial> run_trials(int count, int threads,
                              const std::function<Trial(std::uint64_t seed)>& trial_fn,
                              std::uint64_t base_seed) {
  std::vector<Trial> results(count);
  threads = std::min(threads, count);
  if (threads <= 1) {
    for (int i = 0; i < count; ++i) results[i] = trial_fn(base_seed + i);
    return results;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::mutex failure_mu;
  pool.reserve(threads);
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (;;) {
        const int i = next.fetch_add(1);
        if (i >= count) return;
        try {
          results[i] = trial_fn(base_seed + i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mu);
          if (!failure) failure = std::current_exception();
          return;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
  return results;
}

struct CutTrial {
  Solution solution;
  TrialSummary summary;
};

double elapsed_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

SolverConfig default_config(ProblemKind kind) {
  SolverConfig cfg;
  if (kind == ProblemKind::GraphPartition) {
    // Calibration constants: balance 0.5, cut 1, constant C1.
    cfg.schedule.c1_start = 0.5;
    cfg.schedule.a = 0.5;
    cfg.schedule.c2 = 1.0;
    cfg.schedule.c_sync = 1.0;
  }
  return cfg;
}

SolveOutcome solve_max_k_cut(const Graph& g, int k, const SolverConfig& cfg) {
  if (k < 2) throw ValidationError("Max-K-Cut requires K >= 2");
  const auto t0 = std::chrono::steady_clock::now();
  const PhaseInteraction fi = build_max_k_cut_interaction(k, cfg.sigma);
  const int threads = resolve_threads(cfg.threads);

  std::function<CutTrial(std::uint64_t)> trial_fn = [&](std::uint64_t seed) {
    Simulator sim(g, fi, cfg.schedule, ProblemKind::MaxKCut);
    RunConfig rc = cfg.run;
    rc.seed = seed;
    const RunResult rr = sim.run(rc);
    const auto snapped = decode::snap_phases(rr.final_state.phases, k);
    const auto stats = decode::cut_value(snapped.labels, g);
    CutTrial trial;
    trial.solution.labels = snapped.labels;
    trial.solution.discreteness = snapped.discreteness;
    trial.solution.cut_edges = stats.cut_edges;
    trial.solution.internal_edges = stats.internal_edges;
    trial.solution.weighted_cut = stats.weighted_cut;
    trial.solution.score = cfg.weighted ? stats.weighted_cut : stats.cut_edges;
    trial.solution.valid = true;
    trial.solution.energy_start = rr.energy_trace.front().second;
    trial.solution.energy_end = rr.energy_trace.back().second;
    trial.summary = {seed,
                     trial.solution.score,
                     true,
                     snapped.discreteness,
                     trial.solution.energy_start,
                     trial.solution.energy_end};
    return trial;
  };
  const auto trials = run_trials<CutTrial>(cfg.restarts, threads, trial_fn, cfg.run.seed);

  SolveOutcome outcome;
  outcome.trials.reserve(trials.size());
  bool have = false;
  for (const auto& tr : trials) {
    outcome.trials.push_back(tr.summary);
    if (!have || tr.solution.score > outcome.best.score) {  // ties keep the lowest seed
      outcome.best = tr.solution;
      have = true;
    }
  }
  outcome.wall_time_sec = elapsed_since(t0);
  return outcome;
}

ChromaticResult chromatic_search(const Graph& g, const SolverConfig& cfg) {
  if (g.node_count() == 0) throw ValidationError("chromatic search needs a non-empty graph");
  if (g.edge_count() == 0) {
    // Edgeless graphs are 1-colorable; the dynamics are not needed.
    return {true, 1, std::vector<int>(g.node_count(), 0), 0};
  }
  const int k_max = static_cast<int>(g.max_degree()) + 1;  // Brooks bound
  ChromaticResult best_attempt;
  best_attempt.internal_edges = static_cast<std::uint32_t>(g.edge_count()) + 1;
  for (int k = 2; k <= std::max(2, k_max); ++k) {
    const SolveOutcome outcome = solve_max_k_cut(g, k, cfg);
    if (outcome.best.internal_edges == 0) {
      return {true, k, outcome.best.labels, 0};
    }
    if (outcome.best.internal_edges < best_attempt.internal_edges) {
      best_attempt = {false, k, outcome.best.labels, outcome.best.internal_edges};
    }
  }
  return best_attempt;  // heuristic failure, best attempt attached
}

std::vector<std::uint32_t> approximate_mis(const Graph& g, const SolverConfig& cfg) {
  if (g.node_count() == 0) return {};
  if (g.edge_count() == 0) {
    std::vector<std::uint32_t> all(g.node_count());
    for (std::uint32_t i = 0; i < g.node_count(); ++i) all[i] = i;
    return all;
  }
  // Walk the same ascending-K ladder as the chromatic search, keeping the
  // largest edge-free class seen at any K.
  const int k_max = static_cast<int>(g.max_degree()) + 1;
  std::vector<std::uint32_t> best;
  for (int k = 2; k <= std::max(2, k_max); ++k) {
    const SolveOutcome outcome = solve_max_k_cut(g, k, cfg);
    const auto report = decode::independent_sets_from(outcome.best.labels, g);
    if (report.largest_edge_free.size() > best.size()) best = report.largest_edge_free;
    if (outcome.best.internal_edges == 0) break;  // proper coloring reached
  }
  if (best.empty()) best.push_back(0);  // a singleton is always independent
  return best;
}

std::vector<std::uint32_t> approximate_max_clique(const Graph& g, const SolverConfig& cfg) {
  if (!g.is_unweighted()) throw ValidationError("max clique expects an unweighted graph");
  if (g.node_count() == 0) return {};
  const Graph gc = complement(g);
  auto clique = approximate_mis(gc, cfg);
  // Soundness: an independent set of the complement must be a clique here.
  for (std::size_t i = 0; i + 1 < clique.size(); ++i) {
    for (std::size_t j = i + 1; j < clique.size(); ++j) {
      if (!g.has_edge(clique[i], clique[j])) {
        throw std::logic_error("clique soundness violation: returned set is not a clique");
      }
    }
  }
  return clique;
}

void validate_distance_matrix(const std::vector<std::vector<double>>& dist) {
  const std::size_t n = dist.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (dist[i].size() != n) throw ValidationError("distance matrix is not square");
    if (std::fabs(dist[i][i]) > 1e-9) {
      throw ValidationError("distance matrix diagonal must be zero (row " + std::to_string(i) +
                            ")");
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (dist[i][j] < 0.0) throw ValidationError("negative distance entry");
      if (std::fabs(dist[i][j] - dist[j][i]) > 1e-9) {
        throw ValidationError("distance matrix is asymmetric at (" + std::to_string(i) + ", " +
                              std::to_string(j) + ")");
      }
    }
  }
}

SolveOutcome solve_tsp(const std::vector<std::vector<double>>& dist, const SolverConfig& cfg) {
  const std::size_t n = dist.size();
  if (n < 3) throw ValidationError("TSP requires at least 3 cities");
  validate_distance_matrix(dist);

  // Symmetrize exactly and clamp the diagonal so tour_length's strict checks
  // hold regardless of 1e-9 input noise.
  std::vector<std::vector<double>> d(n, std::vector<double>(n, 0.0));
  double d_max = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      d[i][j] = d[j][i] = 0.5 * (dist[i][j] + dist[j][i]);
      d_max = std::max(d_max, d[i][j]);
    }
  }
  const double scale = (cfg.raw_distances || d_max == 0.0) ? 1.0 : d_max;

  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (d[i][j] > 0.0) {
        edges.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j),
                         d[i][j] / scale});
      }
    }
  }
  const Graph g(static_cast<std::uint32_t>(n), std::move(edges));
  const PhaseInteraction fi = build_tsp_interaction(static_cast<int>(n), cfg.sigma);
  const auto t0 = std::chrono::steady_clock::now();
  const int threads = resolve_threads(cfg.threads);

  std::function<CutTrial(std::uint64_t)> trial_fn = [&](std::uint64_t seed) {
    Simulator sim(g, fi, cfg.schedule, ProblemKind::Tsp);
    RunConfig rc = cfg.run;
    rc.seed = seed;
    const RunResult rr = sim.run(rc);
    const auto tour = decode::decode_tour(rr.final_state.phases, static_cast<int>(n));
    CutTrial trial;
    trial.solution.tour = tour.order;
    trial.solution.valid = tour.valid;
    trial.solution.discreteness = tour.discreteness;
    trial.solution.score = decode::tour_length(tour.order, d);
    trial.solution.energy_start = rr.energy_trace.front().second;
    trial.solution.energy_end = rr.energy_trace.back().second;
    trial.summary = {seed,
                     trial.solution.score,
                     tour.valid,
                     tour.discreteness,
                     trial.solution.energy_start,
                     trial.solution.energy_end};
    return trial;
  };
  const auto trials = run_trials<CutTrial>(cfg.restarts, threads, trial_fn, cfg.run.seed);

  SolveOutcome outcome;
  bool have = false;
  for (const auto& tr : trials) {
    outcome.trials.push_back(tr.summary);
    const auto& cand = tr.solution;
    const bool better =
        !have ||
        (cand.valid && !outcome.best.valid) ||  // validity precedence
        (cand.valid == outcome.best.valid && cand.score < outcome.best.score);
    if (better) {
      outcome.best = cand;
      have = true;
    }
  }
  outcome.wall_time_sec = elapsed_since(t0);
  return outcome;
}

SolveOutcome solve_hamiltonian(const Graph& g, const SolverConfig& cfg) {
  const std::uint32_t n = g.node_count();
  if (n < 3) throw ValidationError("Hamiltonian search requires N >= 3");
  const PhaseInteraction fi = build_hc_interaction(static_cast<int>(n), cfg.sigma);
  const auto t0 = std::chrono::steady_clock::now();
  const int threads = resolve_threads(cfg.threads);

  auto rank = [](const Solution& s) {
    // cycle (0 missing) < path-only (1) < neither; fewer missing edges first.
    return s.missing_edges;
  };

  std::function<CutTrial(std::uint64_t)> trial_fn = [&](std::uint64_t seed) {
    Simulator sim(g, fi, cfg.schedule, ProblemKind::HamiltonianCycle);
    RunConfig rc = cfg.run;
    rc.seed = seed;
    const RunResult rr = sim.run(rc);
    const auto tour = decode::decode_tour(rr.final_state.phases, static_cast<int>(n));
    const auto report = decode::check_hamiltonian(tour.order, g);
    CutTrial trial;
    trial.solution.tour = tour.order;
    trial.solution.valid = tour.valid;
    trial.solution.discreteness = tour.discreteness;
    trial.solution.missing_edges = report.missing_edges;
    trial.solution.score = report.missing_edges;
    trial.solution.energy_start = rr.energy_trace.front().second;
    trial.solution.energy_end = rr.energy_trace.back().second;
    trial.summary = {seed,
                     trial.solution.score,
                     tour.valid,
                     tour.discreteness,
                     trial.solution.energy_start,
                     trial.solution.energy_end};
    return trial;
  };
  const auto trials = run_trials<CutTrial>(cfg.restarts, threads, trial_fn, cfg.run.seed);

  SolveOutcome outcome;
  bool have = false;
  for (const auto& tr : trials) {
    outcome.trials.push_back(tr.summary);
    const auto& cand = tr.solution;
    const bool better = !have ||
                        (cand.valid && !outcome.best.valid) ||
                        (cand.valid == outcome.best.valid && rank(cand) < rank(outcome.best));
    if (better) {
      outcome.best = cand;
      have = true;
    }
  }
  outcome.wall_time_sec = elapsed_since(t0);
  return outcome;
}

SolveOutcome solve_graph_partition(const Graph& g, const SolverConfig& cfg) {
  const std::uint32_t n = g.node_count();
  if (n == 0 || n % 2 != 0) {
    throw ValidationError("graph partitioning requires an even node count");
  }
  const PhaseInteraction fi = build_max_k_cut_interaction(2, cfg.sigma);  // f == 0, order 2
  const auto t0 = std::chrono::steady_clock::now();
  const int threads = resolve_threads(cfg.threads);

  std::function<CutTrial(std::uint64_t)> trial_fn = [&](std::uint64_t seed) {
    Simulator sim(g, fi, cfg.schedule, ProblemKind::GraphPartition);
    RunConfig rc = cfg.run;
    rc.seed = seed;
    const RunResult rr = sim.run(rc);
    const auto snapped = decode::snap_phases(rr.final_state.phases, 2);
    const auto report = decode::partition_report(snapped.labels, g);
    CutTrial trial;
    trial.solution.labels = snapped.labels;
    trial.solution.discreteness = snapped.discreteness;
    trial.solution.imbalance = report.imbalance;
    trial.solution.cut_edges = report.cut_edges;
    trial.solution.valid = report.imbalance == 0;
    trial.solution.score = report.cut_edges;
    trial.solution.energy_start = rr.energy_trace.front().second;
    trial.solution.energy_end = rr.energy_trace.back().second;
    trial.summary = {seed,
                     trial.solution.score,
                     trial.solution.valid,
                     snapped.discreteness,
                     trial.solution.energy_start,
                     trial.solution.energy_end};
    return trial;
  };
  const auto trials = run_trials<CutTrial>(cfg.restarts, threads, trial_fn, cfg.run.seed);

  SolveOutcome outcome;
  bool have = false;
  for (const auto& tr : trials) {
    outcome.trials.push_back(tr.summary);
    const auto& cand = tr.solution;
    // Balanced trials first (min cut); otherwise lexicographic
    // (imbalance, cut).
    const auto key = [](const Solution& s) {
      return std::pair<std::uint32_t, std::uint32_t>{s.imbalance, s.cut_edges};
    };
    if (!have || key(cand) < key(outcome.best)) {
      outcome.best = cand;
      have = true;
    }
  }
  outcome.wall_time_sec = elapsed_since(t0);
  return outcome;
}

}  // namespace oscopt

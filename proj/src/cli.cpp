#include "oscopt/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "oscopt/coupling.hpp"
#include "oscopt/decode.hpp"
#include "oscopt/errors.hpp"
#include "oscopt/io.hpp"
#include "oscopt/oracle.hpp"
#include "oscopt/solve.hpp"

namespace oscopt {

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitBudget = 3;

std::string now_iso8601() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t tt = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&tt, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

struct SolveOptions {
  std::string problem;
  std::string instance;
  int k = 2;
  double sigma = -1.0;
  double dt = 0.01;
  double cycles = 100.0;
  double c1_start = 1.0;
  double anneal_a = 10.0;
  double c_sync = 1.0;
  double c2 = 1.0;
  int restarts = 20;
  std::uint64_t seed = 0;
  int threads = 0;
  std::string method = "euler";
  bool weighted = false;
  bool raw_distances = false;
  bool trace_phases = false;
  std::string trace_path;
  std::string out_path;
  std::string timestamp;
  // Schedule flags the user actually set; per-problem defaults otherwise.
  bool c1_set = false, a_set = false, csync_set = false, c2_set = false;
};

void add_instance_args(CLI::App* cmd, SolveOptions& opt) {
  cmd->add_option("problem", opt.problem, "maxcut|maxkcut|color|mis|clique|tsp|hc|gp")
      ->required()
      ->check(CLI::IsMember({"maxcut", "maxkcut", "color", "mis", "clique", "tsp", "hc", "gp"}));
  cmd->add_option("instance", opt.instance, "edge-list file (CSV matrix for tsp)")->required();
}

void add_solve_flags(CLI::App* cmd, SolveOptions& opt) {
  cmd->add_option("--k", opt.k, "partition count for maxkcut")->check(CLI::Range(2, 1024));
  cmd->add_option("--sigma", opt.sigma, "Gaussian bump width (default pi/(8*order))");
  cmd->add_option("--dt", opt.dt, "integrator step")->check(CLI::PositiveNumber);
  cmd->add_option("--cycles", opt.cycles, "simulation horizon T")->check(CLI::PositiveNumber);
  cmd->add_option("--c1-start", opt.c1_start, "initial coupling strength")
      ->each([&opt](const std::string&) { opt.c1_set = true; });
  cmd->add_option("--anneal-a", opt.anneal_a, "C1 ramp target at t = T")
      ->each([&opt](const std::string&) { opt.a_set = true; });
  cmd->add_option("--csync", opt.c_sync, "harmonic injection strength")
      ->each([&opt](const std::string&) { opt.csync_set = true; });
  cmd->add_option("--c2", opt.c2, "graph-partition cut weight")
      ->each([&opt](const std::string&) { opt.c2_set = true; });
  cmd->add_option("--restarts", opt.restarts, "independent trials")->check(CLI::PositiveNumber);
  cmd->add_option("--seed", opt.seed, "base seed; trial r uses seed + r");
  cmd->add_option("--threads", opt.threads, "parallel trials (0 = OSC_OPT_THREADS or cores)");
  cmd->add_option("--method", opt.method, "euler|rk4")->check(CLI::IsMember({"euler", "rk4"}));
  cmd->add_flag("--weighted", opt.weighted, "score cuts by edge weight");
  cmd->add_flag("--raw-distances", opt.raw_distances, "TSP: skip J = -D/Dmax normalization");
  cmd->add_option("--trace", opt.trace_path, "write the best trial's trajectory CSV here");
  cmd->add_flag("--trace-phases", opt.trace_phases,
                "include per-oscillator phases in the trace even for n > 100");
  cmd->add_option("--out", opt.out_path, "write the result record (JSON) here");
  cmd->add_option("--timestamp", opt.timestamp, "timestamp recorded in the result file");
}

ProblemKind kind_of(const std::string& problem) {
  if (problem == "tsp") return ProblemKind::Tsp;
  if (problem == "hc") return ProblemKind::HamiltonianCycle;
  if (problem == "gp") return ProblemKind::GraphPartition;
  return ProblemKind::MaxKCut;
}

SolverConfig build_config(const SolveOptions& opt) {
  SolverConfig cfg = default_config(kind_of(opt.problem));
  if (opt.c1_set) cfg.schedule.c1_start = opt.c1_start;
  if (opt.a_set) cfg.schedule.a = opt.anneal_a;
  if (opt.csync_set) cfg.schedule.c_sync = opt.c_sync;
  if (opt.c2_set) cfg.schedule.c2 = opt.c2;
  cfg.schedule.horizon = opt.cycles;
  cfg.run.dt = opt.dt;
  cfg.run.seed = opt.seed;
  cfg.run.method = opt.method == "rk4" ? Integrator::Rk4 : Integrator::Euler;
  cfg.restarts = opt.restarts;
  cfg.sigma = opt.sigma;
  cfg.threads = opt.threads;
  cfg.weighted = opt.weighted;
  cfg.raw_distances = opt.raw_distances;
  for (const auto& w : cfg.schedule.warnings()) std::cerr << "warning: " << w << "\n";
  return cfg;
}

io::ResultRecord base_record(const SolveOptions& opt, const SolverConfig& cfg, std::uint32_t n,
                             std::uint64_t m, int k) {
  io::ResultRecord r;
  r.problem = opt.problem;
  r.instance = std::filesystem::path(opt.instance).filename().string();
  r.n = n;
  r.m = m;
  r.k = k;
  r.sigma = cfg.sigma;
  r.dt = cfg.run.dt;
  r.cycles = cfg.schedule.horizon;
  r.c1_start = cfg.schedule.c1_start;
  r.anneal_a = cfg.schedule.a;
  r.c_sync = cfg.schedule.c_sync;
  r.c2 = cfg.schedule.c2;
  r.seed = cfg.run.seed;
  r.restarts = cfg.restarts;
  r.weighted = cfg.weighted;
  r.timestamp = opt.timestamp.empty() ? now_iso8601() : opt.timestamp;
  return r;
}

void fill_outcome(io::ResultRecord& r, const SolveOutcome& outcome, std::vector<int> assignment) {
  r.best_score = outcome.best.score;
  r.best_valid = outcome.best.valid;
  r.best_discreteness = outcome.best.discreteness;
  r.energy_start = outcome.best.energy_start;
  r.energy_end = outcome.best.energy_end;
  r.best_labels = std::move(assignment);
  r.trials = outcome.trials;
}

std::uint64_t best_trial_seed(const SolveOutcome& outcome) {
  // Trials are seed-ordered; find the first whose summary matches the best.
  for (const auto& t : outcome.trials) {
    if (t.valid == outcome.best.valid && t.score == outcome.best.score &&
        t.energy_end == outcome.best.energy_end) {
      return t.seed;
    }
  }
  return outcome.trials.empty() ? 0 : outcome.trials.front().seed;
}

/// Re-runs one seed with recording enabled and writes the trajectory CSV.
void write_trace(const SolveOptions& opt, const SolverConfig& cfg, const Graph& g,
                 const PhaseInteraction& fi, ProblemKind kind, std::uint64_t seed) {
  Simulator sim(g, fi, cfg.schedule, kind);
  RunConfig rc = cfg.run;
  rc.seed = seed;
  rc.record_phases = opt.trace_phases || g.node_count() <= 100;
  const RunResult rr = sim.run(rc);
  io::write_trajectory(rr, cfg.schedule, opt.trace_path);
}

int cmd_solve(const SolveOptions& opt) {
  const SolverConfig cfg = build_config(opt);
  const ProblemKind kind = kind_of(opt.problem);

  if (opt.problem == "tsp") {
    const auto dist = io::load_distance_matrix(opt.instance);
    const auto outcome = solve_tsp(dist, cfg);
    std::cout << "tsp n=" << dist.size() << " best_length=" << outcome.best.score
              << " valid=" << (outcome.best.valid ? "yes" : "no") << "\n";
    io::ResultRecord r = base_record(opt, cfg, static_cast<std::uint32_t>(dist.size()),
                                     dist.size() * (dist.size() - 1) / 2, 0);
    fill_outcome(r, outcome, outcome.best.tour);
    if (!opt.out_path.empty()) io::write_result(r, opt.out_path);
    if (!opt.trace_path.empty()) {
      // Rebuild the solver's normalized coupling graph for the trace rerun.
      double d_max = 0.0;
      for (const auto& row : dist) {
        for (double v : row) d_max = std::max(d_max, v);
      }
      const double scale = (cfg.raw_distances || d_max == 0.0) ? 1.0 : d_max;
      std::vector<Edge> edges;
      for (std::uint32_t i = 0; i < dist.size(); ++i) {
        for (std::uint32_t j = i + 1; j < dist.size(); ++j) {
          if (dist[i][j] > 0.0) edges.push_back({i, j, dist[i][j] / scale});
        }
      }
      const Graph g(static_cast<std::uint32_t>(dist.size()), std::move(edges));
      const auto fi = build_tsp_interaction(static_cast<int>(dist.size()), cfg.sigma);
      write_trace(opt, cfg, g, fi, kind, best_trial_seed(outcome));
    }
    return 0;
  }

  const Graph g = io::load_edge_list(opt.instance);

  if (opt.problem == "color") {
    const auto result = chromatic_search(g, cfg);
    std::cout << "color n=" << g.node_count() << " k=" << result.k
              << " proper=" << (result.found ? "yes" : "no")
              << " internal_edges=" << result.internal_edges << "\n";
    io::ResultRecord r = base_record(opt, cfg, g.node_count(), g.edge_count(), result.k);
    r.best_score = result.k;
    r.best_valid = result.found;
    r.best_labels = result.labels;
    if (!opt.out_path.empty()) io::write_result(r, opt.out_path);
    return 0;
  }
  if (opt.problem == "mis" || opt.problem == "clique") {
    const auto set = opt.problem == "mis" ? approximate_mis(g, cfg)
                                          : approximate_max_clique(g, cfg);
    std::cout << opt.problem << " n=" << g.node_count() << " size=" << set.size() << " nodes=";
    for (std::size_t i = 0; i < set.size(); ++i) std::cout << (i ? "," : "") << set[i];
    std::cout << "\n";
    io::ResultRecord r = base_record(opt, cfg, g.node_count(), g.edge_count(), 0);
    r.best_score = static_cast<double>(set.size());
    r.best_valid = true;
    r.best_labels.assign(set.begin(), set.end());
    if (!opt.out_path.empty()) io::write_result(r, opt.out_path);
    return 0;
  }

  SolveOutcome outcome;
  int k_used = 2;
  if (opt.problem == "maxcut" || opt.problem == "maxkcut") {
    k_used = opt.problem == "maxcut" ? 2 : opt.k;
    outcome = solve_max_k_cut(g, k_used, cfg);
    std::cout << opt.problem << " n=" << g.node_count() << " m=" << g.edge_count()
              << " k=" << k_used << " best_cut=" << outcome.best.cut_edges
              << " weighted_cut=" << outcome.best.weighted_cut
              << " discreteness=" << outcome.best.discreteness << "\n";
  } else if (opt.problem == "hc") {
    outcome = solve_hamiltonian(g, cfg);
    const char* status = outcome.best.missing_edges == 0   ? "cycle"
                         : outcome.best.missing_edges == 1 ? "path"
                                                           : "neither";
    std::cout << "hc n=" << g.node_count() << " status=" << status
              << " missing_edges=" << outcome.best.missing_edges << "\n";
  } else {  // gp
    outcome = solve_graph_partition(g, cfg);
    std::cout << "gp n=" << g.node_count() << " cut=" << outcome.best.cut_edges
              << " imbalance=" << outcome.best.imbalance << "\n";
  }

  io::ResultRecord r = base_record(opt, cfg, g.node_count(), g.edge_count(), k_used);
  fill_outcome(r, outcome,
               outcome.best.tour.empty() ? outcome.best.labels : outcome.best.tour);
  if (!opt.out_path.empty()) io::write_result(r, opt.out_path);
  if (!opt.trace_path.empty()) {
    const int order = opt.problem == "hc" ? static_cast<int>(g.node_count()) : k_used;
    const auto fi = opt.problem == "hc" ? build_hc_interaction(order, cfg.sigma)
                    : opt.problem == "gp"
                        ? build_max_k_cut_interaction(2, cfg.sigma)
                        : build_max_k_cut_interaction(order, cfg.sigma);
    write_trace(opt, cfg, g, fi, kind, best_trial_seed(outcome));
  }
  return 0;
}

int cmd_oracle(const SolveOptions& opt) {
  if (opt.problem == "tsp") {
    const auto dist = io::load_distance_matrix(opt.instance);
    const auto result = oracle::exact_tsp(dist);
    std::printf("%g\n", result.length);
    return 0;
  }
  const Graph g = io::load_edge_list(opt.instance);
  if (opt.problem == "maxcut" || opt.problem == "maxkcut") {
    const int k = opt.problem == "maxcut" ? 2 : opt.k;
    std::printf("%u\n", oracle::exact_max_k_cut(g, k).cut_edges);
  } else if (opt.problem == "color") {
    std::printf("%d\n", oracle::exact_chromatic(g));
  } else if (opt.problem == "mis") {
    std::printf("%u\n", oracle::exact_mis(g).size);
  } else if (opt.problem == "clique") {
    std::printf("%u\n", oracle::exact_mis(complement(g)).size);
  } else if (opt.problem == "hc") {
    const auto result = oracle::exact_hamiltonian(g);
    std::printf("%s\n", result.kind == oracle::HamiltonianKind::Cycle      ? "cycle"
                        : result.kind == oracle::HamiltonianKind::PathOnly ? "path"
                                                                           : "none");
  } else if (opt.problem == "gp") {
    std::printf("%u\n", oracle::exact_balanced_partition(g).cut_edges);
  } else {
    throw ValidationError("oracle does not support problem: " + opt.problem);
  }
  return 0;
}

int cmd_compare(const SolveOptions& opt) {
  const SolverConfig cfg = build_config(opt);
  double solver_value = 0.0, oracle_value = 0.0;
  bool higher_better = true;

  if (opt.problem == "tsp") {
    const auto dist = io::load_distance_matrix(opt.instance);
    solver_value = solve_tsp(dist, cfg).best.score;
    oracle_value = oracle::exact_tsp(dist).length;
    higher_better = false;
  } else {
    const Graph g = io::load_edge_list(opt.instance);
    if (opt.problem == "maxcut" || opt.problem == "maxkcut") {
      const int k = opt.problem == "maxcut" ? 2 : opt.k;
      solver_value = solve_max_k_cut(g, k, cfg).best.cut_edges;
      oracle_value = oracle::exact_max_k_cut(g, k).cut_edges;
    } else if (opt.problem == "color") {
      solver_value = chromatic_search(g, cfg).k;
      oracle_value = oracle::exact_chromatic(g);
      higher_better = false;
    } else if (opt.problem == "mis") {
      solver_value = static_cast<double>(approximate_mis(g, cfg).size());
      oracle_value = oracle::exact_mis(g).size;
    } else if (opt.problem == "clique") {
      solver_value = static_cast<double>(approximate_max_clique(g, cfg).size());
      oracle_value = oracle::exact_mis(complement(g)).size;
    } else if (opt.problem == "gp") {
      solver_value = solve_graph_partition(g, cfg).best.cut_edges;
      oracle_value = oracle::exact_balanced_partition(g).cut_edges;
      higher_better = false;
    } else if (opt.problem == "hc") {
      const auto outcome = solve_hamiltonian(g, cfg);
      const auto exact = oracle::exact_hamiltonian(g);
      solver_value = outcome.best.missing_edges == 0 ? 1.0 : 0.0;
      oracle_value = exact.kind == oracle::HamiltonianKind::Cycle ? 1.0 : 0.0;
    } else {
      throw ValidationError("compare does not support problem: " + opt.problem);
    }
  }
  const double ratio = oracle_value == 0.0
                           ? (solver_value == 0.0 ? 1.0 : 0.0)
                           : (higher_better ? solver_value / oracle_value
                                            : oracle_value / solver_value);
  std::printf("solver=%g oracle=%g ratio=%.6g\n", solver_value, oracle_value, ratio);
  return 0;
}

struct GenOptions {
  std::string kind;
  std::uint32_t n = 8;
  double p = 0.5;
  std::uint64_t seed = 0;
  std::string out_path;
};

int cmd_gen(const GenOptions& opt) {
  Graph g;
  if (opt.kind == "mobius") {
    g = mobius_ladder(opt.n);
  } else if (opt.kind == "random") {
    g = random_graph(opt.n, opt.p, opt.seed);
  } else {
    throw ValidationError("gen supports: mobius | random");
  }
  const std::string text = io::format_edge_list(g);
  if (opt.out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(opt.out_path, std::ios::binary);
    if (!out) throw ValidationError("cannot open file for writing: " + opt.out_path);
    out << text;
  }
  return 0;
}

}  // namespace

int cli_main(const std::vector<std::string>& args) {
  CLI::App app{"synchronized-oscillator solvers for combinatorial optimization"};
  app.require_subcommand(1);

  SolveOptions solve_opt;
  auto* solve_cmd = app.add_subcommand("solve", "run the oscillator solver on an instance");
  add_instance_args(solve_cmd, solve_opt);
  add_solve_flags(solve_cmd, solve_opt);

  SolveOptions oracle_opt;
  auto* oracle_cmd = app.add_subcommand("oracle", "exact small-instance solver");
  add_instance_args(oracle_cmd, oracle_opt);
  oracle_cmd->add_option("--k", oracle_opt.k, "partition count for maxkcut")
      ->check(CLI::Range(2, 16));

  SolveOptions compare_opt;
  auto* compare_cmd = app.add_subcommand("compare", "run solver and oracle, print the ratio");
  add_instance_args(compare_cmd, compare_opt);
  add_solve_flags(compare_cmd, compare_opt);

  GenOptions gen_opt;
  auto* gen_cmd = app.add_subcommand("gen", "generate a test graph (edge-list format)");
  gen_cmd->add_option("kind", gen_opt.kind, "mobius | random")
      ->required()
      ->check(CLI::IsMember({"mobius", "random"}));
  gen_cmd->add_option("--n", gen_opt.n, "node count")->required();
  gen_cmd->add_option("--p", gen_opt.p, "edge probability (random)");
  gen_cmd->add_option("--seed", gen_opt.seed, "generator seed (random)");
  gen_cmd->add_option("--out", gen_opt.out_path, "output file (default stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitValidation;
  }

  try {
    if (*solve_cmd) return cmd_solve(solve_opt);
    if (*oracle_cmd) return cmd_oracle(oracle_opt);
    if (*compare_cmd) return cmd_compare(compare_opt);
    if (*gen_cmd) return cmd_gen(gen_opt);
  } catch (const BudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return 0;
}

}  // namespace oscopt

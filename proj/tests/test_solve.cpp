#include <doctest.h>

#include <algorithm>

#include "oscopt/errors.hpp"
#include "oscopt/oracle.hpp"
#include "oscopt/solve.hpp"
#include "test_support.hpp"

using namespace oscopt;

namespace {

// Short horizons keep the unit suite fast; the acceptance suite runs the
// full protocol.
SolverConfig quick_config(ProblemKind kind, int restarts = 8) {
  SolverConfig cfg = default_config(kind);
  cfg.schedule.horizon = 30.0;
  cfg.restarts = restarts;
  cfg.threads = 1;
  return cfg;
}

}  // namespace

TEST_CASE("solve_max_k_cut on named instances") {
  const Graph k3(3, {{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 1.0}});
  const auto cfg = quick_config(ProblemKind::MaxKCut);

  CHECK(solve_max_k_cut(k3, 3, cfg).best.cut_edges == 3);
  CHECK(solve_max_k_cut(k3, 2, cfg).best.cut_edges == 2);
  CHECK(solve_max_k_cut(cycle_graph(4), 2, cfg).best.cut_edges == 4);
  CHECK_THROWS_AS(solve_max_k_cut(k3, 1, cfg), ValidationError);
}

TEST_CASE("best-of selection never worsens with more restarts") {
  const Graph g = random_graph(10, 0.5, 33);
  auto cfg = quick_config(ProblemKind::MaxKCut, 2);
  const auto few = solve_max_k_cut(g, 3, cfg);
  cfg.restarts = 10;
  const auto many = solve_max_k_cut(g, 3, cfg);
  CHECK(many.best.score >= few.best.score);
  CHECK(many.trials.size() == 10);
  // The first two trials repeat exactly (same seeds).
  CHECK(many.trials[0].score == few.trials[0].score);
  CHECK(many.trials[1].score == few.trials[1].score);
}

TEST_CASE("chromatic_search finds chromatic numbers of small graphs") {
  const auto cfg = quick_config(ProblemKind::MaxKCut);
  const Graph k3(3, {{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 1.0}});

  const auto r1 = chromatic_search(k3, cfg);
  CHECK(r1.found);
  CHECK(r1.k == 3);

  const auto r2 = chromatic_search(cycle_graph(5), cfg);
  CHECK(r2.found);
  CHECK(r2.k == 3);

  // Proper coloring soundness: no monochromatic edge.
  const Graph g = random_graph(10, 0.4, 3);
  const auto r3 = chromatic_search(g, cfg);
  if (r3.found) {
    for (const auto& e : g.edges()) CHECK(r3.labels[e.u] != r3.labels[e.v]);
  }

  const auto edgeless = chromatic_search(Graph(4, {}), cfg);
  CHECK(edgeless.found);
  CHECK(edgeless.k == 1);
}

TEST_CASE("approximate_mis basics") {
  const auto cfg = quick_config(ProblemKind::MaxKCut);
  CHECK(approximate_mis(Graph(5, {}), cfg).size() == 5);

  const Graph k3(3, {{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 1.0}});
  CHECK(approximate_mis(k3, cfg).size() == 1);

  const auto c5 = approximate_mis(cycle_graph(5), cfg);
  CHECK(c5.size() == 2);

  // Independence soundness on a random graph.
  const Graph g = random_graph(12, 0.5, 4);
  const auto set = approximate_mis(g, cfg);
  for (std::size_t i = 0; i + 1 < set.size(); ++i) {
    for (std::size_t j = i + 1; j < set.size(); ++j) CHECK(!g.has_edge(set[i], set[j]));
  }
}

TEST_CASE("approximate_max_clique basics") {
  const auto cfg = quick_config(ProblemKind::MaxKCut);
  CHECK(approximate_max_clique(complete_graph(4), cfg).size() == 4);
  CHECK(approximate_max_clique(Graph(4, {}), cfg).size() == 1);
  CHECK(approximate_max_clique(cycle_graph(5), cfg).size() == 2);
}

TEST_CASE("solve_tsp on tiny instances") {
  auto cfg = quick_config(ProblemKind::Tsp);
  cfg.schedule.a = 3.0;

  const std::vector<std::vector<double>> tri{{0, 1, 2}, {1, 0, 3}, {2, 3, 0}};
  const auto r = solve_tsp(tri, cfg);
  CHECK(r.best.valid);
  CHECK(r.best.score == doctest::Approx(6.0));

  const std::vector<std::vector<double>> square{
      {0, 1, std::sqrt(2.0), 1}, {1, 0, 1, std::sqrt(2.0)}, {std::sqrt(2.0), 1, 0, 1},
      {1, std::sqrt(2.0), 1, 0}};
  const auto rs = solve_tsp(square, cfg);
  if (rs.best.valid) CHECK(rs.best.score >= 4.0 - 1e-9);  // never below the optimum

  const std::vector<std::vector<double>> bad{{0, 1}, {1, 0}};
  CHECK_THROWS_AS(solve_tsp(bad, cfg), ValidationError);  // N < 3

  const std::vector<std::vector<double>> asym{{0, 1, 1}, {2, 0, 1}, {1, 1, 0}};
  CHECK_THROWS_AS(solve_tsp(asym, cfg), ValidationError);
}

TEST_CASE("solve_hamiltonian finds the planted cycle") {
  auto cfg = quick_config(ProblemKind::HamiltonianCycle, 12);
  const auto r = solve_hamiltonian(cycle_graph(6), cfg);
  CHECK(r.best.missing_edges == 0);

  std::vector<Edge> star_edges;
  for (std::uint32_t leaf = 1; leaf < 5; ++leaf) star_edges.push_back({0, leaf, 1.0});
  const auto rs = solve_hamiltonian(Graph(5, star_edges), cfg);
  CHECK(rs.best.missing_edges >= 2);  // stars have no Hamiltonian path for n >= 4
}

TEST_CASE("solve_graph_partition on named instances") {
  const auto cfg = quick_config(ProblemKind::GraphPartition);

  const Graph two_triangles(6, {{0, 1, 1.0},
                                {1, 2, 1.0},
                                {0, 2, 1.0},
                                {3, 4, 1.0},
                                {4, 5, 1.0},
                                {3, 5, 1.0}});
  const auto r = solve_graph_partition(two_triangles, cfg);
  CHECK(r.best.imbalance == 0);
  CHECK(r.best.cut_edges == 0);

  const auto rc4 = solve_graph_partition(cycle_graph(4), cfg);
  CHECK(rc4.best.imbalance == 0);
  CHECK(rc4.best.cut_edges == 2);

  CHECK_THROWS_AS(solve_graph_partition(cycle_graph(5), cfg), ValidationError);
}

TEST_CASE("validity precedence: a valid tour outranks any invalid decode") {
  // Degenerate geometry makes some trials collide; whenever a valid trial
  // exists it must win.
  auto cfg = quick_config(ProblemKind::Tsp, 10);
  const auto d = testsupport::random_metric(6, 12);
  const auto outcome = solve_tsp(d, cfg);
  const bool any_valid =
      std::any_of(outcome.trials.begin(), outcome.trials.end(),
                  [](const TrialSummary& t) { return t.valid; });
  CHECK(outcome.best.valid == any_valid);
}

#include <doctest.h>

#include <random>

#include "oscopt/errors.hpp"
#include "oscopt/graph.hpp"
#include "oscopt/oracle.hpp"

using namespace oscopt;

namespace {

Graph petersen() {
  // Outer 5-cycle, inner pentagram, spokes.
  std::vector<Edge> edges;
  for (std::uint32_t i = 0; i < 5; ++i) {
    edges.push_back({i, (i + 1) % 5, 1.0});
    edges.push_back({i + 5, ((i + 2) % 5) + 5, 1.0});
    edges.push_back({i, i + 5, 1.0});
  }
  return Graph(10, edges);
}

std::vector<std::vector<double>> random_metric(std::size_t n, std::uint64_t seed) {
  // Random points in the unit square with Euclidean distances.
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::vector<std::pair<double, double>> pts(n);
  for (auto& p : pts) p = {unif(rng), unif(rng)};
  std::vector<std::vector<double>> d(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      d[i][j] = std::hypot(pts[i].first - pts[j].first, pts[i].second - pts[j].second);
    }
  }
  return d;
}

}  // namespace

TEST_CASE("exact_max_k_cut on small graphs") {
  const Graph k3(3, {{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 1.0}});
  CHECK(oracle::exact_max_k_cut(k3, 2).cut_edges == 2);
  CHECK(oracle::exact_max_k_cut(k3, 3).cut_edges == 3);
  CHECK(oracle::exact_max_k_cut(cycle_graph(5), 2).cut_edges == 4);

  CHECK_THROWS_AS(oracle::exact_max_k_cut(random_graph(20, 0.5, 1), 2), BudgetError);
}

TEST_CASE("Held-Karp basics") {
  const std::vector<std::vector<double>> tri{{0, 1, 2}, {1, 0, 3}, {2, 3, 0}};
  CHECK(oracle::exact_tsp(tri).length == doctest::Approx(6.0));

  const std::vector<std::vector<double>> square{
      {0, 1, std::sqrt(2.0), 1}, {1, 0, 1, std::sqrt(2.0)}, {std::sqrt(2.0), 1, 0, 1},
      {1, std::sqrt(2.0), 1, 0}};
  CHECK(oracle::exact_tsp(square).length == doctest::Approx(4.0));

  CHECK_THROWS_AS(oracle::exact_tsp(random_metric(16, 1)), BudgetError);
}

TEST_CASE("Held-Karp equals brute force on 100 random instances") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const std::size_t n = 4 + seed % 5;  // 4..8
    const auto d = random_metric(n, seed);
    const auto hk = oracle::exact_tsp(d);
    const auto bf = oracle::exact_tsp_brute_force(d);
    CHECK(hk.length == doctest::Approx(bf.length).epsilon(1e-12));
    // The tour the DP reports must realize the reported length.
    double len = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      len += d[hk.tour[i]][hk.tour[(i + 1) % n]];
    }
    CHECK(len == doctest::Approx(hk.length).epsilon(1e-12));
  }
}

TEST_CASE("exact_hamiltonian") {
  CHECK(oracle::exact_hamiltonian(cycle_graph(6)).kind == oracle::HamiltonianKind::Cycle);

  std::vector<Edge> star_edges;
  for (std::uint32_t leaf = 1; leaf < 5; ++leaf) star_edges.push_back({0, leaf, 1.0});
  CHECK(oracle::exact_hamiltonian(Graph(5, star_edges)).kind == oracle::HamiltonianKind::None);

  // Petersen famously has a Hamiltonian path but no cycle; the oracle
  // verifies this rather than assuming it.
  const auto p = oracle::exact_hamiltonian(petersen());
  CHECK(p.kind == oracle::HamiltonianKind::PathOnly);

  const Graph path3(3, {{0, 1, 1.0}, {1, 2, 1.0}});
  CHECK(oracle::exact_hamiltonian(path3).kind == oracle::HamiltonianKind::PathOnly);
}

TEST_CASE("exact_balanced_partition") {
  CHECK(oracle::exact_balanced_partition(cycle_graph(4)).cut_edges == 2);

  const Graph two_triangles(6, {{0, 1, 1.0},
                                {1, 2, 1.0},
                                {0, 2, 1.0},
                                {3, 4, 1.0},
                                {4, 5, 1.0},
                                {3, 5, 1.0}});
  CHECK(oracle::exact_balanced_partition(two_triangles).cut_edges == 0);

  CHECK(oracle::exact_balanced_partition(complete_graph(4)).cut_edges == 4);
  CHECK_THROWS_AS(oracle::exact_balanced_partition(cycle_graph(5)), ValidationError);

  const auto result = oracle::exact_balanced_partition(cycle_graph(8));
  int ones = 0;
  for (int l : result.labels) ones += l;
  CHECK(ones == 4);
}

TEST_CASE("exact_mis and exact_chromatic") {
  const Graph k3(3, {{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 1.0}});
  CHECK(oracle::exact_mis(k3).size == 1);
  CHECK(oracle::exact_chromatic(k3) == 3);

  CHECK(oracle::exact_mis(cycle_graph(5)).size == 2);
  CHECK(oracle::exact_chromatic(cycle_graph(5)) == 3);

  CHECK(oracle::exact_mis(petersen()).size == 4);
  CHECK(oracle::exact_chromatic(petersen()) == 3);

  CHECK(oracle::exact_mis(Graph(4, {})).size == 4);
  CHECK(oracle::exact_chromatic(Graph(4, {})) == 1);

  // MIS witness really is independent.
  const auto mis = oracle::exact_mis(random_graph(12, 0.4, 5));
  const Graph g = random_graph(12, 0.4, 5);
  for (std::size_t i = 0; i + 1 < mis.nodes.size(); ++i) {
    for (std::size_t j = i + 1; j < mis.nodes.size(); ++j) {
      CHECK(!g.has_edge(mis.nodes[i], mis.nodes[j]));
    }
  }
}

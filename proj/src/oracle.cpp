#include "oscopt/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "oscopt/errors.hpp"

// Oracles deliberately count/score with their own loops instead of calling
// the decode/energy layers, so agreement between solver and oracle is
// evidence rather than tautology.

namespace oscopt::oracle {

namespace {

std::uint64_t ipow(std::uint64_t base, std::uint32_t exp) {
  std::uint64_t r = 1;
  while (exp--) {
    if (r > std::numeric_limits<std::uint64_t>::max() / base) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    r *= base;
  }
  return r;
}

}  // namespace

CutResult exact_max_k_cut(const Graph& g, int k, const Budget& budget) {
  const std::uint32_t n = g.node_count();
  if (k < 2) throw ValidationError("exact_max_k_cut requires K >= 2");
  if (n > budget.max_n_cut) {
    throw BudgetError("exact_max_k_cut: n = " + std::to_string(n) + " exceeds budget " +
                      std::to_string(budget.max_n_cut));
  }
  const std::uint64_t combos = n == 0 ? 1 : ipow(static_cast<std::uint64_t>(k), n - 1);
  if (combos > budget.max_enumerations) {
    throw BudgetError("exact_max_k_cut: K^(n-1) exceeds enumeration budget");
  }

  std::vector<int> labels(n, 0), best(n, 0);
  std::uint32_t best_cut = 0;
  bool first = true;
  const auto& edges = g.edges();
  for (std::uint64_t code = 0; code < combos; ++code) {
    std::uint64_t c = code;
    for (std::uint32_t i = 1; i < n; ++i) {  // label(0) fixed to 0
      labels[i] = static_cast<int>(c % k);
      c /= k;
    }
    std::uint32_t cut = 0;
    for (const auto& e : edges) cut += labels[e.u] != labels[e.v];
    if (first || cut > best_cut) {
      best_cut = cut;
      best = labels;
      first = false;
    }
  }
  return {best_cut, best};
}

TspResult exact_tsp(const std::vector<std::vector<double>>& dist, const Budget& budget) {
  const std::size_t n = dist.size();
  if (n < 3) throw ValidationError("exact_tsp requires at least 3 cities");
  if (n > budget.max_n_tsp) {
    throw BudgetError("exact_tsp: n = " + std::to_string(n) + " exceeds budget " +
                      std::to_string(budget.max_n_tsp));
  }
  for (const auto& row : dist) {
    if (row.size() != n) throw ValidationError("exact_tsp: distance matrix is not square");
  }

  // Held-Karp: dp[mask][j] = shortest path from city 0 through mask ending at j.
  const std::size_t full = std::size_t{1} << (n - 1);  // masks over cities 1..n-1
  constexpr double inf = std::numeric_limits<double>::infinity();
  std::vector<std::vector<double>> dp(full, std::vector<double>(n - 1, inf));
  std::vector<std::vector<int>> parent(full, std::vector<int>(n - 1, -1));
  for (std::size_t j = 0; j < n - 1; ++j) dp[std::size_t{1} << j][j] = dist[0][j + 1];
  for (std::size_t mask = 1; mask < full; ++mask) {
    for (std::size_t j = 0; j < n - 1; ++j) {
      if (!(mask & (std::size_t{1} << j)) || dp[mask][j] == inf) continue;
      for (std::size_t t = 0; t < n - 1; ++t) {
        if (mask & (std::size_t{1} << t)) continue;
        const std::size_t next = mask | (std::size_t{1} << t);
        const double cand = dp[mask][j] + dist[j + 1][t + 1];
        if (cand < dp[next][t]) {
          dp[next][t] = cand;
          parent[next][t] = static_cast<int>(j);
        }
      }
    }
  }
  double best = inf;
  int best_end = -1;
  for (std::size_t j = 0; j < n - 1; ++j) {
    const double cand = dp[full - 1][j] + dist[j + 1][0];
    if (cand < best) {
      best = cand;
      best_end = static_cast<int>(j);
    }
  }
  std::vector<int> tour;
  std::size_t mask = full - 1;
  int j = best_end;
  while (j != -1) {
    tour.push_back(j + 1);
    const int pj = parent[mask][j];
    mask &= ~(std::size_t{1} << j);
    j = pj;
  }
  tour.push_back(0);
  std::reverse(tour.begin(), tour.end());
  return {best, tour};
}

TspResult exact_tsp_brute_force(const std::vector<std::vector<double>>& dist) {
  const std::size_t n = dist.size();
  if (n < 3 || n > 9) throw BudgetError("exact_tsp_brute_force supports 3 <= n <= 9");
  std::vector<int> perm(n - 1);
  std::iota(perm.begin(), perm.end(), 1);
  double best = std::numeric_limits<double>::infinity();
  std::vector<int> best_tour;
  do {
    double len = dist[0][perm.front()];
    for (std::size_t i = 0; i + 1 < perm.size(); ++i) len += dist[perm[i]][perm[i + 1]];
    len += dist[perm.back()][0];
    if (len < best) {
      best = len;
      best_tour.assign(1, 0);
      best_tour.insert(best_tour.end(), perm.begin(), perm.end());
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return {best, best_tour};
}

namespace {

struct HamiltonianSearch {
  const std::vector<std::vector<std::uint32_t>>& adj;
  std::uint32_t n;
  bool want_cycle;
  std::vector<char> used;
  std::vector<int> path;
  std::uint64_t steps = 0;
  std::uint64_t step_cap;

  bool extend() {
    if (++steps > step_cap) throw BudgetError("exact_hamiltonian: search budget exhausted");
    if (path.size() == n) {
      if (!want_cycle) return true;
      const auto& back_adj = adj[path.back()];
      return std::find(back_adj.begin(), back_adj.end(),
                       static_cast<std::uint32_t>(path.front())) != back_adj.end();
    }
    for (std::uint32_t next : adj[path.back()]) {
      if (used[next]) continue;
      used[next] = 1;
      path.push_back(static_cast<int>(next));
      if (extend()) return true;
      path.pop_back();
      used[next] = 0;
    }
    return false;
  }
};

bool find_hamiltonian(const Graph& g, bool want_cycle, std::uint64_t step_cap,
                      std::vector<int>& out) {
  const std::uint32_t n = g.node_count();
  auto adj = g.adjacency();
  auto deg = g.degrees();
  const std::uint32_t min_deg = n ? *std::min_element(deg.begin(), deg.end()) : 0;
  if (want_cycle && n >= 3 && min_deg < 2) return false;
  if (!want_cycle && n >= 2 && min_deg < 1) return false;

  // A cycle must pass through node 0; a path may start anywhere.
  std::vector<std::uint32_t> starts;
  if (want_cycle) {
    starts.push_back(0);
  } else {
    starts.resize(n);
    std::iota(starts.begin(), starts.end(), 0);
  }
  for (std::uint32_t s : starts) {
    HamiltonianSearch search{adj, n, want_cycle, std::vector<char>(n, 0), {}, 0, step_cap};
    search.used[s] = 1;
    search.path.push_back(static_cast<int>(s));
    if (search.extend()) {
      out = search.path;
      return true;
    }
  }
  return false;
}

}  // namespace

HamiltonianResult exact_hamiltonian(const Graph& g, const Budget& budget) {
  const std::uint32_t n = g.node_count();
  if (n > budget.max_n_hamiltonian) {
    throw BudgetError("exact_hamiltonian: n = " + std::to_string(n) + " exceeds budget " +
                      std::to_string(budget.max_n_hamiltonian));
  }
  if (n == 0) return {HamiltonianKind::None, {}};
  if (n == 1) return {HamiltonianKind::PathOnly, {0}};
  std::vector<int> witness;
  if (n >= 3 && find_hamiltonian(g, /*want_cycle=*/true, budget.max_enumerations, witness)) {
    return {HamiltonianKind::Cycle, witness};
  }
  if (find_hamiltonian(g, /*want_cycle=*/false, budget.max_enumerations, witness)) {
    return {HamiltonianKind::PathOnly, witness};
  }
  return {HamiltonianKind::None, {}};
}

PartitionResult exact_balanced_partition(const Graph& g, const Budget& budget) {
  const std::uint32_t n = g.node_count();
  if (n == 0 || n % 2 != 0) throw ValidationError("exact_balanced_partition requires even n > 0");
  if (n > budget.max_n_partition) {
    throw BudgetError("exact_balanced_partition: n = " + std::to_string(n) + " exceeds budget " +
                      std::to_string(budget.max_n_partition));
  }
  const auto& edges = g.edges();
  std::uint32_t best_cut = std::numeric_limits<std::uint32_t>::max();
  std::uint32_t best_mask_bits = 0;
  // Node 0 stays in side 0; choose n/2 - 1 companions among the rest.
  const std::uint32_t half = n / 2;
  for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
    if (static_cast<std::uint32_t>(std::popcount(mask)) != half - 1) continue;
    const std::uint32_t side0 = (mask << 1) | 1u;
    std::uint32_t cut = 0;
    for (const auto& e : edges) {
      const bool a = side0 >> e.u & 1u, b = side0 >> e.v & 1u;
      cut += a != b;
    }
    if (cut < best_cut) {
      best_cut = cut;
      best_mask_bits = side0;
    }
  }
  std::vector<int> labels(n);
  for (std::uint32_t i = 0; i < n; ++i) labels[i] = (best_mask_bits >> i & 1u) ? 0 : 1;
  return {best_cut, labels};
}

namespace {

struct MisSearch {
  const std::vector<std::vector<std::uint32_t>>& adj;
  std::vector<std::uint32_t> best;

  void branch(std::vector<std::uint32_t>& candidates, std::vector<std::uint32_t>& chosen) {
    if (chosen.size() + candidates.size() <= best.size()) return;
    if (candidates.empty()) {
      best = chosen;
      return;
    }
    const std::uint32_t v = candidates.back();
    candidates.pop_back();

    // Include v.
    std::vector<std::uint32_t> reduced;
    reduced.reserve(candidates.size());
    for (std::uint32_t c : candidates) {
      if (std::find(adj[v].begin(), adj[v].end(), c) == adj[v].end()) reduced.push_back(c);
    }
    chosen.push_back(v);
    branch(reduced, chosen);
    chosen.pop_back();

    // Exclude v.
    branch(candidates, chosen);
    candidates.push_back(v);
  }
};

}  // namespace

MisResult exact_mis(const Graph& g, const Budget& budget) {
  const std::uint32_t n = g.node_count();
  if (n > budget.max_n_mis) {
    throw BudgetError("exact_mis: n = " + std::to_string(n) + " exceeds budget " +
                      std::to_string(budget.max_n_mis));
  }
  auto adj = g.adjacency();
  MisSearch search{adj, {}};
  std::vector<std::uint32_t> candidates(n);
  std::iota(candidates.begin(), candidates.end(), 0);
  std::vector<std::uint32_t> chosen;
  search.branch(candidates, chosen);
  std::sort(search.best.begin(), search.best.end());
  return {static_cast<std::uint32_t>(search.best.size()), search.best};
}

namespace {

bool k_colorable(const std::vector<std::vector<std::uint32_t>>& adj, std::uint32_t n, int k,
                 std::vector<int>& colors, std::uint32_t idx) {
  if (idx == n) return true;
  // Symmetry break: node idx may only open one fresh color.
  int max_used = -1;
  for (std::uint32_t i = 0; i < idx; ++i) max_used = std::max(max_used, colors[i]);
  const int limit = std::min(k - 1, max_used + 1);
  for (int c = 0; c <= limit; ++c) {
    bool ok = true;
    for (std::uint32_t nb : adj[idx]) {
      if (nb < idx && colors[nb] == c) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    colors[idx] = c;
    if (k_colorable(adj, n, k, colors, idx + 1)) return true;
  }
  colors[idx] = -1;
  return false;
}

}  // namespace

int exact_chromatic(const Graph& g, const Budget& budget) {
  const std::uint32_t n = g.node_count();
  if (n > budget.max_n_chromatic) {
    throw BudgetError("exact_chromatic: n = " + std::to_string(n) + " exceeds budget " +
                      std::to_string(budget.max_n_chromatic));
  }
  if (n == 0) return 0;
  if (g.edge_count() == 0) return 1;
  auto adj = g.adjacency();
  for (int k = 2; k <= static_cast<int>(n); ++k) {
    std::vector<int> colors(n, -1);
    if (k_colorable(adj, n, k, colors, 0)) return k;
  }
  return static_cast<int>(n);
}

}  // namespace oscopt::oracle

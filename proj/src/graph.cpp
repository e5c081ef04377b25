#include "oscopt/graph.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <utility>

#include "oscopt/errors.hpp"

namespace oscopt {

namespace {

std::string edge_str(std::uint32_t u, std::uint32_t v) {
  return "(" + std::to_string(u) + ", " + std::to_string(v) + ")";
}

}  // namespace

Graph::Graph(std::uint32_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  for (auto& e : edges_) {
    if (e.u == e.v) {
      throw ValidationError("self-loop at edge " + edge_str(e.u, e.v));
    }
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.v >= n_) {
      throw ValidationError("node index out of range at edge " + edge_str(e.u, e.v) +
                            " (n = " + std::to_string(n_) + ")");
    }
    if (!(e.w > 0.0)) {
      throw ValidationError("non-positive weight at edge " + edge_str(e.u, e.v));
    }
  }
  std::sort(edges_.begin(), edges_.end(),
            [](const Edge& a, const Edge& b) { return std::pair{a.u, a.v} < std::pair{b.u, b.v}; });
  for (std::size_t i = 1; i < edges_.size(); ++i) {
    if (edges_[i - 1].u == edges_[i].u && edges_[i - 1].v == edges_[i].v) {
      throw ValidationError("duplicate edge " + edge_str(edges_[i].u, edges_[i].v));
    }
  }
}

bool Graph::has_edge(std::uint32_t u, std::uint32_t v) const {
  if (u > v) std::swap(u, v);
  Edge probe{u, v, 1.0};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), probe, [](const Edge& a, const Edge& b) {
    return std::pair{a.u, a.v} < std::pair{b.u, b.v};
  });
  return it != edges_.end() && it->u == u && it->v == v;
}

std::vector<std::uint32_t> Graph::degrees() const {
  std::vector<std::uint32_t> deg(n_, 0);
  for (const auto& e : edges_) {
    ++deg[e.u];
    ++deg[e.v];
  }
  return deg;
}

std::uint32_t Graph::max_degree() const {
  auto deg = degrees();
  return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

bool Graph::is_unweighted() const {
  return std::all_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.w == 1.0; });
}

double Graph::total_weight() const {
  double s = 0.0;
  for (const auto& e : edges_) s += e.w;
  return s;
}

std::vector<std::vector<std::uint32_t>> Graph::adjacency() const {
  std::vector<std::vector<std::uint32_t>> adj(n_);
  for (const auto& e : edges_) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  return adj;
}

Graph complement(const Graph& g) {
  if (!g.is_unweighted()) {
    throw ValidationError("complement is defined for unweighted graphs only");
  }
  std::vector<Edge> edges;
  const std::uint32_t n = g.node_count();
  for (std::uint32_t u = 0; u + 1 < n; ++u) {
    for (std::uint32_t v = u + 1; v < n; ++v) {
      if (!g.has_edge(u, v)) edges.push_back({u, v, 1.0});
    }
  }
  return Graph(n, std::move(edges));
}

Graph mobius_ladder(std::uint32_t n) {
  if (n < 6 || n % 2 != 0) {
    throw ValidationError("mobius ladder requires even n >= 6, got " + std::to_string(n));
  }
  std::vector<Edge> edges;
  edges.reserve(3 * n / 2);
  for (std::uint32_t i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n, 1.0});
  for (std::uint32_t i = 0; i < n / 2; ++i) edges.push_back({i, i + n / 2, 1.0});
  return Graph(n, std::move(edges));
}

Graph random_graph(std::uint32_t n, double p, std::uint64_t seed) {
  if (p < 0.0 || p > 1.0) {
    throw ValidationError("edge probability must lie in [0, 1]");
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::vector<Edge> edges;
  for (std::uint32_t u = 0; u + 1 < n; ++u) {
    for (std::uint32_t v = u + 1; v < n; ++v) {
      if (unif(rng) < p) edges.push_back({u, v, 1.0});
    }
  }
  return Graph(n, std::move(edges));
}

Graph complete_graph(std::uint32_t n) {
  std::vector<Edge> edges;
  for (std::uint32_t u = 0; u + 1 < n; ++u) {
    for (std::uint32_t v = u + 1; v < n; ++v) edges.push_back({u, v, 1.0});
  }
  return Graph(n, std::move(edges));
}

Graph cycle_graph(std::uint32_t n) {
  std::vector<Edge> edges;
  for (std::uint32_t i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n, 1.0});
  return Graph(n, std::move(edges));
}

}  // namespace oscopt

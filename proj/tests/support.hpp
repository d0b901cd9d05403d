#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "twoclub/graph.hpp"
#include "twoclub/instance.hpp"

namespace twoclub::testing {

inline Graph make_graph(std::size_t n,
                        std::initializer_list<std::pair<VertexId, VertexId>> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

inline Graph path_graph(std::size_t n) {
  Graph g(n);
  for (VertexId i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

inline Graph cycle_graph(std::size_t n) {
  Graph g = path_graph(n);
  g.add_edge(static_cast<VertexId>(n - 1), 0);
  return g;
}

inline Graph complete_graph(std::size_t n) {
  Graph g(n);
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

inline Graph star_graph(std::size_t leaves) {
  Graph g(leaves + 1);
  for (VertexId v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

/// Disjoint union; ids of `b` are shifted by a.id_bound().
inline Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph g(a.id_bound() + b.id_bound());
  const auto shift = static_cast<VertexId>(a.id_bound());
  for (VertexId u : a.vertices())
    for (VertexId v : a.neighbors(u))
      if (u < v) g.add_edge(u, v);
  for (VertexId u : b.vertices())
    for (VertexId v : b.neighbors(u))
      if (u < v) g.add_edge(u + shift, v + shift);
  return g;
}

/// Seeded random graph with its own edge coin so tests do not depend on gen.
inline Graph random_graph(std::mt19937_64& rng, std::size_t min_n, std::size_t max_n) {
  static constexpr double kP[] = {0.2, 0.35, 0.5, 0.65, 0.8};
  const std::size_t n = min_n + rng() % (max_n - min_n + 1);
  const double p = kP[rng() % 5];
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

/// Random weighted instance with a random permanent set.
inline Instance random_instance(std::mt19937_64& rng, std::size_t min_n,
                                std::size_t max_n, Weight max_w,
                                double permanent_p) {
  Graph g = random_graph(rng, min_n, max_n);
  std::vector<Weight> w(g.id_bound());
  std::vector<VertexId> f;
  std::bernoulli_distribution perm(permanent_p);
  for (VertexId v = 0; v < g.id_bound(); ++v) {
    w[v] = 1 + static_cast<Weight>(rng() % static_cast<std::uint64_t>(max_w));
    if (perm(rng)) f.push_back(v);
  }
  return Instance(std::move(g), std::move(w), f);
}

/// All-pairs distances by Floyd-Warshall; 255 for unreachable.
inline std::vector<std::vector<int>> floyd(const Graph& g) {
  const std::size_t n = g.id_bound();
  constexpr int kInf = 255;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, kInf));
  for (VertexId u : g.vertices()) {
    d[u][u] = 0;
    for (VertexId v : g.neighbors(u)) d[u][v] = 1;
  }
  for (VertexId m : g.vertices())
    for (VertexId a : g.vertices())
      for (VertexId b : g.vertices())
        if (d[a][m] + d[m][b] < d[a][b]) d[a][b] = d[a][m] + d[m][b];
  return d;
}

}  // namespace twoclub::testing

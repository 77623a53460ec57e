#ifndef REDIC_TEST_SUPPORT_HPP
#define REDIC_TEST_SUPPORT_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "redic/detection.hpp"
#include "redic/graph.hpp"
#include "redic/graph_io.hpp"

namespace redic::fixtures {

using Rng = std::mt19937_64;

inline Graph random_graph(std::size_t n, double p, Rng& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

/// Random spanning tree plus independent extra edges.
inline Graph random_connected(std::size_t n, double p, Rng& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(std::uniform_int_distribution<Vertex>(0, v - 1)(rng), v);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

/// Uniform labelled tree from a random Pruefer sequence.
inline Graph random_tree(std::size_t n, Rng& rng) {
  if (n <= 2) return n == 2 ? Graph::from_edges(2, {{0, 1}}) : Graph::from_edges(n, {});
  std::uniform_int_distribution<Vertex> pick(0, n - 1);
  std::vector<Vertex> code(n - 2);
  for (auto& c : code) c = pick(rng);
  std::vector<std::size_t> deg(n, 1);
  for (auto c : code) ++deg[c];
  std::vector<Edge> edges;
  for (auto c : code) {
    Vertex leaf = 0;
    while (deg[leaf] != 1) ++leaf;
    edges.emplace_back(leaf, c);
    --deg[leaf];
    --deg[c];
  }
  Vertex a = n, b = n;
  for (Vertex v = 0; v < n; ++v)
    if (deg[v] == 1) (a == n ? a : b) = v;
  edges.emplace_back(a, b);
  return Graph::from_edges(n, edges);
}

/// Connected triangle-free graph: a random tree plus random edges that close
/// no triangle.
inline Graph random_triangle_free(std::size_t n, double p, Rng& rng) {
  Graph t = random_tree(n, rng);
  auto edges = t.edges();
  std::vector<VertexSet> adj(n);
  for (auto [u, v] : edges) {
    adj[u].insert(v);
    adj[v].insert(u);
  }
  std::bernoulli_distribution coin(p);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!adj[u].contains(v) && !adj[u].intersects(adj[v]) && coin(rng)) {
        edges.emplace_back(u, v);
        adj[u].insert(v);
        adj[v].insert(u);
      }
  return Graph::from_edges(n, edges);
}

inline VertexSet random_subset(std::size_t n, double p, Rng& rng) {
  std::bernoulli_distribution coin(p);
  VertexSet s;
  for (Vertex v = 0; v < n; ++v)
    if (coin(rng)) s.insert(v);
  return s;
}

inline VertexSet mask_to_set(std::uint64_t mask) {
  VertexSet s;
  for (Vertex v = 0; mask; ++v, mask >>= 1)
    if (mask & 1U) s.insert(v);
  return s;
}

/// Exhaustive minimum over all subsets; empty when no code exists.
inline std::optional<std::size_t> brute_force_min(const Graph& g, CodeKind kind) {
  const std::size_t n = g.order();
  std::optional<std::size_t> best;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    const auto size = static_cast<std::size_t>(std::popcount(mask));
    if (best && size >= *best) continue;
    if (verify_all_pairs(g, mask_to_set(mask), kind)) continue;
    best = size;
  }
  return best;
}

/// Every minimum-size code, by exhaustive search.
inline std::vector<VertexSet> all_minimum_codes(const Graph& g, CodeKind kind) {
  auto best = brute_force_min(g, kind);
  std::vector<VertexSet> out;
  if (!best) return out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.order()); ++mask)
    if (static_cast<std::size_t>(std::popcount(mask)) == *best && !verify_all_pairs(g, mask_to_set(mask), kind))
      out.push_back(mask_to_set(mask));
  return out;
}

/// Canonical key by trying all n! relabellings.
inline std::vector<std::uint64_t> brute_force_canonical(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<Vertex> perm(n);
  for (Vertex v = 0; v < n; ++v) perm[v] = v;
  std::vector<std::uint64_t> best;
  do {
    std::vector<std::uint64_t> rows(n, 0);
    for (auto [u, v] : g.edges()) {
      rows[perm[u]] |= std::uint64_t{1} << perm[v];
      rows[perm[v]] |= std::uint64_t{1} << perm[u];
    }
    if (best.empty() || rows < best) best = rows;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace redic::fixtures

#endif  // REDIC_TEST_SUPPORT_HPP

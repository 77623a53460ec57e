#ifndef REDIC_BUILDERS_HPP
#define REDIC_BUILDERS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "redic/graph.hpp"

namespace redic {

namespace detail {
inline void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}
inline Graph tagged(Graph g, std::string family, std::vector<std::size_t> params) {
  return g.with_tag(BuildTag{std::move(family), std::move(params)});
}
}  // namespace detail

inline Graph path_graph(std::size_t n) {
  detail::require(n >= 1, "path needs n >= 1");
  std::vector<Edge> e;
  for (Vertex i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return detail::tagged(Graph::from_edges(n, e), "path", {n});
}

inline Graph cycle_graph(std::size_t n) {
  detail::require(n >= 3, "cycle needs n >= 3");
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return detail::tagged(Graph::from_edges(n, e), "cycle", {n});
}

/// K_{1,k}: center 0, leaves 1..k.
inline Graph star_graph(std::size_t k) {
  detail::require(k >= 1, "star needs k >= 1");
  std::vector<Edge> e;
  for (Vertex i = 1; i <= k; ++i) e.emplace_back(0, i);
  return detail::tagged(Graph::from_edges(k + 1, e), "star", {k});
}

inline Graph complete_graph(std::size_t n) {
  detail::require(n >= 1, "complete graph needs n >= 1");
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return detail::tagged(Graph::from_edges(n, e), "complete", {n});
}

/// Parts are consecutive index blocks of the given sizes.
inline Graph complete_multipartite(const std::vector<std::size_t>& parts) {
  detail::require(!parts.empty(), "complete multipartite needs at least one part");
  std::vector<std::size_t> part_of;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    detail::require(parts[p] >= 1, "complete multipartite parts must be nonempty");
    part_of.insert(part_of.end(), parts[p], p);
  }
  std::vector<Edge> e;
  for (Vertex i = 0; i < part_of.size(); ++i)
    for (Vertex j = i + 1; j < part_of.size(); ++j)
      if (part_of[i] != part_of[j]) e.emplace_back(i, j);
  return detail::tagged(Graph::from_edges(part_of.size(), e), "complete_multipartite", parts);
}

/// Q_d = P_2 box ... box P_2; vertex bits are coordinates.
inline Graph hypercube(std::size_t d) {
  detail::require(d >= 1, "hypercube needs d >= 1");
  Graph g = path_graph(2);
  for (std::size_t i = 1; i < d; ++i) g = cartesian_product(g, path_graph(2));
  return detail::tagged(g, "hypercube", {d});
}

/// P_2 box P_j: vertex (r, c) at r * j + c.
inline Graph ladder_graph(std::size_t j) {
  detail::require(j >= 2, "ladder needs j >= 2");
  return detail::tagged(cartesian_product(path_graph(2), path_graph(j)), "ladder", {j});
}

/// P_2 box C_j.
inline Graph cylinder_graph(std::size_t j) {
  detail::require(j >= 3, "cylinder needs j >= 3");
  return detail::tagged(cartesian_product(path_graph(2), cycle_graph(j)), "cylinder", {j});
}

/// C_i box C_j. The torus lower bound is only applied to graphs carrying this tag.
inline Graph torus_graph(std::size_t i, std::size_t j) {
  detail::require(i >= 3 && j >= 3, "torus needs i, j >= 3");
  return detail::tagged(cartesian_product(cycle_graph(i), cycle_graph(j)), "torus", {i, j});
}

/// Brick-wall quotient of the hexagonal grid: C_m box C_n keeping the
/// vertical edge (r, c)-(r+1, c) only when r + c is even. 3-regular and
/// bipartite for even m, n >= 4.
inline Graph honeycomb_torus(std::size_t m, std::size_t n) {
  detail::require(m >= 4 && n >= 4 && m % 2 == 0 && n % 2 == 0, "honeycomb torus needs even m, n >= 4");
  auto id = [n](std::size_t r, std::size_t c) { return r * n + c; };
  std::vector<Edge> e;
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      e.emplace_back(id(r, c), id(r, (c + 1) % n));
      if ((r + c) % 2 == 0) e.emplace_back(id(r, c), id((r + 1) % m, c));
    }
  }
  return detail::tagged(Graph::from_edges(m * n, e), "honeycomb_torus", {m, n});
}

/// Families: path, cycle, star, complete, complete_multipartite, hypercube,
/// ladder, cylinder, torus, honeycomb_torus.
inline Graph named_builder(const std::string& family, const std::vector<std::size_t>& params) {
  auto want = [&](std::size_t k) {
    if (params.size() != k)
      throw std::invalid_argument(family + " expects " + std::to_string(k) + " parameter(s), got " +
                                  std::to_string(params.size()));
  };
  if (family == "path") return want(1), path_graph(params[0]);
  if (family == "cycle") return want(1), cycle_graph(params[0]);
  if (family == "star") return want(1), star_graph(params[0]);
  if (family == "complete") return want(1), complete_graph(params[0]);
  if (family == "complete_multipartite") return complete_multipartite(params);
  if (family == "hypercube") return want(1), hypercube(params[0]);
  if (family == "ladder") return want(1), ladder_graph(params[0]);
  if (family == "cylinder") return want(1), cylinder_graph(params[0]);
  if (family == "torus") return want(2), torus_graph(params[0], params[1]);
  if (family == "honeycomb_torus") return want(2), honeycomb_torus(params[0], params[1]);
  throw std::invalid_argument("unknown graph family '" + family + "'");
}

}  // namespace redic

#endif  // REDIC_BUILDERS_HPP

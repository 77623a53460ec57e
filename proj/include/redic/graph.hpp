#ifndef REDIC_GRAPH_HPP
#define REDIC_GRAPH_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "redic/vertex_set.hpp"

namespace redic {

using Edge = std::pair<Vertex, Vertex>;

/// Records which named builder produced a graph. Metadata only; a few
/// bounds (the torus bound) are applied only with this provenance.
struct BuildTag {
  std::string family;
  std::vector<std::size_t> params;
};

/// Immutable simple undirected graph on vertices 0..n-1.
class Graph {
 public:
  Graph() = default;

  /// Rejects loops and out-of-range endpoints; duplicate edges collapse.
  static Graph from_edges(std::size_t n, const std::vector<Edge>& edges) {
    if (n > kMaxVertices) {
      throw std::length_error("graph order " + std::to_string(n) + " exceeds supported width " +
                              std::to_string(kMaxVertices));
    }
    Graph g;
    g.n_ = n;
    g.open_.assign(n, VertexSet{});
    for (const auto& [u, v] : edges) {
      if (u >= n || v >= n) {
        throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                    ") out of range for n=" + std::to_string(n));
      }
      if (u == v) {
        throw std::invalid_argument("loop edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
      }
      g.open_[u].insert(v);
      g.open_[v].insert(u);
    }
    g.closed_.resize(n);
    for (Vertex v = 0; v < n; ++v) {
      g.closed_[v] = g.open_[v];
      g.closed_[v].insert(v);
    }
    return g;
  }

  std::size_t order() const { return n_; }
  bool empty() const { return n_ == 0; }

  const VertexSet& open(Vertex v) const { return open_.at(v); }
  const VertexSet& closed(Vertex v) const { return closed_.at(v); }
  std::size_t degree(Vertex v) const { return open_.at(v).size(); }
  bool adjacent(Vertex u, Vertex v) const { return open_.at(u).contains(v); }
  VertexSet vertices() const { return VertexSet::full(n_); }

  std::size_t edge_count() const {
    std::size_t s = 0;
    for (const auto& a : open_) s += a.size();
    return s / 2;
  }

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (Vertex u = 0; u < n_; ++u)
      open_[u].for_each([&](Vertex v) {
        if (u < v) out.emplace_back(u, v);
      });
    return out;
  }

  const std::string& label(Vertex v) const {
    static const std::string kNone;
    return v < labels_.size() ? labels_[v] : kNone;
  }
  const std::vector<std::string>& labels() const { return labels_; }

  /// Index of the vertex carrying `name`, if any.
  std::optional<Vertex> find_label(const std::string& name) const {
    auto it = std::find(labels_.begin(), labels_.end(), name);
    if (it == labels_.end()) return std::nullopt;
    return static_cast<Vertex>(it - labels_.begin());
  }

  Graph with_labels(std::vector<std::string> labels) const {
    if (!labels.empty() && labels.size() != n_) throw std::invalid_argument("label count does not match graph order");
    Graph g = *this;
    g.labels_ = std::move(labels);
    return g;
  }

  const std::optional<BuildTag>& tag() const { return tag_; }
  Graph with_tag(BuildTag tag) const {
    Graph g = *this;
    g.tag_ = std::move(tag);
    return g;
  }

  /// Structural equality; labels and provenance are ignored.
  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.open_ == b.open_; }

 private:
  std::size_t n_ = 0;
  std::vector<VertexSet> open_;
  std::vector<VertexSet> closed_;
  std::vector<std::string> labels_;
  std::optional<BuildTag> tag_;
};

inline Graph build_graph(std::size_t n, const std::vector<Edge>& edges) { return Graph::from_edges(n, edges); }

inline VertexSet closed_neighborhood(const Graph& g, Vertex v) {
  if (v >= g.order()) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
  return g.closed(v);
}

/// Box product with row-major indexing: (g, h) -> g * |V(H)| + h.
inline Graph cartesian_product(const Graph& g, const Graph& h) {
  if (g.empty() || h.empty()) throw std::invalid_argument("cartesian product of an empty graph");
  const std::size_t m = h.order();
  const std::size_t n = g.order() * m;
  if (n > kMaxVertices) throw std::length_error("product order " + std::to_string(n) + " exceeds supported width");
  std::vector<Edge> edges;
  for (Vertex a = 0; a < g.order(); ++a) {
    for (const auto& [x, y] : h.edges()) edges.emplace_back(a * m + x, a * m + y);
  }
  for (const auto& [a, b] : g.edges()) {
    for (Vertex x = 0; x < m; ++x) edges.emplace_back(a * m + x, b * m + x);
  }
  return Graph::from_edges(n, edges);
}

/// Graph induced on `keep`, relabelled densely in increasing index order.
inline Graph induced_subgraph(const Graph& g, const VertexSet& keep) {
  std::vector<Vertex> map(g.order(), kMaxVertices);
  std::size_t k = 0;
  keep.for_each([&](Vertex v) { map[v] = k++; });
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges())
    if (keep.contains(u) && keep.contains(v)) edges.emplace_back(map[u], map[v]);
  return Graph::from_edges(k, edges);
}

/// Relabels so that old vertex v becomes perm[v].
inline Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  return Graph::from_edges(g.order(), edges);
}

// ---- structure queries ----

inline std::vector<std::size_t> degrees(const Graph& g) {
  std::vector<std::size_t> d(g.order());
  for (Vertex v = 0; v < g.order(); ++v) d[v] = g.degree(v);
  return d;
}

/// Connected components as vertex sets, ordered by lowest member.
inline std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet seen;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen.contains(s)) continue;
    VertexSet comp = VertexSet::single(s);
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next;
      frontier.for_each([&](Vertex v) { next |= g.open(v); });
      next -= comp;
      comp |= next;
      frontier = next;
    }
    seen |= comp;
    out.push_back(comp);
  }
  return out;
}

inline bool is_connected(const Graph& g) { return g.order() <= 1 || components(g).size() == 1; }

inline bool is_tree(const Graph& g) { return g.order() >= 1 && is_connected(g) && g.edge_count() + 1 == g.order(); }

inline bool is_regular(const Graph& g, std::size_t d) {
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) != d) return false;
  return true;
}

inline bool is_cubic(const Graph& g) { return g.order() > 0 && is_regular(g, 3); }

/// Triangles (a < b < c) in lexicographic order.
inline std::vector<std::array<Vertex, 3>> triangles(const Graph& g) {
  std::vector<std::array<Vertex, 3>> out;
  for (const auto& [a, b] : g.edges()) {
    VertexSet common = g.open(a) & g.open(b);
    common.for_each([&](Vertex c) {
      if (c > b) out.push_back({a, b, c});
    });
  }
  return out;
}

inline bool is_triangle_free(const Graph& g) {
  for (const auto& [a, b] : g.edges())
    if (g.open(a).intersects(g.open(b))) return false;
  return true;
}

inline bool is_bipartite(const Graph& g) {
  std::vector<int> side(g.order(), -1);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    std::vector<Vertex> stack{s};
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      bool ok = true;
      g.open(v).for_each([&](Vertex w) {
        if (side[w] == -1) {
          side[w] = 1 - side[v];
          stack.push_back(w);
        } else if (side[w] == side[v]) {
          ok = false;
        }
      });
      if (!ok) return false;
    }
  }
  return true;
}

/// Vertices within distance two of v, excluding v.
inline VertexSet second_neighborhood(const Graph& g, Vertex v) {
  VertexSet out;
  g.open(v).for_each([&](Vertex w) { out |= g.closed(w); });
  out.erase(v);
  return out;
}

struct StructureSummary {
  bool connected = false;
  bool tree = false;
  bool cubic = false;
  std::vector<std::size_t> degrees;
  std::vector<std::array<Vertex, 3>> triangles;
};

inline StructureSummary structure_queries(const Graph& g) {
  return {is_connected(g), is_tree(g), is_cubic(g), degrees(g), triangles(g)};
}

}  // namespace redic

#endif  // REDIC_GRAPH_HPP

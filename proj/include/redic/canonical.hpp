#ifndef REDIC_CANONICAL_HPP
#define REDIC_CANONICAL_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "redic/graph.hpp"
#include "redic/graph_io.hpp"

namespace redic {

namespace detail {

/// Colors are cell start positions in an ordered partition: color[v] is
/// the number of vertices in strictly earlier cells.
using Coloring = std::vector<std::size_t>;

inline std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Order-free digest of the neighbour colours of v.
inline std::uint64_t neighbour_digest(const Graph& g, const Coloring& c, Vertex v) {
  std::uint64_t h = 0;
  g.open(v).for_each([&](Vertex w) { h += mix(c[w]); });
  return h;
}

/// Colour refinement towards the coarsest equitable partition finer than
/// `c`. Neighbour multisets are compared by digest, which keeps every step
/// invariant under relabelling.
inline Coloring refine(const Graph& g, Coloring c) {
  const std::size_t n = g.order();
  std::vector<std::pair<std::size_t, std::uint64_t>> sig(n);
  std::vector<std::size_t> order(n);
  std::size_t cells = 0;
  {
    auto s = c;
    std::sort(s.begin(), s.end());
    cells = static_cast<std::size_t>(std::unique(s.begin(), s.end()) - s.begin());
  }
  Coloring next(n);
  for (;;) {
    for (Vertex v = 0; v < n; ++v) sig[v] = {c[v], neighbour_digest(g, c, v)};
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return sig[a] < sig[b]; });
    std::size_t distinct = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == 0 || sig[order[i]] != sig[order[i - 1]]) {
        next[order[i]] = i;
        ++distinct;
      } else {
        next[order[i]] = next[order[i - 1]];
      }
    }
    std::swap(c, next);
    if (distinct == cells) return c;
    cells = distinct;
  }
}

/// Relabelling-invariant summary of a refined colouring.
inline std::vector<std::uint64_t> coloring_invariant(const Graph& g, const Coloring& c) {
  std::vector<std::uint64_t> rows(g.order());
  for (Vertex v = 0; v < g.order(); ++v) rows[v] = mix(c[v]) ^ (neighbour_digest(g, c, v) * 31);
  std::sort(rows.begin(), rows.end());
  return rows;
}

class Canonizer {
 public:
  explicit Canonizer(const Graph& g) : g_(g) {}

  std::vector<Vertex> run() {
    Coloring c(g_.order(), 0);
    std::vector<Vertex> prefix;
    search(refine(g_, std::move(c)), prefix);
    return best_perm_;
  }

 private:
  std::vector<VertexSet> certificate(const Coloring& perm) const {
    std::vector<VertexSet> rows(g_.order());
    for (Vertex v = 0; v < g_.order(); ++v) g_.open(v).for_each([&](Vertex w) { rows[perm[v]].insert(perm[w]); });
    return rows;
  }

  static bool less_rows(const std::vector<VertexSet>& a, const std::vector<VertexSet>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t w = VertexSet::kWords; w-- > 0;) {
        if (a[i].word(w) != b[i].word(w)) return a[i].word(w) < b[i].word(w);
      }
    }
    return false;
  }

  void search(const Coloring& c, std::vector<Vertex>& prefix) {
    const std::size_t n = g_.order();
    // first non-singleton cell in partition order
    std::vector<std::size_t> count(n + 1, 0);
    for (auto x : c) ++count[x];
    std::size_t target = n;
    for (std::size_t x = 0; x < n; ++x)
      if (count[x] > 1) {
        target = x;
        break;
      }
    if (target == n) {
      auto cert = certificate(c);
      if (!have_ || less_rows(cert, best_cert_)) {
        best_cert_ = std::move(cert);
        best_perm_ = c;
        have_ = true;
      } else if (cert == best_cert_) {
        record_automorphism(c);
      }
      return;
    }
    struct Child {
      Vertex v;
      std::vector<std::uint64_t> inv;
      Coloring c;
    };
    std::vector<Child> children;
    for (Vertex v = 0; v < n; ++v) {
      if (c[v] != target) continue;
      Coloring child = c;
      for (Vertex w = 0; w < n; ++w)
        if (c[w] == target && w != v) child[w] = target + 1;
      child = refine(g_, std::move(child));
      children.push_back({v, coloring_invariant(g_, child), std::move(child)});
    }
    const auto keep =
        std::min_element(children.begin(), children.end(), [](const auto& a, const auto& b) { return a.inv < b.inv; })
            ->inv;
    std::vector<Vertex> explored;
    for (const auto& ch : children) {
      if (ch.inv != keep) continue;
      if (!explored.empty()) {
        auto orbit = orbits_fixing(prefix);
        bool seen = std::any_of(explored.begin(), explored.end(), [&](Vertex u) { return orbit[u] == orbit[ch.v]; });
        if (seen) continue;
      }
      explored.push_back(ch.v);
      prefix.push_back(ch.v);
      search(ch.c, prefix);
      prefix.pop_back();
    }
  }

  void record_automorphism(const Coloring& c) {
    const std::size_t n = g_.order();
    std::vector<Vertex> inverse(n);
    for (Vertex v = 0; v < n; ++v) inverse[best_perm_[v]] = v;
    std::vector<Vertex> gamma(n);
    for (Vertex v = 0; v < n; ++v) gamma[v] = inverse[c[v]];
    automorphisms_.push_back(std::move(gamma));
  }

  /// Orbit representatives under the known automorphisms that fix `prefix`
  /// pointwise.
  std::vector<Vertex> orbits_fixing(const std::vector<Vertex>& prefix) const {
    const std::size_t n = g_.order();
    std::vector<Vertex> parent(n);
    for (Vertex v = 0; v < n; ++v) parent[v] = v;
    auto find = [&](Vertex v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    for (const auto& gamma : automorphisms_) {
      bool fixes = std::all_of(prefix.begin(), prefix.end(), [&](Vertex v) { return gamma[v] == v; });
      if (!fixes) continue;
      for (Vertex v = 0; v < n; ++v) {
        Vertex a = find(v);
        Vertex b = find(gamma[v]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    for (Vertex v = 0; v < n; ++v) parent[v] = find(v);
    return parent;
  }

  const Graph& g_;
  bool have_ = false;
  std::vector<VertexSet> best_cert_;
  std::vector<Vertex> best_perm_;
  std::vector<std::vector<Vertex>> automorphisms_;
};

}  // namespace detail

/// Canonical relabelling: isomorphic graphs map to identical graphs.
/// perm[v] is the new index of vertex v.
inline std::vector<Vertex> canonical_labeling(const Graph& g) {
  if (g.order() == 0) return {};
  return detail::Canonizer(g).run();
}

inline Graph canonical_form(const Graph& g) { return relabel(g, canonical_labeling(g)); }

/// graph6 string of the canonical form; equal iff isomorphic.
inline std::string canonical_key(const Graph& g) { return write_graph6(canonical_form(g)); }

}  // namespace redic

#endif  // REDIC_CANONICAL_HPP

#ifndef REDIC_EXISTENCE_HPP
#define REDIC_EXISTENCE_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <type_traits>
#include <string>
#include <variant>
#include <vector>

#include "redic/graph.hpp"

namespace redic {

struct ClosedTwinPair {
  Vertex u;
  Vertex v;
};
struct LowDegreeSupport {
  Vertex support;
  Vertex leaf;
  std::size_t degree;
};
struct BadTriangle {
  Vertex a;
  Vertex b;
  Vertex c;
  std::size_t delta;
};
/// A component with fewer than four vertices cannot carry a RED:IC.
struct ComponentTooSmall {
  Vertex representative;
  std::size_t size;
};

using NonexistenceReason = std::variant<ClosedTwinPair, LowDegreeSupport, BadTriangle, ComponentTooSmall>;

inline std::string describe(const NonexistenceReason& r) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, ClosedTwinPair>) {
          return "closed twins " + std::to_string(x.u) + " and " + std::to_string(x.v);
        } else if constexpr (std::is_same_v<T, LowDegreeSupport>) {
          return "support vertex " + std::to_string(x.support) + " (leaf " + std::to_string(x.leaf) + ") has degree " +
                 std::to_string(x.degree);
        } else if constexpr (std::is_same_v<T, BadTriangle>) {
          return "triangle " + std::to_string(x.a) + "," + std::to_string(x.b) + "," + std::to_string(x.c) +
                 " has |N[a] delta N[b]| = " + std::to_string(x.delta);
        } else {
          return "component of vertex " + std::to_string(x.representative) + " has only " + std::to_string(x.size) +
                 " vertices";
        }
      },
      r);
}

/// Outcome of an existence test; `reason` is empty when a code exists.
struct Existence {
  std::optional<NonexistenceReason> reason;
  bool yes() const { return !reason.has_value(); }
  explicit operator bool() const { return yes(); }
  std::string describe() const { return reason ? redic::describe(*reason) : "yes"; }
};

inline std::vector<std::pair<Vertex, Vertex>> closed_twins(const Graph& g) {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex u = 0; u < g.order(); ++u)
    g.open(u).for_each([&](Vertex v) {
      if (u < v && g.closed(u) == g.closed(v)) out.emplace_back(u, v);
    });
  return out;
}

namespace detail {

inline std::optional<NonexistenceReason> first_twin(const Graph& g) {
  auto tw = closed_twins(g);
  if (tw.empty()) return std::nullopt;
  return ClosedTwinPair{tw.front().first, tw.front().second};
}

inline std::optional<NonexistenceReason> first_low_support(const Graph& g) {
  for (Vertex leaf = 0; leaf < g.order(); ++leaf) {
    if (g.degree(leaf) != 1) continue;
    Vertex s = g.open(leaf).first();
    if (g.degree(s) < 3) return LowDegreeSupport{s, leaf, g.degree(s)};
  }
  return std::nullopt;
}

inline std::optional<NonexistenceReason> first_small_component(const Graph& g) {
  if (g.order() == 0) return std::nullopt;
  for (const auto& c : components(g))
    if (c.size() < 4) return ComponentTooSmall{c.first(), c.size()};
  return std::nullopt;
}

}  // namespace detail

/// RED:IC existence: every component has at least four vertices, no closed
/// twins, every support vertex has degree >= 3, and every edge ab lying in a
/// triangle has |N[a] Δ N[b]| >= 2. The three structural clauses are local,
/// so applying them to the whole graph decides each component at once.
inline Existence exists_red_ic(const Graph& g) {
  if (g.order() > 0 && g.order() < 4) return {ComponentTooSmall{0, g.order()}};
  if (auto r = detail::first_small_component(g)) return {r};
  if (auto r = detail::first_twin(g)) return {r};
  if (auto r = detail::first_low_support(g)) return {r};
  for (const auto& t : triangles(g)) {
    const std::array<std::pair<Vertex, Vertex>, 3> sides{{{t[0], t[1]}, {t[0], t[2]}, {t[1], t[2]}}};
    for (const auto& [a, b] : sides) {
      auto d = (g.closed(a) ^ g.closed(b)).size();
      if (d < 2) {
        Vertex c = t[0] + t[1] + t[2] - a - b;
        return {BadTriangle{a, b, c, d}};
      }
    }
  }
  return {};
}

/// Triangle-free fast path: only twins and support degrees matter.
inline Existence exists_red_ic_triangle_free(const Graph& g) {
  if (!is_triangle_free(g)) throw std::invalid_argument("exists_red_ic_triangle_free: input has a triangle");
  if (g.order() > 0 && g.order() < 4) return {ComponentTooSmall{0, g.order()}};
  if (auto r = detail::first_small_component(g)) return {r};
  // Adjacent closed twins in a triangle-free graph are exactly an isolated edge.
  if (auto r = detail::first_twin(g)) return {r};
  if (auto r = detail::first_low_support(g)) return {r};
  return {};
}

/// Tree fast path: single pass over leaves checking support degrees.
inline Existence exists_red_ic_tree(const Graph& t) {
  if (!is_tree(t)) throw std::invalid_argument("exists_red_ic_tree: input is not a tree");
  if (t.order() < 4) return {ComponentTooSmall{0, t.order()}};
  if (auto r = detail::first_low_support(t)) return {r};
  return {};
}

/// IC existence: no closed twins.
inline Existence exists_ic(const Graph& g) {
  if (auto r = detail::first_twin(g)) return {r};
  return {};
}

}  // namespace redic

#endif  // REDIC_EXISTENCE_HPP

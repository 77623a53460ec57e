#ifndef REDIC_DETECTION_HPP
#define REDIC_DETECTION_HPP

#include <boost/rational.hpp>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

#include "redic/graph.hpp"

namespace redic {

enum class CodeKind { ic, red_ic };

struct Thresholds {
  std::size_t dom;
  std::size_t dist;
};

/// (1,1) for identifying codes, (2,2) for redundant identifying codes.
constexpr Thresholds thresholds(CodeKind kind) { return kind == CodeKind::ic ? Thresholds{1, 1} : Thresholds{2, 2}; }

inline std::string to_string(CodeKind kind) { return kind == CodeKind::ic ? "ic" : "red-ic"; }

inline CodeKind parse_code_kind(const std::string& s) {
  if (s == "ic" || s == "IC") return CodeKind::ic;
  if (s == "red-ic" || s == "red_ic" || s == "RED_IC" || s == "RED:IC") return CodeKind::red_ic;
  throw std::invalid_argument("unknown code kind '" + s + "'");
}

using Rational = boost::rational<long long>;

struct Undominated {
  Vertex v;
  std::size_t count;
  friend bool operator==(const Undominated&, const Undominated&) = default;
};

struct Undistinguished {
  Vertex u;
  Vertex v;
  VertexSet delta;
  friend bool operator==(const Undistinguished&, const Undistinguished&) = default;
};

using Violation = std::variant<Undominated, Undistinguished>;

inline std::string describe(const Violation& viol) {
  if (const auto* d = std::get_if<Undominated>(&viol))
    return "vertex " + std::to_string(d->v) + " is only " + std::to_string(d->count) + "-dominated";
  const auto& p = std::get<Undistinguished>(viol);
  return "pair (" + std::to_string(p.u) + "," + std::to_string(p.v) + ") distinguished only by " + p.delta.to_string();
}

/// |N[v] ∩ S|
inline std::size_t domination(const Graph& g, const VertexSet& s, Vertex v) { return (g.closed(v) & s).size(); }

/// (N[u] ∩ S) Δ (N[v] ∩ S)
inline VertexSet delta(const Graph& g, const VertexSet& s, Vertex u, Vertex v) {
  return (g.closed(u) ^ g.closed(v)) & s;
}

/// Reference check over every unordered pair.
inline std::optional<Violation> verify_all_pairs(const Graph& g, const VertexSet& s, CodeKind kind) {
  const auto req = thresholds(kind);
  for (Vertex v = 0; v < g.order(); ++v) {
    auto c = domination(g, s, v);
    if (c < req.dom) return Undominated{v, c};
  }
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      auto d = delta(g, s, u, v);
      if (d.size() < req.dist) return Undistinguished{u, v, d};
    }
  }
  return std::nullopt;
}

/// nullopt when S is a code of the given kind, else the first violation:
/// the lowest undominated vertex, then the lexicographically first pair.
///
/// Once every vertex is dom-dominated, a pair at distance >= 3 has disjoint
/// closed neighborhoods and a delta of at least 2*dom, so only pairs within
/// distance two are examined.
inline std::optional<Violation> verify(const Graph& g, const VertexSet& s, CodeKind kind) {
  const auto req = thresholds(kind);
  for (Vertex v = 0; v < g.order(); ++v) {
    auto c = domination(g, s, v);
    if (c < req.dom) return Undominated{v, c};
  }
  for (Vertex u = 0; u < g.order(); ++u) {
    VertexSet near = second_neighborhood(g, u);
    std::optional<Violation> found;
    near.for_each([&](Vertex v) {
      if (found || v < u) return;
      auto d = delta(g, s, u, v);
      if (d.size() < req.dist) found = Undistinguished{u, v, d};
    });
    if (found) return found;
  }
  return std::nullopt;
}

inline bool is_code(const Graph& g, const VertexSet& s, CodeKind kind) { return !verify(g, s, kind).has_value(); }

/// sh(x) = sum over v in N[x] of 1/dom(v). Every such v is dominated by x
/// itself, so the share is defined for any detector x.
inline Rational share(const Graph& g, const VertexSet& s, Vertex x) {
  if (!s.contains(x)) throw std::invalid_argument("share of non-detector " + std::to_string(x));
  Rational total{0};
  g.closed(x).for_each([&](Vertex v) { total += Rational(1, static_cast<long long>(domination(g, s, v))); });
  return total;
}

struct RobustnessFailure {
  /// Detector whose removal breaks the code; empty when S itself is not an IC.
  std::optional<Vertex> removed;
  Violation violation;
};

/// Behavioural fault tolerance: S is an IC and stays one after removing any
/// single detector.
inline std::optional<RobustnessFailure> robustness_check(const Graph& g, const VertexSet& s) {
  if (auto v = verify_all_pairs(g, s, CodeKind::ic)) return RobustnessFailure{std::nullopt, *v};
  std::optional<RobustnessFailure> out;
  s.for_each([&](Vertex x) {
    if (out) return;
    VertexSet reduced = s;
    reduced.erase(x);
    if (auto v = verify_all_pairs(g, reduced, CodeKind::ic)) out = RobustnessFailure{x, *v};
  });
  return out;
}

}  // namespace redic

#endif  // REDIC_DETECTION_HPP

#ifndef REDIC_CONSTRUCTIONS_HPP
#define REDIC_CONSTRUCTIONS_HPP

#include <algorithm>
#include <array>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "redic/builders.hpp"
#include "redic/detection.hpp"
#include "redic/graph.hpp"
#include "redic/solver.hpp"

namespace redic {

/// How the claimed size is known to be optimal.
struct Certificate {
  enum class Kind { bound_matches, solver_required };
  Kind kind = Kind::solver_required;
  /// Name of the matching lower bound when kind is bound_matches.
  std::string bound;

  static Certificate matches(std::string name) { return {Kind::bound_matches, std::move(name)}; }
  static Certificate solver() { return {}; }
  bool bound_matches() const { return kind == Kind::bound_matches; }
  std::string to_string() const { return bound_matches() ? "bound_matches(" + bound + ")" : "solver_required"; }
};

struct ConstructedInstance {
  Graph graph;
  VertexSet witness;
  std::size_t claimed_k = 0;
  Certificate certificate;
};

namespace detail {

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Throws std::logic_error unless the instance is internally consistent.
inline ConstructedInstance certify(ConstructedInstance inst) {
  if (auto v = verify(inst.graph, inst.witness, CodeKind::red_ic))
    throw std::logic_error("construction witness fails: " + describe(*v));
  if (inst.witness.size() != inst.claimed_k)
    throw std::logic_error("construction witness has " + std::to_string(inst.witness.size()) + " detectors, claimed " +
                           std::to_string(inst.claimed_k));
  if (inst.certificate.bound_matches()) {
    auto lb = lower_bound(inst.graph, CodeKind::red_ic).best();
    if (lb != inst.claimed_k)
      throw std::logic_error("lower bound " + std::to_string(lb) + " does not meet claimed " +
                             std::to_string(inst.claimed_k));
  }
  return inst;
}

inline void require_order(std::size_t n) {
  if (n > kMaxVertices) throw std::length_error("construction needs " + std::to_string(n) + " vertices");
}

inline void check_count(std::size_t built, std::uint64_t expected) {
  if (built != expected)
    throw std::logic_error("subset count " + std::to_string(built) + " differs from " + std::to_string(expected));
}

/// Adds one non-detector adjacent to exactly `code` for every subset of the
/// detectors 0..k-1 whose size is in `sizes` and which `skip` does not reject.
template <typename Skip>
void add_subset_vertices(std::size_t k, const std::vector<std::size_t>& sizes, Skip skip, std::vector<Edge>& edges,
                         std::size_t& next) {
  for (std::size_t s : sizes) {
    std::vector<bool> pick(k, false);
    std::fill(pick.end() - static_cast<std::ptrdiff_t>(s), pick.end(), true);
    do {
      std::vector<Vertex> code;
      for (Vertex i = 0; i < k; ++i)
        if (pick[i]) code.push_back(i);
      if (skip(code)) continue;
      require_order(next + 1);
      for (Vertex d : code) edges.emplace_back(d, next);
      ++next;
    } while (std::next_permutation(pick.begin(), pick.end()));
  }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Families meeting the log bound

/// Star K_{1,k-1} (center 0, leaves 1..k-1, all detectors) plus one
/// non-detector per remaining even subset of sizes 2..k-2. Every code is an
/// even set, so distinct codes differ in at least two detectors.
/// n = 2^(k-1) - 1.
inline ConstructedInstance star_extremal_even(std::size_t k) {
  detail::require(k >= 4 && k % 2 == 0, "star_extremal_even needs even k >= 4");
  detail::require_order((std::size_t{1} << (k - 1)) - 1);
  std::vector<Edge> edges;
  for (Vertex i = 1; i < k; ++i) edges.emplace_back(0, i);
  std::size_t next = k;
  std::vector<std::size_t> sizes;
  for (std::size_t s = 2; s + 2 <= k; s += 2) sizes.push_back(s);
  detail::add_subset_vertices(
      k, sizes, [](const std::vector<Vertex>& c) { return c.size() == 2 && c[0] == 0; }, edges, next);

  std::uint64_t even_sum = 0;
  for (std::size_t s = 2; s <= k; s += 2) even_sum += detail::binomial(k, s);
  detail::check_count((next - k) + (k - 1) + 1, even_sum);
  detail::check_count(next, (std::uint64_t{1} << (k - 1)) - 1);

  Graph g = Graph::from_edges(next, edges).with_tag({"star_extremal", {k}});
  return detail::certify({g, VertexSet::full(k), k, Certificate::matches("log")});
}

/// Odd-k star variant: center code is all k detectors, every other code is
/// an even set of size at most k-3. n = 2^(k-1) - k.
inline ConstructedInstance star_extremal_odd(std::size_t k) {
  detail::require(k >= 5 && k % 2 == 1, "star_extremal_odd needs odd k >= 5");
  detail::require_order((std::size_t{1} << (k - 1)) - k);
  std::vector<Edge> edges;
  for (Vertex i = 1; i < k; ++i) edges.emplace_back(0, i);
  std::size_t next = k;
  std::vector<std::size_t> sizes;
  for (std::size_t s = 2; s + 3 <= k; s += 2) sizes.push_back(s);
  detail::add_subset_vertices(
      k, sizes, [](const std::vector<Vertex>& c) { return c.size() == 2 && c[0] == 0; }, edges, next);

  std::uint64_t even_sum = 0;
  for (std::size_t s = 2; s + 3 <= k; s += 2) even_sum += detail::binomial(k, s);
  detail::check_count((next - k) + (k - 1), even_sum);
  detail::check_count(next, (std::uint64_t{1} << (k - 1)) - k);

  Graph g = Graph::from_edges(next, edges).with_tag({"star_extremal", {k}});
  const bool meets = ceil_log2(next + 1) + 1 == k;
  return detail::certify({g, VertexSet::full(k), k, meets ? Certificate::matches("log") : Certificate::solver()});
}

/// Cycle C_k of detectors (codes are the k consecutive triples) plus one
/// non-detector per other odd subset of size 3..k. n = 2^(k-1) - k.
inline ConstructedInstance cycle_extremal_odd(std::size_t k) {
  detail::require(k >= 5 && k % 2 == 1, "cycle_extremal_odd needs odd k >= 5");
  detail::require_order((std::size_t{1} << (k - 1)) - k);
  std::vector<Edge> edges;
  for (Vertex i = 0; i < k; ++i) edges.emplace_back(i, (i + 1) % k);
  auto consecutive = [k](const std::vector<Vertex>& c) {
    if (c.size() != 3) return false;
    for (Vertex i = 0; i < k; ++i) {
      std::array<Vertex, 3> t{i, (i + 1) % k, (i + 2) % k};
      std::sort(t.begin(), t.end());
      if (std::equal(t.begin(), t.end(), c.begin())) return true;
    }
    return false;
  };
  std::size_t next = k;
  std::vector<std::size_t> sizes;
  for (std::size_t s = 3; s <= k; s += 2) sizes.push_back(s);
  detail::add_subset_vertices(k, sizes, consecutive, edges, next);

  std::uint64_t odd_sum = 0;
  for (std::size_t s = 3; s <= k; s += 2) odd_sum += detail::binomial(k, s);
  detail::check_count((next - k) + k, odd_sum);
  detail::check_count(next, (std::uint64_t{1} << (k - 1)) - k);

  Graph g = Graph::from_edges(next, edges).with_tag({"cycle_extremal", {k}});
  const bool meets = ceil_log2(next + 1) + 1 == k;
  return detail::certify({g, VertexSet::full(k), k, meets ? Certificate::matches("log") : Certificate::solver()});
}

/// K_{2,...,2}: every vertex has an open twin, so the only code is V.
inline ConstructedInstance multipartite_exact(std::size_t n) {
  detail::require(n >= 4 && n % 2 == 0, "multipartite_exact needs even n >= 4");
  Graph g = complete_multipartite(std::vector<std::size_t>(n / 2, 2));
  return detail::certify({g, VertexSet::full(n), n, Certificate::solver()});
}

// ---------------------------------------------------------------------------
// Trees

/// m = floor((n+1)/5) claws K_{1,3} chained by m-1 non-detectors, each
/// joining a leaf of claw i to a leaf of claw i+1; the (n+1) mod 5 excess
/// detectors hang as extra leaves on the claw centers in turn.
/// Witness: all detectors, ceil(4(n+1)/5) of them.
inline ConstructedInstance extremal_tree(std::size_t n) {
  detail::require(n >= 4, "extremal_tree needs n >= 4");
  detail::require_order(n);
  const std::size_t m = (n + 1) / 5;
  const std::size_t extra = (n + 1) % 5;
  std::vector<Edge> edges;
  VertexSet witness;
  auto center = [](std::size_t i) { return 4 * i; };
  for (std::size_t i = 0; i < m; ++i) {
    for (Vertex j = 0; j < 4; ++j) witness.insert(center(i) + j);
    for (Vertex j = 1; j < 4; ++j) edges.emplace_back(center(i), center(i) + j);
  }
  Vertex next = 4 * m;
  for (std::size_t i = 0; i + 1 < m; ++i, ++next) {
    edges.emplace_back(center(i) + 1, next);
    edges.emplace_back(next, center(i + 1) + 2);
  }
  for (std::size_t e = 0; e < extra; ++e, ++next) {
    edges.emplace_back(center(e % m), next);
    witness.insert(next);
  }
  if (next != n) throw std::logic_error("extremal_tree built " + std::to_string(next) + " vertices");
  Graph g = Graph::from_edges(n, edges).with_tag({"extremal_tree", {n}});
  return detail::certify({g, witness, 4 * m + extra, Certificate::matches("tree")});
}

// ---------------------------------------------------------------------------
// Cubic rings

/// 6-cycle a..f with chords b-f and c-e; a and d are the degree-2 ports.
inline Graph g6_gadget() {
  Graph g = Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {1, 5}, {2, 4}});
  return g.with_labels({"a", "b", "c", "d", "e", "f"});
}

/// t copies of the 6-vertex gadget, port d of copy i joined to port a of
/// copy i+1 (mod t). Cubic on 6t vertices; only V is a code.
inline ConstructedInstance g6_ring(std::size_t t) {
  detail::require(t >= 2, "g6_ring needs t >= 2");
  detail::require_order(6 * t);
  const Graph base = g6_gadget();
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < t; ++i) {
    for (const auto& [u, v] : base.edges()) edges.emplace_back(6 * i + u, 6 * i + v);
    edges.emplace_back(6 * i + 3, 6 * ((i + 1) % t));
  }
  Graph g = Graph::from_edges(6 * t, edges).with_tag({"g6_ring", {t}});
  return detail::certify({g, VertexSet::full(6 * t), 6 * t, Certificate::solver()});
}

/// A 14-vertex fragment with four degree-2 ports and an 8-detector set that
/// dominates and separates every internal vertex using internal detectors
/// alone.
struct G14Gadget {
  Graph graph;
  VertexSet detectors;
  /// Ports 0 and 1 of one copy wire to ports 2 and 3 of the next.
  std::array<Vertex, 4> ports{};
};

namespace detail {

class G14Search {
 public:
  static constexpr std::size_t kOrder = 14;
  static constexpr std::size_t kDetectors = 8;

  G14Search(std::array<Vertex, 4> ports, const Budget& budget, std::chrono::steady_clock::time_point start,
            std::uint64_t& nodes)
      : ports_(ports), budget_(budget), start_(start), nodes_(nodes) {
    for (Vertex v = 0; v < kDetectors; ++v) s_.insert(v);
    target_.fill(3);
    for (Vertex p : ports) target_[p] = 2;
  }

  std::optional<G14Gadget> run() {
    extend(0, 0);
    return found_;
  }

  bool exhausted() const { return exhausted_; }

 private:
  bool complete(Vertex v) const { return degree_[v] == target_[v]; }

  /// Checks every condition that became decidable when v completed.
  bool consistent(Vertex v) const {
    VertexSet nv = adj_[v];
    nv.insert(v);
    if ((nv & s_).size() < 2) return false;
    for (Vertex u = 0; u < kOrder; ++u) {
      if (u == v || !complete(u)) continue;
      VertexSet nu = adj_[u];
      nu.insert(u);
      if (((nu ^ nv) & s_).size() < 2) return false;
    }
    return true;
  }

  /// Untouched vertices of one class are interchangeable; only the lowest
  /// eligible one is tried. Ports each form a class of their own.
  bool redundant(Vertex lo, Vertex v, Vertex w) const {
    if (degree_[w] != 0 || is_port(w)) return false;
    for (Vertex x = lo; x < w; ++x)
      if (x != v && degree_[x] == 0 && !is_port(x) && s_.contains(x) == s_.contains(w)) return true;
    return false;
  }

  bool is_port(Vertex v) const { return std::find(ports_.begin(), ports_.end(), v) != ports_.end(); }

  /// Enough free stubs remain to reach two detectors in N[v].
  bool can_dominate(Vertex v) const {
    VertexSet nv = adj_[v];
    nv.insert(v);
    return (nv & s_).size() + (target_[v] - degree_[v]) >= 2;
  }

  bool out_of_budget() {
    ++nodes_;
    if (budget_.nodes && nodes_ > *budget_.nodes) exhausted_ = true;
    if (budget_.seconds && (nodes_ & 0x3ff) == 0) {
      std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start_;
      if (dt.count() > *budget_.seconds) exhausted_ = true;
    }
    return exhausted_;
  }

  void extend(Vertex v, Vertex last) {
    if (found_ || exhausted_ || out_of_budget()) return;
    while (v < kOrder && complete(v)) {
      ++v;
      last = 0;
    }
    if (v == kOrder) {
      accept();
      return;
    }
    const Vertex lo = std::max<Vertex>(v + 1, last);
    for (Vertex w = lo; w < kOrder; ++w) {
      if (complete(w) || adj_[v].contains(w) || redundant(lo, v, w)) continue;
      link(v, w);
      bool ok = can_dominate(v) && can_dominate(w);
      if (complete(v)) ok = consistent(v);
      if (ok && complete(w)) ok = consistent(w);
      if (ok) extend(v, w + 1);
      unlink(v, w);
      if (found_ || exhausted_) return;
    }
  }

  void accept() {
    std::vector<Edge> edges;
    for (Vertex a = 0; a < kOrder; ++a)
      adj_[a].for_each([&](Vertex b) {
        if (a < b) edges.emplace_back(a, b);
      });
    G14Gadget gadget{Graph::from_edges(kOrder, edges), s_, ports_};
    if (!is_connected(gadget.graph)) return;
    for (std::size_t t : {2, 3}) {
      auto [ring, witness] = wire(gadget, t);
      if (!is_cubic(ring) || !is_code(ring, witness, CodeKind::red_ic)) return;
    }
    found_ = std::move(gadget);
  }

  void link(Vertex a, Vertex b) {
    adj_[a].insert(b);
    adj_[b].insert(a);
    ++degree_[a];
    ++degree_[b];
  }

  void unlink(Vertex a, Vertex b) {
    adj_[a].erase(b);
    adj_[b].erase(a);
    --degree_[a];
    --degree_[b];
  }

 public:
  static std::pair<Graph, VertexSet> wire(const G14Gadget& gadget, std::size_t t) {
    const std::size_t n = gadget.graph.order();
    std::vector<Edge> edges;
    VertexSet witness;
    for (std::size_t i = 0; i < t; ++i) {
      const std::size_t off = n * i;
      const std::size_t nxt = n * ((i + 1) % t);
      for (const auto& [u, v] : gadget.graph.edges()) edges.emplace_back(off + u, off + v);
      gadget.detectors.for_each([&](Vertex d) { witness.insert(off + d); });
      edges.emplace_back(off + gadget.ports[0], nxt + gadget.ports[2]);
      edges.emplace_back(off + gadget.ports[1], nxt + gadget.ports[3]);
    }
    return {Graph::from_edges(n * t, edges), witness};
  }

 private:
  std::array<Vertex, 4> ports_;
  Budget budget_;
  std::chrono::steady_clock::time_point start_;
  std::uint64_t& nodes_;
  VertexSet s_;
  std::array<std::size_t, kOrder> target_{};
  std::array<std::size_t, kOrder> degree_{};
  std::array<VertexSet, kOrder> adj_{};
  std::optional<G14Gadget> found_;
  bool exhausted_ = false;
};

}  // namespace detail

struct G14SearchResult {
  std::optional<G14Gadget> gadget;
  /// True when the budget ran out before a gadget was found.
  bool exhausted = false;
  std::uint64_t nodes = 0;
};

/// Backtracking search for a G14 gadget. Detectors are vertices 0..7; the
/// four ports are tried with 0..4 of them among the detectors. A candidate
/// is accepted only if its 2- and 3-copy rings are cubic and the replicated
/// detector set verifies on them.
inline G14SearchResult g14_gadget_search(const Budget& budget) {
  G14SearchResult out;
  const auto start = std::chrono::steady_clock::now();
  for (std::size_t on_detectors = 0; on_detectors <= 4; ++on_detectors) {
    std::array<Vertex, 4> ports{};
    std::size_t i = 0;
    for (std::size_t j = 0; j < on_detectors; ++j) ports[i++] = 7 - j;
    for (std::size_t j = 0; i < 4; ++j) ports[i++] = 13 - j;
    detail::G14Search s(ports, budget, start, out.nodes);
    out.gadget = s.run();
    if (out.gadget) return out;
    if (s.exhausted()) {
      out.exhausted = true;
      return out;
    }
  }
  return out;
}

/// t copies of a G14 gadget in a ring; 14t vertices, 8t detectors, which
/// meets the cubic lower bound ceil(4n/7).
inline ConstructedInstance g14_ring(const G14Gadget& gadget, std::size_t t) {
  detail::require(t >= 2, "g14_ring needs t >= 2");
  detail::require_order(gadget.graph.order() * t);
  auto [g, witness] = detail::G14Search::wire(gadget, t);
  const std::size_t k = witness.size();
  return detail::certify({g.with_tag({"g14_ring", {t}}), witness, k, Certificate::matches("cubic")});
}

// ---------------------------------------------------------------------------
// Hypercubes

/// Copies a witness on Q_d to both layers of Q_{d+1} = Q_d box P_2, where
/// vertex v of Q_d becomes 2v and 2v+1.
inline ConstructedInstance double_hypercube_witness(std::size_t d, const VertexSet& witness) {
  detail::require(d >= 1, "hypercube dimension must be >= 1");
  detail::require_order(std::size_t{1} << (d + 1));
  VertexSet doubled;
  witness.for_each([&](Vertex v) {
    doubled.insert(2 * v);
    doubled.insert(2 * v + 1);
  });
  return detail::certify({hypercube(d + 1), doubled, doubled.size(), Certificate::solver()});
}

/// A 12-detector RED:IC of Q_5 found by the exact search.
inline ConstructedInstance q5_code_search(const SolveOptions& opt = {}) {
  Graph q5 = hypercube(5);
  auto res = feasible_at(q5, CodeKind::red_ic, 12, opt);
  if (!res.witness) throw std::runtime_error("no 12-detector code found on Q_5 within budget");
  return detail::certify({q5, *res.witness, res.witness->size(), Certificate::solver()});
}

}  // namespace redic

#endif  // REDIC_CONSTRUCTIONS_HPP

#ifndef REDIC_SOLVER_HPP
#define REDIC_SOLVER_HPP

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include "redic/detection.hpp"
#include "redic/existence.hpp"
#include "redic/graph.hpp"

namespace redic {

// ---------------------------------------------------------------------------
// Bounds

struct BoundReport {
  std::size_t log_bound = 0;
  std::optional<std::size_t> tree_bound;
  std::optional<std::size_t> cubic_bound;
  std::optional<std::size_t> torus_bound;
  std::vector<std::string> notes;

  std::size_t best() const {
    std::size_t b = log_bound;
    for (const auto& o : {tree_bound, cubic_bound, torus_bound})
      if (o) b = std::max(b, *o);
    return b;
  }
};

/// Smallest b with 2^b >= x.
inline std::size_t ceil_log2(std::size_t x) {
  std::size_t b = 0;
  while ((std::size_t{1} << b) < x) ++b;
  return b;
}

/// Lower bounds on the minimum code size.
///
/// IC: ceil(log2(n+1)). RED:IC: ceil(log2(n+1)) + 1 always; ceil(4(n+1)/5)
/// on trees with n >= 4; ceil(4n/7) on 3-regular graphs; ceil(2n/5) on
/// graphs built as torus(i, j) with i, j >= 5 and i or j even.
inline BoundReport lower_bound(const Graph& g, CodeKind kind) {
  BoundReport r;
  const std::size_t n = g.order();
  if (n == 0) return r;
  r.log_bound = ceil_log2(n + 1) + (kind == CodeKind::red_ic ? 1 : 0);
  if (kind == CodeKind::ic) return r;
  if (n >= 4 && is_tree(g)) {
    r.tree_bound = (4 * (n + 1) + 4) / 5;
    r.notes.push_back("tree");
  }
  if (is_cubic(g)) {
    r.cubic_bound = (4 * n + 6) / 7;
    r.notes.push_back("cubic");
  }
  if (const auto& tag = g.tag(); tag && tag->family == "torus" && tag->params.size() == 2) {
    auto i = tag->params[0];
    auto j = tag->params[1];
    if (i >= 5 && j >= 5 && (i % 2 == 0 || j % 2 == 0)) {
      r.torus_bound = (2 * n + 4) / 5;
      r.notes.push_back("torus " + std::to_string(i) + "x" + std::to_string(j));
    }
  }
  return r;
}

/// Vertices contained in every RED:IC: leaves and supports, every neighbor
/// of a degree-3 support, and every v starting a path v-w-u with
/// deg(w) = deg(u) = 2.
inline VertexSet forced_detectors(const Graph& g) {
  if (auto e = exists_red_ic(g); !e) throw std::logic_error("forced_detectors on infeasible graph: " + e.describe());
  VertexSet f;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) != 1) continue;
    Vertex s = g.open(v).first();
    f.insert(v);
    f.insert(s);
    if (g.degree(s) == 3) f |= g.open(s);
  }
  for (Vertex w = 0; w < g.order(); ++w) {
    if (g.degree(w) != 2) continue;
    g.open(w).for_each([&](Vertex u) {
      if (g.degree(u) != 2) return;
      // path v - w - u: v is the other neighbor of w
      VertexSet others = g.open(w);
      others.erase(u);
      f |= others;
    });
  }
  return f;
}

// ---------------------------------------------------------------------------
// Outcomes

struct Budget {
  std::optional<double> seconds;
  std::optional<std::uint64_t> nodes;
};

struct SolveOptions {
  Budget budget;
  /// Single-sequence exploration; identical witness and node count per run.
  bool deterministic = true;
  /// Worker count for non-deterministic runs.
  std::size_t threads = 1;
};

struct SolveStats {
  std::uint64_t nodes = 0;
  double elapsed_seconds = 0.0;
};

struct Optimal {
  std::size_t k;
  VertexSet witness;
};

struct Bounded {
  std::size_t lower;
  std::size_t upper;
  std::optional<VertexSet> witness;
};

struct Infeasible {
  std::string reason;
};

struct SolveOutcome {
  std::variant<Optimal, Bounded, Infeasible> result;
  SolveStats stats;
  BoundReport bounds;

  bool is_optimal() const { return std::holds_alternative<Optimal>(result); }
  bool is_infeasible() const { return std::holds_alternative<Infeasible>(result); }
  bool is_bounded() const { return std::holds_alternative<Bounded>(result); }
  const Optimal& optimal() const { return std::get<Optimal>(result); }
  const Bounded& bounded() const { return std::get<Bounded>(result); }
  const Infeasible& infeasible() const { return std::get<Infeasible>(result); }
};

namespace detail {

/// |cand ∩ S| >= need
struct Constraint {
  VertexSet cand;
  std::size_t need;
};

/// Domination constraints for every vertex and distinguishing constraints
/// for every pair within distance two, with implied constraints dropped.
inline std::vector<Constraint> build_constraints(const Graph& g, CodeKind kind) {
  const auto req = thresholds(kind);
  std::vector<Constraint> raw;
  for (Vertex v = 0; v < g.order(); ++v) raw.push_back({g.closed(v), req.dom});
  for (Vertex u = 0; u < g.order(); ++u)
    second_neighborhood(g, u).for_each([&](Vertex v) {
      if (u < v) raw.push_back({g.closed(u) ^ g.closed(v), req.dist});
    });
  std::vector<bool> drop(raw.size(), false);
  for (std::size_t a = 0; a < raw.size(); ++a) {
    for (std::size_t b = 0; b < raw.size() && !drop[a]; ++b) {
      if (a == b || drop[b]) continue;
      // b implies a
      if (raw[b].need >= raw[a].need && raw[b].cand.is_subset_of(raw[a].cand)) {
        if (raw[b].cand == raw[a].cand && raw[b].need == raw[a].need && b > a) continue;
        drop[a] = true;
      }
    }
  }
  std::vector<Constraint> out;
  for (std::size_t i = 0; i < raw.size(); ++i)
    if (!drop[i]) out.push_back(raw[i]);
  return out;
}

struct Incumbent {
  std::atomic<std::size_t> size;
  std::mutex mu;
  VertexSet set;
  bool have = false;

  explicit Incumbent(std::size_t bound) : size(bound) {}

  void offer(const VertexSet& s) {
    std::lock_guard<std::mutex> lock(mu);
    if (s.size() < size.load()) {
      set = s;
      have = true;
      size.store(s.size());
    }
  }
};

struct SharedControl {
  using Clock = std::chrono::steady_clock;
  Clock::time_point start = Clock::now();
  Budget budget;
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> exhausted{false};
  std::atomic<bool> done{false};
  /// Stop as soon as the incumbent reaches this size.
  std::size_t target = 0;

  double elapsed() const { return std::chrono::duration<double>(Clock::now() - start).count(); }
};

/// Depth-first branch and bound over include/exclude decisions.
class Searcher {
 public:
  Searcher(const std::vector<Constraint>& cons, std::size_t global_lb, Incumbent& inc, SharedControl& ctl)
      : cons_(cons), global_lb_(global_lb), best_(inc), ctl_(ctl) {}

  /// Explores the subtree rooted at (inc, exc).
  void run(VertexSet inc, VertexSet exc) { dfs(inc, exc, 0); }

  /// Root bound: |inc| + dual bound after propagation, or nullopt if the
  /// root is infeasible.
  std::optional<std::size_t> root_bound(VertexSet inc, const VertexSet& exc) {
    auto& act = scratch(0);
    if (!propagate(inc, exc, act)) return std::nullopt;
    return std::max(inc.size() + ceil_bound(dual_bound(act)), global_lb_);
  }

  /// Collects open subproblems at `depth` in DFS order (for work splitting).
  void split(VertexSet inc, VertexSet exc, std::size_t depth, std::vector<std::pair<VertexSet, VertexSet>>& out) {
    auto& act = scratch(depth);
    if (!propagate(inc, exc, act)) return;
    if (act.empty()) {
      best_.offer(inc);
      return;
    }
    if (depth == 0) {
      out.emplace_back(inc, exc);
      return;
    }
    Vertex v = choose(act);
    VertexSet with = inc;
    with.insert(v);
    split(with, exc, depth - 1, out);
    exc.insert(v);
    split(inc, exc, depth - 1, out);
  }

 private:
  struct Active {
    std::size_t need;
    std::size_t size;
    VertexSet cand;
  };

  std::vector<Active>& scratch(std::size_t depth) {
    if (depth >= stack_.size()) stack_.resize(depth + 1);
    return stack_[depth];
  }

  static std::size_t ceil_bound(double x) { return x <= 1e-9 ? 0 : static_cast<std::size_t>(std::ceil(x - 1e-7)); }

  bool propagate(VertexSet& inc, const VertexSet& exc, std::vector<Active>& act) const {
    for (;;) {
      act.clear();
      bool changed = false;
      for (const auto& c : cons_) {
        std::size_t have = (c.cand & inc).size();
        if (have >= c.need) continue;
        VertexSet open = c.cand - inc - exc;
        std::size_t r = c.need - have;
        std::size_t sz = open.size();
        if (sz < r) return false;
        if (sz == r) {
          inc |= open;
          changed = true;
          continue;
        }
        act.push_back({r, sz, open});
      }
      if (!changed) return true;
    }
  }

  /// Greedy dual of the covering LP: sum of y_c * need_c with
  /// sum_{c containing x} y_c <= 1 for every vertex x.
  static double dual_bound(std::vector<Active>& act) {
    std::stable_sort(act.begin(), act.end(), [](const Active& a, const Active& b) {
      // higher need/size first
      auto l = a.need * b.size;
      auto r = b.need * a.size;
      if (l != r) return l > r;
      return a.size < b.size;
    });
    std::array<double, kMaxVertices> cap;
    cap.fill(1.0);
    double lb = 0.0;
    for (const auto& a : act) {
      double y = 1.0;
      a.cand.for_each([&](Vertex v) { y = std::min(y, cap[v]); });
      if (y <= 1e-12) continue;
      lb += y * static_cast<double>(a.need);
      a.cand.for_each([&](Vertex v) { cap[v] -= y; });
    }
    return lb;
  }

  /// Most constrained active constraint (least slack, then fewest
  /// candidates); within it, the candidate hitting the most active
  /// constraints, lowest index on ties.
  static Vertex choose(const std::vector<Active>& act) {
    std::size_t pick = 0;
    for (std::size_t i = 1; i < act.size(); ++i) {
      const auto& a = act[i];
      const auto& b = act[pick];
      auto sa = a.size - a.need;
      auto sb = b.size - b.need;
      if (sa < sb || (sa == sb && a.size < b.size)) pick = i;
    }
    std::array<std::uint32_t, kMaxVertices> hits{};
    for (const auto& a : act) a.cand.for_each([&](Vertex v) { ++hits[v]; });
    Vertex best = kMaxVertices;
    std::uint32_t best_hits = 0;
    act[pick].cand.for_each([&](Vertex v) {
      if (best == kMaxVertices || hits[v] > best_hits) {
        best = v;
        best_hits = hits[v];
      }
    });
    return best;
  }

  bool out_of_budget() {
    auto n = ctl_.nodes.fetch_add(1) + 1;
    if (ctl_.budget.nodes && n > *ctl_.budget.nodes) {
      ctl_.exhausted = true;
      return true;
    }
    if (ctl_.budget.seconds && (n & 255U) == 0 && ctl_.elapsed() > *ctl_.budget.seconds) {
      ctl_.exhausted = true;
      return true;
    }
    return false;
  }

  void dfs(VertexSet inc, VertexSet exc, std::size_t depth) {
    if (ctl_.done || ctl_.exhausted) return;
    if (out_of_budget()) return;
    auto& act = scratch(depth);
    if (!propagate(inc, exc, act)) return;
    const std::size_t base = inc.size();
    const std::size_t bound = best_.size.load();
    if (act.empty()) {
      if (base < bound) {
        best_.offer(inc);
        if (best_.size.load() <= ctl_.target) ctl_.done = true;
      }
      return;
    }
    if (base + 1 >= bound) return;
    std::size_t need = std::max(base + ceil_bound(dual_bound(act)), global_lb_);
    if (need >= bound) return;
    Vertex v = choose(act);
    VertexSet with = inc;
    with.insert(v);
    dfs(with, exc, depth + 1);
    exc.insert(v);
    dfs(inc, exc, depth + 1);
  }

  const std::vector<Constraint>& cons_;
  std::size_t global_lb_;
  Incumbent& best_;
  SharedControl& ctl_;
  std::vector<std::vector<Active>> stack_;
};

struct SearchResult {
  std::optional<VertexSet> best;
  bool complete = false;
  std::size_t root_lower = 0;
  SolveStats stats;
};

/// Finds a code of size < bound (the smallest one when run to completion),
/// stopping early once a code of size <= target is found.
inline SearchResult search(const Graph& g, CodeKind kind, VertexSet forced, std::size_t bound, std::size_t target,
                           std::size_t global_lb, const SolveOptions& opt) {
  auto cons = build_constraints(g, kind);
  Incumbent best(bound);
  SharedControl ctl;
  ctl.budget = opt.budget;
  ctl.target = target;
  SearchResult out;
  {
    Searcher root(cons, global_lb, best, ctl);
    auto rb = root.root_bound(forced, VertexSet{});
    out.root_lower = rb.value_or(bound);
    if (!rb) {
      out.complete = true;
      out.stats = {1, ctl.elapsed()};
      return out;
    }
    if (opt.deterministic || opt.threads <= 1) {
      root.run(forced, VertexSet{});
    } else {
      std::vector<std::pair<VertexSet, VertexSet>> tasks;
      root.split(forced, VertexSet{}, 6, tasks);
      std::atomic<std::size_t> next{0};
      std::vector<std::thread> pool;
      for (std::size_t t = 0; t < opt.threads; ++t) {
        pool.emplace_back([&] {
          Searcher worker(cons, global_lb, best, ctl);
          for (std::size_t i = next++; i < tasks.size(); i = next++) worker.run(tasks[i].first, tasks[i].second);
        });
      }
      for (auto& th : pool) th.join();
    }
  }
  out.complete = !ctl.exhausted || ctl.done;
  if (best.have) out.best = best.set;
  out.stats = {ctl.nodes.load(), ctl.elapsed()};
  return out;
}

}  // namespace detail

/// Exact minimum IC / RED:IC by branch and bound.
///
/// Infeasible exactly when no code exists. Otherwise the incumbent starts at
/// V(G); on budget exhaustion a Bounded outcome carries the best bounds seen.
inline SolveOutcome solve_min(const Graph& g, CodeKind kind, const SolveOptions& opt = {}) {
  SolveOutcome out;
  out.bounds = lower_bound(g, kind);
  auto exists = kind == CodeKind::ic ? exists_ic(g) : exists_red_ic(g);
  if (!exists) {
    out.result = Infeasible{exists.describe()};
    return out;
  }
  const std::size_t n = g.order();
  if (n == 0) {
    out.result = Optimal{0, VertexSet{}};
    return out;
  }
  VertexSet forced = kind == CodeKind::red_ic ? forced_detectors(g) : VertexSet{};
  const std::size_t global_lb = out.bounds.best();
  auto res = detail::search(g, kind, forced, n, global_lb, global_lb, opt);
  out.stats = res.stats;
  const VertexSet witness = res.best.value_or(VertexSet::full(n));
  if (res.complete) {
    out.result = Optimal{witness.size(), witness};
  } else {
    out.result = Bounded{std::min(std::max(global_lb, res.root_lower), witness.size()), witness.size(), witness};
  }
  return out;
}

struct FeasibleResult {
  std::optional<VertexSet> witness;
  /// True when a missing witness is a proof of nonexistence.
  bool exhaustive = true;
  SolveStats stats;
};

/// Is there a code of size <= k?
inline FeasibleResult feasible_at(const Graph& g, CodeKind kind, std::size_t k, const SolveOptions& opt = {}) {
  FeasibleResult out;
  auto exists = kind == CodeKind::ic ? exists_ic(g) : exists_red_ic(g);
  if (!exists) return out;
  const std::size_t n = g.order();
  if (k >= n) {
    out.witness = VertexSet::full(n);
    return out;
  }
  auto bounds = lower_bound(g, kind);
  if (bounds.best() > k) return out;
  VertexSet forced = kind == CodeKind::red_ic ? forced_detectors(g) : VertexSet{};
  auto res = detail::search(g, kind, forced, k + 1, k, bounds.best(), opt);
  out.stats = res.stats;
  out.witness = res.best;
  out.exhaustive = res.complete;
  return out;
}

}  // namespace redic

#endif  // REDIC_SOLVER_HPP

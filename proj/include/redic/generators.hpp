#ifndef REDIC_GENERATORS_HPP
#define REDIC_GENERATORS_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "redic/builders.hpp"
#include "redic/canonical.hpp"
#include "redic/graph.hpp"

namespace redic {

// ---------------------------------------------------------------------------
// Free trees
//
// Wright-Richmond-Odlyzko-McKay: every free tree is visited once as the
// level sequence of its canonical centre-rooted form; successors are
// produced by the Beyer-Hedetniemi rooted-tree step plus a repair that
// skips rooted trees whose root is not the centre.

namespace detail {

using LevelSequence = std::vector<int>;

inline std::optional<LevelSequence> next_rooted_tree(const LevelSequence& pred, std::optional<std::size_t> start = {}) {
  std::size_t p = 0;
  if (start) {
    p = *start;
  } else {
    p = pred.size() - 1;
    while (pred[p] == 1) --p;
  }
  if (p == 0) return std::nullopt;
  std::size_t q = p - 1;
  while (pred[q] != pred[p] - 1) --q;
  LevelSequence out = pred;
  for (std::size_t i = p; i < out.size(); ++i) out[i] = out[i - p + q];
  return out;
}

/// Splits off the subtree of the root's first child.
inline std::pair<LevelSequence, LevelSequence> split_tree(const LevelSequence& layout) {
  std::size_t m = layout.size();
  bool one_found = false;
  for (std::size_t i = 0; i < layout.size(); ++i) {
    if (layout[i] != 1) continue;
    if (one_found) {
      m = i;
      break;
    }
    one_found = true;
  }
  LevelSequence left;
  for (std::size_t i = 1; i < m; ++i) left.push_back(layout[i] - 1);
  LevelSequence rest{0};
  for (std::size_t i = m; i < layout.size(); ++i) rest.push_back(layout[i]);
  return {left, rest};
}

inline std::optional<LevelSequence> next_tree(const LevelSequence& candidate) {
  auto [left, rest] = split_tree(candidate);
  int lh = *std::max_element(left.begin(), left.end());
  int rh = *std::max_element(rest.begin(), rest.end());
  bool valid = rh >= lh;
  if (valid && rh == lh) {
    if (left.size() > rest.size()) {
      valid = false;
    } else if (left.size() == rest.size() && left > rest) {
      valid = false;
    }
  }
  if (valid) return candidate;
  const std::size_t p = left.size();
  auto next = next_rooted_tree(candidate, p);
  if (!next) return std::nullopt;
  if (candidate[p] > 2) {
    auto [new_left, new_rest] = split_tree(*next);
    int nlh = *std::max_element(new_left.begin(), new_left.end());
    auto len = static_cast<std::size_t>(nlh + 1);
    for (std::size_t i = 0; i < len; ++i) (*next)[next->size() - len + i] = static_cast<int>(i) + 1;
  }
  return next;
}

inline Graph level_sequence_to_graph(const LevelSequence& layout) {
  std::vector<Edge> edges;
  std::vector<std::size_t> stack;
  for (std::size_t i = 0; i < layout.size(); ++i) {
    if (!stack.empty()) {
      while (layout[stack.back()] >= layout[i]) stack.pop_back();
      edges.emplace_back(stack.back(), i);
    }
    stack.push_back(i);
  }
  return Graph::from_edges(layout.size(), edges);
}

}  // namespace detail

/// Restartable ordered stream of free trees on n vertices, one per
/// isomorphism class.
class FreeTreeStream {
 public:
  explicit FreeTreeStream(std::size_t n) : n_(n) {
    if (n == 0) throw std::invalid_argument("tree enumeration needs n >= 1");
    if (n > kMaxVertices) throw std::length_error("tree order exceeds supported width");
    reset();
  }

  void reset() {
    started_ = false;
    single_done_ = false;
    layout_.clear();
    for (int i = 0; i <= static_cast<int>(n_ / 2); ++i) layout_.push_back(i);
    for (int i = 1; i < static_cast<int>((n_ + 1) / 2); ++i) layout_.push_back(i);
    current_ = layout_;
  }

  std::optional<Graph> next() {
    if (n_ == 1) {
      if (single_done_) return std::nullopt;
      single_done_ = true;
      return Graph::from_edges(1, {});
    }
    if (started_) {
      if (!current_) return std::nullopt;
      current_ = detail::next_rooted_tree(*current_);
    }
    started_ = true;
    if (!current_) return std::nullopt;
    current_ = detail::next_tree(*current_);
    if (!current_) return std::nullopt;
    return detail::level_sequence_to_graph(*current_);
  }

 private:
  std::size_t n_;
  bool started_ = false;
  bool single_done_ = false;
  detail::LevelSequence layout_;
  std::optional<detail::LevelSequence> current_;
};

inline std::vector<Graph> enum_trees(std::size_t n) {
  FreeTreeStream s(n);
  std::vector<Graph> out;
  while (auto t = s.next()) out.push_back(std::move(*t));
  return out;
}

// ---------------------------------------------------------------------------
// Connected cubic graphs
//
// Labelled graphs are built in breadth-first order from vertex 0: each
// vertex in turn fills its free stubs with already-reached vertices in
// increasing order, then with fresh labels. Every connected cubic graph
// arises this way from any of its vertices, so vertex 0 is restricted to
// the maximum of a cheap local invariant. Survivors are kept once per
// canonical form; output order is by canonical graph6 key.

namespace detail {

class CubicBuilder {
 public:
  explicit CubicBuilder(std::size_t n) : n_(n), degree_(n, 0), adj_(n) {}

  std::vector<Graph> run() {
    if (n_ > 0) extend(0, 0);
    std::vector<Graph> out;
    out.reserve(seen_.size());
    for (auto& [key, g] : seen_) out.push_back(std::move(g));
    return out;
  }

 private:
  /// Triangles and 4-cycles through v, as (2*triangles, 2*4-cycles).
  std::pair<std::size_t, std::size_t> local_invariant(Vertex v) const {
    std::size_t t = 0;
    std::size_t q = 0;
    adj_[v].for_each([&](Vertex a) {
      t += (adj_[a] & adj_[v]).size();
      adj_[v].for_each([&](Vertex b) {
        if (a < b) q += (adj_[a] & adj_[b]).size() - 1;
      });
    });
    return {t, q};
  }

  bool root_is_maximal() const {
    auto r = local_invariant(0);
    for (Vertex v = 1; v < n_; ++v)
      if (local_invariant(v) > r) return false;
    return true;
  }

  void emit() {
    if (!root_is_maximal()) return;
    std::vector<Edge> edges;
    for (Vertex a = 0; a < n_; ++a)
      adj_[a].for_each([&](Vertex b) {
        if (a < b) edges.emplace_back(a, b);
      });
    Graph c = canonical_form(Graph::from_edges(n_, edges));
    seen_.emplace(write_graph6(c), std::move(c));
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

  void extend(Vertex v, Vertex last) {
    while (v < n_ && degree_[v] == 3) {
      ++v;
      last = 0;
    }
    if (v == n_) {
      if (reached_ == n_) emit();
      return;
    }
    if (v >= reached_) return;
    for (Vertex w = std::max<Vertex>(v + 1, last); w < reached_; ++w) {
      if (degree_[w] == 3 || adj_[v].contains(w)) continue;
      link(v, w);
      extend(v, w);
      unlink(v, w);
    }
    if (reached_ < n_) {
      Vertex w = reached_++;
      link(v, w);
      extend(v, w);
      unlink(v, w);
      --reached_;
    }
  }

  std::size_t n_;
  std::vector<std::size_t> degree_;
  std::vector<VertexSet> adj_;
  std::size_t reached_ = 1;
  std::map<std::string, Graph> seen_;
};

}  // namespace detail

/// Connected 3-regular graphs on n vertices up to isomorphism. Odd n or
/// n < 4 yields an empty list.
inline std::vector<Graph> enum_cubic(std::size_t n) {
  if (n > kMaxVertices) throw std::length_error("cubic order exceeds supported width");
  if (n % 2 == 1 || n < 4) return {};
  return detail::CubicBuilder(n).run();
}

}  // namespace redic

#endif  // REDIC_GENERATORS_HPP

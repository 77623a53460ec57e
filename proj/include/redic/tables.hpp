#ifndef REDIC_TABLES_HPP
#define REDIC_TABLES_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "redic/generators.hpp"
#include "redic/graph.hpp"
#include "redic/solver.hpp"

namespace redic {

/// Published counts of free trees by minimum RED:IC size.
struct TreeCounts {
  std::size_t n;
  std::size_t trees;
  std::size_t with_code;
  std::size_t at_n_minus_2;
  std::size_t at_n_minus_1;
  std::size_t at_n;
};

/// Published counts for connected cubic graphs.
struct CubicCounts {
  std::size_t n;
  std::size_t graphs;
  std::size_t with_code;
  std::size_t lowest;
  std::size_t highest;
};

inline const std::vector<TreeCounts>& expected_tree_counts() {
  static const std::vector<TreeCounts> rows{
      {4, 2, 1, 0, 0, 1},         {5, 3, 1, 0, 0, 1},          {6, 6, 2, 0, 0, 2},
      {7, 11, 3, 0, 0, 3},        {8, 23, 6, 0, 0, 6},         {9, 47, 10, 0, 3, 7},
      {10, 106, 21, 0, 4, 17},    {11, 235, 39, 0, 10, 29},    {12, 551, 82, 0, 24, 58},
      {13, 1301, 167, 0, 64, 103}, {14, 3159, 360, 13, 130, 217}, {15, 7741, 766, 29, 323, 414},
      {16, 19320, 1692, 96, 744, 852}, {17, 48629, 3726, 287, 1731, 1708},
  };
  return rows;
}

inline const std::vector<CubicCounts>& expected_cubic_counts() {
  static const std::vector<CubicCounts> rows{
      {6, 2, 2, 6, 6},          {8, 5, 4, 6, 6},          {10, 19, 14, 6, 8},       {12, 85, 63, 8, 12},
      {14, 509, 386, 8, 12},    {16, 4060, 3189, 10, 14}, {18, 41301, 33586, 11, 18}, {20, 510489, 427277, 12, 18},
  };
  return rows;
}

template <typename Row>
std::optional<Row> expected_row(const std::vector<Row>& rows, std::size_t n) {
  for (const auto& r : rows)
    if (r.n == n) return r;
  return std::nullopt;
}

/// Outcome of solving one graph of a table row.
struct GraphResult {
  bool feasible = false;
  /// Exact optimum; empty when infeasible or out of budget.
  std::optional<std::size_t> optimum;
  bool partial = false;
};

/// Solves every graph with `threads` workers; results keep input order.
inline std::vector<GraphResult> solve_all(const std::vector<Graph>& graphs, const SolveOptions& opt,
                                          std::size_t threads) {
  std::vector<GraphResult> out(graphs.size());
  SolveOptions per = opt;
  per.threads = 1;
  per.deterministic = true;
  auto work = [&](std::size_t i) {
    auto s = solve_min(graphs[i], CodeKind::red_ic, per);
    if (s.is_infeasible()) return;
    out[i].feasible = true;
    if (s.is_optimal())
      out[i].optimum = s.optimal().k;
    else
      out[i].partial = true;
  };
  threads = std::max<std::size_t>(1, threads);
  if (threads == 1) {
    for (std::size_t i = 0; i < graphs.size(); ++i) work(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < graphs.size(); i = next++) work(i);
    });
  for (auto& th : pool) th.join();
  return out;
}

struct TreeRow {
  TreeCounts counts{};
  /// Trees whose optimum is below n - 2.
  std::size_t lower = 0;
  bool partial = false;
};

inline TreeRow tree_row(std::size_t n, const SolveOptions& opt = {}, std::size_t threads = 1) {
  auto trees = enum_trees(n);
  auto res = solve_all(trees, opt, threads);
  TreeRow row;
  row.counts.n = n;
  row.counts.trees = trees.size();
  for (const auto& r : res) {
    if (!r.feasible) continue;
    ++row.counts.with_code;
    if (!r.optimum) {
      row.partial = true;
      continue;
    }
    if (*r.optimum == n)
      ++row.counts.at_n;
    else if (*r.optimum + 1 == n)
      ++row.counts.at_n_minus_1;
    else if (*r.optimum + 2 == n)
      ++row.counts.at_n_minus_2;
    else
      ++row.lower;
  }
  return row;
}

struct CubicRow {
  CubicCounts counts{};
  bool partial = false;
};

/// Row over the given cubic graphs on n vertices.
inline CubicRow cubic_row(std::size_t n, const std::vector<Graph>& graphs, const SolveOptions& opt = {},
                          std::size_t threads = 1) {
  auto res = solve_all(graphs, opt, threads);
  CubicRow row;
  row.counts.n = n;
  row.counts.graphs = graphs.size();
  for (const auto& r : res) {
    if (!r.feasible) continue;
    ++row.counts.with_code;
    if (!r.optimum) {
      row.partial = true;
      continue;
    }
    if (row.counts.lowest == 0 || *r.optimum < row.counts.lowest) row.counts.lowest = *r.optimum;
    row.counts.highest = std::max(row.counts.highest, *r.optimum);
  }
  return row;
}

inline CubicRow cubic_row(std::size_t n, const SolveOptions& opt = {}, std::size_t threads = 1) {
  return cubic_row(n, enum_cubic(n), opt, threads);
}

namespace detail {

inline void diff_field(std::vector<std::string>& out, const char* name, std::size_t got, std::size_t want) {
  if (got != want) out.push_back(std::string(name) + " " + std::to_string(got) + " != " + std::to_string(want));
}

/// "PASS", "FAIL(...)", "partial" or "-" (no published value).
inline std::string status(bool partial, bool have_expected, const std::vector<std::string>& diffs) {
  if (partial) return "partial";
  if (!have_expected) return "-";
  if (diffs.empty()) return "PASS";
  std::string s = "FAIL(";
  for (std::size_t i = 0; i < diffs.size(); ++i) s += (i ? "; " : "") + diffs[i];
  return s + ")";
}

}  // namespace detail

inline std::string row_status(const TreeRow& row) {
  auto want = expected_row(expected_tree_counts(), row.counts.n);
  std::vector<std::string> diffs;
  if (want) {
    detail::diff_field(diffs, "trees", row.counts.trees, want->trees);
    detail::diff_field(diffs, "with_red_ic", row.counts.with_code, want->with_code);
    detail::diff_field(diffs, "n-2", row.counts.at_n_minus_2, want->at_n_minus_2);
    detail::diff_field(diffs, "n-1", row.counts.at_n_minus_1, want->at_n_minus_1);
    detail::diff_field(diffs, "n", row.counts.at_n, want->at_n);
  }
  return detail::status(row.partial, want.has_value(), diffs);
}

inline std::string row_status(const CubicRow& row) {
  auto want = expected_row(expected_cubic_counts(), row.counts.n);
  std::vector<std::string> diffs;
  if (want) {
    detail::diff_field(diffs, "graphs", row.counts.graphs, want->graphs);
    detail::diff_field(diffs, "with_red_ic", row.counts.with_code, want->with_code);
    detail::diff_field(diffs, "lowest", row.counts.lowest, want->lowest);
    detail::diff_field(diffs, "highest", row.counts.highest, want->highest);
  }
  return detail::status(row.partial, want.has_value(), diffs);
}

inline std::string tree_table_header() { return "n\ttrees\twith_red_ic\tk=n-2\tk=n-1\tk=n\tk<n-2\tstatus"; }

inline std::string to_tsv(const TreeRow& r) {
  std::ostringstream s;
  s << r.counts.n << '\t' << r.counts.trees << '\t' << r.counts.with_code << '\t' << r.counts.at_n_minus_2 << '\t'
    << r.counts.at_n_minus_1 << '\t' << r.counts.at_n << '\t' << r.lower << '\t' << row_status(r);
  return s.str();
}

inline std::string cubic_table_header() { return "n\tgraphs\twith_red_ic\tlowest\thighest\tstatus"; }

inline std::string to_tsv(const CubicRow& r) {
  std::ostringstream s;
  s << r.counts.n << '\t' << r.counts.graphs << '\t' << r.counts.with_code << '\t' << r.counts.lowest << '\t'
    << r.counts.highest << '\t' << row_status(r);
  return s.str();
}

}  // namespace redic

#endif  // REDIC_TABLES_HPP

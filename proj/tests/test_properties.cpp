#include <gtest/gtest.h>

#include "redic/builders.hpp"
#include "redic/generators.hpp"
#include "redic/solver.hpp"
#include "support.hpp"

using namespace redic;

TEST(CubicGraphs, RedundantAndPlainCodesExistTogether) {
  for (std::size_t n = 4; n <= 10; n += 2)
    for (const auto& g : enum_cubic(n)) {
      const bool red = solve_min(g, CodeKind::red_ic).is_infeasible();
      const bool plain = solve_min(g, CodeKind::ic).is_infeasible();
      EXPECT_EQ(red, plain) << write_graph6(g);
      EXPECT_EQ(!red, closed_twins(g).empty()) << write_graph6(g);
    }
}

TEST(CubicGraphs, SharesAndDensity) {
  for (std::size_t n = 6; n <= 12; n += 2)
    for (const auto& g : enum_cubic(n)) {
      auto s = solve_min(g, CodeKind::red_ic);
      if (s.is_infeasible()) continue;
      ASSERT_TRUE(s.is_optimal());
      const auto& w = s.optimal().witness;
      EXPECT_GE(7 * s.optimal().k, 4 * n) << write_graph6(g);
      Rational total{0};
      w.for_each([&](Vertex x) {
        const Rational sh = share(g, w, x);
        EXPECT_LE(sh, Rational(7, 4)) << write_graph6(g) << " detector " << x;
        total += sh;
      });
      EXPECT_EQ(total, Rational(static_cast<long long>(n)));
    }
}

TEST(Trees, OptimaRespectBounds) {
  for (std::size_t n = 4; n <= 12; ++n)
    for (const auto& t : enum_trees(n)) {
      auto s = solve_min(t, CodeKind::red_ic);
      EXPECT_EQ(s.is_infeasible(), !exists_red_ic_tree(t).yes());
      if (!s.is_optimal()) continue;
      const std::size_t k = s.optimal().k;
      EXPECT_GE(5 * k, 4 * (n + 1));
      EXPECT_LE(k, n);
      EXPECT_LE(n + 1, std::size_t{1} << (k - 1));
    }
}

TEST(AllSmallGraphs, SolverMatchesExhaustiveSearch) {
  for (std::size_t n = 1; n <= 6; ++n) {
    std::vector<Edge> slots;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v) slots.emplace_back(u, v);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
      std::vector<Edge> edges;
      for (std::size_t i = 0; i < slots.size(); ++i)
        if ((mask >> i) & 1U) edges.push_back(slots[i]);
      Graph g = Graph::from_edges(n, edges);
      for (auto kind : {CodeKind::ic, CodeKind::red_ic}) {
        auto want = fixtures::brute_force_min(g, kind);
        auto got = solve_min(g, kind);
        if (!want) {
          ASSERT_TRUE(got.is_infeasible()) << write_graph6(g);
        } else {
          ASSERT_TRUE(got.is_optimal()) << write_graph6(g);
          ASSERT_EQ(got.optimal().k, *want) << write_graph6(g) << " " << to_string(kind);
        }
      }
    }
  }
}

TEST(Products, LadderAndCylinderTwoThirds) {
  for (std::size_t j = 4; j <= 9; ++j) {
    const std::size_t want = (4 * j + 2) / 3;
    auto l = solve_min(ladder_graph(j), CodeKind::red_ic);
    auto c = solve_min(cylinder_graph(j), CodeKind::red_ic);
    ASSERT_TRUE(l.is_optimal());
    ASSERT_TRUE(c.is_optimal());
    EXPECT_EQ(l.optimal().k, want) << "ladder " << j;
    EXPECT_EQ(c.optimal().k, want) << "cylinder " << j;
  }
}

TEST(Products, TorusMeetsTaggedBound) {
  auto s = solve_min(torus_graph(5, 6), CodeKind::red_ic);
  ASSERT_TRUE(s.is_optimal());
  EXPECT_GE(s.optimal().k, 12U);
  EXPECT_EQ(s.bounds.torus_bound, std::optional<std::size_t>(12));
}

TEST(RandomGraphs, IdentifyingCodeWithinRedundantCode) {
  fixtures::Rng rng(99);
  for (int i = 0; i < 150; ++i) {
    Graph g = fixtures::random_connected(4 + rng() % 8, 0.2, rng);
    auto red = solve_min(g, CodeKind::red_ic);
    if (!red.is_optimal()) continue;
    EXPECT_FALSE(verify(g, red.optimal().witness, CodeKind::ic));
    red.optimal().witness.for_each([&](Vertex x) {
      VertexSet less = red.optimal().witness;
      less.erase(x);
      EXPECT_FALSE(verify(g, less, CodeKind::ic));
    });
  }
}

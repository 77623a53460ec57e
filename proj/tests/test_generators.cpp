#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "redic/builders.hpp"
#include "redic/canonical.hpp"
#include "redic/generators.hpp"
#include "redic/graph_io.hpp"
#include "support.hpp"

using namespace redic;

namespace {

void expect_pairwise_non_isomorphic(const std::vector<Graph>& graphs) {
  std::set<std::vector<std::uint64_t>> keys;
  for (const auto& g : graphs) EXPECT_TRUE(keys.insert(fixtures::brute_force_canonical(g)).second) << write_graph6(g);
}

Graph shuffled(const Graph& g, fixtures::Rng& rng) {
  std::vector<Vertex> perm(g.order());
  for (Vertex v = 0; v < g.order(); ++v) perm[v] = v;
  std::shuffle(perm.begin(), perm.end(), rng);
  return relabel(g, perm);
}

}  // namespace

TEST(EnumTrees, Counts) {
  const std::vector<std::size_t> want{1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159, 7741, 19320, 48629};
  for (std::size_t n = 1; n <= want.size(); ++n) EXPECT_EQ(enum_trees(n).size(), want[n - 1]) << "n=" << n;
}

TEST(EnumTrees, FourVertices) {
  auto trees = enum_trees(4);
  ASSERT_EQ(trees.size(), 2U);
  std::multiset<std::size_t> max_degrees;
  for (const auto& t : trees) {
    EXPECT_TRUE(is_tree(t));
    auto d = degrees(t);
    max_degrees.insert(*std::max_element(d.begin(), d.end()));
  }
  EXPECT_EQ(max_degrees, (std::multiset<std::size_t>{2, 3}));
}

TEST(EnumTrees, AllTreesAndPairwiseDistinct) {
  for (std::size_t n = 1; n <= 9; ++n) {
    auto trees = enum_trees(n);
    for (const auto& t : trees) EXPECT_TRUE(is_tree(t));
    expect_pairwise_non_isomorphic(trees);
  }
}

TEST(EnumTrees, StreamRestarts) {
  FreeTreeStream s(8);
  std::vector<std::string> first, second;
  while (auto t = s.next()) first.push_back(write_graph6(*t));
  s.reset();
  while (auto t = s.next()) second.push_back(write_graph6(*t));
  EXPECT_EQ(first, second);
  EXPECT_EQ(first.size(), 23U);
  EXPECT_THROW(FreeTreeStream(0), std::invalid_argument);
  EXPECT_THROW(FreeTreeStream(kMaxVertices + 1), std::length_error);
}

TEST(EnumCubic, Counts) {
  EXPECT_EQ(enum_cubic(4).size(), 1U);
  EXPECT_EQ(enum_cubic(6).size(), 2U);
  EXPECT_EQ(enum_cubic(8).size(), 5U);
  EXPECT_EQ(enum_cubic(10).size(), 19U);
  EXPECT_EQ(enum_cubic(12).size(), 85U);
  EXPECT_EQ(enum_cubic(14).size(), 509U);
}

TEST(EnumCubic, OddAndTiny) {
  EXPECT_TRUE(enum_cubic(7).empty());
  EXPECT_TRUE(enum_cubic(2).empty());
  EXPECT_THROW(enum_cubic(kMaxVertices + 2), std::length_error);
}

TEST(EnumCubic, SixVertices) {
  auto g = enum_cubic(6);
  ASSERT_EQ(g.size(), 2U);
  int bipartite = 0;
  for (const auto& h : g) bipartite += is_bipartite(h);
  EXPECT_EQ(bipartite, 1);
}

TEST(EnumCubic, ConnectedCubicAndDistinct) {
  for (std::size_t n = 4; n <= 8; n += 2) expect_pairwise_non_isomorphic(enum_cubic(n));
  for (std::size_t n = 4; n <= 12; n += 2) {
    std::set<std::string> keys;
    for (const auto& g : enum_cubic(n)) {
      EXPECT_TRUE(is_cubic(g));
      EXPECT_TRUE(is_connected(g));
      EXPECT_TRUE(keys.insert(canonical_key(g)).second);
    }
  }
}

TEST(EnumCubic, DeterministicOrder) {
  auto a = enum_cubic(10);
  auto b = enum_cubic(10);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i], b[i]);
}

TEST(Canonical, InvariantUnderRelabelling) {
  fixtures::Rng rng(3);
  for (int i = 0; i < 200; ++i) {
    Graph g = fixtures::random_graph(1 + rng() % 9, 0.4, rng);
    Graph h = shuffled(g, rng);
    EXPECT_EQ(canonical_key(g), canonical_key(h));
    if (g.order() <= 7) {
      EXPECT_EQ(fixtures::brute_force_canonical(g), fixtures::brute_force_canonical(h));
    }
  }
  for (const auto& g : {hypercube(4), honeycomb_torus(4, 6), torus_graph(5, 5)})
    EXPECT_EQ(canonical_key(g), canonical_key(shuffled(g, rng)));
}

TEST(Canonical, SeparatesNonIsomorphic) {
  fixtures::Rng rng(4);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = 1 + rng() % 7;
    Graph g = fixtures::random_graph(n, 0.5, rng);
    Graph h = fixtures::random_graph(n, 0.5, rng);
    EXPECT_EQ(canonical_key(g) == canonical_key(h),
              fixtures::brute_force_canonical(g) == fixtures::brute_force_canonical(h));
  }
}

TEST(Graph6Stream, Examples) {
  std::istringstream five("Cl\nCs\nC~\nD?{\nEr?G\n");
  EXPECT_EQ(read_graph6_stream(five).graphs.size(), 5U);
  std::istringstream empty("");
  EXPECT_TRUE(read_graph6_stream(empty).graphs.empty());
  std::istringstream corrupt("Cl\nCs\nC\x1e\nC~\n");
  try {
    read_graph6_stream(corrupt, true);
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3U);
  }
  std::istringstream lenient("Cl\nCs\nC\x1e\nC~\n");
  auto r = read_graph6_stream(lenient, false);
  EXPECT_EQ(r.graphs.size(), 3U);
  ASSERT_EQ(r.errors.size(), 1U);
  EXPECT_EQ(r.errors[0].line(), 3U);
}

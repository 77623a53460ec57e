#include <gtest/gtest.h>

#include "redic/builders.hpp"
#include "redic/tables.hpp"

using namespace redic;

TEST(ExpectedData, Rows) {
  auto t9 = expected_row(expected_tree_counts(), 9);
  ASSERT_TRUE(t9.has_value());
  EXPECT_EQ(t9->trees, 47U);
  EXPECT_EQ(t9->with_code, 10U);
  EXPECT_EQ(t9->at_n_minus_1, 3U);
  EXPECT_EQ(t9->at_n, 7U);
  EXPECT_FALSE(expected_row(expected_tree_counts(), 18).has_value());
  auto c16 = expected_row(expected_cubic_counts(), 16);
  ASSERT_TRUE(c16.has_value());
  EXPECT_EQ(c16->graphs, 4060U);
  EXPECT_EQ(c16->with_code, 3189U);
  for (const auto& r : expected_tree_counts()) EXPECT_EQ(r.at_n_minus_2 + r.at_n_minus_1 + r.at_n, r.with_code);
}

TEST(TreeRow, MatchesPublishedCounts) {
  for (std::size_t n = 4; n <= 12; ++n) {
    auto row = tree_row(n);
    EXPECT_EQ(row_status(row), "PASS") << to_tsv(row);
    EXPECT_EQ(row.lower, 0U);
  }
  auto r12 = tree_row(12);
  EXPECT_EQ(r12.counts.trees, 551U);
  EXPECT_EQ(r12.counts.with_code, 82U);
  EXPECT_EQ(r12.counts.at_n_minus_1, 24U);
  EXPECT_EQ(r12.counts.at_n, 58U);
}

TEST(TreeRow, FirstNMinusTwo) {
  auto r = tree_row(14);
  EXPECT_EQ(r.counts.at_n_minus_2, 13U);
  EXPECT_EQ(row_status(r), "PASS");
}

TEST(CubicRow, MatchesPublishedCounts) {
  for (std::size_t n = 6; n <= 12; n += 2) {
    auto row = cubic_row(n);
    EXPECT_EQ(row_status(row), "PASS") << to_tsv(row);
  }
  auto r10 = cubic_row(10);
  EXPECT_EQ(r10.counts.graphs, 19U);
  EXPECT_EQ(r10.counts.with_code, 14U);
  EXPECT_EQ(r10.counts.lowest, 6U);
  EXPECT_EQ(r10.counts.highest, 8U);
  auto r12 = cubic_row(12);
  EXPECT_EQ(r12.counts.lowest, 8U);
  EXPECT_GE(r12.counts.lowest, (4 * 12 + 6) / 7);
}

TEST(RowStatus, Failures) {
  auto row = cubic_row(8, {complete_graph(4)});
  EXPECT_EQ(row_status(row), "FAIL(graphs 1 != 5; with_red_ic 0 != 4; lowest 0 != 6; highest 0 != 6)");
  TreeRow unknown;
  unknown.counts.n = 40;
  EXPECT_EQ(row_status(unknown), "-");
}

TEST(RowStatus, PartialUnderBudget) {
  SolveOptions opt;
  opt.budget.nodes = 1;
  auto row = cubic_row(12, opt);
  EXPECT_TRUE(row.partial);
  EXPECT_EQ(row_status(row), "partial");
}

TEST(Tsv, Format) {
  auto row = tree_row(9);
  EXPECT_EQ(tree_table_header(), "n\ttrees\twith_red_ic\tk=n-2\tk=n-1\tk=n\tk<n-2\tstatus");
  EXPECT_EQ(to_tsv(row), "9\t47\t10\t0\t3\t7\t0\tPASS");
  EXPECT_EQ(to_tsv(cubic_row(6)), "6\t2\t2\t6\t6\tPASS");
}

TEST(SolveAll, OrderIndependentOfThreads) {
  auto graphs = enum_cubic(10);
  auto one = solve_all(graphs, {}, 1);
  auto four = solve_all(graphs, {}, 4);
  ASSERT_EQ(one.size(), four.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    EXPECT_EQ(one[i].feasible, four[i].feasible);
    EXPECT_EQ(one[i].optimum, four[i].optimum);
  }
}

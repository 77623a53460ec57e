#include <gtest/gtest.h>

#include <fstream>
#include <nlohmann/json.hpp>

#include "redic/reduction.hpp"

using namespace redic;

namespace {

const char* const kFigureFormula =
    "c four clauses over five variables\n"
    "p cnf 5 4\n"
    "1 2 3 0\n"
    "1 2 -3 0\n"
    "2 -4 5 0\n"
    "2 -4 -5 0\n";

const GadgetSpec& f_gadget() {
  static const GadgetSpec g = *find_f_gadget().gadget;
  return g;
}

const GadgetSpec& h_gadget() {
  static const GadgetSpec g = find_h_gadget();
  return g;
}

CnfFormula unsat_core() {
  CnfFormula f{3, {}};
  for (int p = 0; p < 8; ++p)
    f.clauses.push_back({(p & 1) ? -1 : 1, (p & 2) ? -2 : 2, (p & 4) ? -3 : 3});
  return f;
}

}  // namespace

TEST(Dimacs, Parses) {
  auto f = parse_dimacs("p cnf 3 1\n1 2 3 0\n");
  EXPECT_EQ(f.variables, 3U);
  ASSERT_EQ(f.clauses.size(), 1U);
  EXPECT_EQ(f.clauses[0], (Clause{1, 2, 3}));
  auto g = parse_dimacs(kFigureFormula);
  EXPECT_EQ(g.variables, 5U);
  EXPECT_EQ(g.clauses.size(), 4U);
  EXPECT_EQ(g.clauses[3], (Clause{2, -4, -5}));
  auto multi = parse_dimacs("p cnf 4 2\n1 -2\n3 0 2 3 4\n0\n");
  EXPECT_EQ(multi.clauses.size(), 2U);
}

TEST(Dimacs, RoundTrip) {
  auto f = parse_dimacs(kFigureFormula);
  auto g = parse_dimacs(write_dimacs(f));
  EXPECT_EQ(g.variables, f.variables);
  EXPECT_EQ(g.clauses, f.clauses);
}

TEST(Dimacs, Errors) {
  EXPECT_THROW(parse_dimacs("p cnf 3 1\n1 -1 2 0\n"), ParseError);
  EXPECT_THROW(parse_dimacs("p cnf 3 1\n1 2 0\n"), ParseError);
  EXPECT_THROW(parse_dimacs("p dnf 3 1\n1 2 3 0\n"), ParseError);
  EXPECT_THROW(parse_dimacs("1 2 3 0\n"), ParseError);
  EXPECT_THROW(parse_dimacs("p cnf 3 1\n1 2 x 0\n"), ParseError);
  EXPECT_THROW(parse_dimacs("p cnf 3 1\n1 2 4 0\n"), ParseError);
  EXPECT_THROW(parse_dimacs("p cnf 3 1\n1 2 3\n"), ParseError);
  EXPECT_THROW(parse_dimacs("p cnf 3 2\n1 2 3 0\n"), ParseError);
  try {
    parse_dimacs("p cnf 3 2\n1 2 3 0\n1 2 0\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3U);
  }
}

TEST(BruteForceSat, Examples) {
  EXPECT_TRUE(brute_force_sat(parse_dimacs("p cnf 3 1\n1 2 3 0\n")));
  EXPECT_FALSE(brute_force_sat(unsat_core()));
  EXPECT_TRUE(brute_force_sat(parse_dimacs(kFigureFormula)));
  CnfFormula big{25, {{1, 2, 3}}};
  EXPECT_THROW(brute_force_sat(big), std::invalid_argument);
}

TEST(ClauseGadget, Star) {
  const auto& h = h_gadget();
  const Vertex a = h.role("a"), b = h.role("b"), c = h.role("c");
  EXPECT_EQ(h.graph.order(), 3U);
  EXPECT_EQ(h.graph.edge_count(), 2U);
  EXPECT_TRUE(h.graph.adjacent(c, a));
  EXPECT_TRUE(h.graph.adjacent(c, b));
  EXPECT_EQ(h.ports, std::vector<Vertex>{c});
  const VertexSet s = h.forced;
  EXPECT_EQ(domination(h.graph, s, a), 2U);
  EXPECT_EQ(domination(h.graph, s, b), 2U);
  EXPECT_EQ(domination(h.graph, s, c), 3U);
  EXPECT_EQ(delta(h.graph, s, a, c).size(), 1U);
  EXPECT_EQ(delta(h.graph, s, b, c).size(), 1U);

  Graph ext = Graph::from_edges(4, {{0, 2}, {1, 2}, {2, 3}});
  const VertexSet with_port = s | VertexSet{3};
  EXPECT_EQ(domination(ext, with_port, c), 4U);
  for (Vertex u = 0; u < 3; ++u)
    for (Vertex v = u + 1; v < 3; ++v) EXPECT_GE(delta(ext, with_port, u, v).size(), 2U);
}

TEST(VariableGadget, MatchesGolden) {
  std::ifstream in(REDIC_GOLDEN_DIR "/f_gadget.json");
  ASSERT_TRUE(in.good());
  auto golden = nlohmann::json::parse(in);
  const auto& f = f_gadget();
  EXPECT_EQ(f.graph.order(), golden["order"].get<std::size_t>());
  EXPECT_EQ(f.graph.labels(), golden["labels"].get<std::vector<std::string>>());
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (const auto& e : golden["edges"]) edges.emplace_back(e[0].get<Vertex>(), e[1].get<Vertex>());
  EXPECT_EQ(f.graph.edges(), edges);
  EXPECT_EQ(f.ports, golden["ports"].get<std::vector<Vertex>>());
  EXPECT_EQ(f.forced.to_vector(), golden["forced"].get<std::vector<Vertex>>());
  std::vector<std::pair<Vertex, Vertex>> deficient;
  for (const auto& e : golden["deficient"]) deficient.emplace_back(e[0].get<Vertex>(), e[1].get<Vertex>());
  EXPECT_EQ(f.deficient, deficient);
}

TEST(VariableGadget, Checklist) {
  const auto& f = f_gadget();
  EXPECT_EQ(f.graph.order(), 8U);
  EXPECT_EQ(f.graph.edge_count(), 8U);
  EXPECT_EQ(f.forced.size(), 6U);
  auto checks = check_variable_gadget(f.graph);
  EXPECT_TRUE(checks.accepted());
  EXPECT_TRUE(checks.dominated);
  EXPECT_TRUE(checks.deficient_by_one);
  EXPECT_TRUE(checks.repaired_by_x);
  EXPECT_TRUE(checks.repaired_by_xbar);
  EXPECT_EQ(f.graph.closed(f.role("x")) ^ f.graph.closed(f.role("xbar")), (VertexSet{f.role("x"), f.role("xbar")}));
}

TEST(VariableGadget, BudgetExhaustion) {
  Budget tiny;
  tiny.nodes = 3;
  auto r = find_f_gadget(tiny);
  EXPECT_FALSE(r.gadget.has_value());
  EXPECT_TRUE(r.exhausted);
}

TEST(BuildReduction, Counts) {
  auto fig = build_reduction(parse_dimacs(kFigureFormula), f_gadget(), h_gadget());
  EXPECT_EQ(fig.graph.order(), 52U);
  EXPECT_EQ(fig.graph.edge_count(), 60U);
  EXPECT_EQ(fig.k, 47U);
  auto one = build_reduction(parse_dimacs("p cnf 3 1\n1 2 3 0\n"), f_gadget(), h_gadget());
  EXPECT_EQ(one.graph.order(), 27U);
  EXPECT_EQ(one.graph.edge_count(), 29U);
  EXPECT_EQ(one.k, 24U);
  EXPECT_THROW(build_reduction(CnfFormula{3, {}}, f_gadget(), h_gadget()), std::invalid_argument);
  EXPECT_THROW(build_reduction(CnfFormula{2, {{1, 2, 3}}}, f_gadget(), h_gadget()), std::invalid_argument);
}

TEST(BuildReduction, LabelsAndWiring) {
  auto r = build_reduction(parse_dimacs(kFigureFormula), f_gadget(), h_gadget());
  EXPECT_EQ(r.graph.label(r.literals[0].first), "x_1");
  EXPECT_EQ(r.graph.label(r.literals[3].second), "xbar_4");
  EXPECT_EQ(r.graph.label(r.clause_ports[2]), "c_3");
  EXPECT_TRUE(r.graph.adjacent(r.clause_ports[2], r.literals[3].second));
  EXPECT_TRUE(r.graph.adjacent(r.clause_ports[2], r.literals[4].first));
  EXPECT_FALSE(r.graph.adjacent(r.clause_ports[2], r.literals[4].second));
  EXPECT_EQ(r.forced.size(), 6U * 5 + 3U * 4);
  EXPECT_TRUE(r.forced.is_subset_of(forced_detectors(r.graph)));
}

TEST(BuildReduction, AssignmentCodes) {
  auto f = parse_dimacs(kFigureFormula);
  auto r = build_reduction(f, f_gadget(), h_gadget());
  for (std::uint64_t a = 0; a < 32; ++a) {
    bool sat = true;
    for (const auto& c : f.clauses) {
      bool any = false;
      for (Literal l : c) any = any || (((a >> (std::abs(l) - 1)) & 1U) == (l > 0 ? 1U : 0U));
      sat = sat && any;
    }
    auto code = assignment_code(r, a);
    EXPECT_EQ(code.size(), r.k);
    EXPECT_EQ(!verify(r.graph, code, CodeKind::red_ic), sat) << a;
  }
}

TEST(VerifyReduction, Examples) {
  auto one = verify_reduction(parse_dimacs("p cnf 3 1\n1 2 3 0\n"), f_gadget(), h_gadget());
  EXPECT_TRUE(one.satisfiable);
  ASSERT_TRUE(one.conclusive());
  EXPECT_EQ(*one.optimum, 24U);
  EXPECT_TRUE(one.holds());

  auto fig = verify_reduction(parse_dimacs(kFigureFormula), f_gadget(), h_gadget());
  ASSERT_TRUE(fig.conclusive());
  EXPECT_EQ(*fig.optimum, 47U);
  EXPECT_TRUE(fig.holds());

  auto core = verify_reduction(unsat_core(), f_gadget(), h_gadget());
  EXPECT_FALSE(core.satisfiable);
  ASSERT_TRUE(core.conclusive());
  EXPECT_GE(*core.optimum, 46U);
  EXPECT_TRUE(core.holds());
}

TEST(VerifyReduction, RequiresEveryVariable) {
  EXPECT_THROW(verify_reduction(CnfFormula{4, {{1, 2, 3}}}, f_gadget(), h_gadget()), std::invalid_argument);
}

TEST(VerifyReduction, InconclusiveOnBudget) {
  SolveOptions opt;
  opt.budget.nodes = 1;
  auto rep = verify_reduction(unsat_core(), f_gadget(), h_gadget(), opt);
  EXPECT_FALSE(rep.conclusive());
  EXPECT_FALSE(rep.holds());
}

TEST(VerifyReduction, ThreeVariableSweep) {
  auto all = three_variable_formulas(4);
  EXPECT_EQ(all.size(), 8U + 36U + 120U + 330U);
  for (const auto& f : all) {
    auto rep = verify_reduction(f, f_gadget(), h_gadget());
    EXPECT_TRUE(rep.holds()) << write_dimacs(f);
  }
}

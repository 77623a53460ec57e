#include <CLI11.hpp>
#include <iostream>

#include "redic/cli.hpp"

namespace {

using namespace redic;

void add_graph_options(CLI::App* cmd, cli::GraphSource& src) {
  cmd->add_option("--graph6", src.graph6_file, "graph6 file, first graph is used ('-' for stdin)");
  cmd->add_option("--g6", src.graph6_string, "graph6 string");
  cmd->add_option("--edgelist", src.edgelist_file, "edge list file: 'n m' header then one edge per line");
  cmd->add_option("--family", src.family,
                  "named family: path, cycle, star, complete, complete_multipartite, hypercube, ladder, cylinder, "
                  "torus, honeycomb_torus");
  cmd->add_option("--params", src.params, "family parameters")->delimiter(',');
}

void add_common_options(CLI::App* cmd, cli::Common& c, std::string& kind) {
  cmd->add_option("--kind", kind, "code kind")->check(CLI::IsMember({"ic", "red-ic"}));
  cmd->add_option("--budget-seconds", c.budget_seconds, "wall-clock budget per search")->check(CLI::PositiveNumber);
  cmd->add_option("--budget-nodes", c.budget_nodes, "node budget per search")->check(CLI::PositiveNumber);
  cmd->add_option("--threads", c.threads, "worker threads")->check(CLI::Range(1, 256));
  cmd->add_flag("--deterministic", c.deterministic, "single-sequence search with reproducible output");
  cmd->add_flag("--json", c.json, "JSON report");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Identifying codes and redundant identifying codes on graphs"};
  app.require_subcommand(1);

  cli::GraphSource src;
  cli::Common common;
  std::string kind = "red-ic";

  auto* verify = app.add_subcommand("verify", "check a detector set");
  add_graph_options(verify, src);
  add_common_options(verify, common, kind);
  std::string detectors;
  std::optional<std::string> detectors_file;
  verify->add_option("--detectors", detectors, "vertex indices, e.g. 0,1,2");
  verify->add_option("--detectors-file", detectors_file, "file of vertex indices");

  auto* solve = app.add_subcommand("solve", "minimum code by branch and bound");
  add_graph_options(solve, src);
  add_common_options(solve, common, kind);

  auto* exists = app.add_subcommand("exists", "decide whether a code exists");
  add_graph_options(exists, src);
  add_common_options(exists, common, kind);

  std::size_t min_n = 4;
  std::size_t max_n = 0;
  auto* table1 = app.add_subcommand("table1", "tree counts by minimum RED:IC size");
  add_common_options(table1, common, kind);
  table1->add_option("--min-n", min_n, "first order");
  table1->add_option("--max-n", max_n, "last order")->required();

  std::optional<std::string> table2_graph6;
  auto* table2 = app.add_subcommand("table2", "cubic graph counts and extreme RED:IC sizes");
  add_common_options(table2, common, kind);
  table2->add_option("--min-n", min_n, "first order");
  table2->add_option("--max-n", max_n, "last order")->required();
  table2->add_option("--graph6", table2_graph6, "read cubic graphs from a graph6 file instead of enumerating");

  std::string family;
  std::optional<std::size_t> param;
  auto* construct = app.add_subcommand("construct", "extremal family with its witness");
  add_common_options(construct, common, kind);
  construct->add_option("family", family,
                        "star-even, star-odd, cycle-odd, multipartite, tree, g6-ring, g14-ring, q5, hypercube-double")
      ->required();
  construct->add_option("--param", param, "family parameter (k, n, t or d)");

  std::string cnf;
  std::optional<std::string> sidecar;
  bool check = false;
  auto* reduce = app.add_subcommand("reduce", "3-SAT to RED:IC reduction");
  add_common_options(reduce, common, kind);
  reduce->add_option("cnf", cnf, "DIMACS CNF file ('-' for stdin)")->required();
  reduce->add_option("--sidecar", sidecar, "write role names and K as JSON");
  reduce->add_flag("--check", check, "solve the instance and compare with brute-force satisfiability");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : cli::usage;
  }

  try {
    common.kind = parse_code_kind(kind);
    if (*verify) {
      if (detectors_file) detectors += " " + cli::read_file(*detectors_file);
      return cli::cmd_verify(src, detectors, common, std::cout);
    }
    if (*solve) return cli::cmd_solve(src, common, std::cout);
    if (*exists) return cli::cmd_exists(src, common, std::cout);
    if (*table1) return cli::cmd_table1(min_n, max_n, common, std::cout);
    if (*table2) return cli::cmd_table2(min_n, max_n, table2_graph6, common, std::cout);
    if (*construct) return cli::cmd_construct(family, param, common, std::cout);
    if (*reduce) return cli::cmd_reduce(cnf, sidecar, check, common, std::cout);
  } catch (const cli::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::usage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::failed;
  }
  return cli::usage;
}

#ifndef REDIC_CLI_HPP
#define REDIC_CLI_HPP

#include <cctype>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <nlohmann/json.hpp>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "redic/builders.hpp"
#include "redic/constructions.hpp"
#include "redic/detection.hpp"
#include "redic/existence.hpp"
#include "redic/graph.hpp"
#include "redic/graph_io.hpp"
#include "redic/reduction.hpp"
#include "redic/solver.hpp"
#include "redic/tables.hpp"

namespace redic::cli {

using Json = nlohmann::ordered_json;

enum Exit : int { ok = 0, failed = 1, usage = 2 };

/// Raised for unreadable or malformed input; maps to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GraphSource {
  std::optional<std::string> graph6_file;
  std::optional<std::string> graph6_string;
  std::optional<std::string> edgelist_file;
  std::optional<std::string> family;
  std::vector<std::size_t> params;
};

struct Common {
  CodeKind kind = CodeKind::red_ic;
  std::optional<double> budget_seconds;
  std::optional<std::uint64_t> budget_nodes;
  std::size_t threads = 1;
  bool deterministic = false;
  bool json = false;

  SolveOptions solve_options() const {
    SolveOptions o;
    o.budget.seconds = budget_seconds;
    o.budget.nodes = budget_nodes;
    o.threads = threads;
    o.deterministic = deterministic || threads <= 1;
    return o;
  }
};

/// 64-bit FNV-1a, hex encoded.
inline std::string fnv1a(const std::string& data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream s;
  s << std::hex;
  s.width(16);
  s.fill('0');
  s << h;
  return s.str();
}

inline std::string digest(const Graph& g) { return fnv1a(write_graph6(g)); }

inline std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream s;
    s << std::cin.rdbuf();
    return s.str();
  }
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline Graph load_graph(const GraphSource& src) {
  const int given = src.graph6_file.has_value() + src.graph6_string.has_value() + src.edgelist_file.has_value() +
                    src.family.has_value();
  if (given != 1) throw InputError("give exactly one of --graph6, --g6, --edgelist, --family");
  try {
    if (src.family) return named_builder(*src.family, src.params);
    if (src.graph6_string) return parse_graph6(*src.graph6_string);
    if (src.graph6_file) {
      std::istringstream in(read_file(*src.graph6_file));
      auto res = read_graph6_stream(in, true);
      if (res.graphs.empty()) throw InputError("no graph in '" + *src.graph6_file + "'");
      return res.graphs.front();
    }
    std::istringstream in(read_file(*src.edgelist_file));
    return parse_edge_list(in);
  } catch (const ParseError& e) {
    throw InputError(std::string("parse error at line ") + std::to_string(e.line()) + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  } catch (const std::length_error& e) {
    throw InputError(e.what());
  }
}

/// Vertex indices separated by anything that is not a digit.
inline VertexSet parse_vertex_list(const std::string& text, std::size_t n) {
  VertexSet s;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == '-' && i + 1 < text.size() && std::isdigit(static_cast<unsigned char>(text[i + 1])))
      throw InputError("negative vertex index");
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    const auto v = std::stoull(text.substr(i, j - i));
    if (v >= n) throw InputError("vertex " + std::to_string(v) + " out of range for n=" + std::to_string(n));
    s.insert(static_cast<Vertex>(v));
    i = j;
  }
  return s;
}

inline Json witness_json(const VertexSet& s) {
  Json a = Json::array();
  s.for_each([&](Vertex v) { a.push_back(v); });
  return a;
}

inline std::string witness_text(const VertexSet& s) {
  std::string out;
  s.for_each([&](Vertex v) { out += (out.empty() ? "" : " ") + std::to_string(v); });
  return out;
}

inline Json bounds_json(const BoundReport& b) {
  Json j;
  j["log_bound"] = b.log_bound;
  j["tree_bound"] = b.tree_bound ? Json(*b.tree_bound) : Json(nullptr);
  j["cubic_bound"] = b.cubic_bound ? Json(*b.cubic_bound) : Json(nullptr);
  j["torus_bound"] = b.torus_bound ? Json(*b.torus_bound) : Json(nullptr);
  j["best"] = b.best();
  j["notes"] = b.notes;
  return j;
}

inline Json stats_json(const SolveStats& s) { return Json{{"nodes", s.nodes}, {"elapsed_seconds", s.elapsed_seconds}}; }

/// Report skeleton with the fixed field order.
inline Json report(const std::string& command, const std::string& input_digest) {
  Json j;
  j["command"] = command;
  j["input_digest"] = input_digest;
  j["outcome"] = nullptr;
  j["k"] = nullptr;
  j["witness"] = nullptr;
  j["bounds"] = nullptr;
  j["stats"] = nullptr;
  return j;
}

// ---------------------------------------------------------------------------

inline int cmd_verify(const GraphSource& src, const std::string& detectors, const Common& c, std::ostream& out) {
  Graph g = load_graph(src);
  VertexSet s = parse_vertex_list(detectors, g.order());
  auto v = verify(g, s, c.kind);
  if (c.json) {
    Json j = report("verify", digest(g));
    j["outcome"] = v ? "fail" : "pass";
    j["k"] = s.size();
    j["witness"] = witness_json(s);
    j["kind"] = to_string(c.kind);
    j["violation"] = v ? Json(describe(*v)) : Json(nullptr);
    out << j.dump(2) << '\n';
  } else if (v) {
    out << "FAIL: " << describe(*v) << '\n';
  } else {
    out << "PASS: " << s.size() << " detectors form a " << to_string(c.kind) << '\n';
  }
  return v ? failed : ok;
}

inline int cmd_solve(const GraphSource& src, const Common& c, std::ostream& out) {
  Graph g = load_graph(src);
  auto res = solve_min(g, c.kind, c.solve_options());
  Json j = report("solve", digest(g));
  int code = ok;
  std::string text;
  if (res.is_optimal()) {
    j["outcome"] = "optimal";
    j["k"] = res.optimal().k;
    j["witness"] = witness_json(res.optimal().witness);
    text = "optimal k=" + std::to_string(res.optimal().k) + "\nwitness: " + witness_text(res.optimal().witness);
  } else if (res.is_bounded()) {
    const auto& b = res.bounded();
    j["outcome"] = "bounded";
    j["k"] = b.upper;
    j["lower"] = b.lower;
    if (b.witness) j["witness"] = witness_json(*b.witness);
    text = "bounded " + std::to_string(b.lower) + " <= k <= " + std::to_string(b.upper) + " (budget exhausted)";
    if (b.witness) text += "\nwitness: " + witness_text(*b.witness);
    code = failed;
  } else {
    j["outcome"] = "infeasible";
    j["reason"] = res.infeasible().reason;
    text = "no " + to_string(c.kind) + ": " + res.infeasible().reason;
    code = failed;
  }
  j["bounds"] = bounds_json(res.bounds);
  j["stats"] = stats_json(res.stats);
  if (c.json)
    out << j.dump(2) << '\n';
  else
    out << text << '\n';
  return code;
}

inline int cmd_exists(const GraphSource& src, const Common& c, std::ostream& out) {
  Graph g = load_graph(src);
  auto e = c.kind == CodeKind::ic ? exists_ic(g) : exists_red_ic(g);
  if (c.json) {
    Json j = report("exists", digest(g));
    j["outcome"] = e ? "yes" : "no";
    j["reason"] = e ? Json(nullptr) : Json(e.describe());
    out << j.dump(2) << '\n';
  } else {
    out << (e ? std::string("yes") : "no: " + e.describe()) << '\n';
  }
  return e ? ok : failed;
}

inline int cmd_table1(std::size_t min_n, std::size_t max_n, const Common& c, std::ostream& out) {
  if (min_n < 4 || max_n < min_n || max_n > 20) throw InputError("table1 needs 4 <= min-n <= max-n <= 20");
  bool any_fail = false;
  out << tree_table_header() << '\n';
  for (std::size_t n = min_n; n <= max_n; ++n) {
    auto row = tree_row(n, c.solve_options(), c.threads);
    any_fail = any_fail || row_status(row).rfind("FAIL", 0) == 0;
    out << to_tsv(row) << '\n' << std::flush;
  }
  return any_fail ? failed : ok;
}

/// Rows from the built-in enumeration, or from the connected cubic graphs
/// in a graph6 file grouped by order.
inline int cmd_table2(std::size_t min_n, std::size_t max_n, const std::optional<std::string>& graph6_file,
                      const Common& c, std::ostream& out) {
  if (min_n < 4 || max_n < min_n) throw InputError("table2 needs 4 <= min-n <= max-n");
  std::map<std::size_t, std::vector<Graph>> ingested;
  if (graph6_file) {
    std::istringstream in(read_file(*graph6_file));
    Graph6StreamResult res;
    try {
      res = read_graph6_stream(in, true);
    } catch (const ParseError& e) {
      throw InputError(std::string("parse error at line ") + std::to_string(e.line()) + ": " + e.what());
    }
    for (auto& g : res.graphs) {
      if (!is_cubic(g) || !is_connected(g)) throw InputError("graph6 input contains a graph that is not connected cubic");
      ingested[g.order()].push_back(std::move(g));
    }
  }
  bool any_fail = false;
  out << cubic_table_header() << '\n';
  for (std::size_t n = min_n + (min_n % 2); n <= max_n; n += 2) {
    CubicRow row;
    if (graph6_file) {
      auto it = ingested.find(n);
      if (it == ingested.end()) continue;
      row = cubic_row(n, it->second, c.solve_options(), c.threads);
    } else {
      if (n > 16) throw InputError("built-in cubic enumeration stops at n=16; use --graph6 for larger n");
      row = cubic_row(n, c.solve_options(), c.threads);
    }
    any_fail = any_fail || row_status(row).rfind("FAIL", 0) == 0;
    out << to_tsv(row) << '\n' << std::flush;
  }
  return any_fail ? failed : ok;
}

/// Families: star-even k, star-odd k, cycle-odd k, multipartite n, tree n,
/// g6-ring t, g14-ring t, q5, hypercube-double d (doubles the Q_5 code
/// through Q_d for d >= 6).
inline ConstructedInstance construct(const std::string& family, std::optional<std::size_t> param, const Common& c) {
  auto need = [&]() {
    if (!param) throw InputError("family '" + family + "' needs --param");
    return *param;
  };
  try {
    if (family == "star-even") return star_extremal_even(need());
    if (family == "star-odd") return star_extremal_odd(need());
    if (family == "cycle-odd") return cycle_extremal_odd(need());
    if (family == "multipartite") return multipartite_exact(need());
    if (family == "tree") return extremal_tree(need());
    if (family == "g6-ring") return g6_ring(need());
    if (family == "q5") return q5_code_search(c.solve_options());
    if (family == "hypercube-double") {
      std::size_t d = need();
      if (d < 6) throw InputError("hypercube-double needs d >= 6");
      auto inst = q5_code_search(c.solve_options());
      for (std::size_t i = 5; i < d; ++i) inst = double_hypercube_witness(i, inst.witness);
      return inst;
    }
    if (family == "g14-ring") {
      std::size_t t = need();
      Budget b{c.budget_seconds, c.budget_nodes};
      auto found = g14_gadget_search(b);
      if (!found.gadget) throw std::runtime_error("no G14 gadget found within budget");
      return g14_ring(*found.gadget, t);
    }
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  } catch (const std::length_error& e) {
    throw InputError(e.what());
  }
  throw InputError("unknown family '" + family + "'");
}

inline int cmd_construct(const std::string& family, std::optional<std::size_t> param, const Common& c,
                         std::ostream& out) {
  ConstructedInstance inst = construct(family, param, c);
  if (c.json) {
    Json j = report("construct", digest(inst.graph));
    j["outcome"] = "constructed";
    j["k"] = inst.claimed_k;
    j["witness"] = witness_json(inst.witness);
    j["bounds"] = bounds_json(lower_bound(inst.graph, CodeKind::red_ic));
    j["stats"] = Json::object();
    j["graph6"] = write_graph6(inst.graph);
    j["certificate"] = inst.certificate.to_string();
    out << j.dump(2) << '\n';
  } else {
    out << "graph6: " << write_graph6(inst.graph) << '\n'
        << "n: " << inst.graph.order() << '\n'
        << "k: " << inst.claimed_k << '\n'
        << "witness: " << witness_text(inst.witness) << '\n'
        << "certificate: " << inst.certificate.to_string() << '\n';
  }
  return ok;
}

/// JSON naming every gadget-role vertex of a reduction.
inline Json reduction_sidecar(const CnfFormula& f, const Reduction& r) {
  Json j;
  j["variables"] = f.variables;
  j["clauses"] = f.clauses.size();
  j["K"] = r.k;
  j["order"] = r.graph.order();
  j["edges"] = r.graph.edge_count();
  j["graph6"] = write_graph6(r.graph);
  Json labels = Json::object();
  for (Vertex v = 0; v < r.graph.order(); ++v) labels[r.graph.label(v)] = v;
  j["vertices"] = labels;
  Json lits = Json::array();
  for (const auto& [x, xbar] : r.literals) lits.push_back({{"x", x}, {"xbar", xbar}});
  j["literals"] = lits;
  j["clause_ports"] = r.clause_ports;
  j["forced"] = witness_json(r.forced);
  return j;
}

inline int cmd_reduce(const std::string& cnf_file, const std::optional<std::string>& sidecar, bool check,
                      const Common& c, std::ostream& out) {
  CnfFormula f;
  try {
    f = parse_dimacs(read_file(cnf_file));
  } catch (const ParseError& e) {
    throw InputError("DIMACS line " + std::to_string(e.line()) + ": " + e.what());
  }
  auto h = find_h_gadget();
  auto search = find_f_gadget();
  if (!search.gadget) throw std::runtime_error("no variable gadget found");
  Reduction r;
  try {
    r = build_reduction(f, *search.gadget, h);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  } catch (const std::length_error& e) {
    throw InputError(e.what());
  }
  Json side = reduction_sidecar(f, r);
  if (sidecar) {
    std::ofstream o(*sidecar);
    if (!o) throw InputError("cannot write '" + *sidecar + "'");
    o << side.dump(2) << '\n';
  }
  int code = ok;
  Json j = report("reduce", fnv1a(write_dimacs(f)));
  j["outcome"] = "built";
  j["k"] = r.k;
  if (check) {
    EquivalenceReport rep;
    try {
      rep = verify_reduction(f, *search.gadget, h, c.solve_options());
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
    j["outcome"] = !rep.conclusive() ? "inconclusive" : rep.holds() ? "equivalent" : "mismatch";
    j["satisfiable"] = rep.satisfiable;
    j["optimum"] = rep.optimum ? Json(*rep.optimum) : Json(nullptr);
    j["stats"] = stats_json(rep.stats);
    if (!rep.holds()) code = failed;
  }
  j["graph6"] = side["graph6"];
  if (c.json) {
    out << j.dump(2) << '\n';
  } else {
    out << "graph6: " << side["graph6"].get<std::string>() << '\n'
        << "n: " << r.graph.order() << " edges: " << r.graph.edge_count() << '\n'
        << "K: " << r.k << '\n';
    if (check) {
      out << "satisfiable: " << (j["satisfiable"].get<bool>() ? "yes" : "no") << '\n'
          << "optimum: " << (j["optimum"].is_null() ? std::string("unknown") : std::to_string(j["optimum"].get<std::size_t>()))
          << '\n'
          << "outcome: " << j["outcome"].get<std::string>() << '\n';
    }
  }
  return code;
}

}  // namespace redic::cli

#endif  // REDIC_CLI_HPP

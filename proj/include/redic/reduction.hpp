#ifndef REDIC_REDUCTION_HPP
#define REDIC_REDUCTION_HPP

#include <algorithm>
#include <array>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <istream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "redic/detection.hpp"
#include "redic/graph.hpp"
#include "redic/graph_io.hpp"
#include "redic/solver.hpp"

namespace redic {

// ---------------------------------------------------------------------------
// 3-CNF formulas

/// Signed variable index: +i is x_i, -i is its negation. Variables are 1-based.
using Literal = int;
using Clause = std::array<Literal, 3>;

struct CnfFormula {
  std::size_t variables = 0;
  std::vector<Clause> clauses;
};

/// Throws std::invalid_argument on a zero literal, an out-of-range variable,
/// or a clause that repeats a variable.
inline void validate(const CnfFormula& f) {
  for (std::size_t j = 0; j < f.clauses.size(); ++j) {
    const auto& c = f.clauses[j];
    for (std::size_t a = 0; a < 3; ++a) {
      const auto var = static_cast<std::size_t>(std::abs(c[a]));
      if (c[a] == 0 || var > f.variables)
        throw std::invalid_argument("clause " + std::to_string(j + 1) + ": literal " + std::to_string(c[a]) +
                                    " out of range for " + std::to_string(f.variables) + " variables");
      for (std::size_t b = a + 1; b < 3; ++b)
        if (std::abs(c[a]) == std::abs(c[b]))
          throw std::invalid_argument("clause " + std::to_string(j + 1) + ": repeated variable " +
                                      std::to_string(std::abs(c[a])));
    }
  }
}

/// DIMACS CNF restricted to clauses of exactly three distinct variables.
/// Comment lines start with 'c'; a line holding '%' ends the clause list.
inline CnfFormula parse_dimacs(std::istream& in) {
  CnfFormula f;
  std::optional<std::size_t> declared;
  std::vector<Literal> pending;
  std::size_t pending_line = 0;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok) || tok[0] == 'c') continue;
    if (tok == "%") break;
    if (tok == "p") {
      std::string fmt;
      long long n = -1;
      long long m = -1;
      std::string extra;
      if (declared || !(ls >> fmt >> n >> m) || fmt != "cnf" || n < 0 || m < 0 || (ls >> extra))
        throw ParseError("malformed problem line", line_no);
      f.variables = static_cast<std::size_t>(n);
      declared = static_cast<std::size_t>(m);
      continue;
    }
    if (!declared) throw ParseError("clause before problem line", line_no);
    ls.clear();
    ls.str(line);
    while (ls >> tok) {
      std::size_t used = 0;
      long long lit = 0;
      try {
        lit = std::stoll(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size()) throw ParseError("bad literal '" + tok + "'", line_no);
      if (pending.empty()) pending_line = line_no;
      if (lit == 0) {
        if (pending.size() != 3)
          throw ParseError("clause has " + std::to_string(pending.size()) + " literals, expected 3", pending_line);
        Clause c{pending[0], pending[1], pending[2]};
        for (std::size_t a = 0; a < 3; ++a) {
          if (static_cast<std::size_t>(std::abs(c[a])) > f.variables)
            throw ParseError("literal " + std::to_string(c[a]) + " out of range", pending_line);
          for (std::size_t b = a + 1; b < 3; ++b)
            if (std::abs(c[a]) == std::abs(c[b]))
              throw ParseError("repeated variable " + std::to_string(std::abs(c[a])), pending_line);
        }
        f.clauses.push_back(c);
        pending.clear();
      } else {
        if (lit > 1'000'000'000 || lit < -1'000'000'000) throw ParseError("bad literal '" + tok + "'", line_no);
        pending.push_back(static_cast<Literal>(lit));
      }
    }
  }
  if (!declared) throw ParseError("missing problem line", line_no);
  if (!pending.empty()) throw ParseError("unterminated clause", pending_line);
  if (f.clauses.size() != *declared)
    throw ParseError("problem line declares " + std::to_string(*declared) + " clauses, found " +
                         std::to_string(f.clauses.size()),
                     line_no);
  return f;
}

inline CnfFormula parse_dimacs(const std::string& text) {
  std::istringstream in(text);
  return parse_dimacs(in);
}

inline std::string write_dimacs(const CnfFormula& f) {
  std::ostringstream out;
  out << "p cnf " << f.variables << ' ' << f.clauses.size() << '\n';
  for (const auto& c : f.clauses) out << c[0] << ' ' << c[1] << ' ' << c[2] << " 0\n";
  return out.str();
}

/// Exhaustive satisfiability over all 2^N assignments.
inline bool brute_force_sat(const CnfFormula& f) {
  if (f.variables > 24) throw std::invalid_argument("brute_force_sat supports at most 24 variables");
  validate(f);
  const std::uint32_t limit = std::uint32_t{1} << f.variables;
  for (std::uint32_t a = 0; a < limit; ++a) {
    bool all = std::all_of(f.clauses.begin(), f.clauses.end(), [&](const Clause& c) {
      return std::any_of(c.begin(), c.end(), [&](Literal l) {
        bool value = (a >> (std::abs(l) - 1)) & 1U;
        return l > 0 ? value : !value;
      });
    });
    if (all) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Gadgets

enum class GadgetKind { variable, clause };

/// A fragment of the reduction graph. Vertex labels name the roles: the
/// variable gadget has ports "x" and "xbar", the clause gadget has port "c".
struct GadgetSpec {
  GadgetKind kind = GadgetKind::variable;
  Graph graph;
  std::vector<Vertex> ports;
  /// Detectors every code must contain.
  VertexSet forced;
  /// Internal pairs that the forced set separates by only one detector.
  std::vector<std::pair<Vertex, Vertex>> deficient;

  Vertex role(const std::string& name) const {
    auto v = graph.find_label(name);
    if (!v) throw std::out_of_range("gadget has no vertex '" + name + "'");
    return *v;
  }
};

namespace detail {

inline std::vector<std::pair<Vertex, Vertex>> thin_pairs(const Graph& g, const VertexSet& s,
                                                         std::optional<std::pair<Vertex, Vertex>> ignore = {}) {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (ignore && *ignore == std::pair{u, v}) continue;
      if (delta(g, s, u, v).size() < 2) out.emplace_back(u, v);
    }
  return out;
}

inline bool two_dominated(const Graph& g, const VertexSet& s) {
  for (Vertex v = 0; v < g.order(); ++v)
    if (domination(g, s, v) < 2) return false;
  return true;
}

}  // namespace detail

/// The clause gadget: on three vertices with two edges and every vertex a
/// forced detector, the port c must be the one whose pairs with a and b are
/// separated by a single detector, and one extra detector adjacent to c
/// must separate them all. Returned with a = 0, b = 1, c = 2.
inline GadgetSpec find_h_gadget() {
  const std::array<Edge, 3> all{{{0, 1}, {0, 2}, {1, 2}}};
  for (std::size_t skip = 3; skip-- > 0;) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < 3; ++i)
      if (i != skip) edges.push_back(all[i]);
    Graph g = Graph::from_edges(3, edges);
    const VertexSet s = VertexSet::full(3);
    if (!detail::two_dominated(g, s)) continue;
    for (Vertex c = 0; c < 3; ++c) {
      auto thin = detail::thin_pairs(g, s);
      const bool only_port_pairs =
          !thin.empty() && std::all_of(thin.begin(), thin.end(), [&](const auto& p) {
            return (p.first == c || p.second == c) && delta(g, s, p.first, p.second).size() == 1;
          });
      if (!only_port_pairs || thin.size() != 2) continue;
      Graph ext = Graph::from_edges(4, [&] {
        auto e = edges;
        e.emplace_back(c, 3);
        return e;
      }());
      VertexSet s4 = VertexSet::full(4);
      bool repaired = true;
      for (Vertex u = 0; u < 3; ++u)
        for (Vertex v = u + 1; v < 3; ++v) repaired = repaired && delta(ext, s4, u, v).size() >= 2;
      if (!repaired) continue;
      std::vector<Vertex> perm(3);
      Vertex next = 0;
      for (Vertex v = 0; v < 3; ++v)
        if (v != c) perm[v] = next++;
      perm[c] = 2;
      Graph h = relabel(g, perm).with_labels({"a", "b", "c"});
      return {GadgetKind::clause, h, {2}, VertexSet::full(3), detail::thin_pairs(h, VertexSet::full(3))};
    }
  }
  throw std::logic_error("no clause gadget satisfies the checklist");
}

/// Checklist for a variable gadget on 8 vertices with x = 6, xbar = 7 and
/// forced set {0..5}.
struct VariableGadgetChecks {
  bool dominated = false;
  /// Internal pairs other than (x, xbar) separated by fewer than two
  /// forced detectors.
  std::vector<std::pair<Vertex, Vertex>> deficient;
  bool deficient_by_one = false;
  bool repaired_by_x = false;
  bool repaired_by_xbar = false;
  /// |(N[x] delta N[xbar]) ∩ internal detectors| with x added.
  std::size_t port_pair_delta = 0;

  /// Accepted gadgets leave (x, xbar) to the clause wiring: they are
  /// separated by the chosen literal and its clause vertex.
  bool accepted() const {
    return dominated && !deficient.empty() && deficient_by_one && repaired_by_x && repaired_by_xbar;
  }
};

inline VariableGadgetChecks check_variable_gadget(const Graph& g) {
  constexpr Vertex x = 6;
  constexpr Vertex xbar = 7;
  VariableGadgetChecks out;
  const VertexSet s0 = VertexSet::full(6);
  out.dominated = detail::two_dominated(g, s0);
  out.deficient = detail::thin_pairs(g, s0, std::pair{x, xbar});
  out.deficient_by_one = std::all_of(out.deficient.begin(), out.deficient.end(),
                                     [&](const auto& p) { return delta(g, s0, p.first, p.second).size() == 1; });
  out.repaired_by_x = detail::thin_pairs(g, s0 | VertexSet{x}, std::pair{x, xbar}).empty();
  out.repaired_by_xbar = detail::thin_pairs(g, s0 | VertexSet{xbar}, std::pair{x, xbar}).empty();
  out.port_pair_delta = delta(g, s0 | VertexSet{x}, x, xbar).size();
  return out;
}

struct VariableGadgetSearch {
  std::optional<GadgetSpec> gadget;
  bool exhausted = false;
  std::uint64_t candidates = 0;
};

namespace detail {

/// Names p, y, u (first hub and its two leaves), r, z, w (second hub and its
/// leaves), x, xbar; falls back to f0..f5 for other shapes.
inline std::vector<std::string> variable_labels(const Graph& g) {
  std::vector<std::string> labels{"f0", "f1", "f2", "f3", "f4", "f5", "x", "xbar"};
  const VertexSet s0 = VertexSet::full(6);
  auto hubs = (g.open(6) & s0).to_vector();
  if (hubs.size() != 2) return labels;
  const std::array<std::array<const char*, 3>, 2> names{{{"p", "y", "u"}, {"r", "z", "w"}}};
  VertexSet named;
  for (std::size_t h = 0; h < 2; ++h) {
    auto leaves = (g.open(hubs[h]) & s0).to_vector();
    if (leaves.size() != 2) return {"f0", "f1", "f2", "f3", "f4", "f5", "x", "xbar"};
    labels[hubs[h]] = names[h][0];
    labels[leaves[0]] = names[h][1];
    labels[leaves[1]] = names[h][2];
    named.insert(hubs[h]);
    named.insert(leaves[0]);
    named.insert(leaves[1]);
  }
  if (named != s0) return {"f0", "f1", "f2", "f3", "f4", "f5", "x", "xbar"};
  return labels;
}

}  // namespace detail

/// Exhaustive search, in lexicographic order of edge sets, over 8-edge
/// graphs on vertices 0..7 with forced set {0..5} and ports x = 6, xbar = 7.
inline VariableGadgetSearch find_f_gadget(const Budget& budget = {}) {
  VariableGadgetSearch out;
  std::vector<Edge> all;
  for (Vertex u = 0; u < 8; ++u)
    for (Vertex v = u + 1; v < 8; ++v) all.emplace_back(u, v);
  const auto start = std::chrono::steady_clock::now();
  std::array<std::size_t, 8> idx{};
  for (std::size_t i = 0; i < 8; ++i) idx[i] = i;
  const std::size_t m = all.size();
  for (;;) {
    ++out.candidates;
    if ((budget.nodes && out.candidates > *budget.nodes) ||
        (budget.seconds && (out.candidates & 0xfff) == 0 &&
         std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() > *budget.seconds)) {
      out.exhausted = true;
      return out;
    }
    std::vector<Edge> edges;
    for (auto i : idx) edges.push_back(all[i]);
    Graph g = Graph::from_edges(8, edges);
    auto checks = check_variable_gadget(g);
    if (checks.accepted()) {
      Graph labelled = g.with_labels(detail::variable_labels(g));
      out.gadget = GadgetSpec{GadgetKind::variable, labelled, {6, 7}, VertexSet::full(6), checks.deficient};
      return out;
    }
    std::size_t i = 8;
    while (i > 0 && idx[i - 1] == m - 8 + (i - 1)) --i;
    if (i == 0) return out;
    ++idx[i - 1];
    for (std::size_t j = i; j < 8; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// ---------------------------------------------------------------------------
// The reduction

struct Reduction {
  Graph graph;
  /// 7N + 3M: a code of this size exists iff the formula is satisfiable.
  std::size_t k = 0;
  /// x_i and xbar_i for variable i (0-based here, labelled 1-based).
  std::vector<std::pair<Vertex, Vertex>> literals;
  std::vector<Vertex> clause_ports;
  /// Union of the gadgets' forced sets.
  VertexSet forced;
};

/// N variable gadgets at 8i.., M clause gadgets at 8N + 3j.., each clause
/// port joined to the ports of its three literals.
inline Reduction build_reduction(const CnfFormula& f, const GadgetSpec& var, const GadgetSpec& cls) {
  if (f.clauses.empty()) throw std::invalid_argument("reduction needs at least one clause");
  validate(f);
  if (var.kind != GadgetKind::variable || var.ports.size() != 2 || cls.kind != GadgetKind::clause ||
      cls.ports.size() != 1)
    throw std::invalid_argument("reduction needs a variable gadget and a clause gadget");
  const std::size_t nv = var.graph.order();
  const std::size_t nc = cls.graph.order();
  const std::size_t n_vars = f.variables;
  const std::size_t m = f.clauses.size();
  const std::size_t order = nv * n_vars + nc * m;
  if (order > kMaxVertices) throw std::length_error("reduction needs " + std::to_string(order) + " vertices");

  Reduction r;
  std::vector<Edge> edges;
  std::vector<std::string> labels(order);
  for (std::size_t i = 0; i < n_vars; ++i) {
    const std::size_t off = nv * i;
    for (const auto& [a, b] : var.graph.edges()) edges.emplace_back(off + a, off + b);
    for (Vertex v = 0; v < nv; ++v) labels[off + v] = var.graph.label(v) + "_" + std::to_string(i + 1);
    var.forced.for_each([&](Vertex v) { r.forced.insert(off + v); });
    r.literals.emplace_back(off + var.ports[0], off + var.ports[1]);
  }
  for (std::size_t j = 0; j < m; ++j) {
    const std::size_t off = nv * n_vars + nc * j;
    for (const auto& [a, b] : cls.graph.edges()) edges.emplace_back(off + a, off + b);
    for (Vertex v = 0; v < nc; ++v) labels[off + v] = cls.graph.label(v) + "_" + std::to_string(j + 1);
    cls.forced.for_each([&](Vertex v) { r.forced.insert(off + v); });
    const Vertex c = off + cls.ports[0];
    r.clause_ports.push_back(c);
    for (Literal l : f.clauses[j]) {
      const auto& [pos, neg] = r.literals[static_cast<std::size_t>(std::abs(l)) - 1];
      edges.emplace_back(c, l > 0 ? pos : neg);
    }
  }
  r.graph = Graph::from_edges(order, edges).with_labels(std::move(labels));
  const std::size_t want_v = 8 * n_vars + 3 * m;
  const std::size_t want_e = 8 * n_vars + 5 * m;
  if (r.graph.order() != want_v || r.graph.edge_count() != want_e)
    throw std::logic_error("reduction has " + std::to_string(r.graph.order()) + " vertices and " +
                           std::to_string(r.graph.edge_count()) + " edges, expected " + std::to_string(want_v) +
                           " and " + std::to_string(want_e));
  r.k = 7 * n_vars + 3 * m;
  return r;
}

/// The detector set read off an assignment: forced vertices plus the true
/// literal of every variable. Bit i-1 of `assignment` is x_i.
inline VertexSet assignment_code(const Reduction& r, std::uint64_t assignment) {
  VertexSet s = r.forced;
  for (std::size_t i = 0; i < r.literals.size(); ++i)
    s.insert(((assignment >> i) & 1U) ? r.literals[i].first : r.literals[i].second);
  return s;
}

struct EquivalenceReport {
  bool satisfiable = false;
  std::size_t k = 0;
  /// Minimum RED:IC size; empty when the solver ran out of budget.
  std::optional<std::size_t> optimum;
  SolveStats stats;

  bool conclusive() const { return optimum.has_value(); }
  /// optimum == k exactly when satisfiable, and optimum > k otherwise.
  bool holds() const { return optimum && (satisfiable ? *optimum == k : *optimum > k); }
};

/// Solves the reduction of f exactly and compares with brute-force
/// satisfiability. Every variable must occur in some clause: its two
/// literal ports are open twins inside the gadget and only the clause
/// wiring tells them apart.
inline EquivalenceReport verify_reduction(const CnfFormula& f, const GadgetSpec& var, const GadgetSpec& cls,
                                          const SolveOptions& opt = {}) {
  validate(f);
  std::vector<bool> seen(f.variables, false);
  for (const auto& c : f.clauses)
    for (Literal l : c) seen[static_cast<std::size_t>(std::abs(l)) - 1] = true;
  for (std::size_t i = 0; i < f.variables; ++i)
    if (!seen[i]) throw std::invalid_argument("variable " + std::to_string(i + 1) + " occurs in no clause");
  EquivalenceReport rep;
  rep.satisfiable = brute_force_sat(f);
  auto r = build_reduction(f, var, cls);
  rep.k = r.k;
  auto out = solve_min(r.graph, CodeKind::red_ic, opt);
  rep.stats = out.stats;
  if (out.is_optimal()) rep.optimum = out.optimal().k;
  return rep;
}

/// Every multiset of 1..max_clauses clauses over variables 1, 2, 3 (the
/// eight sign patterns), in lexicographic order of pattern indices.
inline std::vector<CnfFormula> three_variable_formulas(std::size_t max_clauses) {
  std::array<Clause, 8> patterns{};
  for (std::size_t p = 0; p < 8; ++p)
    for (std::size_t b = 0; b < 3; ++b) patterns[p][b] = ((p >> b) & 1U) ? -static_cast<Literal>(b + 1) : static_cast<Literal>(b + 1);
  std::vector<CnfFormula> out;
  std::vector<std::size_t> pick;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (!pick.empty()) {
      CnfFormula f{3, {}};
      for (auto p : pick) f.clauses.push_back(patterns[p]);
      out.push_back(std::move(f));
    }
    if (pick.size() == max_clauses) return;
    for (std::size_t p = from; p < 8; ++p) {
      pick.push_back(p);
      self(self, p);
      pick.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace redic

#endif  // REDIC_REDUCTION_HPP

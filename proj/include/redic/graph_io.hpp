#ifndef REDIC_GRAPH_IO_HPP
#define REDIC_GRAPH_IO_HPP

#include <cstddef>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "redic/graph.hpp"

namespace redic {

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what, std::size_t line = 0)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// graph6: N(n) followed by the upper triangle, column by column
// (x(0,1), x(0,2), x(1,2), x(0,3), ...), packed six bits per byte, +63.

inline std::string write_graph6(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(static_cast<char>(126));
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  int acc = 0;
  int bits = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        bits = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
  return out;
}

inline Graph parse_graph6(std::string_view text) {
  constexpr std::string_view kHeader = ">>graph6<<";
  if (text.substr(0, kHeader.size()) == kHeader) text.remove_prefix(kHeader.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty graph6 string");
  for (std::size_t i = 0; i < text.size(); ++i) {
    auto c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) throw ParseError("graph6 byte value " + std::to_string(c) + " at offset " + std::to_string(i) + " outside [63,126]");
  }
  std::size_t pos = 0;
  auto byte = [&](std::size_t i) { return static_cast<std::size_t>(static_cast<unsigned char>(text[i]) - 63); };
  std::size_t n = 0;
  if (byte(0) < 63) {
    n = byte(0);
    pos = 1;
  } else if (text.size() >= 2 && byte(1) < 63) {
    if (text.size() < 4) throw ParseError("truncated graph6 size field");
    n = (byte(1) << 12) | (byte(2) << 6) | byte(3);
    pos = 4;
  } else {
    if (text.size() < 8) throw ParseError("truncated graph6 size field");
    n = 0;
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | byte(i);
    pos = 8;
  }
  if (n > kMaxVertices) throw std::length_error("graph6 order " + std::to_string(n) + " exceeds supported width");
  const std::size_t nbits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t nbytes = (nbits + 5) / 6;
  if (text.size() - pos < nbytes) throw ParseError("truncated graph6 bit stream");
  if (text.size() - pos > nbytes) throw ParseError("trailing bytes after graph6 bit stream");
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      std::size_t b = byte(pos + k / 6);
      if ((b >> (5 - k % 6)) & 1U) edges.emplace_back(i, j);
    }
  }
  return Graph::from_edges(n, edges);
}

/// Edge-list text: a header "n m", then m lines "u v". '#' starts a comment.
inline Graph parse_edge_list(std::istream& in) {
  std::vector<std::size_t> tokens;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) {
      try {
        std::size_t used = 0;
        long long v = std::stoll(tok, &used);
        if (used != tok.size() || v < 0) throw std::invalid_argument(tok);
        tokens.push_back(static_cast<std::size_t>(v));
      } catch (const std::exception&) {
        throw ParseError("bad edge-list token '" + tok + "'", lineno);
      }
    }
  }
  if (tokens.size() < 2) throw ParseError("edge list missing 'n m' header");
  const std::size_t n = tokens[0];
  const std::size_t m = tokens[1];
  if (tokens.size() != 2 + 2 * m)
    throw ParseError("edge list declares " + std::to_string(m) + " edges but has " +
                     std::to_string((tokens.size() - 2) / 2));
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < m; ++i) edges.emplace_back(tokens[2 + 2 * i], tokens[3 + 2 * i]);
  return Graph::from_edges(n, edges);
}

inline std::string write_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.order() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

struct Graph6StreamResult {
  std::vector<Graph> graphs;
  /// Lines that failed to parse (only populated when not strict).
  std::vector<ParseError> errors;
};

/// Newline-delimited graph6. Blank lines are skipped. In strict mode the
/// first malformed line aborts with a ParseError carrying its line number.
inline Graph6StreamResult read_graph6_stream(std::istream& in, bool strict = true) {
  Graph6StreamResult out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      out.graphs.push_back(parse_graph6(line));
    } catch (const std::exception& e) {
      ParseError err(e.what(), lineno);
      if (strict) throw err;
      out.errors.push_back(err);
    }
  }
  return out;
}

}  // namespace redic

#endif  // REDIC_GRAPH_IO_HPP

#pragma once

// Edge-list text format:
//
//   n m
//   u v        (m lines, 1 <= u < v <= n, no duplicates)
//
// Tokens are whitespace separated. Blank lines are skipped; line numbers in
// errors count physical lines from 1.

#include "closed_graph/errors.hpp"
#include "closed_graph/graph.hpp"

#include <charconv>
#include <istream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace closed_graph {

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
      ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r')
      ++j;
    if (j > i)
      out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

inline std::size_t parse_count(std::string_view token, std::size_t line, const char *what) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    throw ParseError(line, std::string("expected a nonnegative integer for ") + what + ", got '" +
                               std::string(token) + "'");
  return value;
}

} // namespace detail

inline Graph parse_edge_list(std::istream &in) {
  std::string line;
  std::size_t line_no = 0;
  std::size_t n = 0;
  std::size_t m = 0;
  bool have_header = false;
  std::set<Edge> seen;
  std::vector<Edge> edges;

  while (std::getline(in, line)) {
    ++line_no;
    auto tokens = detail::split_ws(line);
    if (tokens.empty())
      continue;
    if (tokens.size() != 2)
      throw ParseError(line_no, "expected two integers, found " + std::to_string(tokens.size()) +
                                    " tokens");
    if (!have_header) {
      n = detail::parse_count(tokens[0], line_no, "n");
      m = detail::parse_count(tokens[1], line_no, "m");
      if (n == 0)
        throw ParseError(line_no, "vertex count must be positive");
      if (m > pair_count(n))
        throw ParseError(line_no, "m = " + std::to_string(m) + " exceeds n(n-1)/2");
      have_header = true;
      continue;
    }
    if (edges.size() == m)
      throw ParseError(line_no, "more than m = " + std::to_string(m) + " edge lines");
    auto u = detail::parse_count(tokens[0], line_no, "u");
    auto v = detail::parse_count(tokens[1], line_no, "v");
    if (u == v)
      throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
    if (u < 1 || v < 1 || u > n || v > n)
      throw ParseError(line_no, "endpoint outside [1," + std::to_string(n) + "]");
    if (u > v)
      throw ParseError(line_no, "edge endpoints must satisfy u < v");
    Edge e{static_cast<Vertex>(u), static_cast<Vertex>(v)};
    if (!seen.insert(e).second)
      throw ParseError(line_no, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    edges.push_back(e);
  }
  if (!have_header)
    throw ParseError(line_no + 1, "missing header line 'n m'");
  if (edges.size() != m)
    throw ParseError(line_no + 1, "expected " + std::to_string(m) + " edges, found " +
                                      std::to_string(edges.size()));
  return Graph(n, edges);
}

inline Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

inline std::string format_edge_list(const Graph &g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (const Edge &e : g.edges())
    out << e.u << ' ' << e.v << '\n';
  return out.str();
}

} // namespace closed_graph

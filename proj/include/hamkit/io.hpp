#pragma once

// Edge-list and DIMACS readers/writers.
//
// Edge list: first non-comment line "n m", then m lines "u v". Labels may be
// any whitespace-free tokens; if they are exactly the integers 0..n-1 they
// keep their ids, otherwise ids follow first appearance. '#' starts a comment.
//
// DIMACS: "c" comment lines, one "p edge n m" line, then "e u v" lines with
// 1-based vertex numbers.

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "hamkit/graph.hpp"

namespace hamkit::io {

struct ParseError : GraphError {
  ParseError(std::size_t line, const std::string& msg)
      : GraphError("line " + std::to_string(line) + ": " + msg), line_no(line) {}
  std::size_t line_no;
};

struct ParsedGraph {
  Graph graph;
  std::vector<std::string> labels;  // labels[id] is the input name of vertex id
  bool relabeled = false;
};

namespace detail {

inline std::vector<std::string> tokens(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream is(line);
  std::string t;
  while (is >> t) out.push_back(t);
  return out;
}

inline bool to_int(const std::string& s, long long& v) {
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  return ec == std::errc() && p == s.data() + s.size();
}

inline std::string strip_comment(const std::string& line) {
  auto hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

inline Graph build(std::size_t n, const std::vector<Edge>& edges, const std::vector<std::size_t>& lines) {
  std::vector<VertexSet> rows(n, VertexSet(n));
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto [u, v] = edges[i];
    if (u == v) throw ParseError(lines[i], "self-loop");
    if (rows[static_cast<std::size_t>(u)].contains(v)) throw ParseError(lines[i], "duplicate edge");
    rows[static_cast<std::size_t>(u)].insert(v);
    rows[static_cast<std::size_t>(v)].insert(u);
  }
  return Graph::from_rows(std::move(rows));
}

}  // namespace detail

inline ParsedGraph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  long long n = -1, m = -1;
  std::vector<std::pair<std::string, std::string>> raw;
  std::vector<std::size_t> lines;
  while (std::getline(in, line)) {
    ++line_no;
    auto t = detail::tokens(detail::strip_comment(line));
    if (t.empty()) continue;
    if (n < 0) {
      if (t.size() != 2 || !detail::to_int(t[0], n) || !detail::to_int(t[1], m) || n < 0 || m < 0)
        throw ParseError(line_no, "expected header 'n m'");
      continue;
    }
    if (t.size() != 2) throw ParseError(line_no, "expected 'u v'");
    raw.emplace_back(t[0], t[1]);
    lines.push_back(line_no);
  }
  if (n < 0) throw ParseError(std::max<std::size_t>(line_no, 1), "missing header");
  if (static_cast<long long>(raw.size()) != m)
    throw ParseError(line_no, "header declares " + std::to_string(m) + " edges, found " + std::to_string(raw.size()));

  ParsedGraph out;
  bool numeric = true;
  for (const auto& [a, b] : raw) {
    long long x, y;
    if (!detail::to_int(a, x) || !detail::to_int(b, y) || x < 0 || y < 0 || x >= n || y >= n) numeric = false;
  }
  std::vector<Edge> edges;
  if (numeric) {
    for (const auto& [a, b] : raw) edges.push_back({std::stoi(a), std::stoi(b)});
    for (long long i = 0; i < n; ++i) out.labels.push_back(std::to_string(i));
  } else {
    std::map<std::string, Vertex> ids;
    auto id = [&](const std::string& s, std::size_t ln) {
      auto it = ids.find(s);
      if (it != ids.end()) return it->second;
      if (static_cast<long long>(ids.size()) >= n) throw ParseError(ln, "more than n distinct labels");
      auto v = static_cast<Vertex>(ids.size());
      ids.emplace(s, v);
      out.labels.push_back(s);
      return v;
    };
    for (std::size_t i = 0; i < raw.size(); ++i) {
      Vertex a = id(raw[i].first, lines[i]);
      Vertex b = id(raw[i].second, lines[i]);
      edges.push_back({a, b});
    }
    // Isolated vertices without a label get placeholder names.
    while (static_cast<long long>(out.labels.size()) < n) out.labels.push_back("_" + std::to_string(out.labels.size()));
    out.relabeled = true;
  }
  out.graph = detail::build(static_cast<std::size_t>(n), edges, lines);
  return out;
}

inline ParsedGraph read_dimacs(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  long long n = -1, m = -1;
  std::vector<Edge> edges;
  std::vector<std::size_t> lines;
  while (std::getline(in, line)) {
    ++line_no;
    auto t = detail::tokens(line);
    if (t.empty() || t[0] == "c") continue;
    if (t[0] == "p") {
      if (n >= 0) throw ParseError(line_no, "second problem line");
      if (t.size() != 4 || (t[1] != "edge" && t[1] != "col") || !detail::to_int(t[2], n) ||
          !detail::to_int(t[3], m) || n < 0 || m < 0)
        throw ParseError(line_no, "expected 'p edge n m'");
      continue;
    }
    if (t[0] == "e") {
      if (n < 0) throw ParseError(line_no, "edge before problem line");
      long long a, b;
      if (t.size() != 3 || !detail::to_int(t[1], a) || !detail::to_int(t[2], b))
        throw ParseError(line_no, "expected 'e u v'");
      if (a < 1 || b < 1 || a > n || b > n) throw ParseError(line_no, "vertex out of range 1..n");
      edges.push_back({static_cast<Vertex>(a - 1), static_cast<Vertex>(b - 1)});
      lines.push_back(line_no);
      continue;
    }
    throw ParseError(line_no, "unknown line type '" + t[0] + "'");
  }
  if (n < 0) throw ParseError(std::max<std::size_t>(line_no, 1), "missing problem line");
  if (static_cast<long long>(edges.size()) != m)
    throw ParseError(line_no, "problem line declares " + std::to_string(m) + " edges, found " +
                                  std::to_string(edges.size()));
  ParsedGraph out;
  for (long long i = 1; i <= n; ++i) out.labels.push_back(std::to_string(i));
  out.graph = detail::build(static_cast<std::size_t>(n), edges, lines);
  out.relabeled = true;
  return out;
}

inline void write_edge_list(std::ostream& os, const Graph& g) {
  os << g.order() << ' ' << g.size() << '\n';
  for (const auto& e : g.edges()) os << e.u << ' ' << e.v << '\n';
}

inline void write_dimacs(std::ostream& os, const Graph& g) {
  os << "p edge " << g.order() << ' ' << g.size() << '\n';
  for (const auto& e : g.edges()) os << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
}

// FNV-1a over the canonical edge list; identifies inputs in reports.
inline std::uint64_t digest(const Graph& g) {
  std::ostringstream os;
  write_edge_list(os, g);
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : os.str()) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace hamkit::io

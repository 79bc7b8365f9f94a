#pragma once

// Flat-file formats. Ids in files are 1-based; everything in memory is
// 0-based.
//
//   .gr   c <comment> / p lcst <n> <m> / e <u> <v>
//   .ord  n whitespace-separated distinct integers in 1..n
//   .arc  c <comment> / p arcs <n> / a <id> <head> <tail>, positions in [0, 2n)
//   tree  e <u> <v> lines, then "s tree" or "s no <reason>"

#include <cctype>
#include <algorithm>
#include <charconv>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "lcst/circular_arc.hpp"
#include "lcst/elimination.hpp"
#include "lcst/graph.hpp"

namespace lcst {

class ParseError : public InputError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

namespace detail {

struct Line {
  std::size_t number;
  std::vector<std::string_view> tokens;
};

inline std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

/// Non-blank, non-comment lines with their 1-based line numbers.
inline std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0, start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    auto tokens = split_ws(text.substr(start, end - start));
    if (!tokens.empty() && tokens[0] != "c") out.push_back({number, std::move(tokens)});
    start = end + 1;
  }
  return out;
}

/// Line number for errors about the file as a whole: its last line.
inline std::size_t final_line(std::string_view text) {
  if (!text.empty() && text.back() == '\n') text.remove_suffix(1);
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n'));
}

inline long long to_int(std::string_view tok, std::size_t line) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError(line, "expected an integer, got '" + std::string(tok) + "'");
  return value;
}

inline void expect_tokens(const Line& l, std::size_t count, std::string_view form) {
  if (l.tokens.size() != count) throw ParseError(l.number, "expected '" + std::string(form) + "'");
}

}  // namespace detail

inline Graph parse_graph_file(std::string_view text) {
  std::optional<std::size_t> n, m;
  std::vector<Edge> edges;
  const std::size_t last_line = detail::final_line(text);
  for (const auto& l : detail::content_lines(text)) {
    if (l.tokens[0] == "p") {
      detail::expect_tokens(l, 4, "p lcst <n> <m>");
      if (l.tokens[1] != "lcst") throw ParseError(l.number, "expected problem type 'lcst'");
      if (n) throw ParseError(l.number, "duplicate header");
      const auto nv = detail::to_int(l.tokens[2], l.number), mv = detail::to_int(l.tokens[3], l.number);
      if (nv < 1 || mv < 0) throw ParseError(l.number, "header needs n >= 1 and m >= 0");
      n = static_cast<std::size_t>(nv);
      m = static_cast<std::size_t>(mv);
    } else if (l.tokens[0] == "e") {
      if (!n) throw ParseError(l.number, "edge before header");
      detail::expect_tokens(l, 3, "e <u> <v>");
      const auto u = detail::to_int(l.tokens[1], l.number), v = detail::to_int(l.tokens[2], l.number);
      for (auto id : {u, v})
        if (id < 1 || id > static_cast<long long>(*n))
          throw ParseError(l.number, "vertex id " + std::to_string(id) + " out of range [1, " + std::to_string(*n) + "]");
      if (u == v) throw ParseError(l.number, "self-loop at vertex " + std::to_string(u));
      edges.push_back({static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1)});
    } else {
      throw ParseError(l.number, "unknown line type '" + std::string(l.tokens[0]) + "'");
    }
  }
  if (!n) throw ParseError(last_line, "missing 'p lcst <n> <m>' header");
  if (edges.size() != *m)
    throw ParseError(last_line, "header declares " + std::to_string(*m) + " edges, found " + std::to_string(edges.size()));
  return Graph(*n, edges);
}

inline std::string write_graph_file(const Graph& g) {
  std::ostringstream out;
  out << "p lcst " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
  return out.str();
}

inline VertexOrder parse_order_file(std::string_view text, std::size_t n) {
  std::vector<Vertex> order;
  std::vector<bool> seen(n, false);
  for (const auto& l : detail::content_lines(text))
    for (auto tok : l.tokens) {
      const auto id = detail::to_int(tok, l.number);
      if (id < 1 || id > static_cast<long long>(n))
        throw ParseError(l.number, "order entry " + std::to_string(id) + " out of range [1, " + std::to_string(n) + "]");
      if (seen[id - 1]) throw ParseError(l.number, "order repeats vertex " + std::to_string(id));
      seen[id - 1] = true;
      order.push_back(static_cast<Vertex>(id - 1));
    }
  if (order.size() != n)
    throw InputError("order lists " + std::to_string(order.size()) + " vertices, expected " + std::to_string(n));
  return VertexOrder(std::move(order));
}

inline std::string write_order_file(const VertexOrder& ord) {
  std::ostringstream out;
  for (std::size_t k = 0; k < ord.size(); ++k) out << (k ? " " : "") << ord.at(k) + 1;
  out << '\n';
  return out.str();
}

inline CircularArcModel parse_arc_model_file(std::string_view text) {
  std::optional<std::size_t> n;
  std::vector<std::optional<Arc>> arcs;
  std::vector<std::size_t> owner_line;
  const std::size_t last_line = detail::final_line(text);
  for (const auto& l : detail::content_lines(text)) {
    if (l.tokens[0] == "p") {
      detail::expect_tokens(l, 3, "p arcs <n>");
      if (l.tokens[1] != "arcs") throw ParseError(l.number, "expected problem type 'arcs'");
      if (n) throw ParseError(l.number, "duplicate header");
      const auto nv = detail::to_int(l.tokens[2], l.number);
      if (nv < 1) throw ParseError(l.number, "header needs n >= 1");
      n = static_cast<std::size_t>(nv);
      arcs.assign(*n, std::nullopt);
      owner_line.assign(2 * *n, 0);
    } else if (l.tokens[0] == "a") {
      if (!n) throw ParseError(l.number, "arc before header");
      detail::expect_tokens(l, 4, "a <id> <head> <tail>");
      const auto id = detail::to_int(l.tokens[1], l.number);
      if (id < 1 || id > static_cast<long long>(*n))
        throw ParseError(l.number, "arc id " + std::to_string(id) + " out of range [1, " + std::to_string(*n) + "]");
      if (arcs[id - 1]) throw ParseError(l.number, "arc id " + std::to_string(id) + " repeated");
      Arc arc{detail::to_int(l.tokens[2], l.number), detail::to_int(l.tokens[3], l.number)};
      for (Position p : {arc.head, arc.tail}) {
        if (p < 0 || p >= static_cast<Position>(2 * *n))
          throw ParseError(l.number, "position " + std::to_string(p) + " out of range [0, " + std::to_string(2 * *n) + ")");
        if (owner_line[p])
          throw ParseError(l.number, "duplicate position " + std::to_string(p) + " (first used on line " +
                                         std::to_string(owner_line[p]) + ")");
        owner_line[p] = l.number;
      }
      arcs[id - 1] = arc;
    } else {
      throw ParseError(l.number, "unknown line type '" + std::string(l.tokens[0]) + "'");
    }
  }
  if (!n) throw ParseError(last_line, "missing 'p arcs <n>' header");
  CircularArcModel model;
  for (std::size_t i = 0; i < *n; ++i) {
    if (!arcs[i]) throw ParseError(last_line, "missing arc id " + std::to_string(i + 1));
    model.arcs.push_back(*arcs[i]);
  }
  return model;
}

inline std::string write_arc_model_file(const CircularArcModel& m) {
  std::ostringstream out;
  out << "p arcs " << m.size() << '\n';
  for (std::size_t i = 0; i < m.size(); ++i)
    out << "a " << i + 1 << ' ' << m.arcs[i].head << ' ' << m.arcs[i].tail << '\n';
  return out.str();
}

/// Tree edges from `e <u> <v>` lines; `s` lines are ignored.
inline SpanningTree parse_tree_file(std::string_view text, std::size_t n) {
  SpanningTree t{n, {}};
  for (const auto& l : detail::content_lines(text)) {
    if (l.tokens[0] == "s") continue;
    if (l.tokens[0] != "e") throw ParseError(l.number, "unknown line type '" + std::string(l.tokens[0]) + "'");
    detail::expect_tokens(l, 3, "e <u> <v>");
    const auto u = detail::to_int(l.tokens[1], l.number), v = detail::to_int(l.tokens[2], l.number);
    for (auto id : {u, v})
      if (id < 1 || id > static_cast<long long>(n))
        throw ParseError(l.number, "vertex id " + std::to_string(id) + " out of range [1, " + std::to_string(n) + "]");
    t.edges.push_back({static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1)});
  }
  return t;
}

inline std::string write_tree_output(const TreeOutcome& outcome) {
  std::ostringstream out;
  if (outcome.is_tree()) {
    for (const Edge& e : outcome.tree().edges) out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
    out << "s tree\n";
  } else {
    const auto& r = outcome.refusal();
    out << "c NO: " << to_string(r.reason) << " witness";
    for (Vertex v : r.witness) out << " v" << v + 1;
    out << "\ns no " << to_string(r.reason) << '\n';
  }
  return out.str();
}

}  // namespace lcst

#pragma once

// Named desk-scale instances and the generated corpora shared by the unit
// tests and the acceptance binary.

#include <cstdint>
#include <string>
#include <vector>

#include "lcst/circular_arc.hpp"
#include "lcst/elimination.hpp"
#include "lcst/generators.hpp"
#include "lcst/graph.hpp"
#include "support/oracles.hpp"

namespace corpus {

using lcst::Arc;
using lcst::CircularArcModel;
using lcst::Graph;
using lcst::Vertex;
using lcst::VertexOrder;

inline Graph k3() { return lcst::build_graph(3, {{0, 1}, {1, 2}, {0, 2}}); }
inline Graph p3() { return lcst::build_graph(3, {{0, 1}, {1, 2}}); }
inline Graph c4() { return lcst::build_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}); }
inline Graph diamond() { return lcst::build_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}}); }
inline Graph k4() { return lcst::build_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }
inline Graph c5() { return lcst::build_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}); }
inline Graph sun3() {
  return lcst::build_graph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 0}, {3, 1}, {4, 1}, {4, 2}, {5, 2}, {5, 0}});
}
/// Two triangles sharing vertex 2: chordal, connected, not 2-connected.
inline Graph bowtie() { return lcst::build_graph(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}}); }

inline VertexOrder diamond_seo() { return VertexOrder({1, 3, 0, 2}); }

inline CircularArcModel k3_model() { return {{{0, 3}, {2, 5}, {4, 1}}}; }
inline CircularArcModel k4_model() { return {{{0, 5}, {2, 7}, {4, 1}, {6, 3}}}; }
inline CircularArcModel c5_model() { return {{{0, 3}, {2, 5}, {4, 7}, {6, 9}, {8, 1}}}; }
inline CircularArcModel p3_interval_model() { return {{{0, 2}, {1, 4}, {3, 5}}}; }
inline CircularArcModel k5_interval_model() { return {{{0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}}}; }

/// Every labeled graph on n vertices, edges chosen by the bits of a mask.
inline std::vector<Graph> all_graphs(std::size_t n) {
  std::vector<lcst::Edge> slots;
  for (Vertex u = 0; u < static_cast<Vertex>(n); ++u)
    for (Vertex v = u + 1; v < static_cast<Vertex>(n); ++v) slots.push_back({u, v});
  std::vector<Graph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
    std::vector<lcst::Edge> edges;
    for (std::size_t i = 0; i < slots.size(); ++i)
      if (mask >> i & 1) edges.push_back(slots[i]);
    out.emplace_back(n, edges);
  }
  return out;
}

struct OrderedGraph {
  std::string name;
  Graph graph;
  VertexOrder order;
};

/// Strongly chordal instances with a strong elimination order, n <= max_n:
/// named graphs, every labeled strongly chordal graph up to `exhaustive_n`
/// vertices (order found by the permutation oracle), and generator output.
inline std::vector<OrderedGraph> strongly_chordal_small(std::size_t max_n, std::size_t exhaustive_n = 4) {
  std::vector<OrderedGraph> out;
  out.push_back({"K3", k3(), VertexOrder({0, 1, 2})});
  out.push_back({"P3", p3(), VertexOrder({0, 2, 1})});
  out.push_back({"diamond", diamond(), diamond_seo()});
  out.push_back({"K4", k4(), VertexOrder({0, 1, 2, 3})});
  out.push_back({"bowtie", bowtie(), VertexOrder({0, 1, 3, 4, 2})});
  for (std::size_t n = 1; n <= exhaustive_n; ++n)
    for (const Graph& g : all_graphs(n)) {
      std::optional<std::vector<Vertex>> found;
      oracle::for_each_permutation(n, [&](const std::vector<Vertex>& p) {
        if (!found && oracle::is_seo(g, p)) found = p;
      });
      if (found) out.push_back({"all" + std::to_string(n), g, VertexOrder(*found)});
    }
  for (std::size_t n = 3; n <= max_n; ++n)
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
      const double density = 0.15 + 0.07 * static_cast<double>(seed % 12);
      if (auto inst = lcst::gen_strongly_chordal({n, seed, density}))
        out.push_back({"gen_sc", std::move(inst->graph), std::move(inst->order)});
      auto iv = lcst::gen_interval_graph({n, seed, density});
      out.push_back({"gen_interval", std::move(iv.graph), std::move(iv.order)});
      auto ext = lcst::gen_strongly_chordal_by_extension({n, seed, density});
      out.push_back({"gen_ext", std::move(ext.graph), std::move(ext.peo)});
    }
  return out;
}

/// Chordal graphs up to max_n vertices: named graphs, every labeled chordal
/// graph on up to `exhaustive_n` vertices, and gen_chordal output.
inline std::vector<Graph> chordal_small(std::size_t max_n, std::size_t exhaustive_n = 5) {
  std::vector<Graph> out{k3(), p3(), diamond(), k4(), bowtie(), sun3()};
  for (std::size_t n = 1; n <= exhaustive_n; ++n)
    for (const Graph& g : all_graphs(n))
      if (oracle::is_chordal(g)) out.push_back(g);
  for (std::size_t n = 6; n <= max_n; ++n)
    for (std::uint64_t seed = 0; seed < 10; ++seed)
      out.push_back(lcst::gen_chordal({n, seed, 0.1 * static_cast<double>(seed)}).graph);
  return out;
}

}  // namespace corpus

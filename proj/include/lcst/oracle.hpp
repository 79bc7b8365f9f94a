#pragma once

// Exhaustive ground truth for small graphs: spanning tree enumeration,
// locally connected spanning tree existence, and minimum vertex cuts.
// Nothing here shares code with the algorithms it is used to check.

#include <bit>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "lcst/graph.hpp"

namespace lcst {

inline constexpr std::size_t kDefaultOracleBound = 10;

enum class EnumerationStatus { Completed, Stopped, Overflow, Disconnected };

namespace detail {

/// Union-find without path compression so unions can be undone.
class RollbackSets {
 public:
  explicit RollbackSets(std::size_t n) : parent_(n), size_(n, 1) {
    for (std::size_t i = 0; i < n; ++i) parent_[i] = static_cast<Vertex>(i);
  }
  Vertex find(Vertex v) const {
    while (parent_[v] != v) v = parent_[v];
    return v;
  }
  bool unite(Vertex a, Vertex b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    history_.push_back(b);
    return true;
  }
  void undo() {
    Vertex b = history_.back();
    history_.pop_back();
    Vertex a = parent_[b];
    size_[a] -= size_[b];
    parent_[b] = b;
  }

 private:
  std::vector<Vertex> parent_;
  std::vector<std::size_t> size_;
  std::vector<Vertex> history_;
};

struct TreeEnumerator {
  std::size_t n;
  std::vector<Edge> edges;
  std::size_t cap;
  const std::function<bool(const SpanningTree&)>& visit;

  RollbackSets sets{n};
  SpanningTree current{n, {}};
  std::size_t produced = 0;
  EnumerationStatus status = EnumerationStatus::Completed;

  /// Chosen edges plus edges[from..] still connect everything.
  bool still_spanning(std::size_t from) const {
    DisjointSets dsu(n);
    std::size_t merges = 0;
    for (const Edge& e : current.edges) merges += dsu.unite(e.u, e.v);
    for (std::size_t i = from; i < edges.size(); ++i) merges += dsu.unite(edges[i].u, edges[i].v);
    return merges + 1 == n;
  }

  void run(std::size_t idx) {
    if (status != EnumerationStatus::Completed) return;
    if (current.edges.size() + 1 == n) {
      if (++produced > cap) {
        status = EnumerationStatus::Overflow;
        return;
      }
      if (!visit(current)) status = EnumerationStatus::Stopped;
      return;
    }
    if (idx == edges.size()) return;
    const Edge e = edges[idx];
    if (sets.unite(e.u, e.v)) {  // contract
      current.edges.push_back(e);
      run(idx + 1);
      current.edges.pop_back();
      sets.undo();
    }
    if (still_spanning(idx + 1)) run(idx + 1);  // delete
  }
};

}  // namespace detail

/// Calls `visit` once per spanning tree of g, branching on each edge in
/// lexicographic order (take it, or drop it if the rest still spans).
/// Returning false from `visit` stops early. More than `cap` trees reports
/// Overflow.
inline EnumerationStatus for_each_spanning_tree(const Graph& g, std::size_t cap,
                                                const std::function<bool(const SpanningTree&)>& visit) {
  const std::size_t n = g.vertex_count();
  if (n == 0 || !is_connected(g)) return EnumerationStatus::Disconnected;
  detail::TreeEnumerator e{n, g.edges(), cap, visit};
  e.run(0);
  return e.status;
}

struct SpanningTreeList {
  std::vector<SpanningTree> trees;
  EnumerationStatus status = EnumerationStatus::Completed;
};

inline SpanningTreeList enumerate_spanning_trees(const Graph& g, std::size_t cap = 1'000'000) {
  SpanningTreeList out;
  out.status = for_each_spanning_tree(g, cap, [&](const SpanningTree& t) {
    out.trees.push_back(t);
    return true;
  });
  return out;
}

namespace detail {

using Mask = std::uint64_t;

inline std::vector<Mask> adjacency_masks(const Graph& g) {
  std::vector<Mask> adj(g.vertex_count(), 0);
  for (Vertex v = 0; v < static_cast<Vertex>(g.vertex_count()); ++v)
    for (Vertex u : g.neighbors(v)) adj[v] |= Mask{1} << u;
  return adj;
}

/// Whether the vertex set `s` induces a connected subgraph (empty counts).
inline bool induces_connected(const std::vector<Mask>& adj, Mask s) {
  if (s == 0) return true;
  Mask reached = s & (~s + 1), frontier = reached;
  while (frontier) {
    Mask next = 0;
    for (Mask f = frontier; f; f &= f - 1) next |= adj[std::countr_zero(f)];
    next &= s & ~reached;
    reached |= next;
    frontier = next;
  }
  return reached == s;
}

inline std::size_t components_without(const std::vector<Mask>& adj, Mask all, Mask removed) {
  Mask left = all & ~removed;
  std::size_t count = 0;
  while (left) {
    Mask reached = left & (~left + 1), frontier = reached;
    while (frontier) {
      Mask next = 0;
      for (Mask f = frontier; f; f &= f - 1) next |= adj[std::countr_zero(f)];
      next &= left & ~reached;
      reached |= next;
      frontier = next;
    }
    left &= ~reached;
    ++count;
  }
  return count;
}

}  // namespace detail

/// First enumerated spanning tree whose every tree neighborhood induces a
/// connected subgraph, checked with bitmasks. Graphs above `bound` vertices
/// are refused with OracleBound (the witness lists the vertices past the
/// bound).
inline TreeOutcome lcst_bruteforce(const Graph& g, std::size_t bound = kDefaultOracleBound) {
  const std::size_t n = g.vertex_count();
  if (n == 0) throw InputError("graph has no vertices");
  if (n > bound || n > 64) {
    std::vector<Vertex> over;
    for (std::size_t v = std::min<std::size_t>(bound, n - 1); v < n; ++v) over.push_back(static_cast<Vertex>(v));
    return TreeOutcome::no(Reason::OracleBound, std::move(over));
  }
  const auto adj = detail::adjacency_masks(g);
  std::optional<SpanningTree> found;
  std::vector<detail::Mask> tree_nb(n);
  for_each_spanning_tree(g, static_cast<std::size_t>(-1), [&](const SpanningTree& t) {
    std::fill(tree_nb.begin(), tree_nb.end(), 0);
    for (const Edge& e : t.edges) {
      tree_nb[e.u] |= detail::Mask{1} << e.v;
      tree_nb[e.v] |= detail::Mask{1} << e.u;
    }
    for (std::size_t v = 0; v < n; ++v)
      if (!detail::induces_connected(adj, tree_nb[v])) return true;
    found = t;
    return false;
  });
  if (found) return *found;
  std::vector<Vertex> all(n);
  for (std::size_t v = 0; v < n; ++v) all[v] = static_cast<Vertex>(v);
  return TreeOutcome::no(Reason::Exhausted, std::move(all));
}

/// Size of a smallest separating set, by increasing-size subset search.
/// Disconnected graphs give 0 and complete graphs give n-1.
inline std::size_t min_vertex_cut_bruteforce(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n > 20) throw InputError("min_vertex_cut_bruteforce is limited to 20 vertices");
  const auto adj = detail::adjacency_masks(g);
  const detail::Mask all = n == 64 ? ~detail::Mask{0} : (detail::Mask{1} << n) - 1;
  if (detail::components_without(adj, all, 0) > 1) return 0;
  for (std::size_t k = 1; k + 2 <= n; ++k)
    for (detail::Mask s = 0; s <= all; ++s)
      if (static_cast<std::size_t>(std::popcount(s)) == k && detail::components_without(adj, all, s) >= 2)
        return k;
  return n == 0 ? 0 : n - 1;
}

}  // namespace lcst

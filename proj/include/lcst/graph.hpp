#pragma once

// Simple undirected graphs, spanning trees and the locally connected
// spanning tree verifier.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace lcst {

using Vertex = std::int32_t;

/// Raised for malformed inputs (bad ids, self-loops, non-permutations,
/// orders that fail validation). Never used for an algorithmic "no".
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Edge with endpoints sorted, for set comparisons.
inline Edge normalized(Edge e) {
  if (e.u > e.v) std::swap(e.u, e.v);
  return e;
}

/// Simple undirected graph on vertices 0..n-1. Neighbor lists are sorted by
/// id and the structure is immutable after construction.
class Graph {
 public:
  Graph() = default;

  /// Builds from an edge list. Duplicate edges collapse; self-loops and
  /// out-of-range ids throw InputError.
  Graph(std::size_t n, std::span<const Edge> edges) {
    std::vector<std::vector<Vertex>> adj(n);
    for (const Edge& e : edges) {
      check_vertex(n, e.u);
      check_vertex(n, e.v);
      if (e.u == e.v)
        throw InputError("self-loop at vertex " + std::to_string(e.u));
      adj[e.u].push_back(e.v);
      adj[e.v].push_back(e.u);
    }
    assign(std::move(adj));
  }

  /// Builds from per-vertex neighbor lists (any order, duplicates allowed).
  /// Lists must be symmetric.
  static Graph from_adjacency(std::vector<std::vector<Vertex>> adj) {
    const std::size_t n = adj.size();
    for (std::size_t v = 0; v < n; ++v)
      for (Vertex u : adj[v]) {
        check_vertex(n, u);
        if (u == static_cast<Vertex>(v))
          throw InputError("self-loop at vertex " + std::to_string(v));
      }
    Graph g;
    g.assign(std::move(adj));
    for (std::size_t v = 0; v < n; ++v)
      for (Vertex u : g.neighbors(static_cast<Vertex>(v)))
        if (!g.has_edge(u, static_cast<Vertex>(v)))
          throw InputError("adjacency is not symmetric");
    return g;
  }

  std::size_t vertex_count() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const { return targets_.size() / 2; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }

  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

  bool has_edge(Vertex u, Vertex v) const {
    if (u == v) return false;
    if (degree(u) > degree(v)) std::swap(u, v);
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
  }

  bool contains(Vertex v) const {
    return v >= 0 && static_cast<std::size_t>(v) < vertex_count();
  }

  /// Edges with u < v, in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count());
    for (Vertex u = 0; u < static_cast<Vertex>(vertex_count()); ++u)
      for (Vertex v : neighbors(u))
        if (u < v) out.push_back({u, v});
    return out;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  static void check_vertex(std::size_t n, Vertex v) {
    if (v < 0 || static_cast<std::size_t>(v) >= n)
      throw InputError("vertex id " + std::to_string(v) + " out of range [0, " +
                       std::to_string(n) + ")");
  }

  void assign(std::vector<std::vector<Vertex>> adj) {
    offsets_.assign(adj.size() + 1, 0);
    targets_.clear();
    for (std::size_t v = 0; v < adj.size(); ++v) {
      auto& list = adj[v];
      std::sort(list.begin(), list.end());
      list.erase(std::unique(list.begin(), list.end()), list.end());
      offsets_[v + 1] = offsets_[v] + list.size();
    }
    targets_.reserve(offsets_.back());
    for (auto& list : adj) targets_.insert(targets_.end(), list.begin(), list.end());
  }

  // CSR layout: neighbors of v are targets_[offsets_[v] .. offsets_[v+1]).
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> targets_;
};

inline Graph build_graph(std::size_t n, std::span<const Edge> edges) { return Graph(n, edges); }

inline Graph build_graph(std::size_t n, std::initializer_list<Edge> edges) {
  return Graph(n, std::span<const Edge>(edges.begin(), edges.size()));
}

/// Candidate spanning tree: a vertex count and an edge sequence. Whether it
/// is actually a tree of some host graph is decided by the verifier.
struct SpanningTree {
  std::size_t n = 0;
  std::vector<Edge> edges;

  friend bool operator==(const SpanningTree&, const SpanningTree&) = default;
};

/// Edge sets compared as unordered sets of unordered pairs.
inline bool same_edge_set(std::span<const Edge> a, std::span<const Edge> b) {
  std::vector<Edge> x(a.begin(), a.end()), y(b.begin(), b.end());
  auto key = [](Edge e) { e = normalized(e); return std::pair{e.u, e.v}; };
  auto less = [&](const Edge& l, const Edge& r) { return key(l) < key(r); };
  for (auto& e : x) e = normalized(e);
  for (auto& e : y) e = normalized(e);
  std::sort(x.begin(), x.end(), less);
  std::sort(y.begin(), y.end(), less);
  return x == y;
}

enum class Reason {
  NotBiconnected,
  FourLowDensityArcs,
  CutVertex,
  MissingEdge,
  NoCommonNeighbor,
  AllPairsSeparating,
  Exhausted,
  OracleBound,
};

inline std::string_view to_string(Reason r) {
  switch (r) {
    case Reason::NotBiconnected: return "NotBiconnected";
    case Reason::FourLowDensityArcs: return "FourLowDensityArcs";
    case Reason::CutVertex: return "CutVertex";
    case Reason::MissingEdge: return "MissingEdge";
    case Reason::NoCommonNeighbor: return "NoCommonNeighbor";
    case Reason::AllPairsSeparating: return "AllPairsSeparating";
    case Reason::Exhausted: return "Exhausted";
    case Reason::OracleBound: return "OracleBound";
  }
  return "Unknown";
}

inline std::optional<Reason> reason_from_string(std::string_view s) {
  for (Reason r : {Reason::NotBiconnected, Reason::FourLowDensityArcs, Reason::CutVertex,
                   Reason::MissingEdge, Reason::NoCommonNeighbor, Reason::AllPairsSeparating,
                   Reason::Exhausted, Reason::OracleBound})
    if (to_string(r) == s) return r;
  return std::nullopt;
}

/// A "no" answer with evidence. The witness is never empty.
struct Refusal {
  Reason reason;
  std::vector<Vertex> witness;

  friend bool operator==(const Refusal&, const Refusal&) = default;
};

class TreeOutcome {
 public:
  TreeOutcome(SpanningTree t) : value_(std::move(t)) {}
  TreeOutcome(Refusal r) : value_(std::move(r)) {
    if (refusal().witness.empty()) throw std::logic_error("refusal without witness");
  }
  static TreeOutcome no(Reason reason, std::vector<Vertex> witness) {
    return TreeOutcome(Refusal{reason, std::move(witness)});
  }

  bool is_tree() const { return std::holds_alternative<SpanningTree>(value_); }
  const SpanningTree& tree() const { return std::get<SpanningTree>(value_); }
  const Refusal& refusal() const { return std::get<Refusal>(value_); }

  friend bool operator==(const TreeOutcome&, const TreeOutcome&) = default;

 private:
  std::variant<SpanningTree, Refusal> value_;
};

namespace detail {

/// Reusable visit marks; a vertex is marked iff mark[v] == stamp.
struct StampSet {
  std::vector<std::uint32_t> mark;
  std::uint32_t stamp = 0;

  explicit StampSet(std::size_t n) : mark(n, 0) {}
  void clear() {
    if (++stamp == 0) {
      std::fill(mark.begin(), mark.end(), 0);
      stamp = 1;
    }
  }
  void insert(Vertex v) { mark[v] = stamp; }
  bool contains(Vertex v) const { return mark[v] == stamp; }
};

struct DisjointSets {
  std::vector<Vertex> parent;
  explicit DisjointSets(std::size_t n) : parent(n) {
    for (std::size_t i = 0; i < n; ++i) parent[i] = static_cast<Vertex>(i);
  }
  Vertex find(Vertex v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }
  bool unite(Vertex a, Vertex b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

}  // namespace detail

/// Number of connected components of g minus the vertices flagged in
/// `removed` (which may be empty, meaning nothing is removed).
inline std::size_t component_count(const Graph& g, const std::vector<bool>& removed = {}) {
  const std::size_t n = g.vertex_count();
  std::vector<bool> seen(n, false);
  std::vector<Vertex> stack;
  std::size_t components = 0;
  auto gone = [&](Vertex v) { return !removed.empty() && removed[v]; };
  for (Vertex s = 0; s < static_cast<Vertex>(n); ++s) {
    if (seen[s] || gone(s)) continue;
    ++components;
    seen[s] = true;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex u : g.neighbors(v))
        if (!seen[u] && !gone(u)) {
          seen[u] = true;
          stack.push_back(u);
        }
    }
  }
  return components;
}

inline bool is_connected(const Graph& g) { return component_count(g) <= 1; }

/// True iff g - s has at least two components.
inline bool is_separating_set(const Graph& g, std::span<const Vertex> s) {
  std::vector<bool> removed(g.vertex_count(), false);
  for (Vertex v : s) {
    if (!g.contains(v)) throw InputError("vertex id " + std::to_string(v) + " out of range");
    removed[v] = true;
  }
  return component_count(g, removed) >= 2;
}

inline bool is_separating_set(const Graph& g, std::initializer_list<Vertex> s) {
  return is_separating_set(g, std::span<const Vertex>(s.begin(), s.size()));
}

/// Cut vertices of g, found with an iterative low-link DFS.
inline std::vector<Vertex> articulation_points(const Graph& g) {
  const auto n = static_cast<Vertex>(g.vertex_count());
  std::vector<Vertex> disc(n, -1), low(n, 0), parent(n, -1);
  std::vector<std::size_t> next(n, 0);
  std::vector<bool> is_cut(n, false);
  Vertex timer = 0;
  std::vector<Vertex> stack;
  for (Vertex root = 0; root < n; ++root) {
    if (disc[root] != -1) continue;
    int root_children = 0;
    disc[root] = low[root] = timer++;
    stack.push_back(root);
    while (!stack.empty()) {
      Vertex v = stack.back();
      auto nb = g.neighbors(v);
      if (next[v] < nb.size()) {
        Vertex u = nb[next[v]++];
        if (disc[u] == -1) {
          parent[u] = v;
          disc[u] = low[u] = timer++;
          if (v == root) ++root_children;
          stack.push_back(u);
        } else if (u != parent[v]) {
          low[v] = std::min(low[v], disc[u]);
        }
      } else {
        stack.pop_back();
        if (Vertex p = parent[v]; p != -1) {
          low[p] = std::min(low[p], low[v]);
          if (p != root && low[v] >= disc[p]) is_cut[p] = true;
        }
      }
    }
    if (root_children > 1) is_cut[root] = true;
  }
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n; ++v)
    if (is_cut[v]) out.push_back(v);
  return out;
}

/// 2-connectivity. Graphs with fewer than three vertices are never
/// biconnected here; the drivers handle n <= 2 separately.
inline bool is_biconnected(const Graph& g) {
  if (g.vertex_count() < 3) return false;
  return is_connected(g) && articulation_points(g).empty();
}

/// Why a candidate tree failed verification. `vertex` is the first offending
/// vertex where one applies.
struct VerifyReport {
  bool ok = true;
  std::string reason;
  std::optional<Vertex> vertex;
  std::optional<Edge> edge;
};

/// Checks, in order: vertex count, edge count, edges in g, acyclic and
/// spanning, and that every tree neighborhood induces a connected subgraph
/// of g.
inline VerifyReport verify_lcst(const Graph& g, const SpanningTree& t) {
  const std::size_t n = g.vertex_count();
  auto fail = [](std::string why, std::optional<Vertex> v = {}, std::optional<Edge> e = {}) {
    return VerifyReport{false, std::move(why), v, e};
  };
  if (t.n != n) return fail("tree has " + std::to_string(t.n) + " vertices, graph has " + std::to_string(n));
  if (n == 0) return fail("empty graph");
  if (t.edges.size() != n - 1)
    return fail("expected " + std::to_string(n - 1) + " edges, got " + std::to_string(t.edges.size()));

  detail::DisjointSets dsu(n);
  std::vector<std::vector<Vertex>> tree_adj(n);
  for (const Edge& e : t.edges) {
    if (!g.contains(e.u) || !g.contains(e.v)) return fail("edge endpoint out of range", {}, e);
    if (!g.has_edge(e.u, e.v)) return fail("edge not in graph", {}, e);
    if (!dsu.unite(e.u, e.v)) return fail("edges contain a cycle", {}, e);
    tree_adj[e.u].push_back(e.v);
    tree_adj[e.v].push_back(e.u);
  }
  // n-1 edges without a cycle always span.

  detail::StampSet in_set(n), seen(n);
  std::vector<Vertex> stack;
  for (Vertex v = 0; v < static_cast<Vertex>(n); ++v) {
    const auto& members = tree_adj[v];
    if (members.size() <= 1) continue;
    in_set.clear();
    seen.clear();
    for (Vertex u : members) in_set.insert(u);
    std::size_t reached = 1;
    seen.insert(members.front());
    stack.assign(1, members.front());
    while (!stack.empty() && reached < members.size()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (Vertex y : g.neighbors(x))
        if (in_set.contains(y) && !seen.contains(y)) {
          seen.insert(y);
          ++reached;
          stack.push_back(y);
        }
    }
    if (reached < members.size()) return fail("tree neighborhood is disconnected", v);
  }
  return {};
}

inline bool is_locally_connected_spanning_tree(const Graph& g, const SpanningTree& t) {
  return verify_lcst(g, t).ok;
}

/// Answers for graphs with at most two vertices: one vertex has the empty
/// tree, two adjacent vertices have their edge, anything else is refused.
inline std::optional<TreeOutcome> small_graph_outcome(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 1) return TreeOutcome(SpanningTree{1, {}});
  if (n == 2) {
    if (g.has_edge(0, 1)) return TreeOutcome(SpanningTree{2, {{0, 1}}});
    return TreeOutcome::no(Reason::NotBiconnected, {0, 1});
  }
  return std::nullopt;
}

}  // namespace lcst

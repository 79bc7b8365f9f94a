#pragma once

// Elimination orders on chordal graphs and the spanning tree construction
// for strongly chordal graphs.

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "lcst/graph.hpp"

namespace lcst {

/// A permutation of the vertex ids read as an elimination order: position 0
/// is eliminated first. Residual graph G_i is induced by positions >= i.
class VertexOrder {
 public:
  VertexOrder() = default;

  /// Throws InputError unless `order` is a permutation of 0..size-1.
  explicit VertexOrder(std::vector<Vertex> order) : order_(std::move(order)) {
    const std::size_t n = order_.size();
    position_.assign(n, -1);
    for (std::size_t k = 0; k < n; ++k) {
      Vertex v = order_[k];
      if (v < 0 || static_cast<std::size_t>(v) >= n)
        throw InputError("order entry " + std::to_string(v) + " out of range");
      if (position_[v] != -1) throw InputError("order repeats vertex " + std::to_string(v));
      position_[v] = static_cast<Vertex>(k);
    }
  }

  static VertexOrder identity(std::size_t n) {
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), 0);
    return VertexOrder(std::move(order));
  }

  std::size_t size() const { return order_.size(); }
  Vertex at(std::size_t k) const { return order_[k]; }
  Vertex position(Vertex v) const { return position_[v]; }
  const std::vector<Vertex>& vertices() const { return order_; }

  friend bool operator==(const VertexOrder&, const VertexOrder&) = default;

 private:
  std::vector<Vertex> order_;
  std::vector<Vertex> position_;  // inverse permutation
};

namespace detail {

inline void require_matching(const Graph& g, const VertexOrder& ord) {
  if (ord.size() != g.vertex_count())
    throw InputError("order has " + std::to_string(ord.size()) + " entries, graph has " +
                     std::to_string(g.vertex_count()) + " vertices");
}

/// Neighbors of v at positions after v's own.
inline std::vector<Vertex> later_neighbors(const Graph& g, const VertexOrder& ord, Vertex v) {
  std::vector<Vertex> out;
  for (Vertex u : g.neighbors(v))
    if (ord.position(u) > ord.position(v)) out.push_back(u);
  std::sort(out.begin(), out.end(),
            [&](Vertex a, Vertex b) { return ord.position(a) < ord.position(b); });
  return out;
}

}  // namespace detail

/// Each vertex's later neighbors form a clique. Uses the parent test: the
/// earliest later neighbor p of v must be adjacent to all other later
/// neighbors of v.
inline bool is_perfect_elimination_order(const Graph& g, const VertexOrder& ord) {
  detail::require_matching(g, ord);
  for (Vertex v = 0; v < static_cast<Vertex>(g.vertex_count()); ++v) {
    Vertex parent = -1;
    for (Vertex u : g.neighbors(v))
      if (ord.position(u) > ord.position(v) &&
          (parent == -1 || ord.position(u) < ord.position(parent)))
        parent = u;
    if (parent == -1) continue;
    for (Vertex u : g.neighbors(v))
      if (u != parent && ord.position(u) > ord.position(v) && !g.has_edge(parent, u))
        return false;
  }
  return true;
}

/// For every position i, the closed residual neighborhoods of the members of
/// N_{G_i}[v_i], taken in position order, must increase under inclusion.
/// Inclusion is transitive, so checking consecutive members is enough.
/// Not linear; used for validation and by tests.
inline bool is_strong_elimination_order(const Graph& g, const VertexOrder& ord) {
  detail::require_matching(g, ord);
  const std::size_t n = g.vertex_count();
  detail::StampSet marked(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vertex vi = ord.at(i);
    const auto pos_i = static_cast<Vertex>(i);
    std::vector<Vertex> chain{vi};
    auto later = detail::later_neighbors(g, ord, vi);
    chain.insert(chain.end(), later.begin(), later.end());
    for (std::size_t c = 0; c + 1 < chain.size(); ++c) {
      const Vertex small = chain[c], big = chain[c + 1];
      marked.clear();
      marked.insert(big);
      for (Vertex x : g.neighbors(big))
        if (ord.position(x) >= pos_i) marked.insert(x);
      if (!marked.contains(small)) return false;
      for (Vertex x : g.neighbors(small))
        if (ord.position(x) >= pos_i && !marked.contains(x)) return false;
    }
  }
  return true;
}

/// k-connectivity of a chordal graph read off a perfect elimination order:
/// every vertex at positions 0..n-k-1 needs at least k later neighbors.
inline bool chordal_k_connected(const Graph& g, const VertexOrder& peo, std::size_t k) {
  detail::require_matching(g, peo);
  const std::size_t n = g.vertex_count();
  if (k < 1 || k >= n)
    throw InputError("k must satisfy 1 <= k < n (k=" + std::to_string(k) + ", n=" + std::to_string(n) + ")");
  if (!is_perfect_elimination_order(g, peo))
    throw InputError("order is not a perfect elimination order");
  for (std::size_t i = 0; i + k < n; ++i) {
    const Vertex v = peo.at(i);
    std::size_t later = 0;
    for (Vertex u : g.neighbors(v))
      if (peo.position(u) > static_cast<Vertex>(i)) ++later;
    if (later < k) return false;
  }
  return true;
}

/// Minimum position k whose vertex lies in N[v_i] ∩ N[v_j], straight from
/// the definition. i and j are positions with i < j and v_i adjacent to v_j.
inline std::size_t ell_bruteforce(const Graph& g, const VertexOrder& ord, std::size_t i, std::size_t j) {
  detail::require_matching(g, ord);
  if (!(i < j && j < ord.size())) throw InputError("ell requires positions i < j < n");
  const Vertex a = ord.at(i), b = ord.at(j);
  if (!g.has_edge(a, b)) throw InputError("ell requires adjacent vertices");
  std::size_t best = i;  // v_i itself is a common closed neighbor
  for (Vertex x : g.neighbors(a))
    if (g.has_edge(b, x) && static_cast<std::size_t>(ord.position(x)) < best)
      best = static_cast<std::size_t>(ord.position(x));
  return best;
}

/// Per-vertex neighbor lists sorted by elimination position, plus the split
/// index of the first later neighbor and the closest later neighbor.
class ClosestNeighborTable {
 public:
  static constexpr Vertex kUnset = -1;

  std::span<const Vertex> sorted_neighbors(Vertex v) const {
    return {sorted_.data() + offsets_[v], sorted_.data() + offsets_[v + 1]};
  }
  std::size_t split(Vertex v) const { return split_[v]; }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  std::size_t later_degree(Vertex v) const { return degree(v) - split_[v]; }
  std::optional<Vertex> closest(Vertex v) const {
    if (closest_[v] == kUnset) return std::nullopt;
    return closest_[v];
  }
  std::size_t size() const { return split_.size(); }

 private:
  friend ClosestNeighborTable compute_closest_neighbors(const Graph&, const VertexOrder&);

  std::vector<std::size_t> offsets_;
  std::vector<Vertex> sorted_;
  std::vector<std::size_t> split_;
  std::vector<Vertex> closest_;
};

/// Closest neighbors in O(n + m). Neighbor lists are bucket-sorted by
/// appending each vertex, in order, to the lists of its neighbors. The sweep
/// then gives every unset later neighbor v_{j_k} of v_j the next entry
/// v_{j_{k+1}}, and v_j its first later neighbor if still unset.
///
/// The order is trusted. A non-last vertex with no later neighbor keeps an
/// unset entry (only possible when the graph is disconnected).
inline ClosestNeighborTable compute_closest_neighbors(const Graph& g, const VertexOrder& seo) {
  detail::require_matching(g, seo);
  const std::size_t n = g.vertex_count();
  ClosestNeighborTable t;
  t.offsets_.resize(n + 1);
  t.offsets_[0] = 0;
  for (std::size_t v = 0; v < n; ++v) t.offsets_[v + 1] = t.offsets_[v] + g.degree(static_cast<Vertex>(v));
  t.sorted_.resize(t.offsets_[n]);
  t.split_.resize(n);
  std::vector<std::size_t> fill(t.offsets_.begin(), t.offsets_.end() - 1);

  for (Vertex v : seo.vertices()) {
    t.split_[v] = fill[v] - t.offsets_[v];
    for (Vertex u : g.neighbors(v)) t.sorted_[fill[u]++] = v;
  }

  t.closest_.assign(n, ClosestNeighborTable::kUnset);
  for (Vertex v : seo.vertices()) {
    const Vertex* it = t.sorted_.data() + t.offsets_[v] + t.split_[v];
    const Vertex* end = t.sorted_.data() + t.offsets_[v + 1];
    if (it == end) continue;
    if (t.closest_[v] == ClosestNeighborTable::kUnset) t.closest_[v] = *it;
    for (; it + 1 < end; ++it) {
      Vertex& slot = t.closest_[*it];
      if (slot == ClosestNeighborTable::kUnset) slot = it[1];
    }
  }
  return t;
}

enum class OrderCheck { Trust, Validate };

/// Locally connected spanning tree of a strongly chordal graph, given a
/// strong elimination order. Seeds the tree with the last two vertices, then
/// walks positions n-3..0 attaching each vertex to its closest neighbor. A
/// vertex with fewer than two later neighbors proves the graph is not
/// 2-connected and ends the run with a refusal.
///
/// With OrderCheck::Validate an order that is not strong throws InputError;
/// otherwise the order is trusted and the run is linear.
inline TreeOutcome lcst_strongly_chordal(const Graph& g, const VertexOrder& seo,
                                         OrderCheck check = OrderCheck::Trust) {
  detail::require_matching(g, seo);
  const std::size_t n = g.vertex_count();
  if (n == 0) throw InputError("graph has no vertices");
  if (check == OrderCheck::Validate && !is_strong_elimination_order(g, seo))
    throw InputError("order is not a strong elimination order");
  if (auto small = small_graph_outcome(g)) return *small;

  const ClosestNeighborTable table = compute_closest_neighbors(g, seo);
  const Vertex second_last = seo.at(n - 2), last = seo.at(n - 1);
  if (table.later_degree(second_last) == 0)
    return TreeOutcome::no(Reason::NotBiconnected, {second_last, last});

  SpanningTree tree{n, {}};
  tree.edges.reserve(n - 1);
  tree.edges.push_back({second_last, last});
  for (std::size_t i = n - 2; i-- > 0;) {
    const Vertex v = seo.at(i);
    if (table.later_degree(v) <= 1) return TreeOutcome::no(Reason::NotBiconnected, {v});
    tree.edges.push_back({v, *table.closest(v)});
  }
  return tree;
}

namespace detail {

using Bits = boost::dynamic_bitset<>;

inline std::vector<Bits> closed_neighborhoods(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<Bits> nb(n, Bits(n));
  for (std::size_t v = 0; v < n; ++v) {
    nb[v].set(v);
    for (Vertex u : g.neighbors(static_cast<Vertex>(v))) nb[v].set(u);
  }
  return nb;
}

/// Members of N_R[x] sorted so that their closed R-neighborhoods increase,
/// or nullopt when those neighborhoods are not a chain (x is not simple).
inline std::optional<std::vector<std::size_t>> simple_chain(const std::vector<Bits>& nb,
                                                            const Bits& alive, std::size_t x) {
  const Bits closed = nb[x] & alive;
  std::vector<std::size_t> members;
  for (auto u = closed.find_first(); u != Bits::npos; u = closed.find_next(u)) members.push_back(u);
  std::vector<std::pair<std::size_t, std::size_t>> by_size;
  by_size.reserve(members.size());
  for (std::size_t u : members) by_size.emplace_back((nb[u] & alive).count(), u);
  std::sort(by_size.begin(), by_size.end());
  for (std::size_t c = 0; c + 1 < by_size.size(); ++c) {
    const std::size_t a = by_size[c].second, b = by_size[c + 1].second;
    if (!(nb[a] & alive).is_subset_of(nb[b] & alive)) return std::nullopt;
  }
  std::vector<std::size_t> chain;
  for (auto& [size, u] : by_size) chain.push_back(u);
  return chain;
}

/// Depth-first search for a strong elimination order. `before[v]` holds
/// vertices that must be eliminated before v because their residual
/// neighborhood was strictly smaller inside some earlier neighborhood.
struct SeoSearch {
  const std::vector<Bits>& nb;
  std::size_t n;
  std::vector<Vertex> order;

  bool extend(const Bits& alive, const std::vector<Bits>& before) {
    if (alive.none()) return true;
    std::vector<std::pair<std::size_t, std::size_t>> candidates;
    for (auto x = alive.find_first(); x != Bits::npos; x = alive.find_next(x))
      if (!before[x].intersects(alive)) candidates.emplace_back((nb[x] & alive).count(), x);
    std::sort(candidates.begin(), candidates.end());
    for (auto& [deg, x] : candidates) {
      auto chain = simple_chain(nb, alive, x);
      if (!chain) continue;
      std::vector<Bits> next_before = before;
      bool consistent = true;
      // Members whose residual neighborhood is strictly smaller than b's
      // (everything before b's tie group) must precede b.
      std::size_t group_start = 0;
      for (std::size_t c = 1; c < chain->size() && consistent; ++c) {
        const std::size_t b = (*chain)[c];
        if ((nb[(*chain)[c - 1]] & alive) != (nb[b] & alive)) group_start = c;
        for (std::size_t d = 0; d < group_start; ++d) {
          const std::size_t lower = (*chain)[d];
          if (next_before[lower].test(b)) consistent = false;
          next_before[b].set(lower);
        }
      }
      if (!consistent) continue;
      Bits rest = alive;
      rest.reset(x);
      order.push_back(static_cast<Vertex>(x));
      if (extend(rest, next_before)) return true;
      order.pop_back();
    }
    return false;
  }
};

/// True iff repeatedly deleting a simple vertex empties the graph, which
/// characterizes strongly chordal graphs.
inline bool has_simple_elimination(const std::vector<Bits>& nb, std::size_t n) {
  Bits alive(n);
  alive.set();
  for (std::size_t step = 0; step < n; ++step) {
    bool removed = false;
    for (auto x = alive.find_first(); x != Bits::npos; x = alive.find_next(x))
      if (simple_chain(nb, alive, x)) {
        alive.reset(x);
        removed = true;
        break;
      }
    if (!removed) return false;
  }
  return true;
}

}  // namespace detail

/// Finds some strong elimination order, or nullopt if the graph is not
/// strongly chordal. Oracle-grade: polynomial recognition by simple-vertex
/// deletion, then a complete backtracking search that places one vertex at
/// a time while keeping the accumulated precedence constraints satisfiable.
/// Meant for graphs up to a few hundred vertices.
inline std::optional<VertexOrder> find_seo_naive(const Graph& g) {
  const std::size_t n = g.vertex_count();
  const auto nb = detail::closed_neighborhoods(g);
  if (!detail::has_simple_elimination(nb, n)) return std::nullopt;
  detail::SeoSearch search{nb, n, {}};
  detail::Bits alive(n);
  alive.set();
  std::vector<detail::Bits> before(n, detail::Bits(n));
  if (!search.extend(alive, before)) return std::nullopt;
  return VertexOrder(std::move(search.order));
}

}  // namespace lcst

#pragma once

// Test-side ground truth. Everything here works from definitions on small
// inputs and shares no code with the library beyond the Graph container.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <queue>
#include <set>
#include <vector>

#include "lcst/circular_arc.hpp"
#include "lcst/elimination.hpp"
#include "lcst/graph.hpp"

namespace oracle {

using lcst::Edge;
using lcst::Graph;
using lcst::Vertex;

inline std::vector<std::vector<bool>> adjacency_matrix(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<bool>> a(n, std::vector<bool>(n, false));
  for (const Edge& e : g.edges()) a[e.u][e.v] = a[e.v][e.u] = true;
  return a;
}

/// Number of connected components of g minus `removed`, by BFS on a matrix.
inline std::size_t components(const Graph& g, const std::vector<bool>& removed) {
  const auto a = adjacency_matrix(g);
  const std::size_t n = a.size();
  std::vector<bool> seen(removed);
  std::size_t count = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    ++count;
    std::queue<std::size_t> q;
    q.push(s);
    seen[s] = true;
    while (!q.empty()) {
      const std::size_t x = q.front();
      q.pop();
      for (std::size_t y = 0; y < n; ++y)
        if (a[x][y] && !seen[y]) seen[y] = true, q.push(y);
    }
  }
  return count;
}

inline bool separates(const Graph& g, const std::vector<Vertex>& s) {
  std::vector<bool> removed(g.vertex_count(), false);
  for (Vertex v : s) removed[v] = true;
  return components(g, removed) >= 2;
}

/// Definition: a spanning tree whose tree neighborhoods induce connected
/// subgraphs. Checks the tree property via edge count plus connectivity.
inline bool is_lcst(const Graph& g, const std::vector<Edge>& tree) {
  const std::size_t n = g.vertex_count();
  if (n == 0 || tree.size() != n - 1) return false;
  const auto a = adjacency_matrix(g);
  std::vector<std::vector<Vertex>> nb(n);
  std::vector<Edge> t_edges;
  for (const Edge& e : tree) {
    if (e.u < 0 || e.v < 0 || e.u >= static_cast<Vertex>(n) || e.v >= static_cast<Vertex>(n)) return false;
    if (!a[e.u][e.v]) return false;
    nb[e.u].push_back(e.v);
    nb[e.v].push_back(e.u);
    t_edges.push_back(e);
  }
  const Graph t(n, t_edges);
  if (t.edge_count() != n - 1 || components(t, std::vector<bool>(n, false)) != 1) return false;
  for (std::size_t v = 0; v < n; ++v) {
    // Connected iff removing everything outside nb[v] leaves one component.
    if (nb[v].empty()) continue;
    std::vector<bool> outside(n, true);
    for (Vertex u : nb[v]) outside[u] = false;
    if (components(g, outside) != 1) return false;
  }
  return true;
}

inline Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) edges.push_back({perm[e.u], perm[e.v]});
  return Graph(g.vertex_count(), edges);
}

/// Later neighbors of every position form a clique, checked pair by pair.
inline bool is_peo(const Graph& g, const std::vector<Vertex>& ord) {
  const auto a = adjacency_matrix(g);
  const std::size_t n = ord.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        if (a[ord[i]][ord[j]] && a[ord[i]][ord[k]] && !a[ord[j]][ord[k]]) return false;
  return true;
}

/// Strong elimination order by the full triple condition: for i <= j <= k
/// with v_j, v_k in N_{G_i}[v_i], N_{G_i}[v_j] is a subset of N_{G_i}[v_k].
inline bool is_seo(const Graph& g, const std::vector<Vertex>& ord) {
  if (!is_peo(g, ord)) return false;
  auto a = adjacency_matrix(g);
  const std::size_t n = ord.size();
  for (std::size_t v = 0; v < n; ++v) a[v][v] = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      if (!a[ord[i]][ord[j]]) continue;
      for (std::size_t k = j; k < n; ++k) {
        if (!a[ord[i]][ord[k]]) continue;
        for (std::size_t x = i; x < n; ++x)
          if (a[ord[j]][ord[x]] && !a[ord[k]][ord[x]]) return false;
      }
    }
  return true;
}

template <class F>
void for_each_permutation(std::size_t n, F&& f) {
  std::vector<Vertex> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    f(p);
  } while (std::next_permutation(p.begin(), p.end()));
}

inline bool has_seo_exhaustive(const Graph& g) {
  bool found = false;
  for_each_permutation(g.vertex_count(), [&](const std::vector<Vertex>& p) {
    if (!found && is_seo(g, p)) found = true;
  });
  return found;
}

/// Every perfect elimination order, built by repeatedly choosing a vertex
/// whose remaining neighbors are pairwise adjacent.
inline std::vector<std::vector<Vertex>> all_peos(const Graph& g) {
  const auto a = adjacency_matrix(g);
  const std::size_t n = a.size();
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> prefix;
  std::vector<bool> gone(n, false);
  auto simplicial = [&](std::size_t v) {
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = x + 1; y < n; ++y)
        if (!gone[x] && !gone[y] && x != v && y != v && a[v][x] && a[v][y] && !a[x][y]) return false;
    return true;
  };
  auto rec = [&](auto&& self) -> void {
    if (prefix.size() == n) {
      out.push_back(prefix);
      return;
    }
    for (std::size_t v = 0; v < n; ++v) {
      if (gone[v] || !simplicial(v)) continue;
      gone[v] = true;
      prefix.push_back(static_cast<Vertex>(v));
      self(self);
      prefix.pop_back();
      gone[v] = false;
    }
  };
  rec(rec);
  return out;
}

inline bool is_chordal(const Graph& g) {
  // Greedy simplicial elimination succeeds iff the graph is chordal.
  const auto a = adjacency_matrix(g);
  const std::size_t n = a.size();
  std::vector<bool> gone(n, false);
  for (std::size_t step = 0; step < n; ++step) {
    bool removed = false;
    for (std::size_t v = 0; v < n && !removed; ++v) {
      if (gone[v]) continue;
      bool ok = true;
      for (std::size_t x = 0; x < n && ok; ++x)
        for (std::size_t y = x + 1; y < n && ok; ++y)
          if (!gone[x] && !gone[y] && x != v && y != v && a[v][x] && a[v][y] && !a[x][y]) ok = false;
      if (ok) gone[v] = removed = true;
    }
    if (!removed) return false;
  }
  return true;
}

/// Spanning tree count by the matrix-tree theorem: determinant of the
/// Laplacian with one row and column deleted, via fraction-free elimination.
inline std::int64_t kirchhoff_count(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n <= 1) return 1;
  const std::size_t k = n - 1;
  std::vector<std::vector<std::int64_t>> m(k, std::vector<std::int64_t>(k, 0));
  for (const Edge& e : g.edges()) {
    const auto u = static_cast<std::size_t>(e.u), v = static_cast<std::size_t>(e.v);
    if (u < k) m[u][u]++;
    if (v < k) m[v][v]++;
    if (u < k && v < k) m[u][v]--, m[v][u]--;
  }
  std::int64_t sign = 1, prev = 1;
  for (std::size_t p = 0; p < k; ++p) {
    if (m[p][p] == 0) {
      std::size_t r = p + 1;
      while (r < k && m[r][p] == 0) ++r;
      if (r == k) return 0;
      std::swap(m[p], m[r]);
      sign = -sign;
    }
    for (std::size_t i = p + 1; i < k; ++i)
      for (std::size_t j = p + 1; j < k; ++j) m[i][j] = (m[i][j] * m[p][p] - m[i][p] * m[p][j]) / prev;
    prev = m[p][p];
  }
  return sign * m[k - 1][k - 1];
}

/// Smallest ℓ: the minimum position among vertices adjacent-or-equal to
/// both ord[i] and ord[j].
inline std::size_t ell(const Graph& g, const std::vector<Vertex>& ord, std::size_t i, std::size_t j) {
  auto a = adjacency_matrix(g);
  for (std::size_t v = 0; v < a.size(); ++v) a[v][v] = true;
  for (std::size_t k = 0; k < ord.size(); ++k)
    if (a[ord[i]][ord[k]] && a[ord[j]][ord[k]]) return k;
  return ord.size();
}

// ---------------------------------------------------------------- arcs

/// The points covered by an arc, walked in half steps: point 2p is position
/// p and point 2p+1 is the gap after it. Gaps matter: [3,2] on a circle of
/// six covers every position but not the gap between 2 and 3.
inline std::set<lcst::Position> covered(const lcst::CircularArcModel& m, std::size_t a) {
  const lcst::Position c = 2 * m.circle_size();
  std::set<lcst::Position> out;
  for (lcst::Position p = 2 * m.arcs[a].head;; p = (p + 1) % c) {
    out.insert(p);
    if (p == 2 * m.arcs[a].tail) break;
  }
  return out;
}

inline bool arcs_overlap(const lcst::CircularArcModel& m, std::size_t a, std::size_t b) {
  const auto sa = covered(m, a), sb = covered(m, b);
  return std::any_of(sa.begin(), sa.end(), [&](lcst::Position p) { return sb.count(p) > 0; });
}

inline bool arc_contains_arc(const lcst::CircularArcModel& m, std::size_t outer, std::size_t inner) {
  const auto so = covered(m, outer), si = covered(m, inner);
  return std::includes(so.begin(), so.end(), si.begin(), si.end());
}

inline bool is_proper(const lcst::CircularArcModel& m) {
  for (std::size_t a = 0; a < m.size(); ++a)
    for (std::size_t b = 0; b < m.size(); ++b)
      if (a != b && arc_contains_arc(m, a, b)) return false;
  return true;
}

inline Graph arc_graph(const lcst::CircularArcModel& m) {
  std::vector<Edge> edges;
  for (std::size_t a = 0; a < m.size(); ++a)
    for (std::size_t b = a + 1; b < m.size(); ++b)
      if (arcs_overlap(m, a, b)) edges.push_back({static_cast<Vertex>(a), static_cast<Vertex>(b)});
  return Graph(m.size(), edges);
}

inline std::vector<std::size_t> arc_densities(const lcst::CircularArcModel& m) {
  std::vector<std::size_t> d(m.size(), 0);
  for (std::size_t a = 0; a < m.size(); ++a)
    for (std::size_t b = 0; b < m.size(); ++b) d[a] += covered(m, b).count(2 * m.arcs[a].head);
  return d;
}

inline lcst::CircularArcModel rotate(const lcst::CircularArcModel& m, lcst::Position shift) {
  auto out = m;
  const lcst::Position c = m.circle_size();
  for (auto& arc : out.arcs) {
    arc.head = ((arc.head + shift) % c + c) % c;
    arc.tail = ((arc.tail + shift) % c + c) % c;
  }
  return out;
}

}  // namespace oracle

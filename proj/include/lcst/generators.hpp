#pragma once

// Seeded instance generators. Every generator is a pure function of its
// GenConfig: the same configuration always yields the same instance.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "lcst/circular_arc.hpp"
#include "lcst/elimination.hpp"
#include "lcst/graph.hpp"

namespace lcst {

struct GenConfig {
  std::size_t n = 0;
  std::uint64_t seed = 0;
  /// Class-specific knob in [0, 1]; larger means denser.
  double edge_density = 0.5;
  /// false keeps construction order as vertex ids (memory-local layout).
  bool shuffle_labels = true;
};

namespace detail {

inline std::mt19937_64 make_rng(std::uint64_t seed, std::uint64_t stream = 0) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  return std::mt19937_64(seq);
}

inline std::size_t uniform_below(std::mt19937_64& rng, std::size_t bound) {
  return std::uniform_int_distribution<std::size_t>(0, bound - 1)(rng);
}

inline std::vector<Vertex> random_permutation(std::mt19937_64& rng, std::size_t n) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

inline double clamp_density(double d) { return std::clamp(std::isnan(d) ? 0.0 : d, 0.0, 1.0); }

}  // namespace detail

struct IntervalInstance {
  Graph graph;
  VertexOrder order;  // right-endpoint order
  CircularArcModel model;
};

/// Random intervals laid on the circle without wrapping, so the first head
/// is covered by nothing else. Endpoints are emitted left to right: with k
/// intervals open, the next event closes a uniformly chosen open interval
/// with probability k / (k + target), target growing with edge_density.
inline IntervalInstance gen_interval_graph(const GenConfig& cfg) {
  const std::size_t n = cfg.n;
  auto rng = detail::make_rng(cfg.seed, 0x1417);
  const double target = 1.0 + detail::clamp_density(cfg.edge_density) * static_cast<double>(n > 0 ? n - 1 : 0);
  const auto label = detail::random_permutation(rng, n);

  std::vector<Arc> arcs(n);
  std::vector<std::size_t> open;
  std::size_t opened = 0;
  std::vector<Vertex> by_right;
  by_right.reserve(n);
  for (Position p = 0; p < static_cast<Position>(2 * n); ++p) {
    bool close = false;
    if (opened == n) close = true;
    else if (!open.empty())
      close = std::bernoulli_distribution(static_cast<double>(open.size()) /
                                          (static_cast<double>(open.size()) + target))(rng);
    if (close) {
      const std::size_t slot = detail::uniform_below(rng, open.size());
      const std::size_t id = open[slot];
      open[slot] = open.back();
      open.pop_back();
      arcs[id].tail = p;
      by_right.push_back(static_cast<Vertex>(id));
    } else {
      const std::size_t id = static_cast<std::size_t>(label[opened++]);
      arcs[id].head = p;
      open.push_back(id);
    }
  }
  IntervalInstance out;
  out.model.arcs = std::move(arcs);
  out.graph = intersection_graph(out.model).graph;
  out.order = VertexOrder(std::move(by_right));
  return out;
}

struct ChordalInstance {
  Graph graph;
  VertexOrder peo;
};

/// Random connected chordal graph built back to front along a random
/// perfect elimination order: each new vertex joins a random later vertex p
/// (not the last one unless it must) and each later neighbor of p independently with probability edge_density.
/// If that picks none of them, one is still added with probability
/// edge_density, so near 1 most vertices get two later neighbors and
/// 2-connected outputs become common.
inline ChordalInstance gen_chordal(const GenConfig& cfg, std::uint64_t stream = 0) {
  const std::size_t n = cfg.n;
  auto rng = detail::make_rng(cfg.seed, 0xC407 + stream);
  const double p_extra = detail::clamp_density(cfg.edge_density);
  const auto label = detail::random_permutation(rng, n);  // label[pos] = vertex
  std::vector<std::vector<std::size_t>> later(n);         // by position
  std::vector<Edge> edges;
  for (std::size_t pos = n - std::min<std::size_t>(n, 1); pos-- > 0;) {
    // Below position n-2 the parent skips the last vertex, which has no later
    // neighbors to share.
    const std::size_t span = pos + 2 < n ? n - pos - 2 : 1;
    const std::size_t parent = pos + 1 + detail::uniform_below(rng, span);
    later[pos].push_back(parent);
    for (std::size_t q : later[parent])
      if (std::bernoulli_distribution(p_extra)(rng)) later[pos].push_back(q);
    if (later[pos].size() == 1 && !later[parent].empty() && std::bernoulli_distribution(p_extra)(rng))
      later[pos].push_back(later[parent][detail::uniform_below(rng, later[parent].size())]);
    for (std::size_t q : later[pos]) edges.push_back({label[pos], label[q]});
  }
  return {Graph(n, edges), VertexOrder(std::vector<Vertex>(label.begin(), label.end()))};
}

struct StronglyChordalInstance {
  Graph graph;
  VertexOrder order;      // a strong elimination order
  std::size_t attempts;   // chordal graphs drawn, including the accepted one
};

/// Rejection sampling: draw chordal graphs with gen_chordal (attempt a uses
/// stream a) and keep the first one find_seo_naive accepts. Returns nullopt
/// after `max_attempts` rejections; callers move on to another seed.
inline std::optional<StronglyChordalInstance> gen_strongly_chordal(const GenConfig& cfg,
                                                                   std::size_t max_attempts = 64) {
  for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
    auto chordal = gen_chordal(cfg, attempt);
    if (auto seo = find_seo_naive(chordal.graph))
      return StronglyChordalInstance{std::move(chordal.graph), std::move(*seo), attempt + 1};
  }
  return std::nullopt;
}

/// Strongly chordal graphs of any size, grown by prepending vertices to a
/// strong elimination order. A new first vertex x may join a clique S whose
/// closed neighborhoods increase (under inclusion) with position; then the
/// extended order is still strong. S is an anchor a plus a later neighbor w
/// with N[a] ⊆ N[w], and with probability edge_density one more such step.
/// Every vertex but the last gets at least two later neighbors, so the
/// result is 2-connected for n >= 3. Average degree stays bounded.
/// A nonzero `anchor_window` draws anchors among the most recent vertices
/// only, which keeps neighbors close in id and in position.
inline ChordalInstance gen_strongly_chordal_by_extension(const GenConfig& cfg, std::size_t anchor_window = 0) {
  const std::size_t n = cfg.n;
  auto rng = detail::make_rng(cfg.seed, 0x5EED);
  const double p_third = detail::clamp_density(cfg.edge_density);
  // Vertices are numbered by creation; creation index t sits at position n-1-t.
  std::vector<std::vector<Vertex>> adj(n);
  std::vector<Vertex> first_later(n, -1);
  detail::StampSet marks(n);
  auto link = [&](Vertex a, Vertex b) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  };
  // w is created before a (so comes later in the order) and N[a] ⊆ N[w].
  auto dominated_by = [&](Vertex a, Vertex w) {
    marks.clear();
    marks.insert(w);
    for (Vertex x : adj[w]) marks.insert(x);
    if (!marks.contains(a)) return false;
    for (Vertex x : adj[a])
      if (!marks.contains(x)) return false;
    return true;
  };
  auto grow = [&](Vertex a) -> std::optional<Vertex> {
    if (adj[a].size() > 24) return std::nullopt;
    const std::size_t deg = adj[a].size();
    const std::size_t shift = deg ? detail::uniform_below(rng, deg) : 0;
    for (std::size_t i = 0; i < deg; ++i) {
      Vertex w = adj[a][(i + shift) % deg];
      if (w < a && adj[w].size() <= 64 && dominated_by(a, w)) return w;
    }
    return std::nullopt;
  };

  if (n >= 2) link(0, 1), first_later[1] = 0;
  for (Vertex x = 2; x < static_cast<Vertex>(n); ++x) {
    std::vector<Vertex> clique;
    for (int tries = 0; tries < 4 && clique.empty(); ++tries) {
      const auto span = static_cast<std::size_t>(x) - 1;
      const std::size_t reach = anchor_window ? std::min(anchor_window, span) : span;
      Vertex a = static_cast<Vertex>(x - 1 - static_cast<Vertex>(detail::uniform_below(rng, reach)));
      if (auto w = grow(a)) clique = {a, *w};
    }
    if (clique.empty()) clique = {x - 1, first_later[x - 1]};
    if (std::bernoulli_distribution(p_third)(rng))
      if (auto w2 = grow(clique.back())) clique.push_back(*w2);
    first_later[x] = clique.front();
    for (Vertex s : clique) link(x, s);
  }

  auto label = detail::random_permutation(rng, n);
  if (!cfg.shuffle_labels) std::iota(label.begin(), label.end(), 0);
  std::vector<Edge> edges;
  for (Vertex v = 0; v < static_cast<Vertex>(n); ++v)
    for (Vertex u : adj[v])
      if (v < u) edges.push_back({label[v], label[u]});
  std::vector<Vertex> order(n);
  for (std::size_t t = 0; t < n; ++t) order[n - 1 - t] = label[t];
  return {Graph(n, edges), VertexOrder(std::move(order))};
}

/// Proper circular-arc model. Heads are laid out in cyclic order; arc i
/// covers the next c_i heads, where c_i is drawn uniformly from
/// [min_cover, hi] (hi grows with edge_density) and then raised so that
/// c_{i+1} >= c_i - 1 around the whole circle. That keeps tails in the same
/// cyclic order as heads, so no arc contains another. Positions are rotated
/// and arc ids shuffled at the end.
inline CircularArcModel gen_proper_circular_arc_model(const GenConfig& cfg, std::size_t min_cover = 0) {
  const std::size_t n = cfg.n;
  CircularArcModel model;
  if (n == 0) return model;
  auto rng = detail::make_rng(cfg.seed, 0xA4C);
  const std::size_t top = n - 1;
  const std::size_t lo = std::min(min_cover, top);
  const auto scaled = static_cast<std::size_t>(std::lround(detail::clamp_density(cfg.edge_density) * static_cast<double>(top)));
  const std::size_t hi = std::clamp(scaled, lo, top);

  std::vector<std::size_t> cover(n);
  std::uniform_int_distribution<std::size_t> draw(lo, hi);
  cover[0] = draw(rng);
  for (std::size_t i = 1; i < n; ++i) cover[i] = std::max(cover[i - 1] ? cover[i - 1] - 1 : 0, draw(rng));
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t next = (i + 1) % n;
      if (cover[i] >= 1 && cover[next] < cover[i] - 1) {
        cover[next] = cover[i] - 1;
        changed = true;
      }
    }
  }

  // Tails go into the gap after head (i + c_i) mod n. Within a gap, arcs
  // whose reach wrapped past head n-1 come first, then by index.
  std::vector<std::vector<std::size_t>> gap(n);
  for (std::size_t i = 0; i < n; ++i) gap[(i + cover[i]) % n].push_back(i);
  for (auto& g : gap)
    std::sort(g.begin(), g.end(), [&](std::size_t a, std::size_t b) {
      const bool wa = a + cover[a] >= n, wb = b + cover[b] >= n;
      return wa != wb ? wa : a < b;
    });

  const Position circle = 2 * static_cast<Position>(n);
  const auto shift = static_cast<Position>(detail::uniform_below(rng, static_cast<std::size_t>(circle)));
  auto label = detail::random_permutation(rng, n);
  if (!cfg.shuffle_labels) std::iota(label.begin(), label.end(), 0);
  model.arcs.resize(n);
  Position p = 0;
  for (std::size_t j = 0; j < n; ++j) {
    model.arcs[label[j]].head = (p++ + shift) % circle;
    for (std::size_t i : gap[j]) model.arcs[label[i]].tail = (p++ + shift) % circle;
  }
  return model;
}

}  // namespace lcst

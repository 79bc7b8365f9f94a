#pragma once

// Circular-arc intersection models on a discrete circle and the spanning
// tree construction for proper circular-arc graphs.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <set>
#include <string>
#include <vector>

#include "lcst/elimination.hpp"
#include "lcst/graph.hpp"

namespace lcst {

using Position = std::int64_t;

/// Arc running counterclockwise (increasing position) from head to tail,
/// both endpoints included.
struct Arc {
  Position head = 0;
  Position tail = 0;

  friend bool operator==(const Arc&, const Arc&) = default;
};

/// n arcs on a circle with positions 0..2n-1. Arc i is vertex i of the
/// intersection graph.
struct CircularArcModel {
  std::vector<Arc> arcs;

  std::size_t size() const { return arcs.size(); }
  Position circle_size() const { return 2 * static_cast<Position>(arcs.size()); }

  /// Whether point x lies on arc `a`.
  bool contains(std::size_t a, Position x) const {
    const Position c = circle_size();
    const Arc& arc = arcs[a];
    return mod(x - arc.head, c) <= mod(arc.tail - arc.head, c);
  }

  /// Arcs share a point iff one contains the other's head.
  bool overlap(std::size_t a, std::size_t b) const {
    return contains(a, arcs[b].head) || contains(b, arcs[a].head);
  }

  static Position mod(Position x, Position c) {
    x %= c;
    return x < 0 ? x + c : x;
  }

  friend bool operator==(const CircularArcModel&, const CircularArcModel&) = default;
};

enum class ModelViolation { PositionOutOfRange, DuplicateEndpoint, FullCircle, Containment };

inline std::string_view to_string(ModelViolation v) {
  switch (v) {
    case ModelViolation::PositionOutOfRange: return "PositionOutOfRange";
    case ModelViolation::DuplicateEndpoint: return "DuplicateEndpoint";
    case ModelViolation::FullCircle: return "FullCircle";
    case ModelViolation::Containment: return "Containment";
  }
  return "Unknown";
}

struct ModelReport {
  bool valid = true;
  bool proper = true;
  /// Containment entries list (outer, inner).
  struct Entry {
    ModelViolation code;
    std::vector<std::size_t> arcs;
    friend bool operator==(const Entry&, const Entry&) = default;
  };
  std::vector<Entry> violations;

  std::string summary() const {
    if (violations.empty()) return "ok";
    std::string s(to_string(violations.front().code));
    for (std::size_t a : violations.front().arcs) s += " " + std::to_string(a);
    return s;
  }
};

namespace detail {

struct Endpoint {
  std::size_t arc = 0;
  bool is_head = false;
};

/// Endpoint at each circle position; only meaningful for valid models.
inline std::vector<Endpoint> endpoint_table(const CircularArcModel& m) {
  std::vector<Endpoint> table(static_cast<std::size_t>(m.circle_size()));
  for (std::size_t a = 0; a < m.size(); ++a) {
    table[m.arcs[a].head] = {a, true};
    table[m.arcs[a].tail] = {a, false};
  }
  return table;
}

inline void require_valid(const CircularArcModel& m);

}  // namespace detail

/// Endpoint range and distinctness, degenerate arcs, and every containment
/// pair. Containment is found by sweeping the circle twice: in a proper
/// family arcs close in the order they open, so any arc still open when a
/// later-opened arc closes contains it.
inline ModelReport validate_arc_model(const CircularArcModel& m) {
  ModelReport report;
  const Position c = m.circle_size();
  std::vector<std::size_t> owner(static_cast<std::size_t>(c), m.size());
  auto claim = [&](std::size_t a, Position p) {
    if (p < 0 || p >= c) {
      report.violations.push_back({ModelViolation::PositionOutOfRange, {a}});
      return;
    }
    if (owner[p] != m.size()) {
      report.violations.push_back({ModelViolation::DuplicateEndpoint, {owner[p], a}});
      return;
    }
    owner[p] = a;
  };
  for (std::size_t a = 0; a < m.size(); ++a) {
    if (m.arcs[a].head == m.arcs[a].tail) report.violations.push_back({ModelViolation::FullCircle, {a}});
    claim(a, m.arcs[a].head);
    if (m.arcs[a].tail != m.arcs[a].head) claim(a, m.arcs[a].tail);
  }
  if (!report.violations.empty()) {
    report.valid = report.proper = false;
    return report;
  }

  const auto table = detail::endpoint_table(m);
  std::set<std::pair<std::size_t, std::size_t>> open;  // (open sequence, arc)
  std::vector<std::size_t> opened_at(m.size(), 0);
  std::vector<bool> is_open(m.size(), false);
  std::set<std::pair<std::size_t, std::size_t>> contained;
  std::size_t sequence = 0;
  for (Position p = 0; p < 2 * c; ++p) {
    const auto& e = table[p % c];
    if (e.is_head) {
      opened_at[e.arc] = sequence;
      open.insert({sequence++, e.arc});
      is_open[e.arc] = true;
    } else if (is_open[e.arc]) {
      const std::pair key{opened_at[e.arc], e.arc};
      for (auto it = open.begin(); *it != key; ++it) contained.insert({it->second, e.arc});
      open.erase(key);
      is_open[e.arc] = false;
    }
  }
  for (auto [outer, inner] : contained)
    report.violations.push_back({ModelViolation::Containment, {outer, inner}});
  report.proper = contained.empty();
  return report;
}

namespace detail {

inline void require_valid(const CircularArcModel& m) {
  auto report = validate_arc_model(m);
  if (!report.valid) throw InputError("invalid arc model: " + report.summary());
}

/// Linear properness test for a valid model: arcs must close first-in
/// first-out over two turns of the circle.
inline bool closes_in_open_order(const CircularArcModel& m, const std::vector<Endpoint>& table) {
  const Position c = m.circle_size();
  std::deque<std::size_t> open;
  std::vector<bool> is_open(m.size(), false);
  for (Position p = 0; p < 2 * c; ++p) {
    const auto& e = table[p % c];
    if (e.is_head) {
      open.push_back(e.arc);
      is_open[e.arc] = true;
    } else if (is_open[e.arc]) {
      if (open.front() != e.arc) return false;
      open.pop_front();
      is_open[e.arc] = false;
    }
  }
  return true;
}

/// Validity plus properness without building the full report.
inline void require_valid_proper(const CircularArcModel& m) {
  const Position c = m.circle_size();
  std::vector<bool> used(static_cast<std::size_t>(c), false);
  for (std::size_t a = 0; a < m.size(); ++a)
    for (Position p : {m.arcs[a].head, m.arcs[a].tail}) {
      if (p < 0 || p >= c || used[p]) {
        require_valid(m);  // throws with the full diagnosis
        throw InputError("invalid arc model");
      }
      used[p] = true;
    }
  if (!closes_in_open_order(m, endpoint_table(m))) {
    auto report = validate_arc_model(m);
    throw InputError("arc model is not proper: " + report.summary());
  }
}

}  // namespace detail

namespace detail {

inline std::vector<std::size_t> density_sweep(const CircularArcModel& m, const std::vector<Endpoint>& table) {
  std::vector<std::size_t> d(m.size(), 0);
  std::size_t active = 0;
  for (const Arc& a : m.arcs)
    if (a.head > a.tail) ++active;  // wraps through position 0
  for (const auto& e : table) {
    if (e.is_head) {
      ++active;
      d[e.arc] = active;
    } else {
      --active;
    }
  }
  return d;
}

}  // namespace detail

/// d(v): number of arcs, v included, containing the head of v.
inline std::vector<std::size_t> densities(const CircularArcModel& m) {
  detail::require_valid(m);
  return detail::density_sweep(m, detail::endpoint_table(m));
}

/// Arcs in the order their heads are met going counterclockwise from the
/// head of `start`.
inline VertexOrder head_order(const CircularArcModel& m, std::size_t start) {
  detail::require_valid(m);
  if (start >= m.size()) throw InputError("start arc out of range");
  const auto table = detail::endpoint_table(m);
  std::vector<Vertex> order;
  order.reserve(m.size());
  const Position c = m.circle_size();
  for (Position p = 0; p < c; ++p) {
    const auto& e = table[(m.arcs[start].head + p) % c];
    if (e.is_head) order.push_back(static_cast<Vertex>(e.arc));
  }
  return VertexOrder(std::move(order));
}

/// Intersection graph; vertex i is arc i.
struct ArcGraph {
  Graph graph;
  std::vector<Vertex> vertex_of_arc;
  std::vector<std::size_t> arc_of_vertex;
};

/// Walks each arc from head to tail collecting the heads it covers, so the
/// cost is proportional to the number of endpoints inside arcs, O(n + m).
inline ArcGraph intersection_graph(const CircularArcModel& m) {
  detail::require_valid(m);
  const std::size_t n = m.size();
  const Position c = m.circle_size();
  const auto table = detail::endpoint_table(m);
  std::vector<std::vector<Vertex>> adj(n);
  for (std::size_t a = 0; a < n; ++a) {
    const Position len = CircularArcModel::mod(m.arcs[a].tail - m.arcs[a].head, c);
    for (Position step = 1; step <= len; ++step) {
      const auto& e = table[(m.arcs[a].head + step) % c];
      if (e.is_head) {
        adj[a].push_back(static_cast<Vertex>(e.arc));
        adj[e.arc].push_back(static_cast<Vertex>(a));
      }
    }
  }
  ArcGraph out{Graph::from_adjacency(std::move(adj)), {}, {}};
  out.vertex_of_arc.resize(n);
  out.arc_of_vertex.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    out.vertex_of_arc[a] = static_cast<Vertex>(a);
    out.arc_of_vertex[a] = a;
  }
  return out;
}

struct IntervalReduction {
  Graph graph;
  VertexOrder order;  // by increasing right endpoint
  std::vector<std::pair<Position, Position>> intervals;
  std::size_t cut_arc = 0;
};

/// Cuts the circle just before the head of the lowest-numbered density-1
/// arc. Nothing crosses the cut, so every arc becomes an
/// interval, and ordering intervals by right endpoint gives a strong
/// elimination order of the intersection graph.
inline IntervalReduction reduce_to_interval(const CircularArcModel& m) {
  const auto d = densities(m);
  std::size_t cut = m.size();
  for (std::size_t a = 0; a < m.size(); ++a)
    if (d[a] == 1 && cut == m.size()) cut = a;
  if (cut == m.size()) throw InputError("no arc has density 1; the model is not an interval model");

  const Position c = m.circle_size(), origin = m.arcs[cut].head;
  IntervalReduction out;
  out.cut_arc = cut;
  out.intervals.resize(m.size());
  std::vector<Vertex> by_right(static_cast<std::size_t>(c), -1);
  for (std::size_t a = 0; a < m.size(); ++a) {
    const Position left = CircularArcModel::mod(m.arcs[a].head - origin, c);
    const Position right = CircularArcModel::mod(m.arcs[a].tail - origin, c);
    out.intervals[a] = {left, right};
    by_right[right] = static_cast<Vertex>(a);
  }
  std::vector<Vertex> order;
  order.reserve(m.size());
  for (Vertex a : by_right)
    if (a != -1) order.push_back(a);
  out.order = VertexOrder(std::move(order));
  out.graph = intersection_graph(m).graph;
  return out;
}

/// Locally connected spanning tree of a proper circular-arc graph from its
/// model. Dispatch order: a density-1 arc sends the model through the
/// interval reduction; four or more density-2 arcs are refused; otherwise
/// zero/one, two, or three density-2 arcs pick the construction.
///
/// With every density at least 2, the arc containing the head of a density-2
/// arc is its predecessor in head order, so all "coverer" lookups are O(1).
inline TreeOutcome lcst_proper_circular_arc(const CircularArcModel& m) {
  const std::size_t n = m.size();
  if (n == 0) throw InputError("arc model has no arcs");
  detail::require_valid_proper(m);
  if (n <= 2) return *small_graph_outcome(intersection_graph(m).graph);

  const auto table = detail::endpoint_table(m);
  const auto d = detail::density_sweep(m, table);
  for (std::size_t a = 0; a < n; ++a)
    if (d[a] == 1) {
      auto reduced = reduce_to_interval(m);
      return lcst_strongly_chordal(reduced.graph, reduced.order);
    }

  // Head order starting at arc 0, so nothing depends on where position 0
  // lies; cyclic successor/predecessor by index.
  std::vector<std::size_t> cyc;
  cyc.reserve(n);
  for (const auto& e : table)
    if (e.is_head) cyc.push_back(e.arc);
  std::rotate(cyc.begin(), std::find(cyc.begin(), cyc.end(), std::size_t{0}), cyc.end());
  std::vector<std::size_t> index(n);
  for (std::size_t i = 0; i < n; ++i) index[cyc[i]] = i;
  auto pred = [&](std::size_t a) { return cyc[(index[a] + n - 1) % n]; };
  auto succ = [&](std::size_t a) { return cyc[(index[a] + 1) % n]; };
  auto coverer = [&](std::size_t low) {
    const std::size_t p = pred(low);
    if (!m.contains(p, m.arcs[low].head))
      throw std::logic_error("predecessor does not cover a density-2 head");
    return p;
  };
  auto rotated_from = [&](std::size_t first) {
    std::vector<std::size_t> seq(n);
    for (std::size_t i = 0; i < n; ++i) seq[i] = cyc[(index[first] + i) % n];
    return seq;
  };
  auto v = [](std::size_t a) { return static_cast<Vertex>(a); };

  // Path v_1 v_2 ... v_n; each v_i (i >= 3) must see v_{i-1} and v_{i-2}.
  auto head_order_path = [&](std::size_t first) {
    const auto seq = rotated_from(first);
    SpanningTree tree{n, {}};
    tree.edges.reserve(n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      if (!m.overlap(seq[i], seq[i - 1]) || (i >= 2 && !m.overlap(seq[i], seq[i - 2])))
        throw std::logic_error("head-order path lost local adjacency");
      tree.edges.push_back({v(seq[i]), v(seq[i - 1])});
    }
    return TreeOutcome(std::move(tree));
  };

  std::vector<std::size_t> low;
  for (std::size_t a : cyc)
    if (d[a] == 2) low.push_back(a);

  if (low.size() >= 4)
    return TreeOutcome::no(Reason::FourLowDensityArcs, {v(low[0]), v(low[1]), v(low[2]), v(low[3])});

  if (low.empty()) return head_order_path(cyc[0]);
  if (low.size() == 1) return head_order_path(coverer(low[0]));

  if (low.size() == 2) {
    const std::size_t x = low[0], y = low[1];
    if (m.overlap(x, y)) return head_order_path(m.contains(x, m.arcs[y].head) ? x : y);

    std::size_t first = coverer(x), other = coverer(y);
    if (first == other) return TreeOutcome::no(Reason::CutVertex, {v(first)});
    if (!m.contains(first, m.arcs[other].head) && m.contains(other, m.arcs[first].head))
      std::swap(first, other);
    if (!m.overlap(first, other)) return TreeOutcome::no(Reason::MissingEdge, {v(first), v(other)});

    const auto seq = rotated_from(first);
    const std::size_t k = index[other] >= index[first] ? index[other] - index[first]
                                                         : index[other] + n - index[first];
    std::size_t z = n;
    for (std::size_t i = k + 1; i < n && z == n; ++i)
      if (m.overlap(seq[i], first) && m.overlap(seq[i], other)) z = i;
    if (z == n) return TreeOutcome::no(Reason::NoCommonNeighbor, {v(first), v(other)});

    // Double star: v_1 takes v_2..v_k and v_z; v_z takes the rest.
    SpanningTree tree{n, {}};
    tree.edges.reserve(n - 1);
    for (std::size_t i = 1; i <= k; ++i) tree.edges.push_back({v(first), v(seq[i])});
    tree.edges.push_back({v(first), v(seq[z])});
    for (std::size_t i = k + 1; i < n; ++i)
      if (i != z) tree.edges.push_back({v(seq[z]), v(seq[i])});
    return TreeOutcome(std::move(tree));
  }

  // Exactly three density-2 arcs.
  const std::size_t c1 = coverer(low[0]), c2 = coverer(low[1]), c3 = coverer(low[2]);
  if (c1 == c2 || c2 == c3 || c1 == c3)
    return TreeOutcome::no(Reason::CutVertex, {v(c1 == c2 || c1 == c3 ? c1 : c2)});
  for (auto [a, b] : {std::pair{c1, c2}, std::pair{c1, c3}, std::pair{c2, c3}})
    if (!m.overlap(a, b)) return TreeOutcome::no(Reason::MissingEdge, {v(a), v(b)});

  // A pair of coverers fails to separate the graph iff the two are
  // consecutive in head order; the third coverer becomes the star center.
  std::optional<std::size_t> center;
  for (auto [a, b, rest] : {std::tuple{c1, c2, c3}, std::tuple{c2, c3, c1}, std::tuple{c3, c1, c2}})
    if (!center && (succ(a) == b || succ(b) == a)) center = rest;
  if (!center) return TreeOutcome::no(Reason::AllPairsSeparating, {v(c1), v(c2), v(c3)});

  SpanningTree tree{n, {}};
  tree.edges.reserve(n - 1);
  for (std::size_t a : rotated_from(*center))
    if (a != *center) tree.edges.push_back({v(*center), v(a)});
  return TreeOutcome(std::move(tree));
}

}  // namespace lcst

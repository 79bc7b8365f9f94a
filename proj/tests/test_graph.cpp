#include <gtest/gtest.h>

#include <random>

#include "lcst/graph.hpp"
#include "lcst/oracle.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace lcst;

TEST(BuildGraph, SmallNamedGraphs) {
  const Graph k3 = corpus::k3();
  EXPECT_EQ(k3.vertex_count(), 3u);
  EXPECT_EQ(k3.edge_count(), 3u);
  const Graph p3 = corpus::p3();
  EXPECT_EQ(p3.edge_count(), 2u);
  EXPECT_FALSE(p3.has_edge(0, 2));
  const Graph d = corpus::diamond();
  EXPECT_EQ(d.edge_count(), 5u);
  EXPECT_TRUE(d.has_edge(2, 0));
  EXPECT_FALSE(d.has_edge(1, 3));
}

TEST(BuildGraph, NeighborsAreSortedAndDeduplicated) {
  const Graph g = build_graph(4, {{3, 0}, {0, 3}, {0, 1}, {2, 0}});
  const auto nb = g.neighbors(0);
  EXPECT_EQ(std::vector<Vertex>(nb.begin(), nb.end()), (std::vector<Vertex>{1, 2, 3}));
  EXPECT_EQ(g.edge_count(), 3u);
}

TEST(BuildGraph, RejectsBadInput) {
  EXPECT_THROW(build_graph(3, {{0, 0}}), InputError);
  EXPECT_THROW(build_graph(3, {{0, 3}}), InputError);
  EXPECT_THROW(build_graph(3, {{-1, 1}}), InputError);
  EXPECT_THROW(Graph::from_adjacency({{1}, {}}), InputError);
}

TEST(SeparatingSet, Examples) {
  EXPECT_FALSE(is_separating_set(corpus::k3(), {0}));
  EXPECT_TRUE(is_separating_set(corpus::p3(), {1}));
  EXPECT_TRUE(is_separating_set(corpus::diamond(), {0, 2}));
}

TEST(Biconnected, Examples) {
  EXPECT_TRUE(is_biconnected(corpus::k3()));
  EXPECT_FALSE(is_biconnected(corpus::p3()));
  EXPECT_TRUE(is_biconnected(corpus::diamond()));
  EXPECT_FALSE(is_biconnected(corpus::bowtie()));
  EXPECT_FALSE(is_biconnected(build_graph(2, {{0, 1}})));
  EXPECT_FALSE(is_biconnected(build_graph(1, {})));
}

TEST(Biconnected, AgreesWithMinimumCutUpToSixVertices) {
  for (std::size_t n = 1; n <= 6; ++n)
    for (const Graph& g : corpus::all_graphs(n)) {
      const bool expected = n >= 3 && is_connected(g) && min_vertex_cut_bruteforce(g) >= 2;
      ASSERT_EQ(is_biconnected(g), expected) << "n=" << n << " m=" << g.edge_count();
    }
}

TEST(ArticulationPoints, MatchSingletonSeparators) {
  for (const Graph& g : corpus::all_graphs(5)) {
    if (!is_connected(g)) continue;
    std::vector<Vertex> expected;
    for (Vertex v = 0; v < 5; ++v)
      if (oracle::separates(g, {v})) expected.push_back(v);
    auto got = articulation_points(g);
    std::sort(got.begin(), got.end());
    ASSERT_EQ(got, expected);
  }
}

TEST(LocallyConnected, Examples) {
  EXPECT_TRUE(is_locally_connected_spanning_tree(corpus::k3(), {3, {{0, 1}, {1, 2}}}));
  EXPECT_FALSE(is_locally_connected_spanning_tree(corpus::c4(), {4, {{0, 1}, {1, 2}, {2, 3}}}));
  EXPECT_TRUE(is_locally_connected_spanning_tree(corpus::diamond(), {4, {{0, 1}, {0, 2}, {0, 3}}}));
}

TEST(LocallyConnected, DiamondStarIsConfirmedByEnumeration) {
  const auto trees = enumerate_spanning_trees(corpus::diamond());
  ASSERT_EQ(trees.trees.size(), 8u);
  std::size_t passing = 0;
  for (const auto& t : trees.trees) {
    const bool ok = is_locally_connected_spanning_tree(corpus::diamond(), t);
    EXPECT_EQ(ok, oracle::is_lcst(corpus::diamond(), t.edges));
    passing += ok;
    if (same_edge_set(t.edges, std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}})) EXPECT_TRUE(ok);
  }
  EXPECT_GE(passing, 1u);
}

TEST(LocallyConnected, RejectsNonTrees) {
  const Graph k4 = corpus::k4();
  EXPECT_FALSE(is_locally_connected_spanning_tree(k4, {4, {{0, 1}, {1, 2}}}));
  EXPECT_FALSE(is_locally_connected_spanning_tree(k4, {4, {{0, 1}, {1, 2}, {2, 0}}}));
  EXPECT_FALSE(is_locally_connected_spanning_tree(corpus::c4(), {4, {{0, 1}, {0, 2}, {0, 3}}}));
  EXPECT_FALSE(is_locally_connected_spanning_tree(k4, {3, {{0, 1}, {1, 2}}}));
  EXPECT_FALSE(is_locally_connected_spanning_tree(k4, {4, {{0, 1}, {1, 2}, {2, 7}}}));
  EXPECT_TRUE(is_locally_connected_spanning_tree(build_graph(1, {}), {1, {}}));
}

TEST(LocallyConnected, VerifierMatchesDefinitionOnEveryTreeUpToFiveVertices) {
  for (std::size_t n = 2; n <= 5; ++n)
    for (const Graph& g : corpus::all_graphs(n))
      for (const auto& t : enumerate_spanning_trees(g).trees)
        ASSERT_EQ(is_locally_connected_spanning_tree(g, t), oracle::is_lcst(g, t.edges));
}

TEST(LocallyConnected, DroppingATreeEdgeAlwaysFails) {
  for (const Graph& g : corpus::all_graphs(5))
    for (const auto& t : enumerate_spanning_trees(g).trees) {
      if (!is_locally_connected_spanning_tree(g, t)) continue;
      for (std::size_t drop = 0; drop < t.edges.size(); ++drop) {
        SpanningTree smaller = t;
        smaller.edges.erase(smaller.edges.begin() + static_cast<std::ptrdiff_t>(drop));
        ASSERT_FALSE(is_locally_connected_spanning_tree(g, smaller));
      }
    }
}

// Every separating set of a graph with a locally connected spanning tree
// spans at least one tree edge.
TEST(LocallyConnected, SeparatingSetsContainATreeEdge) {
  std::mt19937_64 rng(7);
  std::vector<Graph> graphs = corpus::all_graphs(5);
  for (int i = 0; i < 60; ++i) {
    const std::size_t n = 6 + static_cast<std::size_t>(i % 4);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < static_cast<Vertex>(n); ++u)
      for (Vertex v = u + 1; v < static_cast<Vertex>(n); ++v)
        if (std::bernoulli_distribution(0.55)(rng)) edges.push_back({u, v});
    graphs.emplace_back(n, edges);
  }
  std::size_t checked = 0;
  for (const Graph& g : graphs) {
    const std::size_t n = g.vertex_count();
    const auto found = lcst_bruteforce(g);
    if (!found.is_tree()) continue;
    const auto& t = found.tree();
    for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
      std::vector<Vertex> s;
      for (Vertex v = 0; v < static_cast<Vertex>(n); ++v)
        if (mask >> v & 1) s.push_back(v);
      if (!oracle::separates(g, s)) continue;
      bool spans = false;
      for (const Edge& e : t.edges) spans |= (mask >> e.u & 1) && (mask >> e.v & 1);
      ASSERT_TRUE(spans);
      ++checked;
    }
  }
  EXPECT_GT(checked, 100u);
}

TEST(Symmetry, PredicatesSurviveRelabeling) {
  std::mt19937_64 rng(11);
  for (const Graph& g : corpus::all_graphs(5)) {
    std::vector<Vertex> perm{0, 1, 2, 3, 4};
    std::shuffle(perm.begin(), perm.end(), rng);
    const Graph h = oracle::relabel(g, perm);
    ASSERT_EQ(is_biconnected(g), is_biconnected(h));
    ASSERT_EQ(is_separating_set(g, {0, 1}), is_separating_set(h, {perm[0], perm[1]}));
    for (const auto& t : enumerate_spanning_trees(g).trees) {
      SpanningTree mapped{5, {}};
      for (const Edge& e : t.edges) mapped.edges.push_back({perm[e.u], perm[e.v]});
      ASSERT_EQ(is_locally_connected_spanning_tree(g, t), is_locally_connected_spanning_tree(h, mapped));
    }
  }
}

TEST(TreeOutcome, RefusalNeedsWitness) {
  EXPECT_THROW(TreeOutcome::no(Reason::NotBiconnected, {}), std::logic_error);
  const auto no = TreeOutcome::no(Reason::CutVertex, {2});
  EXPECT_FALSE(no.is_tree());
  EXPECT_EQ(no.refusal().reason, Reason::CutVertex);
  for (Reason r : {Reason::NotBiconnected, Reason::FourLowDensityArcs, Reason::CutVertex, Reason::MissingEdge,
                   Reason::NoCommonNeighbor, Reason::AllPairsSeparating, Reason::Exhausted, Reason::OracleBound})
    EXPECT_EQ(reason_from_string(to_string(r)), r);
}

TEST(SmallGraphs, Conventions) {
  EXPECT_TRUE(small_graph_outcome(build_graph(1, {}))->is_tree());
  EXPECT_TRUE(small_graph_outcome(build_graph(2, {{0, 1}}))->is_tree());
  const auto no = *small_graph_outcome(build_graph(2, {}));
  EXPECT_EQ(no.refusal().reason, Reason::NotBiconnected);
  EXPECT_FALSE(small_graph_outcome(corpus::k3()).has_value());
}

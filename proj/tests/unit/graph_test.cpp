#include <gtest/gtest.h>

#include "outerspatial/graph.hpp"

using namespace outerspatial;

TEST(Graph, NamesAndLookups) {
  Graph g;
  const int a = g.add_vertex("a");
  const int b = g.add_vertex("b");
  const int e = g.add_edge("ab", a, b);
  EXPECT_EQ(g.find_vertex("b"), b);
  EXPECT_EQ(g.find_edge("ab"), e);
  EXPECT_FALSE(g.find_vertex("c").has_value());
  EXPECT_EQ(g.opposite({e, 0}), b);
  EXPECT_EQ(g.vertex_of({e, 1}), b);
  EXPECT_THROW(g.add_edge("bad", a, 7), std::out_of_range);
}

TEST(Graph, LoopsAndParallelEdges) {
  Graph g = Graph::from_edge_list(2, {{0, 1}, {0, 1}});
  EXPECT_TRUE(g.has_parallel_edges());
  EXPECT_EQ(g.edge_multiplicity(0, 1), 2);
  EXPECT_EQ(g.edge_between(1, 0), 0);
  g.add_edge("l", 0, 0);
  EXPECT_TRUE(g.has_loops());
  EXPECT_EQ(g.degree(0), 4);
}

TEST(Graph, HalfEdgeIndexRoundTrip) {
  for (int i = 0; i < 20; ++i) {
    const HalfEdge h = HalfEdge::from_index(i);
    EXPECT_EQ(h.index(), i);
    EXPECT_EQ(h.twin().twin(), h);
  }
}

TEST(Paths, MakePathAndCycle) {
  const Graph g = Graph::from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  const Path p = make_path(g, {0, 1, 2});
  EXPECT_EQ(p.edges, (std::vector<int>{0, 1}));
  EXPECT_THROW(make_path(g, {0, 2}), std::invalid_argument);
  EXPECT_THROW(make_path(g, {0, 1, 0}), std::invalid_argument);
  const Cycle c = make_cycle(g, {0, 1, 2, 3});
  EXPECT_TRUE(is_genuine_cycle(g, c));
  EXPECT_THROW(make_cycle(g, {0, 1}), std::invalid_argument);
}

TEST(Components, NumberedBySmallestVertex) {
  const Graph g = Graph::from_edge_list(5, {{3, 4}, {0, 2}});
  int count = 0;
  const auto comp = connected_components(g, &count);
  EXPECT_EQ(count, 3);
  EXPECT_EQ(comp, (std::vector<int>{0, 1, 0, 2, 2}));
  EXPECT_FALSE(is_connected(g));
  const Subgraph s = induced_subgraph(g, {4, 3});
  EXPECT_EQ(s.graph.vertex_count(), 2);
  EXPECT_EQ(s.graph.edge_count(), 1);
  EXPECT_EQ(s.vertex_to_parent, (std::vector<int>{3, 4}));
}

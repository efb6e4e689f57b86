//
// tepc - Copyright 2026 The tepc Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "tepc/graph.hpp"

#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "tepc/error.hpp"

namespace tepc {
namespace {

using Seq = std::vector<std::size_t>;

ErrorKind kind_of(auto &&fn) {
  try {
    fn();
  } catch (const Error &e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected tepc::Error";
  return ErrorKind::kMalformedInput;
}

TEST(GraphTest, RejectsMalformedEdges) {
  EXPECT_EQ(kind_of([] { Graph(2, { { 0, 0 } }); }),
            ErrorKind::kInvalidParameter);
  EXPECT_EQ(kind_of([] { Graph(2, { { 0, 1 }, { 1, 0 } }); }),
            ErrorKind::kInvalidParameter);
  EXPECT_EQ(kind_of([] { Graph(2, { { 0, 2 } }); }),
            ErrorKind::kInvalidParameter);
}

TEST(GraphTest, EdgesAreCanonical) {
  Graph g(4, { { 3, 2 }, { 1, 0 }, { 2, 0 } });
  std::vector<Edge> expected { { 0, 1 }, { 0, 2 }, { 2, 3 } };
  EXPECT_EQ(std::vector<Edge>(g.edges().begin(), g.edges().end()), expected);
  EXPECT_EQ(g.find_edge(3, 2), EdgeId { 2 });
  EXPECT_FALSE(g.find_edge(1, 3));
}

TEST(GraphTest, Path) {
  Graph p1 = build_path(1);
  EXPECT_EQ(p1.vertex_count(), 1);
  EXPECT_EQ(p1.edge_count(), 0);

  EXPECT_EQ(degree_sequence(build_path(2)), (Seq { 1, 1 }));

  Graph p5 = build_path(5);
  EXPECT_EQ(p5.vertex_count(), 5);
  EXPECT_EQ(p5.edge_count(), 4);
  EXPECT_EQ(p5.degree(0), 1);
  EXPECT_EQ(p5.degree(2), 2);
  EXPECT_EQ(p5.degree(4), 1);

  EXPECT_EQ(kind_of([] { build_path(0); }), ErrorKind::kInvalidParameter);
}

TEST(GraphTest, Cycle) {
  EXPECT_EQ(build_cycle(3).edge_count(), 3);
  EXPECT_EQ(degree_sequence(build_cycle(4)), (Seq { 2, 2, 2, 2 }));
  Graph c5 = build_cycle(5);
  EXPECT_EQ(c5.edge_count(), 5);
  for (VertexId v = 0; v < 5; ++v)
    EXPECT_EQ(c5.degree(v), 2);
  EXPECT_EQ(kind_of([] { build_cycle(2); }), ErrorKind::kInvalidParameter);
}

TEST(GraphTest, FanAndWheel) {
  Graph f2 = build_fan(2);
  EXPECT_EQ(f2.vertex_count(), 3);
  EXPECT_EQ(f2.edge_count(), 3);
  EXPECT_TRUE(isomorphic_small(f2, build_complete(3)));

  Graph w3 = build_wheel(3);
  EXPECT_EQ(w3.vertex_count(), 4);
  EXPECT_EQ(w3.edge_count(), 6);
  EXPECT_TRUE(isomorphic_small(w3, build_complete(4)));

  Graph f4 = build_fan(4);
  EXPECT_EQ(f4.degree(0), 4);
  EXPECT_EQ(f4.degree(1), 2);
  EXPECT_EQ(f4.degree(4), 2);
  EXPECT_EQ(f4.edge_count(), 2 * 4 - 1);
  EXPECT_EQ(build_wheel(6).edge_count(), 12);

  EXPECT_EQ(kind_of([] { build_fan(1); }), ErrorKind::kInvalidParameter);
  EXPECT_EQ(kind_of([] { build_wheel(2); }), ErrorKind::kInvalidParameter);
}

TEST(GraphTest, SmallNonTepcRealizations) {
  EXPECT_EQ(degree_sequence(build_complete(2)), (Seq { 1, 1 }));
  EXPECT_EQ(degree_sequence(build_cycle(4)), (Seq { 2, 2, 2, 2 }));
  EXPECT_EQ(degree_sequence(build_paw()), (Seq { 3, 2, 2, 1 }));
}

TEST(GraphTest, CoronaOfSmallPaths) {
  // P_3∘P_2: 2 spine edges + 3·2 links + 3·1 copy edges.
  CoronaResult c = corona(build_path(3), build_path(2));
  EXPECT_EQ(c.graph.vertex_count(), 9);
  EXPECT_EQ(c.graph.edge_count(), 2 + 6 + 3);
  ASSERT_TRUE(c.layout);
  EXPECT_FALSE(c.layout->cycle_copies());
  EXPECT_EQ(c.layout->spine_vertex(2), 1);
  EXPECT_EQ(c.layout->copy_vertex(2, 1), 5);
  EXPECT_EQ(to_string(c.graph.roles()[5]), "copy(2,1)");
}

TEST(GraphTest, CoronaBaseCasesMatchFanAndWheel) {
  for (int m = 2; m <= 6; ++m) {
    CoronaResult c = corona(build_path(1), build_path(m));
    EXPECT_TRUE(c.graph == build_fan(m)) << "m=" << m;
    EXPECT_TRUE(isomorphic_small(c.graph, build_fan(m)));
  }
  for (int m = 3; m <= 6; ++m) {
    CoronaResult c = corona(build_path(1), build_cycle(m));
    EXPECT_TRUE(c.graph == build_wheel(m)) << "m=" << m;
    ASSERT_TRUE(c.layout);
    EXPECT_TRUE(c.layout->cycle_copies());
  }
}

TEST(GraphTest, CoronaOfGeneralGraphsHasNoLayout) {
  CoronaResult c = corona(build_paw(), build_complete(2));
  EXPECT_FALSE(c.layout);
  EXPECT_EQ(c.graph.vertex_count(), 4 * 3);
  EXPECT_EQ(c.graph.edge_count(), 4 + 4 * 2 + 4 * 1);
  EXPECT_EQ(kind_of([] { corona(Graph(), build_path(2)); }),
            ErrorKind::kInvalidParameter);
}

TEST(GraphTest, CoronaSizesOverGrid) {
  for (int n = 1; n <= 8; ++n) {
    for (int m = 1; m <= 8; ++m) {
      CoronaResult pp = corona(build_path(n), build_path(m));
      EXPECT_EQ(pp.graph.vertex_count(), std::size_t(n * (1 + m)));
      EXPECT_EQ(pp.graph.edge_count(), std::size_t(2 * n * m - 1));
      if (m < 3)
        continue;
      CoronaResult pc = corona(build_path(n), build_cycle(m));
      EXPECT_EQ(pc.graph.edge_count(), std::size_t(2 * n * m + n - 1));
    }
  }
}

TEST(GraphTest, LayoutAccessorsAreInjective) {
  CoronaResult c = corona(build_path(4), build_cycle(5));
  const CoronaLayout &l = *c.layout;
  std::set<VertexId> vertices;
  std::set<EdgeId> edges;
  for (int i = 1; i <= 4; ++i) {
    vertices.insert(l.spine_vertex(i));
    if (i < 4)
      edges.insert(l.spine_edge(i));
    edges.insert(l.closure_edge(i));
    for (int j = 1; j <= 5; ++j) {
      vertices.insert(l.copy_vertex(i, j));
      edges.insert(l.link_edge(i, j));
      if (j < 5)
        edges.insert(l.copy_edge(i, j));
    }
  }
  EXPECT_EQ(vertices.size(), c.graph.vertex_count());
  EXPECT_EQ(edges.size(), c.graph.edge_count());
  EXPECT_THROW(l.copy_edge(1, 5), Error);
  EXPECT_THROW(l.spine_edge(4), Error);

  CoronaResult p = corona(build_path(2), build_path(3));
  EXPECT_THROW(p.layout->closure_edge(1), Error);
}

TEST(GraphTest, DegreeSumIsTwiceEdgeCount) {
  std::vector<Graph> graphs { build_path(7), build_cycle(6), build_fan(5),
                              build_wheel(7), build_paw(),
                              corona(build_path(3), build_cycle(4)).graph };
  for (const Graph &g: graphs) {
    std::size_t sum = 0;
    for (std::size_t d: degree_sequence(g))
      sum += d;
    EXPECT_EQ(sum, 2 * g.edge_count());
  }
}

TEST(IsomorphismTest, Basics) {
  EXPECT_TRUE(isomorphic_small(corona(build_path(1), build_path(3)).graph,
                               build_fan(3)));
  EXPECT_TRUE(isomorphic_small(corona(build_path(1), build_cycle(4)).graph,
                               build_wheel(4)));
  EXPECT_FALSE(isomorphic_small(build_cycle(4), build_path(4)));
  // Same degree sequence, different structure: C_6 vs two triangles.
  Graph two_triangles(6, { { 0, 1 }, { 1, 2 }, { 0, 2 },
                           { 3, 4 }, { 4, 5 }, { 3, 5 } });
  EXPECT_FALSE(isomorphic_small(build_cycle(6), two_triangles));
  EXPECT_EQ(kind_of([] { isomorphic_small(build_path(11), build_path(11)); }),
            ErrorKind::kUnsupportedSize);
}

TEST(IsomorphismTest, RelabeledGraphsMatch) {
  // Reverse vertex ids of P_2∘P_3.
  Graph g = corona(build_path(2), build_path(3)).graph;
  std::vector<Edge> rev;
  const auto last = static_cast<VertexId>(g.vertex_count() - 1);
  for (const Edge &e: g.edges())
    rev.push_back({ last - e.u, last - e.v });
  EXPECT_TRUE(isomorphic_small(g, Graph(g.vertex_count(), rev)));
}

TEST(IsomorphismTest, ReflexiveAndSymmetric) {
  std::vector<Graph> graphs;
  for (int k = 2; k <= 9; ++k)
    graphs.push_back(build_path(k));
  for (int k = 3; k <= 9; ++k) {
    graphs.push_back(build_cycle(k));
    graphs.push_back(build_wheel(k));
  }
  for (int k = 2; k <= 9; ++k)
    graphs.push_back(build_fan(k));
  graphs.push_back(build_paw());
  graphs.push_back(corona(build_path(2), build_path(3)).graph);
  graphs.push_back(corona(build_path(3), build_path(2)).graph);
  graphs.push_back(corona(build_path(2), build_cycle(3)).graph);

  for (const Graph &a: graphs) {
    EXPECT_TRUE(isomorphic_small(a, a));
    for (const Graph &b: graphs)
      EXPECT_EQ(isomorphic_small(a, b), isomorphic_small(b, a));
  }
}

TEST(RoleTest, TagsRoundTrip) {
  for (Role r: { Role::plain(), Role::center(), Role::spine(3), Role::rim(7),
                 Role::copy(2, 11) })
    EXPECT_EQ(parse_role(to_string(r)), r);
  EXPECT_FALSE(parse_role("copy(1)"));
  EXPECT_FALSE(parse_role("spine(x)"));
  EXPECT_FALSE(parse_role("hub"));
}

} // namespace
} // namespace tepc

//
// tepc - Copyright 2026 The tepc Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "tepc/labeling.hpp"

#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "oracle.hpp"
#include "tepc/error.hpp"
#include "tepc/labelers.hpp"

namespace tepc {
namespace {

Graph star3() { return Graph(4, { { 0, 1 }, { 0, 2 }, { 0, 3 } }); }

TEST(InducedLabelsTest, AllOnes) {
  Graph g = build_wheel(5);
  VertexLabeling vl = induced_vertex_labels(g, EdgeLabeling(g, Bit { 1 }));
  for (Bit b: vl.bits())
    EXPECT_EQ(b, 1);
}

TEST(InducedLabelsTest, StarWithOneZeroEdge) {
  Graph g = star3();
  EdgeLabeling f(g, { 0, 1, 1 });
  VertexLabeling vl = induced_vertex_labels(g, f);
  EXPECT_EQ(vl[0], 0);
  EXPECT_EQ(vl[1], 0);
  EXPECT_EQ(vl[2], 1);
  EXPECT_EQ(vl[3], 1);
}

TEST(InducedLabelsTest, PathOfThree) {
  Graph g = build_path(3);
  EdgeLabeling f(g, { 0, 1 });
  VertexLabeling vl = induced_vertex_labels(g, f);
  std::vector<Bit> got(vl.bits().begin(), vl.bits().end());
  EXPECT_EQ(got, (std::vector<Bit> { 0, 0, 1 }));
  const auto ref = oracle::vertex_products(3, oracle::edge_list(g), { 0, 1 });
  EXPECT_EQ(ref, (std::vector<int> { 0, 0, 1 }));
}

TEST(InducedLabelsTest, IsolatedVertexIsOne) {
  Graph g(3, { { 0, 1 } });
  VertexLabeling vl = induced_vertex_labels(g, EdgeLabeling(g, Bit { 0 }));
  EXPECT_EQ(vl[2], 1);
}

TEST(InducedLabelsTest, BindingMismatch) {
  Graph a = build_path(4), b = build_cycle(3);
  EdgeLabeling f(b, Bit { 1 }); // same size as a, different graph
  try {
    tally(a, f);
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.kind(), ErrorKind::kBindingMismatch);
  }
  try {
    EdgeLabeling(a, std::vector<Bit> { 1, 1 });
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.kind(), ErrorKind::kBindingMismatch);
  }
  EXPECT_THROW(EdgeLabeling(a, std::vector<Bit> { 1, 2, 1 }), Error);
}

TEST(TallyTest, K2) {
  Graph k2 = build_complete(2);
  EXPECT_EQ(tally(k2, EdgeLabeling(k2, Bit { 1 })), make_tally(0, 1, 0, 2));
  EXPECT_EQ(tally(k2, EdgeLabeling(k2, Bit { 1 })).gap, -3);
  EXPECT_EQ(tally(k2, EdgeLabeling(k2, Bit { 0 })), make_tally(1, 0, 2, 0));
  EXPECT_EQ(tally(k2, EdgeLabeling(k2, Bit { 0 })).gap, 3);
  EXPECT_FALSE(is_tepc(k2, EdgeLabeling(k2, Bit { 0 })));
  EXPECT_FALSE(is_tepc(k2, EdgeLabeling(k2, Bit { 1 })));
}

TEST(TallyTest, EvenSpineCorona) {
  LabeledCorona lc = label_corona_path_path(4, 3);
  Tally t = tally(lc.graph, lc.labeling);
  EXPECT_EQ(t, make_tally(11, 12, 8, 8));
  EXPECT_EQ(t.gap, -1);
  EXPECT_TRUE(is_tepc(lc.graph, lc.labeling));
}

TEST(TallyTest, ZeroGapIsTepc) {
  // P_3 (|V|+|E| = 5 is odd) cannot reach 0; use the fan F_2 = K_3.
  Graph g = build_fan(2);
  EdgeLabeling f(g, { 0, 1, 1 });
  EXPECT_EQ(tally(g, f).gap, 0);
  EXPECT_TRUE(is_tepc(g, f));
}

std::vector<Graph> generated_graphs() {
  std::vector<Graph> out { build_path(6),  build_cycle(7), build_fan(6),
                           build_wheel(6), build_paw(),    star3(),
                           Graph(3, { { 0, 1 } }) };
  out.push_back(corona(build_path(2), build_path(3)).graph);
  out.push_back(corona(build_path(3), build_cycle(3)).graph);
  return out;
}

TEST(TallyPropertyTest, CountsParityAndZeroIncidence) {
  std::mt19937 rng(20261018);
  for (const Graph &g: generated_graphs()) {
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<Bit> bits(g.edge_count());
      for (Bit &b: bits)
        b = static_cast<Bit>(rng() & 1);
      EdgeLabeling f(g, bits);
      const Tally t = tally(g, f);
      const auto nv = static_cast<std::int64_t>(g.vertex_count());
      const auto ne = static_cast<std::int64_t>(g.edge_count());
      EXPECT_EQ(t.e0 + t.e1, ne);
      EXPECT_EQ(t.v0 + t.v1, nv);
      EXPECT_EQ(t.gap, (t.v0 + t.e0) - (t.v1 + t.e1));
      EXPECT_EQ(((t.gap % 2) + 2) % 2, (nv + ne) % 2);
      EXPECT_EQ(is_tepc(g, f), t.gap >= -1 && t.gap <= 1);

      const oracle::Counts ref = oracle::counts(g, f);
      EXPECT_EQ(t.e0, ref.e0);
      EXPECT_EQ(t.v0, ref.v0);
      EXPECT_EQ(t.gap, ref.gap());

      VertexLabeling vl = induced_vertex_labels(g, f);
      for (VertexId v = 0; v < g.vertex_count(); ++v) {
        bool any_zero = false;
        for (EdgeId e: g.incident_edges(v))
          any_zero = any_zero || f[e] == 0;
        EXPECT_EQ(vl[v] == 0, any_zero);
      }
    }
  }
}

// Maps the labeling through vertex permutation `sigma`: edge {σu, σv} takes
// the label of {u, v}.
EdgeLabeling permute(const Graph &g, const EdgeLabeling &f,
                     const std::vector<VertexId> &sigma) {
  EdgeLabeling out(g, Bit { 1 });
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    auto image = g.find_edge(sigma[g.edge(e).u], sigma[g.edge(e).v]);
    EXPECT_TRUE(image) << "sigma is not an automorphism";
    if (image)
      out.set(*image, f[e]);
  }
  return out;
}

TEST(TallyPropertyTest, InvariantUnderAutomorphisms) {
  std::mt19937 rng(7);
  struct Case {
    Graph g;
    std::vector<VertexId> sigma;
  };
  std::vector<Case> cases;
  {
    // Cycle rotation.
    Graph c = build_cycle(7);
    std::vector<VertexId> s(7);
    for (VertexId v = 0; v < 7; ++v)
      s[v] = (v + 3) % 7;
    cases.push_back({ c, s });
  }
  {
    // Wheel rim rotation, center fixed.
    Graph w = build_wheel(6);
    std::vector<VertexId> s { 0 };
    for (VertexId j = 1; j <= 6; ++j)
      s.push_back(j % 6 + 1);
    cases.push_back({ w, s });
  }
  {
    // P_3∘P_2 reflected end to end.
    CoronaResult c = corona(build_path(3), build_path(2));
    const CoronaLayout &l = *c.layout;
    std::vector<VertexId> s(c.graph.vertex_count());
    for (int i = 1; i <= 3; ++i) {
      s[l.spine_vertex(i)] = l.spine_vertex(4 - i);
      for (int j = 1; j <= 2; ++j)
        s[l.copy_vertex(i, j)] = l.copy_vertex(4 - i, 3 - j);
    }
    cases.push_back({ c.graph, s });
  }

  for (const Case &c: cases) {
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<Bit> bits(c.g.edge_count());
      for (Bit &b: bits)
        b = static_cast<Bit>(rng() & 1);
      EdgeLabeling f(c.g, bits);
      EXPECT_EQ(tally(c.g, f), tally(c.g, permute(c.g, f, c.sigma)));
    }
  }
}

} // namespace
} // namespace tepc

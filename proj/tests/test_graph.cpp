// Copyright 2026 The netsec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <random>

#include "netsec/error.hpp"
#include "netsec/graph.hpp"

namespace netsec {
namespace {

// Two copies of K4 minus an edge, joined into a cubic graph. Node 0 lies on
// two triangles, node 2 on one, so no automorphism maps 0 to 2.
Graph cubic_not_transitive() {
  return Graph(8, {{0, 1},
                   {0, 2},
                   {0, 3},
                   {1, 2},
                   {1, 3},
                   {4, 5},
                   {4, 6},
                   {4, 7},
                   {5, 6},
                   {5, 7},
                   {2, 6},
                   {3, 7}});
}

Graph petersen() {
  std::vector<Edge> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph(10, e);
}

TEST(Graph, RingHasCycleStructure) {
  const Graph g = build_topology(Topology::Ring, 5);
  EXPECT_EQ(g.num_edges(), 5);
  for (int v = 0; v < 5; ++v) EXPECT_EQ(g.degree(v), 2);
  EXPECT_TRUE(g.adjacent(0, 4));
  EXPECT_TRUE(g.adjacent(4, 0));
  EXPECT_EQ(g.topology(), Topology::Ring);
}

TEST(Graph, CompleteEdgeCount) {
  EXPECT_EQ(build_topology(Topology::Complete, 4).num_edges(), 6);
  EXPECT_EQ(build_topology(Topology::Complete, 7).num_edges(), 21);
}

TEST(Graph, StarCenterIsZero) {
  const Graph g = build_topology(Topology::Star, 5);
  EXPECT_EQ(g.degree(0), 4);
  for (int v = 1; v < 5; ++v) EXPECT_EQ(g.degree(v), 1);
}

TEST(Graph, TopologySizeLimits) {
  EXPECT_THROW(build_topology(Topology::Ring, 2), InvalidParameter);
  EXPECT_THROW(build_topology(Topology::Star, 1), InvalidParameter);
  EXPECT_THROW(build_topology(Topology::Complete, 0), InvalidParameter);
  EXPECT_NO_THROW(build_topology(Topology::Star, 2));
  EXPECT_NO_THROW(build_topology(Topology::Complete, 2));
}

TEST(Graph, ParseTopologyNames) {
  EXPECT_EQ(parse_topology("ring"), Topology::Ring);
  EXPECT_EQ(parse_topology("star"), Topology::Star);
  EXPECT_EQ(parse_topology("complete"), Topology::Complete);
  EXPECT_THROW(parse_topology("torus"), InvalidParameter);
}

TEST(Graph, ConstructorRejectsBadEdges) {
  EXPECT_THROW(Graph(3, {{0, 1}, {1, 1}, {1, 2}}), InvalidParameter);
  EXPECT_THROW(Graph(3, {{0, 1}, {1, 3}}), InvalidParameter);
  EXPECT_THROW(Graph(3, {{0, 1}}), DisconnectedGraph);
}

TEST(EdgeList, TriangleMatchesComplete) {
  const Graph g = load_edge_list("0 1\n1 2\n2 0");
  const Graph k3 = build_topology(Topology::Complete, 3);
  EXPECT_EQ(g.topology(), Topology::Custom);
  EXPECT_EQ(g.num_nodes(), 3);
  EXPECT_EQ(g.edges(), k3.edges());
}

TEST(EdgeList, CollapsesDuplicatesAndReversedPairs) {
  const Graph g = load_edge_list("0 1\n1 0\n0 1\n1 2\n");
  EXPECT_EQ(g.num_edges(), 2);
}

TEST(EdgeList, CommentsBlankLinesAndCommas) {
  const Graph g = load_edge_list("# ring\n\n0,1\n1 2\n  2 3 \n3 0\n");
  EXPECT_EQ(g.num_nodes(), 4);
  EXPECT_EQ(g.num_edges(), 4);
}

TEST(EdgeList, DisconnectedReportsComponents) {
  try {
    load_edge_list("0 1\n2 3");
    FAIL() << "expected DisconnectedGraph";
  } catch (const DisconnectedGraph& e) {
    EXPECT_EQ(e.components(), 2);
  }
}

TEST(EdgeList, SelfLoopRejected) { EXPECT_THROW(load_edge_list("0 0"), InvalidParameter); }

TEST(EdgeList, MalformedLineCarriesLineNumber) {
  try {
    load_edge_list("0 1\n1 x\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
  }
  EXPECT_THROW(load_edge_list("0 1 2\n"), ParseError);
  EXPECT_THROW(load_edge_list("-1 2\n"), ParseError);
  EXPECT_THROW(load_edge_list(""), ParseError);
}

TEST(Distance, KnownValues) {
  EXPECT_EQ(distance(build_topology(Topology::Ring, 6), 0, 3), 3);
  EXPECT_EQ(distance(build_topology(Topology::Star, 5), 1, 2), 2);
  const Graph g = cubic_not_transitive();
  for (int i = 0; i < g.num_nodes(); ++i) EXPECT_EQ(distance(g, i, i), 0);
}

TEST(Distance, RingMatchesCyclicFormula) {
  const int n = 9;
  const Graph g = build_topology(Topology::Ring, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const int d = std::abs(i - j);
      EXPECT_EQ(distance(g, i, j), std::min(d, n - d));
    }
  }
}

TEST(Distance, SymmetricAndTriangleInequality) {
  std::mt19937_64 rng(7);
  for (const Graph& g : {build_topology(Topology::Ring, 8), build_topology(Topology::Star, 6),
                         cubic_not_transitive(), petersen()}) {
    std::uniform_int_distribution<int> pick(0, g.num_nodes() - 1);
    for (int t = 0; t < 200; ++t) {
      const int i = pick(rng), j = pick(rng), k = pick(rng);
      EXPECT_EQ(distance(g, i, j), distance(g, j, i));
      EXPECT_LE(distance(g, i, k), distance(g, i, j) + distance(g, j, k));
    }
  }
}

TEST(VertexTransitivity, KnownGraphs) {
  EXPECT_TRUE(is_vertex_transitive(build_topology(Topology::Complete, 4)));
  EXPECT_FALSE(is_vertex_transitive(build_topology(Topology::Star, 4)));
  EXPECT_FALSE(is_vertex_transitive(cubic_not_transitive()));
  EXPECT_TRUE(is_vertex_transitive(petersen()));
}

TEST(VertexTransitivity, RingAndCompleteUpToTen) {
  for (int n = 3; n <= kMaxTransitivityNodes; ++n) {
    EXPECT_TRUE(is_vertex_transitive(build_topology(Topology::Ring, n))) << n;
    EXPECT_TRUE(is_vertex_transitive(build_topology(Topology::Complete, n))) << n;
  }
}

TEST(VertexTransitivity, SizeLimit) {
  EXPECT_THROW(is_vertex_transitive(build_topology(Topology::Ring, 11)), SizeLimitExceeded);
  EXPECT_TRUE(treat_as_vertex_transitive(build_topology(Topology::Ring, 50)));
  EXPECT_FALSE(treat_as_vertex_transitive(build_topology(Topology::Star, 50)));
}

TEST(VertexTransitivity, AutomorphismPreservesAdjacency) {
  const Graph g = petersen();
  for (int to = 0; to < g.num_nodes(); ++to) {
    const auto phi = find_automorphism(g, 0, to);
    ASSERT_TRUE(phi.has_value());
    EXPECT_EQ((*phi)[0], to);
    for (int u = 0; u < g.num_nodes(); ++u) {
      for (int v = 0; v < g.num_nodes(); ++v) {
        EXPECT_EQ(g.adjacent(u, v), g.adjacent((*phi)[u], (*phi)[v]));
      }
    }
  }
  EXPECT_FALSE(find_automorphism(cubic_not_transitive(), 0, 2).has_value());
}

}  // namespace
}  // namespace netsec

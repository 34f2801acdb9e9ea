// Copyright 2026 The cycfive Authors
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


#include "cycfive/graph.hpp"

#include <gtest/gtest.h>

#include "cycfive/io.hpp"
#include "test_support.hpp"

namespace cycfive {
namespace {

using testing::dodecahedron;
using testing::k33;
using testing::k4;
using testing::load;
using testing::petersen;

VertexSet all_vertices(const CubicGraph& g) {
  VertexSet out;
  for (Vertex v = 0; v < g.order(); ++v) out.push_back(v);
  return out;
}

TEST(ParseGraph, Graph6CompleteGraphK4) {
  const auto g = parse_graph("C~", GraphFormat::Graph6);
  EXPECT_EQ(g.order(), 4);
  EXPECT_EQ(g.size(), 6);
  for (Vertex u = 0; u < 4; ++u) {
    for (Vertex v = u + 1; v < 4; ++v) EXPECT_TRUE(g.adjacent(u, v));
  }
}

TEST(ParseGraph, AdjlistTripleEdge) {
  const auto g = parse_graph("0: 1 1 1 / 1: 0 0 0", GraphFormat::Adjlist);
  EXPECT_EQ(g.order(), 2);
  EXPECT_EQ(g.size(), 3);
  EXPECT_EQ(g.multiplicity(0, 1), 3);
  EXPECT_TRUE(g.is_cubic());
  EXPECT_EQ(g.edge(2).slot, 2);
}

TEST(ParseGraph, Graph6Petersen) {
  const auto g = parse_graph(testing::read_file(testing::corpus_path("petersen.g6")), GraphFormat::Graph6);
  EXPECT_EQ(g.order(), 10);
  EXPECT_EQ(g.size(), 15);
  EXPECT_TRUE(g.is_cubic());
  EXPECT_EQ(g, petersen());
}

TEST(ParseGraph, Graph6HeaderAndLongForm) {
  EXPECT_EQ(parse_graph(">>graph6<<C~\n", GraphFormat::Graph6), k4());
  // 63 vertices forces the 4-byte size field.
  std::vector<std::pair<Vertex, Vertex>> ring;
  for (Vertex v = 0; v < 63; ++v) ring.emplace_back(v, (v + 1) % 63);
  const CubicGraph cycle(63, ring);
  const auto text = to_graph6(cycle);
  EXPECT_EQ(text[0], '~');
  EXPECT_EQ(parse_graph(text, GraphFormat::Graph6), cycle);
}

TEST(ParseGraph, LoopsInAdjlist) {
  const auto g = parse_graph("0: 0 1\n1: 0 1", GraphFormat::Adjlist);
  EXPECT_EQ(g.multiplicity(0, 0), 1);
  EXPECT_EQ(g.degree(0), 3);
  EXPECT_EQ(girth(g), 1);
}

TEST(ParseGraph, MalformedInputs) {
  for (const char* bad : {"", "C", "C~~", "\x01\x02", "C~\nC~"}) {
    try {
      parse_graph(bad, GraphFormat::Graph6);
      ADD_FAILURE() << "accepted '" << bad << "'";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::MalformedInput) << bad;
    }
  }
  for (const char* bad : {"", "0 1 2", "0: 1\n1:", "0: x", "0: 1\n0: 1\n1: 0 0"}) {
    try {
      parse_graph(bad, GraphFormat::Adjlist);
      ADD_FAILURE() << "accepted '" << bad << "'";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::MalformedInput) << bad;
    }
  }
}

TEST(ParseGraph, DegreeViolations) {
  try {
    parse_graph("0: 1 2 3 4\n1: 0\n2: 0\n3: 0\n4: 0", GraphFormat::Adjlist);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegreeViolation);
  }
  EXPECT_NO_THROW(parse_graph("0: 1\n1: 0", GraphFormat::Adjlist));
  try {
    parse_graph("0: 1\n1: 0", GraphFormat::Adjlist, {.strict_cubic = true});
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegreeViolation);
  }
}

TEST(ParseGraph, DetectFormat) {
  EXPECT_EQ(detect_format("C~"), GraphFormat::Graph6);
  EXPECT_EQ(detect_format("# comment: with colon\n0: 1\n1: 0"), GraphFormat::Adjlist);
}

TEST(Serialise, Graph6RejectsMultigraphs) {
  EXPECT_THROW(to_graph6(parse_graph("0: 1 1 1\n1: 0 0 0", GraphFormat::Adjlist)), Error);
}

TEST(Serialise, DotMarksHighlightedVertices) {
  DotStyle style;
  style.highlighted = {0};
  style.boundary = {1};
  const auto dot = to_dot(k4(), style);
  EXPECT_NE(dot.find("graph G {"), std::string::npos);
  EXPECT_NE(dot.find("0 [style=filled, fillcolor=\"#e06666\"]"), std::string::npos);
  EXPECT_NE(dot.find("1 [style=filled, fillcolor=\"#9fc5e8\"]"), std::string::npos);
  EXPECT_NE(dot.find("2 -- 3;"), std::string::npos);
}

TEST(Boundary, Examples) {
  EXPECT_EQ(boundary(k4(), {0}).size(), 3u);
  const auto spokes = boundary(petersen(), {0, 1, 2, 3, 4});
  ASSERT_EQ(spokes.size(), 5u);
  for (EdgeId id : spokes.edges) {
    const Edge& e = petersen().edge(id);
    EXPECT_EQ(e.v, e.u + 5);
  }
  // Induced path 0-1-2-3 in Petersen is a connected acyclic subgraph on 4 vertices.
  EXPECT_EQ(boundary(petersen(), {0, 1, 2, 3}).size(), 6u);
  EXPECT_EQ(boundary(dodecahedron(), {0, 1, 2, 3}).size(), 6u);
}

TEST(Boundary, CountsParallelEdgesIndividually) {
  const auto g = parse_graph("0: 1 1 1\n1: 0 0 0", GraphFormat::Adjlist);
  EXPECT_EQ(boundary(g, {0}).size(), 3u);
}

TEST(Boundary, RejectsEmptyAndFullSets) {
  for (const VertexSet& xs : {VertexSet{}, VertexSet{0, 1, 2, 3}}) {
    try {
      boundary(k4(), xs);
      ADD_FAILURE();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::EmptyOrFullSet);
    }
  }
}

TEST(Induced, Examples) {
  const auto outer = induced(petersen(), {0, 1, 2, 3, 4});
  EXPECT_EQ(outer.graph.order(), 5);
  EXPECT_EQ(outer.graph.size(), 5);
  EXPECT_TRUE(testing::isomorphic(outer.graph, CubicGraph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}})));

  const auto whole = induced(petersen(), all_vertices(petersen()));
  EXPECT_EQ(whole.graph, petersen());

  const auto pair = induced(k4(), {0, 1});
  EXPECT_EQ(pair.graph.order(), 2);
  EXPECT_EQ(pair.graph.size(), 1);
}

TEST(Induced, KeepsMapsAndMultiplicity) {
  const auto g = parse_graph("0: 1 1 2\n1: 0 0 3\n2: 0 3 3\n3: 1 2 2", GraphFormat::Adjlist);
  const auto sub = induced(g, {2, 3});
  EXPECT_EQ(sub.to_host, (std::vector<Vertex>{2, 3}));
  EXPECT_EQ(sub.from_host[3], 1);
  EXPECT_EQ(sub.from_host[0], -1);
  EXPECT_EQ(sub.graph.multiplicity(0, 1), 2);
}

TEST(Components, Examples) {
  EXPECT_EQ(components(petersen()).size(), 1u);

  auto pairs = k4().edge_pairs();
  for (auto [u, v] : k4().edge_pairs()) pairs.emplace_back(u + 4, v + 4);
  const auto two = components(CubicGraph(8, pairs));
  ASSERT_EQ(two.size(), 2u);
  EXPECT_EQ(two[0], (VertexSet{0, 1, 2, 3}));
  EXPECT_EQ(two[1], (VertexSet{4, 5, 6, 7}));

  const auto halves = components(petersen(), boundary(petersen(), {0, 1, 2, 3, 4}));
  ASSERT_EQ(halves.size(), 2u);
  EXPECT_EQ(halves[0], (VertexSet{0, 1, 2, 3, 4}));
  EXPECT_EQ(halves[1], (VertexSet{5, 6, 7, 8, 9}));
}

TEST(Girth, Examples) {
  EXPECT_EQ(girth(k4()), 3);
  EXPECT_EQ(girth(petersen()), 5);
  EXPECT_EQ(girth(petersen()), testing::enumerated_girth(petersen()));
  // Double edge 0=1 with pendant paths.
  EXPECT_EQ(girth(CubicGraph(4, {{0, 1}, {0, 1}, {0, 2}, {1, 3}})), 2);
  EXPECT_EQ(girth(CubicGraph(3, {{0, 1}, {1, 2}})), kInfinity);
  EXPECT_EQ(girth(load("heawood.adj")), 6);
  EXPECT_EQ(girth(load("cube.adj")), 4);
}

TEST(CycleRank, Examples) {
  EXPECT_EQ(cycle_rank(k4()), 3);
  EXPECT_EQ(cycle_rank(k33()), 4);
  EXPECT_EQ(cycle_rank(petersen()), 6);
  try {
    cycle_rank(CubicGraph(2, std::initializer_list<std::pair<Vertex, Vertex>>{}));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Disconnected);
  }
}

TEST(BridgesAndBlocks, Examples) {
  const auto c5 = bridges_and_blocks(CubicGraph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}));
  EXPECT_TRUE(c5.bridges.empty());
  EXPECT_TRUE(c5.two_connected);

  const CubicGraph triangles(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {2, 3}});
  const auto joined = bridges_and_blocks(triangles);
  ASSERT_EQ(joined.bridges.size(), 1u);
  EXPECT_EQ(triangles.edge(joined.bridges[0]), (Edge{2, 3, 0}));
  EXPECT_EQ(joined.blocks.size(), 2u);
  EXPECT_EQ(joined.cut_vertices, (VertexSet{2, 3}));
  EXPECT_FALSE(joined.two_connected);

  VertexSet nine;
  for (Vertex v = 1; v < 10; ++v) nine.push_back(v);
  const auto rest = bridges_and_blocks(induced(petersen(), nine).graph);
  EXPECT_TRUE(rest.bridges.empty());
  EXPECT_TRUE(rest.two_connected);
}

TEST(BridgesAndBlocks, DigonWithPendant) {
  // Digon 0=1 with a pendant edge 0-2.
  const CubicGraph bowtie(3, {{0, 1}, {0, 1}, {0, 2}});
  const auto blocks = bridges_and_blocks(bowtie);
  EXPECT_EQ(blocks.bridges.size(), 1u);
  EXPECT_EQ(blocks.cut_vertices, (VertexSet{0}));
  EXPECT_FALSE(blocks.two_connected);
  EXPECT_FALSE(is_two_connected(CubicGraph(2, {{0, 1}, {0, 1}})));
}

TEST(BridgesAndBlocks, DisconnectedIsAnError) {
  EXPECT_THROW(bridges_and_blocks(CubicGraph(4, {{0, 1}, {2, 3}})), Error);
}

TEST(Distance, Examples) {
  EXPECT_EQ(distance(petersen(), 0, 1), 1);
  EXPECT_EQ(distance(petersen(), 3, 3), 0);
  for (Vertex u = 0; u < 10; ++u) {
    for (Vertex v = 0; v < 10; ++v) {
      if (u != v && !petersen().adjacent(u, v)) {
        EXPECT_EQ(distance(petersen(), u, v), 2);
      }
    }
  }
  EXPECT_EQ(distance(CubicGraph(4, {{0, 1}, {2, 3}}), 0, 3), kInfinity);
}

TEST(EdgeCut, IndependenceAndIdentity) {
  const auto g = parse_graph("0: 1 1 1\n1: 0 0 0", GraphFormat::Adjlist);
  EXPECT_EQ(g.find_edge(1, 0, 2), 2);
  EXPECT_FALSE(g.find_edge(0, 1, 3).has_value());
  EXPECT_FALSE(is_independent(g, EdgeCut({0, 1})));
  EXPECT_TRUE(is_independent(petersen(), boundary(petersen(), {0, 1, 2, 3, 4})));
  EXPECT_EQ(EdgeCut({3, 1, 3}).edges, (std::vector<EdgeId>{1, 3}));
}

}  // namespace
}  // namespace cycfive

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


#include <gtest/gtest.h>

#include <random>

#include "cycfive/completion.hpp"
#include "cycfive/io.hpp"
#include "cycfive/sampling.hpp"
#include "test_support.hpp"

namespace cycfive {
namespace {

using testing::load;

int edges_between(const CubicGraph& g, const VertexSet& xs, const VertexSet& ys) {
  int count = 0;
  for (const Edge& e : g.edges()) {
    count += (contains(xs, e.u) && contains(ys, e.v)) || (contains(xs, e.v) && contains(ys, e.u));
  }
  return count;
}

TEST(Property, AcyclicBoundaryLaw) {
  std::mt19937 rng(11);
  for (const auto& name : testing::cubic_corpus()) {
    const auto g = load(name);
    if (girth(g) < 3) continue;
    for (int i = 0; i < 100; ++i) {
      const auto tree = sample_induced_tree(g, rng, g.order() - 1);
      ASSERT_TRUE(is_acyclic(induced(g, tree).graph)) << name;
      ASSERT_TRUE(is_connected(induced(g, tree).graph)) << name;
      EXPECT_EQ(boundary(g, tree).size(), tree.size() + 2) << name;
    }
  }
}

TEST(Property, BoundaryComposition) {
  std::mt19937 rng(5);
  for (const auto& name : testing::cubic_corpus()) {
    const auto g = load(name);
    if (g.order() < 4) continue;
    for (int i = 0; i < 50; ++i) {
      std::vector<int> side(static_cast<std::size_t>(g.order()));
      std::uniform_int_distribution<int> pick(0, 2);
      for (auto& s : side) s = pick(rng);
      side[0] = 0;
      side[1] = 1;
      side[2] = 2;
      VertexSet xs, ys;
      for (Vertex v = 0; v < g.order(); ++v) {
        if (side[v] == 0) xs.push_back(v);
        if (side[v] == 1) ys.push_back(v);
      }
      auto both = xs;
      both.insert(both.end(), ys.begin(), ys.end());
      EXPECT_EQ(static_cast<int>(boundary(g, make_vertex_set(both)).size()),
                static_cast<int>(boundary(g, xs).size() + boundary(g, ys).size()) - 2 * edges_between(g, xs, ys))
          << name;
    }
  }
}

TEST(Property, GirthMatchesCycleEnumeration) {
  std::mt19937 rng(3);
  for (int n = 4; n <= 14; n += 2) {
    for (int round = 0; round < 15; ++round) {
      const auto g = testing::random_cubic(n, rng);
      EXPECT_EQ(girth(g), testing::enumerated_girth(g)) << to_adjlist(g);
      const auto r = min_cycle_separating_cut(g);
      EXPECT_LE(r.zeta, r.girth);
      EXPECT_LE(r.zeta, r.cycle_rank);
      if (r.witness) {
        EXPECT_TRUE(is_independent(g, *r.witness));
      }
    }
  }
  for (const auto& name : testing::cubic_corpus()) {
    const auto g = load(name);
    if (g.order() <= 14) {
      EXPECT_EQ(girth(g), testing::enumerated_girth(g)) << name;
    }
  }
}

TEST(Property, SerialisationRoundTrips) {
  std::mt19937 rng(9);
  for (int n = 4; n <= 30; n += 2) {
    const auto g = testing::random_cubic(n, rng);
    EXPECT_EQ(parse_graph(to_adjlist(g), GraphFormat::Adjlist), g);
    EXPECT_EQ(parse_graph(to_graph6(g), GraphFormat::Graph6), g);
    EXPECT_EQ(detect_format(to_adjlist(g)), GraphFormat::Adjlist);
    EXPECT_EQ(detect_format(to_graph6(g)), GraphFormat::Graph6);
  }
  for (const auto& name : testing::cubic_corpus()) {
    const auto g = load(name);
    EXPECT_EQ(parse_graph(to_adjlist(g), GraphFormat::Adjlist), g) << name;
  }
  EXPECT_EQ(to_graph6(testing::petersen()), testing::read_file(testing::corpus_path("petersen.g6")).substr(0, 9));
}

TEST(Property, CorpusPartsAreValid) {
  const auto parts = testing::corpus_parts();
  EXPECT_GT(parts.size(), 400u);
  for (const auto& h : parts) {
    EXPECT_FALSE(detail::part_violation(h.graph()));
    EXPECT_TRUE(is_two_connected(h.graph()));
    EXPECT_GE(girth(h.graph()), 5);
    if (!h.origin()) continue;
    const auto& origin = *h.origin();
    EXPECT_EQ(origin.cut.size(), 5u);
    // The boundary vertices are exactly the part ends of the cut edges.
    VertexSet ends;
    for (EdgeId id : origin.cut.edges) {
      const Edge& e = origin.host.edge(id);
      for (Vertex w : {e.u, e.v}) {
        const auto it = std::find(origin.to_host.begin(), origin.to_host.end(), w);
        if (it != origin.to_host.end()) ends.push_back(static_cast<Vertex>(it - origin.to_host.begin()));
      }
    }
    EXPECT_EQ(make_vertex_set(ends), VertexSet(h.boundary_vertices().begin(), h.boundary_vertices().end()));
  }
}

TEST(Property, CompletionInvertsPathRemoval) {
  const auto parts = testing::corpus_parts();
  for (std::size_t i = 0; i < parts.size(); i += 7) {
    const auto& h = parts[i];
    if (h.is_five_cycle()) continue;
    const auto c = complete(h);
    EXPECT_EQ(c.zeta, 5);
    const auto& e = c.extension;
    EXPECT_EQ(remove_path2(e.graph, e.x, e.y, e.z).graph(), h.graph());
  }
}

}  // namespace
}  // namespace cycfive

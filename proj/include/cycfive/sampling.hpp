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


#pragma once

#include <random>
#include <vector>

#include "cycfive/graph.hpp"

namespace cycfive {

/// Grows a random connected acyclic induced subgraph from a random root.
/// A vertex is added only when exactly one edge joins it to the current set,
/// which keeps the induced subgraph a tree. Stops at `max_size` vertices or
/// when no vertex qualifies. `g` must be loopless.
template <class Rng>
VertexSet sample_induced_tree(const CubicGraph& g, Rng& rng, int max_size) {
  std::uniform_int_distribution<Vertex> pick_root(0, g.order() - 1);
  std::vector<char> in(static_cast<std::size_t>(g.order()), 0);
  VertexSet tree{pick_root(rng)};
  in[tree.front()] = 1;
  while (static_cast<int>(tree.size()) < max_size) {
    std::vector<Vertex> candidates;
    for (Vertex w = 0; w < g.order(); ++w) {
      if (in[w]) continue;
      int links = 0;
      for (const auto& inc : g.incident(w)) links += in[inc.neighbour] != 0;
      if (links == 1) candidates.push_back(w);
    }
    if (candidates.empty()) break;
    std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
    const Vertex w = candidates[pick(rng)];
    in[w] = 1;
    tree.push_back(w);
  }
  return make_vertex_set(tree);
}

}  // namespace cycfive

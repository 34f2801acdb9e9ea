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

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "cycfive/error.hpp"
#include "cycfive/graph.hpp"
#include "cycfive/parallel.hpp"

namespace cycfive {

/// Number of components of g - s that contain a cycle.
inline int cyclic_component_count(const CubicGraph& g, const EdgeCut& s) {
  const auto comps = components(g, s);
  std::vector<int> which(static_cast<std::size_t>(g.order()));
  for (std::size_t c = 0; c < comps.size(); ++c) {
    for (Vertex v : comps[c]) which[v] = static_cast<int>(c);
  }
  std::vector<int> edge_count(comps.size(), 0);
  for (EdgeId id = 0; id < g.size(); ++id) {
    if (s.contains(id)) continue;
    ++edge_count[which[g.edge(id).u]];
  }
  int cyclic = 0;
  for (std::size_t c = 0; c < comps.size(); ++c) cyclic += edge_count[c] >= static_cast<int>(comps[c].size());
  return cyclic;
}

inline bool is_cycle_separating(const CubicGraph& g, const EdgeCut& s) { return cyclic_component_count(g, s) >= 2; }

struct CutSearchResult {
  int zeta = 0;
  int cycle_rank = 0;
  int girth = kInfinity;
  /// Lexicographically smallest minimum cycle-separating cut; present iff zeta < cycle_rank.
  std::optional<EdgeCut> witness;
  /// The two components of g - witness, ordered by smallest vertex.
  std::optional<std::pair<VertexSet, VertexSet>> fragments;
};

namespace detail {

// Reusable scratch space for testing many candidate cuts of one graph.
class CutChecker {
 public:
  explicit CutChecker(const CubicGraph& g)
      : g_(g),
        removed_(static_cast<std::size_t>(g.size()), 0),
        seen_(static_cast<std::size_t>(g.order()), 0),
        queue_(static_cast<std::size_t>(g.order())) {}

  std::vector<char>& removed() noexcept { return removed_; }

  // True when at least two components of g minus the removed edges are cyclic.
  bool separates() {
    std::fill(seen_.begin(), seen_.end(), 0);
    int cyclic = 0;
    for (Vertex s = 0; s < g_.order(); ++s) {
      if (seen_[s]) continue;
      std::size_t head = 0, tail = 0;
      queue_[tail++] = s;
      seen_[s] = 1;
      int half_edges = 0;
      while (head < tail) {
        const Vertex u = queue_[head++];
        for (const auto& inc : g_.incident(u)) {
          if (removed_[inc.edge]) continue;
          ++half_edges;
          if (!seen_[inc.neighbour]) {
            seen_[inc.neighbour] = 1;
            queue_[tail++] = inc.neighbour;
          }
        }
      }
      if (half_edges / 2 >= static_cast<int>(tail) && ++cyclic >= 2) return true;
    }
    return false;
  }

 private:
  const CubicGraph& g_;
  std::vector<char> removed_;
  std::vector<char> seen_;
  std::vector<Vertex> queue_;
};

// Depth-first extension of `chosen` by independent edges with ids > last.
// Returns true on the first (lexicographically smallest) cycle-separating set.
inline bool extend_independent(const CubicGraph& g, CutChecker& checker, std::vector<EdgeId>& chosen,
                               std::vector<char>& used, std::size_t target) {
  if (chosen.size() == target) return checker.separates();
  const std::size_t missing = target - chosen.size();
  for (EdgeId id = chosen.back() + 1; id + static_cast<int>(missing) <= g.size(); ++id) {
    const Edge& e = g.edge(id);
    if (e.is_loop() || used[e.u] || used[e.v]) continue;
    used[e.u] = used[e.v] = 1;
    checker.removed()[id] = 1;
    chosen.push_back(id);
    if (extend_independent(g, checker, chosen, used, target)) return true;
    chosen.pop_back();
    checker.removed()[id] = 0;
    used[e.u] = used[e.v] = 0;
  }
  return false;
}

// Smallest independent cycle-separating cut of exactly `size` edges.
inline std::optional<EdgeCut> find_independent_cut(const CubicGraph& g, int size) {
  std::vector<std::optional<EdgeCut>> hits(static_cast<std::size_t>(g.size()));
  auto probe = [&](int first) {
    const Edge& e = g.edge(first);
    if (e.is_loop()) return false;
    CutChecker checker(g);
    std::vector<char> used(static_cast<std::size_t>(g.order()), 0);
    used[e.u] = used[e.v] = 1;
    checker.removed()[first] = 1;
    std::vector<EdgeId> chosen{first};
    if (!extend_independent(g, checker, chosen, used, static_cast<std::size_t>(size))) return false;
    hits[first] = EdgeCut(chosen);
    return true;
  };
  const auto first = parallel_first_hit(g.size(), probe);
  if (!first) return std::nullopt;
  return hits[*first];
}

}  // namespace detail

/// Minimum cycle-separating cut by increasing size. Candidates are restricted
/// to independent edge sets: when two edges of a cycle-separating cut share a
/// vertex v, moving v across gives a smaller one, so every minimum cut is
/// independent. Sizes run from 1 up to beta - 1; since zeta <= girth the
/// search stops by size girth whenever a cut exists.
inline CutSearchResult min_cycle_separating_cut(const CubicGraph& g) {
  if (!is_connected(g)) throw Error(ErrorCode::Disconnected, "cyclic connectivity needs a connected graph");
  if (!g.is_cubic()) throw Error(ErrorCode::NotCubic, "cyclic connectivity is computed for cubic graphs only");
  CutSearchResult out;
  out.cycle_rank = cycle_rank(g);
  out.girth = girth(g);
  out.zeta = out.cycle_rank;
  for (int k = 1; k < out.cycle_rank; ++k) {
    auto cut = detail::find_independent_cut(g, k);
    if (!cut) continue;
    out.zeta = k;
    auto comps = components(g, *cut);
    out.fragments = std::make_pair(comps.at(0), comps.at(1));
    out.witness = std::move(cut);
    break;
  }
  return out;
}

inline int zeta(const CubicGraph& g) { return min_cycle_separating_cut(g).zeta; }

/// The two cyclic parts of g - s. `s` must be a minimum cycle-separating cut.
inline std::pair<VertexSet, VertexSet> fragments(const CubicGraph& g, const EdgeCut& s) {
  for (EdgeId id : s.edges) {
    if (id < 0 || id >= g.size()) throw Error(ErrorCode::PreconditionViolated, "cut edge id out of range");
  }
  if (!is_cycle_separating(g, s)) throw Error(ErrorCode::NotMinimumCut, "cut is not cycle-separating");
  const auto search = min_cycle_separating_cut(g);
  if (static_cast<int>(s.size()) != search.zeta) {
    throw Error(ErrorCode::NotMinimumCut, "cut has " + std::to_string(s.size()) + " edges but zeta is " +
                                              std::to_string(search.zeta));
  }
  auto comps = components(g, s);
  if (comps.size() != 2) {
    throw Error(ErrorCode::InvariantViolation,
                "minimum cut left " + std::to_string(comps.size()) + " components instead of 2");
  }
  return {comps[0], comps[1]};
}

// Six-pole classes of a connected induced subgraph with six outgoing edges.
struct AcyclicPole {
  bool operator==(const AcyclicPole&) const = default;
};
struct BridgedApexPole {
  /// End of the unique bridge carrying two of the outgoing edges.
  Vertex apex = -1;
  /// The subgraph minus the apex; a 2-connected cyclic part.
  VertexSet fragment;
  bool operator==(const BridgedApexPole&) const = default;
};
struct TwoConnectedPole {
  bool operator==(const TwoConnectedPole&) const = default;
};
using SixPoleClass = std::variant<AcyclicPole, BridgedApexPole, TwoConnectedPole>;

namespace detail {

// Classifies a subgraph whose "outgoing" edges are its degree deficits
// (3 - degree). Labels are local to `sub`.
inline SixPoleClass classify_pole(const CubicGraph& sub) {
  if (is_acyclic(sub)) return AcyclicPole{};
  const auto blocks = bridges_and_blocks(sub);
  if (blocks.bridges.empty()) {
    if (!blocks.two_connected) throw Error(ErrorCode::InvariantViolation, "bridgeless cyclic pole with a cut vertex");
    for (Vertex v = 0; v < sub.order(); ++v) {
      if (sub.degree(v) < 2) {
        throw Error(ErrorCode::InvariantViolation, "2-connected pole with two outgoing edges at one vertex");
      }
    }
    return TwoConnectedPole{};
  }
  if (blocks.bridges.size() != 1) {
    throw Error(ErrorCode::InvariantViolation,
                "cyclic pole with " + std::to_string(blocks.bridges.size()) + " bridges");
  }
  const Edge& bridge = sub.edge(blocks.bridges.front());
  for (Vertex apex : {bridge.u, bridge.v}) {
    if (sub.degree(apex) != 1) continue;
    VertexSet rest;
    for (Vertex v = 0; v < sub.order(); ++v) {
      if (v != apex) rest.push_back(v);
    }
    if (!is_two_connected(induced(sub, rest).graph)) {
      throw Error(ErrorCode::InvariantViolation, "pole minus its apex is not 2-connected");
    }
    return BridgedApexPole{apex, rest};
  }
  throw Error(ErrorCode::InvariantViolation, "no end of the bridge carries two outgoing edges");
}

}  // namespace detail

/// Classifies G[xs] for a cyclically 5-connected cubic host when G[xs] is
/// connected and has exactly six outgoing edges.
inline SixPoleClass classify_six_pole(const CubicGraph& g, const VertexSet& xs) {
  if (!g.is_cubic() || !is_connected(g)) {
    throw Error(ErrorCode::PreconditionViolated, "host must be a connected cubic graph");
  }
  if (zeta(g) < 5) throw Error(ErrorCode::PreconditionViolated, "host is not cyclically 5-connected");
  const auto set = make_vertex_set(xs);
  if (boundary(g, set).size() != 6) throw Error(ErrorCode::PreconditionViolated, "subgraph boundary is not 6");
  const auto sub = induced(g, set);
  if (!is_connected(sub.graph)) throw Error(ErrorCode::PreconditionViolated, "induced subgraph is disconnected");
  auto cls = detail::classify_pole(sub.graph);
  if (auto* bridged = std::get_if<BridgedApexPole>(&cls)) {
    bridged->apex = sub.to_host[bridged->apex];
    for (Vertex& v : bridged->fragment) v = sub.to_host[v];
  }
  return cls;
}

}  // namespace cycfive

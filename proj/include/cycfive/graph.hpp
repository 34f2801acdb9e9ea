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

#include <algorithm>
#include <climits>
#include <compare>
#include <cstddef>
#include <deque>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cycfive/error.hpp"

namespace cycfive {

using Vertex = int;
using EdgeId = int;

/// Distance or girth of something that does not exist (no path, no cycle).
inline constexpr int kInfinity = INT_MAX;

/// Undirected edge with u <= v. `slot` tells parallel copies of the same pair
/// apart, so an edge is identified by (u, v, slot) rather than its endpoints.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  int slot = 0;

  bool is_loop() const noexcept { return u == v; }
  Vertex other(Vertex w) const noexcept { return w == u ? v : u; }
  bool touches(Vertex w) const noexcept { return u == w || v == w; }

  auto operator<=>(const Edge&) const = default;
};

/// Sorted, duplicate-free list of vertices of some host graph.
using VertexSet = std::vector<Vertex>;

inline VertexSet make_vertex_set(std::vector<Vertex> vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

inline bool contains(const VertexSet& xs, Vertex v) {
  return std::binary_search(xs.begin(), xs.end(), v);
}

/// Immutable multigraph with vertices 0..n-1 and every degree at most 3.
/// A loop contributes 2 to the degree of its vertex. Edges are kept in
/// lexicographic (u, v, slot) order and an EdgeId is an index into that order.
class CubicGraph {
 public:
  struct Incidence {
    EdgeId edge;
    Vertex neighbour;
  };

  CubicGraph() = default;

  CubicGraph(int n, std::span<const std::pair<Vertex, Vertex>> edge_list) : n_(n) {
    if (n < 0) throw Error(ErrorCode::MalformedInput, "negative vertex count");
    std::vector<std::pair<Vertex, Vertex>> pairs;
    pairs.reserve(edge_list.size());
    for (auto [a, b] : edge_list) {
      if (a < 0 || b < 0 || a >= n || b >= n) {
        throw Error(ErrorCode::MalformedInput, "edge endpoint " + std::to_string(std::max(a, b)) +
                                                   " outside 0.." + std::to_string(n - 1));
      }
      pairs.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(pairs.begin(), pairs.end());
    edges_.reserve(pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      int slot = 0;
      if (i > 0 && pairs[i] == pairs[i - 1]) slot = edges_.back().slot + 1;
      edges_.push_back(Edge{pairs[i].first, pairs[i].second, slot});
    }
    incidence_.assign(static_cast<std::size_t>(n), {});
    for (EdgeId id = 0; id < static_cast<EdgeId>(edges_.size()); ++id) {
      const Edge& e = edges_[id];
      incidence_[e.u].push_back({id, e.v});
      incidence_[e.v].push_back({id, e.u});
    }
    for (Vertex v = 0; v < n; ++v) {
      if (degree(v) > 3) {
        throw Error(ErrorCode::DegreeViolation,
                    "vertex " + std::to_string(v) + " has degree " + std::to_string(degree(v)));
      }
    }
  }

  CubicGraph(int n, std::initializer_list<std::pair<Vertex, Vertex>> edge_list)
      : CubicGraph(n, std::span<const std::pair<Vertex, Vertex>>(edge_list.begin(), edge_list.size())) {}

  int order() const noexcept { return n_; }
  int size() const noexcept { return static_cast<int>(edges_.size()); }

  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(EdgeId id) const { return edges_.at(static_cast<std::size_t>(id)); }

  std::span<const Incidence> incident(Vertex v) const { return incidence_.at(static_cast<std::size_t>(v)); }
  int degree(Vertex v) const { return static_cast<int>(incident(v).size()); }

  bool is_cubic() const {
    for (Vertex v = 0; v < n_; ++v) {
      if (degree(v) != 3) return false;
    }
    return true;
  }

  int multiplicity(Vertex a, Vertex b) const {
    const int loops_counted_twice = a == b ? 2 : 1;
    int count = 0;
    for (const auto& inc : incident(a)) count += inc.neighbour == b;
    return count / loops_counted_twice;
  }

  bool adjacent(Vertex a, Vertex b) const { return multiplicity(a, b) > 0; }

  std::optional<EdgeId> find_edge(Vertex a, Vertex b, int slot = 0) const {
    const Edge key{std::min(a, b), std::max(a, b), slot};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
    if (it == edges_.end() || *it != key) return std::nullopt;
    return static_cast<EdgeId>(it - edges_.begin());
  }

  /// Plain (u, v) pairs, loops and parallel copies included.
  std::vector<std::pair<Vertex, Vertex>> edge_pairs() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(edges_.size());
    for (const Edge& e : edges_) out.emplace_back(e.u, e.v);
    return out;
  }

  bool operator==(const CubicGraph& other) const { return n_ == other.n_ && edges_ == other.edges_; }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> incidence_;
};

/// A set of edges of a host graph, as sorted EdgeIds of that host.
struct EdgeCut {
  std::vector<EdgeId> edges;

  EdgeCut() = default;
  explicit EdgeCut(std::vector<EdgeId> ids) : edges(std::move(ids)) {
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  }

  std::size_t size() const noexcept { return edges.size(); }
  bool empty() const noexcept { return edges.empty(); }
  bool contains(EdgeId id) const { return std::binary_search(edges.begin(), edges.end(), id); }

  bool operator==(const EdgeCut&) const = default;
  auto operator<=>(const EdgeCut&) const = default;
};

/// True when no two edges of the cut share an endpoint.
inline bool is_independent(const CubicGraph& g, const EdgeCut& cut) {
  std::vector<char> used(static_cast<std::size_t>(g.order()), 0);
  for (EdgeId id : cut.edges) {
    const Edge& e = g.edge(id);
    if (e.is_loop() || used[e.u] || used[e.v]) return false;
    used[e.u] = used[e.v] = 1;
  }
  return true;
}

namespace detail {

inline void check_vertices(const CubicGraph& g, const VertexSet& xs) {
  for (Vertex v : xs) {
    if (v < 0 || v >= g.order()) {
      throw Error(ErrorCode::PreconditionViolated, "vertex " + std::to_string(v) + " not in graph");
    }
  }
}

inline std::vector<char> membership(const CubicGraph& g, const VertexSet& xs) {
  std::vector<char> in(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : xs) in[v] = 1;
  return in;
}

}  // namespace detail

/// delta_G(X): the edges with exactly one end in `xs`.
inline EdgeCut boundary(const CubicGraph& g, const VertexSet& xs) {
  detail::check_vertices(g, xs);
  if (xs.empty() || static_cast<int>(xs.size()) >= g.order()) {
    throw Error(ErrorCode::EmptyOrFullSet, "boundary needs a nonempty proper vertex subset");
  }
  const auto in = detail::membership(g, xs);
  std::vector<EdgeId> ids;
  for (EdgeId id = 0; id < g.size(); ++id) {
    const Edge& e = g.edge(id);
    if (in[e.u] != in[e.v]) ids.push_back(id);
  }
  return EdgeCut(std::move(ids));
}

/// G[X] relabelled to 0..|X|-1 in increasing host order, with both maps kept.
struct InducedSubgraph {
  CubicGraph graph;
  std::vector<Vertex> to_host;    // new -> old
  std::vector<Vertex> from_host;  // old -> new, -1 outside X
};

inline InducedSubgraph induced(const CubicGraph& g, const VertexSet& xs) {
  detail::check_vertices(g, xs);
  InducedSubgraph out;
  out.to_host = make_vertex_set(xs);
  out.from_host.assign(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < out.to_host.size(); ++i) out.from_host[out.to_host[i]] = static_cast<Vertex>(i);
  std::vector<std::pair<Vertex, Vertex>> kept;
  for (const Edge& e : g.edges()) {
    if (out.from_host[e.u] >= 0 && out.from_host[e.v] >= 0) kept.emplace_back(out.from_host[e.u], out.from_host[e.v]);
  }
  out.graph = CubicGraph(static_cast<int>(out.to_host.size()), kept);
  return out;
}

/// Connected components of g with the edges of `removed` deleted, each sorted,
/// listed by smallest vertex.
inline std::vector<VertexSet> components(const CubicGraph& g, const EdgeCut& removed = {}) {
  std::vector<int> label(static_cast<std::size_t>(g.order()), -1);
  std::vector<VertexSet> out;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (label[s] >= 0) continue;
    const int id = static_cast<int>(out.size());
    VertexSet comp{s};
    label[s] = id;
    for (std::size_t head = 0; head < comp.size(); ++head) {
      for (const auto& inc : g.incident(comp[head])) {
        if (label[inc.neighbour] >= 0 || removed.contains(inc.edge)) continue;
        label[inc.neighbour] = id;
        comp.push_back(inc.neighbour);
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

inline bool is_connected(const CubicGraph& g) { return g.order() > 0 && components(g).size() == 1; }

/// A graph is a forest iff |E| = |V| - #components.
inline bool is_acyclic(const CubicGraph& g) {
  return g.size() == g.order() - static_cast<int>(components(g).size());
}

/// Shortest-path lengths (in edges) from `source`; kInfinity when unreachable.
inline std::vector<int> distances_from(const CubicGraph& g, Vertex source) {
  std::vector<int> dist(static_cast<std::size_t>(g.order()), kInfinity);
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    for (const auto& inc : g.incident(u)) {
      if (dist[inc.neighbour] != kInfinity) continue;
      dist[inc.neighbour] = dist[u] + 1;
      queue.push_back(inc.neighbour);
    }
  }
  return dist;
}

inline int distance(const CubicGraph& g, Vertex u, Vertex v) {
  if (u < 0 || v < 0 || u >= g.order() || v >= g.order()) {
    throw Error(ErrorCode::PreconditionViolated, "distance endpoint not in graph");
  }
  return distances_from(g, u)[v];
}

/// Length of a shortest cycle: 1 for a loop, 2 for a parallel pair,
/// kInfinity for a forest. One breadth-first search per root; every non-tree
/// edge u-w closes a walk of length d(u) + d(w) + 1, and the minimum over all
/// roots is attained by a root lying on a shortest cycle.
inline int girth(const CubicGraph& g) {
  int best = kInfinity;
  std::vector<int> dist(static_cast<std::size_t>(g.order()));
  std::vector<EdgeId> via(static_cast<std::size_t>(g.order()));
  for (Vertex root = 0; root < g.order(); ++root) {
    std::fill(dist.begin(), dist.end(), kInfinity);
    std::fill(via.begin(), via.end(), -1);
    std::deque<Vertex> queue{root};
    dist[root] = 0;
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop_front();
      if (2 * dist[u] >= best) break;
      for (const auto& inc : g.incident(u)) {
        if (inc.edge == via[u]) continue;
        const Vertex w = inc.neighbour;
        if (dist[w] == kInfinity) {
          dist[w] = dist[u] + 1;
          via[w] = inc.edge;
          queue.push_back(w);
        } else {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  return best;
}

/// beta(G) = |E| - |V| + 1 of a connected graph.
inline int cycle_rank(const CubicGraph& g) {
  if (!is_connected(g)) throw Error(ErrorCode::Disconnected, "cycle rank needs a connected graph");
  return g.size() - g.order() + 1;
}

struct BlockStructure {
  std::vector<EdgeId> bridges;
  /// Components left after deleting every bridge (2-edge-connected blocks).
  std::vector<VertexSet> blocks;
  VertexSet cut_vertices;
  /// Connected, at least 3 vertices, no cut vertex and no bridge.
  bool two_connected = false;
};

/// Bridges, 2-edge-connected blocks and cut vertices by one lowpoint DFS.
/// Parallel edges are told apart by EdgeId, so a doubled edge is never a bridge.
inline BlockStructure bridges_and_blocks(const CubicGraph& g) {
  if (!is_connected(g)) throw Error(ErrorCode::Disconnected, "block structure needs a connected graph");
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<int> pre(n, -1);
  std::vector<int> low(n, 0);
  std::vector<char> is_cut(n, 0);
  BlockStructure out;

  struct Frame {
    Vertex v;
    EdgeId parent_edge;
    std::size_t next;
    int children;
  };
  int clock = 0;
  std::vector<Frame> stack{{0, -1, 0, 0}};
  pre[0] = low[0] = clock++;
  while (!stack.empty()) {
    Frame& top = stack.back();
    const auto inc = g.incident(top.v);
    if (top.next < inc.size()) {
      const auto [edge, w] = inc[top.next++];
      if (edge == top.parent_edge) continue;
      if (pre[w] < 0) {
        pre[w] = low[w] = clock++;
        ++top.children;
        stack.push_back({w, edge, 0, 0});
      } else {
        low[top.v] = std::min(low[top.v], pre[w]);
      }
      continue;
    }
    const Frame done = top;
    stack.pop_back();
    if (stack.empty()) {
      if (done.children > 1) is_cut[done.v] = 1;
      continue;
    }
    Frame& parent = stack.back();
    low[parent.v] = std::min(low[parent.v], low[done.v]);
    if (low[done.v] > pre[parent.v]) out.bridges.push_back(done.parent_edge);
    if (stack.size() > 1 && low[done.v] >= pre[parent.v]) is_cut[parent.v] = 1;
  }
  std::sort(out.bridges.begin(), out.bridges.end());
  out.blocks = components(g, EdgeCut(out.bridges));
  for (Vertex v = 0; v < g.order(); ++v) {
    if (is_cut[v]) out.cut_vertices.push_back(v);
  }
  out.two_connected = g.order() >= 3 && out.bridges.empty() && out.cut_vertices.empty();
  return out;
}

/// Non-throwing 2-connectivity test; false for disconnected graphs.
inline bool is_two_connected(const CubicGraph& g) {
  return is_connected(g) && bridges_and_blocks(g).two_connected;
}

}  // namespace cycfive

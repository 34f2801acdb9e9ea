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

// Brute-force reference answers. Nothing here calls the fast search, girth or
// completion code: only the graph container is shared.

#include <algorithm>
#include <array>
#include <numeric>
#include <string>
#include <vector>

#include "cycfive/completion.hpp"
#include "cycfive/error.hpp"
#include "cycfive/graph.hpp"

namespace cycfive::oracle {

inline constexpr int kMaxEdges = 40;
inline constexpr long long kMaxSubsets = 50'000'000;

struct OracleReport {
  std::string subject;
  std::string oracle_value;
  std::string fast_value;
  bool agree = false;
  double elapsed_ms = 0.0;
};

namespace detail {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)), cyclic_(static_cast<std::size_t>(n), 0) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int v) {
    while (parent_[v] != v) v = parent_[v] = parent_[parent_[v]];
    return v;
  }
  void join(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) {
      cyclic_[a] = 1;
      return;
    }
    parent_[b] = a;
    cyclic_[a] = cyclic_[a] || cyclic_[b];
  }
  int cyclic_roots() {
    int count = 0;
    for (int v = 0; v < static_cast<int>(parent_.size()); ++v) count += find(v) == v && cyclic_[v];
    return count;
  }
  int roots() {
    int count = 0;
    for (int v = 0; v < static_cast<int>(parent_.size()); ++v) count += find(v) == v;
    return count;
  }

 private:
  std::vector<int> parent_;
  std::vector<char> cyclic_;
};

inline bool separates_cycles(const CubicGraph& g, const std::vector<char>& removed) {
  UnionFind uf(g.order());
  for (EdgeId id = 0; id < g.size(); ++id) {
    if (!removed[id]) uf.join(g.edge(id).u, g.edge(id).v);
  }
  return uf.cyclic_roots() >= 2;
}

inline bool connected(const CubicGraph& g) {
  UnionFind uf(g.order());
  for (const Edge& e : g.edges()) uf.join(e.u, e.v);
  return g.order() > 0 && uf.roots() == 1;
}

// Shortest cycle through each edge in turn: a loop is 1, otherwise the
// shortest u-v path avoiding that edge, plus one.
inline int shortest_cycle(const CubicGraph& g) {
  int best = kInfinity;
  for (EdgeId id = 0; id < g.size(); ++id) {
    const Edge& e = g.edge(id);
    if (e.is_loop()) return 1;
    std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
    std::vector<Vertex> frontier{e.u};
    dist[e.u] = 0;
    for (std::size_t head = 0; head < frontier.size() && dist[e.v] < 0; ++head) {
      const Vertex u = frontier[head];
      for (const auto& inc : g.incident(u)) {
        if (inc.edge == id || dist[inc.neighbour] >= 0) continue;
        dist[inc.neighbour] = dist[u] + 1;
        frontier.push_back(inc.neighbour);
      }
    }
    if (dist[e.v] >= 0) best = std::min(best, dist[e.v] + 1);
  }
  return best;
}

inline long long binomial(int n, int k) {
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Largest subset size searched and a budget check over all sizes up to it.
inline int search_limit(const CubicGraph& g) {
  if (!connected(g)) throw Error(ErrorCode::Disconnected, "oracle needs a connected graph");
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) != 3) throw Error(ErrorCode::NotCubic, "oracle needs a cubic graph");
  }
  if (g.size() > kMaxEdges) {
    throw Error(ErrorCode::TooLarge, std::to_string(g.size()) + " edges exceed the oracle budget of " +
                                         std::to_string(kMaxEdges));
  }
  const int beta = g.size() - g.order() + 1;
  const int limit = std::min(shortest_cycle(g), beta - 1);
  long long total = 0;
  for (int k = 1; k <= limit; ++k) total += binomial(g.size(), k);
  if (total > kMaxSubsets) throw Error(ErrorCode::TooLarge, "edge subset count exceeds the oracle budget");
  return limit;
}

// Calls visit(subset) for every k-subset of edge ids in lexicographic order;
// stops early when visit returns false.
template <class Visit>
void for_each_subset(int m, int k, Visit&& visit) {
  std::vector<EdgeId> idx(static_cast<std::size_t>(k));
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<char> removed(static_cast<std::size_t>(m), 0);
  while (true) {
    std::fill(removed.begin(), removed.end(), 0);
    for (EdgeId id : idx) removed[id] = 1;
    if (!visit(idx, removed)) return;
    int i = k - 1;
    while (i >= 0 && idx[i] == m - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace detail

/// Cyclic edge-connectivity by trying every edge subset of size 1..girth.
inline int zeta_oracle(const CubicGraph& g) {
  const int limit = detail::search_limit(g);
  for (int k = 1; k <= limit; ++k) {
    bool found = false;
    detail::for_each_subset(g.size(), k, [&](const std::vector<EdgeId>&, const std::vector<char>& removed) {
      found = detail::separates_cycles(g, removed);
      return !found;
    });
    if (found) return k;
  }
  return g.size() - g.order() + 1;
}

/// Every cycle-separating cut of minimum size, in lexicographic order.
inline std::vector<EdgeCut> all_min_cuts(const CubicGraph& g) {
  const int limit = detail::search_limit(g);
  std::vector<EdgeCut> out;
  for (int k = 1; k <= limit && out.empty(); ++k) {
    detail::for_each_subset(g.size(), k, [&](const std::vector<EdgeId>& idx, const std::vector<char>& removed) {
      if (detail::separates_cycles(g, removed)) out.emplace_back(idx);
      return true;
    });
  }
  return out;
}

/// Every ordering of the boundary vertices whose extension has girth >= 5,
/// found by building all 120 extensions.
inline std::vector<Permutation> all_girth5_perms(const CyclicPart& h) {
  Permutation perm = h.boundary_vertices();
  std::sort(perm.begin(), perm.end());
  const Vertex n = h.graph().order();
  const Vertex x = n, y = n + 1, z = n + 2;
  std::vector<Permutation> out;
  do {
    auto pairs = h.graph().edge_pairs();
    pairs.insert(pairs.end(), {{x, y}, {y, z}, {x, perm[0]}, {x, perm[1]}, {y, perm[2]}, {z, perm[3]}, {z, perm[4]}});
    if (detail::shortest_cycle(CubicGraph(n + 3, pairs)) >= 5) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace cycfive::oracle

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
#include <array>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "cycfive/cyccut.hpp"
#include "cycfive/error.hpp"
#include "cycfive/graph.hpp"

namespace cycfive {

/// An ordering (a1, a2, a3, a4, a5) of the five degree-2 vertices of a part.
/// x receives a1 and a2, y receives a3, z receives a4 and a5.
using Permutation = std::array<Vertex, 5>;

/// Where a part came from: the host graph, the part-to-host vertex map and the
/// host edges that were cut.
struct PartOrigin {
  CubicGraph host;
  std::vector<Vertex> to_host;
  EdgeCut cut;
};

namespace detail {

inline bool is_five_cycle_graph(const CubicGraph& g) {
  if (g.order() != 5 || g.size() != 5 || !is_connected(g)) return false;
  for (Vertex v = 0; v < 5; ++v) {
    if (g.degree(v) != 2 || g.multiplicity(v, v) > 0) return false;
  }
  return true;
}

// Name of the first violated part invariant, or nothing.
inline std::optional<std::string> part_violation(const CubicGraph& g) {
  VertexSet low;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 2) {
      low.push_back(v);
    } else if (g.degree(v) != 3) {
      return "degrees: vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v));
    }
  }
  if (low.size() != 5) return "degrees: " + std::to_string(low.size()) + " vertices of degree 2, expected 5";
  if (!is_two_connected(g)) return "2-connected: part is not 2-connected";
  if (girth(g) < 5) return "girth: part has girth " + std::to_string(girth(g)) + " < 5";
  if (!is_five_cycle_graph(g)) {
    for (Vertex a : low) {
      int inside = 0;
      for (const auto& inc : g.incident(a)) inside += contains(low, inc.neighbour);
      if (inside > 1) {
        return "boundary-neighbours: degree-2 vertex " + std::to_string(a) + " has " + std::to_string(inside) +
               " degree-2 neighbours";
      }
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// A cyclic part H: 2-connected, girth at least 5, exactly five vertices of
/// degree 2 (the set A) and all others of degree 3. Outside the 5-cycle, no
/// vertex of A has two neighbours in A.
class CyclicPart {
 public:
  /// Validates the invariants and throws `failure` naming the broken clause.
  static CyclicPart from_graph(CubicGraph g, std::optional<PartOrigin> origin = std::nullopt,
                               ErrorCode failure = ErrorCode::InvariantViolation) {
    if (auto why = detail::part_violation(g)) throw Error(failure, *why);
    CyclicPart part;
    std::size_t k = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
      if (g.degree(v) == 2) part.boundary_[k++] = v;
    }
    part.graph_ = std::move(g);
    part.origin_ = std::move(origin);
    return part;
  }

  const CubicGraph& graph() const noexcept { return graph_; }
  /// The degree-2 vertices, ascending.
  const std::array<Vertex, 5>& boundary_vertices() const noexcept { return boundary_; }
  bool is_boundary(Vertex v) const { return std::find(boundary_.begin(), boundary_.end(), v) != boundary_.end(); }
  const std::optional<PartOrigin>& origin() const noexcept { return origin_; }
  bool is_five_cycle() const { return detail::is_five_cycle_graph(graph_); }

 private:
  CyclicPart() = default;

  CubicGraph graph_;
  std::array<Vertex, 5> boundary_{-1, -1, -1, -1, -1};
  std::optional<PartOrigin> origin_;
};

/// Cuts `side` out of a host with zeta = 5 along the 5-edge cycle-separating cut `s`.
inline CyclicPart make_part(const CubicGraph& g, const EdgeCut& s, const VertexSet& side) {
  const int z = zeta(g);
  if (z != 5) throw Error(ErrorCode::InvariantViolation, "host: zeta is " + std::to_string(z) + ", not 5");
  if (s.size() != 5) throw Error(ErrorCode::InvariantViolation, "cut: has " + std::to_string(s.size()) + " edges, not 5");
  for (EdgeId id : s.edges) {
    if (id < 0 || id >= g.size()) throw Error(ErrorCode::InvariantViolation, "cut: edge id out of range");
  }
  if (!is_cycle_separating(g, s)) throw Error(ErrorCode::InvariantViolation, "cut: not cycle-separating");
  const auto comps = components(g, s);
  const auto wanted = make_vertex_set(side);
  if (std::find(comps.begin(), comps.end(), wanted) == comps.end()) {
    throw Error(ErrorCode::InvariantViolation, "side: not a component of the host minus the cut");
  }
  auto sub = induced(g, wanted);
  return CyclicPart::from_graph(std::move(sub.graph), PartOrigin{g, std::move(sub.to_host), s});
}

/// Deletes the path x-y-z from a host with zeta = 5 and returns the remainder as a part.
inline CyclicPart remove_path2(const CubicGraph& g, Vertex x, Vertex y, Vertex z) {
  for (Vertex v : {x, y, z}) {
    if (v < 0 || v >= g.order()) throw Error(ErrorCode::NotAValidPart, "path vertex outside the graph");
  }
  if (x == y || y == z || x == z) throw Error(ErrorCode::NotAValidPart, "path vertices must be distinct");
  if (!g.adjacent(x, y) || !g.adjacent(y, z)) throw Error(ErrorCode::NotAValidPart, "x-y-z is not a path");
  if (g.adjacent(x, z)) throw Error(ErrorCode::NotAValidPart, "x and z are adjacent");
  if (!g.is_cubic() || !is_connected(g)) throw Error(ErrorCode::NotAValidPart, "host is not a connected cubic graph");
  const int z_host = zeta(g);
  if (z_host != 5) throw Error(ErrorCode::NotAValidPart, "host: zeta is " + std::to_string(z_host) + ", not 5");
  VertexSet rest;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (v != x && v != y && v != z) rest.push_back(v);
  }
  auto sub = induced(g, rest);
  auto cut = boundary(g, make_vertex_set({x, y, z}));
  return CyclicPart::from_graph(std::move(sub.graph), PartOrigin{g, std::move(sub.to_host), std::move(cut)},
                                ErrorCode::NotAValidPart);
}

/// H(a1, ..., a5): the part plus the path x-y-z, with x, y, z numbered
/// |V(H)|, |V(H)| + 1, |V(H)| + 2.
struct Extension {
  CubicGraph graph;
  CyclicPart part;
  Permutation perm{};
  Vertex x = -1;
  Vertex y = -1;
  Vertex z = -1;
  /// xy, yz, xa1, xa2, ya3, za4, za5 in that order.
  std::array<std::pair<Vertex, Vertex>, 7> added_edges{};
};

inline bool is_permutation_of_boundary(const CyclicPart& h, const Permutation& perm) {
  auto sorted = perm;
  std::sort(sorted.begin(), sorted.end());
  return sorted == h.boundary_vertices();
}

inline Extension extend(const CyclicPart& h, const Permutation& perm) {
  if (!is_permutation_of_boundary(h, perm)) {
    throw Error(ErrorCode::NotAPermutation, "ordering is not a permutation of the degree-2 vertices");
  }
  const Vertex n = h.graph().order();
  Extension e{CubicGraph{}, h, perm, n, n + 1, n + 2, {}};
  e.added_edges = {{{e.x, e.y}, {e.y, e.z}, {e.x, perm[0]}, {e.x, perm[1]}, {e.y, perm[2]}, {e.z, perm[3]}, {e.z, perm[4]}}};
  auto pairs = h.graph().edge_pairs();
  pairs.insert(pairs.end(), e.added_edges.begin(), e.added_edges.end());
  e.graph = CubicGraph(n + 3, pairs);
  return e;
}

/// D on the boundary vertices: pairs at distance exactly 2 in H. Pairs at
/// distance 1 are kept apart in `adjacent_in_part`.
class DistanceGraph {
 public:
  explicit DistanceGraph(const CyclicPart& h) : vertices_(h.boundary_vertices()) {
    for (std::size_t i = 0; i < 5; ++i) {
      const auto dist = distances_from(h.graph(), vertices_[i]);
      for (std::size_t j = 0; j < 5; ++j) dist_[i][j] = dist[vertices_[j]];
    }
  }

  const std::array<Vertex, 5>& vertices() const noexcept { return vertices_; }
  int distance(Vertex a, Vertex b) const { return dist_[index(a)][index(b)]; }
  bool has_edge(Vertex a, Vertex b) const { return a != b && distance(a, b) == 2; }
  bool adjacent_in_part(Vertex a, Vertex b) const { return a != b && distance(a, b) == 1; }

  int degree(Vertex a) const {
    int d = 0;
    for (Vertex b : vertices_) d += has_edge(a, b);
    return d;
  }
  int part_degree(Vertex a) const {
    int d = 0;
    for (Vertex b : vertices_) d += adjacent_in_part(a, b);
    return d;
  }

  std::vector<std::pair<Vertex, Vertex>> edges() const { return pairs_at(2); }
  std::vector<std::pair<Vertex, Vertex>> adjacent_pairs() const { return pairs_at(1); }

 private:
  std::size_t index(Vertex a) const {
    const auto it = std::find(vertices_.begin(), vertices_.end(), a);
    if (it == vertices_.end()) throw Error(ErrorCode::PreconditionViolated, "vertex is not a degree-2 vertex of the part");
    return static_cast<std::size_t>(it - vertices_.begin());
  }
  std::vector<std::pair<Vertex, Vertex>> pairs_at(int d) const {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (std::size_t i = 0; i < 5; ++i) {
      for (std::size_t j = i + 1; j < 5; ++j) {
        if (dist_[i][j] == d) out.emplace_back(vertices_[i], vertices_[j]);
      }
    }
    return out;
  }

  std::array<Vertex, 5> vertices_;
  std::array<std::array<int, 5>, 5> dist_{};
};

inline DistanceGraph distance_graph(const CyclicPart& h) { return DistanceGraph(h); }

/// H(perm) has girth >= 5 iff a3 has no neighbour in A and both x-pair and
/// z-pair are at distance >= 3 in H.
inline bool girth_condition(const CyclicPart& h, const Permutation& perm) {
  if (!is_permutation_of_boundary(h, perm)) {
    throw Error(ErrorCode::NotAPermutation, "ordering is not a permutation of the degree-2 vertices");
  }
  const DistanceGraph d(h);
  return d.part_degree(perm[2]) == 0 && d.distance(perm[0], perm[1]) >= 3 && d.distance(perm[3], perm[4]) >= 3;
}

/// Representative of the orderings giving the same extension (swap inside the
/// x-pair, swap inside the z-pair, exchange x and z): the lexicographic minimum.
inline Permutation canonical(Permutation p) {
  if (p[0] > p[1]) std::swap(p[0], p[1]);
  if (p[3] > p[4]) std::swap(p[3], p[4]);
  if (p[3] < p[0]) p = {p[3], p[4], p[2], p[0], p[1]};
  return p;
}

/// Number of edges of H[A]; 0, 1 or 2 on every valid part other than C5.
inline int boundary_edge_count(const CyclicPart& h) { return static_cast<int>(DistanceGraph(h).adjacent_pairs().size()); }

/// A girth-5 ordering built case by case on the number of edges inside A.
inline Permutation choose_permutation(const CyclicPart& h) {
  if (h.is_five_cycle()) throw Error(ErrorCode::IsFiveCycle, "five-cycle part has no girth-5 completion");
  const DistanceGraph d(h);
  const auto& a = h.boundary_vertices();
  const auto inside = d.adjacent_pairs();
  std::vector<Permutation> options;
  auto others = [&](std::initializer_list<Vertex> skip) {
    std::vector<Vertex> rest;
    for (Vertex v : a) {
      if (std::find(skip.begin(), skip.end(), v) == skip.end()) rest.push_back(v);
    }
    return rest;
  };

  switch (inside.size()) {
    case 2: {
      // Two disjoint edges p1q1, p2q2 and an isolated m that takes the middle
      // slot; x and z each get one end of both edges, no pair joined in D.
      const auto [p1, q1] = inside[0];
      const auto [p2, q2] = inside[1];
      const Vertex m = others({p1, q1, p2, q2}).front();
      for (auto [u, u_mate] : {std::pair{p1, q1}, std::pair{q1, p1}}) {
        for (auto [w, w_mate] : {std::pair{p2, q2}, std::pair{q2, p2}}) {
          if (!d.has_edge(u, w) && !d.has_edge(u_mate, w_mate)) options.push_back({u, w, m, w_mate, u_mate});
        }
      }
      break;
    }
    case 1: {
      // One edge a1a5 oriented with deg_D(a5) <= deg_D(a1); a2 avoids a1 in D
      // and a4 avoids a5 in D.
      const auto [p, q] = inside[0];
      for (auto [a1, a5] : {std::pair{p, q}, std::pair{q, p}}) {
        if (d.degree(a5) > d.degree(a1)) continue;
        for (Vertex a2 : others({a1, a5})) {
          if (d.has_edge(a1, a2)) continue;
          for (Vertex a4 : others({a1, a5, a2})) {
            if (d.has_edge(a5, a4)) continue;
            const Vertex a3 = others({a1, a5, a2, a4}).front();
            options.push_back({a1, a2, a3, a4, a5});
          }
        }
      }
      break;
    }
    case 0: {
      // Any middle vertex; the other four split into two pairs that are
      // non-edges of D.
      for (Vertex mid : a) {
        const auto rest = others({mid});
        for (std::size_t partner = 1; partner < 4; ++partner) {
          std::vector<Vertex> second;
          for (std::size_t i = 1; i < 4; ++i) {
            if (i != partner) second.push_back(rest[i]);
          }
          if (!d.has_edge(rest[0], rest[partner]) && !d.has_edge(second[0], second[1])) {
            options.push_back({rest[0], rest[partner], mid, second[0], second[1]});
          }
        }
      }
      break;
    }
    default:
      throw Error(ErrorCode::InternalContradiction,
                  std::to_string(inside.size()) + " edges among the degree-2 vertices, at most 2 expected");
  }
  if (options.empty()) {
    throw Error(ErrorCode::InternalContradiction,
                "no ordering found with " + std::to_string(inside.size()) + " edges among the degree-2 vertices");
  }
  for (auto& p : options) p = canonical(p);
  const Permutation best = *std::min_element(options.begin(), options.end());
  if (!girth_condition(h, best)) {
    throw Error(ErrorCode::InternalContradiction, "constructed ordering fails the girth condition");
  }
  return best;
}

/// C2 after removing y and z is 2-connected.
struct C2TwoConnected {
  bool operator==(const C2TwoConnected&) const = default;
};
/// C2 has one bridge; `apex` carries two outgoing edges and equals c1 and a_i.
struct C2Bridged {
  Vertex apex = -1;
  VertexSet fragment;
  /// 3, 4 or 5: the slot of the apex in the normalised ordering.
  int index = 0;
  bool operator==(const C2Bridged&) const = default;
};
using C2Structure = std::variant<C2TwoConnected, C2Bridged>;

/// A cycle-separating 4-cut of an extension, oriented so that y lies on the
/// second side. When y falls on x's side the ordering is reversed (x and z
/// swap roles); `reversed` records this and `perm`, `x`, `z` are the oriented
/// values. Vertex labels are those of the extension graph, which agree with the
/// part on 0..|V(H)|-1.
struct CutDecomposition {
  EdgeCut cut;
  bool reversed = false;
  Permutation perm{};
  Vertex x = -1;
  Vertex y = -1;
  Vertex z = -1;
  /// C1' and C2', path vertices included.
  VertexSet side1;
  VertexSet side2;
  /// C1 = C1' - x and C2 = C2' - {y, z}, vertices of H.
  VertexSet c1;
  VertexSet c2;
  /// Ends of the three cut edges inside H: b[i] in C1, c[i] in C2. When C2 is
  /// bridged, c[0] is the apex.
  std::array<Vertex, 3> b{};
  std::array<Vertex, 3> c{};
  C2Structure c2_structure;
};

/// Returns nothing when the extension is cyclically 5-connected; otherwise the
/// minimum cut, checked to have 4 edges and to separate {x, a1, a2} from
/// {z, a4, a5}.
inline std::optional<CutDecomposition> find_distribution(const Extension& e) {
  const int g = girth(e.graph);
  if (g < 5) throw Error(ErrorCode::PreconditionViolated, "extension has girth " + std::to_string(g) + " < 5");
  const auto search = min_cycle_separating_cut(e.graph);
  if (search.zeta >= 5) return std::nullopt;
  auto violated = [](const std::string& what) { return Error(ErrorCode::DistributionViolated, what); };
  if (search.zeta != 4) throw violated("minimum cut has " + std::to_string(search.zeta) + " edges, not 4");

  CutDecomposition out;
  out.cut = *search.witness;
  const auto& [first, second] = *search.fragments;
  auto side_of = [&](Vertex v) { return contains(first, v) ? 0 : 1; };
  const Permutation& p = e.perm;
  if (side_of(e.x) == side_of(e.z)) throw violated("x and z on the same side");
  if (side_of(p[0]) != side_of(e.x) || side_of(p[1]) != side_of(e.x)) throw violated("a1 or a2 not with x");
  if (side_of(p[3]) != side_of(e.z) || side_of(p[4]) != side_of(e.z)) throw violated("a4 or a5 not with z");

  out.reversed = side_of(e.y) == side_of(e.x);
  out.perm = out.reversed ? Permutation{p[4], p[3], p[2], p[1], p[0]} : p;
  out.x = out.reversed ? e.z : e.x;
  out.y = e.y;
  out.z = out.reversed ? e.x : e.z;
  out.side1 = side_of(out.x) == 0 ? first : second;
  out.side2 = side_of(out.x) == 0 ? second : first;
  if (!contains(out.side2, out.perm[2])) throw violated("a3 not on the side of y");

  const Vertex n = e.part.graph().order();
  const auto xy = e.graph.find_edge(out.x, out.y);
  if (!xy || !out.cut.contains(*xy)) throw violated("cut does not contain the path edge at x");
  std::size_t inner = 0;
  for (EdgeId id : out.cut.edges) {
    const Edge& edge = e.graph.edge(id);
    if (edge.u >= n || edge.v >= n) continue;
    if (inner == 3) throw violated("more than three cut edges inside the part");
    const bool u_first = contains(out.side1, edge.u);
    out.b[inner] = u_first ? edge.u : edge.v;
    out.c[inner] = u_first ? edge.v : edge.u;
    ++inner;
  }
  if (inner != 3) throw violated("expected three cut edges inside the part");
  for (Vertex v : out.side1) {
    if (v < n) out.c1.push_back(v);
  }
  for (Vertex v : out.side2) {
    if (v < n) out.c2.push_back(v);
  }

  const auto c2_graph = induced(e.part.graph(), out.c2);
  SixPoleClass cls;
  try {
    if (!is_connected(c2_graph.graph)) throw violated("C2 is disconnected");
    cls = detail::classify_pole(c2_graph.graph);
  } catch (const Error& err) {
    if (err.code() == ErrorCode::DistributionViolated) throw;
    throw violated(std::string("C2 structure: ") + err.what());
  }
  if (std::holds_alternative<AcyclicPole>(cls)) throw violated("C2 is acyclic");
  if (std::holds_alternative<TwoConnectedPole>(cls)) {
    out.c2_structure = C2TwoConnected{};
    return out;
  }
  const auto& bridged = std::get<BridgedApexPole>(cls);
  C2Bridged structure;
  structure.apex = c2_graph.to_host[bridged.apex];
  for (Vertex v : bridged.fragment) structure.fragment.push_back(c2_graph.to_host[v]);
  const auto slot = std::find(out.perm.begin() + 2, out.perm.end(), structure.apex);
  const auto edge_at = std::find(out.c.begin(), out.c.end(), structure.apex);
  if (slot == out.perm.end() || edge_at == out.c.end()) throw violated("bridge apex is not both c_i and a_i");
  structure.index = static_cast<int>(slot - out.perm.begin()) + 1;
  const auto k = static_cast<std::size_t>(edge_at - out.c.begin());
  std::swap(out.c[0], out.c[k]);
  std::swap(out.b[0], out.b[k]);
  out.c2_structure = std::move(structure);
  return out;
}

enum class RepairBranch { None, TwoConnected, Bridged };

constexpr std::string_view to_string(RepairBranch b) {
  switch (b) {
    case RepairBranch::None: return "none";
    case RepairBranch::TwoConnected: return "two-connected";
    case RepairBranch::Bridged: return "bridged";
  }
  return "unknown";
}

struct Completion {
  Extension extension;
  Permutation initial_perm{};
  bool repaired = false;
  RepairBranch branch = RepairBranch::None;
  /// The 4-cut that triggered the repair, if any.
  std::optional<CutDecomposition> decomposition;
  int zeta = 0;
  int girth = 0;
};

/// Completes `h` starting from a girth-5 ordering, rerouting the path when the
/// first extension has a cycle-separating 4-cut.
inline Completion complete_from(const CyclicPart& h, const Permutation& perm) {
  if (h.is_five_cycle()) throw Error(ErrorCode::IsFiveCycle, "five-cycle part has no girth-5 completion");
  if (!girth_condition(h, perm)) throw Error(ErrorCode::PreconditionViolated, "starting ordering fails the girth condition");
  Completion out{.extension = extend(h, perm), .initial_perm = perm, .decomposition = std::nullopt};
  out.decomposition = find_distribution(out.extension);
  if (out.decomposition) {
    const auto& dec = *out.decomposition;
    const Permutation& p = dec.perm;
    const DistanceGraph d(h);
    Permutation next{};
    if (std::holds_alternative<C2TwoConnected>(dec.c2_structure)) {
      std::vector<Vertex> middle;
      for (std::size_t s = 2; s < 5; ++s) {
        if (d.part_degree(p[s]) == 0) middle.push_back(p[s]);
      }
      if (middle.empty()) throw Error(ErrorCode::RepairFailed, "no vertex among a3, a4, a5 is isolated in H[A]");
      const Vertex aj = *std::min_element(middle.begin(), middle.end());
      std::vector<Vertex> rest;
      for (std::size_t s = 2; s < 5; ++s) {
        if (p[s] != aj) rest.push_back(p[s]);
      }
      std::sort(rest.begin(), rest.end());
      next = {p[0], rest[0], aj, p[1], rest[1]};
      out.branch = RepairBranch::TwoConnected;
    } else {
      const auto& bridged = std::get<C2Bridged>(dec.c2_structure);
      const Vertex ai = bridged.apex;
      std::vector<Vertex> rest;
      for (std::size_t s = 2; s < 5; ++s) {
        if (p[s] != ai) rest.push_back(p[s]);
      }
      std::sort(rest.begin(), rest.end());
      next = {p[0], rest[0], ai, rest[1], p[1]};
      out.branch = RepairBranch::Bridged;
    }
    out.repaired = true;
    out.extension = extend(h, next);
  }
  out.girth = girth(out.extension.graph);
  if (out.girth < 5) throw Error(ErrorCode::RepairFailed, "completion has girth " + std::to_string(out.girth));
  out.zeta = zeta(out.extension.graph);
  if (out.zeta < 5) throw Error(ErrorCode::RepairFailed, "completion has zeta " + std::to_string(out.zeta));
  return out;
}

/// Completes a part other than C5 to a cyclically 5-connected cubic graph by
/// adding a path on three vertices.
inline Completion complete(const CyclicPart& h) { return complete_from(h, choose_permutation(h)); }

/// One new vertex v joined to three boundary vertices, the other two joined by an edge.
struct SingleVertexCandidate {
  std::pair<Vertex, Vertex> joined;
  CubicGraph graph;
};

/// All ten single-vertex constructions, by joined pair in lexicographic order.
inline std::vector<SingleVertexCandidate> single_vertex_candidates(const CyclicPart& h) {
  const auto& a = h.boundary_vertices();
  const Vertex v = h.graph().order();
  std::vector<SingleVertexCandidate> out;
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = i + 1; j < 5; ++j) {
      auto pairs = h.graph().edge_pairs();
      pairs.emplace_back(a[i], a[j]);
      for (std::size_t k = 0; k < 5; ++k) {
        if (k != i && k != j) pairs.emplace_back(v, a[k]);
      }
      out.push_back({{a[i], a[j]}, CubicGraph(v + 1, pairs)});
    }
  }
  return out;
}

/// The single-vertex constructions that are cyclically 5-connected.
inline std::vector<CubicGraph> single_vertex_completions(const CyclicPart& h) {
  std::vector<CubicGraph> out;
  for (auto& candidate : single_vertex_candidates(h)) {
    if (zeta(candidate.graph) >= 5) out.push_back(std::move(candidate.graph));
  }
  return out;
}

enum class ObstructionMode {
  /// v1, v2, v3 of the alternating 6-cycle lie outside A.
  Strict,
  /// v1, v2, v3 may be degree-2 vertices too.
  Lax,
};

/// Three boundary vertices with a common neighbour, or lying alternately on a
/// 6-cycle a v1 b v2 c v3. Either one forces a 3- or 4-cycle in every
/// single-vertex completion.
inline bool single_vertex_obstruction(const CyclicPart& h, ObstructionMode mode = ObstructionMode::Strict) {
  const auto& g = h.graph();
  const auto& a = h.boundary_vertices();
  for (Vertex v = 0; v < g.order(); ++v) {
    int hits = 0;
    for (const auto& inc : g.incident(v)) hits += h.is_boundary(inc.neighbour);
    if (hits >= 3) return true;
  }
  auto common = [&](Vertex p, Vertex q) {
    std::vector<Vertex> out;
    for (const auto& inc : g.incident(p)) {
      const Vertex w = inc.neighbour;
      if (w == p || w == q || !g.adjacent(w, q)) continue;
      if (mode == ObstructionMode::Strict && h.is_boundary(w)) continue;
      out.push_back(w);
    }
    return make_vertex_set(out);
  };
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = i + 1; j < 5; ++j) {
      for (std::size_t k = j + 1; k < 5; ++k) {
        const Vertex p = a[i], q = a[j], r = a[k];
        for (Vertex v1 : common(p, q)) {
          for (Vertex v2 : common(q, r)) {
            for (Vertex v3 : common(r, p)) {
              const auto six = make_vertex_set({p, q, r, v1, v2, v3});
              if (six.size() == 6) return true;
            }
          }
        }
      }
    }
  }
  return false;
}

}  // namespace cycfive

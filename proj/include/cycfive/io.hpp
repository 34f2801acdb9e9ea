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

#include <charconv>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "cycfive/error.hpp"
#include "cycfive/graph.hpp"

namespace cycfive {

enum class GraphFormat { Graph6, Adjlist };

struct ParseOptions {
  /// Demand every degree to be exactly 3.
  bool strict_cubic = false;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

inline int parse_int(std::string_view token, std::string_view what) {
  int value = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end || value < 0) {
    throw Error(ErrorCode::MalformedInput, "bad " + std::string(what) + " '" + std::string(token) + "'");
  }
  return value;
}

inline CubicGraph parse_graph6(std::string_view text) {
  std::string_view line;
  int lines = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::string kept;
  while (std::getline(in, raw)) {
    const auto t = trim(raw);
    if (t.empty()) continue;
    if (++lines > 1) throw Error(ErrorCode::MalformedInput, "graph6 input holds more than one graph");
    kept = std::string(t);
  }
  line = kept;
  constexpr std::string_view header = ">>graph6<<";
  if (line.starts_with(header)) line.remove_prefix(header.size());
  if (line.empty()) throw Error(ErrorCode::MalformedInput, "empty graph6 string");
  for (char c : line) {
    if (c < 63 || c > 126) throw Error(ErrorCode::MalformedInput, "graph6 byte out of range 63..126");
  }
  auto byte = [&](std::size_t i) { return static_cast<long long>(line[i] - 63); };

  long long n = 0;
  std::size_t pos = 0;
  if (line[0] != 126) {
    n = byte(0);
    pos = 1;
  } else if (line.size() >= 2 && line[1] != 126) {
    if (line.size() < 4) throw Error(ErrorCode::MalformedInput, "truncated graph6 size field");
    n = (byte(1) << 12) | (byte(2) << 6) | byte(3);
    pos = 4;
  } else {
    if (line.size() < 8) throw Error(ErrorCode::MalformedInput, "truncated graph6 size field");
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | byte(i);
    pos = 8;
  }
  if (n > 1'000'000) throw Error(ErrorCode::MalformedInput, "graph6 vertex count too large");

  const long long bits = n * (n - 1) / 2;
  const long long expected_bytes = (bits + 5) / 6;
  if (static_cast<long long>(line.size() - pos) != expected_bytes) {
    throw Error(ErrorCode::MalformedInput, "graph6 body has wrong length for n = " + std::to_string(n));
  }
  std::vector<std::pair<Vertex, Vertex>> edges;
  long long k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const long long b = byte(pos + static_cast<std::size_t>(k / 6));
      if ((b >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  for (; k < expected_bytes * 6; ++k) {
    if ((byte(pos + static_cast<std::size_t>(k / 6)) >> (5 - k % 6)) & 1) {
      throw Error(ErrorCode::MalformedInput, "nonzero graph6 padding bits");
    }
  }
  return CubicGraph(static_cast<int>(n), edges);
}

// One vertex per line, "v: u1 u2 u3". Every non-loop edge is listed from both
// ends; a self entry is one loop. '#' starts a comment, '/' also ends a line.
inline CubicGraph parse_adjlist(std::string_view text) {
  std::map<Vertex, std::vector<Vertex>> lists;
  std::string normalised(text);
  std::replace(normalised.begin(), normalised.end(), '/', '\n');
  std::istringstream in(normalised);
  std::string raw;
  int max_vertex = -1;
  while (std::getline(in, raw)) {
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto colon = line.find(':');
    if (colon == std::string_view::npos) {
      throw Error(ErrorCode::MalformedInput, "adjlist line without ':' -> '" + std::string(line) + "'");
    }
    const Vertex v = parse_int(trim(line.substr(0, colon)), "vertex label");
    if (lists.contains(v)) throw Error(ErrorCode::MalformedInput, "vertex " + std::to_string(v) + " listed twice");
    auto& nbrs = lists[v];
    max_vertex = std::max(max_vertex, v);
    std::istringstream tokens{std::string(line.substr(colon + 1))};
    std::string token;
    while (tokens >> token) {
      const Vertex u = parse_int(token, "neighbour");
      nbrs.push_back(u);
      max_vertex = std::max(max_vertex, u);
    }
  }
  if (lists.empty()) throw Error(ErrorCode::MalformedInput, "empty adjlist");

  auto count = [&](Vertex owner, Vertex target) {
    auto it = lists.find(owner);
    if (it == lists.end()) return 0L;
    return static_cast<long>(std::count(it->second.begin(), it->second.end(), target));
  };
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (const auto& [v, nbrs] : lists) {
    for (Vertex u : make_vertex_set(nbrs)) {
      const long forward = count(v, u);
      if (u == v) {
        for (long i = 0; i < forward; ++i) edges.emplace_back(v, v);
        continue;
      }
      if (forward != count(u, v)) {
        throw Error(ErrorCode::MalformedInput,
                    "edge " + std::to_string(v) + "-" + std::to_string(u) + " not listed symmetrically");
      }
      if (v < u) {
        for (long i = 0; i < forward; ++i) edges.emplace_back(v, u);
      }
    }
  }
  return CubicGraph(max_vertex + 1, edges);
}

}  // namespace detail

inline CubicGraph parse_graph(std::string_view text, GraphFormat format, ParseOptions options = {}) {
  CubicGraph g = format == GraphFormat::Graph6 ? detail::parse_graph6(text) : detail::parse_adjlist(text);
  if (options.strict_cubic && !g.is_cubic()) {
    for (Vertex v = 0; v < g.order(); ++v) {
      if (g.degree(v) != 3) {
        throw Error(ErrorCode::DegreeViolation,
                    "vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v)) + ", expected 3");
      }
    }
  }
  return g;
}

/// Adjlist when the text contains a ':' outside comments, graph6 otherwise.
inline GraphFormat detect_format(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (line.find(':') != std::string_view::npos) return GraphFormat::Adjlist;
  }
  return GraphFormat::Graph6;
}

inline std::string to_adjlist(const CubicGraph& g) {
  std::vector<std::vector<Vertex>> lists(static_cast<std::size_t>(g.order()));
  for (const Edge& e : g.edges()) {
    lists[e.u].push_back(e.v);
    if (!e.is_loop()) lists[e.v].push_back(e.u);
  }
  std::string out;
  for (Vertex v = 0; v < g.order(); ++v) {
    std::sort(lists[v].begin(), lists[v].end());
    out += std::to_string(v) + ":";
    for (Vertex u : lists[v]) out += " " + std::to_string(u);
    out += "\n";
  }
  return out;
}

/// graph6 encoding without header; simple graphs only.
inline std::string to_graph6(const CubicGraph& g) {
  for (const Edge& e : g.edges()) {
    if (e.is_loop() || e.slot > 0) {
      throw Error(ErrorCode::PreconditionViolated, "graph6 cannot encode loops or parallel edges");
    }
  }
  const long long n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  } else {
    out += "~~";
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  }
  const long long bits = n * (n - 1) / 2;
  std::vector<char> matrix(static_cast<std::size_t>((bits + 5) / 6 * 6), 0);
  for (const Edge& e : g.edges()) {
    const long long k = static_cast<long long>(e.v) * (e.v - 1) / 2 + e.u;
    matrix[static_cast<std::size_t>(k)] = 1;
  }
  for (std::size_t i = 0; i < matrix.size(); i += 6) {
    int value = 0;
    for (std::size_t b = 0; b < 6; ++b) value = (value << 1) | matrix[i + b];
    out.push_back(static_cast<char>(63 + value));
  }
  return out;
}

struct DotStyle {
  std::string name = "G";
  /// Drawn filled red, e.g. the added path x, y, z.
  VertexSet highlighted;
  /// Drawn filled light blue, e.g. the degree-2 vertices of a part.
  VertexSet boundary;
  /// Optional display labels; vertex numbers when empty.
  std::vector<std::string> labels;
};

inline std::string to_dot(const CubicGraph& g, const DotStyle& style = {}) {
  std::ostringstream out;
  out << "graph " << style.name << " {\n";
  out << "  node [shape=circle];\n";
  for (Vertex v = 0; v < g.order(); ++v) {
    out << "  " << v;
    std::vector<std::string> attrs;
    if (static_cast<std::size_t>(v) < style.labels.size()) attrs.push_back("label=\"" + style.labels[v] + "\"");
    if (contains(style.highlighted, v)) {
      attrs.emplace_back("style=filled");
      attrs.emplace_back("fillcolor=\"#e06666\"");
    } else if (contains(style.boundary, v)) {
      attrs.emplace_back("style=filled");
      attrs.emplace_back("fillcolor=\"#9fc5e8\"");
    }
    if (!attrs.empty()) {
      out << " [";
      for (std::size_t i = 0; i < attrs.size(); ++i) out << (i ? ", " : "") << attrs[i];
      out << "]";
    }
    out << ";\n";
  }
  for (const Edge& e : g.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace cycfive

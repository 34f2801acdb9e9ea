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


// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "cycfive/completion.hpp"
#include "cycfive/io.hpp"
#include "cycfive/oracle.hpp"
#include "cycfive/sampling.hpp"
#include "test_support.hpp"

namespace {

using namespace cycfive;
using testing::corpus_path;
using testing::load;

struct Verdict {
  bool pass = true;
  std::string detail;
};

// Collects failures; keeps the first few messages.
class Tally {
 public:
  void expect(bool ok, const std::string& what) {
    if (ok) return;
    ++failures_;
    if (failures_ <= 3) notes_ << (failures_ > 1 ? "; " : "") << what;
  }
  Verdict verdict(const std::string& summary) const {
    if (failures_ == 0) return {true, summary};
    return {false, std::to_string(failures_) + " failures: " + notes_.str()};
  }

 private:
  int failures_ = 0;
  std::ostringstream notes_;
};

Verdict small_graphs() {
  Tally t;
  for (const auto& [name, want] : {std::pair{"k4.adj", 3}, {"k33.adj", 4}}) {
    const auto r = min_cycle_separating_cut(load(name));
    t.expect(r.zeta == want, std::string(name) + " zeta " + std::to_string(r.zeta));
    t.expect(!r.witness, std::string(name) + " has a witness");
  }
  return t.verdict("zeta(K4) = 3, zeta(K33) = 4, no witnesses");
}

Verdict petersen() {
  Tally t;
  const auto g = testing::petersen();
  const auto r = min_cycle_separating_cut(g);
  t.expect(r.zeta == 5, "zeta " + std::to_string(r.zeta));
  t.expect(r.girth == 5, "girth " + std::to_string(r.girth));
  t.expect(r.witness && r.witness->size() == 5 && is_independent(g, *r.witness), "witness not 5 independent edges");
  t.expect(oracle::zeta_oracle(g) == r.zeta, "oracle disagrees");
  return t.verdict("zeta 5, girth 5, independent 5-edge witness, oracle agrees");
}

Verdict roundtrip() {
  Tally t;
  int count = 0;
  for (const auto& name : {"petersen.adj", "dodecahedron.adj"}) {
    const auto g = load(name);
    for (const auto& [x, y, z] : testing::two_paths(g)) {
      ++count;
      const std::string tag = std::string(name) + " " + std::to_string(x) + "-" + std::to_string(y) + "-" +
                              std::to_string(z);
      try {
        const auto h = remove_path2(g, x, y, z);
        const auto c = complete(h);
        const int z_oracle = oracle::zeta_oracle(c.extension.graph);
        t.expect(z_oracle == 5 && c.zeta == 5, tag + " zeta " + std::to_string(z_oracle));
        t.expect(oracle::detail::shortest_cycle(c.extension.graph) == 5 && c.girth == 5, tag + " girth");
      } catch (const Error& e) {
        t.expect(false, tag + " " + e.what());
      }
    }
  }
  t.expect(count == 90, "expected 90 paths, saw " + std::to_string(count));
  return t.verdict(std::to_string(count) + " paths removed and completed");
}

Verdict girth_equivalence(const std::vector<CyclicPart>& parts) {
  Tally t;
  long checked = 0;
  for (const auto& h : parts) {
    Permutation p = h.boundary_vertices();
    do {
      const bool predicted = girth_condition(h, p);
      const bool actual = oracle::detail::shortest_cycle(extend(h, p).graph) >= 5;
      t.expect(predicted == actual, "disagreement on a part with " + std::to_string(h.graph().order()) + " vertices");
      ++checked;
    } while (std::next_permutation(p.begin(), p.end()));
  }
  return t.verdict(std::to_string(checked) + " orderings over " + std::to_string(parts.size()) + " parts");
}

Verdict four_cut_shape(const std::vector<CyclicPart>& parts) {
  Tally t;
  int low = 0;
  long extensions = 0;
  for (const auto& h : parts) {
    for (const auto& p : oracle::all_girth5_perms(h)) {
      ++extensions;
      const auto e = extend(h, p);
      bool small = false;
      for (int k = 1; k <= 4 && !small; ++k) small = detail::find_independent_cut(e.graph, k).has_value();
      if (!small) continue;
      ++low;
      for (const auto& cut : oracle::all_min_cuts(e.graph)) {
        t.expect(cut.size() == 4, "minimum cut of size " + std::to_string(cut.size()));
        const auto comps = components(e.graph, cut);
        if (comps.size() != 2) {
          t.expect(false, "cut leaves " + std::to_string(comps.size()) + " components");
          continue;
        }
        const auto& first = comps[0];
        const bool x_side = contains(first, e.x);
        auto with_x = [&](Vertex v) { return contains(first, v) == x_side; };
        t.expect(with_x(p[0]) && with_x(p[1]) && !with_x(e.z) && !with_x(p[3]) && !with_x(p[4]),
                 "cut does not separate {x, a1, a2} from {z, a4, a5}");
      }
    }
  }
  return t.verdict(std::to_string(low) + " of " + std::to_string(extensions) +
                   " girth-5 extensions have zeta < 5; all minimum cuts have the expected shape");
}

Verdict five_cycle_exception(const std::vector<CyclicPart>& parts) {
  Tally t;
  int c5 = 0;
  for (const auto& h : parts) {
    const bool cycle = h.is_five_cycle();
    c5 += cycle;
    t.expect(oracle::all_girth5_perms(h).empty() == cycle, "girth-5 orderings do not match the five-cycle test");
    try {
      complete(h);
      t.expect(!cycle, "complete() accepted a five-cycle");
    } catch (const Error& e) {
      t.expect(cycle && e.code() == ErrorCode::IsFiveCycle, std::string("complete(): ") + e.what());
    }
  }
  return t.verdict(std::to_string(c5) + " five-cycle parts among " + std::to_string(parts.size()));
}

Verdict acyclic_boundary_law() {
  Tally t;
  std::mt19937 rng(20261016);
  const auto names = testing::cubic_corpus();
  std::vector<CubicGraph> graphs;
  for (const auto& name : names) graphs.push_back(load(name));
  const int samples = 1000;
  for (int i = 0; i < samples; ++i) {
    const auto& g = graphs[static_cast<std::size_t>(i) % graphs.size()];
    const auto m = sample_induced_tree(g, rng, g.order() - 1);
    const auto sub = induced(g, m).graph;
    t.expect(is_connected(sub) && sub.size() + 1 == sub.order(), "sample is not an induced tree");
    t.expect(boundary(g, m).size() == m.size() + 2, "boundary is not |V(M)| + 2");
  }
  return t.verdict(std::to_string(samples) + " induced trees over " + std::to_string(graphs.size()) + " graphs");
}

Verdict single_vertex_probe(const std::vector<CyclicPart>& parts) {
  Tally t;
  int obstructed = 0, small = 0, feasible = 0;
  for (const auto& h : parts) {
    const bool blocked = single_vertex_obstruction(h);
    const auto found = single_vertex_completions(h);
    obstructed += blocked;
    small += h.graph().order() < 9;
    feasible += !found.empty();
    if (blocked) t.expect(found.empty(), "obstructed part has a single-vertex completion");
    if (h.graph().order() < 9) t.expect(found.empty(), "part with fewer than 9 vertices has a completion");
  }
  return t.verdict(std::to_string(obstructed) + " obstructed, " + std::to_string(small) + " small, " +
                   std::to_string(feasible) + " with a completion; no counterexample");
}

std::pair<int, std::string> run_cli(const std::string& args) {
  const std::string command = std::string(CYCFIVE_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  char buffer[4096];
  while (const auto n = std::fread(buffer, 1, sizeof buffer, pipe)) out.append(buffer, n);
  return {pclose(pipe), out};
}

Verdict determinism() {
  Tally t;
  std::vector<std::string> invocations;
  for (const auto& name : testing::cubic_corpus()) {
    const auto path = corpus_path(name);
    invocations.push_back("analyze " + path);
    invocations.push_back("verify " + path);
    invocations.push_back("oracle " + path + " --check zeta");
    invocations.push_back("oracle " + path + " --check cuts");
    invocations.push_back("decompose " + path);
    invocations.push_back("complete " + path + " --side 0");
    invocations.push_back("complete " + path + " --side 1 --emit dot");
  }
  for (const char* g6 : {"k4.g6", "petersen.g6", "dodecahedron.g6"}) invocations.push_back("analyze " + corpus_path(g6));
  for (const char* part : {"c5_part.adj", "petersen_part.adj", "dodecahedron_part.adj"}) {
    invocations.push_back("complete " + corpus_path(part) + " --part");
    invocations.push_back("complete " + corpus_path(part) + " --part --emit graph6");
    invocations.push_back("oracle " + corpus_path(part) + " --check perms");
  }
  for (const auto& args : invocations) {
    const auto first = run_cli(args);
    const auto second = run_cli(args);
    t.expect(first.first >= 0 && !first.second.empty(), "'" + args + "' produced no output");
    t.expect(first == second, "'" + args + "' differs between runs");
  }
  return t.verdict(std::to_string(invocations.size()) + " invocations, byte-identical twice");
}

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;
  std::function<Verdict()> check;
};

}  // namespace

int main() {
  using Clock = std::chrono::steady_clock;
  const auto parts_start = Clock::now();
  const auto parts = testing::corpus_parts();
  const double parts_seconds = std::chrono::duration<double>(Clock::now() - parts_start).count();
  std::cout << "corpus: " << parts.size() << " parts (" << parts_seconds << " s to build)\n";

  const std::vector<Criterion> criteria{
      {1, "small-graph constants", 1.0, small_graphs},
      {2, "Petersen graph", 5.0, petersen},
      {3, "path removal and completion roundtrip", 120.0, roundtrip},
      {4, "girth condition equivalence", 0.0, [&] { return girth_equivalence(parts); }},
      {5, "shape of 4-cuts in girth-5 extensions", 0.0, [&] { return four_cut_shape(parts); }},
      {6, "five-cycle exception", 0.0, [&] { return five_cycle_exception(parts); }},
      {7, "acyclic boundary law", 0.0, acyclic_boundary_law},
      {8, "single-vertex completion probe", 0.0, [&] { return single_vertex_probe(parts); }},
      {9, "CLI determinism", 0.0, determinism},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = Clock::now();
    Verdict v;
    try {
      v = c.check();
    } catch (const std::exception& e) {
      v = {false, std::string("unexpected exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (c.limit_seconds > 0 && seconds >= c.limit_seconds) {
      v.pass = false;
      v.detail += "; took " + std::to_string(seconds) + " s, limit " + std::to_string(c.limit_seconds) + " s";
    }
    failed += !v.pass;
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2f s", seconds);
    std::cout << (v.pass ? "PASS" : "FAIL") << " [" << c.id << "] " << c.name << ": " << v.detail << " (" << timing
              << ")\n"
              << std::flush;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}

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

// Command-line front end. Every command writes one JSON report to `out`;
// failures still produce a report carrying an "error" object.
//
// Exit codes: 0 success, 2 parse error, 3 precondition or check failure,
// 4 five-cycle part, 5 oracle budget exceeded.

#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cycfive/completion.hpp"
#include "cycfive/cyccut.hpp"
#include "cycfive/error.hpp"
#include "cycfive/graph.hpp"
#include "cycfive/io.hpp"
#include "cycfive/oracle.hpp"
#include "cycfive/sampling.hpp"

namespace cycfive::cli {

using Json = nlohmann::ordered_json;

enum ExitCode : int {
  kOk = 0,
  kParseError = 2,
  kPrecondition = 3,
  kFiveCycle = 4,
  kOracleBudget = 5,
};

inline int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedInput:
    case ErrorCode::DegreeViolation:
      return kParseError;
    case ErrorCode::IsFiveCycle:
      return kFiveCycle;
    case ErrorCode::TooLarge:
      return kOracleBudget;
    default:
      return kPrecondition;
  }
}

/// The document every command prints.
struct Report {
  std::string command;
  Json input = Json::object();
  Json results = Json::object();
  std::optional<Json> error;
  std::optional<Json> timings_ms;

  Json to_json() const {
    Json j;
    j["command"] = command;
    j["input"] = input;
    j["results"] = results;
    if (error) j["error"] = *error;
    if (timings_ms) j["timings_ms"] = *timings_ms;
    return j;
  }

  static Report from_json(const Json& j) {
    Report r;
    r.command = j.at("command").get<std::string>();
    r.input = j.at("input");
    r.results = j.at("results");
    if (j.contains("error")) r.error = j.at("error");
    if (j.contains("timings_ms")) r.timings_ms = j.at("timings_ms");
    return r;
  }

  bool operator==(const Report&) const = default;
};

namespace detail {

inline Json vertex_list(const auto& vs) {
  Json arr = Json::array();
  for (Vertex v : vs) arr.push_back(v);
  return arr;
}

inline Json edge_list(const CubicGraph& g, const EdgeCut& cut) {
  Json arr = Json::array();
  for (EdgeId id : cut.edges) arr.push_back(Json::array({g.edge(id).u, g.edge(id).v}));
  return arr;
}

inline Json length_value(int v) { return v == kInfinity ? Json(nullptr) : Json(v); }

inline std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::MalformedInput, "cannot read '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

struct Loaded {
  CubicGraph graph;
  GraphFormat format = GraphFormat::Adjlist;
};

inline Loaded load(const std::string& path, const std::string& format, Report& report) {
  const std::string text = read_input(path);
  Loaded l;
  if (format == "graph6") {
    l.format = GraphFormat::Graph6;
  } else if (format == "adjlist") {
    l.format = GraphFormat::Adjlist;
  } else {
    l.format = detect_format(text);
  }
  report.input["path"] = path;
  report.input["format"] = l.format == GraphFormat::Graph6 ? "graph6" : "adjlist";
  l.graph = parse_graph(text, l.format);
  report.input["vertices"] = l.graph.order();
  report.input["edges"] = l.graph.size();
  return l;
}

// "u-v,u-v,..." with an optional "#slot" suffix for parallel copies.
inline EdgeCut parse_cut(const CubicGraph& g, const std::string& spec) {
  std::vector<EdgeId> ids;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    int u = 0, v = 0, slot = 0;
    char dash = 0, hash = 0;
    std::istringstream one(item);
    if (!(one >> u >> dash >> v) || dash != '-') throw Error(ErrorCode::MalformedInput, "bad cut edge '" + item + "'");
    if (one >> hash) {
      if (hash != '#' || !(one >> slot)) throw Error(ErrorCode::MalformedInput, "bad cut edge '" + item + "'");
    }
    const auto id = g.find_edge(u, v, slot);
    if (!id) throw Error(ErrorCode::PreconditionViolated, "cut edge " + item + " is not an edge of the graph");
    ids.push_back(*id);
  }
  return EdgeCut(std::move(ids));
}

inline std::string emit_graph(const Extension& e, const std::string& format) {
  if (format == "graph6") return to_graph6(e.graph) + "\n";
  if (format == "dot") {
    DotStyle style;
    style.name = "completion";
    style.highlighted = make_vertex_set({e.x, e.y, e.z});
    style.boundary = make_vertex_set({e.perm.begin(), e.perm.end()});
    for (Vertex v = 0; v < e.graph.order(); ++v) style.labels.push_back(std::to_string(v));
    style.labels[e.x] = "x";
    style.labels[e.y] = "y";
    style.labels[e.z] = "z";
    return to_dot(e.graph, style);
  }
  return to_adjlist(e.graph);
}

inline Json part_json(const CyclicPart& h) {
  Json j;
  j["vertices"] = h.graph().order();
  j["boundary"] = vertex_list(h.boundary_vertices());
  j["boundary_edges"] = boundary_edge_count(h);
  j["is_five_cycle"] = h.is_five_cycle();
  if (h.origin()) {
    j["host_map"] = vertex_list(h.origin()->to_host);
    Json host_boundary = Json::array();
    for (Vertex a : h.boundary_vertices()) host_boundary.push_back(h.origin()->to_host[a]);
    j["host_boundary"] = host_boundary;
  }
  j["adjlist"] = to_adjlist(h.graph());
  return j;
}

inline Json decomposition_json(const CutDecomposition& d) {
  Json j;
  j["reversed"] = d.reversed;
  j["perm"] = vertex_list(d.perm);
  j["side1"] = vertex_list(d.side1);
  j["side2"] = vertex_list(d.side2);
  j["b"] = vertex_list(d.b);
  j["c"] = vertex_list(d.c);
  if (const auto* bridged = std::get_if<C2Bridged>(&d.c2_structure)) {
    j["c2"] = {{"structure", "bridged"}, {"apex", bridged->apex}, {"index", bridged->index},
               {"fragment", vertex_list(bridged->fragment)}};
  } else {
    j["c2"] = {{"structure", "two-connected"}};
  }
  return j;
}

class Stopwatch {
 public:
  double lap_ms() {
    const auto now = std::chrono::steady_clock::now();
    const double ms = std::chrono::duration<double, std::milli>(now - last_).count();
    last_ = now;
    return ms;
  }

 private:
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

}  // namespace detail

struct CommonOptions {
  std::string path;
  std::string format = "auto";
  bool timings = false;
};

inline int cmd_analyze(const CommonOptions& opt, Report& report) {
  detail::Stopwatch clock;
  const auto loaded = detail::load(opt.path, opt.format, report);
  const auto& g = loaded.graph;
  auto& r = report.results;
  r["cubic"] = g.is_cubic();
  r["connected"] = is_connected(g);
  r["girth"] = detail::length_value(girth(g));
  r["beta"] = cycle_rank(g);
  const auto search = min_cycle_separating_cut(g);
  r["zeta"] = search.zeta;
  if (search.witness) {
    r["witness"] = detail::edge_list(g, *search.witness);
    r["witness_independent"] = is_independent(g, *search.witness);
    r["fragments"] = Json::array({detail::vertex_list(search.fragments->first),
                                  detail::vertex_list(search.fragments->second)});
  } else {
    r["witness"] = nullptr;
    r["fragments"] = nullptr;
  }
  if (opt.timings) report.timings_ms = Json{{"total", clock.lap_ms()}};
  return kOk;
}

struct CompleteOptions {
  bool part = false;
  int side = -1;
  std::string cut;
  std::string emit = "adjlist";
  std::string out;
};

inline int cmd_complete(const CommonOptions& opt, const CompleteOptions& copt, Report& report) {
  detail::Stopwatch clock;
  auto loaded = detail::load(opt.path, opt.format, report);
  std::optional<CyclicPart> part;
  if (copt.part) {
    report.input["mode"] = "part";
    part = CyclicPart::from_graph(std::move(loaded.graph));
  } else {
    report.input["mode"] = "host";
    if (copt.side != 0 && copt.side != 1) {
      throw Error(ErrorCode::PreconditionViolated, "host input needs --side 0 or --side 1 (or use --part)");
    }
    const auto& g = loaded.graph;
    EdgeCut cut;
    if (!copt.cut.empty()) {
      cut = detail::parse_cut(g, copt.cut);
    } else {
      const auto search = min_cycle_separating_cut(g);
      if (!search.witness) throw Error(ErrorCode::PreconditionViolated, "host has no cycle-separating cut");
      cut = *search.witness;
    }
    report.input["cut"] = detail::edge_list(g, cut);
    report.input["side"] = copt.side;
    const auto comps = components(g, cut);
    if (comps.size() != 2) throw Error(ErrorCode::PreconditionViolated, "cut does not leave exactly two components");
    part = make_part(g, cut, comps[static_cast<std::size_t>(copt.side)]);
  }
  auto& r = report.results;
  r["part"] = detail::part_json(*part);
  const auto done = complete(*part);
  r["initial_perm"] = detail::vertex_list(done.initial_perm);
  r["repaired"] = done.repaired;
  r["repair_branch"] = std::string(to_string(done.branch));
  r["decomposition"] = done.decomposition ? detail::decomposition_json(*done.decomposition) : Json(nullptr);
  const auto& e = done.extension;
  r["final_perm"] = detail::vertex_list(e.perm);
  r["path"] = {{"x", e.x}, {"y", e.y}, {"z", e.z}};
  r["zeta"] = done.zeta;
  r["girth"] = done.girth;
  r["verified"] = done.zeta >= 5 && done.girth >= 5;
  const std::string text = detail::emit_graph(e, copt.emit);
  if (copt.out.empty()) {
    r["graph"] = {{"format", copt.emit}, {"text", text}};
  } else {
    std::ofstream file(copt.out, std::ios::binary);
    if (!file) throw Error(ErrorCode::PreconditionViolated, "cannot write '" + copt.out + "'");
    file << text;
    r["graph"] = {{"format", copt.emit}, {"path", copt.out}};
  }
  if (opt.timings) report.timings_ms = Json{{"total", clock.lap_ms()}};
  return kOk;
}

inline int cmd_decompose(const CommonOptions& opt, const std::string& cut_spec, Report& report) {
  detail::Stopwatch clock;
  const auto loaded = detail::load(opt.path, opt.format, report);
  const auto& g = loaded.graph;
  const auto search = min_cycle_separating_cut(g);
  if (search.zeta != 5 || !search.witness) {
    throw Error(ErrorCode::PreconditionViolated,
                "decomposition needs zeta = 5 with a cycle-separating 5-cut; zeta is " + std::to_string(search.zeta) +
                    (search.witness ? "" : " and no such cut exists"));
  }
  const EdgeCut cut = cut_spec.empty() ? *search.witness : detail::parse_cut(g, cut_spec);
  auto& r = report.results;
  r["zeta"] = search.zeta;
  r["cut"] = detail::edge_list(g, cut);
  Json parts = Json::array();
  for (const auto& side : components(g, cut)) parts.push_back(detail::part_json(make_part(g, cut, side)));
  r["parts"] = parts;
  if (opt.timings) report.timings_ms = Json{{"total", clock.lap_ms()}};
  return kOk;
}

struct VerifyOptions {
  bool assume_zeta5 = false;
  int samples = 200;
  unsigned seed = 1;
};

inline int cmd_verify(const CommonOptions& opt, const VerifyOptions& vopt, Report& report) {
  detail::Stopwatch clock;
  const auto loaded = detail::load(opt.path, opt.format, report);
  const auto& g = loaded.graph;
  Json checks = Json::array();
  bool all_pass = true;
  auto check = [&](const std::string& name, bool pass, const std::string& detail = "") {
    Json row{{"name", name}, {"pass", pass}};
    if (!detail.empty()) row["detail"] = detail;
    checks.push_back(row);
    all_pass = all_pass && pass;
  };
  const bool cubic = g.is_cubic();
  const bool connected = is_connected(g);
  check("cubic", cubic);
  check("connected", connected);
  if (cubic && connected) {
    const auto search = min_cycle_separating_cut(g);
    const int gir = search.girth;
    check("zeta<=girth", search.zeta <= gir, "zeta " + std::to_string(search.zeta) + ", girth " + std::to_string(gir));
    check("zeta<=cycle_rank", search.zeta <= search.cycle_rank);
    if (vopt.assume_zeta5) check("host.zeta=5", search.zeta == 5, "zeta is " + std::to_string(search.zeta));
    if (search.witness) {
      check("witness.independent", is_independent(g, *search.witness));
      const auto& [first, second] = *search.fragments;
      const bool both_connected = components(g, *search.witness).size() == 2;
      check("fragments.connected", both_connected);
      if (search.zeta > 3) {
        check("fragments.two-connected", is_two_connected(induced(g, first).graph) &&
                                             is_two_connected(induced(g, second).graph));
      }
      if (search.zeta == 5) {
        for (const auto& side : {first, second}) {
          const std::string tag = "part[" + std::to_string(side.front()) + "]";
          try {
            const auto h = make_part(g, *search.witness, side);
            check(tag + ".valid", true);
            if (h.is_five_cycle()) {
              check(tag + ".completion", true, "five-cycle part, no completion expected");
            } else {
              const auto done = complete(h);
              check(tag + ".completion", done.zeta == 5 && done.girth == 5,
                    "zeta " + std::to_string(done.zeta) + ", girth " + std::to_string(done.girth));
            }
          } catch (const Error& err) {
            check(tag + ".valid", false, err.what());
          }
        }
      }
    }
    std::mt19937 rng(vopt.seed);
    int failures = 0;
    bool loopless = true;
    for (const Edge& e : g.edges()) loopless = loopless && !e.is_loop();
    if (loopless && g.order() > 2) {
      for (int i = 0; i < vopt.samples; ++i) {
        const auto tree = sample_induced_tree(g, rng, g.order() - 1);
        if (static_cast<int>(tree.size()) >= g.order()) continue;
        if (boundary(g, tree).size() != tree.size() + 2) ++failures;
      }
      check("acyclic-boundary-law", failures == 0,
            std::to_string(vopt.samples) + " samples, " + std::to_string(failures) + " failures");
    }
  }
  report.results["checks"] = checks;
  report.results["all_pass"] = all_pass;
  if (opt.timings) report.timings_ms = Json{{"total", clock.lap_ms()}};
  return all_pass ? kOk : kPrecondition;
}

inline Json perm_set(std::vector<Permutation> perms) {
  std::sort(perms.begin(), perms.end());
  Json arr = Json::array();
  for (const auto& p : perms) arr.push_back(detail::vertex_list(p));
  return arr;
}

inline int cmd_oracle(const CommonOptions& opt, const std::string& what, Report& report) {
  const auto loaded = detail::load(opt.path, opt.format, report);
  const auto& g = loaded.graph;
  report.input["check"] = what;
  std::vector<oracle::OracleReport> rows;
  auto row = [&](std::string subject, const Json& oracle_value, const Json& fast_value, double ms) {
    rows.push_back({std::move(subject), oracle_value.dump(), fast_value.dump(), oracle_value == fast_value, ms});
  };
  detail::Stopwatch clock;
  if (what == "zeta") {
    const int slow = oracle::zeta_oracle(g);
    row("zeta", slow, zeta(g), clock.lap_ms());
  } else if (what == "cuts") {
    const auto all = oracle::all_min_cuts(g);
    const auto search = min_cycle_separating_cut(g);
    const Json slow_size = all.empty() ? Json(nullptr) : Json(all.front().size());
    const Json fast_size = search.witness ? Json(search.witness->size()) : Json(nullptr);
    row("min_cut_size", slow_size, fast_size, clock.lap_ms());
    const bool listed = !search.witness || std::find(all.begin(), all.end(), *search.witness) != all.end();
    row("witness_is_minimum", true, listed, 0.0);
    bool independent = true;
    for (const auto& c : all) independent = independent && is_independent(g, c);
    row("all_minimum_cuts_independent", true, independent, 0.0);
    report.results["min_cut_count"] = all.size();
  } else if (what == "perms") {
    const auto h = CyclicPart::from_graph(g);
    const auto slow = oracle::all_girth5_perms(h);
    std::vector<Permutation> fast;
    Permutation p = h.boundary_vertices();
    do {
      if (girth_condition(h, p)) fast.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    row("girth5_perms", perm_set(slow), perm_set(fast), clock.lap_ms());
    Json chosen = nullptr;
    if (!h.is_five_cycle()) chosen = detail::vertex_list(choose_permutation(h));
    const bool member = chosen.is_null() ? slow.empty()
                                         : std::find(slow.begin(), slow.end(), choose_permutation(h)) != slow.end();
    row("chosen_perm_has_girth5", true, member, 0.0);
  } else {
    throw Error(ErrorCode::PreconditionViolated, "unknown oracle check '" + what + "'");
  }
  Json arr = Json::array();
  bool agree = true;
  for (const auto& rr : rows) {
    Json j{{"subject", rr.subject}, {"oracle", Json::parse(rr.oracle_value)}, {"fast", Json::parse(rr.fast_value)},
           {"agree", rr.agree}};
    if (opt.timings) j["elapsed_ms"] = rr.elapsed_ms;
    arr.push_back(j);
    agree = agree && rr.agree;
  }
  report.results["rows"] = arr;
  report.results["all_agree"] = agree;
  return agree ? kOk : kPrecondition;
}

/// Parses `args` (program name first), runs the command and prints its report.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cyclic connectivity analysis and completion of cubic graphs", "cycfive"};
  app.require_subcommand(1);
  CommonOptions common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("input", common.path, "Graph file, or '-' for stdin")->required();
    sub->add_option("--format", common.format, "Input format")
        ->check(CLI::IsMember({"auto", "graph6", "adjlist"}))
        ->capture_default_str();
    sub->add_flag("--timings", common.timings, "Include wall-clock timings (output no longer reproducible)");
  };

  auto* analyze = app.add_subcommand("analyze", "Girth, cycle rank, cyclic connectivity and a minimum cut");
  add_common(analyze);

  CompleteOptions copt;
  auto* complete_cmd = app.add_subcommand("complete", "Complete a cyclic part by a path on three vertices");
  add_common(complete_cmd);
  auto* part_flag = complete_cmd->add_flag("--part", copt.part, "Input is a cyclic part");
  complete_cmd->add_option("--side", copt.side, "Host mode: which side (0 or 1) of the 5-cut to complete")
      ->excludes(part_flag);
  complete_cmd->add_option("--cut", copt.cut, "Host mode: the 5-cut as 'u-v,u-v,...' (default: minimum cut found)")
      ->excludes(part_flag);
  complete_cmd->add_option("--emit", copt.emit, "Completed graph format")
      ->check(CLI::IsMember({"adjlist", "graph6", "dot"}))
      ->capture_default_str();
  complete_cmd->add_option("--out", copt.out, "Write the completed graph here instead of into the report");

  std::string decompose_cut;
  auto* decompose = app.add_subcommand("decompose", "Split a cyclically 5-connected graph along a 5-cut");
  add_common(decompose);
  decompose->add_option("--cut", decompose_cut, "The 5-cut as 'u-v,u-v,...' (default: minimum cut found)");

  VerifyOptions vopt;
  auto* verify = app.add_subcommand("verify", "Run the structural invariant battery");
  add_common(verify);
  verify->add_flag("--assume-zeta5", vopt.assume_zeta5, "Also require the input to be cyclically 5-connected with zeta = 5");
  verify->add_option("--samples", vopt.samples, "Random induced trees for the boundary law")->capture_default_str();
  verify->add_option("--seed", vopt.seed, "Sampling seed")->capture_default_str();

  std::string check = "zeta";
  auto* oracle_cmd = app.add_subcommand("oracle", "Compare fast results with brute-force oracles");
  add_common(oracle_cmd);
  oracle_cmd->add_option("--check", check, "What to compare")
      ->check(CLI::IsMember({"zeta", "perms", "cuts"}))
      ->capture_default_str();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParseError;
  }

  Report report;
  int code = kOk;
  try {
    if (*analyze) {
      report.command = "analyze";
      code = cmd_analyze(common, report);
    } else if (*complete_cmd) {
      report.command = "complete";
      code = cmd_complete(common, copt, report);
    } else if (*decompose) {
      report.command = "decompose";
      code = cmd_decompose(common, decompose_cut, report);
    } else if (*verify) {
      report.command = "verify";
      code = cmd_verify(common, vopt, report);
    } else {
      report.command = "oracle";
      code = cmd_oracle(common, check, report);
    }
  } catch (const Error& e) {
    code = exit_code_for(e.code());
    std::string message = e.what();
    if (e.code() == ErrorCode::IsFiveCycle) message = "five-cycle part: " + message;
    report.error = Json{{"code", std::string(to_string(e.code()))}, {"message", message}};
    err << "cycfive: " << message << "\n";
  }
  out << report.to_json().dump(2) << "\n";
  return code;
}

}  // namespace cycfive::cli

#pragma once

// Command surface for the `lcst` tool. run() never exits the process; it
// writes to the given streams and returns the exit code.
//
//   0  tree found, order accepted, verification passed
//   1  algorithmic NO or failed verification
//   2  usage or input error

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "lcst/circular_arc.hpp"
#include "lcst/elimination.hpp"
#include "lcst/generators.hpp"
#include "lcst/graph.hpp"
#include "lcst/io.hpp"
#include "lcst/oracle.hpp"

namespace lcst {

enum class RunStatus { Tree, Yes, No, Error };

inline std::string_view to_string(RunStatus s) {
  switch (s) {
    case RunStatus::Tree: return "tree";
    case RunStatus::Yes: return "yes";
    case RunStatus::No: return "no";
    case RunStatus::Error: return "error";
  }
  return "error";
}

struct RunReason {
  std::string code;
  std::vector<Vertex> witness;  // 0-based
};

/// status == Tree iff edges is set; status == No iff reason is set.
struct RunResult {
  std::string command;
  RunStatus status = RunStatus::Error;
  std::optional<std::vector<Edge>> edges;
  std::optional<RunReason> reason;
  std::string message;
  std::int64_t elapsed_ns = 0;

  int exit_code() const {
    switch (status) {
      case RunStatus::Tree:
      case RunStatus::Yes: return 0;
      case RunStatus::No: return 1;
      case RunStatus::Error: return 2;
    }
    return 2;
  }
};

/// Keys are always present; absent parts are null. Ids are 1-based.
inline nlohmann::json to_json(const RunResult& r) {
  nlohmann::json j;
  j["command"] = r.command;
  j["status"] = to_string(r.status);
  j["edges"] = nullptr;
  if (r.edges) {
    j["edges"] = nlohmann::json::array();
    for (const Edge& e : *r.edges) j["edges"].push_back({e.u + 1, e.v + 1});
  }
  j["reason"] = nullptr;
  if (r.reason) {
    nlohmann::json w = nlohmann::json::array();
    for (Vertex v : r.reason->witness) w.push_back(v + 1);
    j["reason"] = {{"code", r.reason->code}, {"witness", w}};
  }
  j["message"] = r.message.empty() ? nlohmann::json(nullptr) : nlohmann::json(r.message);
  j["elapsed_ns"] = r.elapsed_ns;
  return j;
}

inline RunResult from_outcome(std::string command, const TreeOutcome& outcome) {
  RunResult r;
  r.command = std::move(command);
  if (outcome.is_tree()) {
    r.status = RunStatus::Tree;
    r.edges = outcome.tree().edges;
  } else {
    r.status = RunStatus::No;
    r.reason = RunReason{std::string(to_string(outcome.refusal().reason)), outcome.refusal().witness};
  }
  return r;
}

inline std::string human_readable(const RunResult& r) {
  std::ostringstream out;
  switch (r.status) {
    case RunStatus::Tree:
      for (const Edge& e : *r.edges) out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
      out << "s tree\n";
      break;
    case RunStatus::Yes:
      if (!r.message.empty()) out << "c " << r.message << '\n';
      out << "s yes\n";
      break;
    case RunStatus::No:
      out << "c NO: " << r.reason->code;
      if (!r.reason->witness.empty()) out << " witness";
      for (Vertex v : r.reason->witness) out << " v" << v + 1;
      out << '\n';
      if (!r.message.empty()) out << "c " << r.message << '\n';
      out << "s no " << r.reason->code << '\n';
      break;
    case RunStatus::Error: out << "error: " << r.message << '\n'; break;
  }
  return out.str();
}

// ---------------------------------------------------------------- bench

enum class BenchClass { StronglyChordal, ProperArc };

struct BenchRow {
  std::size_t n = 0;
  std::size_t m = 0;
  std::int64_t nanoseconds = 0;  // median
};

namespace detail {

/// Keeps the optimizer from discarding a result.
inline void sink(const TreeOutcome& outcome) {
  static volatile std::size_t guard = 0;
  guard = guard + (outcome.is_tree() ? outcome.tree().edges.size() : outcome.refusal().witness.size());
}

struct BenchInstance {
  Graph graph;            // strongly chordal class
  VertexOrder order;
  CircularArcModel model; // proper-arc class
};

}  // namespace detail

/// Proper-arc bench instances cover 2..6 following heads, so every density
/// is at least 3 and degrees stay bounded.
inline constexpr std::size_t kBenchArcMinCover = 2;
inline constexpr std::size_t kBenchArcMaxCover = 6;
inline constexpr std::size_t kBenchAnchorWindow = 1024;

/// Times the algorithm alone: instance generation, graph building and
/// validation happen before any clock starts. Sizes are interleaved: one
/// warm-up pass over all sizes, then `runs` rounds of one timed run per
/// size, so slow phases of the machine hit every size alike. Each row
/// reports the median over its rounds.
///
/// By default instances keep construction order as ids, so timings track
/// operation counts rather than cache misses; `shuffle` relabels randomly.
inline std::vector<BenchRow> bench_sweep(BenchClass cls, const std::vector<std::size_t>& sizes, std::uint64_t seed,
                                         std::size_t runs = 5, bool shuffle = false) {
  std::vector<detail::BenchInstance> inst;
  std::vector<BenchRow> rows;
  for (std::size_t n : sizes) {
    detail::BenchInstance b;
    if (cls == BenchClass::StronglyChordal) {
      auto sc = gen_strongly_chordal_by_extension({n, seed, 0.5, shuffle}, shuffle ? 0 : kBenchAnchorWindow);
      b.graph = std::move(sc.graph);
      b.order = std::move(sc.peo);
    } else {
      const double density = n > 1 ? static_cast<double>(kBenchArcMaxCover) / static_cast<double>(n - 1) : 0.0;
      b.model = gen_proper_circular_arc_model({n, seed, density, shuffle}, kBenchArcMinCover);
      b.graph = intersection_graph(b.model).graph;
    }
    rows.push_back({n, b.graph.edge_count(), 0});
    inst.push_back(std::move(b));
  }
  auto run_once = [&](std::size_t i) {
    const auto start = std::chrono::steady_clock::now();
    if (cls == BenchClass::StronglyChordal)
      detail::sink(lcst_strongly_chordal(inst[i].graph, inst[i].order));
    else
      detail::sink(lcst_proper_circular_arc(inst[i].model));
    const auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count();
  };
  for (std::size_t i = 0; i < inst.size(); ++i) run_once(i);
  std::vector<std::vector<std::int64_t>> samples(inst.size());
  for (std::size_t r = 0; r < runs; ++r)
    for (std::size_t i = 0; i < inst.size(); ++i) samples[i].push_back(run_once(i));
  for (std::size_t i = 0; i < inst.size(); ++i) {
    auto& s = samples[i];
    std::nth_element(s.begin(), s.begin() + s.size() / 2, s.end());
    rows[i].nanoseconds = s[s.size() / 2];
  }
  return rows;
}

/// Fraction of gen_strongly_chordal draws accepted, over `samples` seeds.
inline double strongly_chordal_acceptance_rate(std::size_t n, std::size_t samples, std::uint64_t seed) {
  std::size_t drawn = 0, accepted = 0;
  for (std::size_t s = 0; s < samples; ++s) {
    const auto inst = gen_strongly_chordal({n, seed + s, 0.5});
    drawn += inst ? inst->attempts : 64;
    accepted += inst ? 1 : 0;
  }
  return drawn ? static_cast<double>(accepted) / static_cast<double>(drawn) : 0.0;
}

// ---------------------------------------------------------------- run

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw InputError("cannot write " + path);
}

inline std::vector<std::size_t> parse_sizes(const std::string& list) {
  std::vector<std::size_t> sizes;
  std::stringstream in(list);
  for (std::string item; std::getline(in, item, ',');) {
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || item.empty() || v < 3) throw InputError("bad size '" + item + "' (need integers >= 3)");
    sizes.push_back(static_cast<std::size_t>(v));
  }
  if (sizes.empty()) throw InputError("--sizes is empty");
  return sizes;
}

inline std::size_t oracle_bound_from_env() {
  const char* raw = std::getenv("LCST_ORACLE_BOUND");
  if (!raw || !*raw) return kDefaultOracleBound;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(raw, &end, 10);
  if (*end != '\0' || v == 0) throw InputError("LCST_ORACLE_BOUND must be a positive integer");
  return static_cast<std::size_t>(v);
}

/// Times `body`, then re-checks any tree it produced unless told not to.
template <class F>
RunResult timed_find(const std::string& command, const Graph& g, bool verify, F&& body) {
  const auto start = std::chrono::steady_clock::now();
  const TreeOutcome outcome = body();
  const auto stop = std::chrono::steady_clock::now();
  RunResult r = from_outcome(command, outcome);
  r.elapsed_ns = std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count();
  if (verify && outcome.is_tree()) {
    const auto report = verify_lcst(g, outcome.tree());
    if (!report.ok) throw std::logic_error("produced tree failed verification: " + report.reason);
  }
  return r;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Locally connected spanning trees of strongly chordal and proper circular-arc graphs", "lcst"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  app.add_flag("--json", json, "Print the result as JSON");

  std::string graph_path, order_path, arc_path, tree_path, out_prefix, sizes = "100000,200000,400000,800000";
  bool validate = false, no_verify = false, perfect = false, shuffle = false;
  std::optional<std::size_t> bound;
  std::string gen_class, bench_class;
  std::size_t gen_n = 0, runs = 5;
  std::uint64_t seed = 1;
  double density = 0.5;

  auto* check = app.add_subcommand("check-order", "Check whether an order is a strong (or perfect) elimination order");
  check->add_option("-g,--graph", graph_path, ".gr file")->required();
  check->add_option("-o,--order", order_path, ".ord file")->required();
  check->add_flag("--perfect", perfect, "Check for a perfect elimination order instead");

  auto* find = app.add_subcommand("find", "Strongly chordal graph with a strong elimination order");
  find->add_option("-g,--graph", graph_path, ".gr file")->required();
  find->add_option("-o,--order", order_path, ".ord file")->required();
  find->add_flag("--validate", validate, "Reject orders that are not strong elimination orders");
  find->add_flag("--no-verify", no_verify, "Skip re-checking the produced tree");

  auto* find_arc = app.add_subcommand("find-arc", "Proper circular-arc model");
  find_arc->add_option("-a,--arcs", arc_path, ".arc file")->required();
  find_arc->add_flag("--no-verify", no_verify, "Skip re-checking the produced tree");

  auto* verify = app.add_subcommand("verify", "Check a tree file against a graph");
  verify->add_option("-g,--graph", graph_path, ".gr file")->required();
  verify->add_option("-t,--tree", tree_path, "tree output file")->required();

  auto* oracle = app.add_subcommand("oracle", "Exhaustive search on a small graph");
  oracle->add_option("-g,--graph", graph_path, ".gr file")->required();
  oracle->add_option("--bound", bound, "Largest n searched (default: LCST_ORACLE_BOUND or 10)");

  auto* gen = app.add_subcommand("gen", "Generate an instance");
  gen->add_option("--class", gen_class, "interval | strongly-chordal | strongly-chordal-large | proper-arc")
      ->required()
      ->check(CLI::IsMember({"interval", "strongly-chordal", "strongly-chordal-large", "proper-arc"}));
  gen->add_option("-n", gen_n, "Vertex count")->required()->check(CLI::Range(std::size_t{1}, std::size_t{100'000'000}));
  gen->add_option("--seed", seed, "Seed");
  gen->add_option("--density", density, "Density knob in [0, 1]")->check(CLI::Range(0.0, 1.0));
  gen->add_option("--out", out_prefix, "Writes <out>.gr plus <out>.ord and/or <out>.arc")->required();

  auto* bench = app.add_subcommand("bench", "Time the linear algorithms; prints CSV n,m,nanoseconds");
  bench->add_option("--class", bench_class, "strongly-chordal | proper-arc")
      ->required()
      ->check(CLI::IsMember({"strongly-chordal", "proper-arc"}));
  bench->add_option("--sizes", sizes, "Comma-separated vertex counts");
  bench->add_option("--seed", seed, "Seed");
  bench->add_flag("--shuffle", shuffle, "Random vertex ids and unrestricted anchors");
  bench->add_option("--runs", runs, "Timed runs per size")->check(CLI::Range(std::size_t{1}, std::size_t{1000}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << '\n' << "run with --help for usage\n";
    return 2;
  }

  RunResult result;
  result.command = app.get_subcommands().front()->get_name();
  try {
    if (*check) {
      const Graph g = parse_graph_file(detail::read_file(graph_path));
      const VertexOrder ord = parse_order_file(detail::read_file(order_path), g.vertex_count());
      const bool ok = perfect ? is_perfect_elimination_order(g, ord) : is_strong_elimination_order(g, ord);
      result.status = ok ? RunStatus::Yes : RunStatus::No;
      if (!ok) result.reason = RunReason{perfect ? "NotPerfectEliminationOrder" : "NotStrongEliminationOrder", {}};
    } else if (*find) {
      const Graph g = parse_graph_file(detail::read_file(graph_path));
      const VertexOrder ord = parse_order_file(detail::read_file(order_path), g.vertex_count());
      const OrderCheck mode = validate ? OrderCheck::Validate : OrderCheck::Trust;
      result = detail::timed_find("find", g, !no_verify, [&] { return lcst_strongly_chordal(g, ord, mode); });
    } else if (*find_arc) {
      const CircularArcModel model = parse_arc_model_file(detail::read_file(arc_path));
      detail::require_valid_proper(model);
      const Graph g = no_verify ? Graph{} : intersection_graph(model).graph;
      result = detail::timed_find("find-arc", g, !no_verify, [&] { return lcst_proper_circular_arc(model); });
    } else if (*verify) {
      const Graph g = parse_graph_file(detail::read_file(graph_path));
      const SpanningTree t = parse_tree_file(detail::read_file(tree_path), g.vertex_count());
      const auto report = verify_lcst(g, t);
      result.status = report.ok ? RunStatus::Yes : RunStatus::No;
      if (!report.ok) {
        std::vector<Vertex> witness;
        if (report.vertex) witness.push_back(*report.vertex);
        if (report.edge) witness.insert(witness.end(), {report.edge->u, report.edge->v});
        result.reason = RunReason{"NotLocallyConnectedSpanningTree", witness};
        result.message = report.reason;
      }
    } else if (*oracle) {
      const Graph g = parse_graph_file(detail::read_file(graph_path));
      const std::size_t b = bound ? *bound : detail::oracle_bound_from_env();
      const auto start = std::chrono::steady_clock::now();
      result = from_outcome("oracle", lcst_bruteforce(g, b));
      result.elapsed_ns = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start).count();
    } else if (*gen) {
      const GenConfig cfg{gen_n, seed, density};
      if (gen_class == "interval") {
        const auto inst = gen_interval_graph(cfg);
        detail::write_file(out_prefix + ".gr", write_graph_file(inst.graph));
        detail::write_file(out_prefix + ".ord", write_order_file(inst.order));
        detail::write_file(out_prefix + ".arc", write_arc_model_file(inst.model));
      } else if (gen_class == "strongly-chordal") {
        const auto inst = gen_strongly_chordal(cfg);
        if (!inst) throw InputError("no strongly chordal graph accepted for this seed; try another seed");
        detail::write_file(out_prefix + ".gr", write_graph_file(inst->graph));
        detail::write_file(out_prefix + ".ord", write_order_file(inst->order));
        result.message = "accepted after " + std::to_string(inst->attempts) + " draws";
      } else if (gen_class == "strongly-chordal-large") {
        const auto inst = gen_strongly_chordal_by_extension(cfg);
        detail::write_file(out_prefix + ".gr", write_graph_file(inst.graph));
        detail::write_file(out_prefix + ".ord", write_order_file(inst.peo));
      } else {
        const auto model = gen_proper_circular_arc_model(cfg);
        detail::write_file(out_prefix + ".gr", write_graph_file(intersection_graph(model).graph));
        detail::write_file(out_prefix + ".arc", write_arc_model_file(model));
      }
      result.status = RunStatus::Yes;
      if (result.message.empty()) result.message = "wrote " + out_prefix + ".*";
    } else if (*bench) {
      const auto cls = bench_class == "proper-arc" ? BenchClass::ProperArc : BenchClass::StronglyChordal;
      const auto list = detail::parse_sizes(sizes);
      out << "# class " << bench_class << ", median of " << runs << " rounds after 1 warm-up, "
          << (shuffle ? "random ids" : "construction-order ids") << '\n';
      if (cls == BenchClass::StronglyChordal)
        out << "# gen_strongly_chordal acceptance rate at n=30: " << strongly_chordal_acceptance_rate(30, 20, seed)
            << " (timed instances use the extension generator, which never rejects)\n";
      out << "n,m,nanoseconds\n";
      for (const BenchRow& row : bench_sweep(cls, list, seed, runs, shuffle))
        out << row.n << ',' << row.m << ',' << row.nanoseconds << '\n';
      return 0;
    }
  } catch (const InputError& e) {
    result.status = RunStatus::Error;
    result.edges.reset();
    result.reason.reset();
    result.message = e.what();
  } catch (const std::exception& e) {
    result.status = RunStatus::Error;
    result.edges.reset();
    result.reason.reset();
    result.message = std::string("internal error: ") + e.what();
  }

  if (json) {
    out << to_json(result).dump() << '\n';
  } else if (result.status == RunStatus::Error) {
    err << human_readable(result);
  } else {
    out << human_readable(result);
  }
  return result.exit_code();
}

}  // namespace lcst

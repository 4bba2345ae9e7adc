// backbone: compute, verify and benchmark 3-connected m-fold dominating
// sets. Exit codes: 0 success, 1 internal assertion failure, 2 invalid
// input, 3 verification failed / no set found.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "backbone/instances.hpp"
#include "backbone/oracle.hpp"
#include "backbone/solver.hpp"

namespace {

using namespace backbone;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw input_error("cannot write file: " + path);
  out << content;
}

std::string ids_line(const NodeSet& s) {
  std::string line;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) line += ' ';
    line += std::to_string(s.ids()[i]);
  }
  return line;
}

std::string json_id_array(const NodeSet& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s.ids()[i]);
  }
  return out + "]";
}

std::string fixed6(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", x);
  return buf;
}

// BACKBONE_ORACLE_CAP may lower (never raise) the oracle node cap.
int effective_oracle_cap() {
  int cap = kOracleNodeCap;
  if (const char* env = std::getenv("BACKBONE_ORACLE_CAP")) {
    try {
      cap = std::min(cap, std::stoi(env));
    } catch (const std::exception&) {
      throw input_error("BACKBONE_ORACLE_CAP is not an integer");
    }
  }
  return cap;
}

// --- solve ------------------------------------------------------------------

struct SolveArgs {
  std::string input;
  int m = 0;
  std::string seed_builder = "greedy-stages";
  std::string trace_path;
  bool json = false;
};

int cmd_solve(const SolveArgs& args) {
  ParsedInstance inst = parse_instance(read_file(args.input));
  const Graph& g = inst.graph;
  BaseCdsResult seed = build_seed(g, args.m, args.seed_builder);
  SolveResult res = solve_3m_cds(g, args.m, seed);
  if (!verify_kmcds(g, res.cds, 3, args.m).is_valid) {
    throw internal_error("self-check failed: output is not a (3,m)-CDS");
  }
  if (!args.trace_path.empty()) write_file(args.trace_path, trace_to_jsonl(res.trace));
  if (args.json) {
    std::cout << "{\"nodes\":" << json_id_array(res.cds) << ",\"n\":" << g.node_count()
              << ",\"edges\":" << g.edge_count() << ",\"m\":" << args.m
              << ",\"seed_builder\":\"" << seed.method_name << "\""
              << ",\"c0_size\":" << res.trace.c0_size << ",\"f0\":" << res.trace.f0
              << ",\"iterations\":" << res.trace.iterations.size()
              << ",\"final_size\":" << res.trace.final_size << "}\n";
  } else {
    std::cout << ids_line(res.cds) << "\n";
    std::cout << "n=" << g.node_count() << " edges=" << g.edge_count() << " m=" << args.m
              << " seed-builder=" << seed.method_name << " c0_size=" << res.trace.c0_size
              << " f0=" << res.trace.f0 << " iterations=" << res.trace.iterations.size()
              << " final_size=" << res.trace.final_size << "\n";
  }
  return 0;
}

// --- verify -----------------------------------------------------------------

struct VerifyArgs {
  std::string input;
  std::string set_path;
  int k = 0;
  int m = 0;
};

NodeSet parse_set_file(const std::string& text) {
  NodeSet s;
  int line_no = 0;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    auto tokens = detail::split_ws(line);
    if (tokens.empty() || tokens[0][0] == '#') continue;
    if (tokens.size() != 1) {
      throw input_error("line " + std::to_string(line_no) + ": expected one node id per line");
    }
    s.insert(static_cast<NodeId>(detail::parse_int(tokens[0], line_no)));
  }
  return s;
}

int cmd_verify(const VerifyArgs& args) {
  ParsedInstance inst = parse_instance(read_file(args.input));
  NodeSet c = parse_set_file(read_file(args.set_path));
  for (NodeId v : c) {
    if (!inst.graph.has_node(v)) {
      throw input_error("set references node " + std::to_string(v) +
                        " which is not in the graph");
    }
  }
  ValidityReport rep = verify_kmcds(inst.graph, c, args.k, args.m);
  std::string failures = "[";
  for (std::size_t i = 0; i < rep.failed_domination.size(); ++i) {
    const auto& f = rep.failed_domination[i];
    if (i) failures += ',';
    failures += "{\"node\":" + std::to_string(f.node) + ",\"have\":" + std::to_string(f.have) +
                ",\"need\":" + std::to_string(f.need) + "}";
  }
  failures += "]";
  std::cout << "{\"is_valid\":" << (rep.is_valid ? "true" : "false")
            << ",\"failed_domination\":" << failures
            << ",\"connectivity_ok\":" << (rep.connectivity_ok ? "true" : "false")
            << ",\"k\":" << rep.k << ",\"m\":" << rep.m << "}\n";
  return rep.is_valid ? 0 : 3;
}

// --- oracle -----------------------------------------------------------------

struct OracleArgs {
  std::string input;
  int k = 0;
  int m = 0;
  int size_cap = -1;
  bool json = false;
};

int cmd_oracle(const OracleArgs& args) {
  ParsedInstance inst = parse_instance(read_file(args.input));
  const Graph& g = inst.graph;
  int cap = effective_oracle_cap();
  if (g.node_count() > cap) {
    throw input_error("graph has " + std::to_string(g.node_count()) +
                      " nodes; oracle cap is " + std::to_string(cap));
  }
  int size_cap = args.size_cap < 0 ? g.node_count() : args.size_cap;
  auto best = brute_min_kmcds(g, args.k, args.m, size_cap);
  if (!best) {
    if (args.json) {
      std::cout << "{\"opt\":null}\n";
    } else {
      std::cout << "none\n";
    }
    std::cerr << "no valid (" << args.k << "," << args.m << ")-CDS within size cap "
              << size_cap << "\n";
    return 3;
  }
  if (args.json) {
    std::cout << "{\"opt\":" << best->size() << ",\"nodes\":" << json_id_array(*best) << "}\n";
  } else {
    std::cout << "opt " << best->size() << "\n" << ids_line(*best) << "\n";
  }
  return 0;
}

// --- gen --------------------------------------------------------------------

struct GenArgs {
  std::string kind;
  int n = 0;
  std::uint64_t seed = 0;
  double side = 1.0;
  double radius = 1.0;
  double p = 0.0;
  bool no_require_3conn = false;
  std::string out;
  bool json = false;
};

int cmd_gen(const GenArgs& args) {
  if (args.kind == "udg") {
    UdgInstance inst = gen_udg(args.n, args.side, args.radius, args.seed, !args.no_require_3conn);
    write_file(args.out, write_udg(inst));
    if (args.json) {
      std::cout << "{\"kind\":\"udg\",\"n\":" << args.n
                << ",\"edges\":" << inst.graph.edge_count() << ",\"attempts\":" << inst.attempts
                << ",\"out\":\"" << args.out << "\"}\n";
    } else {
      std::cout << "wrote udg n=" << args.n << " edges=" << inst.graph.edge_count()
                << " attempts=" << inst.attempts << " -> " << args.out << "\n";
    }
    return 0;
  }
  if (args.kind == "rand3") {
    Graph g = gen_random_3connected(args.n, args.p, args.seed);
    write_file(args.out, write_graph(g));
    if (args.json) {
      std::cout << "{\"kind\":\"rand3\",\"n\":" << args.n << ",\"edges\":" << g.edge_count()
                << ",\"out\":\"" << args.out << "\"}\n";
    } else {
      std::cout << "wrote rand3 n=" << args.n << " edges=" << g.edge_count() << " -> "
                << args.out << "\n";
    }
    return 0;
  }
  throw input_error("unknown instance kind '" + args.kind + "' (expected udg or rand3)");
}

// --- bench ------------------------------------------------------------------

struct BenchArgs {
  std::string suite;
  std::string out_csv;
  std::string trace_out;
  std::string seed_builder = "greedy-stages";
  bool with_oracle = false;
  bool timing = false;
  bool json = false;
};

struct SuiteEntry {
  std::string id;
  Graph graph;
  int m = 0;
};

std::vector<SuiteEntry> load_suite(const std::string& text) {
  std::vector<SuiteEntry> entries;
  int line_no = 0;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    auto tokens = detail::split_ws(line);
    if (tokens.empty() || tokens[0][0] == '#') continue;
    SuiteEntry entry;
    if (tokens[0] == "udg" && tokens.size() == 6) {
      int n = static_cast<int>(detail::parse_int(tokens[1], line_no));
      double side = detail::parse_double(tokens[2], line_no);
      double radius = detail::parse_double(tokens[3], line_no);
      auto seed = static_cast<std::uint64_t>(detail::parse_int(tokens[4], line_no));
      entry.m = static_cast<int>(detail::parse_int(tokens[5], line_no));
      entry.graph = gen_udg(n, side, radius, seed, true).graph;
      entry.id = std::to_string(entries.size() + 1) + "-udg-n" + std::to_string(n) + "-s" +
                 std::to_string(seed) + "-m" + std::to_string(entry.m);
    } else if (tokens[0] == "rand3" && tokens.size() == 5) {
      int n = static_cast<int>(detail::parse_int(tokens[1], line_no));
      double p = detail::parse_double(tokens[2], line_no);
      auto seed = static_cast<std::uint64_t>(detail::parse_int(tokens[3], line_no));
      entry.m = static_cast<int>(detail::parse_int(tokens[4], line_no));
      entry.graph = gen_random_3connected(n, p, seed);
      entry.id = std::to_string(entries.size() + 1) + "-rand3-n" + std::to_string(n) + "-s" +
                 std::to_string(seed) + "-m" + std::to_string(entry.m);
    } else {
      throw input_error("line " + std::to_string(line_no) +
                        ": expected 'udg <n> <side> <radius> <seed> <m>' or "
                        "'rand3 <n> <p> <seed> <m>'");
    }
    entries.push_back(std::move(entry));
  }
  return entries;
}

int cmd_bench(const BenchArgs& args) {
  auto entries = load_suite(read_file(args.suite));
  const int cap = effective_oracle_cap();
  std::string csv =
      "instance_id,n,edges,m,c0_size,final_size,f0,iterations,"
      "opt3,opt2,empirical_alpha,empirical_ratio,gamma_bound,wall_ms\n";
  std::string traces;
  double ratio_sum = 0.0;
  double ratio_max = 0.0;
  int ratio_count = 0;

  for (const SuiteEntry& entry : entries) {
    auto started = std::chrono::steady_clock::now();
    BaseCdsResult seed = build_seed(entry.graph, entry.m, args.seed_builder);
    SolveResult res = solve_3m_cds(entry.graph, entry.m, seed);
    auto elapsed = std::chrono::steady_clock::now() - started;
    long long wall_ms =
        args.timing
            ? std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count()
            : 0;

    RatioReport& report = res.trace.ratio_report;
    if (args.with_oracle && entry.graph.node_count() <= cap) {
      auto opt3 = brute_min_kmcds(entry.graph, 3, entry.m, entry.graph.node_count());
      auto opt2 = brute_min_kmcds(entry.graph, 2, entry.m, entry.graph.node_count());
      if (!opt3 || !opt2) throw internal_error("oracle found no optimum on a solved instance");
      report.opt3 = static_cast<int>(opt3->size());
      report.opt2 = static_cast<int>(opt2->size());
      report.empirical_alpha = static_cast<double>(res.trace.c0_size) / *report.opt2;
      report.empirical_ratio = static_cast<double>(res.trace.final_size) / *report.opt3;
      report.gamma_bound = gamma_bound(*report.empirical_alpha);
      if (res.trace.final_size < *report.opt3 || *report.empirical_ratio < 1.0) {
        throw internal_error("algorithm beat the exhaustive optimum");
      }
      ratio_sum += *report.empirical_ratio;
      ratio_max = std::max(ratio_max, *report.empirical_ratio);
      ++ratio_count;
    }

    csv += entry.id + ',' + std::to_string(entry.graph.node_count()) + ',' +
           std::to_string(entry.graph.edge_count()) + ',' + std::to_string(entry.m) + ',' +
           std::to_string(res.trace.c0_size) + ',' + std::to_string(res.trace.final_size) +
           ',' + std::to_string(res.trace.f0) + ',' +
           std::to_string(res.trace.iterations.size()) + ',' +
           (report.opt3 ? std::to_string(*report.opt3) : "") + ',' +
           (report.opt2 ? std::to_string(*report.opt2) : "") + ',' +
           (report.empirical_alpha ? fixed6(*report.empirical_alpha) : "") + ',' +
           (report.empirical_ratio ? fixed6(*report.empirical_ratio) : "") + ',' +
           (report.gamma_bound ? fixed6(*report.gamma_bound) : "") + ',' +
           std::to_string(wall_ms) + "\n";
    if (!args.trace_out.empty()) traces += trace_to_jsonl(res.trace, entry.id);
  }

  write_file(args.out_csv, csv);
  if (!args.trace_out.empty()) write_file(args.trace_out, traces);
  if (args.json) {
    std::cout << "{\"instances\":" << entries.size() << ",\"max_ratio\":"
              << (ratio_count ? fixed6(ratio_max) : "null") << ",\"mean_ratio\":"
              << (ratio_count ? fixed6(ratio_sum / ratio_count) : "null") << "}\n";
  } else if (ratio_count > 0) {
    std::cout << "instances=" << entries.size() << " max_ratio=" << fixed6(ratio_max)
              << " mean_ratio=" << fixed6(ratio_sum / ratio_count) << "\n";
  } else {
    std::cout << "instances=" << entries.size() << " ratios=n/a\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"3-connected m-fold dominating set toolkit"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  auto* solve = app.add_subcommand("solve", "grow a (2,m)-CDS seed into a (3,m)-CDS");
  solve->add_option("--input", solve_args.input, "graph or UDG point file")->required();
  solve->add_option("--m", solve_args.m, "domination multiplicity (>= 3)")->required();
  solve->add_option("--seed-builder", solve_args.seed_builder, "seed builder name");
  solve->add_option("--trace", solve_args.trace_path, "write a JSONL iteration trace");
  solve->add_flag("--json", solve_args.json, "machine-readable output");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "check a node set against the (k,m)-CDS definition");
  verify->add_option("--input", verify_args.input, "graph or UDG point file")->required();
  verify->add_option("--set", verify_args.set_path, "file with one node id per line")->required();
  verify->add_option("--k", verify_args.k, "connectivity order")->required();
  verify->add_option("--m", verify_args.m, "domination multiplicity")->required();

  OracleArgs oracle_args;
  auto* oracle = app.add_subcommand("oracle", "exhaustive minimum (k,m)-CDS (small graphs)");
  oracle->add_option("--input", oracle_args.input, "graph or UDG point file")->required();
  oracle->add_option("--k", oracle_args.k, "connectivity order")->required();
  oracle->add_option("--m", oracle_args.m, "domination multiplicity")->required();
  oracle->add_option("--size-cap", oracle_args.size_cap, "largest set size to try");
  oracle->add_flag("--json", oracle_args.json, "machine-readable output");

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "generate instances");
  gen->add_option("--kind", gen_args.kind, "udg or rand3")->required();
  gen->add_option("--n", gen_args.n, "number of nodes")->required();
  gen->add_option("--seed", gen_args.seed, "generator seed")->required();
  gen->add_option("--side", gen_args.side, "udg: square region side");
  gen->add_option("--radius", gen_args.radius, "udg: transmission radius");
  gen->add_option("--p", gen_args.p, "rand3: extra edge probability");
  gen->add_flag("--no-require-3conn", gen_args.no_require_3conn,
                "udg: keep the first sample even if not 3-connected");
  gen->add_option("--out", gen_args.out, "output instance file")->required();
  gen->add_flag("--json", gen_args.json, "machine-readable output");

  BenchArgs bench_args;
  auto* bench = app.add_subcommand("bench", "run solve over a suite of instance specs");
  bench->add_option("--suite", bench_args.suite, "suite file")->required();
  bench->add_option("--out", bench_args.out_csv, "output CSV")->required();
  bench->add_option("--trace-out", bench_args.trace_out, "concatenated JSONL traces");
  bench->add_option("--seed-builder", bench_args.seed_builder, "seed builder name");
  bench->add_flag("--with-oracle", bench_args.with_oracle,
                  "compute exact optima where the oracle cap allows");
  bench->add_flag("--timing", bench_args.timing,
                  "record wall-clock times (off by default so outputs are byte-reproducible)");
  bench->add_flag("--json", bench_args.json, "machine-readable summary");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (solve->parsed()) return cmd_solve(solve_args);
    if (verify->parsed()) return cmd_verify(verify_args);
    if (oracle->parsed()) return cmd_oracle(oracle_args);
    if (gen->parsed()) return cmd_gen(gen_args);
    if (bench->parsed()) return cmd_bench(bench_args);
  } catch (const input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const generation_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const internal_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

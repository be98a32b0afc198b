#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "ght/generators.hpp"
#include "ght/graph_io.hpp"
#include "ght/partition_tree.hpp"
#include "ght/structure.hpp"
#include "ght/tree_builders.hpp"
#include "ght/verify.hpp"

namespace {

using nlohmann::json;
using namespace ght;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 2;
constexpr int kExitAbort = 3;
constexpr int kExitInput = 4;

std::uint64_t SeedOrEnv(const CLI::Option* given, std::uint64_t seed) {
  if (given->count() > 0) return seed;
  if (const char* env = std::getenv("GHT_SEED")) return std::strtoull(env, nullptr, 10);
  return seed;
}

json StatsJson(const SingleSourceStats& s) {
  json stages = json::array();
  for (const StageStats& st : s.stages) {
    stages.push_back({{"w", st.w},
                      {"candidates", st.candidates},
                      {"rounds", st.rounds},
                      {"parts", st.parts},
                      {"certified_parts", st.certified_parts},
                      {"large_parts", st.large_parts},
                      {"fallback", st.fallback},
                      {"easy_updates", st.easy_updates},
                      {"righty_isolating_calls", st.righty_isolating_calls},
                      {"lefty_solves", st.lefty_solves},
                      {"alpha_increments", st.alpha_increments},
                      {"direct_solves", st.direct_solves},
                      {"max_b_factor", st.max_b_factor}});
  }
  return {{"phi", s.phi},           {"righty_rounds", s.righty_rounds},
          {"pivot_changes", s.pivot_changes}, {"maxflow_calls", s.maxflow_calls},
          {"stages", stages}};
}

json ReportJson(const BuildReport& r, const Graph& g) {
  // Stage statistics summed over all single-source runs, keyed by w.
  std::map<std::int64_t, json> by_w;
  for (const SingleSourceStats& s : r.runs) {
    for (const StageStats& st : s.stages) {
      json& e = by_w[st.w];
      if (e.is_null()) {
        e = {{"w", st.w}, {"stages", 0}, {"rounds", 0}, {"fallbacks", 0}, {"direct_solves", 0},
             {"righty_isolating_calls", 0}, {"lefty_solves", 0}, {"alpha_increments", 0}};
      }
      e["stages"] = e["stages"].get<int>() + 1;
      e["rounds"] = e["rounds"].get<int>() + st.rounds;
      e["fallbacks"] = e["fallbacks"].get<int>() + (st.fallback ? 1 : 0);
      e["direct_solves"] = e["direct_solves"].get<int>() + st.direct_solves;
      e["righty_isolating_calls"] =
          e["righty_isolating_calls"].get<int>() + st.righty_isolating_calls;
      e["lefty_solves"] = e["lefty_solves"].get<int>() + st.lefty_solves;
      e["alpha_increments"] = e["alpha_increments"].get<int>() + st.alpha_increments;
    }
  }
  json stages = json::array();
  for (auto& [w, e] : by_w) stages.push_back(e);
  return {{"algo", r.algo},
          {"seed", r.seed},
          {"n", g.num_nodes()},
          {"m", g.TotalMultiplicity()},
          {"maxflow_calls", r.maxflow_calls},
          {"wall_ms", r.wall_ms},
          {"depth", r.depth},
          {"single_source_runs", r.single_source_runs},
          {"bad_pivots", r.bad_pivots},
          {"pivot_changes", r.pivot_changes},
          {"reset_estimates", r.reset_estimates},
          {"laminarity_violations", r.laminarity_violations},
          {"stages", r.stages},
          {"fallback_stages", r.fallback_stages},
          {"halving_violations", r.halving_violations},
          {"alpha_increments", r.alpha_increments},
          {"max_alpha_ratio", r.max_alpha_ratio},
          {"improving_cuts", r.improving_cuts},
          {"duplicate_improving_cuts", r.duplicate_improving_cuts},
          {"easy_improving_cuts", r.easy_improving_cuts},
          {"stages_by_w", stages}};
}

struct BuildArgs {
  std::string graph;
  std::string out;
  std::string report;
  std::string algo = "deterministic";
  std::uint64_t seed = 1;
  double phi_exp = 0;
  bool via_subdivision = false;
  bool stage_from_zero = false;
  bool report_runs = false;
};

BuildOptions MakeOptions(const BuildArgs& a) {
  BuildOptions options;
  options.seed = a.seed;
  options.keep_runs = true;
  if (a.phi_exp > 0) options.single_source.phi = std::pow(2.0, -a.phi_exp);
  options.single_source.stage_from_zero = a.stage_from_zero;
  return options;
}

int RunBuild(const BuildArgs& a) {
  const Graph g = ReadGraphFile(a.graph);
  const Algorithm algo = ParseAlgorithm(a.algo);
  const bool needs_simple = algo == Algorithm::kRandomized || algo == Algorithm::kDeterministic;
  if (needs_simple && !a.via_subdivision && !g.IsSimple()) {
    std::cerr << "error: " << a.algo << " requires a simple graph (use --via-subdivision)\n";
    return kExitInput;
  }
  BuildReport report;
  const PartitionTree tree = a.via_subdivision ? BuildViaSubdivision(g, algo, MakeOptions(a), &report)
                                               : BuildTree(g, algo, MakeOptions(a), &report);
  if (a.out.empty()) {
    WriteTree(std::cout, tree);
  } else {
    WriteTreeFile(a.out, tree);
  }
  if (!a.report.empty()) {
    json j = ReportJson(report, g);
    if (a.report_runs) {
      j["runs"] = json::array();
      for (const SingleSourceStats& s : report.runs) j["runs"].push_back(StatsJson(s));
    }
    std::ofstream(a.report) << j.dump(2) << "\n";
  }
  std::cerr << report.algo << ": n=" << g.num_nodes() << " maxflow_calls=" << report.maxflow_calls
            << " wall_ms=" << report.wall_ms << "\n";
  return kExitOk;
}

int RunQuery(const std::string& path, int u, int v) {
  const PartitionTree t = ReadTreeFile(path);
  if (u < 1 || v < 1 || u > t.num_nodes() || v > t.num_nodes() || u == v) {
    std::cerr << "error: query nodes must be distinct and in [1, " << t.num_nodes() << "]\n";
    return kExitInput;
  }
  const TreeQueryResult q = TreeQuery(t, u - 1, v - 1);
  std::cout << "value " << q.value.base << "\nside";
  for (NodeId x : q.side.Members()) std::cout << " " << x + 1;
  std::cout << "\n";
  return kExitOk;
}

int RunVerify(const std::string& graph, const std::string& tree_path, const std::string& mode,
              int pairs, std::uint64_t seed, int limit) {
  const Graph g = ReadGraphFile(graph);
  const PartitionTree t = ReadTreeFile(tree_path);
  if (t.num_nodes() != g.num_nodes()) {
    std::cerr << "error: tree has " << t.num_nodes() << " nodes, graph has " << g.num_nodes()
              << "\n";
    return kExitInput;
  }
  VerifyResult r;
  if (mode == "full") {
    if (g.num_nodes() > limit) {
      std::cerr << "error: n = " << g.num_nodes() << " exceeds the oracle limit " << limit << "\n";
      return kExitInput;
    }
    r = VerifyTreeFull(g, t, limit);
  } else {
    r = VerifyTreeSampled(g, t, pairs, seed);
  }
  for (const PairMismatch& m : r.mismatches) {
    std::cout << "mismatch " << m.u + 1 << " " << m.v + 1 << " flow " << m.flow.base << " tree "
              << m.tree_value.base << " side " << m.side_value.base << "\n";
  }
  std::cout << (r.ok ? "pass" : "fail") << " " << r.pairs_checked << " pairs\n";
  return r.ok ? kExitOk : kExitVerifyFailed;
}

struct BenchArgs {
  std::string family = "er";
  std::vector<int> sizes{128, 256, 512};
  std::vector<std::string> algos{"classic", "gusfield", "randomized", "deterministic"};
  double p = 0;
  double degree = 8;
  std::uint64_t seed = 1;
  int verify_pairs = 0;
  std::string out;
};

Graph BenchGraph(const BenchArgs& a, int n, std::uint64_t seed) {
  if (a.family == "er") {
    const double p = a.p > 0 ? a.p : std::min(1.0, a.degree / std::max(1, n - 1));
    return gen::ErdosRenyi(n, p, seed);
  }
  if (a.family == "cliques") return gen::TwoCliques(n / 2, std::max(1, n / 8));
  throw std::invalid_argument("unknown family: " + a.family);
}

int RunBench(const BenchArgs& a) {
  std::ofstream file;
  if (!a.out.empty()) file.open(a.out);
  std::ostream& out = a.out.empty() ? std::cout : file;
  out << "# family=" << a.family << " seed=" << a.seed << " p=" << a.p << " degree=" << a.degree
      << "\n";
  out << "n,m,algo,maxflow_calls,lefty_increments,wall_ms,depth,verified\n";
  for (int n : a.sizes) {
    const std::uint64_t graph_seed = a.seed * 1000003 + n;
    const Graph g = BenchGraph(a, n, graph_seed);
    for (const std::string& name : a.algos) {
      BuildOptions options;
      options.seed = a.seed;
      BuildReport report;
      std::string verified = "-";
      try {
        const PartitionTree t = BuildTree(g, ParseAlgorithm(name), options, &report);
        if (a.verify_pairs > 0) {
          verified = VerifyTreeSampled(g, t, a.verify_pairs, a.seed).ok ? "yes" : "no";
        }
      } catch (const BuildAbort&) {
        verified = "abort";
      }
      out << n << "," << g.TotalMultiplicity() << "," << name << "," << report.maxflow_calls << ","
          << report.alpha_increments << "," << report.wall_ms << "," << report.depth << ","
          << verified << "\n";
      out.flush();
    }
  }
  return kExitOk;
}

int RunAnalyze(const std::string& graph, const std::string& tree_path, const std::string& algo,
               int pivot, std::vector<std::int64_t> ws, const std::string& out_path) {
  const Graph g = ReadGraphFile(graph);
  const PartitionTree t =
      tree_path.empty() ? BuildTree(g, ParseAlgorithm(algo)) : ReadTreeFile(tree_path);
  if (pivot < 1 || pivot > g.num_nodes()) {
    std::cerr << "error: pivot out of range\n";
    return kExitInput;
  }
  const NodeId p = pivot - 1;
  if (ws.empty()) {
    std::int64_t maxdeg = 1;
    for (NodeId v = 0; v < g.num_nodes(); ++v) maxdeg = std::max(maxdeg, g.Degree(v).base);
    for (std::int64_t w = 1; w <= maxdeg; w *= 2) ws.push_back(w);
  }
  const CutMembershipTree tm = BuildCutMembershipTree(t, p);
  std::vector<std::int64_t> deg(g.num_nodes());
  for (NodeId v = 0; v < g.num_nodes(); ++v) deg[v] = g.Degree(v).base;
  json bags = json::array();
  for (size_t b = 0; b < tm.bags.size(); ++b) {
    const Bag& bag = tm.bags[b];
    std::vector<int> nodes;
    for (NodeId v : bag.nodes) nodes.push_back(v + 1);
    bags.push_back({{"id", b},
                    {"nodes", nodes},
                    {"parent", bag.parent},
                    {"value", b == 0 ? json(nullptr) : json(bag.value.base)},
                    {"size", bag.nodes.size()},
                    {"cut_size", bag.cut.size()}});
  }
  json per_w = json::array();
  for (std::int64_t w : ws) {
    const StructureReport r = AnalyzeStructure(g, t, p, w);
    std::vector<int> easy, non_easy;
    for (size_t b = 1; b < tm.bags.size(); ++b) {
      if (tm.bags[b].value < Weight(w)) continue;
      (IsEasyBag(tm, static_cast<int>(b), w, deg) ? easy : non_easy).push_back(static_cast<int>(b));
    }
    per_w.push_back({{"w", w},
                     {"large_bags", r.large_bags},
                     {"easy_bags", easy},
                     {"non_easy_bags", non_easy},
                     {"non_easy", r.non_easy},
                     {"non_easy_leaves", r.non_easy_leaves},
                     {"bound", 100000.0 * g.num_nodes() / static_cast<double>(w)}});
  }
  const json j = {{"n", g.num_nodes()}, {"pivot", pivot}, {"bags", bags}, {"per_w", per_w}};
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream(out_path) << j.dump(2) << "\n";
  }
  return kExitOk;
}

int RunGenerate(const std::string& family, int n, double p, int max_mult, std::uint64_t seed,
                const std::string& out) {
  Graph g;
  if (family == "er") {
    g = gen::ErdosRenyi(n, p, seed);
  } else if (family == "multi") {
    g = gen::RandomMultigraph(n, p, max_mult, seed);
  } else if (family == "path") {
    g = gen::Path(n);
  } else if (family == "cycle") {
    g = gen::Cycle(n);
  } else if (family == "complete") {
    g = gen::Complete(n);
  } else if (family == "star") {
    g = gen::Star(n - 1);
  } else {
    std::cerr << "error: unknown family " << family << "\n";
    return kExitInput;
  }
  std::ostringstream header;
  header << "c family=" << family << " n=" << n << " p=" << p << " seed=" << seed << "\n";
  if (out.empty()) {
    std::cout << header.str();
    WriteGraph(std::cout, g);
  } else {
    std::ofstream file(out);
    file << header.str();
    WriteGraph(file, g);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gomory-Hu (cut-equivalent) trees of undirected graphs"};
  app.require_subcommand(1);

  BuildArgs build;
  CLI::App* cmd_build = app.add_subcommand("build", "Build a cut-equivalent tree");
  cmd_build->add_option("graph", build.graph, "Graph file")->required();
  cmd_build->add_option("-o,--out", build.out, "Tree output file (default stdout)");
  cmd_build->add_option("--algo", build.algo, "classic | gusfield | randomized | deterministic")
      ->check(CLI::IsMember({"classic", "gusfield", "randomized", "deterministic"}));
  CLI::Option* build_seed = cmd_build->add_option("--seed", build.seed, "Random seed");
  cmd_build->add_option("--phi-exp", build.phi_exp, "Use phi = 2^-x");
  cmd_build->add_flag("--via-subdivision", build.via_subdivision,
                      "Route multigraphs through the subdivided graph");
  cmd_build->add_flag("--stage-from-zero", build.stage_from_zero, "Start stages at w = 1");
  cmd_build->add_option("--report", build.report, "JSON report path");
  cmd_build->add_flag("--report-runs", build.report_runs, "Include every single-source run");

  std::string query_tree;
  int query_u = 0, query_v = 0;
  CLI::App* cmd_query = app.add_subcommand("query", "Minimum cut between two nodes");
  cmd_query->add_option("tree", query_tree, "Tree file")->required();
  cmd_query->add_option("u", query_u, "First node (1-indexed)")->required();
  cmd_query->add_option("v", query_v, "Second node (1-indexed)")->required();

  std::string verify_graph, verify_tree, verify_mode = "full";
  int verify_pairs = 200, oracle_limit = 64;
  std::uint64_t verify_seed = 1;
  CLI::App* cmd_verify = app.add_subcommand("verify", "Check a tree against max-flow");
  cmd_verify->add_option("graph", verify_graph, "Graph file")->required();
  cmd_verify->add_option("tree", verify_tree, "Tree file")->required();
  cmd_verify->add_option("--mode", verify_mode, "full | sampled")
      ->check(CLI::IsMember({"full", "sampled"}));
  cmd_verify->add_option("--pairs", verify_pairs, "Pairs checked in sampled mode");
  CLI::Option* verify_seed_opt = cmd_verify->add_option("--seed", verify_seed, "Sampling seed");
  cmd_verify->add_option("--oracle-limit", oracle_limit, "Largest n for full mode");

  BenchArgs bench;
  CLI::App* cmd_bench = app.add_subcommand("bench", "Run builders over a graph family, CSV out");
  cmd_bench->add_option("--family", bench.family, "er | cliques");
  cmd_bench->add_option("--sizes", bench.sizes, "Node counts")->delimiter(',');
  cmd_bench->add_option("--algos", bench.algos, "Algorithms")->delimiter(',');
  cmd_bench->add_option("--p", bench.p, "Edge probability (er)");
  cmd_bench->add_option("--degree", bench.degree, "Expected degree when --p is unset (er)");
  CLI::Option* bench_seed = cmd_bench->add_option("--seed", bench.seed, "Seed");
  cmd_bench->add_option("--verify-pairs", bench.verify_pairs, "Sampled pairs to verify");
  cmd_bench->add_option("-o,--out", bench.out, "CSV output file");

  std::string analyze_graph, analyze_tree, analyze_algo = "classic", analyze_out;
  int analyze_pivot = 1;
  std::vector<std::int64_t> analyze_ws;
  CLI::App* cmd_analyze = app.add_subcommand("analyze", "Cut-membership tree and easy bags");
  cmd_analyze->add_option("graph", analyze_graph, "Graph file")->required();
  cmd_analyze->add_option("--tree", analyze_tree, "Tree file (built with --algo otherwise)");
  cmd_analyze->add_option("--algo", analyze_algo, "Builder when no tree is given");
  cmd_analyze->add_option("--pivot", analyze_pivot, "Pivot node (1-indexed)");
  cmd_analyze->add_option("--w", analyze_ws, "Thresholds")->delimiter(',');
  cmd_analyze->add_option("-o,--out", analyze_out, "JSON output file");

  std::string gen_family = "er", gen_out;
  int gen_n = 10, gen_mult = 3;
  double gen_p = 0.5;
  std::uint64_t gen_seed = 1;
  CLI::App* cmd_gen = app.add_subcommand("generate", "Write a generated graph");
  cmd_gen->add_option("family", gen_family, "er | multi | path | cycle | complete | star");
  cmd_gen->add_option("-n", gen_n, "Nodes");
  cmd_gen->add_option("-p", gen_p, "Edge probability");
  cmd_gen->add_option("--max-mult", gen_mult, "Largest multiplicity (multi)");
  CLI::Option* gen_seed_opt = cmd_gen->add_option("--seed", gen_seed, "Seed");
  cmd_gen->add_option("-o,--out", gen_out, "Output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*cmd_build) {
      build.seed = SeedOrEnv(build_seed, build.seed);
      return RunBuild(build);
    }
    if (*cmd_query) return RunQuery(query_tree, query_u, query_v);
    if (*cmd_verify) {
      return RunVerify(verify_graph, verify_tree, verify_mode, verify_pairs,
                       SeedOrEnv(verify_seed_opt, verify_seed), oracle_limit);
    }
    if (*cmd_bench) {
      bench.seed = SeedOrEnv(bench_seed, bench.seed);
      return RunBench(bench);
    }
    if (*cmd_analyze) {
      return RunAnalyze(analyze_graph, analyze_tree, analyze_algo, analyze_pivot, analyze_ws,
                        analyze_out);
    }
    if (*cmd_gen) {
      return RunGenerate(gen_family, gen_n, gen_p, gen_mult, SeedOrEnv(gen_seed_opt, gen_seed),
                         gen_out);
    }
  } catch (const BuildAbort& e) {
    std::cerr << "abort: " << e.what() << "\n";
    return kExitAbort;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitOk;
}

// kswap: command-line front end for the clique heuristics, the (1,k)-swap
// local search, instance generation and benchmarking.
//
// Exit codes: 0 success, 1 usage error, 2 input error, 3 internal invariant
// violation.

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "kswap/algorithms.hpp"
#include "kswap/collection.hpp"
#include "kswap/dimacs.hpp"
#include "kswap/local_search.hpp"
#include "kswap/measures.hpp"
#include "kswap/micro_solver.hpp"
#include "kswap/report.hpp"
#include "kswap/suite.hpp"

namespace fs = std::filesystem;

namespace {

enum ExitCode : int { kOk = 0, kUsage = 1, kInput = 2, kInternal = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split_list(const std::vector<std::string>& items) {
  std::vector<std::string> out;
  for (const auto& item : items) {
    std::stringstream ss(item);
    std::string part;
    while (std::getline(ss, part, ','))
      if (!part.empty()) out.push_back(part);
  }
  return out;
}

kswap::ProblemMode problem_or_throw(const std::string& name) {
  auto mode = kswap::parse_problem(name);
  if (!mode) throw UsageError("--problem must be mcp or mis");
  return *mode;
}

int run_solve(const std::string& input, const std::string& algo_name, const std::string& problem,
              bool check_invariants) {
  const auto algo = kswap::parse_algorithm(algo_name);
  if (!algo) throw UsageError("unknown algorithm '" + algo_name + "'");
  const auto mode = problem_or_throw(problem);

  const auto graph = kswap::read_dimacs_file(input);
  const auto instance = kswap::as_clique_instance(graph, mode);
  const auto& table = kswap::default_micro_table();

  const auto start = std::chrono::steady_clock::now();
  const auto solution = algo->run(table, instance, instance.all_vertices(), {check_invariants});
  const auto elapsed = std::chrono::steady_clock::now() - start;
  if (!kswap::is_clique(instance, solution)) throw kswap::InvariantViolation(algo->name() + " returned a non-clique");

  std::cout << "instance: " << fs::path(input).stem().string() << '\n'
            << "n: " << graph.order() << '\n'
            << "m: " << graph.edge_count() << '\n'
            << "problem: " << kswap::problem_name(mode) << '\n'
            << "algorithm: " << algo->name() << '\n'
            << "size: " << solution.count() << '\n'
            << "time_ns: " << std::chrono::duration_cast<std::chrono::nanoseconds>(elapsed).count() << '\n'
            << "vertices:";
  for (auto v : solution) std::cout << ' ' << v + 1;
  std::cout << '\n';
  return kOk;
}

struct BenchArgs {
  std::vector<std::string> inputs;
  std::vector<std::string> algos;
  std::string problem = "mcp";
  std::string best_known;
  unsigned jobs = 1;
  unsigned repeats = 1;
  std::string out;
  bool check_invariants = false;
};

int run_bench(const BenchArgs& args) {
  const auto mode = problem_or_throw(args.problem);
  auto algos = split_list(args.algos);
  if (algos.empty() || (algos.size() == 1 && algos[0] == "all")) {
    algos.clear();
    for (const auto& a : kswap::all_algorithms()) algos.push_back(a.name());
  }
  for (const auto& a : algos)
    if (!kswap::parse_algorithm(a)) throw UsageError("unknown algorithm '" + a + "'");

  kswap::BestKnown best_known;
  if (!args.best_known.empty()) {
    std::ifstream in(args.best_known);
    if (!in) throw std::runtime_error("cannot open " + args.best_known);
    best_known = kswap::read_best_known(in);
  }

  std::vector<fs::path> paths(args.inputs.begin(), args.inputs.end());
  const auto sources = kswap::collect_sources(paths);
  kswap::SuiteOptions options;
  options.problem = mode;
  options.jobs = args.jobs;
  options.repeats = args.repeats;
  options.check_invariants = args.check_invariants;
  options.diagnostics = &std::cerr;

  const auto records = kswap::run_suite(sources, algos, options);
  const auto report = kswap::compute_measures(records, best_known);
  const std::vector<std::pair<std::string, std::string>> metadata = {
      {"problem", std::string(kswap::problem_name(mode))},
      {"instances", std::to_string(sources.size())},
      {"repeats", std::to_string(std::max(1U, args.repeats))},
      {"timing", args.repeats > 1 ? "median" : "single"},
      {"best_known", args.best_known.empty() ? "none" : args.best_known},
  };

  std::ofstream out(args.out);
  if (!out) throw std::runtime_error("cannot write " + args.out);
  kswap::emit_csv(report, records, out, metadata);

  std::cout << kswap::kSummaryHeader << '\n';
  for (const auto& s : report.summary) {
    if (s.problem == "all") continue;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f,%.3f", s.mean_solution, s.mean_time);
    std::cout << s.algorithm << ',' << s.problem << ',' << s.instances << ',' << buf << '\n';
  }
  return kOk;
}

struct GenArgs {
  std::string preset;
  std::string spec;
  std::size_t scale = 1;
  std::size_t repetitions = 0;
  std::uint64_t seed = 0;
  bool exclusive = false;
  std::string out;
};

int run_gen(const GenArgs& args, bool seed_given, bool reps_given) {
  if (args.preset.empty() == args.spec.empty()) throw UsageError("give exactly one of --preset or --spec");
  kswap::GenRnSpec spec;
  try {
    spec = args.preset.empty() ? kswap::parse_spec(args.spec) : kswap::preset_spec(args.preset);
    spec = kswap::scaled(spec, args.scale);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (seed_given) spec.seed = args.seed;
  if (reps_given) spec.n_rpt = args.repetitions;
  if (args.exclusive) spec.dN_inclusive = false;

  fs::create_directories(args.out);
  std::size_t written = 0;
  std::ostringstream params;
  params << "n_rpt=" << spec.n_rpt << " n0=" << spec.n0 << " nI=" << spec.nI << " nN=" << spec.nN
         << " d0=" << spec.d0 << " dI=" << spec.dI << " dN=" << spec.dN
         << (spec.dN_inclusive ? " inclusive" : " exclusive") << " seed=" << spec.seed << " scale=" << args.scale;
  kswap::for_each_generated(spec, [&](kswap::GeneratedInstance&& inst) {
    kswap::write_dimacs_file(inst.graph, fs::path(args.out) / (inst.id + ".clq"), "random G(n,d) " + params.str());
    ++written;
  });
  std::cout << "wrote " << written << " graphs to " << args.out << " (" << params.str() << ")\n";
  return kOk;
}

int run_table_dump(const std::string& out) {
  kswap::default_micro_table().dump_file(out);
  std::cout << "wrote " << kswap::default_micro_table().size() << " entries to " << out << '\n';
  return kOk;
}

int run_table_verify(const std::string& in) {
  const auto table = in.empty() ? kswap::MicroTable() : kswap::MicroTable::load_file(in);
  if (auto bad = kswap::find_non_maximum_entry(table)) {
    std::cerr << "entry " << *bad << " is not a maximum clique\n";
    return in.empty() ? kInternal : kInput;
  }
  if (!in.empty() && !std::equal(table.bytes().begin(), table.bytes().end(),
                                 kswap::default_micro_table().bytes().begin()))
    std::cout << "note: table is exact but uses a different tie-break than the built-in one\n";
  std::cout << "ok: all " << table.size() << " entries are maximum cliques\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"(1,k)-swap local search and greedy heuristics for maximum clique / independent set"};
  app.require_subcommand(1);

  std::string solve_input, solve_algo, solve_problem = "mcp";
  bool solve_check = false;
  auto* solve = app.add_subcommand("solve", "Solve one DIMACS instance");
  solve->add_option("--input", solve_input, "DIMACS file")->required();
  solve->add_option("--algo", solve_algo, "Algorithm name, e.g. ld_bin or ls_1_k_ld_bin")->required();
  solve->add_option("--problem", solve_problem, "mcp or mis")->capture_default_str();
  solve->add_flag("--check-invariants", solve_check, "Verify local-search state after every swap");

  BenchArgs bench_args;
  auto* bench = app.add_subcommand("bench", "Run algorithms over instances and report relative measures");
  bench->add_option("--inputs", bench_args.inputs, "Directories and/or DIMACS files")->required();
  bench->add_option("--algos", bench_args.algos, "Comma-separated algorithm names, or 'all'");
  bench->add_option("--problem", bench_args.problem, "mcp or mis")->capture_default_str();
  bench->add_option("--best-known", bench_args.best_known, "CSV of instance,size");
  bench->add_option("--jobs", bench_args.jobs, "Instances solved in parallel")->check(CLI::PositiveNumber);
  bench->add_option("--repeats", bench_args.repeats, "Runs per pair; median time is reported")
      ->check(CLI::PositiveNumber);
  bench->add_option("--out", bench_args.out, "Output CSV")->required();
  bench->add_flag("--check-invariants", bench_args.check_invariants, "Verify local-search state after every swap");

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "Generate a random instance collection as DIMACS files");
  gen->add_option("--preset", gen_args.preset, "c1, c2 or c3");
  gen->add_option("--spec", gen_args.spec, "n_rpt,n0,nI,nN,d0,dI,dN,seed");
  gen->add_option("--scale", gen_args.scale, "Divide all orders by this factor")->check(CLI::PositiveNumber);
  auto* gen_reps = gen->add_option("--repetitions", gen_args.repetitions, "Override n_rpt");
  auto* gen_seed = gen->add_option("--seed", gen_args.seed, "Override the generator seed");
  gen->add_flag("--exclusive", gen_args.exclusive, "Stop densities strictly below dN");
  gen->add_option("--out", gen_args.out, "Output directory")->required();

  auto* table = app.add_subcommand("table", "Inspect the 6-vertex lookup table");
  table->require_subcommand(1);
  std::string dump_out, verify_in;
  auto* dump = table->add_subcommand("dump", "Write the 32768-byte table");
  dump->add_option("--out", dump_out, "Output file")->required();
  auto* verify = table->add_subcommand("verify", "Exhaustively verify the built-in or a dumped table");
  verify->add_option("--in", verify_in, "Table file to verify instead of the built-in one");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*solve) return run_solve(solve_input, solve_algo, solve_problem, solve_check);
    if (*bench) return run_bench(bench_args);
    if (*gen) return run_gen(gen_args, gen_seed->count() > 0, gen_reps->count() > 0);
    if (*dump) return run_table_dump(dump_out);
    if (*verify) return run_table_verify(verify_in);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const kswap::InvariantViolation& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInput;
  }
  return kUsage;
}

#include "kswap/suite.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "kswap/algorithms.hpp"
#include "kswap/dimacs.hpp"
#include "kswap/local_search.hpp"

namespace kswap {

std::string_view problem_name(ProblemMode mode) { return mode == ProblemMode::MaxClique ? "mcp" : "mis"; }

std::optional<ProblemMode> parse_problem(std::string_view name) {
  if (name == "mcp") return ProblemMode::MaxClique;
  if (name == "mis") return ProblemMode::MaxIndependentSet;
  return std::nullopt;
}

InstanceSource InstanceSource::from_file(const std::filesystem::path& path) {
  return InstanceSource{path.stem().string(), [path] { return read_dimacs_file(path); }};
}

InstanceSource InstanceSource::from_graph(std::string id, Graph g) {
  return InstanceSource{std::move(id), [g = std::move(g)] { return g; }};
}

std::vector<InstanceSource> collect_sources(const std::vector<std::filesystem::path>& inputs) {
  std::vector<InstanceSource> sources;
  for (const auto& input : inputs) {
    if (std::filesystem::is_directory(input)) {
      std::vector<std::filesystem::path> files;
      for (const auto& entry : std::filesystem::directory_iterator(input))
        if (entry.is_regular_file()) files.push_back(entry.path());
      std::sort(files.begin(), files.end());
      for (const auto& f : files) sources.push_back(InstanceSource::from_file(f));
    } else {
      sources.push_back(InstanceSource::from_file(input));
    }
  }
  return sources;
}

namespace {

struct InstanceResult {
  bool ok = false;
  std::vector<BenchRecord> records;
};

InstanceResult solve_instance(const InstanceSource& source, const std::vector<Algorithm>& algorithms,
                              const SuiteOptions& options, const MicroTable& table, std::mutex& log_mutex) {
  InstanceResult result;
  Graph graph;
  try {
    graph = source.load();
  } catch (const std::exception& e) {
    if (options.diagnostics) {
      std::lock_guard lock(log_mutex);
      *options.diagnostics << "skipping instance " << source.id << ": " << e.what() << '\n';
    }
    return result;
  }
  const auto n = graph.order();
  const auto m = graph.edge_count();
  const auto instance = as_clique_instance(graph, options.problem);
  const auto sg = instance.all_vertices();
  const LocalSearchOptions ls_options{options.check_invariants};
  const auto repeats = std::max(1U, options.repeats);

  for (const auto& algo : algorithms) {
    std::vector<std::chrono::nanoseconds> times;
    std::size_t size = 0;
    for (unsigned r = 0; r < repeats; ++r) {
      const auto start = std::chrono::steady_clock::now();
      auto solution = algo.run(table, instance, sg, ls_options);
      const auto stop = std::chrono::steady_clock::now();
      if (r == 0) {
        if (!is_clique(instance, solution))
          throw InvariantViolation(algo.name() + " returned a non-clique on " + source.id);
        size = solution.count();
      }
      times.push_back(std::max(std::chrono::nanoseconds(1), stop - start));
    }
    std::nth_element(times.begin(), times.begin() + static_cast<std::ptrdiff_t>(times.size() / 2), times.end());
    result.records.push_back(BenchRecord{source.id, n, m, options.problem, algo.name(), size, times[times.size() / 2]});
  }
  result.ok = true;
  return result;
}

}  // namespace

std::vector<BenchRecord> run_suite(const std::vector<InstanceSource>& instances,
                                   const std::vector<std::string>& algorithm_names, const SuiteOptions& options) {
  std::vector<Algorithm> algorithms;
  for (const auto& name : algorithm_names) {
    auto algo = parse_algorithm(name);
    if (!algo) throw std::invalid_argument("unknown algorithm '" + name + "'");
    algorithms.push_back(*algo);
  }
  const auto& table = options.table ? *options.table : default_micro_table();

  std::vector<InstanceResult> results(instances.size());
  std::atomic<std::size_t> next{0};
  std::mutex log_mutex;
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    for (auto i = next++; i < instances.size(); i = next++) {
      try {
        results[i] = solve_instance(instances[i], algorithms, options, table, log_mutex);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };

  const auto jobs = std::clamp<std::size_t>(options.jobs, 1, std::max<std::size_t>(1, instances.size()));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> threads;
    for (std::size_t t = 0; t < jobs; ++t) threads.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<BenchRecord> records;
  for (auto& r : results)
    if (r.ok) std::move(r.records.begin(), r.records.end(), std::back_inserter(records));
  return records;
}

}  // namespace kswap

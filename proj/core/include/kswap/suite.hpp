#pragma once

#include <chrono>
#include <cstddef>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kswap/graph.hpp"
#include "kswap/micro_solver.hpp"

namespace kswap {

std::string_view problem_name(ProblemMode mode);  // "mcp" / "mis"
std::optional<ProblemMode> parse_problem(std::string_view name);

/// One (instance, algorithm) measurement.
struct BenchRecord {
  std::string instance_id;
  std::size_t n = 0;
  std::size_t m = 0;
  ProblemMode problem = ProblemMode::MaxClique;
  std::string algorithm;
  std::size_t solution_size = 0;
  std::chrono::nanoseconds elapsed{0};
};

/// A lazily loaded instance. `load` may throw; the suite logs and skips it.
struct InstanceSource {
  std::string id;
  std::function<Graph()> load;

  static InstanceSource from_file(const std::filesystem::path& path);
  static InstanceSource from_graph(std::string id, Graph g);
};

/// Files of a directory (sorted by name) or the given files, as sources.
std::vector<InstanceSource> collect_sources(const std::vector<std::filesystem::path>& inputs);

struct SuiteOptions {
  ProblemMode problem = ProblemMode::MaxClique;
  unsigned jobs = 1;
  /// Each pair is solved this many times; the recorded time is the median.
  unsigned repeats = 1;
  bool check_invariants = false;
  /// nullptr selects default_micro_table().
  const MicroTable* table = nullptr;
  /// Receives one line per skipped instance; nullptr silences them.
  std::ostream* diagnostics = nullptr;
};

/// Solves every instance with every algorithm. Records come out in instance
/// order, then in the order of `algorithms`, regardless of `jobs`. Timing
/// covers only the algorithm call: loading, and for MIS the complement, are
/// excluded.
///
/// Throws std::invalid_argument for unknown algorithm names and
/// InvariantViolation if a solver returns a non-clique.
std::vector<BenchRecord> run_suite(const std::vector<InstanceSource>& instances,
                                   const std::vector<std::string>& algorithms, const SuiteOptions& options = {});

}  // namespace kswap

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "kswap/suite.hpp"

namespace kswap {

/// Externally supplied best-known solution sizes. A key with a problem mode
/// applies to that mode only; a key without one applies to both.
class BestKnown {
 public:
  void set(const std::string& instance, std::size_t size) { any_[instance] = size; }
  void set(const std::string& instance, ProblemMode mode, std::size_t size) { by_mode_[{instance, mode}] = size; }
  std::optional<std::size_t> find(const std::string& instance, ProblemMode mode) const;
  bool empty() const { return any_.empty() && by_mode_.empty(); }

 private:
  std::map<std::string, std::size_t> any_;
  std::map<std::pair<std::string, ProblemMode>, std::size_t> by_mode_;
};

class MeasureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Solution-quality ratio per record: solution_size / Q_max, where Q_max is
/// the best-known size when supplied, else the largest size among records
/// of the same (instance, problem). Throws MeasureError when a record beats
/// its best-known size. Instances whose Q_max is 0 score 1.0.
std::vector<double> relative_solution_measure(const std::vector<BenchRecord>& records,
                                              const BestKnown& best_known = {});

/// Time ratio per record: T_min / elapsed, where T_min is the smallest
/// elapsed time among records of the same (instance, problem).
std::vector<double> relative_time_measure(const std::vector<BenchRecord>& records);

struct MeasureRow {
  double r_solution = 0.0;
  double r_time = 0.0;
};

/// Unweighted means over instances. `problem` is "mcp", "mis" or "all" (both
/// modes pooled).
struct AlgorithmSummary {
  std::string algorithm;
  std::string problem;
  std::size_t instances = 0;
  double mean_solution = 0.0;
  double mean_time = 0.0;
};

struct MeasureReport {
  std::vector<MeasureRow> rows;  // parallel to the input records
  std::vector<AlgorithmSummary> summary;

  const AlgorithmSummary* find(const std::string& algorithm, const std::string& problem) const;
};

MeasureReport compute_measures(const std::vector<BenchRecord>& records, const BestKnown& best_known = {});

}  // namespace kswap

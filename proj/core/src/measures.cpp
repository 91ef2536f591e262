#include "kswap/measures.hpp"

#include <algorithm>
#include <utility>

namespace kswap {

namespace {

using GroupKey = std::pair<std::string, ProblemMode>;

GroupKey key_of(const BenchRecord& r) { return {r.instance_id, r.problem}; }

}  // namespace

std::optional<std::size_t> BestKnown::find(const std::string& instance, ProblemMode mode) const {
  if (auto it = by_mode_.find({instance, mode}); it != by_mode_.end()) return it->second;
  if (auto it = any_.find(instance); it != any_.end()) return it->second;
  return std::nullopt;
}

std::vector<double> relative_solution_measure(const std::vector<BenchRecord>& records, const BestKnown& best_known) {
  std::map<GroupKey, std::size_t> observed;
  for (const auto& r : records) {
    auto& best = observed[key_of(r)];
    best = std::max(best, r.solution_size);
  }
  std::map<GroupKey, std::size_t> reference;
  for (const auto& [key, best] : observed) {
    const auto known = best_known.find(key.first, key.second);
    if (known && *known < best)
      throw MeasureError("instance " + key.first + " (" + std::string(problem_name(key.second)) +
                         "): found solution of size " + std::to_string(best) + " exceeds best known " +
                         std::to_string(*known));
    reference[key] = known ? *known : best;
  }
  std::vector<double> ratios;
  ratios.reserve(records.size());
  for (const auto& r : records) {
    const auto q_max = reference[key_of(r)];
    ratios.push_back(q_max == 0 ? 1.0 : static_cast<double>(r.solution_size) / static_cast<double>(q_max));
  }
  return ratios;
}

std::vector<double> relative_time_measure(const std::vector<BenchRecord>& records) {
  std::map<GroupKey, std::chrono::nanoseconds> fastest;
  for (const auto& r : records) {
    auto [it, inserted] = fastest.try_emplace(key_of(r), r.elapsed);
    if (!inserted) it->second = std::min(it->second, r.elapsed);
  }
  std::vector<double> ratios;
  ratios.reserve(records.size());
  for (const auto& r : records) {
    const auto t_min = fastest[key_of(r)];
    ratios.push_back(r.elapsed.count() <= 0 ? 1.0
                                            : static_cast<double>(t_min.count()) / static_cast<double>(r.elapsed.count()));
  }
  return ratios;
}

const AlgorithmSummary* MeasureReport::find(const std::string& algorithm, const std::string& problem) const {
  for (const auto& s : summary)
    if (s.algorithm == algorithm && s.problem == problem) return &s;
  return nullptr;
}

MeasureReport compute_measures(const std::vector<BenchRecord>& records, const BestKnown& best_known) {
  MeasureReport report;
  const auto solution = relative_solution_measure(records, best_known);
  const auto time = relative_time_measure(records);
  report.rows.reserve(records.size());
  for (std::size_t i = 0; i < records.size(); ++i) report.rows.push_back({solution[i], time[i]});

  std::vector<std::string> algorithm_order;
  bool seen_mode[2] = {false, false};
  for (const auto& r : records) {
    if (std::find(algorithm_order.begin(), algorithm_order.end(), r.algorithm) == algorithm_order.end())
      algorithm_order.push_back(r.algorithm);
    seen_mode[r.problem == ProblemMode::MaxClique ? 0 : 1] = true;
  }

  auto summarize = [&](const std::string& algo, std::optional<ProblemMode> mode, const std::string& label) {
    AlgorithmSummary s{algo, label, 0, 0.0, 0.0};
    for (std::size_t i = 0; i < records.size(); ++i) {
      if (records[i].algorithm != algo || (mode && records[i].problem != *mode)) continue;
      ++s.instances;
      s.mean_solution += report.rows[i].r_solution;
      s.mean_time += report.rows[i].r_time;
    }
    if (s.instances == 0) return;
    s.mean_solution /= static_cast<double>(s.instances);
    s.mean_time /= static_cast<double>(s.instances);
    report.summary.push_back(std::move(s));
  };

  for (const auto& algo : algorithm_order) {
    if (seen_mode[0]) summarize(algo, ProblemMode::MaxClique, "mcp");
    if (seen_mode[1]) summarize(algo, ProblemMode::MaxIndependentSet, "mis");
    summarize(algo, std::nullopt, "all");
  }
  return report;
}

}  // namespace kswap

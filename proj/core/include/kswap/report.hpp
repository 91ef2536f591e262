#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "kswap/measures.hpp"
#include "kswap/suite.hpp"

namespace kswap {

inline constexpr const char* kCsvHeader =
    "instance,n,m,problem,algorithm,solution_size,time_ns,ratio_solution,ratio_time";
inline constexpr const char* kSummaryHeader = "algorithm,problem,instances,mean_ratio_solution,mean_ratio_time";

/// Writes one row per record (ratios with three decimals), then a blank
/// line, `# key=value` lines for `metadata`, `# summary` and the
/// per-algorithm mean block. Throws std::runtime_error if the sink fails.
void emit_csv(const MeasureReport& report, const std::vector<BenchRecord>& records, std::ostream& sink,
              const std::vector<std::pair<std::string, std::string>>& metadata = {});

/// Reads `instance,size` or `instance,problem,size` lines. Blank lines,
/// `#` comments and a leading header row whose size column is not numeric
/// are skipped. Throws std::runtime_error with the line number otherwise.
BestKnown read_best_known(std::istream& in);

}  // namespace kswap

#include "kswap/algorithms.hpp"

namespace kswap {

namespace {
constexpr std::string_view kLocalSearchPrefix = "ls_1_k_";
}

std::string Algorithm::name() const {
  std::string base(heuristic_name(heuristic));
  return local_search ? std::string(kLocalSearchPrefix) + base : base;
}

VertexSet Algorithm::run(const MicroTable& table, const Graph& g, const VertexSet& sg,
                         const LocalSearchOptions& options) const {
  if (!local_search) return run_heuristic(heuristic, g, sg);
  return ls_1_k(table, g, sg, heuristic, options).clique;
}

std::optional<Algorithm> parse_algorithm(std::string_view name) {
  const bool ls = name.starts_with(kLocalSearchPrefix);
  if (ls) name.remove_prefix(kLocalSearchPrefix.size());
  const auto kind = parse_heuristic(name);
  if (!kind) return std::nullopt;
  return Algorithm{*kind, ls};
}

std::vector<Algorithm> all_algorithms() {
  std::vector<Algorithm> out;
  for (bool ls : {false, true})
    for (auto kind : kAllHeuristics) out.push_back(Algorithm{kind, ls});
  return out;
}

}  // namespace kswap

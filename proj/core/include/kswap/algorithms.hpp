#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kswap/heuristics.hpp"
#include "kswap/local_search.hpp"
#include "kswap/micro_solver.hpp"

namespace kswap {

/// A named solver: one of the five constructive heuristics, optionally
/// followed by the (1,k)-swap local search. Names are the heuristic name
/// (e.g. "ld_bin") or "ls_1_k_" + heuristic name (e.g. "ls_1_k_ld_bin").
struct Algorithm {
  HeuristicKind heuristic = HeuristicKind::FvBio;
  bool local_search = false;

  std::string name() const;
  VertexSet run(const MicroTable& table, const Graph& g, const VertexSet& sg,
                const LocalSearchOptions& options = {}) const;

  bool operator==(const Algorithm&) const = default;
};

std::optional<Algorithm> parse_algorithm(std::string_view name);

/// All ten algorithms: the five heuristics, then their local-search variants.
std::vector<Algorithm> all_algorithms();

}  // namespace kswap

#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "kswap/graph.hpp"

namespace kswap {

/// Sequential greedy clique heuristics. Degrees are always taken within the
/// current induced subgraph and every tie breaks toward the lowest vertex
/// index, so all of them are deterministic.
enum class HeuristicKind { FvBio, SdWon, SdExtWon, LdBio, LdBin };

inline constexpr HeuristicKind kAllHeuristics[] = {HeuristicKind::FvBio, HeuristicKind::SdWon, HeuristicKind::SdExtWon,
                                                   HeuristicKind::LdBio, HeuristicKind::LdBin};

/// Lower-case CLI name: fv_bio, sd_won, sd_ext_won, ld_bio, ld_bin.
std::string_view heuristic_name(HeuristicKind kind);
std::optional<HeuristicKind> parse_heuristic(std::string_view name);

/// First Vertex, Best In, Old: scans sg in index order and keeps every vertex
/// adjacent to all vertices kept so far.
VertexSet fv_bio(const Graph& g, const VertexSet& sg);

/// Smallest Degree, Worst Out, New: starting from sg, drops a minimum-degree
/// vertex until the rest is a clique. The result need not be maximal.
VertexSet sd_won(const Graph& g, const VertexSet& sg);

/// sd_won followed by re-admitting removed vertices, most recently removed
/// first, whenever they are adjacent to the whole clique. Maximal within sg.
VertexSet sd_ext_won(const Graph& g, const VertexSet& sg);

/// Largest Degree, Best In, Old: fv_bio over sg sorted by non-increasing
/// degree, the degrees computed once up front.
VertexSet ld_bio(const Graph& g, const VertexSet& sg);

/// Largest Degree, Best In, New: repeatedly takes the maximum-degree vertex
/// of the working set and shrinks the working set to its neighbors.
VertexSet ld_bin(const Graph& g, const VertexSet& sg);

VertexSet run_heuristic(HeuristicKind kind, const Graph& g, const VertexSet& sg);

}  // namespace kswap

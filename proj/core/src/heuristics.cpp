#include "kswap/heuristics.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace kswap {

namespace {

struct WorstOutTrace {
  VertexSet clique;
  std::vector<Vertex> removed;
};

// Shared core of sd_won / sd_ext_won. S is a clique iff its minimum degree
// within S equals |S| - 1, so one min-degree scan both tests and selects.
WorstOutTrace worst_out(const Graph& g, const VertexSet& sg) {
  WorstOutTrace trace{sg, {}};
  std::vector<std::size_t> degree(g.order(), 0);
  for (auto v : sg) degree[v] = degree_within(g, v, sg);
  std::size_t remaining = sg.count();

  while (remaining > 1) {
    Vertex worst = 0;
    std::size_t worst_degree = std::numeric_limits<std::size_t>::max();
    for (auto v : trace.clique) {
      if (degree[v] < worst_degree) {
        worst = v;
        worst_degree = degree[v];
      }
    }
    if (worst_degree == remaining - 1) break;
    trace.clique.reset(worst);
    trace.removed.push_back(worst);
    --remaining;
    for (auto u : g.neighbors(worst) & trace.clique) --degree[u];
  }
  return trace;
}

VertexSet best_in_scan(const Graph& g, const std::vector<Vertex>& order) {
  VertexSet clique(g.order());
  VertexSet candidates = VertexSet::full(g.order());
  for (auto v : order) {
    if (!candidates.test(v)) continue;
    clique.set(v);
    candidates &= g.neighbors(v);
  }
  return clique;
}

}  // namespace

std::string_view heuristic_name(HeuristicKind kind) {
  switch (kind) {
    case HeuristicKind::FvBio: return "fv_bio";
    case HeuristicKind::SdWon: return "sd_won";
    case HeuristicKind::SdExtWon: return "sd_ext_won";
    case HeuristicKind::LdBio: return "ld_bio";
    case HeuristicKind::LdBin: return "ld_bin";
  }
  throw std::logic_error("unknown heuristic kind");
}

std::optional<HeuristicKind> parse_heuristic(std::string_view name) {
  for (auto kind : kAllHeuristics)
    if (heuristic_name(kind) == name) return kind;
  return std::nullopt;
}

VertexSet fv_bio(const Graph& g, const VertexSet& sg) { return best_in_scan(g, sg.to_vector()); }

VertexSet sd_won(const Graph& g, const VertexSet& sg) { return worst_out(g, sg).clique; }

VertexSet sd_ext_won(const Graph& g, const VertexSet& sg) {
  auto trace = worst_out(g, sg);
  auto& clique = trace.clique;
  for (auto it = trace.removed.rbegin(); it != trace.removed.rend(); ++it)
    if (clique.is_subset_of(g.neighbors(*it))) clique.set(*it);
  return clique;
}

VertexSet ld_bio(const Graph& g, const VertexSet& sg) {
  auto order = sg.to_vector();
  std::vector<std::size_t> degree(g.order(), 0);
  for (auto v : order) degree[v] = degree_within(g, v, sg);
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return degree[a] > degree[b]; });
  return best_in_scan(g, order);
}

VertexSet ld_bin(const Graph& g, const VertexSet& sg) {
  VertexSet clique(g.order());
  VertexSet work = sg;
  while (!work.empty()) {
    Vertex best = 0;
    std::size_t best_degree = 0;
    bool found = false;
    for (auto v : work) {
      const auto d = degree_within(g, v, work);
      if (!found || d > best_degree) {
        best = v;
        best_degree = d;
        found = true;
      }
    }
    clique.set(best);
    work &= g.neighbors(best);
  }
  return clique;
}

VertexSet run_heuristic(HeuristicKind kind, const Graph& g, const VertexSet& sg) {
  switch (kind) {
    case HeuristicKind::FvBio: return fv_bio(g, sg);
    case HeuristicKind::SdWon: return sd_won(g, sg);
    case HeuristicKind::SdExtWon: return sd_ext_won(g, sg);
    case HeuristicKind::LdBio: return ld_bio(g, sg);
    case HeuristicKind::LdBin: return ld_bin(g, sg);
  }
  throw std::logic_error("unknown heuristic kind");
}

}  // namespace kswap

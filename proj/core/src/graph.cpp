#include "kswap/graph.hpp"

#include <stdexcept>
#include <string>

namespace kswap {

Graph::Graph(std::size_t order) : rows_(order, VertexSet(order)) {}

Graph Graph::from_edges(std::size_t order, const std::vector<std::pair<Vertex, Vertex>>& edges) {
  GraphBuilder builder(order);
  for (const auto& [u, v] : edges) builder.add_edge(u, v);
  return std::move(builder).build();
}

GraphBuilder::GraphBuilder(std::size_t order) : rows_(order, VertexSet(order)) {}

bool GraphBuilder::add_edge(Vertex u, Vertex v) {
  if (u >= order() || v >= order())
    throw std::invalid_argument("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                ") has an endpoint outside [0, " + std::to_string(order()) + ")");
  if (u == v) throw std::invalid_argument("self-loop on vertex " + std::to_string(u));
  if (rows_[u].test(v)) return false;
  rows_[u].set(v);
  rows_[v].set(u);
  ++edge_count_;
  return true;
}

Graph GraphBuilder::build() && {
  Graph g;
  g.rows_ = std::move(rows_);
  g.edge_count_ = edge_count_;
  rows_.clear();
  edge_count_ = 0;
  return g;
}

Graph complement(const Graph& g) {
  const auto n = g.order();
  Graph result;
  result.rows_.reserve(n);
  std::size_t degree_sum = 0;
  for (Vertex v = 0; v < n; ++v) {
    auto row = ~g.neighbors(v);
    row.reset(v);
    degree_sum += row.count();
    result.rows_.push_back(std::move(row));
  }
  result.edge_count_ = degree_sum / 2;
  return result;
}

Graph as_clique_instance(const Graph& g, ProblemMode mode) {
  return mode == ProblemMode::MaxClique ? g : complement(g);
}

bool is_clique(const Graph& g, const VertexSet& s) {
  const auto k = s.count();
  for (auto v : s)
    if (g.neighbors(v).count_and(s) != k - 1) return false;
  return true;
}

VertexSet common_neighbors(const Graph& g, const VertexSet& clique, VertexSet s) {
  for (auto v : clique) s &= g.neighbors(v);
  return s;
}

bool is_maximal_clique(const Graph& g, const VertexSet& s, const VertexSet& within) {
  if (!is_clique(g, s)) return false;
  return common_neighbors(g, s, within - s).empty();
}

}  // namespace kswap

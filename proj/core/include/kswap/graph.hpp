#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "kswap/vertex_set.hpp"

namespace kswap {

enum class ProblemMode { MaxClique, MaxIndependentSet };

/// Immutable simple undirected graph stored as n rows of n-bit adjacency
/// vectors. Bit u of row v is set iff (v, u) is an edge; rows are symmetric
/// and the diagonal is always clear.
class Graph {
 public:
  Graph() = default;

  /// Edgeless graph of the given order.
  explicit Graph(std::size_t order);

  /// Builds a graph from 0-based edge pairs. Duplicate pairs are idempotent.
  /// Throws std::invalid_argument on out-of-range endpoints or self-loops.
  static Graph from_edges(std::size_t order, const std::vector<std::pair<Vertex, Vertex>>& edges);

  std::size_t order() const { return rows_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  /// N(v)
  const VertexSet& neighbors(Vertex v) const { return rows_[v]; }
  bool adjacent(Vertex u, Vertex v) const { return rows_[u].test(v); }

  VertexSet all_vertices() const { return VertexSet::full(order()); }
  VertexSet empty_set() const { return VertexSet(order()); }

  bool operator==(const Graph& other) const { return rows_ == other.rows_; }

 private:
  friend class GraphBuilder;
  friend Graph complement(const Graph& g);
  std::vector<VertexSet> rows_;
  std::size_t edge_count_ = 0;
};

/// Mutable staging area used by the parser and generators; `build()` freezes
/// the adjacency into a Graph.
class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t order);

  std::size_t order() const { return rows_.size(); }
  /// Returns false if the edge was already present.
  bool add_edge(Vertex u, Vertex v);
  Graph build() &&;

 private:
  std::vector<VertexSet> rows_;
  std::size_t edge_count_ = 0;
};

/// Materialized complement: (v, u) is an edge iff v != u and (v, u) is not
/// an edge of g.
Graph complement(const Graph& g);

/// Graph to run a MaxClique solver on for the given problem mode.
Graph as_clique_instance(const Graph& g, ProblemMode mode);

/// True iff every pair of distinct members of s is adjacent in g.
bool is_clique(const Graph& g, const VertexSet& s);

/// True iff s is a clique and no vertex of `within \ s` is adjacent to all of s.
bool is_maximal_clique(const Graph& g, const VertexSet& s, const VertexSet& within);

/// |N(v) ∩ s|
inline std::size_t degree_within(const Graph& g, Vertex v, const VertexSet& s) { return g.neighbors(v).count_and(s); }

/// Vertices of s adjacent to every member of clique: the common neighborhood
/// restricted to s.
VertexSet common_neighbors(const Graph& g, const VertexSet& clique, VertexSet s);

}  // namespace kswap

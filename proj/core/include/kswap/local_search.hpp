#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "kswap/graph.hpp"
#include "kswap/heuristics.hpp"
#include "kswap/micro_solver.hpp"

namespace kswap {

/// Raised when the incremental candidate state diverges from a from-scratch
/// rebuild, or when a caller hands in a state that breaks its invariants.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Mutable state of the (1,k)-swap local search.
///
/// `cand[v]` is read according to v's membership in `q`:
///   v in sg \ q : the members of q not adjacent to v (|cand[v]| is v's
///                 tightness);
///   u in q      : the outside vertices whose only non-neighbor in q is u
///                 (the 1-tight vertices pinned to u).
/// Entries for vertices outside sg stay empty.
struct CandidateState {
  VertexSet sg;
  VertexSet q;
  std::vector<VertexSet> cand;

  bool operator==(const CandidateState&) const = default;
};

/// A (1,k)-swap: remove `u_swapped`, insert the clique `c_improve`.
struct Improvement {
  Vertex u_swapped = 0;
  VertexSet c_improve;
};

/// Builds candidate sets for the clique q within sg. Throws
/// std::invalid_argument if q is not a clique or not contained in sg.
CandidateState build_candidates(const Graph& g, const VertexSet& sg, const VertexSet& q);

/// Best (1,k)-swap available from st, scanning q in index order and solving
/// each pinned set cand[u] with fvs_qe. Only pinned sets larger than the
/// incumbent are examined; ties keep the earlier u.
std::optional<Improvement> exists_improvement(const MicroTable& table, const Graph& g, const CandidateState& st);

/// Applies imp to st and restores every CandidateState invariant
/// incrementally. Throws std::invalid_argument if |c_improve| < 2.
///
/// If the swap leaves a free vertex (only possible when c_improve is not
/// maximal within cand[u_swapped]) the free vertices are plunged into q, the
/// state is rebuilt, and true is returned.
bool apply_improvement(const Graph& g, CandidateState& st, const Improvement& imp);

/// Compares st against build_candidates(g, st.sg, st.q); throws
/// InvariantViolation describing the first mismatch.
void verify_state(const Graph& g, const CandidateState& st);

/// Adds, in index order, every vertex of sg \ q adjacent to all of q.
VertexSet plunge_free_vertices(const Graph& g, const VertexSet& sg, VertexSet q);

struct LocalSearchOptions {
  /// Rebuild and compare the candidate state after every iteration, and treat
  /// a free vertex after a swap as an invariant violation.
  bool check_invariants = false;
};

struct LocalSearchResult {
  VertexSet clique;
  std::size_t seed_size = 0;
  std::size_t iterations = 0;
  /// Sizes k of the applied (1,k)-swaps, in order.
  std::vector<std::size_t> swap_sizes;
};

/// Descends from `seed` (a clique within sg, not necessarily maximal) until
/// no (1,k)-swap with k >= 2 exists.
LocalSearchResult improve_clique(const MicroTable& table, const Graph& g, const VertexSet& sg, const VertexSet& seed,
                                 const LocalSearchOptions& options = {});

/// LS_1_k<seed heuristic>: run the heuristic on sg, then improve_clique.
LocalSearchResult ls_1_k(const MicroTable& table, const Graph& g, const VertexSet& sg, HeuristicKind seed_heuristic,
                         const LocalSearchOptions& options = {});

}  // namespace kswap

#include "kswap/local_search.hpp"

#include <string>

namespace kswap {

namespace {

// Only non-neighbor of v in q, when v is 1-tight.
std::optional<Vertex> sole_member(const VertexSet& s) {
  if (s.count() != 1) return std::nullopt;
  return s.first();
}

std::string describe(const VertexSet& s) {
  std::string out = "{";
  bool first = true;
  for (auto v : s) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

}  // namespace

CandidateState build_candidates(const Graph& g, const VertexSet& sg, const VertexSet& q) {
  if (sg.size() != g.order() || q.size() != g.order())
    throw std::invalid_argument("vertex sets must match the graph order");
  if (!q.is_subset_of(sg)) throw std::invalid_argument("solution is not contained in the subgraph");
  if (!is_clique(g, q)) throw std::invalid_argument("solution is not a clique");

  CandidateState st{sg, q, std::vector<VertexSet>(g.order(), VertexSet(g.order()))};
  for (auto v : sg - q) {
    st.cand[v] = q - g.neighbors(v);
    if (auto u = sole_member(st.cand[v])) st.cand[*u].set(v);
  }
  return st;
}

std::optional<Improvement> exists_improvement(const MicroTable& table, const Graph& g, const CandidateState& st) {
  std::optional<Improvement> best;
  std::size_t best_size = 0;
  for (auto u : st.q) {
    const auto& pinned = st.cand[u];
    const auto pinned_size = pinned.count();
    if (pinned_size <= 1 || pinned_size <= best_size) continue;
    auto local = fvs_qe(table, g, pinned);
    const auto local_size = local.count();
    if (local_size > 1 && local_size > best_size) {
      best_size = local_size;
      best = Improvement{u, std::move(local)};
    }
  }
  return best;
}

bool apply_improvement(const Graph& g, CandidateState& st, const Improvement& imp) {
  const auto u = imp.u_swapped;
  const auto& inserted = imp.c_improve;
  if (inserted.count() < 2) throw std::invalid_argument("an improvement must insert at least two vertices");
  if (u >= g.order() || !st.q.test(u)) throw std::invalid_argument("swapped vertex is not in the solution");
  if (!inserted.is_subset_of(st.cand[u]) || !is_clique(g, inserted))
    throw std::invalid_argument("inserted vertices must be a clique of the vertices pinned to the swapped vertex");

  st.q.reset(u);
  st.q |= inserted;
  // u was adjacent to the rest of the old solution and to none of the
  // inserted vertices.
  st.cand[u] = inserted;
  for (auto w : inserted) st.cand[w].clear();

  bool free_vertex = false;
  for (auto v : st.sg - st.q) {
    if (v == u) continue;
    auto& nonadj = st.cand[v];
    const auto was_pinned_to = sole_member(nonadj);
    nonadj.reset(u);
    nonadj |= inserted - g.neighbors(v);
    if (nonadj.empty()) free_vertex = true;
    const auto now_pinned_to = sole_member(nonadj);
    if (was_pinned_to == now_pinned_to) continue;
    if (was_pinned_to && *was_pinned_to != u) st.cand[*was_pinned_to].reset(v);
    if (now_pinned_to) st.cand[*now_pinned_to].set(v);
  }

  if (free_vertex) {
    // Unreachable when c_improve is maximal within cand[u], which fvs_qe
    // guarantees; repaired rather than trusted for hand-built improvements.
    st = build_candidates(g, st.sg, plunge_free_vertices(g, st.sg, st.q));
  }
  return free_vertex;
}

void verify_state(const Graph& g, const CandidateState& st) {
  const auto expected = build_candidates(g, st.sg, st.q);
  if (st.cand.size() != expected.cand.size()) throw InvariantViolation("candidate array has the wrong length");
  for (Vertex v = 0; v < g.order(); ++v) {
    if (st.cand[v] == expected.cand[v]) continue;
    const char* role = st.q.test(v) ? "pinned set" : "non-neighbor set";
    throw InvariantViolation("candidate " + std::string(role) + " of vertex " + std::to_string(v) + " is " +
                             describe(st.cand[v]) + ", expected " + describe(expected.cand[v]));
  }
}

VertexSet plunge_free_vertices(const Graph& g, const VertexSet& sg, VertexSet q) {
  auto free = common_neighbors(g, q, sg - q);
  while (!free.empty()) {
    const auto v = free.first();
    q.set(v);
    free.reset(v);
    free &= g.neighbors(v);
  }
  return q;
}

LocalSearchResult improve_clique(const MicroTable& table, const Graph& g, const VertexSet& sg, const VertexSet& seed,
                                 const LocalSearchOptions& options) {
  LocalSearchResult result;
  result.seed_size = seed.count();
  auto st = build_candidates(g, sg, plunge_free_vertices(g, sg, seed));
  if (options.check_invariants) verify_state(g, st);

  while (auto imp = exists_improvement(table, g, st)) {
    result.swap_sizes.push_back(imp->c_improve.count());
    const bool repaired = apply_improvement(g, st, *imp);
    ++result.iterations;
    if (repaired && options.check_invariants)
      throw InvariantViolation("swap at vertex " + std::to_string(imp->u_swapped) + " left a free vertex");
    if (options.check_invariants) verify_state(g, st);
  }
  result.clique = std::move(st.q);
  return result;
}

LocalSearchResult ls_1_k(const MicroTable& table, const Graph& g, const VertexSet& sg, HeuristicKind seed_heuristic,
                         const LocalSearchOptions& options) {
  return improve_clique(table, g, sg, run_heuristic(seed_heuristic, g, sg), options);
}

}  // namespace kswap

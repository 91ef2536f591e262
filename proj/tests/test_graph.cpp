#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "kswap/dimacs.hpp"
#include "kswap/graph.hpp"
#include "kswap/random_graph.hpp"
#include "oracle.hpp"

namespace kswap {
namespace {

void expect_well_formed(const Graph& g) {
  std::size_t degree_sum = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    EXPECT_FALSE(g.adjacent(v, v)) << "self-loop at " << v;
    for (Vertex u = 0; u < g.order(); ++u) EXPECT_EQ(g.adjacent(v, u), g.adjacent(u, v));
    degree_sum += g.neighbors(v).count();
  }
  EXPECT_EQ(degree_sum, 2 * g.edge_count());
}

TEST(VertexSet, BasicOperations) {
  VertexSet s(130);
  EXPECT_TRUE(s.empty());
  EXPECT_EQ(s.first(), 130U);
  s.set(3);
  s.set(64);
  s.set(129);
  EXPECT_EQ(s.count(), 3U);
  EXPECT_EQ(s.to_vector(), (std::vector<Vertex>{3, 64, 129}));
  EXPECT_EQ(s.first(), 3U);
  s.reset(3);
  EXPECT_EQ(s.first(), 64U);

  const auto full = VertexSet::full(130);
  EXPECT_EQ(full.count(), 130U);
  EXPECT_EQ((~full).count(), 0U);
  EXPECT_EQ((~s).count(), 128U);
  EXPECT_TRUE(s.is_subset_of(full));
  EXPECT_EQ((full - s).count(), 128U);
  EXPECT_EQ(full.count_and(s), 2U);
  EXPECT_EQ(full.count_and_not(s), 128U);
}

TEST(VertexSet, IterationMatchesTest) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + rng() % 300;
    const auto s = oracle::random_subset(n, 0.3, rng);
    std::vector<Vertex> expected;
    for (Vertex v = 0; v < n; ++v)
      if (s.test(v)) expected.push_back(v);
    EXPECT_EQ(s.to_vector(), expected);
    EXPECT_EQ(s.count(), expected.size());
  }
}

TEST(Dimacs, ParsesC5) {
  const auto g = read_dimacs_string("c five cycle\np edge 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\n");
  EXPECT_EQ(g.order(), 5U);
  EXPECT_EQ(g.edge_count(), 5U);
  EXPECT_EQ(g, oracle::cycle(5));
  expect_well_formed(g);
}

TEST(Dimacs, EdgelessGraph) {
  const auto g = read_dimacs_string("p edge 3 0\n");
  EXPECT_EQ(g.order(), 3U);
  EXPECT_EQ(g.edge_count(), 0U);
}

TEST(Dimacs, DuplicateEdgesAreIdempotent) {
  const auto g = read_dimacs_string("p edge 3 3\ne 1 2\ne 2 1\ne 1 2\n");
  EXPECT_EQ(g.edge_count(), 1U);
  EXPECT_TRUE(g.adjacent(0, 1));
}

TEST(Dimacs, ErrorsCarryLineNumbers) {
  auto line_of = [](const std::string& text) -> std::size_t {
    try {
      read_dimacs_string(text);
    } catch (const DimacsError& e) {
      return e.line();
    }
    return 9999;
  };
  EXPECT_EQ(line_of("p edge 2 1\ne 1 3\n"), 2U);            // endpoint out of range
  EXPECT_EQ(line_of("c x\np edge 2 1\ne 0 1\n"), 3U);       // 0 is not a DIMACS index
  EXPECT_EQ(line_of("p edge 3 1\ne 2 2\n"), 2U);            // self-loop
  EXPECT_EQ(line_of("e 1 2\np edge 2 1\n"), 1U);            // edge before problem line
  EXPECT_EQ(line_of("p edge x 1\n"), 1U);                   // malformed problem line
  EXPECT_EQ(line_of("p clique 3 1\n"), 1U);
  EXPECT_EQ(line_of("p edge 3 1\ne 1\n"), 2U);
  EXPECT_EQ(line_of("c only comments\n"), 0U);              // missing problem line
}

TEST(Dimacs, OutOfRangeMessage) {
  try {
    read_dimacs_string("p edge 2 1\ne 1 3\n");
    FAIL() << "expected DimacsError";
  } catch (const DimacsError& e) {
    EXPECT_NE(std::string(e.what()).find("out of range"), std::string::npos);
  }
}

TEST(Dimacs, WriterFormat) {
  EXPECT_EQ(to_dimacs_string(oracle::cycle(4)), "p edge 4 4\ne 1 2\ne 1 4\ne 2 3\ne 3 4\n");
}

TEST(Dimacs, RoundTripIsBitIdentical) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto g = gen_random(60 + seed, 0.05 * static_cast<double>(seed % 20), seed);
    const auto back = read_dimacs_string(to_dimacs_string(g));
    EXPECT_EQ(back, g);
    EXPECT_EQ(back.edge_count(), g.edge_count());
  }
}

TEST(Complement, CompleteAndEdgeless) {
  const auto c = complement(oracle::complete(3));
  EXPECT_EQ(c.order(), 3U);
  EXPECT_EQ(c.edge_count(), 0U);
  const auto one = complement(Graph(1));
  EXPECT_EQ(one.order(), 1U);
  EXPECT_EQ(one.edge_count(), 0U);
}

TEST(Complement, OfC5) {
  const auto c = complement(oracle::cycle(5));
  EXPECT_EQ(c, Graph::from_edges(5, {{0, 2}, {0, 3}, {1, 3}, {1, 4}, {2, 4}}));
}

TEST(Complement, InvolutionAndDuality) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 90;
    const auto g = oracle::random_graph(n, 0.5, rng);
    const auto c = complement(g);
    expect_well_formed(c);
    EXPECT_EQ(complement(c), g);
    EXPECT_EQ(c.edge_count() + g.edge_count(), n * (n - 1) / 2);

    // A clique of g is an independent set of its complement.
    const auto s = oracle::random_subset(n, 4.0 / static_cast<double>(n), rng);
    const auto members = s.to_vector();
    bool independent_in_c = true;
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j) independent_in_c &= !c.adjacent(members[i], members[j]);
    EXPECT_EQ(is_clique(g, s), independent_in_c);
  }
}

TEST(RandomGraph, ExtremeDensities) {
  for (std::uint64_t seed : {0ULL, 1ULL, 99ULL}) {
    EXPECT_EQ(gen_random(100, 0.0, seed).edge_count(), 0U);
    EXPECT_EQ(gen_random(100, 1.0, seed), oracle::complete(100));
  }
}

TEST(RandomGraph, Deterministic) {
  const auto a = gen_random(250, 0.5, 42);
  const auto b = gen_random(250, 0.5, 42);
  EXPECT_EQ(a, b);
  EXPECT_NE(a, gen_random(250, 0.5, 43));
  expect_well_formed(a);
}

TEST(RandomGraph, DensityIsRoughlyRespected) {
  const auto g = gen_random(400, 0.3, 5);
  const double pairs = 400.0 * 399.0 / 2.0;
  EXPECT_NEAR(static_cast<double>(g.edge_count()) / pairs, 0.3, 0.01);
}

TEST(RandomGraph, RejectsBadDensity) {
  EXPECT_THROW(gen_random(10, -0.1, 1), std::invalid_argument);
  EXPECT_THROW(gen_random(10, 1.5, 1), std::invalid_argument);
}

TEST(IsClique, Examples) {
  const auto c5 = oracle::cycle(5);
  EXPECT_TRUE(is_clique(c5, VertexSet::of(5, {0, 1})));
  EXPECT_FALSE(is_clique(c5, VertexSet::of(5, {0, 1, 2})));
  EXPECT_TRUE(is_clique(c5, VertexSet(5)));
  EXPECT_TRUE(is_clique(c5, VertexSet::of(5, {3})));
}

TEST(IsClique, AgreesWithPairwiseCheck) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 2 + rng() % 40;
    const auto g = oracle::random_graph(n, 0.7, rng);
    const auto s = oracle::random_subset(n, 0.15, rng);
    EXPECT_EQ(is_clique(g, s), oracle::pairwise_adjacent(g, s.to_vector()));
  }
}

TEST(DegreeWithin, Examples) {
  const auto c5 = oracle::cycle(5);
  EXPECT_EQ(degree_within(c5, 0, c5.all_vertices()), 2U);
  EXPECT_EQ(degree_within(c5, 0, VertexSet::of(5, {1, 2})), 1U);
  const auto k6 = oracle::complete(6);
  EXPECT_EQ(degree_within(k6, 3, k6.all_vertices()), 5U);
}

TEST(GraphBuilder, RejectsBadEdges) {
  GraphBuilder b(3);
  EXPECT_THROW(b.add_edge(0, 3), std::invalid_argument);
  EXPECT_THROW(b.add_edge(1, 1), std::invalid_argument);
  EXPECT_TRUE(b.add_edge(0, 1));
  EXPECT_FALSE(b.add_edge(1, 0));
}

}  // namespace
}  // namespace kswap

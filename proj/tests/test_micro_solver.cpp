#include <gtest/gtest.h>

#include <bitset>
#include <random>
#include <sstream>

#include "kswap/micro_solver.hpp"
#include "oracle.hpp"

namespace kswap {
namespace {

const MicroTable& table() { return default_micro_table(); }

// A 6-vertex chunk of a 139-vertex graph whose packed word is
// 01010 0110 001 10 0. Bit 8, pair (4,2), needs the edge (77, 138).
Graph six_vertex_chunk_graph() {
  return Graph::from_edges(139, {{0, 2}, {0, 29}, {2, 77}, {2, 138}, {14, 29}, {77, 138}});
}
const std::vector<Vertex> kSixVertexChunk = {14, 2, 138, 29, 77, 0};

std::uint16_t from_printed(const std::string& groups) {
  std::string bits;
  for (char c : groups)
    if (c == '0' || c == '1') bits += c;
  return static_cast<std::uint16_t>(std::bitset<15>(bits).to_ulong());
}

TEST(PairBit, Layout) {
  EXPECT_EQ(pair_bit(1, 0), 0);
  EXPECT_EQ(pair_bit(2, 0), 1);
  EXPECT_EQ(pair_bit(2, 1), 2);
  EXPECT_EQ(pair_bit(5, 0), 10);
  EXPECT_EQ(pair_bit(5, 4), 14);
  EXPECT_EQ(pair_bit(0, 5), 10);
}

TEST(PackSubgraph, CycleOfFive) {
  const auto code = pack_subgraph(oracle::cycle(5), oracle::range(5));
  EXPECT_EQ(code.code, 613);
  EXPECT_EQ(code.code, 0x265);
  EXPECT_EQ(code.code, from_printed("00000 1001 100 10 1"));
}

TEST(PackSubgraph, CompleteGraphAnyOrder) {
  const auto k6 = oracle::complete(6);
  std::vector<Vertex> order = {5, 1, 3, 0, 4, 2};
  EXPECT_EQ(pack_subgraph(k6, order).code, 32767);
  EXPECT_EQ(pack_subgraph(k6, oracle::range(6)).code, 0x7fff);
}

TEST(PackSubgraph, EdgelessPair) {
  const std::vector<Vertex> chunk = {65, 2};
  EXPECT_EQ(pack_subgraph(Graph(66), chunk).code, 0);
}

TEST(PackSubgraph, SixVertexChunk) {
  const auto code = pack_subgraph(six_vertex_chunk_graph(), kSixVertexChunk);
  EXPECT_EQ(code.code, from_printed("01010 0110 001 10 0"));
  EXPECT_EQ(code.code, 10636);
}

TEST(PackSubgraph, Errors) {
  const auto g = oracle::complete(8);
  EXPECT_THROW(pack_subgraph(g, oracle::range(7)), std::invalid_argument);
  const std::vector<Vertex> dup = {1, 2, 1};
  EXPECT_THROW(pack_subgraph(g, dup), std::invalid_argument);
  const std::vector<Vertex> outside = {1, 9};
  EXPECT_THROW(pack_subgraph(g, outside), std::invalid_argument);
}

TEST(PackSubgraph, DecodeRoundTrip) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto g = oracle::random_graph(20, 0.5, rng);
    auto pool = oracle::range(20);
    std::shuffle(pool.begin(), pool.end(), rng);
    const std::size_t len = rng() % 7;
    const std::vector<Vertex> chunk(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(len));
    const auto adj = oracle::decode(pack_subgraph(g, chunk).code);
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = 0; j < 6; ++j) {
        const bool expected = i != j && i < len && j < len && g.adjacent(chunk[i], chunk[j]);
        ASSERT_EQ(adj[i][j], expected);
      }
  }
}

TEST(MicroTable, ReferenceEntries) {
  EXPECT_EQ(table()[PackedAdj{613}].bits, 0b000011);
  EXPECT_EQ(table()[PackedAdj{32767}].bits, 0b111111);
  EXPECT_EQ(table()[PackedAdj{0}].bits, 0b000001);
  EXPECT_EQ(table()[PackedAdj{10636}].bits, 0b010110);
}

TEST(MicroTable, ExhaustivelyMaximumWithSmallestMask) {
  ASSERT_EQ(table().size(), 32768U);
  for (unsigned code = 0; code < 32768; ++code) {
    const auto adj = oracle::decode(static_cast<std::uint16_t>(code));
    const auto entry = table()[PackedAdj{static_cast<std::uint16_t>(code)}].bits;
    ASSERT_TRUE(oracle::mask_is_clique(adj, entry)) << code;
    const int best = oracle::max_clique_size_6(static_cast<std::uint16_t>(code));
    ASSERT_EQ(__builtin_popcount(entry), best) << code;
    for (unsigned smaller = 0; smaller < entry; ++smaller)
      ASSERT_FALSE(__builtin_popcount(smaller) == best && oracle::mask_is_clique(adj, smaller)) << code;
  }
}

TEST(MicroTable, PaddingVerticesNeverSelected) {
  for (int len = 1; len < 6; ++len) {
    const unsigned codes = 1U << pair_count(len);
    for (unsigned code = 0; code < codes; ++code)
      ASSERT_EQ(table()[PackedAdj{static_cast<std::uint16_t>(code)}].bits >> len, 0U) << "len " << len << " code " << code;
  }
}

TEST(MicroTable, SmallerOrdersAreExact) {
  for (int order : {4, 5}) {
    const MicroTable t(order);
    EXPECT_EQ(t.size(), std::size_t{1} << pair_count(order));
    for (unsigned code = 0; code < t.size(); ++code)
      ASSERT_EQ(t[PackedAdj{static_cast<std::uint16_t>(code)}], table()[PackedAdj{static_cast<std::uint16_t>(code)}]);
  }
}

TEST(MicroTable, DumpLoadRoundTrip) {
  std::stringstream buffer;
  table().dump(buffer);
  EXPECT_EQ(buffer.str().size(), 32768U);
  const auto loaded = MicroTable::load(buffer);
  EXPECT_TRUE(std::equal(loaded.bytes().begin(), loaded.bytes().end(), table().bytes().begin()));
  EXPECT_FALSE(find_non_maximum_entry(loaded).has_value());
}

TEST(MicroTable, LoadRejectsBadTables) {
  std::vector<std::uint8_t> bytes(table().bytes().begin(), table().bytes().end());
  EXPECT_THROW(MicroTable::from_bytes(std::span(bytes).first(100)), MicroTableError);

  auto high_bits = bytes;
  high_bits[5] |= 0x40;
  EXPECT_THROW(MicroTable::from_bytes(high_bits), MicroTableError);

  auto non_clique = bytes;
  non_clique[0] = 0b11;  // edgeless code, two vertices
  EXPECT_THROW(MicroTable::from_bytes(non_clique), MicroTableError);

  // Valid clique, but not maximum: accepted by load, caught by verification.
  auto weak = bytes;
  weak[32767] = 0b1;
  const auto loaded = MicroTable::from_bytes(weak);
  EXPECT_EQ(find_non_maximum_entry(loaded), std::optional<std::uint16_t>(32767));
}

TEST(Lookup, ReferenceChunks) {
  EXPECT_EQ(lookup(table(), six_vertex_chunk_graph(), kSixVertexChunk), VertexSet::of(139, {2, 138, 77}));
  EXPECT_EQ(lookup(table(), oracle::cycle(5), oracle::range(5)), VertexSet::of(5, {0, 1}));
  const std::vector<Vertex> chunk = {65, 2};
  EXPECT_EQ(lookup(table(), Graph(66), chunk), VertexSet::of(66, {65}));
  EXPECT_TRUE(lookup(table(), Graph(3), std::vector<Vertex>{}).empty());
}

TEST(FvsQe, CycleOfFive) {
  const auto c5 = oracle::cycle(5);
  EXPECT_EQ(fvs_qe(table(), c5, c5.all_vertices()), VertexSet::of(5, {0, 1}));
}

TEST(FvsQe, CompleteSeven) {
  const auto k7 = oracle::complete(7);
  EXPECT_EQ(fvs_qe(table(), k7, k7.all_vertices()), k7.all_vertices());
}

TEST(FvsQe, QuasiExactBeyondSixVertices) {
  const auto g = Graph::from_edges(7, {{0, 1}, {2, 3}, {2, 6}, {3, 6}});
  EXPECT_EQ(fvs_qe(table(), g, g.all_vertices()), VertexSet::of(7, {0, 1}));
  EXPECT_EQ(oracle::max_clique_size(g), 3U);
}

TEST(FvsQe, EmptyInput) {
  const auto g = oracle::complete(4);
  EXPECT_TRUE(fvs_qe(table(), g, VertexSet(4)).empty());
}

TEST(FvsQe, ExactForEverySixVertexGraph) {
  for (unsigned code = 0; code < 32768; ++code) {
    const auto g = oracle::graph_from_code(static_cast<std::uint16_t>(code));
    const auto q = fvs_qe(table(), g, g.all_vertices());
    ASSERT_EQ(q.count(), static_cast<std::size_t>(oracle::max_clique_size_6(static_cast<std::uint16_t>(code))))
        << code;
  }
}

TEST(FvsQe, ExactOnSubsetsOfAtMostSixVertices) {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto g = oracle::random_graph(30, 0.5, rng);
    auto pool = oracle::range(30);
    std::shuffle(pool.begin(), pool.end(), rng);
    const std::vector<Vertex> members(pool.begin(), pool.begin() + 1 + static_cast<std::ptrdiff_t>(rng() % 6));
    const auto q = fvs_qe(table(), g, VertexSet::of(30, members));
    ASSERT_EQ(q.count(), oracle::max_clique_size(g, members));
  }
}

TEST(FvsQe, AlwaysMaximalCliqueWithinSubgraph) {
  std::mt19937 rng(29);
  const MicroTable order4(4);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 200;
    const double d = 0.1 + 0.1 * static_cast<double>(rng() % 9);
    const auto g = oracle::random_graph(n, d, rng);
    const auto sg = oracle::random_subset(n, 0.7, rng);
    for (const MicroTable* t : {&table(), &order4}) {
      const auto q = fvs_qe(*t, g, sg);
      ASSERT_TRUE(q.is_subset_of(sg));
      ASSERT_TRUE(oracle::pairwise_adjacent(g, q.to_vector()));
      ASSERT_TRUE(oracle::maximal_within(g, q.to_vector(), sg.to_vector()));
    }
  }
}

}  // namespace
}  // namespace kswap

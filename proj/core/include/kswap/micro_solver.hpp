#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "kswap/graph.hpp"

namespace kswap {

/// Exact maximum clique of graphs with at most six vertices by table lookup,
/// and the chunked quasi-exact solver built on it.
///
/// A graph on local vertices 0..k-1 (k <= 6) is packed into a 15-bit
/// triangular adjacency code: the pair (i, j) with i > j lives at bit
/// i*(i-1)/2 + j, so bit 0 is (1,0), bit 2 is (2,1) and bit 14 is (5,4).
/// Local indices past the chunk length are isolated padding vertices.

inline constexpr int kMicroOrder = 6;

constexpr int pair_count(int order) { return order * (order - 1) / 2; }

/// Bit index of the local pair (i, j), i != j.
constexpr int pair_bit(int i, int j) { return i > j ? i * (i - 1) / 2 + j : j * (j - 1) / 2 + i; }

struct PackedAdj {
  std::uint16_t code = 0;
  bool operator==(const PackedAdj&) const = default;
  bool has_edge(int i, int j) const { return (code >> pair_bit(i, j)) & 1U; }
};

/// Bit i set iff local vertex i belongs to the clique.
struct CliqueMask {
  std::uint8_t bits = 0;
  bool operator==(const CliqueMask&) const = default;
  int size() const { return __builtin_popcount(bits); }
  bool contains(int i) const { return (bits >> i) & 1U; }
};

/// Packed pair bits that must all be present for `mask` to be a clique.
constexpr std::uint16_t required_pairs(std::uint8_t mask) {
  std::uint16_t bits = 0;
  for (int i = 1; i < kMicroOrder; ++i)
    for (int j = 0; j < i; ++j)
      if (((mask >> i) & 1U) && ((mask >> j) & 1U)) bits |= static_cast<std::uint16_t>(1U << pair_bit(i, j));
  return bits;
}

inline bool is_clique_under(PackedAdj adj, CliqueMask mask) {
  const auto need = required_pairs(mask.bits);
  return (adj.code & need) == need;
}

class MicroTableError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Maps every packed code of an `order`-vertex graph to the maximum clique
/// with the numerically smallest mask. Only order 6 is used by the solvers;
/// orders 4 and 5 exist for testing the chunking logic.
class MicroTable {
 public:
  explicit MicroTable(int order = kMicroOrder);

  /// Validates and adopts a raw table: one byte per code, only the low
  /// `order` bits set, each a clique under its code.
  static MicroTable from_bytes(std::span<const std::uint8_t> bytes, int order = kMicroOrder);
  static MicroTable load(std::istream& in);
  static MicroTable load_file(const std::filesystem::path& path);

  int order() const { return order_; }
  std::size_t size() const { return entries_.size(); }
  CliqueMask operator[](PackedAdj adj) const { return CliqueMask{entries_[adj.code]}; }
  std::span<const std::uint8_t> bytes() const { return entries_; }

  void dump(std::ostream& out) const;
  void dump_file(const std::filesystem::path& path) const;

 private:
  MicroTable(int order, std::vector<std::uint8_t> entries) : order_(order), entries_(std::move(entries)) {}

  int order_;
  std::vector<std::uint8_t> entries_;
};

/// Exhaustively checks that every entry is a maximum clique of its code.
/// Returns the first offending code, or nullopt when the table is exact.
std::optional<std::uint16_t> find_non_maximum_entry(const MicroTable& table);

/// Process-wide order-6 table, built on first use.
const MicroTable& default_micro_table();

/// Packs the adjacency of the induced subgraph on `chunk`; chunk position is
/// the local index. Throws std::invalid_argument for chunks longer than
/// `order` or with repeated vertices.
PackedAdj pack_subgraph(const Graph& g, std::span<const Vertex> chunk, int order = kMicroOrder);

/// Maximum clique of the induced subgraph on `chunk`, in original vertex ids.
VertexSet lookup(const MicroTable& table, const Graph& g, std::span<const Vertex> chunk);

/// Quasi-exact maximal clique within `sg`: repeatedly solves the first
/// table.order() vertices of the working set exactly, adds that local
/// solution, and shrinks the working set to the common neighbors of the local
/// solution. Exact when |sg| <= table.order(); maximal within sg always.
VertexSet fvs_qe(const MicroTable& table, const Graph& g, const VertexSet& sg);

}  // namespace kswap

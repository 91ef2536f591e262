#include "kswap/micro_solver.hpp"

#include <array>
#include <fstream>
#include <istream>
#include <iterator>
#include <ostream>
#include <string>

namespace kswap {

namespace {

void check_order(int order) {
  if (order < 1 || order > kMicroOrder)
    throw std::invalid_argument("micro table order must be in [1, 6], got " + std::to_string(order));
}

const std::array<std::uint16_t, 64>& required_pair_table() {
  static const auto table = [] {
    std::array<std::uint16_t, 64> t{};
    for (unsigned mask = 0; mask < 64; ++mask) t[mask] = required_pairs(static_cast<std::uint8_t>(mask));
    return t;
  }();
  return table;
}

}  // namespace

MicroTable::MicroTable(int order) : order_(order) {
  check_order(order);
  const auto& need = required_pair_table();
  const std::size_t codes = std::size_t{1} << pair_count(order);
  const unsigned masks = 1U << order;
  entries_.resize(codes);
  for (std::size_t code = 0; code < codes; ++code) {
    // Ascending scan keeping only strictly larger cliques yields the
    // smallest mask among the maximum ones.
    unsigned best = 0;
    int best_size = 0;
    for (unsigned mask = 1; mask < masks; ++mask) {
      const int size = __builtin_popcount(mask);
      if (size > best_size && (code & need[mask]) == need[mask]) {
        best = mask;
        best_size = size;
      }
    }
    entries_[code] = static_cast<std::uint8_t>(best);
  }
}

MicroTable MicroTable::from_bytes(std::span<const std::uint8_t> bytes, int order) {
  check_order(order);
  const std::size_t codes = std::size_t{1} << pair_count(order);
  if (bytes.size() != codes)
    throw MicroTableError("micro table must hold exactly " + std::to_string(codes) + " entries, got " +
                          std::to_string(bytes.size()));
  const unsigned valid_bits = (1U << order) - 1;
  for (std::size_t code = 0; code < codes; ++code) {
    const auto mask = bytes[code];
    if (mask & ~valid_bits)
      throw MicroTableError("entry " + std::to_string(code) + " has bits outside the low " + std::to_string(order));
    if (mask == 0)
      throw MicroTableError("entry " + std::to_string(code) + " is empty");
    if (!is_clique_under(PackedAdj{static_cast<std::uint16_t>(code)}, CliqueMask{mask}))
      throw MicroTableError("entry " + std::to_string(code) + " is not a clique of its graph");
  }
  return MicroTable(order, std::vector<std::uint8_t>(bytes.begin(), bytes.end()));
}

MicroTable MicroTable::load(std::istream& in) {
  std::vector<std::uint8_t> bytes{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return from_bytes(bytes);
}

MicroTable MicroTable::load_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MicroTableError("cannot open " + path.string());
  return load(in);
}

void MicroTable::dump(std::ostream& out) const {
  out.write(reinterpret_cast<const char*>(entries_.data()), static_cast<std::streamsize>(entries_.size()));
}

void MicroTable::dump_file(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw MicroTableError("cannot write " + path.string());
  dump(out);
  if (!out) throw MicroTableError("write failed for " + path.string());
}

std::optional<std::uint16_t> find_non_maximum_entry(const MicroTable& table) {
  const unsigned masks = 1U << table.order();
  for (std::size_t code = 0; code < table.size(); ++code) {
    const PackedAdj adj{static_cast<std::uint16_t>(code)};
    const auto entry = table[adj];
    if (!is_clique_under(adj, entry)) return adj.code;
    for (unsigned mask = 1; mask < masks; ++mask) {
      const CliqueMask candidate{static_cast<std::uint8_t>(mask)};
      if (candidate.size() > entry.size() && is_clique_under(adj, candidate)) return adj.code;
    }
  }
  return std::nullopt;
}

const MicroTable& default_micro_table() {
  static const MicroTable table(kMicroOrder);
  return table;
}

PackedAdj pack_subgraph(const Graph& g, std::span<const Vertex> chunk, int order) {
  if (chunk.size() > static_cast<std::size_t>(order))
    throw std::invalid_argument("chunk of " + std::to_string(chunk.size()) + " vertices exceeds order " +
                                std::to_string(order));
  for (auto v : chunk)
    if (v >= g.order()) throw std::invalid_argument("chunk vertex " + std::to_string(v) + " is not in the graph");
  std::uint16_t code = 0;
  for (std::size_t i = 1; i < chunk.size(); ++i) {
    const auto& row = g.neighbors(chunk[i]);
    for (std::size_t j = 0; j < i; ++j) {
      if (chunk[i] == chunk[j])
        throw std::invalid_argument("vertex " + std::to_string(chunk[i]) + " repeated in chunk");
      if (row.test(chunk[j]))
        code |= static_cast<std::uint16_t>(1U << pair_bit(static_cast<int>(i), static_cast<int>(j)));
    }
  }
  return PackedAdj{code};
}

VertexSet lookup(const MicroTable& table, const Graph& g, std::span<const Vertex> chunk) {
  VertexSet result(g.order());
  if (chunk.empty()) return result;
  const auto mask = table[pack_subgraph(g, chunk, table.order())];
  for (std::size_t i = 0; i < chunk.size(); ++i)
    if (mask.contains(static_cast<int>(i))) result.set(chunk[i]);
  return result;
}

VertexSet fvs_qe(const MicroTable& table, const Graph& g, const VertexSet& sg) {
  VertexSet clique(g.order());
  VertexSet work = sg;
  std::array<Vertex, kMicroOrder> chunk{};
  const auto chunk_limit = static_cast<std::size_t>(table.order());
  while (!work.empty()) {
    std::size_t len = 0;
    for (auto v : work) {
      chunk[len++] = v;
      if (len == chunk_limit) break;
    }
    for (std::size_t i = 0; i < len; ++i) work.reset(chunk[i]);

    const auto mask = table[pack_subgraph(g, std::span<const Vertex>(chunk.data(), len), table.order())];
    for (std::size_t i = 0; i < len; ++i) {
      if (!mask.contains(static_cast<int>(i))) continue;
      clique.set(chunk[i]);
      work &= g.neighbors(chunk[i]);
    }
  }
  return clique;
}

}  // namespace kswap

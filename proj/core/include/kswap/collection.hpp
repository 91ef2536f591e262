#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "kswap/graph.hpp"

namespace kswap {

/// Parameters of a random collection:
///
///   repeat n_rpt times:
///     for n = n0; n < nN; n += nI:
///       for d = d0; d < dN (or <= dN when dN_inclusive); d += dI:
///         emit G(n, d)
///
/// A single engine seeded once with `seed` feeds every graph in turn.
struct GenRnSpec {
  std::size_t n_rpt = 1;
  std::size_t n0 = 0;
  std::size_t nI = 1;
  std::size_t nN = 0;
  double d0 = 0.1;
  double dI = 0.2;
  double dN = 0.9;
  bool dN_inclusive = true;
  std::uint64_t seed = 1;

  /// Throws std::invalid_argument unless nI > 0, dI > 0 and densities lie in [0, 1].
  void validate() const;
  std::vector<std::size_t> orders() const;
  std::vector<double> densities() const;
  std::size_t graph_count() const { return n_rpt * orders().size() * densities().size(); }
};

/// Presets c1, c2, c3 (seed 1, density bound inclusive). Throws
/// std::invalid_argument for other names.
GenRnSpec preset_spec(std::string_view name);

/// Parses "n_rpt,n0,nI,nN,d0,dI,dN,seed" (density bound inclusive).
GenRnSpec parse_spec(std::string_view text);

/// Divides n0, nI and nN by `divisor` (nI and n0 kept >= 1).
GenRnSpec scaled(GenRnSpec spec, std::size_t divisor);

struct GeneratedInstance {
  std::string id;  // rn_n<n>_d<density>_r<repetition>
  std::size_t n = 0;
  double density = 0.0;
  std::size_t repetition = 0;
  Graph graph;
};

/// Streams the collection one graph at a time, in generation order.
void for_each_generated(const GenRnSpec& spec, const std::function<void(GeneratedInstance&&)>& visit);

std::vector<GeneratedInstance> gen_collection(const GenRnSpec& spec);

}  // namespace kswap

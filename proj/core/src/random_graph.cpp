#include "kswap/random_graph.hpp"

#include <stdexcept>
#include <string>

namespace kswap {

Graph gen_random(std::size_t n, double density, RandomEngine& engine) {
  if (!(density >= 0.0 && density <= 1.0))
    throw std::invalid_argument("density " + std::to_string(density) + " outside [0, 1]");
  GraphBuilder builder(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (unit_interval(engine) < density) builder.add_edge(u, v);
  return std::move(builder).build();
}

Graph gen_random(std::size_t n, double density, std::uint64_t seed) {
  RandomEngine engine(seed);
  return gen_random(n, density, engine);
}

}  // namespace kswap

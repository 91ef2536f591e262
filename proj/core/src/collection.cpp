#include "kswap/collection.hpp"

#include <charconv>
#include <cstdio>
#include <stdexcept>

#include "kswap/random_graph.hpp"

namespace kswap {

namespace {

// Densities are computed as d0 + i*dI rather than accumulated, and compared
// with a small slack so that 0.1 + 4*0.2 counts as 0.9.
constexpr double kDensitySlack = 1e-9;

template <typename T>
T parse_field(std::string_view token, std::string_view what) {
  T value{};
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc{} || ptr != end)
    throw std::invalid_argument("invalid " + std::string(what) + " '" + std::string(token) + "'");
  return value;
}

std::string instance_id(std::size_t n, double d, std::size_t rep) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "rn_n%zu_d%.2f_r%zu", n, d, rep);
  return buf;
}

}  // namespace

void GenRnSpec::validate() const {
  if (nI == 0) throw std::invalid_argument("order increment must be positive");
  if (!(dI > 0.0)) throw std::invalid_argument("density increment must be positive");
  if (!(d0 >= 0.0 && d0 <= 1.0)) throw std::invalid_argument("initial density must lie in [0, 1]");
}

std::vector<std::size_t> GenRnSpec::orders() const {
  validate();
  std::vector<std::size_t> out;
  for (auto n = n0; n < nN; n += nI) out.push_back(n);
  return out;
}

std::vector<double> GenRnSpec::densities() const {
  validate();
  std::vector<double> out;
  for (std::size_t i = 0;; ++i) {
    const double d = d0 + static_cast<double>(i) * dI;
    const bool inside = dN_inclusive ? d <= dN + kDensitySlack : d < dN - kDensitySlack;
    if (!inside || d > 1.0 + kDensitySlack) break;
    out.push_back(std::min(d, 1.0));
  }
  return out;
}

GenRnSpec preset_spec(std::string_view name) {
  if (name == "c1") return GenRnSpec{100, 250, 250, 999, 0.1, 0.2, 0.9, true, 1};
  if (name == "c2") return GenRnSpec{50, 1000, 500, 9999, 0.1, 0.2, 0.9, true, 1};
  if (name == "c3") return GenRnSpec{10, 10000, 5000, 50000, 0.1, 0.2, 0.9, true, 1};
  throw std::invalid_argument("unknown preset '" + std::string(name) + "', expected c1, c2 or c3");
}

GenRnSpec parse_spec(std::string_view text) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    fields.push_back(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (fields.size() != 8)
    throw std::invalid_argument("spec needs 8 comma-separated fields n_rpt,n0,nI,nN,d0,dI,dN,seed");
  GenRnSpec spec;
  spec.n_rpt = parse_field<std::size_t>(fields[0], "n_rpt");
  spec.n0 = parse_field<std::size_t>(fields[1], "n0");
  spec.nI = parse_field<std::size_t>(fields[2], "nI");
  spec.nN = parse_field<std::size_t>(fields[3], "nN");
  spec.d0 = parse_field<double>(fields[4], "d0");
  spec.dI = parse_field<double>(fields[5], "dI");
  spec.dN = parse_field<double>(fields[6], "dN");
  spec.seed = parse_field<std::uint64_t>(fields[7], "seed");
  spec.validate();
  return spec;
}

GenRnSpec scaled(GenRnSpec spec, std::size_t divisor) {
  if (divisor == 0) throw std::invalid_argument("scale divisor must be positive");
  spec.n0 = std::max<std::size_t>(1, spec.n0 / divisor);
  spec.nI = std::max<std::size_t>(1, spec.nI / divisor);
  spec.nN = spec.nN / divisor;
  return spec;
}

void for_each_generated(const GenRnSpec& spec, const std::function<void(GeneratedInstance&&)>& visit) {
  const auto orders = spec.orders();
  const auto densities = spec.densities();
  RandomEngine engine(spec.seed);
  for (std::size_t rep = 0; rep < spec.n_rpt; ++rep)
    for (auto n : orders)
      for (auto d : densities) visit(GeneratedInstance{instance_id(n, d, rep), n, d, rep, gen_random(n, d, engine)});
}

std::vector<GeneratedInstance> gen_collection(const GenRnSpec& spec) {
  std::vector<GeneratedInstance> out;
  for_each_generated(spec, [&](GeneratedInstance&& inst) { out.push_back(std::move(inst)); });
  return out;
}

}  // namespace kswap

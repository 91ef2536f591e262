#include "kswap/dimacs.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string_view>
#include <vector>

namespace kswap {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    const auto start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

std::optional<std::uint64_t> parse_uint(std::string_view token) {
  std::uint64_t value = 0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc{} || ptr != end) return std::nullopt;
  return value;
}

}  // namespace

DimacsError::DimacsError(std::size_t line, const std::string& message, const std::string& source)
    : std::runtime_error((source.empty() ? std::string() : source + ":") +
                         (line == 0 ? std::string() : "line " + std::to_string(line) + ": ") + message),
      line_(line),
      message_(message) {}

Graph read_dimacs(std::istream& in) {
  std::optional<GraphBuilder> builder;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = trim(raw);
    if (line.empty() || line[0] == 'c') continue;
    const auto tokens = split_ws(line);
    if (tokens[0] == "p") {
      if (builder) throw DimacsError(line_no, "duplicate problem line");
      if (tokens.size() != 4 || (tokens[1] != "edge" && tokens[1] != "col"))
        throw DimacsError(line_no, "malformed problem line, expected 'p edge <n> <m>'");
      const auto n = parse_uint(tokens[2]);
      const auto m = parse_uint(tokens[3]);
      if (!n || !m) throw DimacsError(line_no, "malformed problem line, non-numeric order or size");
      if (*n > (std::uint64_t{1} << 31)) throw DimacsError(line_no, "graph order too large");
      builder.emplace(static_cast<std::size_t>(*n));
    } else if (tokens[0] == "e") {
      if (!builder) throw DimacsError(line_no, "edge line before problem line");
      if (tokens.size() != 3) throw DimacsError(line_no, "malformed edge line, expected 'e <u> <v>'");
      const auto u = parse_uint(tokens[1]);
      const auto v = parse_uint(tokens[2]);
      if (!u || !v) throw DimacsError(line_no, "malformed edge line, non-numeric endpoint");
      const auto n = builder->order();
      if (*u < 1 || *u > n || *v < 1 || *v > n)
        throw DimacsError(line_no, "endpoint out of range [1, " + std::to_string(n) + "]");
      if (*u == *v) throw DimacsError(line_no, "self-loop on vertex " + std::to_string(*u));
      builder->add_edge(static_cast<Vertex>(*u - 1), static_cast<Vertex>(*v - 1));
    } else {
      throw DimacsError(line_no, "unrecognized line type '" + std::string(tokens[0]) + "'");
    }
  }
  if (!builder) throw DimacsError(0, "missing problem line");
  return std::move(*builder).build();
}

Graph read_dimacs_string(const std::string& text) {
  std::istringstream in(text);
  return read_dimacs(in);
}

Graph read_dimacs_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  try {
    return read_dimacs(in);
  } catch (const DimacsError& e) {
    throw DimacsError(e.line(), e.message(), path.string());
  }
}

void write_dimacs(const Graph& g, std::ostream& out, const std::string& comment) {
  if (!comment.empty()) out << "c " << comment << '\n';
  out << "p edge " << g.order() << ' ' << g.edge_count() << '\n';
  for (Vertex u = 0; u < g.order(); ++u)
    for (auto v : g.neighbors(u))
      if (v > u) out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

std::string to_dimacs_string(const Graph& g) {
  std::ostringstream out;
  write_dimacs(g, out);
  return out.str();
}

void write_dimacs_file(const Graph& g, const std::filesystem::path& path, const std::string& comment) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  write_dimacs(g, out, comment);
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace kswap

#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "kswap/graph.hpp"

namespace kswap {

/// Raised for malformed DIMACS input. `line()` is 1-based; 0 means the error
/// is not tied to a specific line (e.g. a missing problem line).
class DimacsError : public std::runtime_error {
 public:
  DimacsError(std::size_t line, const std::string& message, const std::string& source = {});
  std::size_t line() const { return line_; }
  const std::string& message() const { return message_; }

 private:
  std::size_t line_;
  std::string message_;
};

/// Parses the ASCII DIMACS clique format:
///
///   c <comment>
///   p edge <n> <m>
///   e <u> <v>        (1-indexed endpoints)
///
/// Duplicate edge lines are accepted. The declared m is informational; the
/// returned graph counts distinct edges.
Graph read_dimacs(std::istream& in);
Graph read_dimacs_string(const std::string& text);
Graph read_dimacs_file(const std::filesystem::path& path);

/// Writes `p edge n m` followed by one `e u v` line per edge, u < v, 1-indexed.
void write_dimacs(const Graph& g, std::ostream& out, const std::string& comment = {});
std::string to_dimacs_string(const Graph& g);
void write_dimacs_file(const Graph& g, const std::filesystem::path& path, const std::string& comment = {});

}  // namespace kswap

#include "kswap/report.hpp"

#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string_view>

namespace kswap {

namespace {

std::string fixed3(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", value);
  return buf;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_commas(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    out.push_back(trim(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
    if (comma == std::string_view::npos) return out;
    start = comma + 1;
  }
}

}  // namespace

void emit_csv(const MeasureReport& report, const std::vector<BenchRecord>& records, std::ostream& sink,
              const std::vector<std::pair<std::string, std::string>>& metadata) {
  if (report.rows.size() != records.size()) throw std::invalid_argument("report does not match the records");
  sink << kCsvHeader << '\n';
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& r = records[i];
    sink << r.instance_id << ',' << r.n << ',' << r.m << ',' << problem_name(r.problem) << ',' << r.algorithm << ','
         << r.solution_size << ',' << r.elapsed.count() << ',' << fixed3(report.rows[i].r_solution) << ','
         << fixed3(report.rows[i].r_time) << '\n';
  }
  sink << '\n';
  for (const auto& [key, value] : metadata) sink << "# " << key << '=' << value << '\n';
  sink << "# summary\n" << kSummaryHeader << '\n';
  for (const auto& s : report.summary)
    sink << s.algorithm << ',' << s.problem << ',' << s.instances << ',' << fixed3(s.mean_solution) << ','
         << fixed3(s.mean_time) << '\n';
  sink.flush();
  if (!sink) throw std::runtime_error("failed to write CSV report");
}

BestKnown read_best_known(std::istream& in) {
  BestKnown known;
  std::string raw;
  std::size_t line_no = 0;
  bool first_row = true;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto fields = split_commas(line);
    if (fields.size() != 2 && fields.size() != 3)
      throw std::runtime_error("best-known line " + std::to_string(line_no) + ": expected 2 or 3 columns");
    const auto size_field = fields.back();
    std::size_t size = 0;
    const auto [ptr, ec] = std::from_chars(size_field.data(), size_field.data() + size_field.size(), size);
    const bool numeric = ec == std::errc{} && ptr == size_field.data() + size_field.size();
    if (!numeric) {
      if (first_row) {
        first_row = false;
        continue;
      }
      throw std::runtime_error("best-known line " + std::to_string(line_no) + ": size is not a number");
    }
    first_row = false;
    const std::string instance(fields[0]);
    if (fields.size() == 2) {
      known.set(instance, size);
    } else {
      const auto mode = parse_problem(fields[1]);
      if (!mode) throw std::runtime_error("best-known line " + std::to_string(line_no) + ": problem must be mcp or mis");
      known.set(instance, *mode, size);
    }
  }
  return known;
}

}  // namespace kswap

#include "results.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <map>
#include <tuple>

#include "hamdec/errors.hpp"

namespace hamdec::cli {

namespace {

constexpr std::string_view kHeader =
    "instance_id,generator,n,directed,algorithm,seed,verdict,iterations,"
    "cuts_added,time_ms,multi_edges";

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    fields.push_back(line.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

template <typename T>
T number(std::string_view text, const char* column) {
  T value{};
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw InputError(std::string("bad value in column ") + column + ": \"" +
                     std::string(text) + "\"");
  }
  return value;
}

std::string format_ms(double ms) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.3f", ms);
  return buffer;
}

}  // namespace

std::string_view csv_header() { return kHeader; }

std::string to_csv(const ResultRow& row) {
  std::string out;
  out += row.instance_id + ',' + row.generator + ',' + std::to_string(row.n) +
         ',' + (row.directed ? "1" : "0") + ',' + row.algorithm + ',' +
         std::to_string(row.seed) + ',' + row.verdict + ',' +
         std::to_string(row.iterations) + ',' + std::to_string(row.cuts_added) +
         ',' + (row.time_ms ? format_ms(*row.time_ms) : "-") + ',' +
         std::to_string(row.multi_edges);
  return out;
}

ResultRow parse_csv_row(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  const auto f = split(line);
  if (f.size() != 11) {
    throw InputError("expected 11 CSV fields, got " + std::to_string(f.size()));
  }
  ResultRow row;
  row.instance_id = f[0];
  row.generator = f[1];
  row.n = number<int>(f[2], "n");
  if (f[3] != "0" && f[3] != "1") throw InputError("bad directed flag");
  row.directed = f[3] == "1";
  row.algorithm = f[4];
  row.seed = number<std::uint64_t>(f[5], "seed");
  row.verdict = f[6];
  row.iterations = number<int>(f[7], "iterations");
  row.cuts_added = number<int>(f[8], "cuts_added");
  if (f[9] != "-") row.time_ms = number<double>(f[9], "time_ms");
  row.multi_edges = number<int>(f[10], "multi_edges");
  return row;
}

std::vector<ResultRow> parse_csv(std::string_view text) {
  std::vector<ResultRow> rows;
  bool header = true;
  while (!text.empty()) {
    const std::size_t end = text.find('\n');
    const std::string_view line = text.substr(0, end);
    text = end == std::string_view::npos ? std::string_view{}
                                         : text.substr(end + 1);
    if (line.empty()) continue;
    if (header) {
      header = false;
      continue;
    }
    rows.push_back(parse_csv_row(line));
  }
  return rows;
}

ResultRow make_row(std::string instance_id, std::string generator,
                   const UnionMultigraph& g, std::uint64_t seed,
                   const RunResult& result, bool mask_time) {
  ResultRow row;
  row.instance_id = std::move(instance_id);
  row.generator = std::move(generator);
  row.n = g.n();
  row.directed = g.directed();
  row.algorithm = std::string(to_string(result.algorithm));
  row.seed = seed;
  row.verdict = std::string(to_string(result.verdict));
  row.iterations = result.iterations;
  row.cuts_added = result.cuts_added;
  if (!mask_time) {
    row.time_ms =
        std::chrono::duration<double, std::milli>(result.elapsed).count();
  }
  row.multi_edges = g.multi_edges();
  return row;
}

Stat describe(const std::vector<double>& values) {
  Stat s;
  if (values.empty()) return s;
  double sum = 0;
  for (double v : values) sum += v;
  s.mean = sum / static_cast<double>(values.size());
  if (values.size() < 2) return s;
  double sq = 0;
  for (double v : values) sq += (v - s.mean) * (v - s.mean);
  s.stdev = std::sqrt(sq / static_cast<double>(values.size() - 1));
  return s;
}

std::vector<SummaryLine> summarize(const std::vector<ResultRow>& rows) {
  using Key = std::tuple<std::string, int, bool, std::string>;
  struct Group {
    SummaryLine line;
    std::vector<double> times, iterations, multi_edges;
  };
  std::map<Key, std::size_t> index;
  std::vector<Group> groups;
  for (const ResultRow& row : rows) {
    const Key key{row.generator, row.n, row.directed, row.algorithm};
    auto [it, inserted] = index.emplace(key, groups.size());
    if (inserted) {
      Group g;
      g.line.generator = row.generator;
      g.line.n = row.n;
      g.line.directed = row.directed;
      g.line.algorithm = row.algorithm;
      groups.push_back(std::move(g));
    }
    Group& g = groups[it->second];
    ++g.line.total;
    g.multi_edges.push_back(row.multi_edges);
    if (row.verdict == "feasible") ++g.line.feasible;
    if (row.verdict == "feasible" || row.verdict == "infeasible") {
      ++g.line.solved;
      g.iterations.push_back(row.iterations);
      if (row.time_ms) g.times.push_back(*row.time_ms);
    }
  }
  std::vector<SummaryLine> out;
  for (Group& g : groups) {
    g.line.time_ms = describe(g.times);
    g.line.iterations = describe(g.iterations);
    g.line.multi_edges = describe(g.multi_edges);
    out.push_back(std::move(g.line));
  }
  return out;
}

std::string format_summary(const std::vector<SummaryLine>& lines) {
  std::string out =
      "generator    n     dir  algorithm    solved   feasible  time_ms "
      "(mean±sd)        iterations (mean±sd)  multi_edges (mean±sd)\n";
  char buffer[256];
  for (const SummaryLine& l : lines) {
    std::snprintf(buffer, sizeof buffer,
                  "%-12s %-5d %-4s %-12s %3d/%-4d %-9d %10.3f ± %-10.3f "
                  "%8.2f ± %-8.2f    %7.2f ± %-7.2f\n",
                  l.generator.c_str(), l.n, l.directed ? "d" : "u",
                  l.algorithm.c_str(), l.solved, l.total, l.feasible,
                  l.time_ms.mean, l.time_ms.stdev, l.iterations.mean,
                  l.iterations.stdev, l.multi_edges.mean, l.multi_edges.stdev);
    out += buffer;
  }
  return out;
}

}  // namespace hamdec::cli

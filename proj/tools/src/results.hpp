#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hamdec/orchestrator.hpp"

namespace hamdec::cli {

struct ResultRow {
  std::string instance_id;
  std::string generator;  // instance family, or "file" for loaded instances
  int n = 0;
  bool directed = false;
  std::string algorithm;
  std::uint64_t seed = 0;
  std::string verdict;
  int iterations = 0;
  int cuts_added = 0;
  std::optional<double> time_ms;  // empty when timing is masked
  int multi_edges = 0;

  friend bool operator==(const ResultRow&, const ResultRow&) = default;
};

std::string_view csv_header();  // without trailing newline
std::string to_csv(const ResultRow& row);  // without trailing newline
ResultRow parse_csv_row(std::string_view line);  // throws InputError

// Rows of a CSV document after the header line.
std::vector<ResultRow> parse_csv(std::string_view text);

ResultRow make_row(std::string instance_id, std::string generator,
                   const UnionMultigraph& g, std::uint64_t seed,
                   const RunResult& result, bool mask_time);

struct Stat {
  double mean = 0;
  double stdev = 0;  // sample standard deviation; 0 for fewer than 2 values
};

Stat describe(const std::vector<double>& values);

// Per (generator, n, directed, algorithm) group in first-seen order. Time and
// iteration statistics cover the decided rows (feasible or infeasible).
struct SummaryLine {
  std::string generator;
  int n = 0;
  bool directed = false;
  std::string algorithm;
  int total = 0;
  int solved = 0;      // feasible or infeasible
  int feasible = 0;
  Stat time_ms;        // zero when timing is masked
  Stat iterations;
  Stat multi_edges;    // over all rows
};

std::vector<SummaryLine> summarize(const std::vector<ResultRow>& rows);
std::string format_summary(const std::vector<SummaryLine>& lines);

}  // namespace hamdec::cli

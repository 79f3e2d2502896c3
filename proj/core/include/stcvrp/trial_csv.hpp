#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "stcvrp/tuning.hpp"

namespace stcvrp {

/// One line of a tuning or baseline summary.
struct TrialRow {
  std::string kind;  // "trial" or "baseline"
  std::string instance;
  std::uint64_t seed = 0;
  int trial_index = -1;
  SolverKind solver = SolverKind::greedy;
  CoarseningParams params;
  std::size_t coarse_nodes = 0;
  std::size_t merges = 0;
  Metrics coarse;
  Metrics metrics;
  double score = 0.0;
  RepairStats repairs;
  StageTimings timings;
};

TrialRow make_row(const TrialResult& result, const std::string& instance, std::uint64_t seed);

const std::vector<std::string>& trial_csv_columns();

/// Columns holding wall-clock measurements; everything else is deterministic.
bool is_timing_column(const std::string& column);

void write_trial_csv(std::ostream& out, std::span<const TrialRow> rows);

/// Throws ParseError on a malformed header or row.
std::vector<TrialRow> read_trial_csv(std::istream& in);

}  // namespace stcvrp

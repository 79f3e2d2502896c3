#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "stcvrp/trial_csv.hpp"

namespace stcvrp {

/// Percentage improvements of a tuned run over a baseline. Positive means
/// better (lower distance, duration, vehicles, violations).
struct Improvement {
  double distance = 0.0;
  double duration = 0.0;
  double vehicles = 0.0;
  double tw_violations = 0.0;
  double service = 0.0;
};

struct ReferenceRow {
  std::string instance;
  SolverKind solver;
  Improvement improvement;
};

/// Published best-tuned vs uncoarsened improvements on the Solomon set,
/// reproduced for side-by-side inspection.
std::span<const ReferenceRow> reference_improvements();
std::optional<Improvement> find_reference(const std::string& instance, SolverKind solver);

Improvement improvement(const Metrics& baseline, const Metrics& tuned);

struct ComparisonRow {
  std::string instance;
  SolverKind solver = SolverKind::greedy;
  TrialRow baseline;
  TrialRow best;  // lowest score among this solver's trials
  Improvement achieved;
  std::optional<Improvement> reference;
};

/// Best trial of each solver against that solver's baseline, per instance.
std::vector<ComparisonRow> compare(std::span<const TrialRow> rows);

struct OverallRow {
  std::string instance;
  TrialRow savings_baseline;
  TrialRow best;  // lowest score over all trials
  [[nodiscard]] bool no_worse() const {
    return best.metrics.total_distance <= savings_baseline.metrics.total_distance + 1e-9 &&
           best.metrics.num_vehicles <= savings_baseline.metrics.num_vehicles;
  }
};

/// Overall best trial against the Savings baseline, per instance.
std::vector<OverallRow> compare_to_savings(std::span<const TrialRow> rows);

void print_report(std::ostream& out, std::span<const TrialRow> rows);

}  // namespace stcvrp

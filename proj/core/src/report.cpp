#include "stcvrp/report.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <ostream>

namespace stcvrp {
namespace {

// Best-tuned vs uncoarsened: distance, duration, vehicles, window
// violations, service time (percent, positive = better).
const std::vector<ReferenceRow>& reference_table() {
  static const std::vector<ReferenceRow> rows = {
    {"C101", SolverKind::savings, {63.29, 54.72, 66.3, 33.65, 0.0}},
    {"C102", SolverKind::savings, {64.05, 53.91, 68.48, 39.13, 0.0}},
    {"C103", SolverKind::savings, {63.72, 52.33, 69.57, 45.92, 0.0}},
    {"C104", SolverKind::savings, {66.3, 51.23, 70.65, 52.36, 0.0}},
    {"C105", SolverKind::savings, {64.55, 57.07, 69.57, 34.18, 0.0}},
    {"C106", SolverKind::savings, {63.52, 54.14, 67.39, 36.89, 0.0}},
    {"C107", SolverKind::savings, {64.26, 56.27, 68.48, 28.57, 0.0}},
    {"C108", SolverKind::savings, {65.02, 55.76, 69.57, 11.2, 0.0}},
    {"C109", SolverKind::savings, {64.84, 54.85, 69.51, 9.78, 0.0}},
    {"C201", SolverKind::savings, {61.93, 63.92, 67.39, 15.57, 0.0}},
    {"C202", SolverKind::savings, {64.0, 66.1, 69.57, 17.62, 0.0}},
    {"C203", SolverKind::savings, {64.2, 67.17, 70.65, 20.83, 0.0}},
    {"C204", SolverKind::savings, {65.2, 68.27, 71.74, 23.13, 0.0}},
    {"C205", SolverKind::greedy, {93.67, 84.78, 85.71, 0.0, 75.0}},
    {"C205", SolverKind::savings, {64.54, 65.29, 68.89, -70.1, 0.0}},
    {"C206", SolverKind::greedy, {70.65, 55.17, 57.14, 0.0, 47.62}},
    {"C206", SolverKind::savings, {60.88, 62.47, 66.67, -49.3, 0.0}},
    {"C207", SolverKind::greedy, {38.44, 15.11, 14.29, 0.0, 21.43}},
    {"C207", SolverKind::savings, {53.93, 57.39, 64.29, -24.0, 0.0}},
    {"C208", SolverKind::greedy, {74.29, 59.98, 62.5, 0.0, 45.83}},
    {"C208", SolverKind::savings, {60.26, 63.21, 67.57, -51.47, 0.0}},
    {"R101", SolverKind::savings, {53.84, 57.92, 59.78, 23.39, 0.0}},
    {"R102", SolverKind::savings, {57.4, 61.64, 64.13, 30.34, 0.0}},
    {"R103", SolverKind::savings, {56.17, 61.03, 64.13, 35.02, 0.0}},
    {"R104", SolverKind::savings, {60.85, 65.08, 68.48, 41.5, 0.0}},
    {"R105", SolverKind::savings, {59.55, 64.23, 67.39, 30.64, 0.0}},
    {"R106", SolverKind::savings, {62.57, 66.36, 69.57, 37.39, 0.0}},
    {"R107", SolverKind::savings, {60.27, 65.0, 68.48, 40.58, 0.0}},
    {"R108", SolverKind::savings, {63.29, 66.91, 70.65, 46.11, 0.0}},
    {"R109", SolverKind::savings, {61.38, 65.88, 69.57, 26.63, 0.0}},
    {"R110", SolverKind::greedy, {65.88, 71.64, 77.78, 0.0, 50.0}},
    {"R110", SolverKind::savings, {61.37, 65.41, 69.32, 24.64, 0.0}},
    {"R111", SolverKind::savings, {63.61, 67.92, 71.74, 41.06, 0.0}},
    {"R112", SolverKind::greedy, {76.81, 75.03, 77.27, 0.0, 55.88}},
    {"R112", SolverKind::savings, {59.57, 60.92, 63.51, 7.5, 0.0}},
    {"R201", SolverKind::savings, {53.8, 57.49, 63.04, 17.39, 0.0}},
    {"R202", SolverKind::savings, {55.59, 60.03, 65.17, 21.56, 0.0}},
    {"R203", SolverKind::savings, {57.35, 60.38, 65.12, 24.67, 0.0}},
    {"R204", SolverKind::greedy, {75.35, 80.62, 81.82, 0.0, 60.0}},
    {"R204", SolverKind::savings, {61.8, 64.81, 68.24, 32.33, 0.0}},
    {"R205", SolverKind::greedy, {63.91, 57.72, 55.56, 0.0, 59.52}},
    {"R205", SolverKind::savings, {43.87, 49.91, 54.24, -2.7, 0.0}},
    {"R206", SolverKind::greedy, {62.91, 62.31, 60.0, 0.0, 61.11}},
    {"R206", SolverKind::savings, {34.34, 41.34, 43.48, -11.86, 0.0}},
    {"R207", SolverKind::greedy, {58.5, 60.67, 58.33, 0.0, 58.21}},
    {"R207", SolverKind::savings, {23.17, 27.42, 27.27, -27.5, 0.0}},
    {"R208", SolverKind::greedy, {21.4, 30.32, 30.77, 0.0, 21.95}},
    {"R208", SolverKind::savings, {8.26, 19.31, 20.0, -94.12, 0.0}},
    {"R209", SolverKind::greedy, {44.59, 58.94, 58.33, 0.0, 46.75}},
    {"R209", SolverKind::savings, {1.13, 11.86, 13.04, -80.0, 0.0}},
    {"R210", SolverKind::greedy, {88.4, 87.18, 87.5, 0.0, 72.0}},
    {"R210", SolverKind::savings, {57.03, 59.88, 63.75, 12.17, 0.0}},
    {"R211", SolverKind::greedy, {-18.31, -3.94, -10.0, 0.0, 0.0}},
    {"R211", SolverKind::savings, {-21.89, 0.41, 0.0, 0.0, 0.0}},
    {"RC101", SolverKind::savings, {61.73, 67.13, 67.39, 30.65, 0.0}},
    {"RC102", SolverKind::savings, {62.51, 66.92, 66.3, 30.47, 0.0}},
    {"RC103", SolverKind::savings, {64.17, 68.9, 69.57, 35.81, 0.0}},
    {"RC104", SolverKind::savings, {65.46, 69.09, 69.57, 38.24, 0.0}},
    {"RC105", SolverKind::savings, {61.46, 66.42, 66.3, 29.44, 0.0}},
    {"RC106", SolverKind::greedy, {33.13, 41.9, 50.0, 0.0, 0.0}},
    {"RC106", SolverKind::savings, {65.75, 70.0, 70.33, 33.18, 0.0}},
    {"RC107", SolverKind::savings, {66.63, 70.61, 71.59, 28.22, 0.0}},
    {"RC108", SolverKind::savings, {66.87, 70.95, 72.53, 35.47, 0.0}},
    {"RC201", SolverKind::greedy, {69.87, 67.01, 66.67, 0.0, 50.0}},
    {"RC201", SolverKind::savings, {58.56, 59.89, 63.33, 22.95, 0.0}},
    {"RC202", SolverKind::greedy, {78.15, 75.36, 75.0, 0.0, 60.0}},
    {"RC202", SolverKind::savings, {61.84, 62.26, 65.56, 26.04, 0.0}},
    {"RC203", SolverKind::greedy, {70.83, 73.71, 75.0, 0.0, 42.86}},
    {"RC203", SolverKind::savings, {64.5, 66.23, 68.18, 34.21, 0.0}},
    {"RC204", SolverKind::greedy, {78.52, 71.74, 71.43, 0.0, 45.45}},
    {"RC204", SolverKind::savings, {63.9, 64.98, 65.88, 29.23, 0.0}},
    {"RC205", SolverKind::savings, {62.34, 65.39, 68.48, 39.71, 0.0}},
    {"RC206", SolverKind::savings, {52.16, 53.5, 55.88, 0.0, 0.0}},
    {"RC207", SolverKind::greedy, {50.06, 58.26, 57.14, 0.0, 53.42}},
    {"RC207", SolverKind::savings, {16.82, 25.84, 24.14, -58.06, 0.0}},
    {"RC208", SolverKind::greedy, {13.77, 29.92, 26.67, 0.0, 0.0}},
    {"RC208", SolverKind::savings, {-22.97, -5.44, 0.0, 0.0, 0.0}},
  };
  return rows;
}

double percent_better(double baseline, double tuned) {
  if (baseline == 0.0) return 0.0;
  return 100.0 * (baseline - tuned) / baseline;
}

bool better_trial(const TrialRow& a, const TrialRow& b) {
  if (a.score != b.score) return a.score < b.score;
  return a.trial_index < b.trial_index;
}

struct InstanceRows {
  std::map<SolverKind, TrialRow> baselines;
  std::vector<TrialRow> trials;
};

std::map<std::string, InstanceRows> group(std::span<const TrialRow> rows) {
  std::map<std::string, InstanceRows> grouped;
  for (const TrialRow& row : rows) {
    InstanceRows& g = grouped[row.instance];
    if (row.kind == "baseline") {
      g.baselines.insert_or_assign(row.solver, row);
    } else {
      g.trials.push_back(row);
    }
  }
  return grouped;
}

std::string fixed(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%7.2f%%", value);
  return buffer;
}

}  // namespace

std::span<const ReferenceRow> reference_improvements() { return reference_table(); }

std::optional<Improvement> find_reference(const std::string& instance, SolverKind solver) {
  for (const ReferenceRow& row : reference_table()) {
    if (row.instance == instance && row.solver == solver) return row.improvement;
  }
  return std::nullopt;
}

Improvement improvement(const Metrics& baseline, const Metrics& tuned) {
  return {percent_better(baseline.total_distance, tuned.total_distance),
          percent_better(baseline.total_duration, tuned.total_duration),
          percent_better(baseline.num_vehicles, tuned.num_vehicles),
          percent_better(baseline.tw_violations, tuned.tw_violations),
          percent_better(baseline.total_service, tuned.total_service)};
}

std::vector<ComparisonRow> compare(std::span<const TrialRow> rows) {
  std::vector<ComparisonRow> out;
  for (const auto& [instance, g] : group(rows)) {
    for (const auto& [solver, baseline] : g.baselines) {
      const TrialRow* best = nullptr;
      for (const TrialRow& t : g.trials) {
        if (t.solver == solver && (!best || better_trial(t, *best))) best = &t;
      }
      if (!best) continue;
      ComparisonRow row;
      row.instance = instance;
      row.solver = solver;
      row.baseline = baseline;
      row.best = *best;
      row.achieved = improvement(baseline.metrics, best->metrics);
      row.reference = find_reference(instance, solver);
      out.push_back(std::move(row));
    }
  }
  return out;
}

std::vector<OverallRow> compare_to_savings(std::span<const TrialRow> rows) {
  std::vector<OverallRow> out;
  for (const auto& [instance, g] : group(rows)) {
    auto baseline = g.baselines.find(SolverKind::savings);
    if (baseline == g.baselines.end() || g.trials.empty()) continue;
    const TrialRow* best = &g.trials.front();
    for (const TrialRow& t : g.trials) {
      if (better_trial(t, *best)) best = &t;
    }
    out.push_back({instance, baseline->second, *best});
  }
  return out;
}

void print_report(std::ostream& out, std::span<const TrialRow> rows) {
  out << "Best tuned trial vs uncoarsened baseline of the same solver "
         "(positive = improvement)\n";
  out << "instance  solver   |   dist.     dur.     veh.       TW       ST  |"
         "  ref dist.  ref dur.  ref veh.   ref TW   ref ST\n";
  for (const ComparisonRow& row : compare(rows)) {
    char head[32];
    std::snprintf(head, sizeof head, "%-9s %-8s |", row.instance.c_str(), to_string(row.solver));
    out << head << ' ' << fixed(row.achieved.distance) << ' ' << fixed(row.achieved.duration)
        << ' ' << fixed(row.achieved.vehicles) << ' ' << fixed(row.achieved.tw_violations) << ' '
        << fixed(row.achieved.service) << "  |";
    if (row.reference) {
      out << "  " << fixed(row.reference->distance) << "  " << fixed(row.reference->duration)
          << "  " << fixed(row.reference->vehicles) << ' ' << fixed(row.reference->tw_violations)
          << ' ' << fixed(row.reference->service);
    } else {
      out << "  (no reference)";
    }
    out << '\n';
  }

  const auto overall = compare_to_savings(rows);
  if (overall.empty()) return;
  out << "\nOverall best trial vs Savings baseline\n";
  out << "instance  | base dist  base veh | best dist  best veh  solver   | no worse\n";
  int no_worse = 0;
  for (const OverallRow& row : overall) {
    char line[160];
    std::snprintf(line, sizeof line, "%-9s | %9.2f %9d | %9.2f %9d  %-8s | %s\n",
                  row.instance.c_str(), row.savings_baseline.metrics.total_distance,
                  row.savings_baseline.metrics.num_vehicles, row.best.metrics.total_distance,
                  row.best.metrics.num_vehicles, to_string(row.best.solver),
                  row.no_worse() ? "yes" : "no");
    out << line;
    if (row.no_worse()) ++no_worse;
  }
  out << no_worse << " of " << overall.size()
      << " instances: best trial no worse than Savings baseline on distance and vehicles\n";
}

}  // namespace stcvrp

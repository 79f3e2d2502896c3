#pragma once

#include "stcvrp/graph.hpp"
#include "stcvrp/heuristics.hpp"

namespace stcvrp {

struct Metrics {
  double total_distance = 0.0;
  int num_vehicles = 0;
  // Depot departure to depot return, summed over vehicles.
  double total_duration = 0.0;
  double total_travel = 0.0;
  double total_wait = 0.0;
  double total_service = 0.0;
  int tw_violations = 0;        // stops served after their latest start
  int capacity_violations = 0;  // routes above capacity
  bool feasible = true;

  friend bool operator==(const Metrics&, const Metrics&) = default;
};

struct PenaltyWeights {
  double vehicles = 1000.0;
  double capacity = 1000.0;
  double time_windows = 1000.0;
};

/// Recomputes every schedule on `graph`; stored schedules are ignored.
Metrics evaluate(const Solution& solution, const Graph& graph);

/// distance + lv * vehicles + lc * [capacity violated] + lt * [window violated]
double objective_score(const Metrics& metrics, const PenaltyWeights& weights = {});

}  // namespace stcvrp

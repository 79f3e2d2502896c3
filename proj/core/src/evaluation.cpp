#include "stcvrp/evaluation.hpp"

namespace stcvrp {

Metrics evaluate(const Solution& solution, const Graph& graph) {
  Metrics m;
  for (const Route& stored : solution.routes) {
    const Route route = recompute_schedule(stored, graph);
    if (route.empty()) continue;
    ++m.num_vehicles;
    for (std::size_t k = 1; k < route.stops.size(); ++k) {
      const double leg = graph.tau(route.stops[k - 1], route.stops[k]);
      m.total_distance += leg;
      m.total_travel += leg;
      m.total_wait += route.schedule[k].wait;
      m.total_service += route.schedule[k].departure - route.schedule[k].service_start;
    }
    m.total_duration += route.schedule.back().arrival;
    m.tw_violations += route.tw_violations;
    if (route.over_capacity) ++m.capacity_violations;
  }
  m.feasible = m.tw_violations == 0 && m.capacity_violations == 0;
  return m;
}

double objective_score(const Metrics& metrics, const PenaltyWeights& weights) {
  return metrics.total_distance + weights.vehicles * metrics.num_vehicles +
         weights.capacity * (metrics.capacity_violations > 0 ? 1.0 : 0.0) +
         weights.time_windows * (metrics.tw_violations > 0 ? 1.0 : 0.0);
}

}  // namespace stcvrp

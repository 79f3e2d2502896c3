#include "stcvrp/route.hpp"

#include <algorithm>

#include "stcvrp/error.hpp"

namespace stcvrp {

Route make_route(std::span<const NodeId> customers, NodeId depot) {
  Route route;
  route.stops.reserve(customers.size() + 2);
  route.stops.push_back(depot);
  route.stops.insert(route.stops.end(), customers.begin(), customers.end());
  route.stops.push_back(depot);
  return route;
}

Route recompute_schedule(Route route, const Graph& graph) {
  const NodeId depot = graph.depot().id;
  if (route.stops.size() < 2 || route.stops.front() != depot || route.stops.back() != depot) {
    throw StructuralError("route must start and end at the depot");
  }
  route.schedule.assign(route.stops.size(), StopTiming{});
  route.load = 0.0;
  route.tw_violations = 0;

  std::size_t previous = graph.index_of(depot);
  double time = 0.0;  // departure from the previous stop
  for (std::size_t k = 1; k < route.stops.size(); ++k) {
    const std::size_t current = graph.index_of(route.stops[k]);
    if (current == 0 && k + 1 != route.stops.size()) {
      throw StructuralError("depot may only appear at the ends of a route");
    }
    const CoarseNode& node = graph.nodes()[current];
    StopTiming& timing = route.schedule[k];
    timing.arrival = time + graph.tau_at(previous, current);
    timing.wait = std::max(0.0, node.window.earliest - timing.arrival);
    timing.service_start = timing.arrival + timing.wait;
    timing.departure = timing.service_start + node.service;
    timing.late = timing.service_start > node.window.latest + kTimeEpsilon;
    if (timing.late) ++route.tw_violations;
    route.load += node.demand;
    time = timing.departure;
    previous = current;
  }
  // Nobody waits for the depot to open on the way back.
  StopTiming& back = route.schedule.back();
  back.wait = 0.0;
  back.service_start = back.arrival;
  back.departure = back.arrival;
  back.late = back.arrival > graph.depot().window.latest + kTimeEpsilon;
  route.tw_violations = static_cast<int>(
      std::count_if(route.schedule.begin(), route.schedule.end(),
                    [](const StopTiming& t) { return t.late; }));
  route.over_capacity = route.load > graph.capacity() + kTimeEpsilon;
  return route;
}

double route_distance(const Route& route, const Graph& graph) {
  double total = 0.0;
  for (std::size_t k = 1; k < route.stops.size(); ++k) {
    total += graph.tau(route.stops[k - 1], route.stops[k]);
  }
  return total;
}

}  // namespace stcvrp

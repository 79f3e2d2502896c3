#pragma once

#include <span>
#include <vector>

#include "stcvrp/graph.hpp"

namespace stcvrp {

struct StopTiming {
  double arrival = 0.0;
  double wait = 0.0;
  double service_start = 0.0;
  double departure = 0.0;
  bool late = false;  // service_start beyond the window's latest bound

  friend bool operator==(const StopTiming&, const StopTiming&) = default;
};

/// One vehicle tour. `stops` begins and ends at the depot; `schedule` is
/// parallel to `stops` and only meaningful after recompute_schedule.
struct Route {
  std::vector<NodeId> stops;
  std::vector<StopTiming> schedule;
  double load = 0.0;
  int tw_violations = 0;
  bool over_capacity = false;
  // Placed by the greedy fallback although no feasible insertion existed.
  bool flagged = false;

  [[nodiscard]] std::size_t customer_count() const {
    return stops.size() >= 2 ? stops.size() - 2 : 0;
  }
  [[nodiscard]] bool empty() const { return customer_count() == 0; }
  [[nodiscard]] std::span<const NodeId> customers() const {
    return empty() ? std::span<const NodeId>{}
                   : std::span<const NodeId>(stops).subspan(1, stops.size() - 2);
  }
};

/// [depot, customers..., depot] without a schedule.
Route make_route(std::span<const NodeId> customers, NodeId depot = kDepotId);

/// Forward simulation from the depot at time 0. Late service is recorded,
/// not rejected; the return to the depot counts as a stop. Throws
/// StructuralError on unknown ids or a route not bracketed by the depot.
Route recompute_schedule(Route route, const Graph& graph);

double route_distance(const Route& route, const Graph& graph);

}  // namespace stcvrp

#include "checks.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace stcvrp::support {

std::string coverage_problem(const Solution& solution, const Graph& graph) {
  std::map<NodeId, int> seen;
  for (const Route& route : solution.routes) {
    double load = 0.0;
    for (NodeId id : route.customers()) {
      if (id == kDepotId) return "depot inside a route";
      ++seen[id];
      load += graph.node(id).demand;
    }
    if (!route.flagged && load > graph.capacity() + 1e-9) {
      return "unflagged route over capacity: " + std::to_string(load);
    }
  }
  for (const CoarseNode& c : graph.customers()) {
    const int count = seen.contains(c.id) ? seen[c.id] : 0;
    if (count != 1) {
      return "customer " + to_string(c.id) + " visited " + std::to_string(count) + " times";
    }
  }
  if (seen.size() != graph.customer_count()) return "route visits a node outside the graph";
  return {};
}

std::string level_problem(const Graph& level, const Graph& original) {
  double demand = 0.0, service = 0.0, demand0 = 0.0, service0 = 0.0;
  std::vector<NodeId> members;
  for (const CoarseNode& n : level.customers()) {
    demand += n.demand;
    service += n.service;
    members.insert(members.end(), n.members.begin(), n.members.end());
  }
  std::vector<NodeId> expected;
  for (const CoarseNode& n : original.customers()) {
    demand0 += n.demand;
    service0 += n.service;
    expected.push_back(n.id);
  }
  if (std::abs(demand - demand0) > 1e-9 * std::max(1.0, demand0)) return "demand not conserved";
  if (std::abs(service - service0) > 1e-9 * std::max(1.0, service0)) {
    return "service not conserved";
  }
  std::sort(members.begin(), members.end());
  if (members != expected) return "members do not partition the customers";
  return {};
}

}  // namespace stcvrp::support

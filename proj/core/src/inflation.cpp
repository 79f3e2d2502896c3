#include "stcvrp/inflation.hpp"

#include <unordered_map>
#include <utility>

#include "stcvrp/error.hpp"

namespace stcvrp {
namespace {

void expand(NodeId id, const std::unordered_map<NodeId, const MergeRecord*>& produced,
            std::vector<NodeId>& out) {
  auto it = produced.find(id);
  if (it == produced.end()) {
    out.push_back(id);
    return;
  }
  expand(it->second->first(), produced, out);
  expand(it->second->second(), produced, out);
}

// Swaps adjacent customers around late stops until none helps.
int repair_windows(Route& route, const Graph& graph) {
  int swaps = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 2; k + 1 < route.stops.size(); ++k) {
      if (!route.schedule[k].late) continue;
      Route candidate = route;
      std::swap(candidate.stops[k - 1], candidate.stops[k]);
      candidate = recompute_schedule(std::move(candidate), graph);
      if (candidate.schedule[k - 1].late || candidate.schedule[k].late) continue;
      const int before_elsewhere = route.tw_violations - (route.schedule[k - 1].late ? 1 : 0) - 1;
      if (candidate.tw_violations > before_elsewhere) continue;
      route = std::move(candidate);
      ++swaps;
      changed = true;
      break;
    }
  }
  return swaps;
}

}  // namespace

Solution inflate(const Solution& coarse, const MergeHistory& history, const Graph& original) {
  std::unordered_map<NodeId, const MergeRecord*> produced;
  produced.reserve(history.records.size());
  for (const MergeRecord& record : history.records) produced.emplace(record.super_id, &record);

  Solution result;
  result.solver = coarse.solver;
  result.routes.reserve(coarse.routes.size());
  for (const Route& route : coarse.routes) {
    Route expanded;
    expanded.flagged = route.flagged;
    expanded.stops.reserve(route.stops.size());
    for (NodeId id : route.stops) expand(id, produced, expanded.stops);
    for (NodeId id : expanded.stops) {
      if (!original.contains(id)) {
        throw StructuralError("node " + to_string(id) +
                              " is neither an original node nor recorded in the merge history");
      }
    }
    result.routes.push_back(recompute_schedule(std::move(expanded), original));
  }
  return result;
}

RepairResult light_postprocess(Solution solution, const Graph& graph) {
  RepairResult result;
  for (Route& route : solution.routes) route = recompute_schedule(std::move(route), graph);

  bool changed = true;
  while (changed) {
    changed = false;
    for (Route& route : solution.routes) {
      const int swaps = repair_windows(route, graph);
      result.stats.swaps += swaps;
      changed = changed || swaps > 0;
    }
    std::vector<Route> split_off;
    for (Route& route : solution.routes) {
      while (route.over_capacity && route.customer_count() > 1) {
        const NodeId last = route.stops[route.stops.size() - 2];
        route.stops.erase(route.stops.end() - 2);
        route = recompute_schedule(std::move(route), graph);
        split_off.push_back(recompute_schedule(make_route({&last, 1}, graph.depot().id), graph));
        ++result.stats.capacity_splits;
        changed = true;
      }
    }
    for (Route& route : split_off) solution.routes.push_back(std::move(route));
  }
  result.solution = std::move(solution);
  return result;
}

}  // namespace stcvrp

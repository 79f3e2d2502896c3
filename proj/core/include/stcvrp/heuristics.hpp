#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "stcvrp/graph.hpp"
#include "stcvrp/route.hpp"

namespace stcvrp {

enum class SolverKind { greedy, savings };

const char* to_string(SolverKind kind);
SolverKind parse_solver(std::string_view name);

struct Solution {
  std::vector<Route> routes;
  SolverKind solver = SolverKind::greedy;
};

/// Nearest feasible neighbour: extends the current route with the closest
/// unvisited node that fits the remaining capacity, starts service on time
/// and can still return to the depot before it closes. Nodes that no fresh
/// route can serve get a flagged singleton route.
Solution greedy_solve(const Graph& graph);

/// Clarke-Wright parallel savings with endpoint joins only. A join is kept
/// when the combined load fits and the joined schedule has no more window
/// violations than the two routes had separately.
Solution savings_solve(const Graph& graph);

Solution solve(const Graph& graph, SolverKind kind);

/// tau(0, i) + tau(0, j) - tau(i, j).
double savings_value(const Graph& graph, NodeId i, NodeId j);

inline constexpr std::size_t kBruteForceLimit = 9;

/// Minimum-distance solution with hard windows and capacity, by exhaustive
/// search. std::nullopt if no feasible solution exists. Throws
/// std::invalid_argument above kBruteForceLimit customers.
std::optional<Solution> brute_force_optimal(const Graph& graph);

}  // namespace stcvrp

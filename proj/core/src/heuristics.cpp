#include "stcvrp/heuristics.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace stcvrp {

const char* to_string(SolverKind kind) {
  return kind == SolverKind::greedy ? "greedy" : "savings";
}

SolverKind parse_solver(std::string_view name) {
  if (name == "greedy") return SolverKind::greedy;
  if (name == "savings") return SolverKind::savings;
  throw std::invalid_argument("unknown solver '" + std::string(name) + "'");
}

namespace {

// Schedule of a depot-bracketed sequence of node indices.
struct SequenceCheck {
  double distance = 0.0;
  int late = 0;
};

SequenceCheck check_sequence(const Graph& graph, const std::vector<std::size_t>& sequence) {
  const auto nodes = graph.nodes();
  SequenceCheck check;
  std::size_t previous = 0;
  double time = 0.0;
  for (std::size_t k : sequence) {
    const double arrival = time + graph.tau_at(previous, k);
    const double start = std::max(arrival, nodes[k].window.earliest);
    if (start > nodes[k].window.latest + kTimeEpsilon) ++check.late;
    check.distance += graph.tau_at(previous, k);
    time = start + nodes[k].service;
    previous = k;
  }
  const double back = time + graph.tau_at(previous, 0);
  if (back > graph.depot().window.latest + kTimeEpsilon) ++check.late;
  check.distance += graph.tau_at(previous, 0);
  return check;
}

Route finish_route(const Graph& graph, const std::vector<std::size_t>& sequence) {
  std::vector<NodeId> ids;
  ids.reserve(sequence.size());
  for (std::size_t k : sequence) ids.push_back(graph.nodes()[k].id);
  return recompute_schedule(make_route(ids, graph.depot().id), graph);
}

}  // namespace

Solution greedy_solve(const Graph& graph) {
  const auto nodes = graph.nodes();
  const CoarseNode& depot = graph.depot();
  std::vector<bool> visited(nodes.size(), false);
  std::size_t remaining = graph.customer_count();

  Solution solution;
  solution.solver = SolverKind::greedy;
  while (remaining > 0) {
    std::vector<std::size_t> sequence;
    std::size_t current = 0;
    double time = 0.0;
    double load = 0.0;
    while (true) {
      std::size_t best = 0;
      double best_tau = std::numeric_limits<double>::infinity();
      for (std::size_t k = 1; k < nodes.size(); ++k) {
        if (visited[k]) continue;
        const CoarseNode& node = nodes[k];
        if (load + node.demand > graph.capacity() + kTimeEpsilon) continue;
        const double tau = graph.tau_at(current, k);
        const double start = std::max(time + tau, node.window.earliest);
        if (start > node.window.latest + kTimeEpsilon) continue;
        if (start + node.service + graph.tau_at(k, 0) > depot.window.latest + kTimeEpsilon) {
          continue;
        }
        if (tau < best_tau || (tau == best_tau && node.id < nodes[best].id)) {
          best = k;
          best_tau = tau;
        }
      }
      if (best == 0) break;
      const CoarseNode& node = nodes[best];
      time = std::max(time + best_tau, node.window.earliest) + node.service;
      load += node.demand;
      visited[best] = true;
      --remaining;
      sequence.push_back(best);
      current = best;
    }

    if (sequence.empty()) {
      // Not even a fresh vehicle can serve what is left on time.
      std::size_t lowest = 0;
      for (std::size_t k = 1; k < nodes.size(); ++k) {
        if (!visited[k] && (lowest == 0 || nodes[k].id < nodes[lowest].id)) lowest = k;
      }
      visited[lowest] = true;
      --remaining;
      Route route = finish_route(graph, {lowest});
      route.flagged = true;
      solution.routes.push_back(std::move(route));
      continue;
    }
    solution.routes.push_back(finish_route(graph, sequence));
  }
  return solution;
}

double savings_value(const Graph& graph, NodeId i, NodeId j) {
  const NodeId depot = graph.depot().id;
  return graph.tau(depot, i) + graph.tau(depot, j) - graph.tau(i, j);
}

Solution savings_solve(const Graph& graph) {
  const auto nodes = graph.nodes();
  const std::size_t n = nodes.size();

  struct Tour {
    std::vector<std::size_t> sequence;
    double load = 0.0;
    int late = 0;
    bool alive = true;
  };
  std::vector<Tour> tours;
  std::vector<std::size_t> tour_of(n, 0);
  tours.reserve(n);
  for (std::size_t k = 1; k < n; ++k) {
    Tour t;
    t.sequence = {k};
    t.load = nodes[k].demand;
    t.late = check_sequence(graph, t.sequence).late;
    tour_of[k] = tours.size();
    tours.push_back(std::move(t));
  }

  struct Saving {
    double value;
    std::size_t a;
    std::size_t b;
    NodeId low;
    NodeId high;
  };
  std::vector<Saving> savings;
  savings.reserve(n * (n - 1) / 2);
  for (std::size_t a = 1; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      const double value = graph.tau_at(0, a) + graph.tau_at(0, b) - graph.tau_at(a, b);
      const NodeId low = std::min(nodes[a].id, nodes[b].id);
      const NodeId high = std::max(nodes[a].id, nodes[b].id);
      savings.push_back({value, a, b, low, high});
    }
  }
  std::sort(savings.begin(), savings.end(), [](const Saving& x, const Saving& y) {
    if (x.value != y.value) return x.value > y.value;
    if (x.low != y.low) return x.low < y.low;
    return x.high < y.high;
  });

  auto try_join = [&](std::size_t head_tour, std::size_t tail_tour) {
    Tour& front = tours[head_tour];
    Tour& back = tours[tail_tour];
    if (front.load + back.load > graph.capacity() + kTimeEpsilon) return false;
    std::vector<std::size_t> joined = front.sequence;
    joined.insert(joined.end(), back.sequence.begin(), back.sequence.end());
    const int late = check_sequence(graph, joined).late;
    if (late > front.late + back.late) return false;
    for (std::size_t k : back.sequence) tour_of[k] = head_tour;
    front.sequence = std::move(joined);
    front.load += back.load;
    front.late = late;
    back.alive = false;
    back.sequence.clear();
    return true;
  };

  for (const Saving& s : savings) {
    const std::size_t ta = tour_of[s.a];
    const std::size_t tb = tour_of[s.b];
    if (ta == tb) continue;
    const Tour& A = tours[ta];
    const Tour& B = tours[tb];
    // Only customers adjacent to the depot can be joined.
    if (A.sequence.back() == s.a && B.sequence.front() == s.b && try_join(ta, tb)) continue;
    if (B.sequence.back() == s.b && A.sequence.front() == s.a) try_join(tb, ta);
  }

  Solution solution;
  solution.solver = SolverKind::savings;
  for (const Tour& t : tours) {
    if (t.alive) solution.routes.push_back(finish_route(graph, t.sequence));
  }
  return solution;
}

Solution solve(const Graph& graph, SolverKind kind) {
  return kind == SolverKind::greedy ? greedy_solve(graph) : savings_solve(graph);
}

std::optional<Solution> brute_force_optimal(const Graph& graph) {
  const std::size_t n = graph.customer_count();
  if (n > kBruteForceLimit) {
    throw std::invalid_argument("brute force is limited to " + std::to_string(kBruteForceLimit) +
                                " customers, got " + std::to_string(n));
  }
  const auto nodes = graph.nodes();
  const std::size_t subsets = std::size_t{1} << n;
  constexpr double kInf = std::numeric_limits<double>::infinity();

  // Cheapest hard-feasible order for every customer subset.
  std::vector<double> route_cost(subsets, kInf);
  std::vector<std::vector<std::size_t>> route_order(subsets);
  for (std::size_t mask = 1; mask < subsets; ++mask) {
    std::vector<std::size_t> members;
    double load = 0.0;
    for (std::size_t bit = 0; bit < n; ++bit) {
      if (mask & (std::size_t{1} << bit)) {
        members.push_back(bit + 1);
        load += nodes[bit + 1].demand;
      }
    }
    if (load > graph.capacity() + kTimeEpsilon) continue;
    do {
      const SequenceCheck check = check_sequence(graph, members);
      if (check.late == 0 && check.distance < route_cost[mask]) {
        route_cost[mask] = check.distance;
        route_order[mask] = members;
      }
    } while (std::next_permutation(members.begin(), members.end()));
  }

  // Cheapest partition of every subset into routes.
  std::vector<double> best(subsets, kInf);
  std::vector<std::size_t> choice(subsets, 0);
  best[0] = 0.0;
  for (std::size_t mask = 1; mask < subsets; ++mask) {
    const std::size_t lowest = mask & (~mask + 1);
    const std::size_t rest = mask ^ lowest;
    // Enumerate routes containing the lowest customer of the subset.
    for (std::size_t sub = rest;; sub = (sub - 1) & rest) {
      const std::size_t route = sub | lowest;
      const double cost = route_cost[route] + best[mask ^ route];
      if (cost < best[mask]) {
        best[mask] = cost;
        choice[mask] = route;
      }
      if (sub == 0) break;
    }
  }

  const std::size_t all = subsets - 1;
  if (best[all] == kInf) return std::nullopt;
  Solution solution;
  for (std::size_t mask = all; mask != 0; mask ^= choice[mask]) {
    solution.routes.push_back(finish_route(graph, route_order[choice[mask]]));
  }
  return solution;
}

}  // namespace stcvrp

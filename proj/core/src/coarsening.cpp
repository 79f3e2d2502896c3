#include "stcvrp/coarsening.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace stcvrp {

void CoarseningParams::validate() const {
  if (!(alpha >= 0.0) || !(beta >= 0.0) || !(alpha + beta > 0.0)) {
    throw std::invalid_argument("alpha and beta must be nonnegative with a positive sum");
  }
  if (!(p_target > 0.0 && p_target <= 1.0)) {
    throw std::invalid_argument("p_target must lie in (0, 1]");
  }
  if (!(radius_coeff >= 0.0) || !std::isfinite(radius_coeff)) {
    throw std::invalid_argument("radius_coeff must be a nonnegative number");
  }
  if (!(radius_base_scale > 0.0)) {
    throw std::invalid_argument("radius_base_scale must be positive");
  }
}

double temporal_separation(const CoarseNode& i, const CoarseNode& j, SeparationMode mode,
                           double tau_ij) {
  switch (mode) {
    case SeparationMode::strict:
      return std::max(0.0, j.window.earliest - (i.nominal_time + i.service + tau_ij));
    case SeparationMode::nominal:
      break;
  }
  return std::abs(i.nominal_time - j.nominal_time);
}

double st_distance(const CoarseNode& i, const CoarseNode& j, const CoarseningParams& params,
                   double tau_ij) {
  return params.alpha * tau_ij + params.beta * temporal_separation(i, j, params.separation, tau_ij);
}

double pair_distance(const CoarseNode& i, const CoarseNode& j, const CoarseningParams& params,
                     double tau_ij) {
  const double separation =
      std::min(temporal_separation(i, j, params.separation, tau_ij),
               temporal_separation(j, i, params.separation, tau_ij));
  return params.alpha * tau_ij + params.beta * separation;
}

MergeDirections merge_feasibility(const CoarseNode& i, const CoarseNode& j, double tau_ij,
                                  double tau_ji) {
  MergeDirections d;
  d.forward = i.window.earliest <= j.window.latest - j.service - tau_ij - i.service;
  d.backward = j.window.earliest <= i.window.latest - i.service - tau_ji - j.service;
  return d;
}

double merge_slack(const CoarseNode& i, const CoarseNode& j, MergeOrder order, double tau) {
  if (order == MergeOrder::i_then_j) {
    return (j.window.latest - j.service - tau) - (i.window.earliest + i.service);
  }
  return (i.window.latest - i.service - tau) - (j.window.earliest + j.service);
}

std::optional<MergeOrder> choose_order(const CoarseNode& i, const CoarseNode& j, double tau_ij,
                                       double tau_ji) {
  const MergeDirections d = merge_feasibility(i, j, tau_ij, tau_ji);
  if (!d.any()) return std::nullopt;
  if (!d.backward) return MergeOrder::i_then_j;
  if (!d.forward) return MergeOrder::j_then_i;
  const double forward = merge_slack(i, j, MergeOrder::i_then_j, tau_ij);
  const double backward = merge_slack(i, j, MergeOrder::j_then_i, tau_ji);
  if (forward > backward) return MergeOrder::i_then_j;
  if (backward > forward) return MergeOrder::j_then_i;
  return i.id < j.id ? MergeOrder::i_then_j : MergeOrder::j_then_i;
}

TimeWindow aggregate_window(const CoarseNode& i, const CoarseNode& j, MergeOrder order,
                            double tau, Propagation mode) {
  const CoarseNode& first = order == MergeOrder::i_then_j ? i : j;
  const CoarseNode& second = order == MergeOrder::i_then_j ? j : i;
  if (mode == Propagation::conservative) {
    return {std::max(first.window.earliest, second.window.earliest),
            std::min(first.window.latest, second.window.latest)};
  }
  return {std::min(first.window.earliest, second.window.earliest - (first.service + tau)),
          std::max(second.window.latest - second.service,
                   first.window.latest - (first.service + tau))};
}

TimeWindow bound_by_internal_route(TimeWindow window, const CoarseNode& first,
                                   const CoarseNode& second, double tau) {
  window.latest = std::min(window.latest, second.window.latest - first.service - tau);
  return window;
}

double radius_threshold(const Graph& graph, double radius_coeff, double base_scale) {
  const std::size_t n = graph.customer_count();
  if (n == 0) return 0.0;
  double min_x = std::numeric_limits<double>::infinity();
  double min_y = min_x;
  double max_x = -min_x;
  double max_y = -min_x;
  for (const CoarseNode& node : graph.nodes()) {
    min_x = std::min(min_x, node.x);
    max_x = std::max(max_x, node.x);
    min_y = std::min(min_y, node.y);
    max_y = std::max(max_y, node.y);
  }
  const double extent = std::max(max_x - min_x, max_y - min_y);
  return radius_coeff * extent * base_scale / std::sqrt(static_cast<double>(n));
}

MergeOutcome merge_pair(const Graph& graph, NodeId i, NodeId j, MergeOrder order,
                        TimeWindow window, TauMode tau_mode, NodeId super_id) {
  const NodeId depot = graph.depot().id;
  if (i == depot || j == depot) {
    throw std::invalid_argument("the depot never merges");
  }
  if (i == j) {
    throw std::invalid_argument("cannot merge a node with itself");
  }
  if (graph.contains(super_id)) {
    throw std::invalid_argument("super-node id " + to_string(super_id) + " already in use");
  }
  const std::size_t ii = graph.index_of(i);
  const std::size_t jj = graph.index_of(j);
  const std::size_t first = order == MergeOrder::i_then_j ? ii : jj;
  const std::size_t second = order == MergeOrder::i_then_j ? jj : ii;
  const CoarseNode& a = graph.nodes()[first];
  const CoarseNode& b = graph.nodes()[second];

  CoarseNode super;
  super.id = super_id;
  super.kind = NodeKind::supernode;
  super.x = 0.5 * (a.x + b.x);
  super.y = 0.5 * (a.y + b.y);
  super.demand = a.demand + b.demand;
  super.service = a.service + b.service;
  super.window = window;
  super.nominal_time = window.midpoint();
  super.members = a.members;
  super.members.insert(super.members.end(), b.members.begin(), b.members.end());

  std::vector<std::size_t> kept;
  kept.reserve(graph.size() - 1);
  for (std::size_t k = 0; k < graph.size(); ++k) {
    if (k != ii && k != jj) kept.push_back(k);
  }
  std::vector<CoarseNode> nodes;
  nodes.reserve(kept.size() + 1);
  for (std::size_t k : kept) nodes.push_back(graph.nodes()[k]);
  nodes.push_back(super);

  const std::size_t n = nodes.size();
  std::vector<double> travel(n * n, 0.0);
  for (std::size_t r = 0; r < kept.size(); ++r) {
    for (std::size_t c = 0; c < kept.size(); ++c) {
      travel[r * n + c] = graph.tau_at(kept[r], kept[c]);
    }
  }
  const double internal = graph.tau_at(first, second);
  for (std::size_t r = 0; r < kept.size(); ++r) {
    double t = 0.0;
    if (tau_mode == TauMode::conservative) {
      // Entering reaches the first child no later; leaving from the second
      // child also pays the hop between the children.
      t = std::max(graph.tau_at(kept[r], first), internal + graph.tau_at(second, kept[r]));
    } else {
      t = travel_time(super, nodes[r]);
    }
    travel[r * n + (n - 1)] = t;
    travel[(n - 1) * n + r] = t;
  }
  return {Graph(std::move(nodes), std::move(travel), graph.capacity()), std::move(super)};
}

std::string to_string(const RoundStats& stats) {
  std::ostringstream out;
  out << "{\"round\":" << stats.round << ",\"nodes_before\":" << stats.nodes_before
      << ",\"candidates\":" << stats.candidates << ",\"merges_applied\":" << stats.merges_applied
      << ",\"rho\":" << stats.rho << "}";
  return out.str();
}

namespace {

struct Candidate {
  double distance;
  NodeId low;
  NodeId high;
  std::size_t low_index;
  std::size_t high_index;
};

struct PlannedMerge {
  NodeId left;
  NodeId right;
  MergeOrder order;
  TimeWindow window;
};

}  // namespace

CoarseningResult coarsen(const Graph& graph, const CoarseningParams& params,
                         const RoundObserver& observer) {
  params.validate();
  CoarseningResult result{graph, {}, {}, HaltReason::target_reached};
  const double target = params.p_target * static_cast<double>(graph.customer_count());
  std::int32_t next_id = to_int(graph.max_id()) + 1;

  int round = 0;
  while (static_cast<double>(result.graph.customer_count()) > target) {
    const Graph& current = result.graph;
    const auto nodes = current.nodes();
    RoundStats stats;
    stats.round = ++round;
    stats.nodes_before = current.customer_count();
    stats.rho = radius_threshold(current, params.radius_coeff, params.radius_base_scale);

    std::vector<Candidate> candidates;
    for (std::size_t a = 1; a < nodes.size(); ++a) {
      for (std::size_t b = a + 1; b < nodes.size(); ++b) {
        const double tau = current.tau_at(a, b);
        const double d = pair_distance(nodes[a], nodes[b], params, tau);
        if (d > stats.rho) continue;
        if (nodes[a].id < nodes[b].id) {
          candidates.push_back({d, nodes[a].id, nodes[b].id, a, b});
        } else {
          candidates.push_back({d, nodes[b].id, nodes[a].id, b, a});
        }
      }
    }
    std::sort(candidates.begin(), candidates.end(), [](const Candidate& x, const Candidate& y) {
      if (x.distance != y.distance) return x.distance < y.distance;
      if (x.low != y.low) return x.low < y.low;
      return x.high < y.high;
    });
    stats.candidates = candidates.size();

    std::vector<bool> used(nodes.size(), false);
    used[0] = true;
    std::vector<PlannedMerge> matching;
    for (const Candidate& c : candidates) {
      if (used[c.low_index] || used[c.high_index]) continue;
      const CoarseNode& i = nodes[c.low_index];
      const CoarseNode& j = nodes[c.high_index];
      if (i.demand + j.demand > current.capacity()) continue;
      const double tau_ij = current.tau_at(c.low_index, c.high_index);
      const double tau_ji = current.tau_at(c.high_index, c.low_index);
      const auto order = choose_order(i, j, tau_ij, tau_ji);
      if (!order) continue;
      const double tau = *order == MergeOrder::i_then_j ? tau_ij : tau_ji;
      TimeWindow window = aggregate_window(i, j, *order, tau, params.propagation);
      if (params.tau_mode == TauMode::conservative) {
        const CoarseNode& first = *order == MergeOrder::i_then_j ? i : j;
        const CoarseNode& second = *order == MergeOrder::i_then_j ? j : i;
        window = bound_by_internal_route(window, first, second, tau);
      }
      if (window.empty()) continue;
      matching.push_back({i.id, j.id, *order, window});
      used[c.low_index] = true;
      used[c.high_index] = true;
    }

    if (matching.empty()) {
      result.halt = HaltReason::empty_matching;
      break;
    }

    for (const PlannedMerge& m : matching) {
      MergeRecord record;
      record.super_id = NodeId{next_id++};
      record.left = m.left;
      record.right = m.right;
      record.order = m.order;
      record.window = m.window;
      record.left_node = result.graph.node(m.left);
      record.right_node = result.graph.node(m.right);
      record.tau_left_right = result.graph.tau(m.left, m.right);
      MergeOutcome outcome = merge_pair(result.graph, m.left, m.right, m.order, m.window,
                                        params.tau_mode, record.super_id);
      result.graph = std::move(outcome.graph);
      result.history.records.push_back(std::move(record));
    }
    stats.merges_applied = matching.size();
    result.rounds.push_back(stats);
    if (observer) observer(stats, result.graph);
  }
  return result;
}

const char* to_string(Propagation mode) {
  return mode == Propagation::relaxed ? "relaxed" : "conservative";
}

const char* to_string(SeparationMode mode) {
  return mode == SeparationMode::nominal ? "nominal" : "strict";
}

const char* to_string(TauMode mode) {
  return mode == TauMode::midpoint ? "midpoint" : "conservative";
}

const char* to_string(HaltReason reason) {
  return reason == HaltReason::target_reached ? "target_reached" : "empty_matching";
}

const char* to_string(MergeOrder order) {
  return order == MergeOrder::i_then_j ? "i_then_j" : "j_then_i";
}

Propagation parse_propagation(std::string_view name) {
  if (name == "relaxed") return Propagation::relaxed;
  if (name == "conservative") return Propagation::conservative;
  throw std::invalid_argument("unknown propagation mode '" + std::string(name) + "'");
}

SeparationMode parse_separation(std::string_view name) {
  if (name == "nominal") return SeparationMode::nominal;
  if (name == "strict") return SeparationMode::strict;
  throw std::invalid_argument("unknown separation mode '" + std::string(name) + "'");
}

TauMode parse_tau_mode(std::string_view name) {
  if (name == "midpoint") return TauMode::midpoint;
  if (name == "conservative") return TauMode::conservative;
  throw std::invalid_argument("unknown tau mode '" + std::string(name) + "'");
}

}  // namespace stcvrp

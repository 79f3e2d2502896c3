#include "stcvrp/graph.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "stcvrp/error.hpp"

namespace stcvrp {

double euclidean(double ax, double ay, double bx, double by) {
  return std::hypot(ax - bx, ay - by);
}

double travel_time(const CoarseNode& a, const CoarseNode& b) {
  return euclidean(a.x, a.y, b.x, b.y);
}

double nominal_visit_time(const CoarseNode& node, NominalTimePolicy policy) {
  switch (policy) {
    case NominalTimePolicy::earliest:
      return node.window.earliest;
    case NominalTimePolicy::midpoint:
      break;
  }
  return 0.5 * (node.window.earliest + (node.window.latest - node.service));
}

CoarseNode make_depot_node(const Customer& depot) {
  CoarseNode node;
  node.id = depot.id;
  node.kind = NodeKind::depot;
  node.x = depot.x;
  node.y = depot.y;
  node.window = {depot.ready, depot.due};
  node.nominal_time = depot.ready;
  return node;
}

CoarseNode make_customer_node(const Customer& customer, NominalTimePolicy policy) {
  CoarseNode node;
  node.id = customer.id;
  node.kind = NodeKind::customer;
  node.x = customer.x;
  node.y = customer.y;
  node.demand = customer.demand;
  node.service = customer.service;
  node.window = {customer.ready, customer.due};
  node.nominal_time = nominal_visit_time(node, policy);
  node.members = {customer.id};
  return node;
}

Graph::Graph(std::vector<CoarseNode> nodes, double capacity)
    : nodes_(std::move(nodes)), capacity_(capacity) {
  const std::size_t n = nodes_.size();
  travel_.assign(n * n, 0.0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      const double t = travel_time(nodes_[a], nodes_[b]);
      travel_[a * n + b] = t;
      travel_[b * n + a] = t;
    }
  }
  build_index();
}

Graph::Graph(std::vector<CoarseNode> nodes, std::vector<double> travel, double capacity)
    : nodes_(std::move(nodes)), travel_(std::move(travel)), capacity_(capacity) {
  const std::size_t n = nodes_.size();
  if (travel_.size() != n * n) {
    throw std::invalid_argument("travel matrix size does not match node count");
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (travel_[a * n + a] != 0.0) {
      throw std::invalid_argument("travel matrix diagonal must be zero");
    }
    for (std::size_t b = a + 1; b < n; ++b) {
      if (travel_[a * n + b] != travel_[b * n + a] || travel_[a * n + b] < 0.0) {
        throw std::invalid_argument("travel matrix must be symmetric and nonnegative");
      }
    }
  }
  build_index();
}

void Graph::build_index() {
  if (nodes_.empty() || nodes_.front().kind != NodeKind::depot) {
    throw std::invalid_argument("graph must start with the depot node");
  }
  index_.reserve(nodes_.size());
  for (std::size_t k = 0; k < nodes_.size(); ++k) {
    if (k > 0 && nodes_[k].kind == NodeKind::depot) {
      throw std::invalid_argument("graph has more than one depot");
    }
    if (!index_.emplace(nodes_[k].id, k).second) {
      throw std::invalid_argument("duplicate node id " + to_string(nodes_[k].id));
    }
  }
}

Graph Graph::from_instance(const Instance& instance, NominalTimePolicy policy) {
  std::vector<CoarseNode> nodes;
  nodes.reserve(instance.customers.size() + 1);
  nodes.push_back(make_depot_node(instance.depot));
  for (const Customer& c : instance.customers) nodes.push_back(make_customer_node(c, policy));
  return Graph(std::move(nodes), instance.capacity);
}

std::size_t Graph::index_of(NodeId id) const {
  auto it = index_.find(id);
  if (it == index_.end()) {
    throw StructuralError("unknown node id " + to_string(id));
  }
  return it->second;
}

NodeId Graph::max_id() const {
  NodeId best = nodes_.front().id;
  for (const CoarseNode& node : nodes_) best = std::max(best, node.id);
  return best;
}

}  // namespace stcvrp

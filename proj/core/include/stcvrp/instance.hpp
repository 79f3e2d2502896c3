#pragma once

#include <string>
#include <vector>

#include "stcvrp/ids.hpp"

namespace stcvrp {

struct Customer {
  NodeId id{};
  double x = 0.0;
  double y = 0.0;
  double demand = 0.0;
  double ready = 0.0;    // earliest service start
  double due = 0.0;      // latest service start
  double service = 0.0;

  friend bool operator==(const Customer&, const Customer&) = default;
};

/// A CVRPTW instance. The vehicle count is advisory: solvers may open more
/// routes and the metrics report actual usage.
struct Instance {
  std::string name;
  int vehicle_count = 0;
  double capacity = 0.0;
  Customer depot;
  std::vector<Customer> customers;  // ids 1..n in order

  [[nodiscard]] std::size_t size() const { return customers.size(); }

  friend bool operator==(const Instance&, const Instance&) = default;
};

/// Throws ValidationError when the instance breaks one of its invariants.
void validate(const Instance& instance);

}  // namespace stcvrp

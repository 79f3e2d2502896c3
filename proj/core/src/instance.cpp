#include "stcvrp/instance.hpp"

#include <cmath>

#include "stcvrp/error.hpp"

namespace stcvrp {
namespace {

bool finite(const Customer& c) {
  return std::isfinite(c.x) && std::isfinite(c.y) && std::isfinite(c.demand) &&
         std::isfinite(c.ready) && std::isfinite(c.due) && std::isfinite(c.service);
}

std::string where(const Customer& c) { return "customer " + to_string(c.id); }

}  // namespace

void validate(const Instance& instance) {
  if (instance.vehicle_count < 1) {
    throw ValidationError("vehicle count must be at least 1");
  }
  if (!(instance.capacity > 0.0) || !std::isfinite(instance.capacity)) {
    throw ValidationError("vehicle capacity must be positive");
  }
  const Customer& depot = instance.depot;
  if (depot.id != kDepotId) {
    throw ValidationError("depot row must have id 0");
  }
  if (!finite(depot)) {
    throw ValidationError("depot has a non-finite field");
  }
  if (depot.demand != 0.0 || depot.service != 0.0) {
    throw ValidationError("depot must have zero demand and zero service time");
  }
  if (depot.ready > depot.due) {
    throw ValidationError("depot time window is empty");
  }
  for (std::size_t k = 0; k < instance.customers.size(); ++k) {
    const Customer& c = instance.customers[k];
    if (to_int(c.id) != static_cast<std::int32_t>(k + 1)) {
      throw ValidationError("customer ids must run 1..n without gaps; found " + where(c) +
                            " at position " + std::to_string(k + 1));
    }
    if (!finite(c)) {
      throw ValidationError(where(c) + " has a non-finite field");
    }
    if (c.ready > c.due) {
      throw ValidationError(where(c) + " has ready time after due date");
    }
    if (c.demand < 0.0 || c.service < 0.0) {
      throw ValidationError(where(c) + " has negative demand or service time");
    }
    if (c.demand > instance.capacity) {
      throw ValidationError(where(c) + " demand exceeds vehicle capacity");
    }
  }
}

}  // namespace stcvrp

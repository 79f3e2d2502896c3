#pragma once

#include <cstdint>
#include <string>

namespace stcvrp {

/// Identifier of a node in a (possibly coarsened) graph. Original customers
/// keep their Solomon numbers, the depot is 0, super-nodes get fresh ids.
enum class NodeId : std::int32_t {};

inline constexpr NodeId kDepotId{0};

constexpr std::int32_t to_int(NodeId id) { return static_cast<std::int32_t>(id); }

inline std::string to_string(NodeId id) { return std::to_string(to_int(id)); }

// Slack used when comparing simulated times against window bounds.
inline constexpr double kTimeEpsilon = 1e-9;

}  // namespace stcvrp

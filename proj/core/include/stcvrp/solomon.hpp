#pragma once

#include <filesystem>
#include <iosfwd>
#include <string_view>

#include "stcvrp/instance.hpp"

namespace stcvrp {

// Reader and writer for the Solomon plain-text VRPTW layout:
//
//   C101
//
//   VEHICLE
//   NUMBER     CAPACITY
//     25         200
//
//   CUSTOMER
//   CUST NO.  XCOORD.  YCOORD.  DEMAND  READY TIME  DUE DATE  SERVICE TIME
//       0      40       50       0       0          1236      0
//       1      45       68      10     912           967     90
//
// Whitespace amounts are insignificant. Row 0 is the depot.

Instance parse_solomon(std::istream& in);
Instance parse_solomon(std::string_view text);

/// Throws IoError if the file cannot be opened.
Instance read_solomon_file(const std::filesystem::path& path);

void write_solomon(std::ostream& out, const Instance& instance);

}  // namespace stcvrp

#include "stcvrp/solomon.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "stcvrp/error.hpp"

namespace stcvrp {
namespace {

struct Line {
  std::size_t number = 0;  // 1-based
  std::vector<std::string> tokens;
};

std::vector<std::string> split(const std::string& text) {
  std::vector<std::string> tokens;
  std::istringstream stream(text);
  std::string token;
  while (stream >> token) tokens.push_back(token);
  return tokens;
}

std::string upper(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  return s;
}

bool to_number(const std::string& token, double& value) {
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  return ec == std::errc() && ptr == last;
}

bool all_numeric(const Line& line) {
  double ignored = 0.0;
  return !line.tokens.empty() &&
         std::all_of(line.tokens.begin(), line.tokens.end(),
                     [&](const std::string& t) { return to_number(t, ignored); });
}

std::ptrdiff_t find_keyword(const std::vector<Line>& lines, std::size_t from, const char* word) {
  for (std::size_t k = from; k < lines.size(); ++k) {
    if (upper(lines[k].tokens.front()) == word) return static_cast<std::ptrdiff_t>(k);
  }
  return -1;
}

std::string format_number(double value) {
  std::array<char, 64> buffer{};
  auto [ptr, ec] = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value);
  return std::string(buffer.data(), ptr);
}

}  // namespace

Instance parse_solomon(std::istream& in) {
  std::vector<Line> lines;
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    auto tokens = split(raw);
    if (!tokens.empty()) lines.push_back({number, std::move(tokens)});
  }
  if (lines.empty()) {
    throw ParseError("empty input: missing title line");
  }

  Instance instance;
  const Line& title = lines.front();
  for (std::size_t k = 0; k < title.tokens.size(); ++k) {
    if (k > 0) instance.name += ' ';
    instance.name += title.tokens[k];
  }

  const auto vehicle = find_keyword(lines, 1, "VEHICLE");
  if (vehicle < 0) {
    throw ParseError("missing VEHICLE section");
  }
  const auto customer = find_keyword(lines, static_cast<std::size_t>(vehicle) + 1, "CUSTOMER");
  if (customer < 0) {
    throw ParseError("missing CUSTOMER section");
  }

  // VEHICLE, a NUMBER/CAPACITY header, then the two values.
  bool have_fleet = false;
  for (auto k = vehicle + 1; k < customer; ++k) {
    const Line& line = lines[static_cast<std::size_t>(k)];
    if (!all_numeric(line)) continue;
    if (line.tokens.size() != 2) {
      throw ParseError("line " + std::to_string(line.number) +
                       ": expected NUMBER and CAPACITY values");
    }
    double count = 0.0;
    double capacity = 0.0;
    to_number(line.tokens[0], count);
    to_number(line.tokens[1], capacity);
    if (count != std::floor(count)) {
      throw ParseError("line " + std::to_string(line.number) + ": vehicle NUMBER is not an integer");
    }
    instance.vehicle_count = static_cast<int>(count);
    instance.capacity = capacity;
    have_fleet = true;
    break;
  }
  if (!have_fleet) {
    throw ParseError("VEHICLE section lacks NUMBER and CAPACITY values");
  }

  std::vector<Customer> rows;
  for (auto k = static_cast<std::size_t>(customer) + 1; k < lines.size(); ++k) {
    const Line& line = lines[k];
    if (!all_numeric(line)) {
      if (rows.empty()) continue;  // column header
      throw ParseError("line " + std::to_string(line.number) + ": non-numeric customer row");
    }
    if (line.tokens.size() != 7) {
      throw ParseError("line " + std::to_string(line.number) + ": expected 7 columns, found " +
                       std::to_string(line.tokens.size()));
    }
    std::array<double, 7> v{};
    for (std::size_t c = 0; c < 7; ++c) to_number(line.tokens[c], v[c]);
    if (v[0] != std::floor(v[0]) || v[0] < 0.0) {
      throw ParseError("line " + std::to_string(line.number) + ": customer number is not a "
                       "nonnegative integer");
    }
    rows.push_back(Customer{NodeId{static_cast<std::int32_t>(v[0])}, v[1], v[2], v[3], v[4],
                            v[5], v[6]});
  }
  if (rows.empty()) {
    throw ParseError("CUSTOMER section has no rows");
  }

  instance.depot = rows.front();
  if (instance.depot.id != kDepotId) {
    throw ValidationError("first customer row must be the depot with id 0");
  }
  instance.customers.assign(rows.begin() + 1, rows.end());
  std::sort(instance.customers.begin(), instance.customers.end(),
            [](const Customer& a, const Customer& b) { return a.id < b.id; });
  for (std::size_t k = 1; k < instance.customers.size(); ++k) {
    if (instance.customers[k].id == instance.customers[k - 1].id) {
      throw ValidationError("duplicate customer id " + to_string(instance.customers[k].id));
    }
  }
  validate(instance);
  return instance;
}

Instance parse_solomon(std::string_view text) {
  std::istringstream stream{std::string(text)};
  return parse_solomon(stream);
}

Instance read_solomon_file(const std::filesystem::path& path) {
  std::ifstream file(path);
  if (!file) {
    throw IoError("cannot open instance file " + path.string());
  }
  return parse_solomon(file);
}

void write_solomon(std::ostream& out, const Instance& instance) {
  out << (instance.name.empty() ? std::string("UNNAMED") : instance.name) << "\n\n";
  out << "VEHICLE\n";
  out << "NUMBER     CAPACITY\n";
  out << "  " << instance.vehicle_count << "         " << format_number(instance.capacity)
      << "\n\n";
  out << "CUSTOMER\n";
  out << "CUST NO.  XCOORD.   YCOORD.    DEMAND   READY TIME  DUE DATE   SERVICE   TIME\n\n";
  auto row = [&](const Customer& c) {
    out << "  " << to_int(c.id) << ' ' << format_number(c.x) << ' ' << format_number(c.y) << ' '
        << format_number(c.demand) << ' ' << format_number(c.ready) << ' '
        << format_number(c.due) << ' ' << format_number(c.service) << '\n';
  };
  row(instance.depot);
  for (const Customer& c : instance.customers) row(c);
}

}  // namespace stcvrp

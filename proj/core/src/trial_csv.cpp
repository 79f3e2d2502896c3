#include "stcvrp/trial_csv.hpp"

#include <array>
#include <charconv>
#include <istream>
#include <ostream>

#include "stcvrp/error.hpp"

namespace stcvrp {
namespace {

std::string format(double value) {
  std::array<char, 64> buffer{};
  auto [ptr, ec] = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value);
  return std::string(buffer.data(), ptr);
}

std::string quote(const std::string& value) {
  if (value.find_first_of(",\"\n\r") == std::string::npos) return value;
  std::string out = "\"";
  for (char c : value) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::vector<std::string> split_csv(const std::string& line, std::size_t line_number) {
  std::vector<std::string> cells;
  std::string cell;
  bool quoted = false;
  for (std::size_t k = 0; k < line.size(); ++k) {
    const char c = line[k];
    if (quoted) {
      if (c == '"' && k + 1 < line.size() && line[k + 1] == '"') {
        cell += '"';
        ++k;
      } else if (c == '"') {
        quoted = false;
      } else {
        cell += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      cells.push_back(std::move(cell));
      cell.clear();
    } else if (c != '\r') {
      cell += c;
    }
  }
  if (quoted) throw ParseError("csv line " + std::to_string(line_number) + ": unterminated quote");
  cells.push_back(std::move(cell));
  return cells;
}

struct Cells {
  const std::vector<std::string>& values;
  std::size_t line;
  std::size_t next = 0;

  const std::string& take() { return values[next++]; }

  double real() {
    const std::string& s = take();
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) fail(s);
    return v;
  }

  long long whole() {
    const std::string& s = take();
    long long v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) fail(s);
    return v;
  }

  std::uint64_t unsigned_whole() {
    const std::string& s = take();
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) fail(s);
    return v;
  }

  bool boolean() {
    const std::string& s = take();
    if (s == "true") return true;
    if (s == "false") return false;
    fail(s);
  }

  [[noreturn]] void fail(const std::string& value) const {
    throw ParseError("csv line " + std::to_string(line) + ": bad value '" + value +
                     "' in column " + trial_csv_columns()[next - 1]);
  }
};

void write_metrics(std::vector<std::string>& cells, const Metrics& m, bool full) {
  cells.push_back(format(m.total_distance));
  cells.push_back(std::to_string(m.num_vehicles));
  cells.push_back(format(m.total_duration));
  if (full) {
    cells.push_back(format(m.total_travel));
    cells.push_back(format(m.total_wait));
    cells.push_back(format(m.total_service));
  }
  cells.push_back(std::to_string(m.tw_violations));
  cells.push_back(std::to_string(m.capacity_violations));
  cells.push_back(m.feasible ? "true" : "false");
}

Metrics read_metrics(Cells& cells, bool full) {
  Metrics m;
  m.total_distance = cells.real();
  m.num_vehicles = static_cast<int>(cells.whole());
  m.total_duration = cells.real();
  if (full) {
    m.total_travel = cells.real();
    m.total_wait = cells.real();
    m.total_service = cells.real();
  }
  m.tw_violations = static_cast<int>(cells.whole());
  m.capacity_violations = static_cast<int>(cells.whole());
  m.feasible = cells.boolean();
  return m;
}

}  // namespace

TrialRow make_row(const TrialResult& result, const std::string& instance, std::uint64_t seed) {
  TrialRow row;
  row.kind = result.baseline ? "baseline" : "trial";
  row.instance = instance;
  row.seed = seed;
  row.trial_index = result.trial_index;
  row.solver = result.solver;
  row.params = result.params;
  row.coarse_nodes = result.coarse_nodes;
  row.merges = result.merges;
  row.coarse = result.coarse_metrics;
  row.metrics = result.metrics;
  row.score = result.score;
  row.repairs = result.repairs;
  row.timings = result.timings;
  return row;
}

const std::vector<std::string>& trial_csv_columns() {
  static const std::vector<std::string> columns = {
      "kind", "instance", "seed", "trial_index", "solver", "alpha", "beta", "p", "radius_coeff",
      "propagation", "separation", "tau_mode", "coarse_nodes", "merges",
      "coarse_total_distance", "coarse_num_vehicles", "coarse_total_duration",
      "coarse_tw_violations", "coarse_capacity_violations", "coarse_feasible",
      "total_distance", "num_vehicles", "total_duration", "total_travel", "total_wait",
      "total_service", "tw_violations", "capacity_violations", "feasible", "score", "swaps",
      "capacity_splits", "coarsen_ms", "solve_ms", "inflate_ms"};
  return columns;
}

bool is_timing_column(const std::string& column) {
  return column == "coarsen_ms" || column == "solve_ms" || column == "inflate_ms";
}

void write_trial_csv(std::ostream& out, std::span<const TrialRow> rows) {
  const auto& columns = trial_csv_columns();
  for (std::size_t k = 0; k < columns.size(); ++k) out << (k ? "," : "") << columns[k];
  out << '\n';
  for (const TrialRow& r : rows) {
    std::vector<std::string> cells;
    cells.reserve(columns.size());
    cells.push_back(quote(r.kind));
    cells.push_back(quote(r.instance));
    cells.push_back(std::to_string(r.seed));
    cells.push_back(std::to_string(r.trial_index));
    cells.push_back(to_string(r.solver));
    cells.push_back(format(r.params.alpha));
    cells.push_back(format(r.params.beta));
    cells.push_back(format(r.params.p_target));
    cells.push_back(format(r.params.radius_coeff));
    cells.push_back(to_string(r.params.propagation));
    cells.push_back(to_string(r.params.separation));
    cells.push_back(to_string(r.params.tau_mode));
    cells.push_back(std::to_string(r.coarse_nodes));
    cells.push_back(std::to_string(r.merges));
    write_metrics(cells, r.coarse, false);
    write_metrics(cells, r.metrics, true);
    cells.push_back(format(r.score));
    cells.push_back(std::to_string(r.repairs.swaps));
    cells.push_back(std::to_string(r.repairs.capacity_splits));
    cells.push_back(format(r.timings.coarsen_ms));
    cells.push_back(format(r.timings.solve_ms));
    cells.push_back(format(r.timings.inflate_ms));
    for (std::size_t k = 0; k < cells.size(); ++k) out << (k ? "," : "") << cells[k];
    out << '\n';
  }
  if (!out) throw IoError("failed to write trial csv");
}

std::vector<TrialRow> read_trial_csv(std::istream& in) {
  const auto& columns = trial_csv_columns();
  std::string line;
  if (!std::getline(in, line)) throw ParseError("csv is empty");
  if (split_csv(line, 1) != columns) throw ParseError("csv header does not match trial columns");

  std::vector<TrialRow> rows;
  std::size_t number = 1;
  while (std::getline(in, line)) {
    ++number;
    if (line.empty() || line == "\r") continue;
    const auto values = split_csv(line, number);
    if (values.size() != columns.size()) {
      throw ParseError("csv line " + std::to_string(number) + ": expected " +
                       std::to_string(columns.size()) + " cells, found " +
                       std::to_string(values.size()));
    }
    Cells cells{values, number};
    TrialRow r;
    r.kind = cells.take();
    r.instance = cells.take();
    r.seed = cells.unsigned_whole();
    r.trial_index = static_cast<int>(cells.whole());
    try {
      r.solver = parse_solver(cells.take());
      r.params.alpha = cells.real();
      r.params.beta = cells.real();
      r.params.p_target = cells.real();
      r.params.radius_coeff = cells.real();
      r.params.propagation = parse_propagation(cells.take());
      r.params.separation = parse_separation(cells.take());
      r.params.tau_mode = parse_tau_mode(cells.take());
    } catch (const std::invalid_argument& e) {
      throw ParseError("csv line " + std::to_string(number) + ": " + e.what());
    }
    r.coarse_nodes = static_cast<std::size_t>(cells.whole());
    r.merges = static_cast<std::size_t>(cells.whole());
    r.coarse = read_metrics(cells, false);
    r.metrics = read_metrics(cells, true);
    r.score = cells.real();
    r.repairs.swaps = static_cast<int>(cells.whole());
    r.repairs.capacity_splits = static_cast<int>(cells.whole());
    r.timings.coarsen_ms = cells.real();
    r.timings.solve_ms = cells.real();
    r.timings.inflate_ms = cells.real();
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace stcvrp

#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>

#include "generators.hpp"
#include "stcvrp/error.hpp"
#include "stcvrp/trial_csv.hpp"

using namespace stcvrp;

namespace {

std::vector<TrialRow> sample_rows() {
  const Graph g = Graph::from_instance(support::random_instance(4, {}));
  std::vector<TrialRow> rows;
  const SearchResult s = random_search(g, {}, 5, 42);
  for (const TrialResult& t : s.trials) rows.push_back(make_row(t, "R1,\"x\"", 42));
  rows.push_back(make_row(run_baseline(g, SolverKind::savings), "R1,\"x\"", 42));
  return rows;
}

}  // namespace

TEST(TrialCsv, HeaderListsEveryColumn) {
  std::ostringstream out;
  write_trial_csv(out, {});
  std::string header = out.str();
  for (const std::string& column : trial_csv_columns()) {
    EXPECT_NE(header.find(column), std::string::npos) << column;
  }
  for (const char* column : {"alpha", "beta", "p", "radius_coeff", "solver", "total_distance",
                             "num_vehicles", "total_duration", "tw_violations",
                             "capacity_violations", "feasible", "score", "coarsen_ms",
                             "solve_ms", "inflate_ms"}) {
    EXPECT_NE(std::find(trial_csv_columns().begin(), trial_csv_columns().end(), column),
              trial_csv_columns().end())
        << column;
  }
  EXPECT_TRUE(is_timing_column("solve_ms"));
  EXPECT_FALSE(is_timing_column("score"));
}

TEST(TrialCsv, OneLinePerRowAndRoundTrip) {
  const auto rows = sample_rows();
  std::ostringstream out;
  write_trial_csv(out, rows);
  const std::string text = out.str();
  EXPECT_EQ(static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n')),
            rows.size() + 1);

  std::istringstream in(text);
  const auto back = read_trial_csv(in);
  ASSERT_EQ(back.size(), rows.size());
  for (std::size_t k = 0; k < rows.size(); ++k) {
    EXPECT_EQ(back[k].kind, rows[k].kind);
    EXPECT_EQ(back[k].instance, rows[k].instance);
    EXPECT_EQ(back[k].trial_index, rows[k].trial_index);
    EXPECT_EQ(back[k].solver, rows[k].solver);
    EXPECT_EQ(back[k].params.alpha, rows[k].params.alpha);
    EXPECT_EQ(back[k].params.radius_coeff, rows[k].params.radius_coeff);
    EXPECT_EQ(back[k].metrics, rows[k].metrics);
    EXPECT_EQ(back[k].coarse.total_distance, rows[k].coarse.total_distance);
    EXPECT_EQ(back[k].coarse.num_vehicles, rows[k].coarse.num_vehicles);
    EXPECT_EQ(back[k].coarse.total_duration, rows[k].coarse.total_duration);
    EXPECT_EQ(back[k].coarse.tw_violations, rows[k].coarse.tw_violations);
    EXPECT_EQ(back[k].coarse.feasible, rows[k].coarse.feasible);
    EXPECT_EQ(back[k].score, rows[k].score);
    EXPECT_EQ(back[k].timings.solve_ms, rows[k].timings.solve_ms);
  }
  EXPECT_EQ(back.back().kind, "baseline");
}

TEST(TrialCsv, RejectsMalformedInput) {
  std::istringstream bad_header("kind,instance\n");
  EXPECT_THROW(read_trial_csv(bad_header), ParseError);

  std::ostringstream out;
  write_trial_csv(out, sample_rows());
  std::string text = out.str();
  text.insert(text.find('\n') + 1, "trial,short,row\n");
  std::istringstream short_row(text);
  EXPECT_THROW(read_trial_csv(short_row), ParseError);
}

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "stcvrp/coarsening.hpp"
#include "stcvrp/error.hpp"
#include "stcvrp/evaluation.hpp"
#include "stcvrp/report.hpp"
#include "stcvrp/solomon.hpp"
#include "stcvrp/solution_io.hpp"
#include "stcvrp/svg.hpp"
#include "stcvrp/trial_csv.hpp"
#include "stcvrp/tuning.hpp"

namespace fs = std::filesystem;
using namespace stcvrp;

namespace {

constexpr int kExitInput = 2;
constexpr int kExitIo = 3;

struct PipelineOptions {
  std::string instance;
  CoarseningParams params;
  std::string solver = "savings";
  std::string propagation = "relaxed";
  std::string separation = "nominal";
  std::string tau_mode = "midpoint";
  std::uint64_t seed = 0;
  std::string out;
  bool debug_rounds = false;
};

struct TuneOptions {
  std::string instance;
  int trials = 20;
  std::uint64_t seed = 42;
  std::string out_dir = ".";
  unsigned jobs = 1;
  std::string config;
  std::vector<double> alpha, beta, p, radius;
  std::vector<std::string> solvers;
  std::string propagation, separation, tau_mode;
};

std::string instance_label(const std::string& path) {
  std::string stem = fs::path(path).stem().string();
  std::transform(stem.begin(), stem.end(), stem.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  return stem;
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << text;
  if (!out) throw IoError("failed writing " + path.string());
}

std::string read_text(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string summary_line(const std::string& label, SolverKind solver, const Metrics& m,
                         double score) {
  std::ostringstream line;
  line << label << ' ' << to_string(solver) << " distance=" << m.total_distance
       << " vehicles=" << m.num_vehicles << " duration=" << m.total_duration
       << " tw_violations=" << m.tw_violations << " capacity_violations="
       << m.capacity_violations << " feasible=" << (m.feasible ? "true" : "false")
       << " score=" << score;
  return line.str();
}

void emit_document(const SolutionDocument& doc, const std::string& out, const std::string& line) {
  if (out.empty() || out == "-") {
    write_solution(std::cout, doc);
    std::cerr << line << '\n';
  } else {
    write_text(out, write_solution(doc));
    std::cout << line << '\n';
  }
}

int cmd_solve(PipelineOptions& o, bool baseline) {
  const Instance instance = read_solomon_file(o.instance);
  const Graph graph = Graph::from_instance(instance);
  const SolverKind solver = parse_solver(o.solver);
  o.params.propagation = parse_propagation(o.propagation);
  o.params.separation = parse_separation(o.separation);
  o.params.tau_mode = parse_tau_mode(o.tau_mode);
  o.params.validate();

  if (!baseline && o.debug_rounds) {
    coarsen(graph, o.params,
            [](const RoundStats& stats, const Graph&) { std::cerr << to_string(stats) << '\n'; });
  }
  const TrialResult result =
      baseline ? run_baseline(graph, solver) : run_pipeline(graph, o.params, solver);
  const std::string label = instance_label(o.instance);
  const SolutionDocument doc = make_document(label, o.seed, result.params, solver,
                                             result.solution, result.metrics, result.timings,
                                             graph);
  emit_document(doc, o.out, summary_line(label, solver, result.metrics, result.score));
  return 0;
}

SearchSpace load_space(const TuneOptions& o) {
  SearchSpace space;
  if (!o.config.empty()) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(read_text(o.config));
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(o.config + ": " + e.what());
    }
    try {
      if (j.contains("alpha")) space.alpha = j["alpha"].get<std::vector<double>>();
      if (j.contains("beta")) space.beta = j["beta"].get<std::vector<double>>();
      if (j.contains("p")) space.p_target = j["p"].get<std::vector<double>>();
      if (j.contains("radius")) space.radius_coeff = j["radius"].get<std::vector<double>>();
      if (j.contains("solvers")) {
        space.solvers.clear();
        for (const auto& name : j["solvers"].get<std::vector<std::string>>()) {
          space.solvers.push_back(parse_solver(name));
        }
      }
      if (j.contains("propagation")) {
        space.propagation = parse_propagation(j["propagation"].get<std::string>());
      }
      if (j.contains("separation")) {
        space.separation = parse_separation(j["separation"].get<std::string>());
      }
      if (j.contains("tau_mode")) space.tau_mode = parse_tau_mode(j["tau_mode"].get<std::string>());
    } catch (const nlohmann::json::exception& e) {
      throw SchemaError(o.config + ": " + e.what());
    }
  }
  if (!o.alpha.empty()) space.alpha = o.alpha;
  if (!o.beta.empty()) space.beta = o.beta;
  if (!o.p.empty()) space.p_target = o.p;
  if (!o.radius.empty()) space.radius_coeff = o.radius;
  if (!o.solvers.empty()) {
    space.solvers.clear();
    for (const auto& name : o.solvers) space.solvers.push_back(parse_solver(name));
  }
  if (!o.propagation.empty()) space.propagation = parse_propagation(o.propagation);
  if (!o.separation.empty()) space.separation = parse_separation(o.separation);
  if (!o.tau_mode.empty()) space.tau_mode = parse_tau_mode(o.tau_mode);
  space.validate();
  return space;
}

int cmd_tune(const TuneOptions& o) {
  const SearchSpace space = load_space(o);
  const Instance instance = read_solomon_file(o.instance);
  const Graph graph = Graph::from_instance(instance);
  const std::string label = instance_label(o.instance);

  const SearchResult search = random_search(graph, space, o.trials, o.seed, o.jobs);
  std::vector<TrialRow> trial_rows;
  for (const TrialResult& t : search.trials) trial_rows.push_back(make_row(t, label, o.seed));

  std::vector<TrialRow> baseline_rows;
  for (SolverKind solver : {SolverKind::greedy, SolverKind::savings}) {
    baseline_rows.push_back(make_row(run_baseline(graph, solver), label, o.seed));
  }

  std::error_code ec;
  fs::create_directories(o.out_dir, ec);
  if (ec) throw IoError("cannot create " + o.out_dir + ": " + ec.message());
  const fs::path dir(o.out_dir);

  std::ostringstream trials_csv, baseline_csv;
  write_trial_csv(trials_csv, trial_rows);
  write_trial_csv(baseline_csv, baseline_rows);
  write_text(dir / (label + "_trials.csv"), trials_csv.str());
  write_text(dir / (label + "_baseline.csv"), baseline_csv.str());

  const TrialResult& best = search.best_trial();
  const SolutionDocument doc = make_document(label, o.seed, best.params, best.solver,
                                             best.solution, best.metrics, best.timings, graph);
  write_text(dir / (label + "_best.json"), write_solution(doc));

  std::cout << "best trial " << best.trial_index << ": "
            << summary_line(label, best.solver, best.metrics, best.score) << '\n';
  return 0;
}

int cmd_plot(const std::string& document, const std::string& out) {
  const SolutionDocument doc = read_solution(read_text(document));
  const std::string svg = render_svg(doc);
  if (out.empty() || out == "-") {
    std::cout << svg;
  } else {
    write_text(out, svg);
  }
  return 0;
}

int cmd_report(const std::vector<std::string>& inputs) {
  std::vector<fs::path> files;
  for (const std::string& input : inputs) {
    if (fs::is_directory(input)) {
      std::vector<fs::path> found;
      for (const auto& entry : fs::directory_iterator(input)) {
        if (entry.is_regular_file() && entry.path().extension() == ".csv") {
          found.push_back(entry.path());
        }
      }
      std::sort(found.begin(), found.end());
      files.insert(files.end(), found.begin(), found.end());
    } else {
      files.emplace_back(input);
    }
  }
  std::vector<TrialRow> rows;
  for (const fs::path& file : files) {
    std::istringstream in(read_text(file));
    try {
      auto parsed = read_trial_csv(in);
      rows.insert(rows.end(), parsed.begin(), parsed.end());
    } catch (const ParseError& e) {
      throw ParseError(file.string() + ": " + e.what());
    }
  }
  print_report(std::cout, rows);
  return 0;
}

void add_pipeline_flags(CLI::App* cmd, PipelineOptions& o, bool coarsening) {
  cmd->add_option("instance", o.instance, "Solomon instance file")->required();
  cmd->add_option("--solver", o.solver, "greedy or savings")->capture_default_str();
  cmd->add_option("--seed", o.seed, "Seed recorded in the document")->capture_default_str();
  cmd->add_option("--out", o.out, "Output document path (default: stdout)");
  if (!coarsening) return;
  cmd->add_option("--alpha", o.params.alpha, "Spatial weight")->capture_default_str();
  cmd->add_option("--beta", o.params.beta, "Temporal weight")->capture_default_str();
  cmd->add_option("--p", o.params.p_target, "Fraction of customer nodes to keep")
      ->capture_default_str();
  cmd->add_option("--radius", o.params.radius_coeff, "Radius coefficient")->capture_default_str();
  cmd->add_option("--propagation", o.propagation, "relaxed or conservative")
      ->capture_default_str();
  cmd->add_option("--separation", o.separation, "nominal or strict")->capture_default_str();
  cmd->add_option("--tau-mode", o.tau_mode, "midpoint or conservative")->capture_default_str();
  cmd->add_flag("--debug-rounds", o.debug_rounds, "Print one JSON line per round to stderr");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Vehicle routing with time windows via spatio-temporal graph coarsening"};
  app.require_subcommand(1);

  PipelineOptions solve_opts;
  auto* solve = app.add_subcommand("solve", "Coarsen, solve, inflate and evaluate once");
  add_pipeline_flags(solve, solve_opts, true);

  PipelineOptions baseline_opts;
  auto* baseline = app.add_subcommand("baseline", "Solve the original graph without coarsening");
  add_pipeline_flags(baseline, baseline_opts, false);

  TuneOptions tune_opts;
  auto* tune = app.add_subcommand("tune", "Seeded random search over coarsening parameters");
  tune->add_option("instance", tune_opts.instance, "Solomon instance file")->required();
  tune->add_option("--trials", tune_opts.trials, "Number of trials")->capture_default_str();
  tune->add_option("--seed", tune_opts.seed, "Campaign seed")->capture_default_str();
  tune->add_option("--out-dir", tune_opts.out_dir, "Directory for CSV and best document")
      ->capture_default_str();
  tune->add_option("--jobs", tune_opts.jobs, "Worker threads")->capture_default_str();
  tune->add_option("--config", tune_opts.config, "JSON search-space file");
  tune->add_option("--alpha-choices", tune_opts.alpha, "Override alpha choices");
  tune->add_option("--beta-choices", tune_opts.beta, "Override beta choices");
  tune->add_option("--p-choices", tune_opts.p, "Override P choices");
  tune->add_option("--radius-choices", tune_opts.radius, "Override radius choices");
  tune->add_option("--solvers", tune_opts.solvers, "Override solver choices");
  tune->add_option("--propagation", tune_opts.propagation, "relaxed or conservative");
  tune->add_option("--separation", tune_opts.separation, "nominal or strict");
  tune->add_option("--tau-mode", tune_opts.tau_mode, "midpoint or conservative");

  std::string plot_doc, plot_out;
  auto* plot = app.add_subcommand("plot", "Render a solution document as SVG");
  plot->add_option("document", plot_doc, "Solution document")->required();
  plot->add_option("--out", plot_out, "SVG path (default: stdout)");

  std::vector<std::string> report_inputs;
  auto* report = app.add_subcommand("report", "Compare best tuned trials against baselines");
  report->add_option("inputs", report_inputs, "Trial/baseline CSV files or directories")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (*solve) return cmd_solve(solve_opts, false);
    if (*baseline) return cmd_solve(baseline_opts, true);
    if (*tune) return cmd_tune(tune_opts);
    if (*plot) return cmd_plot(plot_doc, plot_out);
    if (*report) return cmd_report(report_inputs);
  } catch (const IoError& e) {
    std::cerr << "stcvrp: " << e.what() << '\n';
    return kExitIo;
  } catch (const ParseError& e) {
    std::cerr << "stcvrp: parse error: " << e.what() << '\n';
    return kExitInput;
  } catch (const ValidationError& e) {
    std::cerr << "stcvrp: invalid instance: " << e.what() << '\n';
    return kExitInput;
  } catch (const SchemaError& e) {
    std::cerr << "stcvrp: schema error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "stcvrp: " << e.what() << '\n';
    return kExitInput;
  }
  return 0;
}

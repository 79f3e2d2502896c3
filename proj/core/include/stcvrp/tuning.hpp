#pragma once

#include <cstdint>
#include <vector>

#include "stcvrp/coarsening.hpp"
#include "stcvrp/evaluation.hpp"
#include "stcvrp/heuristics.hpp"
#include "stcvrp/inflation.hpp"

namespace stcvrp {

/// Choice sets for the random search. Each trial draws every parameter
/// independently and uniformly, with replacement across trials.
struct SearchSpace {
  std::vector<double> alpha{0.1, 0.5, 0.9};
  std::vector<double> beta{0.1, 0.5, 0.9};
  std::vector<double> p_target{0.3, 0.5, 0.7};
  std::vector<double> radius_coeff{0.5, 1.0, 1.5, 2.0};
  std::vector<SolverKind> solvers{SolverKind::greedy, SolverKind::savings};
  // Fixed for the whole campaign.
  Propagation propagation = Propagation::relaxed;
  SeparationMode separation = SeparationMode::nominal;
  TauMode tau_mode = TauMode::midpoint;

  void validate() const;
};

struct StageTimings {
  double coarsen_ms = 0.0;
  double solve_ms = 0.0;
  double inflate_ms = 0.0;
};

struct TrialResult {
  int trial_index = -1;  // -1 for baselines
  bool baseline = false;
  CoarseningParams params;
  SolverKind solver = SolverKind::greedy;
  std::size_t coarse_nodes = 0;
  std::size_t merges = 0;
  Metrics coarse_metrics;  // reduced-graph solution on the reduced graph
  Metrics metrics;         // final solution on the original graph
  double score = 0.0;
  RepairStats repairs;
  StageTimings timings;
  Solution solution;       // on the original graph
};

struct TrialDraw {
  CoarseningParams params;
  SolverKind solver = SolverKind::greedy;
};

/// The parameters of trial `trial_index`; depends only on (space, seed, index).
TrialDraw draw_trial(const SearchSpace& space, std::uint64_t seed, int trial_index);

/// Solver on the original graph, no coarsening or inflation.
TrialResult run_baseline(const Graph& graph, SolverKind solver,
                         const PenaltyWeights& weights = {});

/// coarsen -> solve -> inflate -> light_postprocess -> evaluate. Post-processing
/// is skipped when coarsening merged nothing, so P = 1 reproduces the baseline.
TrialResult run_pipeline(const Graph& graph, const CoarseningParams& params, SolverKind solver,
                         const PenaltyWeights& weights = {});

struct SearchResult {
  std::vector<TrialResult> trials;
  std::size_t best = 0;

  [[nodiscard]] const TrialResult& best_trial() const { return trials.at(best); }
};

/// Best = lowest score, ties to the lower trial index. `jobs` worker threads
/// never change the result.
SearchResult random_search(const Graph& graph, const SearchSpace& space, int n_trials,
                           std::uint64_t seed, unsigned jobs = 1,
                           const PenaltyWeights& weights = {});

}  // namespace stcvrp

#include "stcvrp/tuning.hpp"

#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "stcvrp/rng.hpp"

namespace stcvrp {
namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

template <typename T>
const T& pick(TrialRng& rng, const std::vector<T>& choices) {
  return choices[rng.uniform_index(choices.size())];
}

}  // namespace

void SearchSpace::validate() const {
  if (alpha.empty() || beta.empty() || p_target.empty() || radius_coeff.empty() ||
      solvers.empty()) {
    throw std::invalid_argument("every search-space choice set must be nonempty");
  }
}

TrialDraw draw_trial(const SearchSpace& space, std::uint64_t seed, int trial_index) {
  TrialRng rng(seed, static_cast<std::uint64_t>(trial_index));
  TrialDraw draw;
  draw.params.alpha = pick(rng, space.alpha);
  draw.params.beta = pick(rng, space.beta);
  draw.params.p_target = pick(rng, space.p_target);
  draw.params.radius_coeff = pick(rng, space.radius_coeff);
  draw.params.propagation = space.propagation;
  draw.params.separation = space.separation;
  draw.params.tau_mode = space.tau_mode;
  draw.solver = pick(rng, space.solvers);
  return draw;
}

TrialResult run_baseline(const Graph& graph, SolverKind solver, const PenaltyWeights& weights) {
  TrialResult result;
  result.baseline = true;
  result.params.p_target = 1.0;
  result.solver = solver;
  result.coarse_nodes = graph.customer_count();

  const auto start = Clock::now();
  result.solution = solve(graph, solver);
  result.timings.solve_ms = elapsed_ms(start);

  result.metrics = evaluate(result.solution, graph);
  result.coarse_metrics = result.metrics;
  result.score = objective_score(result.metrics, weights);
  return result;
}

TrialResult run_pipeline(const Graph& graph, const CoarseningParams& params, SolverKind solver,
                         const PenaltyWeights& weights) {
  TrialResult result;
  result.params = params;
  result.solver = solver;

  auto start = Clock::now();
  CoarseningResult coarse = coarsen(graph, params);
  result.timings.coarsen_ms = elapsed_ms(start);
  result.coarse_nodes = coarse.graph.customer_count();
  result.merges = coarse.history.size();

  start = Clock::now();
  Solution reduced = solve(coarse.graph, solver);
  result.timings.solve_ms = elapsed_ms(start);
  result.coarse_metrics = evaluate(reduced, coarse.graph);

  start = Clock::now();
  if (coarse.history.empty()) {
    result.solution = std::move(reduced);
  } else {
    RepairResult repaired =
        light_postprocess(inflate(reduced, coarse.history, graph), graph);
    result.solution = std::move(repaired.solution);
    result.repairs = repaired.stats;
  }
  result.timings.inflate_ms = elapsed_ms(start);

  result.metrics = evaluate(result.solution, graph);
  result.score = objective_score(result.metrics, weights);
  return result;
}

SearchResult random_search(const Graph& graph, const SearchSpace& space, int n_trials,
                           std::uint64_t seed, unsigned jobs, const PenaltyWeights& weights) {
  if (n_trials < 1) throw std::invalid_argument("n_trials must be at least 1");
  space.validate();

  SearchResult search;
  search.trials.resize(static_cast<std::size_t>(n_trials));
  auto run = [&](int index) {
    const TrialDraw draw = draw_trial(space, seed, index);
    TrialResult trial = run_pipeline(graph, draw.params, draw.solver, weights);
    trial.trial_index = index;
    search.trials[static_cast<std::size_t>(index)] = std::move(trial);
  };

  const unsigned workers = std::max(1u, std::min(jobs, static_cast<unsigned>(n_trials)));
  if (workers == 1) {
    for (int k = 0; k < n_trials; ++k) run(k);
  } else {
    std::atomic<int> next{0};
    std::mutex failure_mutex;
    std::exception_ptr failure;
    {
      std::vector<std::jthread> pool;
      pool.reserve(workers);
      for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
          try {
            for (int k = next++; k < n_trials; k = next++) run(k);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            next = n_trials;
          }
        });
      }
    }
    if (failure) std::rethrow_exception(failure);
  }

  for (std::size_t k = 1; k < search.trials.size(); ++k) {
    if (search.trials[k].score < search.trials[search.best].score) search.best = k;
  }
  return search;
}

}  // namespace stcvrp

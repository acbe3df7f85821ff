#pragma once

#include <algorithm>
#include <vector>

#include "ollp/de.hpp"
#include "ollp/distance_graph.hpp"
#include "ollp/optimizer.hpp"
#include "ollp/pso.hpp"
#include "ollp/sade.hpp"
#include "ollp/sga.hpp"

namespace ollp::opt {

inline RunTrace run_optimizer(const FitnessFn& fitness, std::size_t dim, const OptimizerConfig& cfg) {
  switch (cfg.algo) {
    case Algorithm::SGA: return run_sga(fitness, dim, cfg);
    case Algorithm::DE: return run_de(fitness, dim, cfg);
    case Algorithm::SADE: return run_sade(fitness, dim, cfg);
    case Algorithm::PSO: return run_pso(fitness, dim, cfg);
  }
  return run_sga(fitness, dim, cfg);
}

/// Fitness over [0,1]^{3n} for a layout instance.
inline FitnessFn layout_fitness(const Instance& inst, const EvalConfig& eval) {
  return [&inst, eval](std::span<const double> genes) { return evaluate(genes, inst, eval); };
}

struct ExperimentResult {
  std::vector<RunTrace> traces;

  double mean_best() const {
    double sum = 0.0;
    for (const RunTrace& t : traces) sum += t.best_fitness;
    return sum / static_cast<double>(traces.size());
  }
  double min_best() const {
    double m = traces.front().best_fitness;
    for (const RunTrace& t : traces) m = std::min(m, t.best_fitness);
    return m;
  }
  const RunTrace& best_run() const {
    return *std::min_element(traces.begin(), traces.end(),
                             [](const RunTrace& a, const RunTrace& b) { return a.best_fitness < b.best_fitness; });
  }
};

/// `repeats` independent runs with seeds seed, seed + 1, ...
inline ExperimentResult run_experiment(const FitnessFn& fitness, std::size_t dim, const OptimizerConfig& cfg,
                                       int repeats) {
  if (repeats < 1) throw std::invalid_argument("repeats must be at least 1");
  ExperimentResult result;
  for (int r = 0; r < repeats; ++r) {
    OptimizerConfig run_cfg = cfg;
    run_cfg.seed = cfg.seed + static_cast<std::uint64_t>(r);
    result.traces.push_back(run_optimizer(fitness, dim, run_cfg));
  }
  return result;
}

inline ExperimentResult run_experiment(const Instance& inst, const EvalConfig& eval, const OptimizerConfig& cfg,
                                       int repeats) {
  return run_experiment(layout_fitness(inst, eval), 3 * inst.size(), cfg, repeats);
}

}  // namespace ollp::opt

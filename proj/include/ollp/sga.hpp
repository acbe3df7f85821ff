#pragma once

#include <numeric>

#include "ollp/optimizer.hpp"

namespace ollp::opt {

/// Index of the fittest of `size` uniformly drawn individuals (with replacement).
inline std::size_t tournament_select(const std::vector<double>& fit, int size, Rng& rng) {
  std::size_t winner = uniform_index(rng, fit.size());
  for (int k = 1; k < size; ++k) {
    const std::size_t c = uniform_index(rng, fit.size());
    if (fit[c] < fit[winner]) winner = c;
  }
  return winner;
}

/// Uniform-mask crossover: each gene comes from either parent with equal odds.
inline Genes binomial_crossover(const Genes& a, const Genes& b, Rng& rng) {
  Genes child(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) child[j] = uniform01(rng) < 0.5 ? a[j] : b[j];
  return child;
}

/// Uniform reset: each gene is redrawn from [0,1] with probability `rate`.
inline void uniform_mutation(Genes& g, double rate, Rng& rng) {
  for (double& v : g) {
    if (uniform01(rng) < rate) v = uniform01(rng);
  }
}

/// Generational GA with tournament selection, uniform-mask crossover,
/// uniform-reset mutation and elitism.
inline RunTrace run_sga(const FitnessFn& fitness, std::size_t dim, const OptimizerConfig& cfg) {
  validate(cfg);
  Rng rng(cfg.seed);
  RunState state(cfg, fitness);
  const std::size_t n = static_cast<std::size_t>(cfg.pop_size);
  const double pm = cfg.sga.mutation_rate.value_or(dim > 0 ? 1.0 / static_cast<double>(dim) : 0.0);

  std::vector<Genes> pop(n);
  for (Genes& g : pop) g = random_genes(rng, dim);
  std::vector<double> fit = state.evaluate(pop);
  state.observe(pop, fit);
  state.record(0, fit);

  for (int gen = 1; state.keep_going(gen - 1); ++gen) {
    std::vector<std::size_t> ranked(n);
    std::iota(ranked.begin(), ranked.end(), std::size_t{0});
    std::stable_sort(ranked.begin(), ranked.end(), [&](std::size_t a, std::size_t b) { return fit[a] < fit[b]; });

    const std::size_t elites = static_cast<std::size_t>(cfg.sga.elitism);
    std::vector<Genes> offspring;
    offspring.reserve(n - elites);
    while (offspring.size() < n - elites) {
      const Genes& p1 = pop[tournament_select(fit, cfg.sga.tournament_size, rng)];
      const Genes& p2 = pop[tournament_select(fit, cfg.sga.tournament_size, rng)];
      Genes child = uniform01(rng) < cfg.sga.crossover_rate ? binomial_crossover(p1, p2, rng) : p1;
      uniform_mutation(child, pm, rng);
      clamp_genes(child);
      offspring.push_back(std::move(child));
    }
    const std::vector<double> child_fit = state.evaluate(offspring);

    std::vector<Genes> next;
    std::vector<double> next_fit;
    next.reserve(n);
    next_fit.reserve(n);
    for (std::size_t e = 0; e < elites; ++e) {
      next.push_back(pop[ranked[e]]);
      next_fit.push_back(fit[ranked[e]]);
    }
    for (std::size_t k = 0; k < offspring.size(); ++k) {
      next.push_back(std::move(offspring[k]));
      next_fit.push_back(child_fit[k]);
    }
    pop = std::move(next);
    fit = std::move(next_fit);
    state.observe(pop, fit);
    state.record(gen, fit);
  }
  return state.finish();
}

}  // namespace ollp::opt

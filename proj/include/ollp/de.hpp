#pragma once

#include <array>

#include "ollp/optimizer.hpp"

namespace ollp::opt {

/// Draws `count` distinct population indices, all different from `exclude`.
inline std::array<std::size_t, 5> distinct_partners(std::size_t pop_size, std::size_t exclude, int count, Rng& rng) {
  std::array<std::size_t, 5> picked{};
  for (int k = 0; k < count; ++k) {
    std::size_t r;
    bool clash;
    do {
      r = uniform_index(rng, pop_size);
      clash = r == exclude;
      for (int m = 0; m < k && !clash; ++m) clash = picked[static_cast<std::size_t>(m)] == r;
    } while (clash);
    picked[static_cast<std::size_t>(k)] = r;
  }
  return picked;
}

/// Mutant vector for individual `i` under the given strategy variant.
inline Genes de_mutant(int variant, const std::vector<Genes>& pop, std::size_t i, std::size_t best, double f,
                       Rng& rng) {
  const auto r = distinct_partners(pop.size(), i, de_partners_needed(variant), rng);
  const std::size_t dim = pop[i].size();
  Genes v(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    switch ((variant - 1) % 5) {
      case 0:  // best/1
        v[j] = pop[best][j] + f * (pop[r[0]][j] - pop[r[1]][j]);
        break;
      case 1:  // rand/1
        v[j] = pop[r[0]][j] + f * (pop[r[1]][j] - pop[r[2]][j]);
        break;
      case 2:  // rand-to-best/1
        v[j] = pop[i][j] + f * (pop[best][j] - pop[i][j]) + f * (pop[r[0]][j] - pop[r[1]][j]);
        break;
      case 3:  // best/2
        v[j] = pop[best][j] + f * (pop[r[0]][j] - pop[r[1]][j]) + f * (pop[r[2]][j] - pop[r[3]][j]);
        break;
      default:  // rand/2
        v[j] = pop[r[0]][j] + f * (pop[r[1]][j] - pop[r[2]][j]) + f * (pop[r[3]][j] - pop[r[4]][j]);
        break;
    }
  }
  return v;
}

/// Binomial crossover: gene j comes from the mutant when r_j <= CR or j = j_rand.
inline Genes de_binomial(const Genes& target, const Genes& mutant, double cr, Rng& rng) {
  Genes u = target;
  const std::size_t j_rand = uniform_index(rng, u.size());
  for (std::size_t j = 0; j < u.size(); ++j) {
    if (uniform01(rng) <= cr || j == j_rand) u[j] = mutant[j];
  }
  return u;
}

/// Exponential crossover: a cyclic run of mutant genes starting at a random
/// position, extended while draws stay below CR.
inline Genes de_exponential(const Genes& target, const Genes& mutant, double cr, Rng& rng) {
  Genes u = target;
  const std::size_t dim = u.size();
  std::size_t j = uniform_index(rng, dim);
  std::size_t len = 0;
  do {
    u[j] = mutant[j];
    j = (j + 1) % dim;
    ++len;
  } while (len < dim && uniform01(rng) < cr);
  return u;
}

inline Genes de_trial(int variant, const std::vector<Genes>& pop, std::size_t i, std::size_t best, double f, double cr,
                      Rng& rng) {
  const Genes mutant = de_mutant(variant, pop, i, best, f, rng);
  Genes u = variant <= 5 ? de_exponential(pop[i], mutant, cr, rng) : de_binomial(pop[i], mutant, cr, rng);
  clamp_genes(u);
  return u;
}

/// Classic DE with synchronous greedy replacement (trial kept when f(u) <= f(x)).
inline RunTrace run_de(const FitnessFn& fitness, std::size_t dim, const OptimizerConfig& cfg) {
  validate(cfg);
  Rng rng(cfg.seed);
  RunState state(cfg, fitness);
  const std::size_t n = static_cast<std::size_t>(cfg.pop_size);

  std::vector<Genes> pop(n);
  for (Genes& g : pop) g = random_genes(rng, dim);
  std::vector<double> fit = state.evaluate(pop);
  state.observe(pop, fit);
  state.record(0, fit);

  for (int gen = 1; state.keep_going(gen - 1); ++gen) {
    const std::size_t best = argmin(fit);
    std::vector<Genes> trials(n);
    for (std::size_t i = 0; i < n; ++i) trials[i] = de_trial(cfg.de.variant, pop, i, best, cfg.de.f, cfg.de.cr, rng);
    const std::vector<double> trial_fit = state.evaluate(trials);
    for (std::size_t i = 0; i < n; ++i) {
      if (trial_fit[i] <= fit[i]) {
        pop[i] = std::move(trials[i]);
        fit[i] = trial_fit[i];
      }
    }
    state.observe(pop, fit);
    state.record(gen, fit);
  }
  return state.finish();
}

}  // namespace ollp::opt

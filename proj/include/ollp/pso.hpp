#pragma once

#include "ollp/optimizer.hpp"

namespace ollp::opt {

/// Index of the best personal best among particle i's neighbors (itself
/// included). Ring neighbors are visited in a fixed order so ties resolve
/// deterministically.
inline std::size_t neighborhood_best(const std::vector<double>& pbest_fit, std::size_t i, const PSOParams& p) {
  const std::size_t n = pbest_fit.size();
  if (p.neighborhood_type == 1) return argmin(pbest_fit);
  const std::size_t radius = std::max<std::size_t>(1, static_cast<std::size_t>(p.neighborhood_size) / 2);
  std::size_t best = i;
  for (std::size_t k = 1; k <= radius && k < n; ++k) {
    for (std::size_t j : {(i + n - k % n) % n, (i + k) % n}) {
      if (pbest_fit[j] < pbest_fit[best]) best = j;
    }
  }
  return best;
}

/// One velocity and position step for a single particle:
/// v <- w v + c1 r1 (p - x) + c2 r2 (l - x), clamped to +-max_vel, then x <- x + v clamped to [0,1].
inline void pso_step(Genes& x, Genes& v, const Genes& personal, const Genes& local, const PSOParams& p, Rng& rng) {
  for (std::size_t j = 0; j < x.size(); ++j) {
    const double r1 = uniform01(rng);
    const double r2 = uniform01(rng);
    double vj = p.omega * v[j] + p.eta1 * r1 * (personal[j] - x[j]) + p.eta2 * r2 * (local[j] - x[j]);
    v[j] = std::clamp(vj, -p.max_vel, p.max_vel);
    x[j] = clamp_gene(x[j] + v[j]);
  }
}

inline RunTrace run_pso(const FitnessFn& fitness, std::size_t dim, const OptimizerConfig& cfg) {
  validate(cfg);
  Rng rng(cfg.seed);
  RunState state(cfg, fitness);
  const std::size_t n = static_cast<std::size_t>(cfg.pop_size);
  const PSOParams& p = cfg.pso;

  std::vector<Genes> x(n), v(n);
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = random_genes(rng, dim);
    v[i].resize(dim);
    for (double& vj : v[i]) vj = p.max_vel * (2.0 * uniform01(rng) - 1.0);
  }
  std::vector<double> fit = state.evaluate(x);
  std::vector<Genes> pbest = x;
  std::vector<double> pbest_fit = fit;
  state.observe(x, fit);
  state.record(0, fit);

  for (int gen = 1; state.keep_going(gen - 1); ++gen) {
    std::vector<std::size_t> guide(n);
    for (std::size_t i = 0; i < n; ++i) guide[i] = neighborhood_best(pbest_fit, i, p);
    for (std::size_t i = 0; i < n; ++i) pso_step(x[i], v[i], pbest[i], pbest[guide[i]], p, rng);

    fit = state.evaluate(x);
    for (std::size_t i = 0; i < n; ++i) {
      if (fit[i] <= pbest_fit[i]) {
        pbest[i] = x[i];
        pbest_fit[i] = fit[i];
      }
    }
    state.observe(x, fit);
    state.record(gen, fit);
  }
  return state.finish();
}

}  // namespace ollp::opt

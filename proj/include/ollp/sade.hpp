#pragma once

#include <deque>

#include "ollp/de.hpp"

namespace ollp::opt {

/// Running estimate of good (F, CR) values from the trials that improved on
/// their target during the last `period` generations.
class SuccessMemory {
 public:
  SuccessMemory(int period, double mu_f, double mu_cr)
      : period_(static_cast<std::size_t>(period)), mu_f_(mu_f), mu_cr_(mu_cr) {}

  double mu_f() const { return mu_f_; }
  double mu_cr() const { return mu_cr_; }

  /// Closes a generation. Means move only when the window holds a success.
  void push_generation(std::vector<std::pair<double, double>> successes) {
    window_.push_back(std::move(successes));
    while (window_.size() > period_) window_.pop_front();
    double sum_f = 0.0, sum_cr = 0.0;
    std::size_t count = 0;
    for (const auto& gen : window_) {
      for (const auto& [f, cr] : gen) {
        sum_f += f;
        sum_cr += cr;
        ++count;
      }
    }
    if (count > 0) {
      mu_f_ = sum_f / static_cast<double>(count);
      mu_cr_ = sum_cr / static_cast<double>(count);
    }
  }

 private:
  std::size_t period_;
  double mu_f_;
  double mu_cr_;
  std::deque<std::vector<std::pair<double, double>>> window_;
};

/// Self-adaptive DE: each trial samples its own F and CR around the current
/// means, and the means track the values of recent successful trials.
inline RunTrace run_sade(const FitnessFn& fitness, std::size_t dim, const OptimizerConfig& cfg) {
  validate(cfg);
  Rng rng(cfg.seed);
  RunState state(cfg, fitness);
  const std::size_t n = static_cast<std::size_t>(cfg.pop_size);
  const SADEParams& p = cfg.sade;
  SuccessMemory memory(p.learning_period, p.initial_mu_f, p.initial_mu_cr);

  std::vector<Genes> pop(n);
  for (Genes& g : pop) g = random_genes(rng, dim);
  std::vector<double> fit = state.evaluate(pop);
  state.observe(pop, fit);
  state.record(0, fit, memory.mu_f(), memory.mu_cr());

  std::normal_distribution<double> unit_normal(0.0, 1.0);
  for (int gen = 1; state.keep_going(gen - 1); ++gen) {
    const std::size_t best = argmin(fit);
    std::vector<Genes> trials(n);
    std::vector<double> f_used(n), cr_used(n);
    for (std::size_t i = 0; i < n; ++i) {
      f_used[i] = std::clamp(memory.mu_f() + p.sigma * unit_normal(rng), 0.0, 2.0);
      cr_used[i] = std::clamp(memory.mu_cr() + p.sigma * unit_normal(rng), 0.0, 1.0);
      trials[i] = de_trial(p.variant, pop, i, best, f_used[i], cr_used[i], rng);
    }
    const std::vector<double> trial_fit = state.evaluate(trials);
    std::vector<std::pair<double, double>> successes;
    for (std::size_t i = 0; i < n; ++i) {
      if (trial_fit[i] < fit[i]) successes.emplace_back(f_used[i], cr_used[i]);
      if (trial_fit[i] <= fit[i]) {
        pop[i] = std::move(trials[i]);
        fit[i] = trial_fit[i];
      }
    }
    memory.push_generation(std::move(successes));
    state.observe(pop, fit);
    state.record(gen, fit, memory.mu_f(), memory.mu_cr());
  }
  return state.finish();
}

}  // namespace ollp::opt

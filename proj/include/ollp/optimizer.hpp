#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "ollp/encoding.hpp"

namespace ollp::opt {

enum class Algorithm { SGA, DE, SADE, PSO };

inline std::string_view to_string(Algorithm a) {
  switch (a) {
    case Algorithm::SGA: return "sga";
    case Algorithm::DE: return "de";
    case Algorithm::SADE: return "sade";
    case Algorithm::PSO: return "pso";
  }
  return "sga";
}

inline std::optional<Algorithm> algorithm_from_string(std::string_view name) {
  for (Algorithm a : {Algorithm::SGA, Algorithm::DE, Algorithm::SADE, Algorithm::PSO}) {
    if (name == to_string(a)) return a;
  }
  return std::nullopt;
}

struct SGAParams {
  double crossover_rate = 0.9;
  std::optional<double> mutation_rate;  ///< per gene; unset means 1 / dimension
  int tournament_size = 2;
  int elitism = 1;
};

/// Strategy numbering: 1 best/1/exp, 2 rand/1/exp, 3 rand-to-best/1/exp,
/// 4 best/2/exp, 5 rand/2/exp, 6..10 the same with binomial crossover.
struct DEParams {
  double f = 0.11;
  double cr = 0.86;
  int variant = 9;
};

struct SADEParams {
  int variant = 1;
  int learning_period = 20;
  double initial_mu_f = 0.5;
  double initial_mu_cr = 0.5;
  double sigma = 0.1;
};

/// neighborhood_type 1 = global best, 2 = ring. For the ring,
/// neighborhood_size neighbors are consulted, half on each side.
struct PSOParams {
  double omega = 0.51;
  double eta1 = 2.42;
  double eta2 = 2.37;
  double max_vel = 0.31;
  int neighborhood_type = 2;
  int neighborhood_size = 4;
};

struct OptimizerConfig {
  Algorithm algo = Algorithm::SGA;
  int pop_size = 50;
  int max_generations = 500;
  std::uint64_t seed = 1;
  int threads = 1;
  double time_limit_secs = 0.0;  ///< 0 disables the wall-clock limit

  SGAParams sga;
  DEParams de;
  SADEParams sade;
  PSOParams pso;
};

inline int de_partners_needed(int variant) {
  switch ((variant - 1) % 5) {
    case 0: return 2;  // best/1
    case 1: return 3;  // rand/1
    case 2: return 2;  // rand-to-best/1
    case 3: return 4;  // best/2
    default: return 5; // rand/2
  }
}

/// Throws std::invalid_argument on the first invalid field.
inline void validate(const OptimizerConfig& c) {
  auto fail = [](const std::string& what) { throw std::invalid_argument(what); };
  if (c.pop_size < 5) fail("pop_size must be at least 5");
  if (c.max_generations < 1) fail("max_generations must be at least 1");
  if (c.threads < 0) fail("threads must be non-negative");
  if (!(c.time_limit_secs >= 0.0)) fail("time limit must be non-negative");
  auto rate = [&](double v, const char* name) {
    if (!(v >= 0.0 && v <= 1.0)) fail(std::string(name) + " must lie in [0,1]");
  };
  auto check_variant = [&](int v) {
    if (v < 1 || v > 10) fail("DE variant must be in 1..10");
    if (de_partners_needed(v) + 1 > c.pop_size) fail("pop_size too small for DE variant " + std::to_string(v));
  };
  switch (c.algo) {
    case Algorithm::SGA:
      rate(c.sga.crossover_rate, "crossover rate");
      if (c.sga.mutation_rate) rate(*c.sga.mutation_rate, "mutation rate");
      if (c.sga.tournament_size < 1) fail("tournament size must be positive");
      if (c.sga.elitism < 0 || c.sga.elitism >= c.pop_size) fail("elitism must be in [0, pop_size)");
      break;
    case Algorithm::DE:
      if (!(c.de.f >= 0.0 && c.de.f <= 2.0)) fail("F must lie in [0,2]");
      rate(c.de.cr, "CR");
      check_variant(c.de.variant);
      break;
    case Algorithm::SADE:
      check_variant(c.sade.variant);
      if (c.sade.learning_period < 1) fail("learning period must be positive");
      if (!(c.sade.initial_mu_f >= 0.0 && c.sade.initial_mu_f <= 2.0)) fail("initial mean F must lie in [0,2]");
      rate(c.sade.initial_mu_cr, "initial mean CR");
      if (!(c.sade.sigma >= 0.0)) fail("sigma must be non-negative");
      break;
    case Algorithm::PSO:
      if (!(c.pso.max_vel > 0.0 && c.pso.max_vel <= 1.0)) fail("max_vel must lie in (0,1]");
      if (c.pso.neighborhood_type != 1 && c.pso.neighborhood_type != 2) fail("neighborhood type must be 1 or 2");
      if (c.pso.neighborhood_size < 1) fail("neighborhood size must be positive");
      break;
  }
}

using Genes = std::vector<double>;
using FitnessFn = std::function<double(std::span<const double>)>;

struct GenerationRecord {
  int generation = 0;
  double best_fitness = 0.0;  ///< best seen so far
  double mean_fitness = 0.0;  ///< mean of the current population
  std::uint64_t evaluations = 0;
  double mu_f = std::numeric_limits<double>::quiet_NaN();   ///< SADE only
  double mu_cr = std::numeric_limits<double>::quiet_NaN();  ///< SADE only
};

struct RunTrace {
  Algorithm algo = Algorithm::SGA;
  std::uint64_t seed = 0;
  std::vector<GenerationRecord> records;
  Genes best_genes;
  double best_fitness = std::numeric_limits<double>::infinity();
  double elapsed_ms = 0.0;

  std::uint64_t evaluations() const { return records.empty() ? 0 : records.back().evaluations; }
  double mean_generation_ms() const {
    return records.empty() ? 0.0 : elapsed_ms / static_cast<double>(records.size());
  }
};

using Rng = std::mt19937_64;

inline double uniform01(Rng& rng) { return std::uniform_real_distribution<double>(0.0, 1.0)(rng); }

inline std::size_t uniform_index(Rng& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

inline Genes random_genes(Rng& rng, std::size_t dim) {
  Genes g(dim);
  for (double& v : g) v = uniform01(rng);
  return g;
}

inline void clamp_genes(Genes& g) {
  for (double& v : g) v = clamp_gene(v);
}

/// Worker count: OLLP_THREADS when set and positive, else hardware concurrency.
inline int threads_from_env() {
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("OLLP_THREADS")) {
    try {
      const int v = std::stoi(env);
      if (v > 0) return std::min<int>(v, static_cast<int>(hw) * 4);
    } catch (const std::exception&) {
    }
  }
  return static_cast<int>(hw);
}

/// Evaluates a batch of candidates on a fixed number of workers. Results land
/// at the candidate's index, so output never depends on scheduling.
class BatchEvaluator {
 public:
  BatchEvaluator(FitnessFn fn, int threads) : fn_(std::move(fn)), threads_(std::max(1, threads)) {}

  std::vector<double> operator()(const std::vector<Genes>& batch) {
    std::vector<double> out(batch.size());
    evaluations_ += batch.size();
    const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(threads_), batch.size());
    if (workers <= 1) {
      for (std::size_t i = 0; i < batch.size(); ++i) out[i] = fn_(batch[i]);
      return out;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::atomic<bool> failed{false};
    {
      std::vector<std::jthread> pool;
      pool.reserve(workers);
      for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
          for (std::size_t i = next++; i < batch.size(); i = next++) {
            try {
              out[i] = fn_(batch[i]);
            } catch (...) {
              if (!failed.exchange(true)) error = std::current_exception();
            }
          }
        });
      }
    }
    if (error) std::rethrow_exception(error);
    return out;
  }

  std::uint64_t evaluations() const { return evaluations_; }

 private:
  FitnessFn fn_;
  int threads_;
  std::uint64_t evaluations_ = 0;
};

/// Shared bookkeeping for the optimizers: best-so-far tracking, trace records
/// and the stopping rule.
class RunState {
 public:
  RunState(const OptimizerConfig& cfg, FitnessFn fn)
      : cfg_(cfg), eval_(std::move(fn), cfg.threads), start_(std::chrono::steady_clock::now()) {
    trace_.algo = cfg.algo;
    trace_.seed = cfg.seed;
  }

  std::vector<double> evaluate(const std::vector<Genes>& batch) { return eval_(batch); }

  void observe(const std::vector<Genes>& pop, const std::vector<double>& fit) {
    for (std::size_t i = 0; i < pop.size(); ++i) {
      if (fit[i] < trace_.best_fitness || trace_.best_genes.empty()) {
        trace_.best_fitness = fit[i];
        trace_.best_genes = pop[i];
      }
    }
  }

  void record(int generation, const std::vector<double>& fit, double mu_f = std::numeric_limits<double>::quiet_NaN(),
              double mu_cr = std::numeric_limits<double>::quiet_NaN()) {
    double sum = 0.0;
    for (double f : fit) sum += f;
    trace_.records.push_back({generation, trace_.best_fitness, sum / static_cast<double>(fit.size()),
                              eval_.evaluations(), mu_f, mu_cr});
  }

  bool keep_going(int generation) const {
    if (generation >= cfg_.max_generations) return false;
    if (cfg_.time_limit_secs > 0.0) {
      const std::chrono::duration<double> used = std::chrono::steady_clock::now() - start_;
      if (used.count() >= cfg_.time_limit_secs) return false;
    }
    return true;
  }

  RunTrace finish() {
    trace_.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    return std::move(trace_);
  }

 private:
  const OptimizerConfig& cfg_;
  BatchEvaluator eval_;
  std::chrono::steady_clock::time_point start_;
  RunTrace trace_;
};

inline std::size_t argmin(const std::vector<double>& v) {
  return static_cast<std::size_t>(std::min_element(v.begin(), v.end()) - v.begin());
}

}  // namespace ollp::opt

#include "ollp/experiment.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <mutex>
#include <set>

namespace {

using namespace ollp::opt;

double sphere(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return s;
}

OptimizerConfig smoke_config(Algorithm algo) {
  OptimizerConfig cfg;
  cfg.algo = algo;
  cfg.pop_size = 20;
  cfg.max_generations = 50;
  cfg.seed = 1;
  return cfg;
}

constexpr std::array<Algorithm, 4> kAll{Algorithm::SGA, Algorithm::DE, Algorithm::SADE, Algorithm::PSO};

bool same_trace(const RunTrace& a, const RunTrace& b) {
  if (a.records.size() != b.records.size() || a.best_genes != b.best_genes || a.best_fitness != b.best_fitness) {
    return false;
  }
  for (std::size_t k = 0; k < a.records.size(); ++k) {
    const auto &x = a.records[k], &y = b.records[k];
    if (x.generation != y.generation || x.best_fitness != y.best_fitness || x.mean_fitness != y.mean_fitness ||
        x.evaluations != y.evaluations) {
      return false;
    }
  }
  return true;
}

TEST(Sphere, SgaReachesThreshold) { EXPECT_LE(run_sga(sphere, 4, smoke_config(Algorithm::SGA)).best_fitness, 0.05); }
TEST(Sphere, DeReachesThreshold) {
  // Textbook settings; the layout-tuned F = 0.11 is deliberately timid on a bowl.
  auto cfg = smoke_config(Algorithm::DE);
  cfg.de.f = 0.8;
  cfg.de.cr = 0.9;
  cfg.de.variant = 2;
  EXPECT_LE(run_de(sphere, 4, cfg).best_fitness, 0.01);
}
TEST(Sphere, PsoReachesThreshold) { EXPECT_LE(run_pso(sphere, 4, smoke_config(Algorithm::PSO)).best_fitness, 0.05); }
TEST(Sphere, SadeReachesThreshold) {
  EXPECT_LE(run_sade(sphere, 4, smoke_config(Algorithm::SADE)).best_fitness, 0.01);
}

TEST(Sga, NoVariationKeepsBestConstant) {
  auto cfg = smoke_config(Algorithm::SGA);
  cfg.sga.crossover_rate = 0.0;
  cfg.sga.mutation_rate = 0.0;
  const RunTrace t = run_sga(sphere, 4, cfg);
  for (const auto& r : t.records) EXPECT_EQ(r.best_fitness, t.records.front().best_fitness);
}

TEST(Sga, TournamentPrefersFitter) {
  Rng rng(3);
  const std::vector<double> fit{5, 1, 9, 7};
  int wins = 0;
  for (int k = 0; k < 1000; ++k) wins += tournament_select(fit, 4, rng) == 1 ? 1 : 0;
  // With four draws with replacement, index 1 appears with probability 1 - (3/4)^4.
  EXPECT_NEAR(wins / 1000.0, 1 - std::pow(0.75, 4), 0.05);
}

TEST(De, ZeroScaleMutantIsBaseVector) {
  Rng rng(5);
  std::vector<Genes> pop;
  for (int i = 0; i < 8; ++i) pop.push_back(random_genes(rng, 6));
  for (int variant : {1, 4, 6, 9}) EXPECT_EQ(de_mutant(variant, pop, 2, 5, 0.0, rng), pop[5]);
  // rand-to-best with F = 0 leaves the target itself
  EXPECT_EQ(de_mutant(3, pop, 2, 5, 0.0, rng), pop[2]);
}

TEST(De, FullCrossoverTakesMutant) {
  Rng rng(7);
  const Genes target(10, 0.0), mutant(10, 1.0);
  EXPECT_EQ(de_binomial(target, mutant, 1.0, rng), mutant);
  EXPECT_EQ(de_exponential(target, mutant, 1.0, rng), mutant);
  // CR = 0 still injects one mutant gene
  const Genes one = de_binomial(target, mutant, 0.0, rng);
  EXPECT_EQ(std::count(one.begin(), one.end(), 1.0), 1);
}

TEST(De, PartnersAreDistinct) {
  Rng rng(9);
  for (int k = 0; k < 500; ++k) {
    const auto r = distinct_partners(6, 2, 5, rng);
    std::set<std::size_t> seen(r.begin(), r.end());
    EXPECT_EQ(seen.size(), 5u);
    EXPECT_FALSE(seen.count(2));
  }
}

TEST(De, PopulationBestNeverWorsens) {
  for (int variant = 1; variant <= 10; ++variant) {
    auto cfg = smoke_config(Algorithm::DE);
    cfg.de.variant = variant;
    // mean_fitness tracks the current population; greedy selection keeps each slot monotone.
    const RunTrace t = run_de(sphere, 6, cfg);
    for (std::size_t k = 1; k < t.records.size(); ++k) {
      EXPECT_LE(t.records[k].mean_fitness, t.records[k - 1].mean_fitness) << "variant " << variant;
    }
  }
}

TEST(Pso, UnitInertiaWithoutPullKeepsVelocity) {
  Rng rng(11);
  PSOParams p;
  p.omega = 1.0;
  p.eta1 = 0.0;
  p.eta2 = 0.0;
  Genes x{0.5, 0.5, 0.5}, v{0.1, -0.2, 0.05};
  const Genes v0 = v;
  pso_step(x, v, Genes{0.9, 0.9, 0.9}, Genes{0.1, 0.1, 0.1}, p, rng);
  EXPECT_EQ(v, v0);
  EXPECT_NEAR(x[1], 0.3, 1e-15);
}

TEST(Pso, CognitivePullConvergesToPersonalBest) {
  Rng rng(13);
  PSOParams p;
  p.omega = 0.5;
  p.eta1 = 1.0;
  p.eta2 = 0.0;
  Genes x{0.9, 0.1}, v{0.0, 0.0};
  const Genes personal{0.3, 0.6};
  for (int k = 0; k < 200; ++k) pso_step(x, v, personal, x, p, rng);
  EXPECT_NEAR(x[0], 0.3, 1e-3);
  EXPECT_NEAR(x[1], 0.6, 1e-3);
}

TEST(Pso, RingNeighborhood) {
  PSOParams p;
  p.neighborhood_type = 2;
  p.neighborhood_size = 4;
  const std::vector<double> fit{5, 4, 3, 2, 1, 0.5, 9, 9};
  EXPECT_EQ(neighborhood_best(fit, 0, p), 2u);  // sees 6, 7, 1, 2
  EXPECT_EQ(neighborhood_best(fit, 7, p), 5u);  // sees 5, 6, 0, 1
  p.neighborhood_type = 1;
  EXPECT_EQ(neighborhood_best(fit, 0, p), 5u);
}

TEST(Sade, MeansStayPutWithoutSuccesses) {
  SuccessMemory memory(20, 0.5, 0.5);
  for (int g = 0; g < 20; ++g) memory.push_generation({});
  EXPECT_EQ(memory.mu_f(), 0.5);
  EXPECT_EQ(memory.mu_cr(), 0.5);
  memory.push_generation({{0.9, 0.1}, {0.7, 0.3}});
  EXPECT_DOUBLE_EQ(memory.mu_f(), 0.8);
  EXPECT_DOUBLE_EQ(memory.mu_cr(), 0.2);
}

TEST(Sade, ConstantFitnessNeverAdapts) {
  auto cfg = smoke_config(Algorithm::SADE);
  const RunTrace t = run_sade([](std::span<const double>) { return 1.0; }, 4, cfg);
  for (const auto& r : t.records) {
    EXPECT_EQ(r.mu_f, 0.5);
    EXPECT_EQ(r.mu_cr, 0.5);
  }
}

TEST(AllAlgorithms, TraceShapeAndMonotoneBest) {
  for (Algorithm a : kAll) {
    const RunTrace t = run_optimizer(sphere, 5, smoke_config(a));
    ASSERT_EQ(t.records.size(), 51u) << to_string(a);
    EXPECT_EQ(t.records.front().generation, 0);
    // SGA carries one elite over without re-evaluating it.
    const std::uint64_t per_gen = a == Algorithm::SGA ? 19u : 20u;
    EXPECT_EQ(t.evaluations(), 20u + 50u * per_gen);
    for (std::size_t k = 1; k < t.records.size(); ++k) {
      EXPECT_LE(t.records[k].best_fitness, t.records[k - 1].best_fitness) << to_string(a);
    }
    EXPECT_EQ(t.best_fitness, t.records.back().best_fitness);
    EXPECT_EQ(sphere(t.best_genes), t.best_fitness);
  }
}

TEST(AllAlgorithms, EvaluatedPointsStayInUnitCube) {
  for (Algorithm a : kAll) {
    std::mutex m;
    bool inside = true;
    auto watch = [&](std::span<const double> x) {
      std::lock_guard lock(m);
      for (double v : x) inside = inside && v >= 0.0 && v <= 1.0;
      // pulls everything toward the boundary to stress clamping
      double s = 0.0;
      for (double v : x) s -= std::abs(v - 0.5);
      return s;
    };
    auto cfg = smoke_config(a);
    cfg.de.f = 2.0;
    run_optimizer(watch, 6, cfg);
    EXPECT_TRUE(inside) << to_string(a);
  }
}

TEST(AllAlgorithms, DeterministicAcrossThreadCounts) {
  for (Algorithm a : kAll) {
    auto cfg = smoke_config(a);
    cfg.threads = 1;
    const RunTrace one = run_optimizer(sphere, 6, cfg);
    cfg.threads = 4;
    const RunTrace four = run_optimizer(sphere, 6, cfg);
    const RunTrace again = run_optimizer(sphere, 6, cfg);
    EXPECT_TRUE(same_trace(one, four)) << to_string(a);
    EXPECT_TRUE(same_trace(four, again)) << to_string(a);
  }
}

TEST(AllAlgorithms, TimeLimitStopsEarly) {
  auto cfg = smoke_config(Algorithm::SGA);
  cfg.max_generations = 1000000;
  cfg.time_limit_secs = 0.05;
  const RunTrace t = run_optimizer(sphere, 4, cfg);
  EXPECT_LT(t.records.size(), 1000001u);
  EXPECT_LT(t.elapsed_ms, 5000.0);
}

TEST(Config, ValidationRejectsBadSettings) {
  OptimizerConfig cfg;
  cfg.pop_size = 4;
  EXPECT_THROW(validate(cfg), std::invalid_argument);
  cfg = {};
  cfg.algo = Algorithm::DE;
  cfg.de.cr = 1.5;
  EXPECT_THROW(validate(cfg), std::invalid_argument);
  cfg = {};
  cfg.algo = Algorithm::DE;
  cfg.de.variant = 11;
  EXPECT_THROW(validate(cfg), std::invalid_argument);
  cfg = {};
  cfg.algo = Algorithm::DE;
  cfg.pop_size = 5;
  cfg.de.variant = 10;  // rand/2 needs five partners besides the target
  EXPECT_THROW(validate(cfg), std::invalid_argument);
  cfg.de.variant = 9;
  EXPECT_NO_THROW(validate(cfg));
  cfg = {};
  cfg.algo = Algorithm::PSO;
  cfg.pso.neighborhood_type = 3;
  EXPECT_THROW(validate(cfg), std::invalid_argument);
  EXPECT_EQ(algorithm_from_string("sade"), Algorithm::SADE);
  EXPECT_FALSE(algorithm_from_string("ga").has_value());
}

TEST(Experiment, RepeatsAndAggregates) {
  // interior optimum, so runs do not all land on the same clamped corner
  auto bowl = [](std::span<const double> x) {
    double s = 0.0;
    for (double v : x) s += (v - 0.3) * (v - 0.3);
    return s;
  };
  const auto one = run_experiment(bowl, 4, smoke_config(Algorithm::PSO), 1);
  EXPECT_EQ(one.traces.size(), 1u);
  const auto three = run_experiment(bowl, 4, smoke_config(Algorithm::PSO), 3);
  ASSERT_EQ(three.traces.size(), 3u);
  EXPECT_EQ(three.traces[2].seed, 3u);
  EXPECT_NE(three.traces[0].best_genes, three.traces[1].best_genes);
  EXPECT_LE(three.min_best(), three.mean_best());
  EXPECT_EQ(three.best_run().best_fitness, three.min_best());
  EXPECT_THROW(run_experiment(sphere, 4, smoke_config(Algorithm::PSO), 0), std::invalid_argument);
}

TEST(Experiment, LayoutInstanceRuns) {
  ollp::Instance inst{"tri", {{0, 2, 3}, {1, 1, 4}, {2, 2, 2}}, ollp::FlowMatrix(3)};
  inst.flows(0, 1) = 2;
  inst.flows(1, 2) = 1;
  auto cfg = smoke_config(Algorithm::DE);
  cfg.max_generations = 10;
  const auto res = run_experiment(inst, ollp::EvalConfig::for_instance(inst), cfg, 2);
  ASSERT_EQ(res.traces.size(), 2u);
  EXPECT_EQ(res.traces[0].best_genes.size(), 9u);
  EXPECT_TRUE(std::isfinite(res.min_best()));
}

}  // namespace

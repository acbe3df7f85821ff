#pragma once

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ollp/bench.hpp"
#include "ollp/distance_graph.hpp"
#include "ollp/experiment.hpp"
#include "ollp/io.hpp"
#include "ollp/svg.hpp"
#include "ollp/validator.hpp"

namespace ollp::cli {

/// Exit codes shared by every subcommand.
enum Exit : int { kOk = 0, kValidationFailed = 1, kUsage = 2, kRenderInfeasible = 3 };

struct GenOptions {
  std::size_t n = 8;
  std::uint64_t seed = 1;
  std::string out;
  std::optional<std::string> name;
  bench::GeneratorOptions gen;
};

struct EvalOverrides {
  std::optional<double> buffer;
  std::optional<double> penalty;

  EvalConfig apply(const Instance& inst) const {
    EvalConfig cfg = EvalConfig::for_instance(inst);
    if (buffer) cfg.buffer = *buffer;
    if (penalty) cfg.unreachable_penalty = *penalty;
    return cfg;
  }
};

struct SolveOptions {
  std::string instance;
  std::string algo = "sga";
  std::uint64_t seed = 1;
  int pop = 50;
  int gens = 500;
  int repeats = 1;
  double time_limit_secs = 0.0;
  std::string out;
  EvalOverrides eval;
};

struct LayoutOptions {
  std::string layout;
  std::string svg;
  bool show_paths = false;
  std::optional<std::string> csv;
  EvalOverrides eval;
};

namespace detail {

inline io::LayoutFile read_layout(const std::string& path) {
  if (!std::filesystem::is_regular_file(path)) throw std::runtime_error("no such layout file: " + path);
  return io::load_layout(path);
}

inline validator::ViolationReport full_report(const io::LayoutFile& lf) {
  const Layout layout = lf.layout();
  validator::ViolationReport report = validator::check_non_overlap(layout, 1e-9 * instance_scale(lf.instance));
  report.append(validator::check_node_coordinates(layout));
  return report;
}

}  // namespace detail

inline int cmd_gen(const GenOptions& o, std::ostream& out, std::ostream& err) {
  try {
    Instance inst = bench::generate_instance(o.n, o.seed, o.gen);
    if (o.name) inst.name = *o.name;
    io::save_instance(inst, o.out);
    out << "wrote " << o.out << " (n=" << inst.size() << ")\n";
    return kOk;
  } catch (const std::exception& e) {
    err << "gen: " << e.what() << '\n';
    return kUsage;
  }
}

inline int cmd_solve(const SolveOptions& o, std::ostream& out, std::ostream& err) {
  namespace fs = std::filesystem;
  const auto algo = opt::algorithm_from_string(o.algo);
  if (!algo) {
    err << "solve: unknown algorithm '" << o.algo << "' (expected sga, de, sade or pso)\n";
    return kUsage;
  }
  Instance inst;
  try {
    if (!fs::is_regular_file(o.instance)) throw std::runtime_error("no such instance file: " + o.instance);
    inst = io::load_instance(o.instance);
  } catch (const std::exception& e) {
    err << "solve: " << e.what() << '\n';
    return kUsage;
  }

  opt::OptimizerConfig cfg;
  cfg.algo = *algo;
  cfg.pop_size = o.pop;
  cfg.max_generations = o.gens;
  cfg.seed = o.seed;
  cfg.time_limit_secs = o.time_limit_secs;
  cfg.threads = opt::threads_from_env();
  try {
    opt::validate(cfg);
    if (o.repeats < 1) throw std::invalid_argument("repeats must be at least 1");
    if (o.eval.buffer && !(*o.eval.buffer >= 0.0)) throw std::invalid_argument("buffer must be non-negative");
    if (o.eval.penalty && !(*o.eval.penalty > 0.0)) throw std::invalid_argument("penalty must be positive");
    std::error_code ec;
    fs::create_directories(o.out, ec);
    if (!fs::is_directory(o.out)) throw std::runtime_error("cannot create output directory " + o.out);
  } catch (const std::exception& e) {
    err << "solve: " << e.what() << '\n';
    return kUsage;
  }

  const EvalConfig eval = o.eval.apply(inst);
  const opt::ExperimentResult result = opt::run_experiment(inst, eval, cfg, o.repeats);

  try {
    const std::string tag = std::string(opt::to_string(cfg.algo));
    std::ostringstream results;
    results << bench::kResultsHeader << '\n';
    for (const opt::RunTrace& t : result.traces) {
      const std::string stem = tag + "_seed" + std::to_string(t.seed);
      io::detail::write_file((fs::path(o.out) / ("trace_" + stem + ".csv")).string(), bench::trace_csv(t));
      io::LayoutFile lf{inst, decode(t.best_genes, inst.specs, eval.decode).placements, tag, t.seed, t.best_fitness};
      io::save_layout(lf, (fs::path(o.out) / ("layout_" + stem + ".json")).string());
      results << bench::results_row(inst.name, t) << '\n';
    }
    io::detail::write_file((fs::path(o.out) / "results.csv").string(), results.str());

    const opt::RunTrace& best = result.best_run();
    io::LayoutFile best_lf{inst, decode(best.best_genes, inst.specs, eval.decode).placements, tag, best.seed,
                           best.best_fitness};
    io::save_layout(best_lf, (fs::path(o.out) / "best_layout.json").string());

    const bench::SummaryRow summary = bench::summarize(inst.name, result.traces);
    io::detail::write_file((fs::path(o.out) / "summary.csv").string(),
                           std::string(bench::kSummaryHeader) + "\n" + bench::summary_row(summary) + "\n");
    out << inst.name << ' ' << summary.algo << ' ' << summary.text() << '\n';
  } catch (const std::exception& e) {
    err << "solve: " << e.what() << '\n';
    return kUsage;
  }
  return kOk;
}

inline int cmd_validate(const LayoutOptions& o, std::ostream& out, std::ostream& err) {
  io::LayoutFile lf;
  try {
    lf = detail::read_layout(o.layout);
  } catch (const std::exception& e) {
    err << "validate: " << e.what() << '\n';
    return kUsage;
  }
  const validator::ViolationReport report = detail::full_report(lf);
  out << report;
  return report.empty() ? kOk : kValidationFailed;
}

inline int cmd_metrics(const LayoutOptions& o, std::ostream& out, std::ostream& err) {
  io::LayoutFile lf;
  try {
    lf = detail::read_layout(o.layout);
  } catch (const std::exception& e) {
    err << "metrics: " << e.what() << '\n';
    return kUsage;
  }
  const validator::ViolationReport report = detail::full_report(lf);
  if (!report.empty()) {
    err << "metrics: layout is infeasible\n" << report;
    return kValidationFailed;
  }
  const Layout layout = lf.layout();
  const EvalConfig eval = o.eval.apply(lf.instance);
  const double z = evaluate_layout(layout, lf.instance.flows, eval);
  const bench::MetricsRecord m = bench::compute_metrics(layout, z);
  const std::string row =
      bench::metrics_row(lf.instance.name, lf.algo.value_or(""), lf.seed ? std::to_string(*lf.seed) : "", m);
  out << bench::kMetricsHeader << '\n' << row << '\n';
  if (o.csv) {
    try {
      const bool fresh = !std::filesystem::exists(*o.csv) || std::filesystem::file_size(*o.csv) == 0;
      std::ofstream csv(*o.csv, std::ios::app);
      if (!csv) throw std::runtime_error("cannot write " + *o.csv);
      if (fresh) csv << bench::kMetricsHeader << '\n';
      csv << row << '\n';
    } catch (const std::exception& e) {
      err << "metrics: " << e.what() << '\n';
      return kUsage;
    }
  }
  return kOk;
}

inline int cmd_render(const LayoutOptions& o, std::ostream& out, std::ostream& err) {
  io::LayoutFile lf;
  try {
    lf = detail::read_layout(o.layout);
  } catch (const std::exception& e) {
    err << "render: " << e.what() << '\n';
    return kUsage;
  }
  const validator::ViolationReport report = detail::full_report(lf);
  if (!report.empty()) {
    err << "render: layout is infeasible\n" << report;
    return kRenderInfeasible;
  }
  try {
    svg::RenderOptions ro;
    ro.show_paths = o.show_paths;
    ro.buffer = o.eval.apply(lf.instance).buffer;
    io::detail::write_file(o.svg, svg::render(lf.layout(), lf.instance.flows, ro));
  } catch (const std::exception& e) {
    err << "render: " << e.what() << '\n';
    return kUsage;
  }
  out << "wrote " << o.svg << '\n';
  return kOk;
}

/// Parses argv and dispatches to one subcommand.
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Open loop layout optimizer with door-to-door Euclidean distances"};
  app.require_subcommand(1);

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a random instance");
  gen_cmd->add_option("--n", gen.n, "Number of cells")->required();
  gen_cmd->add_option("--seed", gen.seed, "Random seed");
  gen_cmd->add_option("--out", gen.out, "Instance file to write")->required();
  gen_cmd->add_option("--name", gen.name, "Instance name");
  gen_cmd->add_option("--dim-min", gen.gen.dim_min, "Smallest cell edge");
  gen_cmd->add_option("--dim-max", gen.gen.dim_max, "Largest cell edge");
  gen_cmd->add_option("--density", gen.gen.flow_density, "Probability that a flow is nonzero");
  gen_cmd->add_option("--flow-min", gen.gen.flow_min, "Smallest nonzero flow");
  gen_cmd->add_option("--flow-max", gen.gen.flow_max, "Largest flow");

  SolveOptions solve;
  auto* solve_cmd = app.add_subcommand("solve", "Optimize a layout for an instance");
  solve_cmd->add_option("--instance", solve.instance, "Instance file")->required();
  solve_cmd->add_option("--algo", solve.algo, "sga, de, sade or pso");
  solve_cmd->add_option("--seed", solve.seed, "Seed of the first run");
  solve_cmd->add_option("--pop", solve.pop, "Population size");
  solve_cmd->add_option("--gens", solve.gens, "Generation budget");
  solve_cmd->add_option("--repeats", solve.repeats, "Independent runs (seeds seed, seed+1, ...)");
  solve_cmd->add_option("--time-limit-secs", solve.time_limit_secs, "Wall-clock limit per run, 0 for none");
  solve_cmd->add_option("--out", solve.out, "Output directory")->required();
  solve_cmd->add_option("--buffer", solve.eval.buffer, "Path feasibility buffer (length units)");
  solve_cmd->add_option("--penalty", solve.eval.penalty, "Distance charged for unreachable door pairs");

  LayoutOptions validate;
  auto* validate_cmd = app.add_subcommand("validate", "Check a layout file for violations");
  validate_cmd->add_option("--layout", validate.layout, "Layout file")->required();

  LayoutOptions metrics;
  auto* metrics_cmd = app.add_subcommand("metrics", "Objective and compactness metrics of a layout");
  metrics_cmd->add_option("--layout", metrics.layout, "Layout file")->required();
  metrics_cmd->add_option("--out", metrics.csv, "CSV file to append to");
  metrics_cmd->add_option("--buffer", metrics.eval.buffer, "Path feasibility buffer (length units)");
  metrics_cmd->add_option("--penalty", metrics.eval.penalty, "Distance charged for unreachable door pairs");

  LayoutOptions render;
  auto* render_cmd = app.add_subcommand("render", "Draw a layout as SVG");
  render_cmd->add_option("--layout", render.layout, "Layout file")->required();
  render_cmd->add_option("--svg", render.svg, "SVG file to write")->required();
  render_cmd->add_flag("--show-paths", render.show_paths, "Draw shortest door-to-door flow paths");
  render_cmd->add_option("--buffer", render.eval.buffer, "Path feasibility buffer (length units)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kOk;
    }
    err << e.what() << '\n';
    return kUsage;
  }

  if (gen_cmd->parsed()) return cmd_gen(gen, out, err);
  if (solve_cmd->parsed()) return cmd_solve(solve, out, err);
  if (validate_cmd->parsed()) return cmd_validate(validate, out, err);
  if (metrics_cmd->parsed()) return cmd_metrics(metrics, out, err);
  if (render_cmd->parsed()) return cmd_render(render, out, err);
  return kUsage;
}

}  // namespace ollp::cli

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "coopsim/commands.hpp"

namespace cli = coopsim::cli;

int main(int argc, char** argv) {
  CLI::App app{"coopsim: cultural evolution of cooperation under kin selection, direct and indirect reciprocity"};
  app.require_subcommand(1);

  std::string strategy;
  double b = 0.0, c = 0.0, x = 0.0;

  auto* thresholds = app.add_subcommand("thresholds", "Print the ESS, RD and AD thresholds in x");
  thresholds->add_option("strategy", strategy, "KS, DR or IR")->required();
  thresholds->add_option("b", b, "benefit")->required();
  thresholds->add_option("c", c, "cost")->required();

  auto* classify = app.add_subcommand("classify", "Print the payoff matrix and game class");
  classify->add_option("strategy", strategy, "KS, DR or IR")->required();
  classify->add_option("b", b, "benefit")->required();
  classify->add_option("c", c, "cost")->required();
  classify->add_option("x", x, "r, w or q")->required();

  std::string config_path, output_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> window;

  auto* run = app.add_subcommand("run", "Run one simulation and write the per-tick series");
  run->add_option("config", config_path, "config file")->required()->check(CLI::ExistingFile);
  run->add_option("output", output_path, "output CSV ('-' for stdout)")->required();
  run->add_option("--seed", seed, "override the seed (default: config, then COOPSIM_SEED, then 0)");
  run->add_option("--window", window, "ticks averaged into the tail mean");

  std::vector<std::string> sweep_args;
  cli::SweepOptions sweep_opts;
  std::optional<std::size_t> iterations, repetitions;
  auto* sweep = app.add_subcommand("sweep", "Run a named experiment or a config-file sweep");
  sweep->add_option("args", sweep_args, "<experiment> <strategy> <output> | <config> <output>")
      ->required()
      ->expected(2, 3);
  sweep->add_option("--seed", seed, "base seed (default: config, then COOPSIM_SEED, then 0)");
  sweep->add_option("--jobs", sweep_opts.jobs, "worker threads")->check(CLI::PositiveNumber);
  sweep->add_option("--plot-data", sweep_opts.plot_data, "also write x,tail_mean pairs here");
  sweep->add_option("--per-seed", sweep_opts.per_seed, "also write one row per repetition here");
  sweep->add_option("--window", window, "ticks averaged into the tail mean");
  sweep->add_option("--iterations", iterations, "ticks per run (default 100000 for named experiments)");
  sweep->add_option("--repetitions", repetitions, "seeds per grid point")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : cli::kExitConfig;
  }

  if (*thresholds) return cli::cmd_thresholds(strategy, b, c, std::cout, std::cerr);
  if (*classify) return cli::cmd_classify(strategy, b, c, x, std::cout, std::cerr);
  if (*run) return cli::cmd_run(config_path, output_path, {.seed = seed, .window = window}, std::cout, std::cerr);

  sweep_opts.seed = seed;
  sweep_opts.window = window;
  sweep_opts.iterations = iterations;
  sweep_opts.repetitions = repetitions;
  std::optional<std::string> sweep_strategy;
  if (sweep_args.size() == 3) sweep_strategy = sweep_args[1];
  return cli::cmd_sweep(sweep_args.front(), sweep_strategy, sweep_args.back(), sweep_opts, std::cout, std::cerr);
}

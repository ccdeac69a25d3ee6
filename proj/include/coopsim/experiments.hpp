#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "coopsim/world.hpp"

namespace coopsim {

// The six parameter schedules: payoff-table behaviour, tuning criterion,
// initial probabilities, population, robustness and average behaviour.
enum class NamedExperiment {
  PayoffTableBehavior,
  TuningCriterion,
  InitialProbabilities,
  Population,
  Robustness,
  Behavior,
};

std::string_view to_string(NamedExperiment e);
// Accepts snake_case / kebab-case names and a few short forms
// ("payoff", "tuning", "initial", ...). Returns nullopt when unknown.
std::optional<NamedExperiment> parse_experiment(std::string_view text);

// lo, lo + step, ... up to hi inclusive (1e-9 slack), rounded to 10 decimals.
std::vector<double> x_grid(double lo, double hi, double step);

// Sweep range of the strategy's x: [0.01, 0.99] for direct reciprocity,
// [0.01, 1] otherwise.
double x_upper_bound(Strategy s);

struct ExperimentCell {
  WorldConfig config;  // config.spec.x already set
  std::size_t x_index = 0;
  std::size_t repetitions = 1;
};

// Full cross product of the schedule's value lists with the x grid, x
// innermost. Every cell has b = 4, c = 2, seed 0 and `iterations` ticks.
std::vector<ExperimentCell> expand_experiment(NamedExperiment name, Strategy strategy,
                                              std::size_t iterations = 100000);

// The average-behaviour settings for one strategy (x left at 0).
WorldConfig behavior_config(Strategy strategy, std::size_t iterations = 100000);

// Seed of repetition k. Independent of the cell so every grid point sees the
// same random streams (common random numbers across x).
std::uint64_t repetition_seed(std::uint64_t base_seed, std::size_t repetition);

struct SeedResult {
  std::uint64_t seed = 0;
  double tail_mean = 0.0;
  double final_fraction = 0.0;
};

struct SweepRow {
  WorldConfig config;  // the cell's configuration (seed = base seed)
  double x = 0.0;
  std::vector<SeedResult> per_seed;
  double tail_mean = 0.0;       // arithmetic mean over per_seed
  double final_fraction = 0.0;  // arithmetic mean over per_seed
  std::size_t window = 0;
  std::string status = "ok";  // "ok" or "error: ..."

  bool ok() const { return status == "ok"; }
};

// Runs every (cell, repetition) pair on up to `jobs` threads. Invalid cells
// become error rows. Output order follows `cells`, independent of `jobs`.
std::vector<SweepRow> run_cells(const std::vector<ExperimentCell>& cells, std::uint64_t base_seed,
                                std::size_t jobs = 1);

struct SweepConfig {
  WorldConfig base;  // base.spec.x is ignored
  double x_lo = 0.01;
  double x_hi = 1.0;
  double x_step = 0.01;
  std::size_t repetitions = 1;
};

// Throws ValidationError (sweep.* keys). x_hi above the strategy's valid
// range is allowed; those cells come back as error rows.
void validate(const SweepConfig& sweep);

std::vector<SweepRow> run_sweep(const SweepConfig& sweep, std::size_t jobs = 1);

struct RegimeProbe {
  Regime target = Regime::None;  // ESS, RD or AD
  double ipc = 0.0;
  std::vector<SeedResult> per_seed;
  double tail_mean = 0.0;
};

// Runs `base` with ipc = 2/3 (ESS), 1/2 (RD) and 1/3 (AD), `seeds`
// repetitions each.
std::array<RegimeProbe, 3> regime_experiment(const WorldConfig& base, std::size_t seeds,
                                             std::uint64_t base_seed, std::size_t jobs = 1);

}  // namespace coopsim

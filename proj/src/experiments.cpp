#include "coopsim/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cmath>
#include <thread>

#include "coopsim/errors.hpp"

namespace coopsim {

std::string_view to_string(NamedExperiment e) {
  switch (e) {
    case NamedExperiment::PayoffTableBehavior: return "payoff_table_behavior";
    case NamedExperiment::TuningCriterion: return "tuning_criterion";
    case NamedExperiment::InitialProbabilities: return "initial_probabilities";
    case NamedExperiment::Population: return "population";
    case NamedExperiment::Robustness: return "robustness";
    case NamedExperiment::Behavior: return "behavior";
  }
  return "?";
}

std::optional<NamedExperiment> parse_experiment(std::string_view text) {
  std::string key;
  for (char ch : text) key += ch == '-' ? '_' : static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  if (key == "payoff_table_behavior" || key == "payoff_table" || key == "payoff")
    return NamedExperiment::PayoffTableBehavior;
  if (key == "tuning_criterion" || key == "tuning") return NamedExperiment::TuningCriterion;
  if (key == "initial_probabilities" || key == "initial") return NamedExperiment::InitialProbabilities;
  if (key == "population") return NamedExperiment::Population;
  if (key == "robustness") return NamedExperiment::Robustness;
  if (key == "behavior" || key == "behaviour") return NamedExperiment::Behavior;
  return std::nullopt;
}

std::vector<double> x_grid(double lo, double hi, double step) {
  std::vector<double> out;
  if (!(step > 0.0) || hi < lo) return out;
  const auto n = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9));
  out.reserve(n + 1);
  for (std::size_t i = 0; i <= n; ++i)
    out.push_back(std::round((lo + static_cast<double>(i) * step) * 1e10) / 1e10);
  return out;
}

double x_upper_bound(Strategy s) { return s == Strategy::DirectReciprocity ? 0.99 : 1.0; }

namespace {

struct Schedule {
  std::vector<TuningKind> tunings;
  std::vector<double> icpc;
  std::vector<double> icpd;
  std::vector<std::size_t> population;
  std::vector<double> ipc;
  double step = 0.01;
  std::size_t repetitions = 1;
};

const std::vector<std::size_t> kPopulationTens = {10, 20, 30, 40, 50, 60, 70, 80, 90, 100};
const std::vector<std::size_t> kPopulationDirect = {2, 4, 6, 8, 10, 20, 30, 40, 50, 60, 70, 80, 90, 100};
const std::vector<double> kInitialCpc = {0.65, 0.75, 0.85, 0.95, 0.99};
const std::vector<double> kInitialCpd = {0.01, 0.05, 0.15, 0.25, 0.35};
const std::vector<double> kInitialCpcIndirect = {0.5, 0.51, 0.55, 0.65, 0.75, 0.85, 0.95, 0.99};
const std::vector<double> kInitialCpdIndirect = {0.01, 0.05, 0.15, 0.25, 0.35, 0.45, 0.49, 0.5};
const std::vector<double> kRobustnessIpc = {0.0, 0.333, 0.5, 0.666, 1.0};

// Settings shared by every schedule unless overridden.
struct Defaults {
  double icpc;
  double icpd;
  std::size_t population;
  TuningKind tuning;
};

Defaults defaults_for(Strategy s, NamedExperiment e) {
  const bool early = e == NamedExperiment::PayoffTableBehavior || e == NamedExperiment::TuningCriterion ||
                     e == NamedExperiment::InitialProbabilities;
  switch (s) {
    case Strategy::KinSelection: return {0.65, 0.35, 60, TuningKind::SelfishFitness};
    case Strategy::DirectReciprocity: return {0.65, 0.35, 20, TuningKind::SelfishProfit};
    case Strategy::IndirectReciprocity:
      return early ? Defaults{0.65, 0.35, 60, TuningKind::SelfishProfit}
                   : Defaults{0.98, 0.45, 60, TuningKind::SelfishProfit};
  }
  return {0.65, 0.35, 60, TuningKind::SelfishFitness};
}

Schedule schedule_for(NamedExperiment e, Strategy s) {
  const Defaults d = defaults_for(s, e);
  Schedule out{.tunings = {d.tuning},
               .icpc = {d.icpc},
               .icpd = {d.icpd},
               .population = {d.population},
               .ipc = {0.5},
               .step = 0.01,
               .repetitions = 1};
  switch (e) {
    case NamedExperiment::PayoffTableBehavior:
      out.tunings = {TuningKind::SelfishFitness};
      out.step = 0.01;
      break;
    case NamedExperiment::TuningCriterion:
      out.tunings = {TuningKind::SelfishFitness, TuningKind::SelfishProfit};
      out.step = s == Strategy::IndirectReciprocity ? 0.02 : 0.01;
      break;
    case NamedExperiment::InitialProbabilities:
      out.icpc = s == Strategy::IndirectReciprocity ? kInitialCpcIndirect : kInitialCpc;
      out.icpd = s == Strategy::IndirectReciprocity ? kInitialCpdIndirect : kInitialCpd;
      out.step = 0.05;
      break;
    case NamedExperiment::Population:
      out.population = s == Strategy::DirectReciprocity ? kPopulationDirect : kPopulationTens;
      out.step = 0.04;
      break;
    case NamedExperiment::Robustness:
      out.ipc = kRobustnessIpc;
      out.step = 0.02;
      break;
    case NamedExperiment::Behavior:
      out.ipc = {s == Strategy::DirectReciprocity ? 1.0 : 0.5};
      out.step = 0.02;
      out.repetitions = 10;
      break;
  }
  return out;
}

}  // namespace

std::vector<ExperimentCell> expand_experiment(NamedExperiment name, Strategy strategy, std::size_t iterations) {
  const Schedule sched = schedule_for(name, strategy);
  const std::vector<double> xs = x_grid(0.01, x_upper_bound(strategy), sched.step);
  std::vector<ExperimentCell> cells;
  cells.reserve(sched.tunings.size() * sched.icpc.size() * sched.icpd.size() * sched.population.size() *
                sched.ipc.size() * xs.size());
  for (TuningKind tuning : sched.tunings)
    for (double icpc : sched.icpc)
      for (double icpd : sched.icpd)
        for (std::size_t population : sched.population)
          for (double ipc : sched.ipc)
            for (std::size_t xi = 0; xi < xs.size(); ++xi) {
              ExperimentCell cell;
              cell.config.spec = {.strategy = strategy, .b = 4.0, .c = 2.0, .x = xs[xi]};
              cell.config.tuning.kind = tuning;
              cell.config.init = {.population = population, .ipc = ipc, .icpc = icpc, .icpd = icpd};
              cell.config.iterations = iterations;
              cell.x_index = xi;
              cell.repetitions = sched.repetitions;
              cells.push_back(std::move(cell));
            }
  return cells;
}

WorldConfig behavior_config(Strategy strategy, std::size_t iterations) {
  WorldConfig c = expand_experiment(NamedExperiment::Behavior, strategy, iterations).front().config;
  c.spec.x = 0.0;
  return c;
}

std::uint64_t repetition_seed(std::uint64_t base_seed, std::size_t repetition) {
  return mix_seed(base_seed, repetition, 0);
}

std::vector<SweepRow> run_cells(const std::vector<ExperimentCell>& cells, std::uint64_t base_seed,
                                std::size_t jobs) {
  std::vector<SweepRow> rows(cells.size());
  struct Task {
    std::size_t cell;
    std::size_t rep;
  };
  std::vector<Task> tasks;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    SweepRow& row = rows[i];
    row.config = cells[i].config;
    row.config.seed = base_seed;
    row.x = cells[i].config.spec.x;
    row.window = effective_window(cells[i].config);
    try {
      validate(cells[i].config);
    } catch (const std::exception& e) {
      row.status = std::string("error: ") + e.what();
      continue;
    }
    row.per_seed.resize(cells[i].repetitions);
    for (std::size_t r = 0; r < cells[i].repetitions; ++r) tasks.push_back({i, r});
  }

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t t = next.fetch_add(1); t < tasks.size(); t = next.fetch_add(1)) {
      const auto [ci, rep] = tasks[t];
      WorldConfig cfg = cells[ci].config;
      cfg.seed = repetition_seed(base_seed, rep);
      const RunMetrics m = run(cfg);
      rows[ci].per_seed[rep] = {cfg.seed, m.tail_mean, m.final_fraction};
    }
  };
  const std::size_t workers = std::clamp<std::size_t>(jobs, 1, std::max<std::size_t>(1, tasks.size()));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
  }

  for (SweepRow& row : rows) {
    if (!row.ok() || row.per_seed.empty()) continue;
    double tail = 0.0, fin = 0.0;
    for (const SeedResult& s : row.per_seed) {
      tail += s.tail_mean;
      fin += s.final_fraction;
    }
    row.tail_mean = tail / static_cast<double>(row.per_seed.size());
    row.final_fraction = fin / static_cast<double>(row.per_seed.size());
  }
  return rows;
}

void validate(const SweepConfig& sweep) {
  if (!(sweep.x_step > 0.0)) throw ValidationError("sweep.x_step", "must be positive");
  if (!(sweep.x_lo >= 0.0 && sweep.x_lo <= 1.0)) throw ValidationError("sweep.x_lo", "must lie in [0, 1]");
  if (!(sweep.x_hi >= sweep.x_lo && sweep.x_hi <= 1.0))
    throw ValidationError("sweep.x_hi", "must lie in [x_lo, 1]");
  if (sweep.repetitions == 0) throw ValidationError("sweep.repetitions", "must be positive");
  if (sweep.base.window && *sweep.base.window > sweep.base.iterations)
    throw ValidationError("run.window", "must not exceed run.iterations");
}

std::vector<SweepRow> run_sweep(const SweepConfig& sweep, std::size_t jobs) {
  validate(sweep);
  std::vector<ExperimentCell> cells;
  const std::vector<double> xs = x_grid(sweep.x_lo, sweep.x_hi, sweep.x_step);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    ExperimentCell cell{.config = sweep.base, .x_index = i, .repetitions = sweep.repetitions};
    cell.config.spec.x = xs[i];
    cells.push_back(std::move(cell));
  }
  return run_cells(cells, sweep.base.seed, jobs);
}

std::array<RegimeProbe, 3> regime_experiment(const WorldConfig& base, std::size_t seeds, std::uint64_t base_seed,
                                             std::size_t jobs) {
  std::array<RegimeProbe, 3> probes{{{Regime::ESS, 2.0 / 3.0, {}, 0.0},
                                     {Regime::RD, 0.5, {}, 0.0},
                                     {Regime::AD, 1.0 / 3.0, {}, 0.0}}};
  std::vector<ExperimentCell> cells;
  for (const RegimeProbe& p : probes) {
    ExperimentCell cell{.config = base, .x_index = 0, .repetitions = seeds};
    cell.config.init.ipc = p.ipc;
    cells.push_back(std::move(cell));
  }
  const std::vector<SweepRow> rows = run_cells(cells, base_seed, jobs);
  for (std::size_t i = 0; i < probes.size(); ++i) {
    if (!rows[i].ok()) throw ValidationError("regime", rows[i].status);
    probes[i].per_seed = rows[i].per_seed;
    probes[i].tail_mean = rows[i].tail_mean;
  }
  return probes;
}

}  // namespace coopsim

#include "coopsim/commands.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <string_view>
#include <vector>

#include "coopsim/config.hpp"
#include "coopsim/csv.hpp"
#include "coopsim/experiments.hpp"
#include "coopsim/game.hpp"

namespace coopsim::cli {

std::uint64_t default_seed() {
  const char* env = std::getenv("COOPSIM_SEED");
  if (!env) return 0;
  std::uint64_t v = 0;
  const std::string_view s(env);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  return ec == std::errc() && ptr == s.data() + s.size() ? v : 0;
}

namespace {

// Opens `path` for writing, or hands back `fallback` for "-".
class OutputFile {
 public:
  OutputFile(const std::string& path, std::ostream& fallback) {
    if (path == "-") {
      stream_ = &fallback;
    } else {
      file_.open(path, std::ios::out | std::ios::trunc | std::ios::binary);
      if (file_) stream_ = &file_;
    }
  }
  explicit operator bool() const { return stream_ != nullptr; }
  std::ostream& stream() { return *stream_; }
  bool finish() {
    stream_->flush();
    return static_cast<bool>(*stream_);
  }

 private:
  std::ofstream file_;
  std::ostream* stream_ = nullptr;
};

Strategy strategy_arg(const std::string& text) { return parse_strategy(text); }

}  // namespace

int cmd_thresholds(const std::string& strategy, double b, double c, std::ostream& out, std::ostream& err) {
  Strategy s;
  try {
    s = strategy_arg(strategy);
    if (!(b > 0.0) || !(c > 0.0)) throw std::invalid_argument("b and c must be positive");
  } catch (const std::invalid_argument& e) {
    err << "thresholds: " << e.what() << '\n';
    return kExitConfig;
  }
  out << "strategy " << to_string(s) << " b=" << format_number(b) << " c=" << format_number(c) << '\n';
  bool reachable = true;
  for (Condition cond : {Condition::ESS, Condition::RD, Condition::AD}) {
    const double v = solve_threshold(s, cond, b, c);
    out << to_string(cond) << ' ' << variable_name(s) << " = ";
    if (v > 1.0) {
      out << "unreachable (requires " << variable_name(s) << " = " << format_number(v) << " > 1)\n";
      reachable = false;
    } else {
      out << format_number(v) << '\n';
    }
  }
  if (!reachable) {
    err << "thresholds: error: unreachable threshold (b/c = " << format_number(b / c) << ")\n";
    return kExitConfig;
  }
  return kExitOk;
}

int cmd_classify(const std::string& strategy, double b, double c, double x, std::ostream& out, std::ostream& err) {
  GameSpec spec;
  PayoffMatrix m;
  try {
    spec = {.strategy = strategy_arg(strategy), .b = b, .c = c, .x = x};
    m = payoff_matrix(spec);
  } catch (const std::invalid_argument& e) {
    err << "classify: " << e.what() << '\n';
    return kExitConfig;
  }
  const GameClass g = classify_payoffs(m);
  out << "R = " << format_number(m.R) << '\n'
      << "S = " << format_number(m.S) << '\n'
      << "T = " << format_number(m.T) << '\n'
      << "P = " << format_number(m.P) << '\n'
      << "class = " << to_string(g);
  if (g == GameClass::Boundary) {
    const std::pair<char, double> entries[] = {{'R', m.R}, {'S', m.S}, {'T', m.T}, {'P', m.P}};
    std::string ties;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = i + 1; j < 4; ++j)
        if (payoff_tie(entries[i].second, entries[j].second)) {
          if (!ties.empty()) ties += ", ";
          ties += std::string{entries[i].first, '='} + entries[j].first;
        }
    if (!ties.empty()) out << " (" << ties << ')';
  }
  out << "\nregime = " << to_string(regime(spec)) << '\n';
  return kExitOk;
}

int cmd_run(const std::string& config_path, const std::string& output_path, const RunOptions& options,
            std::ostream& out, std::ostream& err) {
  WorldConfig config;
  try {
    const ConfigDocument doc = load_config(config_path);
    config = doc.run_config();
    if (options.seed) {
      config.seed = *options.seed;
    } else if (!doc.has_seed) {
      config.seed = default_seed();
    }
    if (options.window) config.window = *options.window;
    validate(config);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const ValidationError& e) {
    err << "error: " << config_path << ": " << e.what() << '\n';
    return kExitConfig;
  }

  try {
    const RunMetrics metrics = run(config);
    OutputFile file(output_path, out);
    if (!file) {
      err << "error: cannot open output file '" << output_path << "'\n";
      return kExitRuntime;
    }
    write_series_csv(file.stream(), metrics);
    if (!file.finish()) {
      err << "error: failed writing '" << output_path << "'\n";
      return kExitRuntime;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
  return kExitOk;
}

int cmd_sweep(const std::string& target, const std::optional<std::string>& strategy,
              const std::string& output_path, const SweepOptions& options, std::ostream& out, std::ostream& err) {
  std::vector<SweepRow> rows;
  try {
    const std::uint64_t seed = options.seed.value_or(default_seed());
    std::vector<ExperimentCell> cells;
    std::uint64_t base_seed = seed;
    if (const auto name = parse_experiment(target)) {
      if (!strategy) {
        err << "sweep: experiment '" << target << "' needs a strategy (KS, DR or IR)\n";
        return kExitConfig;
      }
      Strategy s;
      try {
        s = parse_strategy(*strategy);
      } catch (const std::invalid_argument& e) {
        err << "sweep: " << e.what() << '\n';
        return kExitConfig;
      }
      cells = expand_experiment(*name, s, options.iterations.value_or(100000));
    } else {
      const ConfigDocument doc = load_config(target);
      SweepConfig sweep = doc.sweep_config();
      if (options.iterations) sweep.base.iterations = *options.iterations;
      if (!options.seed && doc.has_seed) base_seed = doc.world.seed;
      for (double x : x_grid(sweep.x_lo, sweep.x_hi, sweep.x_step)) {
        ExperimentCell cell{.config = sweep.base, .x_index = cells.size(), .repetitions = sweep.repetitions};
        cell.config.spec.x = x;
        cells.push_back(std::move(cell));
      }
    }
    if (options.repetitions && *options.repetitions == 0) {
      err << "sweep: --repetitions must be positive\n";
      return kExitConfig;
    }
    for (ExperimentCell& cell : cells) {
      if (options.window) cell.config.window = *options.window;
      if (options.repetitions) cell.repetitions = *options.repetitions;
    }
    rows = run_cells(cells, base_seed, options.jobs);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitRuntime;
  }

  auto emit = [&](const std::string& path, auto writer) {
    OutputFile file(path, out);
    if (!file) {
      err << "error: cannot open output file '" << path << "'\n";
      return false;
    }
    writer(file.stream());
    if (!file.finish()) {
      err << "error: failed writing '" << path << "'\n";
      return false;
    }
    return true;
  };
  if (!emit(output_path, [&](std::ostream& os) { write_sweep_csv(os, rows); })) return kExitRuntime;
  if (!options.plot_data.empty() &&
      !emit(options.plot_data, [&](std::ostream& os) { write_plot_data(os, rows); }))
    return kExitRuntime;
  if (!options.per_seed.empty() &&
      !emit(options.per_seed, [&](std::ostream& os) { write_per_seed_csv(os, rows); }))
    return kExitRuntime;
  return kExitOk;
}

}  // namespace coopsim::cli

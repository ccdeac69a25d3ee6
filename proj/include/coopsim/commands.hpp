#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace coopsim::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitRuntime = 3;

// COOPSIM_SEED if set and numeric, else 0.
std::uint64_t default_seed();

int cmd_thresholds(const std::string& strategy, double b, double c, std::ostream& out, std::ostream& err);

int cmd_classify(const std::string& strategy, double b, double c, double x, std::ostream& out, std::ostream& err);

struct RunOptions {
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> window;
};

// output_path "-" writes to `out`.
int cmd_run(const std::string& config_path, const std::string& output_path, const RunOptions& options,
            std::ostream& out, std::ostream& err);

struct SweepOptions {
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> window;
  std::optional<std::size_t> iterations;
  std::optional<std::size_t> repetitions;
  std::size_t jobs = 1;
  std::string plot_data;  // empty: no plot file
  std::string per_seed;   // empty: no per-seed file
};

// `target` is a named experiment (then `strategy` is required) or the path of
// a config file with a [sweep] section.
int cmd_sweep(const std::string& target, const std::optional<std::string>& strategy,
              const std::string& output_path, const SweepOptions& options, std::ostream& out, std::ostream& err);

}  // namespace coopsim::cli

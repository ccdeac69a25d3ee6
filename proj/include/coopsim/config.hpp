#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "coopsim/experiments.hpp"
#include "coopsim/world.hpp"

namespace coopsim {

// Parse or validation failure in a config document. line() is 0 when the
// problem is not tied to a particular line (e.g. a missing key).
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string source, std::size_t line, std::string key, const std::string& message);

  const std::string& source() const { return source_; }
  std::size_t line() const { return line_; }
  const std::string& key() const { return key_; }

 private:
  std::string source_;
  std::size_t line_;
  std::string key_;
};

struct SweepSection {
  double x_lo = 0.01;
  double x_hi = 1.0;
  double x_step = 0.01;
  std::size_t repetitions = 1;
};

// A parsed config document:
//
//   [game]        strategy, b, c, x
//   [world]       width, height, radius, step_length
//   [population]  size, ipc, icpc, icpd
//   [tuning]      rule, delta
//   [run]         iterations, seed, window
//   [sweep]       x_lo, x_hi, x_step, repetitions
//
// '#' and ';' start comment lines. Unknown sections or keys are errors.
struct ConfigDocument {
  WorldConfig world;
  bool has_x = false;
  bool has_seed = false;
  std::optional<SweepSection> sweep;
  std::map<std::string, std::size_t> key_lines;  // "section.key" -> line

  // Config for a single run; throws ConfigError if game.x is absent or invalid.
  WorldConfig run_config() const;
  SweepConfig sweep_config() const;

  // Re-throws a ValidationError as a ConfigError pointing at the key's line.
  [[noreturn]] void raise(const ValidationError& e) const;

  std::string source = "<config>";
};

ConfigDocument parse_config(std::string_view text, std::string source = "<config>");
ConfigDocument load_config(const std::string& path);

// Canonical form: fixed section/key order, shortest round-trip numbers.
std::string serialize_config(const ConfigDocument& doc);

}  // namespace coopsim

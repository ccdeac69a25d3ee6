#pragma once

#include <stdexcept>
#include <string>

namespace coopsim {

// A parameter failed validation. field() is the dotted config key
// ("game.x", "population.ipc", ...) so callers can point at the culprit.
class ValidationError : public std::invalid_argument {
 public:
  ValidationError(std::string field, const std::string& what)
      : std::invalid_argument(field + ": " + what), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

}  // namespace coopsim

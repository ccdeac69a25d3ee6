#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

#include "coopsim/rng.hpp"

namespace coopsim {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
  bool operator==(const Vec2&) const = default;
};

// Maps v onto [0, extent).
inline double wrap_coordinate(double v, double extent) {
  if (v >= 0.0 && v < extent) return v;
  if (v >= extent && v - extent < extent) return v - extent;
  if (v < 0.0 && v + extent >= 0.0 && v + extent < extent) return v + extent;
  double w = std::fmod(v, extent);
  if (w < 0.0) w += extent;
  if (w >= extent) w = 0.0;
  return w;
}

enum class Role { Cooperator, Defector };

// Cooperator iff cp > 0.5.
constexpr Role classify_agent(double cp) { return cp > 0.5 ? Role::Cooperator : Role::Defector; }

struct Agent {
  std::size_t id = 0;
  Vec2 pos;
  double heading = 0.0;  // degrees in [0, 360), 0 points along +x
  double cp = 0.0;
  double fitness = 0.0;
  std::optional<double> last_profit;
  // Direct reciprocity: partner id -> that partner's last action toward us.
  std::unordered_map<std::size_t, bool> memory;

  Role role() const { return classify_agent(cp); }

  // Unseen partners count as having cooperated.
  bool remembers_cooperation(std::size_t partner) const {
    auto it = memory.find(partner);
    return it == memory.end() || it->second;
  }

  bool operator==(const Agent&) const = default;
};

struct PopulationInit {
  std::size_t population = 60;
  double ipc = 0.5;   // initial proportion of cooperators; ipd = 1 - ipc
  double icpc = 0.65; // initial cp of cooperators
  double icpd = 0.35; // initial cp of defectors

  double ipd() const { return 1.0 - ipc; }
};

// Throws std::invalid_argument naming the offending field.
void validate(const PopulationInit& init);

// round-half-up of population * ipc
std::size_t initial_cooperator_count(const PopulationInit& init);

// Agents 0..k-1 start at icpc, the rest at icpd. Positions are uniform on
// [0,width) x [0,height) and headings uniform on [0,360), drawn per agent
// in id order (x, y, heading).
std::vector<Agent> init_population(const PopulationInit& init, double width, double height, Rng& rng);

}  // namespace coopsim

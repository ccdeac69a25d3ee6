#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "coopsim/agent.hpp"
#include "coopsim/game.hpp"
#include "coopsim/rng.hpp"
#include "coopsim/tuning.hpp"

namespace coopsim {

struct WorldConfig {
  double width = 13.0;
  double height = 13.0;
  double neighbor_radius = 1.0;
  double step_length = 1.0;
  GameSpec spec;
  TuningRule tuning;
  PopulationInit init;
  std::uint64_t seed = 0;
  std::size_t iterations = 100000;
  // Final ticks averaged into tail_mean; default_window(iterations) if unset.
  std::optional<std::size_t> window;
};

// Throws ValidationError naming the offending key.
void validate(const WorldConfig& config);

// 5,000 for runs of at least 50,000 iterations, else 10% of the run (min 1).
std::size_t default_window(std::size_t iterations);
std::size_t effective_window(const WorldConfig& config);

struct WorldState {
  std::vector<Agent> agents;
  std::size_t tick = 0;
  Rng rng;

  bool operator==(const WorldState&) const = default;
};

struct Matching {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<std::size_t> unmatched;  // ascending ids
};

double toroidal_distance(Vec2 a, Vec2 b, double width, double height);

// Seeds the generator from config.seed and places the population.
WorldState make_world(const WorldConfig& config);

// Each agent in id order turns left by u1 and right by u2 degrees (u1, u2
// uniform on {0..49}), then steps forward with toroidal wrap.
void move_phase(WorldState& state, const WorldConfig& config);

// Visits agents in a shuffled order; each still-eligible agent pairs with a
// uniformly chosen eligible neighbour within neighbor_radius (neighbours
// ordered by id before the draw).
Matching match_phase(WorldState& state, const WorldConfig& config);

// Plays each pair in order: simultaneous decisions, payoffs, then tuning of
// both agents. Unmatched agents are untouched.
void game_phase(WorldState& state, const Matching& matching, const WorldConfig& config);

// move, match, play; then tick += 1. Returns the matching used.
Matching step(WorldState& state, const WorldConfig& config);

// Share of agents with cp > 0.5.
double cooperator_fraction(const std::vector<Agent>& agents);

struct RunMetrics {
  std::vector<double> series;  // tick 0 (initial) through tick `iterations`
  double tail_mean = 0.0;
  double final_fraction = 0.0;
  std::size_t window = 0;
};

double tail_mean(const std::vector<double>& series, std::size_t window);

RunMetrics run(const WorldConfig& config);

}  // namespace coopsim

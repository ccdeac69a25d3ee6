#include "coopsim/world.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "coopsim/errors.hpp"
#include "coopsim/strategies.hpp"

namespace coopsim {

void validate(const WorldConfig& config) {
  if (!(config.width > 0.0)) throw ValidationError("world.width", "must be positive");
  if (!(config.height > 0.0)) throw ValidationError("world.height", "must be positive");
  if (!(config.neighbor_radius > 0.0)) throw ValidationError("world.radius", "must be positive");
  if (!(config.step_length > 0.0)) throw ValidationError("world.step_length", "must be positive");
  validate(config.spec);
  validate(config.tuning);
  validate(config.init);
  if (config.window) {
    if (*config.window == 0) throw ValidationError("run.window", "must be positive");
    if (*config.window > config.iterations)
      throw ValidationError("run.window", "must not exceed run.iterations");
  }
}

std::size_t default_window(std::size_t iterations) {
  if (iterations >= 50000) return 5000;
  return std::max<std::size_t>(1, iterations / 10);
}

std::size_t effective_window(const WorldConfig& config) {
  return config.window.value_or(default_window(config.iterations));
}

double toroidal_distance(Vec2 a, Vec2 b, double width, double height) {
  double dx = std::abs(a.x - b.x);
  double dy = std::abs(a.y - b.y);
  dx = std::min(dx, width - dx);
  dy = std::min(dy, height - dy);
  return std::sqrt(dx * dx + dy * dy);
}

WorldState make_world(const WorldConfig& config) {
  validate(config);
  WorldState state{.agents = {}, .tick = 0, .rng = Rng(config.seed)};
  state.agents = init_population(config.init, config.width, config.height, state.rng);
  return state;
}

void move_phase(WorldState& state, const WorldConfig& config) {
  constexpr double kDegToRad = std::numbers::pi / 180.0;
  for (Agent& a : state.agents) {
    const auto left = static_cast<double>(state.rng.below(50));
    const auto right = static_cast<double>(state.rng.below(50));
    a.heading = wrap_coordinate(a.heading + left - right, 360.0);
    const double theta = a.heading * kDegToRad;
    a.pos.x = wrap_coordinate(a.pos.x + config.step_length * std::cos(theta), config.width);
    a.pos.y = wrap_coordinate(a.pos.y + config.step_length * std::sin(theta), config.height);
  }
}

namespace {

double squared_torus_distance(Vec2 a, Vec2 b, double width, double height) {
  double dx = std::abs(a.x - b.x);
  double dy = std::abs(a.y - b.y);
  dx = std::min(dx, width - dx);
  dy = std::min(dy, height - dy);
  return dx * dx + dy * dy;
}

// Bins agents into cells no smaller than the neighbour radius so a radius
// query only has to inspect the 3x3 block around the query cell. Falls back
// to a full scan when the torus is under three cells across.
class NeighborGrid {
 public:
  NeighborGrid(const std::vector<Agent>& agents, const WorldConfig& config)
      : agents_(agents), config_(config) {
    cols_ = static_cast<std::size_t>(std::floor(config.width / config.neighbor_radius));
    rows_ = static_cast<std::size_t>(std::floor(config.height / config.neighbor_radius));
    if (cols_ < 3 || rows_ < 3) {
      cols_ = rows_ = 0;
      return;
    }
    head_.assign(cols_ * rows_, kNone);
    next_.assign(agents.size(), kNone);
    cell_of_.resize(agents.size());
    for (std::size_t i = agents.size(); i-- > 0;) {
      const std::size_t cell = cell_index(agents[i].pos);
      cell_of_[i] = cell;
      next_[i] = head_[cell];
      head_[cell] = i;
    }
  }

  // Eligible neighbours of `self`, ascending by id.
  void collect(std::size_t self, const std::vector<char>& eligible, std::vector<std::size_t>& out) const {
    out.clear();
    const Vec2 p = agents_[self].pos;
    const double r2 = config_.neighbor_radius * config_.neighbor_radius;
    auto consider = [&](std::size_t j) {
      if (j != self && eligible[j] &&
          squared_torus_distance(p, agents_[j].pos, config_.width, config_.height) <= r2)
        out.push_back(j);
    };
    if (cols_ == 0) {
      for (std::size_t j = 0; j < agents_.size(); ++j) consider(j);
      return;
    }
    const std::size_t cx = cell_of_[self] % cols_;
    const std::size_t cy = cell_of_[self] / cols_;
    for (std::size_t dy = 0; dy < 3; ++dy) {
      const std::size_t y = (cy + rows_ + dy - 1) % rows_;
      for (std::size_t dx = 0; dx < 3; ++dx) {
        const std::size_t x = (cx + cols_ + dx - 1) % cols_;
        for (std::size_t j = head_[y * cols_ + x]; j != kNone; j = next_[j]) consider(j);
      }
    }
    std::sort(out.begin(), out.end());
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  std::size_t cell_index(Vec2 p) const {
    auto cx = static_cast<std::size_t>(p.x / config_.width * static_cast<double>(cols_));
    auto cy = static_cast<std::size_t>(p.y / config_.height * static_cast<double>(rows_));
    cx = std::min(cx, cols_ - 1);
    cy = std::min(cy, rows_ - 1);
    return cy * cols_ + cx;
  }

  const std::vector<Agent>& agents_;
  const WorldConfig& config_;
  std::size_t cols_ = 0;
  std::size_t rows_ = 0;
  std::vector<std::size_t> head_;
  std::vector<std::size_t> next_;
  std::vector<std::size_t> cell_of_;
};

}  // namespace

Matching match_phase(WorldState& state, const WorldConfig& config) {
  const std::size_t n = state.agents.size();
  Matching m;
  if (n == 0) return m;

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  state.rng.shuffle(std::span<std::size_t>(order));

  const NeighborGrid grid(state.agents, config);
  std::vector<char> eligible(n, 1);
  std::vector<std::size_t> candidates;
  candidates.reserve(16);
  for (std::size_t self : order) {
    if (!eligible[self]) continue;
    grid.collect(self, eligible, candidates);
    if (candidates.empty()) continue;
    const std::size_t partner = candidates[state.rng.below(candidates.size())];
    eligible[self] = 0;
    eligible[partner] = 0;
    m.pairs.emplace_back(self, partner);
  }
  for (std::size_t i = 0; i < n; ++i)
    if (eligible[i]) m.unmatched.push_back(i);
  return m;
}

void game_phase(WorldState& state, const Matching& matching, const WorldConfig& config) {
  if (matching.pairs.empty()) return;
  const PayoffMatrix matrix = payoff_matrix(config.spec);
  const TuningRule& rule = config.tuning;
  auto tune = [&](Agent& a, bool cooperated, double payoff, double prev) {
    a.cp = rule.kind == TuningKind::SelfishFitness ? tune_selfish_fitness(cooperated, payoff, a.cp, rule.delta)
                                                   : tune_selfish_profit(cooperated, payoff, prev, a.cp, rule.delta);
  };
  for (const auto& [i, j] : matching.pairs) {
    Agent& a = state.agents[i];
    Agent& b = state.agents[j];
    const PairDecision d = decide_pair(config.spec, a, b, state.rng);
    const double prev_a = a.last_profit.value_or(0.0);
    const double prev_b = b.last_profit.value_or(0.0);
    const Consequences out = apply_consequences(matrix, config.spec.strategy, d.action_i, d.action_j, a, b);
    tune(a, d.action_i, out.payoff_i, prev_a);
    tune(b, d.action_j, out.payoff_j, prev_b);
  }
}

Matching step(WorldState& state, const WorldConfig& config) {
  move_phase(state, config);
  Matching m = match_phase(state, config);
  game_phase(state, m, config);
  ++state.tick;
  return m;
}

double cooperator_fraction(const std::vector<Agent>& agents) {
  if (agents.empty()) return 0.0;
  const auto k = std::count_if(agents.begin(), agents.end(),
                               [](const Agent& a) { return a.role() == Role::Cooperator; });
  return static_cast<double>(k) / static_cast<double>(agents.size());
}

double tail_mean(const std::vector<double>& series, std::size_t window) {
  if (series.empty()) return 0.0;
  const std::size_t w = std::clamp<std::size_t>(window, 1, series.size());
  double sum = 0.0;
  for (std::size_t i = series.size() - w; i < series.size(); ++i) sum += series[i];
  return sum / static_cast<double>(w);
}

RunMetrics run(const WorldConfig& config) {
  WorldState state = make_world(config);
  RunMetrics out;
  out.window = effective_window(config);
  out.series.reserve(config.iterations + 1);
  out.series.push_back(cooperator_fraction(state.agents));
  for (std::size_t t = 0; t < config.iterations; ++t) {
    step(state, config);
    out.series.push_back(cooperator_fraction(state.agents));
  }
  out.tail_mean = tail_mean(out.series, out.window);
  out.final_fraction = out.series.back();
  return out;
}

}  // namespace coopsim

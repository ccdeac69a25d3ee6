#pragma once

#include <array>
#include <span>

#include "coopsim/agent.hpp"
#include "coopsim/game.hpp"
#include "coopsim/rng.hpp"

namespace coopsim {

// Decision rules with the random draws supplied explicitly. A draw passes
// the cp gate when draw <= cp.

bool kin_selection_action(double cp, double decision);

bool direct_reciprocity_action(double cp, bool partner_last_cooperated, double decision);

// Recognition fails when recognition <= 1 - q; a failed recognition falls
// back to the cp gate. Defectors always use the cp gate.
bool indirect_reciprocity_action(Role self, Role partner, double cp, double q, double decision,
                                 double recognition);

// Rng-driven forms. Each consumes one uniform for the decision; the indirect
// reciprocity form also consumes one for recognition, whichever branch runs.
bool play_kin_selection(const Agent& agent, Rng& rng);
bool play_direct_reciprocity(const Agent& agent, std::size_t partner_id, Rng& rng);
bool play_indirect_reciprocity(const Agent& agent, const Agent& partner, double q, Rng& rng);

struct PairDecision {
  bool action_i = false;
  bool action_j = false;
  // Draws in consumption order: decision (and recognition, IR only) of the
  // lower-id agent first, then the other agent.
  std::array<double, 4> draws_used{};
  std::size_t draw_count = 0;

  std::span<const double> draws() const { return {draws_used.data(), draw_count}; }
};

// Both actions are computed from the agents as passed in; neither depends on
// the other's action this round.
PairDecision decide_pair(const GameSpec& spec, const Agent& i, const Agent& j, Rng& rng);

struct Consequences {
  double payoff_i = 0.0;
  double payoff_j = 0.0;
};

// Adds payoffs from payoff_matrix(spec) to fitness, sets last_profit and,
// under direct reciprocity, records each partner's action in memory.
Consequences apply_consequences(const GameSpec& spec, bool action_i, bool action_j, Agent& i, Agent& j);

// Same, with a precomputed matrix.
Consequences apply_consequences(const PayoffMatrix& m, Strategy strategy, bool action_i, bool action_j,
                                Agent& i, Agent& j);

}  // namespace coopsim

#include "coopsim/strategies.hpp"

#include <utility>

namespace coopsim {

bool kin_selection_action(double cp, double decision) { return decision <= cp; }

bool direct_reciprocity_action(double cp, bool partner_last_cooperated, double decision) {
  if (decision <= cp) return partner_last_cooperated;
  return false;
}

bool indirect_reciprocity_action(Role self, Role partner, double cp, double q, double decision,
                                 double recognition) {
  if (self == Role::Defector) return decision <= cp;
  if (recognition <= 1.0 - q) return decision <= cp;
  return partner == Role::Cooperator;
}

bool play_kin_selection(const Agent& agent, Rng& rng) {
  return kin_selection_action(agent.cp, rng.uniform());
}

bool play_direct_reciprocity(const Agent& agent, std::size_t partner_id, Rng& rng) {
  return direct_reciprocity_action(agent.cp, agent.remembers_cooperation(partner_id), rng.uniform());
}

bool play_indirect_reciprocity(const Agent& agent, const Agent& partner, double q, Rng& rng) {
  const double decision = rng.uniform();
  const double recognition = rng.uniform();
  return indirect_reciprocity_action(agent.role(), partner.role(), agent.cp, q, decision, recognition);
}

namespace {

bool decide_one(const GameSpec& spec, const Agent& self, const Agent& partner, Rng& rng,
                PairDecision& d) {
  const double decision = rng.uniform();
  d.draws_used[d.draw_count++] = decision;
  switch (spec.strategy) {
    case Strategy::KinSelection:
      return kin_selection_action(self.cp, decision);
    case Strategy::DirectReciprocity:
      return direct_reciprocity_action(self.cp, self.remembers_cooperation(partner.id), decision);
    case Strategy::IndirectReciprocity: {
      const double recognition = rng.uniform();
      d.draws_used[d.draw_count++] = recognition;
      return indirect_reciprocity_action(self.role(), partner.role(), self.cp, spec.x, decision, recognition);
    }
  }
  return false;
}

}  // namespace

PairDecision decide_pair(const GameSpec& spec, const Agent& i, const Agent& j, Rng& rng) {
  PairDecision d;
  if (i.id <= j.id) {
    d.action_i = decide_one(spec, i, j, rng, d);
    d.action_j = decide_one(spec, j, i, rng, d);
  } else {
    d.action_j = decide_one(spec, j, i, rng, d);
    d.action_i = decide_one(spec, i, j, rng, d);
  }
  return d;
}

Consequences apply_consequences(const GameSpec& spec, bool action_i, bool action_j, Agent& i, Agent& j) {
  return apply_consequences(payoff_matrix(spec), spec.strategy, action_i, action_j, i, j);
}

Consequences apply_consequences(const PayoffMatrix& m, Strategy strategy, bool action_i, bool action_j,
                                Agent& i, Agent& j) {
  const Consequences out{m.lookup(action_i, action_j), m.lookup(action_j, action_i)};
  i.fitness += out.payoff_i;
  j.fitness += out.payoff_j;
  i.last_profit = out.payoff_i;
  j.last_profit = out.payoff_j;
  if (strategy == Strategy::DirectReciprocity) {
    i.memory[j.id] = action_j;
    j.memory[i.id] = action_i;
  }
  return out;
}

}  // namespace coopsim

#pragma once

#include <string_view>

namespace coopsim {

enum class TuningKind { SelfishFitness, SelfishProfit };

struct TuningRule {
  TuningKind kind = TuningKind::SelfishFitness;
  double delta = 0.01;
};

std::string_view to_string(TuningKind k);  // "sf" / "sp"
TuningKind parse_tuning(std::string_view text);

// Throws std::invalid_argument unless delta lies in (0, 0.5].
void validate(const TuningRule& rule);

// cp moves by +delta when the payoff sign rewards the action taken (cooperated
// and gained, or defected and lost) and by -delta in the opposite cases. A
// zero payoff leaves cp alone. Result is clamped to [0, 1].
double tune_selfish_fitness(bool cooperated, double payoff, double cp, double delta);

// As above with the sign of (profit_now - profit_prev) in place of the payoff.
double tune_selfish_profit(bool cooperated, double profit_now, double profit_prev, double cp, double delta);

}  // namespace coopsim

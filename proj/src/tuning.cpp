#include "coopsim/tuning.hpp"
#include "coopsim/errors.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace coopsim {

std::string_view to_string(TuningKind k) {
  return k == TuningKind::SelfishFitness ? "sf" : "sp";
}

TuningKind parse_tuning(std::string_view text) {
  if (text == "sf" || text == "selfish_fitness" || text == "SelfishFitness") return TuningKind::SelfishFitness;
  if (text == "sp" || text == "selfish_profit" || text == "SelfishProfit") return TuningKind::SelfishProfit;
  throw std::invalid_argument("unknown tuning rule '" + std::string(text) + "' (expected sf or sp)");
}

void validate(const TuningRule& rule) {
  if (!(rule.delta > 0.0 && rule.delta <= 0.5)) throw ValidationError("tuning.delta", "must lie in (0, 0.5]");
}

namespace {

double nudge(bool cooperated, int sign, double cp, double delta) {
  if (sign == 0) return cp;
  const double step = (cooperated ? sign : -sign) * delta;
  return std::clamp(cp + step, 0.0, 1.0);
}

int sign_of(double v) { return (v > 0.0) - (v < 0.0); }

}  // namespace

double tune_selfish_fitness(bool cooperated, double payoff, double cp, double delta) {
  return nudge(cooperated, sign_of(payoff), cp, delta);
}

double tune_selfish_profit(bool cooperated, double profit_now, double profit_prev, double cp, double delta) {
  return nudge(cooperated, sign_of(profit_now - profit_prev), cp, delta);
}

}  // namespace coopsim

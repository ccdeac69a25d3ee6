#include "coopsim/game.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace coopsim {

std::string_view to_string(Strategy s) {
  switch (s) {
    case Strategy::KinSelection: return "KS";
    case Strategy::DirectReciprocity: return "DR";
    case Strategy::IndirectReciprocity: return "IR";
  }
  return "?";
}

Strategy parse_strategy(std::string_view text) {
  if (text == "KS" || text == "ks" || text == "kin_selection" || text == "KinSelection")
    return Strategy::KinSelection;
  if (text == "DR" || text == "dr" || text == "direct_reciprocity" || text == "DirectReciprocity")
    return Strategy::DirectReciprocity;
  if (text == "IR" || text == "ir" || text == "indirect_reciprocity" || text == "IndirectReciprocity")
    return Strategy::IndirectReciprocity;
  throw std::invalid_argument("unknown strategy '" + std::string(text) + "' (expected KS, DR or IR)");
}

std::string_view variable_name(Strategy s) {
  switch (s) {
    case Strategy::KinSelection: return "r";
    case Strategy::DirectReciprocity: return "w";
    case Strategy::IndirectReciprocity: return "q";
  }
  return "x";
}

void validate(const GameSpec& spec) {
  if (!(spec.b > 0.0)) throw ValidationError("game.b", "benefit b must be positive");
  if (!(spec.c > 0.0)) throw ValidationError("game.c", "cost c must be positive");
  if (!(spec.b > spec.c)) throw ValidationError("game.b", "benefit b must exceed cost c");
  if (!(spec.x >= 0.0 && spec.x <= 1.0))
    throw ValidationError("game.x", std::string(variable_name(spec.strategy)) + " must lie in [0, 1]");
  if (spec.strategy == Strategy::DirectReciprocity && spec.x >= 1.0)
    throw ValidationError("game.x", "direct reciprocity requires w < 1 (R = (b - c) / (1 - w))");
}

PayoffMatrix payoff_matrix(const GameSpec& spec) {
  validate(spec);
  const double b = spec.b, c = spec.c, x = spec.x;
  switch (spec.strategy) {
    case Strategy::KinSelection:
      return {.R = (b - c) * (1.0 + x), .S = b * x - c, .T = b - x * c, .P = 0.0};
    case Strategy::DirectReciprocity:
      return {.R = (b - c) / (1.0 - x), .S = -c, .T = b, .P = 0.0};
    case Strategy::IndirectReciprocity:
      // Temptation is b(1 - q): R > T must hold exactly when bq > c.
      return {.R = b - c, .S = -c * (1.0 - x), .T = b * (1.0 - x), .P = 0.0};
  }
  return {};
}

double solve_threshold(Strategy strategy, Condition condition, double b, double c) {
  if (!(b > 0.0) || !(c > 0.0)) throw std::invalid_argument("thresholds need b > 0 and c > 0");
  if (strategy == Strategy::KinSelection) return c / b;
  switch (condition) {
    case Condition::ESS: return c / b;                  // b/c = 1/x
    case Condition::RD: return 2.0 * c / (b + c);       // b/c = (2 - x)/x
    case Condition::AD: return 3.0 * c / (b + 2.0 * c); // b/c = (3 - 2x)/x
  }
  return c / b;
}

UnreachableThreshold::UnreachableThreshold(Condition condition, double solved)
    : std::domain_error([&] {
        std::ostringstream os;
        os << "unreachable " << to_string(condition) << " threshold: requires x = " << solved << " > 1";
        return os.str();
      }()),
      condition_(condition),
      solved_(solved) {}

Thresholds thresholds(Strategy strategy, double b, double c) {
  Thresholds t;
  for (Condition cond : {Condition::ESS, Condition::RD, Condition::AD}) {
    const double v = solve_threshold(strategy, cond, b, c);
    if (v > 1.0) throw UnreachableThreshold(cond, v);
    (cond == Condition::ESS ? t.ess_x : cond == Condition::RD ? t.rd_x : t.ad_x) = v;
  }
  return t;
}

std::string_view to_string(GameClass g) {
  switch (g) {
    case GameClass::PrisonersDilemma: return "PrisonersDilemma";
    case GameClass::StagHunt: return "StagHunt";
    case GameClass::UnidentifiedCooperatorsWin: return "UnidentifiedCooperatorsWin";
    case GameClass::UnidentifiedTieTS: return "UnidentifiedTieTS";
    case GameClass::UnidentifiedOnlyMutual: return "UnidentifiedOnlyMutual";
    case GameClass::Boundary: return "Boundary";
  }
  return "?";
}

std::string_view to_string(Regime r) {
  switch (r) {
    case Regime::None: return "None";
    case Regime::ESS: return "ESS";
    case Regime::RD: return "RD";
    case Regime::AD: return "AD";
  }
  return "?";
}

std::string_view to_string(Condition c) {
  switch (c) {
    case Condition::ESS: return "ESS";
    case Condition::RD: return "RD";
    case Condition::AD: return "AD";
  }
  return "?";
}

bool payoff_tie(double a, double b) {
  const double scale = std::max({1.0, std::abs(a), std::abs(b)});
  return std::abs(a - b) <= 1e-9 * scale;
}

namespace {

bool above(double a, double b) { return a > b && !payoff_tie(a, b); }

}  // namespace

GameClass classify_payoffs(const PayoffMatrix& m) {
  const auto [R, S, T, P] = m;
  if (above(T, R) && above(R, P) && above(P, S)) return GameClass::PrisonersDilemma;
  if (above(R, T) && above(T, P) && above(P, S)) return GameClass::StagHunt;
  if (above(R, T) && above(T, S) && above(S, P)) return GameClass::UnidentifiedCooperatorsWin;
  if (above(R, T) && payoff_tie(T, S) && above(S, P)) return GameClass::UnidentifiedTieTS;
  if (above(R, T) && payoff_tie(T, P) && payoff_tie(P, S)) return GameClass::UnidentifiedOnlyMutual;
  return GameClass::Boundary;
}

GameClass classify_game(const GameSpec& spec) { return classify_payoffs(payoff_matrix(spec)); }

Regime regime(const GameSpec& spec) {
  validate(spec);
  const auto& [s, b, c, x] = spec;
  if (x > solve_threshold(s, Condition::AD, b, c)) return Regime::AD;
  if (x > solve_threshold(s, Condition::RD, b, c)) return Regime::RD;
  if (x > solve_threshold(s, Condition::ESS, b, c)) return Regime::ESS;
  return Regime::None;
}

}  // namespace coopsim

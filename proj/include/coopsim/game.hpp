#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "coopsim/errors.hpp"

namespace coopsim {

enum class Strategy { KinSelection, DirectReciprocity, IndirectReciprocity };

std::string_view to_string(Strategy s);
// Accepts the short codes (KS, DR, IR) and the long snake/camel names.
Strategy parse_strategy(std::string_view text);

// Name of the strategy's probability variable: r, w or q.
std::string_view variable_name(Strategy s);

struct GameSpec {
  Strategy strategy = Strategy::KinSelection;
  double b = 4.0;
  double c = 2.0;
  double x = 0.0;  // r (KS), w (DR) or q (IR)
};

// Throws ValidationError naming game.b, game.c or game.x.
void validate(const GameSpec& spec);

// Payoffs to the focal player: R (C,C), S (C,D), T (D,C), P (D,D).
struct PayoffMatrix {
  double R = 0.0;
  double S = 0.0;
  double T = 0.0;
  double P = 0.0;

  double lookup(bool own_cooperates, bool partner_cooperates) const {
    if (own_cooperates) return partner_cooperates ? R : S;
    return partner_cooperates ? T : P;
  }
};

PayoffMatrix payoff_matrix(const GameSpec& spec);

enum class Condition { ESS, RD, AD };

// Value of x at which the condition's inequality becomes an equality.
// May exceed 1 when the condition is unreachable; requires b > 0, c > 0.
double solve_threshold(Strategy strategy, Condition condition, double b, double c);

class UnreachableThreshold : public std::domain_error {
 public:
  UnreachableThreshold(Condition condition, double solved);
  Condition condition() const { return condition_; }
  double solved() const { return solved_; }

 private:
  Condition condition_;
  double solved_;
};

struct Thresholds {
  double ess_x = 0.0;
  double rd_x = 0.0;
  double ad_x = 0.0;
};

// Closed-form thresholds. Throws UnreachableThreshold for the first
// condition whose solution lies above 1.
Thresholds thresholds(Strategy strategy, double b, double c);

enum class GameClass {
  PrisonersDilemma,
  StagHunt,
  UnidentifiedCooperatorsWin,
  UnidentifiedTieTS,
  UnidentifiedOnlyMutual,
  Boundary,
};

std::string_view to_string(GameClass g);

// |a - b| <= 1e-9 * max(1, |a|, |b|)
bool payoff_tie(double a, double b);

GameClass classify_payoffs(const PayoffMatrix& m);
GameClass classify_game(const GameSpec& spec);

enum class Regime { None, ESS, RD, AD };

std::string_view to_string(Regime r);
std::string_view to_string(Condition c);

// Strongest condition satisfied at spec.x.
Regime regime(const GameSpec& spec);

}  // namespace coopsim

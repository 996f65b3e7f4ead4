#pragma once

namespace roamgame {

/// Congestion model for the demand factor g(D, B).
enum class Congestion { None, Linear, MM1 };

/// Which utility functions to use: the closed-form friendly simplified game
/// (no costs, no congestion) or the full model.
enum class Mode { Simplified, Full };

/// All exogenous parameters of the two-provider pricing game.
/// Provider 1 is the incumbent, provider 2 the entrant.
struct GameParams {
  double delta = 1.0;   // price sensitivity, > 0
  double d_max = 1.0;   // maximum total demand, > 0
  double r = 0.0;       // regulated roaming charge per unit demand, >= 0
  double b1 = 10.0;     // incumbent demand capacity, > 0
  double b2 = 1.0;      // entrant demand capacity, 0 < b2 <= b1
  double gamma = 0.1;   // congestion headroom, 0 < gamma < b2
  double cd1 = 0.0;     // per-unit-demand op-ex, incumbent, >= 0
  double cd2 = 0.0;     // per-unit-demand op-ex, entrant, >= 0
  double cb1 = 0.0;     // per-unit-infrastructure op-ex, incumbent, >= 0
  double cb2 = 0.0;     // per-unit-infrastructure op-ex, entrant, >= 0
  Congestion congestion = Congestion::None;

  /// Fraction of the entrant's demand that roams onto the incumbent's
  /// network: 1 - b2/b1, always in [0, 1).
  double phi() const { return 1.0 - b2 / b1; }

  /// Throws std::invalid_argument on any violated constraint.
  void validate() const;
};

/// The two providers' access prices (the play-actions).
struct PricePair {
  double p1 = 0.0;
  double p2 = 0.0;
  void validate() const;  // finite and nonnegative
};

/// Realized demands solving the implicit demand equations.
struct DemandPair {
  double d1 = 0.0;
  double d2 = 0.0;
};

/// Provider net utilities.
struct UtilityPair {
  double u1 = 0.0;
  double u2 = 0.0;
};

/// Demand-suppression factor g(d, b) in [0, 1], nonincreasing in d,
/// vanishing at d = b - gamma. Throws std::domain_error unless b > gamma > 0.
double congestion_factor(double d, double b, double gamma, Congestion model);

/// Average access price (p1 + (p2 + phi*r)) / 2.
double average_price(const PricePair& prices, const GameParams& params);

/// Solves the coupled implicit demand equations. The entrant equation
/// involves only d2 and is solved first; the incumbent equation is then a
/// scalar fixed point in d1. Without congestion both are explicit.
DemandPair solve_demand(const PricePair& prices, const GameParams& params);

/// Full-model utilities (with op-ex and congestion via solve_demand).
UtilityPair utilities_full(const PricePair& prices, const GameParams& params);

/// Simplified-game utilities (costs and congestion dropped).
UtilityPair utilities_simplified(const PricePair& prices,
                                 const GameParams& params);

/// Dispatch on mode.
UtilityPair utilities(const PricePair& prices, const GameParams& params,
                      Mode mode);

}  // namespace roamgame

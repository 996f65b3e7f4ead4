#pragma once

#include <string>

#include "roamgame/model.hpp"

namespace roamgame {

struct FairnessResult {
  double r_star = 0.0;
  double gap_at_root = 0.0;
  std::string method;  // "root-find" or "closed-form"
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
};

/// Equilibrium fairness gap (1 - phi) * U1*(r) - U2*(r). Negative values
/// favor the entrant, positive the incumbent.
double fairness_gap(double r, const GameParams& params, Mode mode);

/// r* = 2 (2 - phi) / (delta (4 - 3 phi)^2), the roaming charge at which net
/// revenue is proportional to deployed infrastructure in the simplified game.
double closed_form_rstar(const GameParams& params);

/// Root-find of fairness_gap over [0, 2/(delta*phi) - eps] by bisection to
/// bracket width 1e-9. Requires phi > 0; throws std::runtime_error when the
/// gap has the same sign at both bracket ends.
FairnessResult find_rstar(const GameParams& params, Mode mode);

}  // namespace roamgame

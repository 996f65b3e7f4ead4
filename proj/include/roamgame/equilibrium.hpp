#pragma once

#include <utility>

#include "roamgame/model.hpp"

namespace roamgame {

struct BestResponseResult {
  double price = 0.0;       // argmax over [bracket_lo, bracket_hi]
  double utility = 0.0;     // utility attained at price
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
  int iterations = 0;
};

struct EquilibriumResult {
  PricePair prices;
  UtilityPair utilities;
  bool converged = false;
  int iterations = 0;
  double last_change = 0.0;  // sup-norm price change at termination
  bool interior = false;     // delta * r * phi < 2
  bool soc_ok = false;       // both own-price second derivatives negative
};

/// Which price is updated first in the Gauss-Seidel best-response sweep.
enum class UpdateOrder { P1First, P2First };

/// Upper bound of the feasible price box: max(0, 2/delta - phi*r).
double price_cap(const GameParams& params);

/// Maximizes the given provider's own-price utility against a fixed opponent
/// price, by golden-section search over [0, price_cap] refined to bracket
/// width 1e-10 and compared against both endpoints. Ties break toward the
/// smaller price.
BestResponseResult best_response(int provider, double other_price,
                                 const GameParams& params, Mode mode);

/// Symmetric interior equilibrium of the simplified game,
/// p* = (1/(4 delta)) (-2 delta r phi + 1 + sqrt(4 delta r phi + 1)).
/// Throws std::domain_error when delta * r * phi >= 2.
PricePair closed_form_ne(const GameParams& params);

/// Alternating best-response iteration until the sup-norm price change drops
/// below 1e-8 (or 10,000 sweeps). Non-convergence is reported through the
/// result, not thrown.
EquilibriumResult solve_ne(const GameParams& params, Mode mode, PricePair init,
                           UpdateOrder order = UpdateOrder::P1First);

/// Same, starting from the midpoint (price_cap/2, price_cap/2).
EquilibriumResult solve_ne(const GameParams& params, Mode mode);

/// Own-price utility gradients (dU1/dp1, dU2/dp2) by central finite
/// differences with step 1e-6 * max(1, p).
std::pair<double, double> fonc_residual(const PricePair& prices,
                                        const GameParams& params, Mode mode);

}  // namespace roamgame

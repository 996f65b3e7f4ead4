#include "roamgame/fairness.hpp"

#include <cmath>
#include <stdexcept>

#include "roamgame/equilibrium.hpp"

namespace roamgame {

double fairness_gap(double r, const GameParams& params, Mode mode) {
  GameParams at_r = params;
  at_r.r = r;
  if (mode == Mode::Simplified &&
      at_r.delta * at_r.r * at_r.phi() >= 2.0)
    throw std::domain_error(
        "fairness_gap: delta * r * phi >= 2 leaves no feasible prices");
  const EquilibriumResult ne = solve_ne(at_r, mode);
  return (1.0 - at_r.phi()) * ne.utilities.u1 - ne.utilities.u2;
}

double closed_form_rstar(const GameParams& params) {
  params.validate();
  const double phi = params.phi();
  const double q = 4.0 - 3.0 * phi;
  return 2.0 * (2.0 - phi) / (params.delta * q * q);
}

FairnessResult find_rstar(const GameParams& params, Mode mode) {
  params.validate();
  const double phi = params.phi();
  if (!(phi > 0.0))
    throw std::domain_error(
        "find_rstar: fairness gap is identically zero when b1 == b2");

  // Right endpoint stops short of the all-zero-price boundary at 2/(delta*phi).
  const double eps = 1e-6 / (params.delta * phi);
  double lo = 0.0;
  double hi = 2.0 / (params.delta * phi) - eps;
  double gap_lo = fairness_gap(lo, params, mode);
  double gap_hi = fairness_gap(hi, params, mode);
  if ((gap_lo < 0.0) == (gap_hi < 0.0))
    throw std::runtime_error(
        "find_rstar: fairness gap has the same sign at both bracket ends");

  FairnessResult result;
  result.method = "root-find";
  result.bracket_lo = lo;
  result.bracket_hi = hi;
  while (hi - lo > 1e-9) {
    const double mid = 0.5 * (lo + hi);
    const double gap_mid = fairness_gap(mid, params, mode);
    if ((gap_mid < 0.0) == (gap_lo < 0.0)) {
      lo = mid;
      gap_lo = gap_mid;
    } else {
      hi = mid;
    }
  }
  result.r_star = 0.5 * (lo + hi);
  result.gap_at_root = fairness_gap(result.r_star, params, mode);
  return result;
}

}  // namespace roamgame

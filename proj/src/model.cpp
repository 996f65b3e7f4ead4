#include "roamgame/model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace roamgame {

namespace {

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

void GameParams::validate() const {
  require(std::isfinite(delta) && delta > 0.0, "delta must be finite and > 0");
  require(std::isfinite(d_max) && d_max > 0.0, "d_max must be finite and > 0");
  require(std::isfinite(r) && r >= 0.0, "r must be finite and >= 0");
  require(std::isfinite(b1) && b1 > 0.0, "b1 must be finite and > 0");
  require(std::isfinite(b2) && b2 > 0.0 && b2 <= b1,
          "b2 must satisfy 0 < b2 <= b1");
  require(std::isfinite(gamma) && gamma > 0.0 && gamma < b2,
          "gamma must satisfy 0 < gamma < b2");
  require(std::isfinite(cd1) && cd1 >= 0.0, "cd1 must be >= 0");
  require(std::isfinite(cd2) && cd2 >= 0.0, "cd2 must be >= 0");
  require(std::isfinite(cb1) && cb1 >= 0.0, "cb1 must be >= 0");
  require(std::isfinite(cb2) && cb2 >= 0.0, "cb2 must be >= 0");
}

void PricePair::validate() const {
  require(std::isfinite(p1) && p1 >= 0.0, "p1 must be finite and >= 0");
  require(std::isfinite(p2) && p2 >= 0.0, "p2 must be finite and >= 0");
}

double congestion_factor(double d, double b, double gamma, Congestion model) {
  if (model == Congestion::None) return 1.0;
  if (!(b > gamma) || !(gamma > 0.0))
    throw std::domain_error("congestion_factor requires b > gamma > 0");
  if (d >= b - gamma) return 0.0;
  if (model == Congestion::Linear)
    return std::max(0.0, 1.0 - d / (b - gamma));
  // MM1: normalized so g(0, b) = 1 and g(b - gamma, b) = 0.
  return std::max(0.0, (1.0 - gamma / (b - d)) / (1.0 - gamma / b));
}

double average_price(const PricePair& prices, const GameParams& params) {
  return (prices.p1 + prices.p2 + params.phi() * params.r) / 2.0;
}

namespace {

// Uncoupled demand scales: a_k = D_max * (1 - delta*pbar)_+ * share_k.
// When all prices (and r) are zero the competition shares are taken as 1/2.
struct DemandScales {
  double a1;
  double a2;
};

DemandScales demand_scales(const PricePair& prices, const GameParams& params) {
  const double phi = params.phi();
  const double s = prices.p1 + prices.p2 + phi * params.r;
  double share1 = 0.5;
  double share2 = 0.5;
  if (s > 0.0) {
    share1 = (prices.p2 + phi * params.r) / s;
    share2 = prices.p1 / s;
  }
  const double base =
      params.d_max * std::max(0.0, 1.0 - params.delta * s / 2.0);
  return {base * share1, base * share2};
}

// Unique root of x = a * g(m*x + c, b). The residual x - a*g(m*x + c, b)
// is nondecreasing, negative at 0 and nonnegative at min(a, (b-gamma-c)/m),
// so bracketed bisection always converges.
double solve_scalar_fixed_point(double a, double m, double c, double b,
                                double gamma, Congestion model) {
  if (a <= 0.0) return 0.0;
  if (model == Congestion::None) return a;
  double hi = a;
  if (m > 0.0) hi = std::min(hi, std::max(0.0, (b - gamma - c) / m));
  if (hi <= 0.0) return 0.0;
  auto residual = [&](double x) {
    return x - a * congestion_factor(m * x + c, b, gamma, model);
  };
  double lo = 0.0;
  const double tol = 1e-12 * std::max(1.0, hi);
  int iterations = 0;
  while (hi - lo > tol) {
    if (++iterations > 200)
      throw std::runtime_error(
          "demand fixed point: bisection exceeded iteration cap");
    const double mid = 0.5 * (lo + hi);
    if (residual(mid) < 0.0)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

DemandPair solve_demand(const PricePair& prices, const GameParams& params) {
  const double phi = params.phi();
  const DemandScales scales = demand_scales(prices, params);
  // The entrant equation depends only on d2; the incumbent equation is then
  // a scalar fixed point in d1 given d2.
  const double d2 = solve_scalar_fixed_point(scales.a2, 1.0 - phi, 0.0,
                                             params.b2, params.gamma,
                                             params.congestion);
  const double d1 = solve_scalar_fixed_point(scales.a1, 1.0, phi * d2,
                                             params.b1, params.gamma,
                                             params.congestion);
  return {d1, d2};
}

UtilityPair utilities_full(const PricePair& prices, const GameParams& params) {
  const DemandPair d = solve_demand(prices, params);
  const double phi = params.phi();
  const double u1 = (prices.p1 - params.cd1) * d.d1 +
                    (params.r - params.cd1) * phi * d.d2 -
                    params.cb1 * params.b1;
  const double u2 =
      (prices.p2 - (1.0 - phi) * params.cd2) * d.d2 - params.cb2 * params.b2;
  return {u1, u2};
}

UtilityPair utilities_simplified(const PricePair& prices,
                                 const GameParams& params) {
  const double phi = params.phi();
  const double s = prices.p1 + prices.p2 + phi * params.r;
  if (s <= 0.0) return {0.0, 0.0};
  // Total-demand factor clamped at zero, matching the demand model.
  const double t = std::max(0.0, 1.0 - params.delta * s / 2.0);
  const double u1 =
      params.d_max * (prices.p1 * t * (prices.p2 + phi * params.r) / s +
                      params.r * phi * t * prices.p1 / s);
  const double u2 = params.d_max * (prices.p2 * t * prices.p1 / s);
  return {u1, u2};
}

UtilityPair utilities(const PricePair& prices, const GameParams& params,
                      Mode mode) {
  return mode == Mode::Simplified ? utilities_simplified(prices, params)
                                  : utilities_full(prices, params);
}

}  // namespace roamgame

#include "roamgame/equilibrium.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace roamgame {

namespace {

double own_utility(int provider, double own, double other,
                   const GameParams& params, Mode mode) {
  const PricePair prices =
      provider == 1 ? PricePair{own, other} : PricePair{other, own};
  const UtilityPair u = utilities(prices, params, mode);
  return provider == 1 ? u.u1 : u.u2;
}

void check_provider(int provider) {
  if (provider != 1 && provider != 2)
    throw std::invalid_argument("provider must be 1 or 2");
}

}  // namespace

double price_cap(const GameParams& params) {
  return std::max(0.0, 2.0 / params.delta - params.phi() * params.r);
}

BestResponseResult best_response(int provider, double other_price,
                                 const GameParams& params, Mode mode) {
  check_provider(provider);
  const double lo = 0.0;
  const double hi = price_cap(params);
  auto f = [&](double x) {
    return own_utility(provider, x, other_price, params, mode);
  };
  if (hi <= lo) return {0.0, f(0.0), lo, hi, 0};

  // Golden-section search. Ties keep the left interval, which also handles
  // the zero-utility plateau where the total-demand factor clamps to 0.
  constexpr double kInvGolden = 0.6180339887498949;
  double a = lo;
  double b = hi;
  double x1 = b - kInvGolden * (b - a);
  double x2 = a + kInvGolden * (b - a);
  double f1 = f(x1);
  double f2 = f(x2);
  int iterations = 0;
  while (b - a > 1e-10) {
    if (f1 >= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kInvGolden * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kInvGolden * (b - a);
      f2 = f(x2);
    }
    ++iterations;
  }
  double x = 0.5 * (a + b);
  // Flat-top noise limits the golden-section argmax to ~sqrt(eps); a Newton
  // polish on finite-difference derivatives recovers the extra digits the
  // equilibrium iteration needs to settle.
  {
    const double h = 1e-5 * std::max(1.0, x);
    if (x - h > lo && x + h < hi) {
      for (int k = 0; k < 2; ++k) {
        const double fp = f(x + h);
        const double f0 = f(x);
        const double fm = f(x - h);
        const double d1 = (fp - fm) / (2.0 * h);
        const double d2 = (fp - 2.0 * f0 + fm) / (h * h);
        if (!(d2 < 0.0)) break;
        const double xn = std::clamp(x - d1 / d2, lo, hi);
        if (std::abs(xn - x) > 1e-3 * std::max(1.0, x)) break;
        x = xn;
      }
    }
  }
  const double fx = f(x);

  // Compare against both bracket endpoints, ties toward the smaller price.
  double best_price = lo;
  double best_utility = f(lo);
  if (fx > best_utility) {
    best_price = x;
    best_utility = fx;
  }
  const double fhi = f(hi);
  if (fhi > best_utility) {
    best_price = hi;
    best_utility = fhi;
  }
  return {best_price, best_utility, lo, hi, iterations};
}

PricePair closed_form_ne(const GameParams& params) {
  params.validate();
  const double a = params.delta * params.r * params.phi();
  if (a >= 2.0)
    throw std::domain_error(
        "no interior equilibrium: delta * r * phi >= 2");
  const double p =
      (1.0 / (4.0 * params.delta)) * (-2.0 * a + 1.0 + std::sqrt(4.0 * a + 1.0));
  return {p, p};
}

namespace {

// Central second difference of the provider's own-price utility.
double own_second_derivative(int provider, double own, double other,
                             const GameParams& params, Mode mode) {
  const double h = 1e-5 * std::max(1.0, own);
  const double fp = own_utility(provider, own + h, other, params, mode);
  const double f0 = own_utility(provider, own, other, params, mode);
  const double fm = own_utility(provider, own - h, other, params, mode);
  return (fp - 2.0 * f0 + fm) / (h * h);
}

}  // namespace

EquilibriumResult solve_ne(const GameParams& params, Mode mode, PricePair init,
                           UpdateOrder order) {
  params.validate();
  const double cap = price_cap(params);
  double p1 = std::clamp(init.p1, 0.0, cap);
  double p2 = std::clamp(init.p2, 0.0, cap);

  EquilibriumResult result;
  constexpr int kMaxSweeps = 10000;
  constexpr double kTol = 1e-8;
  // Once below the convergence tolerance, keep sweeping while the change
  // still shrinks, down to the best-response resolution floor.
  constexpr double kFloor = 1e-10;
  double prev_change = std::numeric_limits<double>::infinity();
  for (int it = 1; it <= kMaxSweeps; ++it) {
    double p1n = p1;
    double p2n = p2;
    if (order == UpdateOrder::P1First) {
      p1n = best_response(1, p2, params, mode).price;
      p2n = best_response(2, p1n, params, mode).price;
    } else {
      p2n = best_response(2, p1, params, mode).price;
      p1n = best_response(1, p2n, params, mode).price;
    }
    result.last_change = std::max(std::abs(p1n - p1), std::abs(p2n - p2));
    result.iterations = it;
    p1 = p1n;
    p2 = p2n;
    if (result.last_change < kTol) result.converged = true;
    if (result.converged &&
        (result.last_change < kFloor || result.last_change >= prev_change))
      break;
    prev_change = result.last_change;
  }

  result.prices = {p1, p2};
  result.utilities = utilities(result.prices, params, mode);
  result.interior = params.delta * params.r * params.phi() < 2.0;
  result.soc_ok = own_second_derivative(1, p1, p2, params, mode) < 0.0 &&
                  own_second_derivative(2, p2, p1, params, mode) < 0.0;
  return result;
}

EquilibriumResult solve_ne(const GameParams& params, Mode mode) {
  const double mid = price_cap(params) / 2.0;
  return solve_ne(params, mode, {mid, mid});
}

std::pair<double, double> fonc_residual(const PricePair& prices,
                                        const GameParams& params, Mode mode) {
  auto central = [&](int provider, double own, double other) {
    const double h = 1e-6 * std::max(1.0, own);
    return (own_utility(provider, own + h, other, params, mode) -
            own_utility(provider, own - h, other, params, mode)) /
           (2.0 * h);
  };
  return {central(1, prices.p1, prices.p2), central(2, prices.p2, prices.p1)};
}

}  // namespace roamgame

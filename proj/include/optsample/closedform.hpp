#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>

#include "core.hpp"

namespace optsample::closedform {

struct TwoPointSolution {
  double x1 = 0.0;
  double x2 = 0.0;
  double value = 0.0;  // sup over the pair of min over [a,b] of V
};

/// g(L) = (-e^{-L} + sqrt(e^{-2L} + 8 e^{-L})) / 2, the optimal sup-min of V for two interior points.
inline double interior_value(double length) {
  const double e = std::exp(-length);
  return 0.5 * (-e + std::sqrt(e * e + 8.0 * e));
}

/// Best sup-min of V with the domain strictly between the two points: 2e^{-L}/(1+e^{-L}).
inline double straddle_value(double length) {
  const double e = std::exp(-length);
  return 2.0 * e / (1.0 + e);
}

/// Best sup-min of V with both points on one side of the domain: e^{-2L}.
inline double one_side_value(double length) { return std::exp(-2.0 * length); }

/**
 * Optimal two sampling points on [a, b] for the exponential kernel e^{-|x-y|} under the
 * sup-norm of the power function: x1 = a - ln(g)/2, x2 = b + ln(g)/2, with g = interior_value(b - a).
 */
inline TwoPointSolution exp_two_point_optimal(double a, double b) {
  if (!(a < b)) throw InvalidArgument("exp_two_point_optimal: need a < b");
  const double g = interior_value(b - a);
  const double half_log = 0.5 * std::log(g);
  return {a - half_log, b + half_log, g};
}

/// V(x, x1, x2) = 1 - phi_X(x)^2 for the exponential kernel and X = {x1, x2}.
inline double v_function(double x, double x1, double x2) {
  if (x1 == x2) throw InvalidArgument("v_function: x1 and x2 must differ");
  const double d1 = std::abs(x1 - x);
  const double d2 = std::abs(x2 - x);
  const double r = std::abs(x1 - x2);
  return (std::exp(-2.0 * d1) + std::exp(-2.0 * d2) - 2.0 * std::exp(-(d1 + d2 + r))) / (1.0 - std::exp(-2.0 * r));
}

/// Where the brute-force sweep may place the two points relative to [a, b].
enum class PairRegion {
  any,       // [a - L, b + L]
  one_side,  // both at or beyond b
  straddle,  // x1 <= a and x2 >= b
  inside,    // both in [a, b]
};

/**
 * Exhaustive sup over (x1, x2) of min over x in [a, b] of V on a lattice of step L/grid.
 * Pairs range over [a - L, b + L] (filtered by `region`), x over the grid+1 lattice points of [a, b].
 */
inline TwoPointSolution supmin_v_bruteforce(double a, double b, int grid, PairRegion region = PairRegion::any) {
  if (!(a < b)) throw InvalidArgument("supmin_v_bruteforce: need a < b");
  if (grid < 50) throw InvalidArgument("supmin_v_bruteforce: grid must be at least 50");
  const double length = b - a;
  const double h = length / grid;
  const int pair_count = 3 * grid + 1;
  const auto pair_at = [&](int i) { return i == grid ? a : i == 2 * grid ? b : a - length + i * h; };
  const auto allowed = [&](int i, int j) {
    switch (region) {
      case PairRegion::any: return true;
      case PairRegion::one_side: return i >= 2 * grid;
      case PairRegion::straddle: return i <= grid && j >= 2 * grid;
      case PairRegion::inside: return i >= grid && j <= 2 * grid;
    }
    return false;
  };

  TwoPointSolution best{0.0, 0.0, -std::numeric_limits<double>::infinity()};
  for (int i = 0; i < pair_count; ++i) {
    for (int j = i + 1; j < pair_count; ++j) {
      if (!allowed(i, j)) continue;
      const double x1 = pair_at(i), x2 = pair_at(j);
      double worst = std::numeric_limits<double>::infinity();
      for (int k = 0; k <= grid && worst > best.value; ++k) {
        const double x = k == grid ? b : a + k * h;
        worst = std::min(worst, v_function(x, x1, x2));
      }
      if (worst > best.value) best = {x1, x2, worst};
    }
  }
  return best;
}

/// Chebyshev centre of a box: the optimal single point for any radial kernel under the sup-norm.
inline Eigen::VectorXd radial_one_point_optimal(const BoxDomain& domain) { return domain.center(); }

}  // namespace optsample::closedform
